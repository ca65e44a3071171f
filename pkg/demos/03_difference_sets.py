"""
Perfect difference sets
=======================

Color edge {a, b} of K_{q^2-q+1} by the unordered difference +-(a - b).
A rainbow K_q is then exactly a perfect difference set of size q, so
whether such a set exists decides whether this balanced coloring avoids
rainbow K_q.
"""

# %%
import rainbowcert as rc

c = rc.difference_coloring(4)
print(c.n, "vertices,", c.ell, "colors, d =", rc.balance_profile(c).d)
print(all(s.is_spanning_2_regular for s in rc.color_class_shapes(c)))

# %%
rep = rc.find_rainbow_clique(c, 4)
print("rainbow K_4:", rep.witness)
ds = rc.is_perfect_difference_set(c.n, rep.witness)
print("perfect:", ds.is_perfect, ds.diff_multiplicity[1:])

# %%
# Singer sets exist whenever q - 1 is a prime.
for p in (2, 3, 5, 7):
    s = rc.singer(p)
    print(f"p={p}: {s.elements} in Z_{s.modulus}")

# %%
# For q = 7 there is none, so difference_coloring(7) has no rainbow K_7.
res = rc.pds_search(7)
print("q=7:", res.outcome, "after", res.nodes_explored, "nodes")
print("rainbow K_7 in K_43:", rc.find_rainbow_clique(rc.difference_coloring(7), 7).outcome)

# %%
# The divisibility screen gives a conclusion for any q.
for q in (4, 7, 13, 70):
    r = rc.ppc_divisibility_screen(q)
    print(q, r.status, r.divisor_hits, r.verdict)
