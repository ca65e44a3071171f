"""
Round-robin colorings and the forbidden rainbow size
====================================================

The round-robin coloring of K_{l+1} (l odd) splits the edges into l perfect
matchings, so each vertex sees every color exactly once. This walk-through
builds one, checks that balance, and then looks for rainbow cliques.
"""

# %%
import numpy as np

import rainbowcert as rc
from rainbowcert.sidon import forbidden_rainbow_size

ell = 15
c = rc.round_robin(ell)
print(c.n, "vertices,", c.ell, "colors")

# %%
# Every (vertex, color) count is 1.
prof = rc.balance_profile(c)
print(prof.per_vertex_per_color[:4])
print("completely balanced:", prof.is_completely_balanced, " d =", prof.d)

# %%
# The color of edge {i, j} is i + j mod l; the last vertex joins i with color 2i.
print(c.matrix[:6, :6])
print("color of 0-15:", rc.get_color(c, 0, 15), " color of 7-8:", rc.get_color(c, 7, 8))

# %%
# How large can a rainbow clique get? Enumerate by size until none remain.
for size in range(2, c.n + 1):
    sets = rc.enumerate_rainbow_sets(c, size)
    print(f"rainbow sets of size {size}: {len(sets)}")
    if not sets:
        break

# %%
# The Sidon argument caps the size strictly below floor(sqrt(l) + 7/2).
m = forbidden_rainbow_size(ell)
rep = rc.find_rainbow_clique(c, m)
print(f"rainbow K_{m}:", rep.outcome, f"({rep.reason or 'search'})")

# %%
# A larger instance needs a real search: 28 colors are available for the
# 28 edges of a K_8 in round_robin(29), so counting alone settles nothing.
rep = rc.find_rainbow_clique(rc.round_robin(29), 8)
print("K_8 in round_robin(29):", rep.outcome, "after", rep.nodes_explored, "nodes")

# %%
# The same data as a certificate record.
from rainbowcert.certify import certify_lemma7

rec = certify_lemma7(ell)
print(rec.status, rec.verdicts)
print(np.unique(prof.per_vertex_per_color))
