"""
Lexicographic powers
====================

Blowing each vertex of a coloring up into a copy of another coloring with
the same palette keeps complete balance and never creates a rainbow clique
that neither factor had. Repeating this gives balanced colorings of
K_{(l+1)^k} for every k.
"""

# %%
import rainbowcert as rc
from rainbowcert import LexIndexing

base = rc.round_robin(7)
sq = rc.lex_power(base, 2)
print(sq.n, "vertices,", sq.ell, "colors")

# %%
# Inside a block the inner coloring applies; between blocks the outer one does.
idx = LexIndexing(base.n, base.n)
u, v, w = idx.vertex(0, 3), idx.vertex(0, 5), idx.vertex(4, 1)
print("same block:", rc.get_color(sq, u, v), "=", rc.get_color(base, 3, 5))
print("across:    ", rc.get_color(sq, u, w), "=", rc.get_color(base, 0, 4))

# %%
# Per-vertex count: 1 inside the block plus 1 per other block, 1 + 8 = 9.
prof = rc.balance_profile(sq)
print(prof.per_vertex_per_color.min(), prof.per_vertex_per_color.max())

# %%
# Rainbow sizes do not grow: the largest rainbow set is still of size 4.
print("K_4:", rc.find_rainbow_clique(sq, 4).outcome)
print("K_5:", rc.find_rainbow_clique(sq, 5).outcome)

# %%
# Powers grow fast; the cube of round_robin(15) already has 4096 vertices.
for k in range(1, 4):
    p = rc.lex_power(rc.round_robin(15), k)
    print(k, p.n, rc.balance_profile(p).d)
