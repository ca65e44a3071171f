"""
From rainbow sets to Sidon sets, and pictures
=============================================

In round_robin(l) a rainbow set maps to a 2-Sidon set (when it contains
the last vertex l, which is dropped) or a weak 2-Sidon set in Z_l. The
second half writes SVG figures of the constructions.
"""

# %%
from pathlib import Path

import rainbowcert as rc
from rainbowcert.render import render_svg
from rainbowcert.sidon import expected_predicate_holds

c = rc.round_robin(11)
S = rc.find_rainbow_clique(c, 5).witness
prof, tag = rc.rainbow_to_sidon(c, S)
print("rainbow set", S, "->", tag)
print("r_A  =", prof.r_table)
print("r'_A =", prof.r_prime_table)
print(rc.check_size_bounds(prof))

# %%
# Every rainbow set of round_robin(15) passes.
c15 = rc.round_robin(15)
bad = 0
for size in range(2, 6):
    for S in rc.enumerate_rainbow_sets(c15, size):
        prof, tag = rc.rainbow_to_sidon(c15, S)
        bad += not expected_predicate_holds(prof, tag)
print("failures:", bad)

# %%
out = Path(__file__).with_name("figures")
out.mkdir(exist_ok=True)
(out / "round_robin_15.svg").write_text(render_svg(c15))
(out / "difference_4.svg").write_text(render_svg(rc.difference_coloring(4)))
(out / "lex_square_3.svg").write_text(
    render_svg(rc.lex_power(rc.round_robin(3), 2), kind="product"))
print(sorted(p.name for p in out.iterdir()))
