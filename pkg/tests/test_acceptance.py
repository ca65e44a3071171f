"""Acceptance suite: one test per criterion, each with its runtime bound pinned.

Run ``pytest tests/test_acceptance.py`` and read the "acceptance criteria"
section at the end of the report for one PASS/FAIL line per criterion.
"""
import time
from itertools import combinations
from math import comb

import numpy as np
import pytest

from oracles import color_lookup, naive_has_rainbow, random_dense_coloring
from rainbowcert import (
    balance_profile,
    color_class_shapes,
    difference_coloring,
    enumerate_rainbow_sets,
    find_rainbow_clique,
    format_cbc,
    is_perfect_difference_set,
    is_rainbow_set,
    lex_power,
    parse_cbc,
    pds_search,
    rainbow_to_sidon,
    round_robin,
    singer,
)
from rainbowcert.certify import certify_lemma7, certify_thm2, certify_thm5
from rainbowcert.search import _Kernel
from rainbowcert.sidon import check_size_bounds, expected_predicate_holds, forbidden_rainbow_size

# runtime bounds in seconds
BOUND_1 = 1.0
BOUND_2 = 300.0
BOUND_3 = 60.0
BOUND_4 = 120.0
BOUND_5 = 1.0
BOUND_6 = 600.0
BOUND_7 = 60.0

# floor(sqrt(ell) + 7/2), worked by hand
FORBIDDEN_7 = {7: 6, 11: 6, 15: 7}

# criterion 8 sample
SEED_8 = 20240601
SAMPLES_8 = 100


class Clock:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0


def _is_rainbow(table, S):
    cols = [table[a, b] for a, b in combinations(S, 2)]
    return len(set(cols)) == len(cols)


@pytest.mark.criterion(1, "round_robin(15): balanced, perfect matchings, no rainbow K_7 "
                          "among all 11440 7-subsets (< 1 s)")
def test_criterion_1():
    with Clock() as clk:
        c = round_robin(15)
        prof = balance_profile(c)
        assert (prof.per_vertex_per_color == 1).all() and prof.is_completely_balanced
        shapes = color_class_shapes(c)
        assert len(shapes) == 15 and all(s.is_perfect_matching for s in shapes)
        table = color_lookup(c)
        subsets = list(combinations(range(16), 7))
        assert len(subsets) == comb(16, 7) == 11440
        assert not any(_is_rainbow(table, S) for S in subsets)
        assert find_rainbow_clique(c, 7).exhausted
    assert clk.elapsed < BOUND_1, clk.elapsed


@pytest.mark.criterion(2, "round_robin(45) on K_46: balanced, 45 colors, no rainbow K_10 "
                          "by exhausted search (< 5 min)")
def test_criterion_2():
    with Clock() as clk:
        rec = certify_thm2(10)
    assert rec.status == "PASS"
    assert rec.instance["n"] == 46 and rec.instance["colors"] == 45
    assert rec.verdicts["balanced"] and rec.verdicts["color_count"]
    assert rec.search["outcome"] == "exhausted" and rec.search["reason"] != "pigeonhole"
    assert clk.elapsed < BOUND_2, clk.elapsed


@pytest.mark.criterion(3, "round_robin(29) on K_30: balanced, 29 colors, no rainbow K_8 "
                          "by exhausted search (< 1 min)")
def test_criterion_3():
    with Clock() as clk:
        rec = certify_thm5(8)
    assert rec.status == "PASS"
    assert rec.instance["n"] == 30 and rec.instance["colors"] == 29
    assert rec.verdicts["balanced"] and rec.verdicts["color_count"]
    assert rec.search["outcome"] == "exhausted" and rec.search["reason"] != "pigeonhole"
    assert clk.elapsed < BOUND_3, clk.elapsed


@pytest.mark.criterion(4, "round_robin(7): no rainbow K_6 in 28 subsets; its lex square on "
                          "K_64 has every count 9 and no rainbow K_6 (< 2 min)")
def test_criterion_4():
    with Clock() as clk:
        base = round_robin(7)
        table = color_lookup(base)
        subsets = list(combinations(range(8), 6))
        assert len(subsets) == 28
        assert not any(_is_rainbow(table, S) for S in subsets)

        p = lex_power(base, 2)
        assert p.n == 64
        prof = balance_profile(p)
        assert prof.is_completely_balanced and (prof.per_vertex_per_color == 9).all()
        assert find_rainbow_clique(p, 6).exhausted

        # full backtracking over every root, without the color-count shortcut
        k = _Kernel(p.matrix.tolist(), p.ell, 6)
        assert not any(k.branch(v) for v in range(p.n - 5))
        assert k.nodes > 0
    assert clk.elapsed < BOUND_4, clk.elapsed


@pytest.mark.criterion(5, "difference_coloring(4) on K_13: (6,2)-coloring, 2-regular classes, "
                          "rainbow K_4 witness is a perfect difference set (< 1 s)")
def test_criterion_5():
    with Clock() as clk:
        c = difference_coloring(4)
        assert (c.n, c.ell) == (13, 6)
        prof = balance_profile(c)
        assert prof.min_degree_per_color == 2 and prof.d == 2
        assert all(s.is_spanning_2_regular for s in color_class_shapes(c))
        rep = find_rainbow_clique(c, 4)
        assert rep.found
        assert is_rainbow_set(c, rep.witness)
        assert is_perfect_difference_set(13, rep.witness).is_perfect
    assert clk.elapsed < BOUND_5, clk.elapsed


@pytest.mark.criterion(6, "PDS suite: {2,3,5} in Z_7, Singer sets for p = 2, 3, 5, "
                          "pds_search(7) exhausts (< 10 min)")
def test_criterion_6():
    assert is_perfect_difference_set(7, {2, 3, 5}).is_perfect
    for p, size, n in [(2, 3, 7), (3, 4, 13), (5, 6, 31)]:
        ds = singer(p)
        assert ds.is_perfect and ds.size == size and ds.modulus == n
    with Clock() as clk:
        res = pds_search(7)
    assert res.outcome == "exhausted" and res.modulus == 43
    assert clk.elapsed < BOUND_6, clk.elapsed


@pytest.mark.criterion(7, "Sidon cross-check for ell in {7, 11, 15}: branch predicates, "
                          "size bounds, maximum rainbow size below the forbidden size (< 1 min)")
def test_criterion_7():
    with Clock() as clk:
        for ell in (7, 11, 15):
            c = round_robin(ell)
            m = forbidden_rainbow_size(ell)
            assert m == FORBIDDEN_7[ell]
            biggest = 1
            for size in range(2, c.n + 1):
                sets = enumerate_rainbow_sets(c, size)
                if not sets:
                    break
                biggest = size
                for S in sets:
                    prof, tag = rainbow_to_sidon(c, S)
                    assert expected_predicate_holds(prof, tag), (ell, S)
                    assert not check_size_bounds(prof).violated, (ell, S)
            assert biggest < m, (ell, biggest, m)
    assert clk.elapsed < BOUND_7, clk.elapsed


@pytest.mark.criterion(8, "pruned search agrees with naive enumeration on 100 random "
                          "colorings (n <= 12, ell <= 8, q in {3, 4, 5})")
def test_criterion_8():
    rng = np.random.default_rng(SEED_8)
    checked = 0
    for _ in range(SAMPLES_8):
        n = int(rng.integers(5, 13))
        c = random_dense_coloring(rng, n, int(rng.integers(1, 9)))
        assert c.n <= 12 and c.ell <= 8
        for q in (3, 4, 5):
            want = naive_has_rainbow(c, q)
            got = find_rainbow_clique(c, q)
            assert got.found == (want is not None)
            assert got.witness == want
            checked += 1
    assert checked == 3 * SAMPLES_8


@pytest.mark.criterion(9, ".cbc round trip is byte-identical; repeated certify runs agree "
                          "up to timing fields")
def test_criterion_9():
    for c in (round_robin(15), difference_coloring(4), lex_power(round_robin(3), 2),
              random_dense_coloring(np.random.default_rng(9), 12, 8)):
        text = format_cbc(c)
        assert format_cbc(parse_cbc(text)) == text
        assert parse_cbc(text) == c
    for make in (lambda: certify_lemma7(15), lambda: certify_lemma7(7, 2),
                 lambda: certify_thm5(8), lambda: certify_thm2(10)):
        a, b = make(), make()
        assert a.without_timings() == b.without_timings()
