from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import naive_has_rainbow, naive_rainbow_sets, random_dense_coloring
from rainbowcert import (
    DomainError,
    EdgeColoring,
    ResourceError,
    difference_coloring,
    enumerate_rainbow_sets,
    find_rainbow_clique,
    is_rainbow_set,
    lex_product,
    round_robin,
)
from rainbowcert.constructions import LexIndexing
from rainbowcert.search import max_rainbow_size


class TestFindRainbowClique:
    def test_difference_q4_has_witness(self, diff4):
        rep = find_rainbow_clique(diff4, 4)
        assert rep.found and len(rep.witness) == 4
        assert is_rainbow_set(diff4, rep.witness)
        assert rep.witness == naive_has_rainbow(diff4, 4)

    def test_round_robin_15_q7_exhausted(self, rr15):
        rep = find_rainbow_clique(rr15, 7)
        assert rep.exhausted and rep.witness is None
        assert rep.reason == "pigeonhole" and rep.nodes_explored == 0

    def test_round_robin_15_q6_exhausted_by_search(self, rr15):
        rep = find_rainbow_clique(rr15, 6)
        assert rep.exhausted and rep.nodes_explored > 0

    def test_q2_any_edge(self, rr15):
        rep = find_rainbow_clique(rr15, 2)
        assert rep.witness == (0, 1)

    @pytest.mark.parametrize("q", [1, 0, 17])
    def test_bad_q(self, rr15, q):
        with pytest.raises(DomainError):
            find_rainbow_clique(rr15, q)

    def test_node_budget_is_indeterminate(self):
        rep = find_rainbow_clique(round_robin(29), 8, max_nodes=100)
        assert rep.indeterminate and not rep.exhausted
        assert rep.reason == "node budget" and rep.nodes_explored == 100

    def test_time_budget_is_indeterminate(self):
        rep = find_rainbow_clique(round_robin(45), 10, max_seconds=0.0)
        assert rep.indeterminate and rep.reason == "time budget"

    def test_generous_budget_still_exhausts(self):
        rep = find_rainbow_clique(round_robin(29), 8, max_nodes=10**7)
        assert rep.exhausted

    def test_deterministic(self):
        c = round_robin(21)
        a, b = find_rainbow_clique(c, 6), find_rainbow_clique(c, 6)
        assert (a.outcome, a.witness, a.nodes_explored) == (b.outcome, b.witness, b.nodes_explored)

    def test_returns_lexicographically_least(self):
        c = round_robin(11)
        rep = find_rainbow_clique(c, 5)
        assert rep.witness == naive_rainbow_sets(c, 5)[0]

    @pytest.mark.parametrize("workers", [2, 3])
    def test_parallel_agrees(self, workers):
        for c, q in [(round_robin(15), 6), (round_robin(11), 5), (difference_coloring(4), 4)]:
            seq = find_rainbow_clique(c, q)
            par = find_rainbow_clique(c, q, workers=workers)
            assert (seq.outcome, seq.witness) == (par.outcome, par.witness)
            if seq.exhausted:
                assert seq.nodes_explored == par.nodes_explored

    @settings(max_examples=80, deadline=None)
    @given(st.integers(3, 10), st.integers(2, 8), st.integers(3, 5), st.integers(0, 2**32 - 1))
    def test_agrees_with_naive(self, n, k, q, seed):
        c = random_dense_coloring(np.random.default_rng(seed), n, k)
        if q > n:
            return
        rep = find_rainbow_clique(c, q)
        want = naive_has_rainbow(c, q)
        assert rep.found == (want is not None)
        if rep.found:
            assert rep.witness == want
        if comb(q, 2) > c.ell:
            assert rep.nodes_explored == 0

    @settings(max_examples=40, deadline=None)
    @given(st.integers(4, 10), st.integers(3, 10), st.integers(0, 2**32 - 1))
    def test_monotone(self, n, k, seed):
        c = random_dense_coloring(np.random.default_rng(seed), n, k)
        found = [find_rainbow_clique(c, q).found for q in range(2, n + 1)]
        # once absent, absent for every larger q
        assert found == sorted(found, reverse=True)


class TestIsRainbowSet:
    def test_single_edge(self, rr15):
        assert is_rainbow_set(rr15, [3, 11])

    def test_trivial_sets(self, rr15):
        assert is_rainbow_set(rr15, [])
        assert is_rainbow_set(rr15, [4])

    def test_known_pds(self, diff4):
        assert is_rainbow_set(diff4, [0, 1, 3, 9])
        assert not is_rainbow_set(diff4, [0, 1, 2])

    def test_lex_triple_not_rainbow(self, rr15):
        p = lex_product(rr15, rr15)
        idx = LexIndexing(16, 16)
        x, y, z = idx.vertex(3, 0), idx.vertex(3, 7), idx.vertex(9, 2)
        assert not is_rainbow_set(p, [x, y, z])

    def test_duplicates(self, rr15):
        with pytest.raises(DomainError):
            is_rainbow_set(rr15, [1, 2, 1])

    def test_out_of_range(self, rr15):
        with pytest.raises(DomainError):
            is_rainbow_set(rr15, [1, 16])


class TestEnumerate:
    def test_size_two_all_edges(self, rr15):
        sets = enumerate_rainbow_sets(rr15, 2)
        assert len(sets) == 120 and sets == sorted(sets)

    def test_size_seven_empty(self, rr15):
        assert enumerate_rainbow_sets(rr15, 7) == []

    def test_size_six_empty(self, rr15):
        # brute force over all C(16, 6) subsets finds none either
        assert enumerate_rainbow_sets(rr15, 6) == naive_rainbow_sets(rr15, 6) == []

    @pytest.mark.parametrize("ell,counts", [
        (7, {2: 28, 3: 56, 4: 28, 5: 0}),
        (11, {2: 66, 3: 220, 4: 330, 5: 22, 6: 0}),
        (15, {2: 120, 3: 560, 4: 1410, 5: 780, 6: 0}),
    ])
    def test_counts_match_brute_force(self, ell, counts):
        c = round_robin(ell)
        for size, count in counts.items():
            sets = enumerate_rainbow_sets(c, size)
            assert len(sets) == count
            assert sets == naive_rainbow_sets(c, size)

    def test_singletons(self, diff4):
        assert enumerate_rainbow_sets(diff4, 1) == [(v,) for v in range(13)]

    def test_budget_refusal(self):
        with pytest.raises(ResourceError):
            enumerate_rainbow_sets(round_robin(45), 10, max_subsets=10**6)

    def test_bad_size(self, rr15):
        with pytest.raises(DomainError):
            enumerate_rainbow_sets(rr15, 0)

    def test_max_rainbow_size(self, rr15, diff4):
        assert max_rainbow_size(rr15) == 5
        assert max_rainbow_size(diff4) == 4
        assert max_rainbow_size(EdgeColoring(3, 1, [0, 0, 0])) == 2
