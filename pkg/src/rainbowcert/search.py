"""Exact search for rainbow cliques.

The search walks vertex sets in lexicographic order. A partial clique keeps
the set of colors it already uses and a candidate list: the larger vertices
whose colors to every chosen vertex are pairwise distinct and unused. Adding
a vertex filters the candidate list; a branch is cut when fewer candidates
remain than vertices still needed. Both rules only discard sets that cannot
be rainbow, so an exhausted search is a proof of nonexistence.

Outcomes are three-valued. Running out of budget gives ``"indeterminate"``,
never ``"exhausted"``.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb

from .coloring import EdgeColoring, get_color
from .errors import DomainError, ResourceError

WITNESS = "witness"
EXHAUSTED = "exhausted"
INDETERMINATE = "indeterminate"

DEFAULT_ENUMERATION_BUDGET = 10**8


@dataclass(frozen=True)
class RainbowReport:
    q: int
    outcome: str
    witness: tuple | None
    nodes_explored: int
    elapsed: float
    reason: str = ""

    @property
    def found(self) -> bool:
        return self.outcome == WITNESS

    @property
    def exhausted(self) -> bool:
        return self.outcome == EXHAUSTED

    @property
    def indeterminate(self) -> bool:
        return self.outcome == INDETERMINATE

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "outcome": self.outcome,
            "witness": list(self.witness) if self.witness is not None else None,
            "nodes_explored": self.nodes_explored,
            "elapsed": self.elapsed,
            "reason": self.reason,
        }


class _OutOfBudget(Exception):
    pass


class _Kernel:
    """Backtracking state for one search; not thread-safe."""

    __slots__ = ("M", "size", "collect", "found", "used", "clique",
                 "nodes", "max_nodes", "deadline")

    def __init__(self, M, ell, size, collect=False, max_nodes=None, deadline=None):
        self.M = M
        self.size = size
        self.collect = collect
        self.found = []
        self.used = bytearray(ell)
        self.clique = []
        self.nodes = 0
        self.max_nodes = max_nodes
        self.deadline = deadline

    def branch(self, v0):
        """Search all sets whose least vertex is ``v0``. True = stop (witness)."""
        cands = list(range(v0 + 1, len(self.M)))
        return self._push(v0, cands)

    def _tick(self):
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise _OutOfBudget("node budget")
        if self.deadline is not None and not self.nodes & 1023 \
                and time.monotonic() > self.deadline:
            raise _OutOfBudget("time budget")

    def _push(self, v, cands):
        # cands: vertices > v compatible with the clique before v is added
        self._tick()
        M, used, clique = self.M, self.used, self.clique
        row = M[v]
        new_cols = [row[s] for s in clique]
        for c in new_cols:
            used[c] = 1
        clique.append(v)
        try:
            if len(clique) == self.size:
                if not self.collect:
                    return True
                self.found.append(tuple(clique))
                return False
            nxt = []
            for w in cands:
                rw = M[w]
                cwv = rw[v]
                if used[cwv]:
                    continue
                for s in clique[:-1]:
                    x = rw[s]
                    if used[x] or x == cwv:
                        break
                else:
                    nxt.append(w)
            need = self.size - len(clique)
            total = len(nxt)
            if total < need:
                return False
            for idx in range(total - need + 1):
                if self._push(nxt[idx], nxt[idx + 1:]):
                    return True
            return False
        finally:
            # leave the winning clique in place for the caller to read
            if len(clique) != self.size or self.collect:
                clique.pop()
                for c in new_cols:
                    used[c] = 0


def _check_q(coloring: EdgeColoring, q: int):
    if q < 2:
        raise DomainError(f"clique size must be at least 2, got {q}")
    if q > coloring.n:
        raise DomainError(f"clique size {q} exceeds the vertex count {coloring.n}")


def _run_branch(args):
    M, ell, q, v0, max_nodes, deadline = args
    k = _Kernel(M, ell, q, max_nodes=max_nodes, deadline=deadline)
    try:
        hit = k.branch(v0)
    except _OutOfBudget as exc:
        return INDETERMINATE, None, k.nodes - 1, str(exc)
    if hit:
        return WITNESS, tuple(k.clique), k.nodes, ""
    return EXHAUSTED, None, k.nodes, ""


def find_rainbow_clique(coloring: EdgeColoring, q: int, max_nodes: int | None = None,
                        max_seconds: float | None = None, workers: int = 1) -> RainbowReport:
    """Look for a rainbow K_q; return a witness or prove there is none.

    ``max_nodes`` caps the number of partial cliques visited and
    ``max_seconds`` the wall time. With ``workers > 1`` the branches rooted at
    each least vertex run in separate processes; the node cap then applies to
    each branch separately. The reported witness is always the
    lexicographically least one among the branches that found one.
    """
    _check_q(coloring, q)
    t0 = time.monotonic()
    ell = coloring.ell
    if comb(q, 2) > ell:
        return RainbowReport(q, EXHAUSTED, None, 0, time.monotonic() - t0, "pigeonhole")
    M = coloring.matrix.tolist()
    deadline = t0 + max_seconds if max_seconds is not None else None
    roots = range(coloring.n - q + 1)

    if workers <= 1:
        k = _Kernel(M, ell, q, max_nodes=max_nodes, deadline=deadline)
        try:
            for v0 in roots:
                if k.branch(v0):
                    return RainbowReport(q, WITNESS, tuple(k.clique), k.nodes,
                                         time.monotonic() - t0)
        except _OutOfBudget as exc:
            return RainbowReport(q, INDETERMINATE, None, k.nodes - 1,
                                 time.monotonic() - t0, str(exc))
        return RainbowReport(q, EXHAUSTED, None, k.nodes, time.monotonic() - t0)

    jobs = [(M, ell, q, v0, max_nodes, deadline) for v0 in roots]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_run_branch, jobs))
    nodes = 0
    reason = ""
    for outcome, wit, n_nodes, why in results:
        nodes += n_nodes
        if outcome == WITNESS:
            return RainbowReport(q, WITNESS, wit, nodes, time.monotonic() - t0)
        if outcome == INDETERMINATE and not reason:
            reason = why
    outcome = INDETERMINATE if reason else EXHAUSTED
    return RainbowReport(q, outcome, None, nodes, time.monotonic() - t0, reason)


def is_rainbow_set(coloring: EdgeColoring, S) -> bool:
    """True iff the edges induced on ``S`` carry pairwise distinct colors."""
    S = [int(v) for v in S]
    if len(set(S)) != len(S):
        raise DomainError(f"vertex set has duplicates: {S}")
    for v in S:
        if not 0 <= v < coloring.n:
            raise DomainError(f"vertex {v} out of range for K_{coloring.n}")
    seen = set()
    for a in range(len(S)):
        for b in range(a + 1, len(S)):
            c = get_color(coloring, S[a], S[b])
            if c in seen:
                return False
            seen.add(c)
    return True


def enumerate_rainbow_sets(coloring: EdgeColoring, size: int,
                           max_subsets: int = DEFAULT_ENUMERATION_BUDGET) -> list[tuple]:
    """All rainbow vertex sets of exactly ``size`` vertices, in lexicographic order.

    Refuses with :class:`ResourceError` when ``C(n, size)`` exceeds ``max_subsets``.
    """
    n = coloring.n
    if size < 1 or size > n:
        raise DomainError(f"set size must be in [1, {n}], got {size}")
    total = comb(n, size)
    if total > max_subsets:
        raise ResourceError(
            f"C({n}, {size}) = {total} subsets exceeds the enumeration budget {max_subsets}")
    if size == 1:
        return [(v,) for v in range(n)]
    if comb(size, 2) > coloring.ell:
        return []
    k = _Kernel(coloring.matrix.tolist(), coloring.ell, size, collect=True)
    for v0 in range(n - size + 1):
        k.branch(v0)
    return k.found


def max_rainbow_size(coloring: EdgeColoring) -> int:
    """Largest ``s`` such that some rainbow set of size ``s`` exists."""
    best = 1
    for s in range(2, coloring.n + 1):
        if not find_rainbow_clique(coloring, s).found:
            break
        best = s
    return best
