"""Perfect difference sets in Z_n: verification, search, Singer sets, screening.

``A`` in ``Z_n`` is perfect when every nonzero residue is ``a - b`` for
exactly one ordered pair of ``A``; then ``n = q^2 - q + 1`` with ``q = |A|``.
Perfect difference sets of size ``q`` are exactly the rainbow ``K_q`` vertex
sets of :func:`rainbowcert.constructions.difference_coloring`.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, DomainError

# q - 1 divisible by one of these: no nonexistence conclusion from the screen
PPC_DIVISORS = (6, 10, 14, 15, 21, 22, 26, 33, 34, 35, 38, 39, 46, 51, 55, 57, 58, 62, 65)

FOUND = "found"
EXHAUSTED = "exhausted"
INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class DifferenceSet:
    """Difference profile of ``elements`` in ``Z_modulus``.

    ``diff_multiplicity[x]`` is the number of ordered pairs with ``a - b = x``
    for ``x != 0``; entry 0 is kept at 0.
    """

    modulus: int
    elements: tuple
    diff_multiplicity: np.ndarray
    is_perfect: bool

    @property
    def size(self) -> int:
        return len(self.elements)


def is_perfect_difference_set(modulus: int, elements) -> DifferenceSet:
    if modulus < 1:
        raise DomainError(f"modulus must be positive, got {modulus}")
    A = sorted({int(a) for a in elements})
    for a in A:
        if not 0 <= a < modulus:
            raise DomainError(f"element {a} outside Z_{modulus}")
    arr = np.array(A, dtype=np.int64)
    diffs = np.subtract.outer(arr, arr) % modulus
    mult = np.bincount(diffs.ravel(), minlength=modulus)
    mult[0] = 0
    mult.flags.writeable = False
    perfect = bool(np.all(mult[1:] == 1))
    return DifferenceSet(modulus, tuple(A), mult, perfect)


def translate(elements, t: int, modulus: int) -> list[int]:
    return sorted((a + t) % modulus for a in elements)


# ---------------------------------------------------------------------------
# exhaustive search
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PdsSearchResult:
    q: int
    modulus: int
    outcome: str
    elements: tuple | None
    nodes_explored: int
    elapsed: float
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "modulus": self.modulus,
            "outcome": self.outcome,
            "elements": list(self.elements) if self.elements is not None else None,
            "nodes_explored": self.nodes_explored,
            "elapsed": self.elapsed,
            "reason": self.reason,
        }


class _OutOfBudget(Exception):
    pass


def pds_search(q: int, max_nodes: int | None = None,
               max_seconds: float | None = None) -> PdsSearchResult:
    """Exhaustive search for a perfect difference set of size ``q`` in Z_{q^2-q+1}.

    Some pair of a perfect difference set differs by 1, so after translation
    the set contains 0 and 1; the remaining elements are chosen in increasing
    order and a branch dies as soon as a difference repeats.
    """
    if q < 2:
        raise DomainError(f"pds_search needs q >= 2, got {q}")
    t0 = time.monotonic()
    n = q * q - q + 1
    deadline = t0 + max_seconds if max_seconds is not None else None
    seen = bytearray(n)
    seen[1] = seen[n - 1] = 1
    chosen = [0, 1]
    nodes = 0

    def extend(start):
        nonlocal nodes
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise _OutOfBudget("node budget")
        if deadline is not None and not nodes & 1023 and time.monotonic() > deadline:
            raise _OutOfBudget("time budget")
        if len(chosen) == q:
            return True
        need = q - len(chosen)
        for x in range(start, n - need + 1):
            new = []
            for a in chosen:
                d = x - a
                e = n - d
                if seen[d] or seen[e] or d == e or d in new or e in new:
                    break
                new.append(d)
                new.append(e)
            else:
                for d in new:
                    seen[d] = 1
                chosen.append(x)
                if extend(x + 1):
                    return True
                chosen.pop()
                for d in new:
                    seen[d] = 0
        return False

    try:
        hit = extend(2)
    except _OutOfBudget as exc:
        return PdsSearchResult(q, n, INDETERMINATE, None, nodes - 1,
                               time.monotonic() - t0, str(exc))
    elapsed = time.monotonic() - t0
    if hit:
        return PdsSearchResult(q, n, FOUND, tuple(chosen), nodes, elapsed)
    return PdsSearchResult(q, n, EXHAUSTED, None, nodes, elapsed)


# ---------------------------------------------------------------------------
# small number theory
# ---------------------------------------------------------------------------

def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def prime_factors(m: int) -> list[int]:
    out = []
    f = 2
    while f * f <= m:
        if m % f == 0:
            out.append(f)
            while m % f == 0:
                m //= f
        f += 1
    if m > 1:
        out.append(m)
    return out


def prime_power(m: int) -> tuple[int, int] | None:
    """``(p, k)`` with ``m = p**k``, or None."""
    if m < 2:
        return None
    ps = prime_factors(m)
    if len(ps) != 1:
        return None
    p, k = ps[0], 0
    while m > 1:
        m //= p
        k += 1
    return p, k


# ---------------------------------------------------------------------------
# GF(p^3) and the Singer construction
# ---------------------------------------------------------------------------

class _Cubic:
    """Arithmetic in GF(p)[x] / (x^3 + f2 x^2 + f1 x + f0); elements are (a0, a1, a2)."""

    def __init__(self, p, f):
        self.p = p
        self.f = f  # (f0, f1, f2)

    def mul(self, a, b):
        p = self.p
        f0, f1, f2 = self.f
        c = [0] * 5
        for i in range(3):
            if a[i]:
                for j in range(3):
                    c[i + j] += a[i] * b[j]
        # x^3 = -(f2 x^2 + f1 x + f0), reduce degree 4 first
        for d in (4, 3):
            t = c[d] % p
            if t:
                c[d - 1] -= t * f2
                c[d - 2] -= t * f1
                c[d - 3] -= t * f0
            c[d] = 0
        return (c[0] % p, c[1] % p, c[2] % p)

    def pow(self, a, e):
        r = (1, 0, 0)
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r


def irreducible_cubic(p: int) -> tuple[int, int, int]:
    """First monic cubic without roots mod p, scanning (f0, f1, f2) lexicographically.

    A cubic with no root in GF(p) has no linear factor, hence is irreducible.
    """
    for f0, f1, f2 in itertools.product(range(p), repeat=3):
        if all((x ** 3 + f2 * x * x + f1 * x + f0) % p for x in range(p)):
            return f0, f1, f2
    raise ConsistencyError(f"no irreducible cubic found over GF({p})")


def primitive_element(field: _Cubic):
    p = field.p
    order = p ** 3 - 1
    exps = [order // r for r in prime_factors(order)]
    one = (1, 0, 0)
    for rank in range(1, p ** 3):
        g = (rank % p, (rank // p) % p, rank // (p * p))
        if all(field.pow(g, e) != one for e in exps):
            return g
    raise ConsistencyError(f"no primitive element in GF({p}^3)")


def singer(p: int) -> DifferenceSet:
    """Singer perfect difference set of size p + 1 in Z_{p^2+p+1}.

    With ``g`` primitive in GF(p^3), the exponents ``i`` for which ``g^i``
    has zero coefficient at ``x^2`` reduce mod ``p^2 + p + 1`` to the set.
    """
    if not isinstance(p, (int, np.integer)) or not is_prime(int(p)):
        raise DomainError(f"singer needs a prime, got {p!r}")
    p = int(p)
    field = _Cubic(p, irreducible_cubic(p))
    g = primitive_element(field)
    n = p * p + p + 1
    residues = set()
    x = (1, 0, 0)
    for i in range(p ** 3 - 1):
        if x[2] == 0:
            residues.add(i % n)
        x = field.mul(x, g)
    if x != (1, 0, 0):
        raise ConsistencyError("generator order does not divide p^3 - 1")
    ds = is_perfect_difference_set(n, residues)
    if not ds.is_perfect or ds.size != p + 1:
        raise ConsistencyError(f"Singer construction for p={p} failed validation")
    return ds


# ---------------------------------------------------------------------------
# divisibility screen
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ScreenReport:
    q: int
    order: int
    prime_power: tuple | None
    status: str
    divisor_hits: tuple
    verdict: str

    @property
    def hypothesis_holds(self) -> bool:
        """No listed divisor divides q - 1."""
        return not self.divisor_hits

    @property
    def asserts_infinite(self) -> bool:
        """The screen concludes d(n, K_q) is infinite for infinitely many n."""
        return self.verdict == "nonexistence"


def ppc_divisibility_screen(q: int) -> ScreenReport:
    """Screen ``q - 1`` against the prime-power test and the fixed divisor list.

    Verdicts:

    ``"trivial order"``      q - 1 = 1.
    ``"singer"``             q - 1 is a prime power; a perfect difference set exists.
    ``"hypothesis fails"``   some listed divisor divides q - 1; nothing follows.
    ``"nonexistence"``       no prime power and no divisor hit: no perfect
                             difference set of size q, so rainbow-K_q-free
                             balanced colorings exist for infinitely many n.
    """
    if q < 2:
        raise DomainError(f"screen needs q >= 2, got {q}")
    order = q - 1
    pp = prime_power(order)
    hits = tuple(d for d in PPC_DIVISORS if order % d == 0)
    if order == 1:
        status, verdict = "trivial order", "trivial order"
    elif pp is not None:
        status, verdict = f"prime power {pp[0]}^{pp[1]}", "singer"
    else:
        status = "not a prime power"
        verdict = "hypothesis fails" if hits else "nonexistence"
    return ScreenReport(q, order, pp, status, hits, verdict)
