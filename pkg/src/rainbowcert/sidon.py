"""Sum-multiplicity profiles of subsets of Z_ell and 2-Sidon predicates.

For ``A`` in ``Z_ell``, ``r_A(x)`` counts ordered pairs ``(a1, a2)`` of ``A``
with ``a1 + a2 = x`` and ``r'_A(x)`` counts those with ``a1 != a2``. ``A`` is
2-Sidon when ``r_A <= 2`` everywhere and weak 2-Sidon when ``r'_A <= 2``.

Rainbow sets of the round-robin coloring map onto these: drop the centre
vertex ``ell`` if present and the remaining vertices are residues mod ``ell``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .coloring import EdgeColoring
from .errors import DomainError
from .search import is_rainbow_set

EXPECT_SIDON = "expect-2-sidon"
EXPECT_WEAK_SIDON = "expect-weak-2-sidon"


@dataclass(frozen=True)
class SidonSet:
    modulus: int
    elements: tuple
    r_table: np.ndarray
    r_prime_table: np.ndarray

    @property
    def size(self) -> int:
        return len(self.elements)


def build_sidon_profile(modulus: int, elements) -> SidonSet:
    if modulus < 1:
        raise DomainError(f"modulus must be positive, got {modulus}")
    A = sorted({int(a) for a in elements})
    for a in A:
        if not 0 <= a < modulus:
            raise DomainError(f"element {a} outside Z_{modulus}")
    arr = np.array(A, dtype=np.int64)
    sums = np.add.outer(arr, arr) % modulus
    r = np.bincount(sums.ravel(), minlength=modulus)
    doubles = np.bincount((2 * arr) % modulus, minlength=modulus)
    r_prime = r - doubles
    r.flags.writeable = False
    r_prime.flags.writeable = False
    return SidonSet(modulus, tuple(A), r, r_prime)


def is_2_sidon(s: SidonSet) -> bool:
    return s.size == 0 or int(s.r_table.max()) <= 2


def is_weak_2_sidon(s: SidonSet) -> bool:
    return s.size == 0 or int(s.r_prime_table.max()) <= 2


# ---------------------------------------------------------------------------
# size bounds, exact integer forms
# ---------------------------------------------------------------------------

def weak_sidon_max_size(ell: int) -> int:
    """floor(sqrt(ell) + 5/2), the size cap for weak 2-Sidon sets in Z_ell, ell odd."""
    return (isqrt(4 * ell) + 5) // 2


def sidon_max_size(ell: int) -> int:
    """floor((sqrt(4 ell - 3) + 1) / 2), the size cap for 2-Sidon sets in Z_ell."""
    return (isqrt(4 * ell - 3) + 1) // 2


def forbidden_rainbow_size(ell: int) -> int:
    """floor(sqrt(ell) + 7/2): no rainbow clique this large in round_robin(ell)."""
    return (isqrt(4 * ell) + 7) // 2


def within_weak_bound(size: int, ell: int) -> bool:
    # size <= sqrt(ell) + 5/2  <=>  2 size - 5 <= 2 sqrt(ell)
    t = 2 * size - 5
    return t <= 0 or t * t <= 4 * ell


def within_sidon_bound(size: int, ell: int) -> bool:
    # size <= (sqrt(4 ell - 3) + 1) / 2  <=>  2 size - 1 <= sqrt(4 ell - 3)
    t = 2 * size - 1
    return t <= 0 or t * t <= 4 * ell - 3


@dataclass(frozen=True)
class BoundReport:
    modulus: int
    size: int
    is_2_sidon: bool
    is_weak_2_sidon: bool
    weak_bound: int | None          # None when ell is even
    sidon_bound: int
    weak_bound_respected: bool | None   # None when not applicable
    sidon_bound_respected: bool | None

    @property
    def violated(self) -> bool:
        return self.weak_bound_respected is False or self.sidon_bound_respected is False


def check_size_bounds(s: SidonSet) -> BoundReport:
    """Compare ``|A|`` against the weak 2-Sidon and 2-Sidon size caps.

    The weak cap is only claimed for odd moduli. A cap is checked only when
    the set satisfies the matching predicate; otherwise its verdict is None.
    """
    ell, size = s.modulus, s.size
    sid, weak = is_2_sidon(s), is_weak_2_sidon(s)
    odd = ell % 2 == 1
    weak_ok = within_weak_bound(size, ell) if (odd and weak) else None
    sid_ok = within_sidon_bound(size, ell) if sid else None
    return BoundReport(
        modulus=ell,
        size=size,
        is_2_sidon=sid,
        is_weak_2_sidon=weak,
        weak_bound=weak_sidon_max_size(ell) if odd else None,
        sidon_bound=sidon_max_size(ell),
        weak_bound_respected=weak_ok,
        sidon_bound_respected=sid_ok,
    )


def rainbow_to_sidon(coloring: EdgeColoring, S) -> tuple[SidonSet, str]:
    """Map a rainbow set of ``round_robin(ell)`` to its residue set in Z_ell.

    If the centre vertex ``ell`` is in ``S`` the rest must be 2-Sidon,
    otherwise ``S`` itself must be weak 2-Sidon; the returned tag says which.
    """
    if coloring.provenance != "round-robin":
        raise DomainError(
            f"rainbow_to_sidon needs a round-robin coloring, got {coloring.provenance!r}")
    ell = coloring.ell
    S = [int(v) for v in S]
    if not is_rainbow_set(coloring, S):
        raise DomainError(f"{S} is not a rainbow set")
    if ell in S:
        return build_sidon_profile(ell, [v for v in S if v != ell]), EXPECT_SIDON
    return build_sidon_profile(ell, S), EXPECT_WEAK_SIDON


def expected_predicate_holds(s: SidonSet, tag: str) -> bool:
    if tag == EXPECT_SIDON:
        return is_2_sidon(s)
    if tag == EXPECT_WEAK_SIDON:
        return is_weak_2_sidon(s)
    raise DomainError(f"unknown tag {tag!r}")
