"""Edge-colorings of complete graphs, balance verifiers and the .cbc format.

An :class:`EdgeColoring` of ``K_n`` stores one color id per unordered pair
``{u, v}`` in a flat upper-triangular array. Pair ``(u, v)`` with ``u < v``
sits at index ``u*n - u*(u+1)//2 + (v - u - 1)``, i.e. row ``u`` of the
triangle lists the pairs ``{u, u+1}, ..., {u, n-1}`` in order. The .cbc text
format writes exactly these rows, one per line.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Callable, Mapping

import numpy as np

from .errors import CbcParseError, DomainError, ResourceError

MAX_VERTICES = 2**20

PROVENANCES = ("round-robin", "difference", "lex-product", "file", "adhoc")


def num_pairs(n: int) -> int:
    return n * (n - 1) // 2


def pair_rank(n: int, u: int, v: int) -> int:
    """Index of the unordered pair {u, v} in the flat triangle of K_n."""
    if u > v:
        u, v = v, u
    return u * n - u * (u + 1) // 2 + (v - u - 1)


def _color_dtype(ell: int):
    return np.int32 if ell < 2**31 else np.int64


@dataclass(frozen=True, eq=False)
class EdgeColoring:
    """Immutable edge-coloring of K_n with color ids in ``[0, ell)``.

    ``provenance`` names the construction that produced the coloring and
    ``meta`` carries its parameters (e.g. the color-label mapping of a
    difference coloring). Equality compares ``n``, ``ell`` and the colors
    only, so a coloring read back from a file equals the one written.

    The constructor checks shape only; use :func:`validate` for the color
    range and surjectivity invariants.
    """

    n: int
    ell: int
    colors: np.ndarray
    provenance: str = "adhoc"
    meta: Mapping = field(default_factory=dict)

    def __post_init__(self):
        n, ell = int(self.n), int(self.ell)
        if n < 2:
            raise DomainError(f"need at least 2 vertices, got n={n}")
        if n > MAX_VERTICES:
            raise ResourceError(f"n={n} exceeds the vertex bound {MAX_VERTICES}")
        if ell < 1:
            raise DomainError(f"need at least one color, got ell={ell}")
        if self.provenance not in PROVENANCES:
            raise DomainError(f"unknown provenance {self.provenance!r}")
        colors = np.array(self.colors, dtype=np.int64).ravel()
        if colors.shape != (num_pairs(n),):
            raise DomainError(
                f"K_{n} has {num_pairs(n)} edges but {colors.size} colors were given")
        if colors.size and (colors.min() < np.iinfo(_color_dtype(ell)).min
                            or colors.max() > np.iinfo(_color_dtype(ell)).max):
            raise DomainError("color id does not fit the storage type")
        colors = colors.astype(_color_dtype(ell))
        colors.flags.writeable = False
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "ell", ell)
        object.__setattr__(self, "colors", colors)
        object.__setattr__(self, "meta", dict(self.meta))

    def __eq__(self, other):
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return (self.n == other.n and self.ell == other.ell
                and np.array_equal(self.colors, other.colors))

    def __hash__(self):
        return hash((self.n, self.ell, self.colors.tobytes()))

    def __repr__(self):
        return f"EdgeColoring(n={self.n}, ell={self.ell}, provenance={self.provenance!r})"

    @classmethod
    def from_matrix(cls, matrix, ell=None, provenance="adhoc", meta=None):
        """Build from a symmetric n x n array; the diagonal is ignored."""
        M = np.asarray(matrix)
        if M.ndim != 2 or M.shape[0] != M.shape[1]:
            raise DomainError("color matrix must be square")
        if not np.array_equal(M, M.T):
            raise DomainError("color matrix must be symmetric")
        n = M.shape[0]
        iu = np.triu_indices(n, k=1)
        flat = M[iu]
        if ell is None:
            ell = int(flat.max()) + 1 if flat.size else 1
        return cls(n, ell, flat, provenance, meta or {})

    @classmethod
    def from_function(cls, n: int, ell: int, color: Callable[[int, int], int],
                      provenance="adhoc", meta=None):
        """Build by calling ``color(u, v)`` for every ``u < v``."""
        flat = [color(u, v) for u in range(n) for v in range(u + 1, n)]
        return cls(n, ell, np.array(flat, dtype=np.int64), provenance, meta or {})

    @cached_property
    def matrix(self) -> np.ndarray:
        """Dense symmetric color matrix with -1 on the diagonal (read-only)."""
        n = self.n
        M = np.full((n, n), -1, dtype=self.colors.dtype)
        iu = np.triu_indices(n, k=1)
        M[iu] = self.colors
        M.T[iu] = self.colors
        M.flags.writeable = False
        return M

    def edges(self):
        """Yield ``(u, v, color)`` for all pairs in triangle order."""
        k = 0
        for u in range(self.n):
            for v in range(u + 1, self.n):
                yield u, v, int(self.colors[k])
                k += 1


def get_color(coloring: EdgeColoring, u: int, v: int) -> int:
    n = coloring.n
    if not (0 <= u < n and 0 <= v < n):
        raise DomainError(f"vertex out of range for K_{n}: ({u}, {v})")
    if u == v:
        raise DomainError(f"no edge from vertex {u} to itself")
    return int(coloring.colors[pair_rank(n, u, v)])


# ---------------------------------------------------------------------------
# balance and class shapes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BalanceProfile:
    per_vertex_per_color: np.ndarray
    min_degree_per_color: int
    is_completely_balanced: bool

    @property
    def d(self) -> int:
        return self.min_degree_per_color


@dataclass(frozen=True)
class ColorClassShape:
    color: int
    degree_multiset: dict
    is_perfect_matching: bool
    is_spanning_2_regular: bool


def _incidence_counts(coloring: EdgeColoring) -> np.ndarray:
    """counts[v, c] = number of edges at v with color c (in-range colors only)."""
    n, ell = coloring.n, coloring.ell
    iu, ju = np.triu_indices(n, k=1)
    c = coloring.colors.astype(np.int64)
    ok = (c >= 0) & (c < ell)
    counts = np.zeros(n * ell, dtype=np.int64)
    np.add.at(counts, iu[ok] * ell + c[ok], 1)
    np.add.at(counts, ju[ok] * ell + c[ok], 1)
    return counts.reshape(n, ell)


def balance_profile(coloring: EdgeColoring) -> BalanceProfile:
    counts = _incidence_counts(coloring)
    n, ell = coloring.n, coloring.ell
    balanced = (n - 1) % ell == 0 and bool(np.all(counts == (n - 1) // ell))
    counts.flags.writeable = False
    return BalanceProfile(counts, int(counts.min()), balanced)


def color_class_shapes(coloring: EdgeColoring) -> list[ColorClassShape]:
    """Degree multiset of every color class, viewed as a spanning subgraph."""
    counts = _incidence_counts(coloring)
    shapes = []
    for c in range(coloring.ell):
        deg = counts[:, c]
        shapes.append(ColorClassShape(
            color=c,
            degree_multiset=dict(sorted(Counter(deg.tolist()).items())),
            is_perfect_matching=bool(np.all(deg == 1)),
            is_spanning_2_regular=bool(np.all(deg == 2)),
        ))
    return shapes


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    kind: str
    message: str
    pair: tuple | None = None
    color: int | None = None


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    @property
    def first(self) -> Violation | None:
        return self.violations[0] if self.violations else None

    def __bool__(self):
        return self.valid


def validate(coloring: EdgeColoring) -> ValidationReport:
    """Check the color-range and all-colors-used invariants.

    Violations are returned, not raised. Out-of-range colors are reported
    in pair order (at most one entry per offending pair), then unused ids.
    """
    n, ell = coloring.n, coloring.ell
    c = coloring.colors
    out = []
    bad = np.flatnonzero((c < 0) | (c >= ell))
    if bad.size:
        iu, ju = np.triu_indices(n, k=1)
        for k in bad[:16]:
            pair = (int(iu[k]), int(ju[k]))
            out.append(Violation("color out of range",
                                 f"color out of range: pair {pair} has color {int(c[k])}, "
                                 f"expected [0, {ell})", pair, int(c[k])))
    present = np.zeros(ell, dtype=bool)
    inrange = c[(c >= 0) & (c < ell)]
    present[inrange] = True
    for col in np.flatnonzero(~present)[:16]:
        out.append(Violation("unused color",
                             f"unused color: id {int(col)} appears on no edge",
                             None, int(col)))
    return ValidationReport(tuple(out))


# ---------------------------------------------------------------------------
# .cbc text format
# ---------------------------------------------------------------------------

def format_cbc(coloring: EdgeColoring) -> str:
    n = coloring.n
    lines = [f"CBC {n} {coloring.ell}"]
    c = coloring.colors
    start = 0
    for u in range(n - 1):
        stop = start + (n - 1 - u)
        lines.append(" ".join(map(str, c[start:stop].tolist())))
        start = stop
    return "\n".join(lines) + "\n"


def _parse_int(tok, lineno):
    if not tok.isdigit() or (len(tok) > 1 and tok[0] == "0"):
        raise CbcParseError(lineno, f"expected a decimal integer, got {tok!r}")
    return int(tok)


def parse_cbc(text: str) -> EdgeColoring:
    """Parse .cbc text. Provenance of the result is ``"file"``."""
    if "\r" in text:
        raise CbcParseError(1, "CR characters are not allowed; use LF line endings")
    if not text.endswith("\n"):
        raise CbcParseError(max(1, text.count("\n") + 1), "missing final newline")
    lines = text[:-1].split("\n")
    head = lines[0].split(" ")
    if len(head) != 3 or head[0] != "CBC":
        raise CbcParseError(1, "header must be 'CBC <n> <ell>'")
    n, ell = _parse_int(head[1], 1), _parse_int(head[2], 1)
    if n < 2 or ell < 1:
        raise CbcParseError(1, f"need n >= 2 and ell >= 1, got n={n}, ell={ell}")
    if n > MAX_VERTICES:
        raise CbcParseError(1, f"n={n} exceeds the vertex bound {MAX_VERTICES}")
    if len(lines) != n:
        raise CbcParseError(min(len(lines), n) + 1,
                            f"expected {n - 1} rows after the header, found {len(lines) - 1}")
    flat = np.empty(num_pairs(n), dtype=np.int64)
    start = 0
    for u in range(n - 1):
        lineno = u + 2
        toks = lines[u + 1].split(" ")
        if len(toks) != n - 1 - u:
            raise CbcParseError(lineno, f"row {u} needs {n - 1 - u} colors, found {len(toks)}")
        vals = [_parse_int(t, lineno) for t in toks]
        for v in vals:
            if v >= ell:
                raise CbcParseError(lineno, f"color {v} out of range [0, {ell})")
        flat[start:start + len(vals)] = vals
        start += len(vals)
    return EdgeColoring(n, ell, flat, "file")


def write_cbc(coloring: EdgeColoring, path) -> None:
    Path(path).write_bytes(format_cbc(coloring).encode("ascii"))


def read_cbc(path) -> EdgeColoring:
    data = Path(path).read_bytes()
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError as exc:
        raise CbcParseError(data[:exc.start].count(b"\n") + 1, "non-ASCII byte") from None
    return parse_cbc(text)
