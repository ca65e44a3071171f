"""Builders for the three coloring families.

* :func:`round_robin` -- the circle-method 1-factorization of ``K_{ell+1}``
  for odd ``ell``: ``c(i, j) = i + j mod ell`` and ``c(i, ell) = 2i mod ell``.
* :func:`difference_coloring` -- the 2-factorization of ``K_n`` on ``Z_n``,
  ``n = q^2 - q + 1``, coloring ``{a, b}`` by the class ``{d, -d}`` of ``a - b``.
* :func:`lex_product` / :func:`lex_power` -- block colorings: inner coloring
  inside a block, outer coloring between blocks.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coloring import MAX_VERTICES, EdgeColoring
from .errors import DomainError, ResourceError


def round_robin(ell: int) -> EdgeColoring:
    """Round-robin coloring of K_{ell+1} on vertices ``0..ell`` with ``ell`` colors.

    Every color class is a perfect matching. ``ell`` must be odd and at least 3.
    """
    if not isinstance(ell, (int, np.integer)) or ell < 3 or ell % 2 == 0:
        raise DomainError(f"round_robin needs an odd ell >= 3, got {ell!r}")
    ell = int(ell)
    n = ell + 1
    i, j = np.triu_indices(n, k=1)
    colors = np.where(j == ell, (2 * i) % ell, (i + j) % ell)
    return EdgeColoring(n, ell, colors, "round-robin", {"ell": ell})


def difference_coloring(q: int) -> EdgeColoring:
    """Color K_n on Z_n, ``n = q*q - q + 1``, by folded differences.

    Edge ``{a, b}`` gets the class ``{d, n - d}`` with ``d = a - b mod n``;
    the dense id of that class is ``min(d, n - d) - 1``. The label table is
    kept in ``meta["labels"]`` (id -> ``[d, n - d]``).
    """
    if not isinstance(q, (int, np.integer)) or q < 2:
        raise DomainError(f"difference_coloring needs q >= 2, got {q!r}")
    q = int(q)
    n = q * q - q + 1
    ell = q * (q - 1) // 2
    a, b = np.triu_indices(n, k=1)
    d = (b - a) % n
    colors = np.minimum(d, n - d) - 1
    labels = [[k, n - k] for k in range(1, ell + 1)]
    return EdgeColoring(n, ell, colors, "difference", {"q": q, "labels": labels})


@dataclass(frozen=True)
class LexIndexing:
    """Vertex layout of a product of an outer K_m and an inner K_{n_inner}.

    Product vertex ``(i, j)`` -- block ``i``, position ``j`` inside the block --
    has flat id ``i * n_inner + j``.
    """

    m: int
    n_inner: int

    @property
    def size(self) -> int:
        return self.m * self.n_inner

    def vertex(self, i: int, j: int) -> int:
        if not (0 <= i < self.m and 0 <= j < self.n_inner):
            raise DomainError(f"({i}, {j}) outside [0, {self.m}) x [0, {self.n_inner})")
        return i * self.n_inner + j

    def split(self, x: int) -> tuple[int, int]:
        if not 0 <= x < self.size:
            raise DomainError(f"vertex {x} outside [0, {self.size})")
        return divmod(x, self.n_inner)


def lex_product(c1: EdgeColoring, c2: EdgeColoring) -> EdgeColoring:
    """Lexicographic product: ``c1`` colors between blocks, ``c2`` inside them.

    Both factors must share the color universe ``[0, ell)``.
    """
    if c1.ell != c2.ell:
        raise DomainError(
            f"lex_product needs a common color set; got ell={c1.ell} and ell={c2.ell}")
    idx = LexIndexing(c1.n, c2.n)
    n = idx.size
    if n > MAX_VERTICES:
        raise ResourceError(f"product has {n} vertices, above the bound {MAX_VERTICES}")
    x, y = np.triu_indices(n, k=1)
    bx, px = np.divmod(x, idx.n_inner)
    by, py = np.divmod(y, idx.n_inner)
    same = bx == by
    colors = np.where(same, c2.matrix[px, py], c1.matrix[bx, by])
    meta = {
        "outer": {"n": c1.n, "provenance": c1.provenance},
        "inner": {"n": c2.n, "provenance": c2.provenance},
        "block_size": c2.n,
    }
    return EdgeColoring(n, c1.ell, colors, "lex-product", meta)


def lex_power(c: EdgeColoring, k: int) -> EdgeColoring:
    """k-fold product of ``c`` with itself, associated as ``((c x c) x c) ...``.

    ``k = 1`` returns ``c`` itself.
    """
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise DomainError(f"lex_power needs k >= 1, got {k!r}")
    if c.n ** int(k) > MAX_VERTICES:
        raise ResourceError(
            f"K_{c.n}^{k} has {c.n ** int(k)} vertices, above the bound {MAX_VERTICES}")
    out = c
    for _ in range(int(k) - 1):
        out = lex_product(out, c)
    if k > 1:
        out = EdgeColoring(out.n, out.ell, out.colors, "lex-product",
                           {**out.meta, "base": {"n": c.n, "provenance": c.provenance},
                            "power": int(k)})
    return out
