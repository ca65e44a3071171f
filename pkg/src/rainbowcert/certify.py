"""Theorem-instance certificates.

Each certifier builds the round-robin coloring prescribed for an instance,
optionally raises it to a lexicographic power, and checks it: the coloring
is valid, uses the expected number of colors, is completely balanced, every
color class is regular of the expected degree, and an exhaustive search
finds no rainbow clique of the target size. A record is ``PASS`` only when
every check is affirmative and the search is exhausted.
"""
from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field
from math import comb

from . import __version__
from .coloring import balance_profile, color_class_shapes, format_cbc, validate
from .constructions import lex_power, round_robin
from .errors import DomainError
from .search import EXHAUSTED, INDETERMINATE, find_rainbow_clique
from .sidon import forbidden_rainbow_size

PASS = "PASS"
FAIL = "FAIL"
INDET = "INDETERMINATE"


@dataclass
class CertificateRecord:
    instance: dict
    verdicts: dict
    search: dict
    timings: dict
    tool_version: str
    input_hash: str
    status: str = field(init=False)

    def __post_init__(self):
        self.status = self._status()

    def _status(self) -> str:
        if not all(self.verdicts.values()):
            return FAIL
        outcome = self.search.get("outcome")
        if outcome == EXHAUSTED:
            return PASS
        if outcome == INDETERMINATE:
            return INDET
        return FAIL

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "instance": self.instance,
            "verdicts": self.verdicts,
            "search": self.search,
            "timings": self.timings,
            "tool_version": self.tool_version,
            "input_hash": self.input_hash,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def without_timings(self) -> dict:
        d = self.to_dict()
        d.pop("timings")
        d["search"] = {k: v for k, v in d["search"].items() if k != "elapsed"}
        return d


def _check_and_search(theorem, instance, coloring, target, expected_colors,
                      max_nodes=None, max_seconds=None, workers=1):
    t0 = time.monotonic()
    n, ell = coloring.n, coloring.ell
    report = validate(coloring)
    prof = balance_profile(coloring)
    shapes = color_class_shapes(coloring)
    per = (n - 1) // ell if (n - 1) % ell == 0 else None
    t_checks = time.monotonic() - t0
    verdicts = {
        "valid": report.valid,
        "color_count": ell == expected_colors,
        "balanced": prof.is_completely_balanced,
        # each class regular of degree (n-1)/ell; perfect matchings when k = 1
        "class_shape": per is not None and all(
            s.degree_multiset == {per: n} for s in shapes),
    }
    if "q" in instance:
        # no rainbow K_m and m <= q rules out a rainbow K_q as well
        verdicts["q_at_least_m"] = instance["m"] <= instance["q"]
    if instance.get("k", 1) == 1:
        verdicts["perfect_matchings"] = all(s.is_perfect_matching for s in shapes)
    rep = find_rainbow_clique(coloring, target, max_nodes=max_nodes,
                              max_seconds=max_seconds, workers=workers)
    search = rep.to_dict()
    instance = {**instance, "n": n, "colors": ell, "target": target,
                "d": prof.min_degree_per_color}
    digest = hashlib.sha256(format_cbc(coloring).encode("ascii")).hexdigest()
    return CertificateRecord(
        instance={"theorem": theorem, **instance},
        verdicts=verdicts,
        search=search,
        timings={"checks": t_checks, "search": rep.elapsed,
                 "total": time.monotonic() - t0},
        tool_version=__version__,
        input_hash=digest,
    )


def certify_thm2(q: int, k: int = 1, **budget) -> CertificateRecord:
    """Balanced K_{(l+1)^k} with l = C(q, 2) colors and no rainbow K_q."""
    if q % 4 not in (2, 3):
        raise DomainError(
            f"thm2 needs q = 2 or 3 (mod 4) so that C(q, 2) is odd; got q={q} (q mod 4 = {q % 4})")
    if q < 10:
        raise DomainError(f"thm2 is stated for q >= 10, got q={q}")
    ell = comb(q, 2)
    m = forbidden_rainbow_size(ell)
    c = lex_power(round_robin(ell), k)
    inst = {"q": q, "ell": ell, "k": k, "m": m}
    return _check_and_search("thm2", inst, c, q, ell, **budget)


def certify_thm5(q: int, k: int = 1, **budget) -> CertificateRecord:
    """Balanced K_{(l+2)^k} with l + 1 = C(q, 2) + 1 colors and no rainbow K_q."""
    if q % 4 not in (0, 1):
        raise DomainError(
            f"thm5 needs q = 0 or 1 (mod 4) so that C(q, 2) + 1 is odd; got q={q} (q mod 4 = {q % 4})")
    if q < 8:
        raise DomainError(f"thm5 is stated for q >= 8, got q={q}")
    ell = comb(q, 2)
    m = forbidden_rainbow_size(ell + 1)
    c = lex_power(round_robin(ell + 1), k)
    inst = {"q": q, "ell": ell, "k": k, "m": m}
    return _check_and_search("thm5", inst, c, q, ell + 1, **budget)


def certify_lemma7(ell: int, k: int = 1, **budget) -> CertificateRecord:
    """round_robin(ell) is balanced and has no rainbow K_m, m = floor(sqrt(ell) + 7/2)."""
    if ell < 3 or ell % 2 == 0:
        raise DomainError(f"lemma7 needs an odd ell >= 3, got {ell}")
    m = forbidden_rainbow_size(ell)
    if m > ell + 1:
        raise DomainError(f"target m={m} exceeds the vertex count {ell + 1}")
    c = lex_power(round_robin(ell), k)
    inst = {"ell": ell, "k": k, "m": m}
    return _check_and_search("lemma7", inst, c, m, ell, **budget)


CERTIFIERS = {"thm2": certify_thm2, "thm5": certify_thm5, "lemma7": certify_lemma7}
