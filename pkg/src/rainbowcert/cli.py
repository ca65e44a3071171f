"""Command-line interface.

Exit codes: 0 success or property holds, 1 usage/parse/domain error,
2 property fails (for ``verify rainbow``: a witness was found),
3 search budget ran out before a verdict.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .certify import CERTIFIERS, FAIL, INDET, PASS
from .coloring import (
    balance_profile,
    color_class_shapes,
    format_cbc,
    read_cbc,
    validate,
)
from .constructions import difference_coloring, lex_power, lex_product, round_robin
from .diffsets import (
    EXHAUSTED as PDS_EXHAUSTED,
    FOUND as PDS_FOUND,
    is_perfect_difference_set,
    pds_search,
    ppc_divisibility_screen,
    singer,
)
from .errors import CbcParseError, ConsistencyError, DomainError, ResourceError
from .render import render_dot, render_svg
from .search import find_rainbow_clique, is_rainbow_set
from .sidon import build_sidon_profile, check_size_bounds, is_2_sidon, is_weak_2_sidon

EXIT_OK, EXIT_USAGE, EXIT_FAILS, EXIT_INDETERMINATE = 0, 1, 2, 3

GLOBAL_DEFAULTS = {"threads": 1, "budget_nodes": None, "budget_seconds": None,
                   "output": None, "json": False}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _global_flags(p, suppress):
    d = argparse.SUPPRESS if suppress else None
    p.add_argument("--threads", type=int, default=d if suppress else 1,
                   help="worker processes for rainbow search (default 1)")
    p.add_argument("--budget-nodes", type=int, default=d, help="search node limit")
    p.add_argument("--budget-seconds", type=float, default=d, help="search time limit")
    p.add_argument("-o", "--output", default=d, help="output file (default stdout)")
    p.add_argument("--json", action="store_true",
                   default=d if suppress else False, help="machine-readable JSON output")


def _opt(args, name):
    return getattr(args, name, GLOBAL_DEFAULTS[name])


def _int_list(text):
    try:
        return [int(t) for t in text.split(",") if t.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    _global_flags(common, suppress=True)

    p = _Parser(prog="rainbowcert", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"rainbowcert {__version__}")
    _global_flags(p, suppress=False)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    con = sub.add_parser("construct", help="build a coloring and write it as .cbc")
    csub = con.add_subparsers(dest="family", required=True, parser_class=_Parser)
    a = csub.add_parser("round-robin", parents=[common])
    a.add_argument("--ell", type=int, required=True)
    a = csub.add_parser("difference", parents=[common])
    a.add_argument("--q", type=int, required=True)
    a = csub.add_parser("lex", parents=[common])
    a.add_argument("--left", required=True, help="outer coloring (.cbc)")
    a.add_argument("--right", required=True, help="inner coloring (.cbc)")
    a = csub.add_parser("power", parents=[common])
    a.add_argument("--base", required=True)
    a.add_argument("--k", type=int, required=True)

    ver = sub.add_parser("verify", help="check a .cbc coloring")
    vsub = ver.add_subparsers(dest="check", required=True, parser_class=_Parser)
    for name in ("valid", "balance", "shapes"):
        a = vsub.add_parser(name, parents=[common])
        a.add_argument("file")
    a = vsub.add_parser("rainbow", parents=[common])
    a.add_argument("--q", type=int, required=True)
    a.add_argument("--budget", type=int, default=None, help="alias for --budget-nodes")
    a.add_argument("file")

    cer = sub.add_parser("certify", help="certify a theorem instance")
    tsub = cer.add_subparsers(dest="theorem", required=True, parser_class=_Parser)
    for name in ("thm2", "thm5"):
        a = tsub.add_parser(name, parents=[common])
        a.add_argument("--q", type=int, required=True)
        a.add_argument("--k", type=int, default=1)
    a = tsub.add_parser("lemma7", parents=[common])
    a.add_argument("--ell", type=int, required=True)
    a.add_argument("--k", type=int, default=1)

    ren = sub.add_parser("render", parents=[common], help="draw a coloring as SVG or DOT")
    ren.add_argument("file")
    ren.add_argument("--format", choices=("svg", "dot"), default="svg")
    ren.add_argument("--layout", choices=("polygon", "product"), default="polygon")
    ren.add_argument("--block", type=int, default=None, help="block size for product layout")

    sid = sub.add_parser("sidon", help="sum-multiplicity profiles in Z_ell")
    ssub = sid.add_subparsers(dest="action", required=True, parser_class=_Parser)
    a = ssub.add_parser("check", parents=[common])
    a.add_argument("--modulus", type=int, required=True)
    a.add_argument("--set", dest="elements", type=_int_list, required=True)

    pds = sub.add_parser("pds", help="perfect difference sets")
    psub = pds.add_subparsers(dest="action", required=True, parser_class=_Parser)
    a = psub.add_parser("check", parents=[common])
    a.add_argument("--modulus", type=int, required=True)
    a.add_argument("--set", dest="elements", type=_int_list, required=True)
    a = psub.add_parser("search", parents=[common])
    a.add_argument("--q", type=int, required=True)
    a = psub.add_parser("singer", parents=[common])
    a.add_argument("--p", type=int, required=True)
    a = psub.add_parser("screen", parents=[common])
    a.add_argument("--q", type=int, required=True)
    return p


# ---------------------------------------------------------------------------

class _Out:
    """Collects human lines and JSON records, then writes one of them."""

    def __init__(self, args):
        self.json = _opt(args, "json")
        self.path = _opt(args, "output")
        self.lines = []

    def say(self, text):
        if not self.json:
            self.lines.append(text)

    def record(self, obj):
        if self.json:
            self.lines.append(json.dumps(obj, sort_keys=True))

    def flush(self):
        text = "".join(line + "\n" for line in self.lines)
        if self.path:
            Path(self.path).write_text(text)
        else:
            sys.stdout.write(text)


def _emit(args, text):
    path = _opt(args, "output")
    if path:
        Path(path).write_bytes(text.encode("utf-8"))
    else:
        sys.stdout.write(text)


def cmd_construct(args) -> int:
    fam = args.family
    if fam == "round-robin":
        c = round_robin(args.ell)
    elif fam == "difference":
        c = difference_coloring(args.q)
    elif fam == "lex":
        c = lex_product(read_cbc(args.left), read_cbc(args.right))
    else:
        c = lex_power(read_cbc(args.base), args.k)
    _emit(args, format_cbc(c))
    summary = f"n={c.n} ell={c.ell} provenance={c.provenance}"
    # keep stdout clean when it carries the .cbc text
    print(summary, file=sys.stdout if _opt(args, "output") else sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    c = read_cbc(args.file)
    out = _Out(args)
    base = {"check": args.check, "file": args.file, "n": c.n, "ell": c.ell}
    code = EXIT_OK
    if args.check == "valid":
        rep = validate(c)
        out.say("valid" if rep.valid else f"invalid: {rep.first.message}")
        out.record({**base, "holds": rep.valid,
                    "violations": [v.message for v in rep.violations]})
        code = EXIT_OK if rep.valid else EXIT_FAILS
    elif args.check == "balance":
        prof = balance_profile(c)
        if prof.is_completely_balanced:
            out.say(f"completely balanced, d={prof.d}")
        else:
            out.say(f"not completely balanced, d={prof.d}")
        out.record({**base, "holds": prof.is_completely_balanced, "d": prof.d})
        code = EXIT_OK if prof.is_completely_balanced else EXIT_FAILS
    elif args.check == "shapes":
        shapes = color_class_shapes(c)
        pm = sum(s.is_perfect_matching for s in shapes)
        tf = sum(s.is_spanning_2_regular for s in shapes)
        out.say(f"{len(shapes)} classes: {pm} perfect matchings, {tf} spanning 2-regular")
        for s in shapes:
            out.say(f"  color {s.color}: degrees {s.degree_multiset}")
        regular = all(len(s.degree_multiset) == 1 for s in shapes)
        out.record({**base, "holds": regular, "perfect_matchings": pm,
                    "spanning_2_regular": tf,
                    "classes": [{"color": s.color,
                                 "degrees": {str(k): v for k, v in s.degree_multiset.items()}}
                                for s in shapes]})
        code = EXIT_OK if regular else EXIT_FAILS
    else:
        nodes = args.budget if args.budget is not None else _opt(args, "budget_nodes")
        rep = find_rainbow_clique(c, args.q, max_nodes=nodes,
                                  max_seconds=_opt(args, "budget_seconds"),
                                  workers=_opt(args, "threads"))
        if rep.found:
            assert is_rainbow_set(c, rep.witness)
            out.say(f"witness: rainbow K_{args.q} on {list(rep.witness)}")
            code = EXIT_FAILS
        elif rep.exhausted:
            why = f" ({rep.reason})" if rep.reason else ""
            out.say(f"exhausted: no rainbow K_{args.q}{why}, {rep.nodes_explored} nodes")
        else:
            out.say(f"indeterminate: {rep.reason} after {rep.nodes_explored} nodes")
            code = EXIT_INDETERMINATE
        out.record({**base, **rep.to_dict()})
    out.flush()
    return code


def cmd_certify(args) -> int:
    fn = CERTIFIERS[args.theorem]
    key = args.ell if args.theorem == "lemma7" else args.q
    rec = fn(key, k=args.k, max_nodes=_opt(args, "budget_nodes"),
             max_seconds=_opt(args, "budget_seconds"), workers=_opt(args, "threads"))
    _emit(args, rec.to_json() + "\n")
    if _opt(args, "output"):
        print(f"{rec.status}: {args.theorem} n={rec.instance['n']} "
              f"colors={rec.instance['colors']} target={rec.instance['target']}")
    return {PASS: EXIT_OK, FAIL: EXIT_FAILS, INDET: EXIT_INDETERMINATE}[rec.status]


def cmd_render(args) -> int:
    c = read_cbc(args.file)
    fn = render_svg if args.format == "svg" else render_dot
    _emit(args, fn(c, args.layout, args.block))
    return EXIT_OK


def cmd_sidon(args) -> int:
    s = build_sidon_profile(args.modulus, args.elements)
    b = check_size_bounds(s)
    out = _Out(args)
    out.say(f"A = {list(s.elements)} in Z_{s.modulus}")
    out.say("r_A  = " + " ".join(map(str, s.r_table.tolist())))
    out.say("r'_A = " + " ".join(map(str, s.r_prime_table.tolist())))
    out.say(("2-Sidon" if is_2_sidon(s) else "not 2-Sidon") + ", "
            + ("weak 2-Sidon" if is_weak_2_sidon(s) else "not weak 2-Sidon"))
    if b.weak_bound is not None:
        out.say(f"weak 2-Sidon size bound: |A| <= {b.weak_bound} "
                f"({'n/a' if b.weak_bound_respected is None else 'ok' if b.weak_bound_respected else 'VIOLATED'})")
    out.say(f"2-Sidon size bound: |A| <= {b.sidon_bound} "
            f"({'n/a' if b.sidon_bound_respected is None else 'ok' if b.sidon_bound_respected else 'VIOLATED'})")
    out.record({"modulus": s.modulus, "elements": list(s.elements),
                "r": s.r_table.tolist(), "r_prime": s.r_prime_table.tolist(),
                "is_2_sidon": b.is_2_sidon, "is_weak_2_sidon": b.is_weak_2_sidon,
                "weak_bound": b.weak_bound, "sidon_bound": b.sidon_bound,
                "weak_bound_respected": b.weak_bound_respected,
                "sidon_bound_respected": b.sidon_bound_respected})
    out.flush()
    return EXIT_FAILS if b.violated else EXIT_OK


def cmd_pds(args) -> int:
    out = _Out(args)
    code = EXIT_OK
    if args.action in ("check", "singer"):
        ds = (is_perfect_difference_set(args.modulus, args.elements)
              if args.action == "check" else singer(args.p))
        out.say(f"A = {list(ds.elements)} in Z_{ds.modulus}: "
                + ("perfect" if ds.is_perfect else "not perfect"))
        out.record({"modulus": ds.modulus, "elements": list(ds.elements),
                    "is_perfect": ds.is_perfect,
                    "multiplicity": ds.diff_multiplicity.tolist()})
        code = EXIT_OK if ds.is_perfect else EXIT_FAILS
    elif args.action == "search":
        res = pds_search(args.q, max_nodes=_opt(args, "budget_nodes"),
                         max_seconds=_opt(args, "budget_seconds"))
        if res.outcome == PDS_FOUND:
            out.say(f"found: {list(res.elements)} in Z_{res.modulus}")
        elif res.outcome == PDS_EXHAUSTED:
            out.say(f"exhausted: none of size {res.q} in Z_{res.modulus} "
                    f"({res.nodes_explored} nodes)")
        else:
            out.say(f"indeterminate: {res.reason}")
            code = EXIT_INDETERMINATE
        out.record(res.to_dict())
    else:
        r = ppc_divisibility_screen(args.q)
        out.say(f"q={r.q}: q-1={r.order} is {r.status}; divisor hits: "
                f"{list(r.divisor_hits) or 'none'}; verdict: {r.verdict}")
        out.record({"q": r.q, "order": r.order, "status": r.status,
                    "prime_power": list(r.prime_power) if r.prime_power else None,
                    "divisor_hits": list(r.divisor_hits),
                    "hypothesis_holds": r.hypothesis_holds, "verdict": r.verdict})
    out.flush()
    return code


COMMANDS = {"construct": cmd_construct, "verify": cmd_verify, "certify": cmd_certify,
            "render": cmd_render, "sidon": cmd_sidon, "pds": cmd_pds}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except CbcParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
    except (DomainError, ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
    except ConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
