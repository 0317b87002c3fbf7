"""Command-line front end.

Exit codes: 0 success, 1 usage / parse / refused input, 2 internal
invariant violation (including disagreement between the CI deciders).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import census as census_mod
from .errors import InvariantError, PosetError
from .gamma import build_gamma, degree_profile, to_dot
from .hilbert import hilbert_brute, hilbert_ci, linear_extensions_brute, linear_extensions_ci
from .ideals import connected_order_ideals, order_ideals
from .poset import Poset, format_poset, parse_poset
from .presentation import CiReport, binomial_generators, check_ci, format_binomial
from .recognizer import format_tree, to_json


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


class _Refusal(Exception):
    pass


def _load(path: str) -> Poset:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _Refusal(f"cannot read {path}: {exc.strerror}") from None
    return parse_poset(text)


def _poset_json(P: Poset) -> dict:
    return {"n": P.n, "covers": [list(c) for c in P.covers]}


def _emit(obj: dict) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _ci_json(report: CiReport) -> dict:
    return {
        "graph": {"is_ci": report.graph.is_ci, "max_degree": report.graph.detail},
        "count": {"is_ci": report.count.is_ci, **report.count.detail},
        "recognizer": {"is_ci": report.recognizer.is_ci},
    }


def _hilbert(P: Poset, degree: int, method: str) -> list[int]:
    if method == "brute":
        return hilbert_brute(P, degree)
    if method == "ci":
        return hilbert_ci(P, degree)
    brute, ci = hilbert_brute(P, degree), hilbert_ci(P, degree)
    if brute != ci:
        raise InvariantError(f"Hilbert series disagree: brute {brute} vs ci {ci}")
    return brute


def _extensions(P: Poset, method: str) -> int:
    if method == "brute":
        return linear_extensions_brute(P)
    if method == "ci":
        return linear_extensions_ci(P)
    brute, ci = linear_extensions_brute(P), linear_extensions_ci(P)
    if brute != ci:
        raise InvariantError(f"extension counts disagree: brute {brute} vs ci {ci}")
    return brute


def cmd_ideals(args) -> None:
    P = _load(args.poset)
    ideals = order_ideals(P) if args.all else connected_order_ideals(P)
    if args.json:
        _emit({"poset": _poset_json(P), "ideals": [list(J.elements) for J in ideals]})
    else:
        for J in ideals:
            print(J)


def cmd_gamma(args) -> None:
    P = _load(args.poset)
    G = build_gamma(P)
    if args.dot:
        sys.stdout.write(to_dot(G))
    elif args.json:
        _emit({"poset": _poset_json(P), "gamma": _gamma_json(G)})
    else:
        print(f"vertices {len(G.vertices)}")
        print(f"edges {len(G.edges)}")
        for i, j in G.edges:
            print(f"{G.vertices[i]} -- {G.vertices[j]}")
        print("degrees " + ",".join(map(str, degree_profile(G))))


def _gamma_json(G) -> dict:
    return {
        "vertices": [list(J.elements) for J in G.vertices],
        "edges": [list(e) for e in G.edges],
        "degrees": list(G.degrees),
    }


def cmd_present(args) -> None:
    P = _load(args.poset)
    G = build_gamma(P)
    lines = [format_binomial(b, list(G.vertices)) for b in binomial_generators(P, G)]
    if args.json:
        _emit({"poset": _poset_json(P), "binomials": lines})
    else:
        for line in lines:
            print(line)


def cmd_check_ci(args) -> None:
    P = _load(args.poset)
    report = check_ci(P)
    if args.json:
        _emit({"poset": _poset_json(P), "ci": _ci_json(report)})
        return
    d = report.count.detail
    print(f"graph: {str(report.graph.is_ci).lower()} (max degree {report.graph.detail})")
    print(f"count: {str(report.count.is_ci).lower()} (m={d['m']} s={d['s']} r={d['r']})")
    print(f"recognizer: {str(report.recognizer.is_ci).lower()}")
    print(f"complete intersection: {str(report.is_ci).lower()}")


def cmd_recognize(args) -> None:
    P = _load(args.poset)
    cert = check_ci(P).certificate
    if args.json:
        _emit({"poset": _poset_json(P), "certificate": None if cert is None else to_json(cert)})
    elif cert is None:
        print("NOT-FWD")
    else:
        sys.stdout.write(format_tree(cert))


def cmd_hilbert(args) -> None:
    P = _load(args.poset)
    coeffs = _hilbert(P, args.degree, args.method)
    if args.json:
        _emit({"poset": _poset_json(P), "hilbert": coeffs})
    else:
        print(",".join(map(str, coeffs)))


def cmd_extensions(args) -> None:
    P = _load(args.poset)
    e = _extensions(P, args.method)
    if args.json:
        _emit({"poset": _poset_json(P), "extensions": e})
    else:
        print(e)


def cmd_analyze(args) -> None:
    P = _load(args.poset)
    G = build_gamma(P)
    report = check_ci(P, G)
    method = "both" if report.is_ci else "brute"
    _emit({
        "poset": _poset_json(P),
        "ideals": [list(J.elements) for J in G.vertices],
        "gamma": _gamma_json(G),
        "binomials": [format_binomial(b, list(G.vertices)) for b in binomial_generators(P, G)],
        "ci": _ci_json(report),
        "certificate": None if report.certificate is None else to_json(report.certificate),
        "hilbert": _hilbert(P, args.degree, method),
        "extensions": _extensions(P, method),
    })


def cmd_census(args) -> None:
    rows = census_mod.census(args.n, jobs=args.jobs, iso=args.up_to_iso)
    text = census_mod.CSV_HEADER + "\n" + "".join(r.csv() + "\n" for r in rows)
    if args.csv:
        Path(args.csv).write_text(text, encoding="utf-8")
        n_ci = sum(r.ci for r in rows)
        print(f"{len(rows)} posets, {n_ci} complete intersections -> {args.csv}")
    else:
        sys.stdout.write(text)


def cmd_random(args) -> None:
    posets = census_mod.random_posets(args.n, args.p, args.seed, args.count)
    if args.json:
        _emit({"posets": [_poset_json(P) for P in posets]})
        return
    for k, P in enumerate(posets):
        if k:
            print()
        print(f"# seed {args.seed} index {k}")
        sys.stdout.write(format_poset(P))


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return value


def _probability(text: str) -> float:
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError("probability must lie in [0, 1]")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pposet", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def poset_cmd(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--poset", required=True, metavar="PATH")
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.set_defaults(func=func)
        return p

    p = poset_cmd("ideals", cmd_ideals, "list connected order ideals")
    p.add_argument("--all", action="store_true", help="list every non-empty order ideal")
    p = poset_cmd("gamma", cmd_gamma, "the intersection graph on connected ideals")
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    poset_cmd("present", cmd_present, "binomial generators of the presentation ideal")
    poset_cmd("check-ci", cmd_check_ci, "run the three complete-intersection deciders")
    poset_cmd("recognize", cmd_recognize, "forest-with-duplication certificate")
    for name, func in (("hilbert", cmd_hilbert), ("extensions", cmd_extensions)):
        p = poset_cmd(name, func, f"{name} via brute force and/or the CI closed form")
        p.add_argument("--method", choices=("brute", "ci", "both"), default="brute")
        if name == "hilbert":
            p.add_argument("--degree", type=int, default=8)
    p = poset_cmd("analyze", cmd_analyze, "all analyses as one JSON document")
    p.add_argument("--degree", type=int, default=8)

    p = sub.add_parser("census", help="analyze every labeled poset on n elements")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--up-to-iso", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("random", help="seeded random posets")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=_probability, required=True)
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_random)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except InvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except (PosetError, ValueError, _Refusal) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
