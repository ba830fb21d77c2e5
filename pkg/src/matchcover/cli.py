"""Command-line interface.

Exit codes: 0 success, 2 usage error, 3 incomplete enumeration,
4 unverified claim under --strict.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from . import __version__
from .constructions import (
    CyclePart,
    StarPart,
    build_chain,
    build_cycle_cl,
    build_qr,
    build_star_xs,
    chromatic_index_exact,
    complete_graph,
    petersen,
    splice,
    verify_certificate,
)
from .errors import (
    DimensionTooLargeError,
    IncompleteEnumerationError,
    MatchcoverError,
    NotMatchingCoveredError,
)
from .feasibility import (
    is_switch_equiv_empty,
    is_switch_equiv_full,
    nf_star_report,
    parity_spaces,
)
from .formats import (
    certificate_to_json_obj,
    decomposition_to_json_obj,
    read_graph,
)
from .graph import Graph, is_bipartite, is_connected, vertex_connectivity_at_least
from .ears import classify_nf_star, find_ear_decomposition, find_single_ear_decomposition, validate_decomposition
from .matching import enumerate_perfect_matchings, is_matching_covered
from .suites import SUITES, run_suite

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INCOMPLETE = 3
EXIT_UNVERIFIED = 4


@dataclass
class AnalysisReport:
    n: int
    m: int
    connected: bool
    bipartite: bool
    matching_covered: bool
    pm_count: int
    pm_enumeration_complete: bool
    dims: Optional[dict]
    nf_star_empty: Optional[bool]
    nf_star_witness: Optional[list]
    regularity: Optional[int]
    vertex_connectivity_checked: Optional[int]
    chromatic_index: Optional[int]

    def to_json_obj(self) -> dict:
        return {"schema_version": 1, **self.__dict__}


def analyze_graph(g: Graph, max_pms: int = 1_000_000,
                  with_chromatic_index: bool = True) -> AnalysisReport:
    connected = is_connected(g)
    bip = is_bipartite(g).bipartite
    mc = is_matching_covered(g, cap=max_pms)
    enum = enumerate_perfect_matchings(g, cap=max_pms)
    dims = nfe = wit = None
    if mc.covered and enum.complete:
        ps = parity_spaces(g, cap=max_pms)
        rep = nf_star_report(g, ps=ps)
        d, nf, cut, e_in_cut = ps.dims
        dims = {"D": d, "nF": nf, "cut": cut, "E_in_cut": e_in_cut}
        nfe = rep.empty
        wit = sorted(rep.witness.ids()) if rep.witness is not None else None
    reg = g.is_regular()
    conn = None
    if reg is not None and g.n >= 2:
        k = 0
        while k < reg and vertex_connectivity_at_least(g, k + 1).ok:
            k += 1
        conn = k
    chi = None
    if with_chromatic_index and g.m:
        chi = chromatic_index_exact(g)
    return AnalysisReport(g.n, g.m, connected, bip, mc.covered,
                          len(enum.matchings), enum.complete, dims,
                          nfe, wit, reg, conn, chi)


def _emit(obj, as_json: bool) -> None:
    if as_json:
        print(json.dumps(obj, indent=2))
    else:
        for k, v in obj.items():
            print(f"{k}: {v}")


def cmd_analyze(args) -> int:
    g = read_graph(args.file, args.format)
    rep = analyze_graph(g, max_pms=args.max_pms)
    _emit(rep.to_json_obj(), args.json)
    return EXIT_OK if rep.pm_enumeration_complete else EXIT_INCOMPLETE


def cmd_feasible(args) -> int:
    g = read_graph(args.file, args.format)
    ids = [int(t) for t in args.edges.split(",")] if args.edges else []
    x = g.edge_set(ids)
    ps = parity_spaces(g, cap=args.max_pms)
    out = {"edges": sorted(x.ids())}
    try:
        from .feasibility import is_feasible
        feas = is_feasible(g, x, ps)
    except IncompleteEnumerationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCOMPLETE
    out["feasible"] = feas
    if not feas:
        if is_switch_equiv_empty(g, x):
            out["switching_class"] = "empty-class"
        elif is_switch_equiv_full(g, x):
            out["switching_class"] = "full-class"
        else:
            out["switching_class"] = "nf-star"
    _emit(out, args.json)
    return EXIT_OK


def _build_certificate(args):
    if args.family == "qr":
        return build_qr(args.r)
    if args.family == "petersen":
        g = petersen()
        from .constructions import ConstructionCertificate
        return ConstructionCertificate(
            "petersen", {}, g, 3, 3, None, (),
            nf_star_report(g).witness, {})
    if args.family == "splice":
        g1 = read_graph(args.g1, args.format) if args.g1 else complete_graph(4)
        g2 = read_graph(args.g2, args.format) if args.g2 else complete_graph(4)
        return splice(g1, args.e1, g2, args.e2)
    base = build_qr(args.r)
    if args.family == "chain":
        from .constructions import ChainPart
        eq = base.graph.edge_set((base.labels["a1a2"], base.labels["b1b2"]))
        parts = [ChainPart(base.graph, base.labels["a1a2"],
                           base.labels["b1b2"], eq, base.coloring)
                 for _ in range(args.k)]
        return build_chain(parts)
    if args.family == "cycle":
        parts = [CyclePart(base.graph, base.labels["a1a2"],
                           base.labels["b1b2"], base.coloring)
                 for _ in range(args.k)]
        return build_cycle_cl(parts)
    if args.family == "star":
        parts = [StarPart(base.graph, base.coloring) for _ in range(args.k)]
        return build_star_xs(parts)
    raise MatchcoverError(f"unknown family {args.family}")


def cmd_construct(args) -> int:
    cert = _build_certificate(args)
    claims = verify_certificate(cert)
    obj = certificate_to_json_obj(cert, claims)
    text = json.dumps(obj, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if any(c.ok is False for c in claims):
        print("error: a claim failed verification", file=sys.stderr)
        return EXIT_UNVERIFIED
    if args.strict and any(c.ok is None for c in claims):
        print("error: unverified claim in strict mode", file=sys.stderr)
        return EXIT_UNVERIFIED
    return EXIT_OK


def cmd_decompose(args) -> int:
    g = read_graph(args.file, args.format)
    if args.single_only:
        outcome = find_single_ear_decomposition(g)
        d = outcome.decomposition
        if d is None:
            _emit({"single_ear_decomposition": None,
                   "odd_cycle": list(outcome.odd_cycle or ())}, args.json)
            return EXIT_OK
    else:
        d = find_ear_decomposition(g)
        if d is None:
            print("error: no ear decomposition found within budget",
                  file=sys.stderr)
            return EXIT_INCOMPLETE
    val = validate_decomposition(g, d)
    obj = decomposition_to_json_obj(d)
    obj["valid"] = bool(val)
    try:
        cls = classify_nf_star(g, d)
        obj["nf_star"] = {"empty": cls.empty, "rule": cls.rule,
                          "detail": cls.detail}
    except (DimensionTooLargeError, IncompleteEnumerationError) as exc:
        obj["nf_star"] = {"empty": None, "rule": "refused",
                          "detail": str(exc)}
    print(json.dumps(obj, indent=2))
    return EXIT_OK


def cmd_verify(args) -> int:
    rep = run_suite(args.suite, max_n=args.max_n, seed=args.seed,
                    trials=args.trials)
    print(json.dumps(rep.to_json_obj(), indent=2))
    return EXIT_OK if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="matchcover",
        description="Exact analysis of feasible edge sets in "
                    "matching-covered graphs")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def add_io(sp):
        sp.add_argument("file")
        sp.add_argument("--format", choices=["graph6", "edgelist", "json"])
        sp.add_argument("--max-pms", type=int, default=1_000_000)
        sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("analyze", help="full structural report")
    add_io(sp)
    sp.set_defaults(fn=cmd_analyze)

    sp = sub.add_parser("feasible", help="classify one edge set")
    add_io(sp)
    sp.add_argument("--edges", required=True,
                    help="comma-separated edge ids, e.g. 0,3,5")
    sp.set_defaults(fn=cmd_feasible)

    sp = sub.add_parser("construct", help="build a certified family instance")
    sp.add_argument("family",
                    choices=["qr", "petersen", "splice", "chain", "cycle",
                             "star"])
    sp.add_argument("--r", type=int, default=4)
    sp.add_argument("--k", type=int, default=3,
                    help="number of parts for chain/cycle/star")
    sp.add_argument("--g1")
    sp.add_argument("--g2")
    sp.add_argument("--e1", type=int, default=0)
    sp.add_argument("--e2", type=int, default=0)
    sp.add_argument("--format", choices=["graph6", "edgelist", "json"])
    sp.add_argument("--out")
    sp.add_argument("--strict", action="store_true")
    sp.set_defaults(fn=cmd_construct)

    sp = sub.add_parser("decompose", help="find and classify an ear decomposition")
    add_io(sp)
    sp.add_argument("--single-only", action="store_true")
    sp.set_defaults(fn=cmd_decompose)

    sp = sub.add_parser("verify", help="run a property-verification suite")
    sp.add_argument("suite", choices=sorted(SUITES))
    sp.add_argument("--max-n", type=int, default=24)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=100)
    sp.set_defaults(fn=cmd_verify)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IncompleteEnumerationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCOMPLETE
    except NotMatchingCoveredError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MatchcoverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
