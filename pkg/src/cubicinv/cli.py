"""Command-line surface: classify, verify, sweep, export, witness.

Exit codes: 0 success / membership; 2 parameter or usage errors; 10 a
classify query answered NOT_IN_C; 11 NOT_VERTEX_TRANSITIVE or
NOT_APPLICABLE; 20 a verification found a mismatch or an invalid witness.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .aut_search import analyze_aut, edge_orbit_pattern, is_vertex_transitive
from .classifier import Status, resolve_redirects
from .explicit_autos import (
    AlphaCase,
    BranchTag,
    PreconditionError,
    SigmaCase,
    ThetaCase,
    branch_of,
    build_alpha,
    build_f,
    build_girth4_involution,
    build_sigma,
    build_theta,
)
from .families import Family, FamilyParams, ParamError, build, htg_iso_g, normalize, parse_params
from .graph_core import (
    canonical_factorization,
    color_edges,
    is_automorphism,
    is_isomorphism,
    to_dot,
    to_edge_list,
    to_record,
)
from .families import build_htg, build_mo
from .oracle import OracleSizeError, is_f12_invariant_canonical, is_f12_invariant_exhaustive
from .sweep import SweepConfig, run_sweep, write_report

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NOT_IN_C = 10
EXIT_NOT_APPLICABLE = 11
EXIT_MISMATCH = 20


def _status_exit(status: Status) -> int:
    if status is Status.IN_C:
        return EXIT_OK
    if status is Status.NOT_IN_C:
        return EXIT_NOT_IN_C
    return EXIT_NOT_APPLICABLE


def cmd_classify(args) -> int:
    verdict = resolve_redirects(parse_params(args.params))
    sys.stdout.write(verdict.record())
    return _status_exit(verdict.status)


def cmd_verify(args) -> int:
    params = normalize(parse_params(args.params))
    verdict = resolve_redirects(params)
    g = build(params)
    aut = analyze_aut(g)
    vt = is_vertex_transitive(g, aut)
    canon_two = canonical_factorization(g).two_equal_cycles
    canon_inv = is_f12_invariant_canonical(g, aut) if vt and canon_two else None

    print(f"params: {params}")
    print(f"classifier: {verdict.status.value}"
          + (f" ({verdict.reason.value})" if verdict.reason else ""))
    print(f"aut_order: {aut.order}")
    if args.generators:
        for p in aut.generators:
            print(f"generator: {p.cycle_string()}")
    print(f"vertex_transitive: {_fmt(vt)}")
    print(f"canonical_two_cycles: {_fmt(canon_two)}")
    pattern = ""
    if params.tag is Family.MO:
        from .classifier import is_feasible

        if is_feasible(params.n, params.a, params.b):
            fmap = build_f(params.n, params.a, params.b,
                           branch_of(params.n, params.a, params.b))
            pattern = edge_orbit_pattern(g, color_edges(g, fmap), aut).value
    print(f"edge_pattern: {pattern or '-'}")
    print(f"canonical_invariant: {_fmt(canon_inv)}")
    if args.exhaustive:
        exh = is_f12_invariant_exhaustive(g, aut)
        print(f"exhaustive_invariant: {_fmt(exh)}")
    if vt and canon_two:
        agree = (verdict.status is Status.IN_C) == canon_inv
        if args.exhaustive:
            agree = agree and exh == canon_inv
    else:
        agree = verdict.status is not Status.IN_C
        if args.exhaustive and exh and vt:
            agree = False
    print(f"agreement: {_fmt(agree)}")
    return EXIT_OK if agree else EXIT_MISMATCH


def _fmt(val) -> str:
    if val is None:
        return "-"
    return "true" if val else "false"


def cmd_sweep(args) -> int:
    families = tuple(f.strip().lower() for f in args.families.split(",") if f.strip())
    for f in families:
        if f not in ("gp", "htg", "mo"):
            raise ParamError(f"unknown family {f!r} (choose from gp,htg,mo)")
    if args.exhaustive_cap > 32:
        raise ParamError("exhaustive cap is limited to 32 vertices")
    cfg = SweepConfig(
        max_n=args.max_n,
        families=families,
        gp_max_n=args.gp_max_n,
        exhaustive_cap=args.exhaustive_cap,
        jobs=args.jobs,
    )
    result = run_sweep(cfg)
    if args.out:
        with open(args.out, "w") as fh:
            write_report(result, fh)
    else:
        write_report(result, sys.stdout)
    sys.stderr.write(
        f"{len(result.rows)} rows, {result.mismatches} mismatches, "
        f"{result.elapsed:.1f}s\n"
    )
    return EXIT_OK if result.mismatches == 0 else EXIT_MISMATCH


def cmd_export(args) -> int:
    params = parse_params(args.params)
    g = build(params)
    coloring = None
    if args.color:
        if params.tag is not Family.MO:
            raise ParamError("--color needs an MO parameter set")
        from .classifier import is_feasible

        n, a, b = params.n, params.a, params.b
        if not is_feasible(n, a, b):
            raise ParamError(
                f"{params} admits no canonical edge coloring (infeasible parameters)"
            )
        coloring = color_edges(g, build_f(n, a, b, branch_of(n, a, b)))
    if args.format == "edges":
        text = to_edge_list(g)
    elif args.format == "dot":
        name = str(params).replace("(", "_").replace(")", "").replace(",", "_")
        text = to_dot(g, name=name, coloring=coloring)
    else:
        text = to_record(g, str(params))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_witness(args) -> int:
    kind = args.builder
    vals = args.values
    if kind == "f":
        _need(vals, 3, "f takes n a b")
        n, a, b = vals
        branch = BranchTag[args.case + "_BRANCH"] if args.case else branch_of(n, a, b)
        if branch is None:
            raise ParamError("neither branch congruence holds")
        perm = build_f(n, a, b, branch)
        graph = build_mo(n, a, b)
        label = f"f[{branch.value}]({n},{a},{b})"
        valid = is_automorphism(graph, perm)
    elif kind == "girth4":
        _need(vals, 1, "girth4 takes n")
        n = vals[0]
        perm = build_girth4_involution(n)
        graph = build_mo(n, 1, n // 2 + 3)
        label = f"girth4({n},1,{n // 2 + 3})"
        valid = is_automorphism(graph, perm)
    elif kind == "alpha":
        _need(vals, 3, "alpha takes n a b")
        n, a, b = vals
        case = AlphaCase[args.case] if args.case else _first_case(AlphaCase, n, a, b)
        perm = build_alpha(n, a, b, case)
        graph = build_mo(n, a, b)
        label = f"alpha[{case.value}]({n},{a},{b})"
        valid = is_automorphism(graph, perm)
    elif kind == "theta":
        _need(vals, 3, "theta takes n a b")
        n, a, b = vals
        case = ThetaCase[args.case] if args.case else _first_case(ThetaCase, n, a, b)
        perm = build_theta(n, a, b, case)
        graph = build_mo(n, a, b)
        label = f"theta[{case.value}]({n},{a},{b})"
        valid = is_automorphism(graph, perm)
    elif kind == "sigma":
        _need(vals, 3, "sigma takes n a b")
        n, a, b = vals
        case = SigmaCase[args.case] if args.case else _first_case(SigmaCase, n, a, b)
        perm = build_sigma(n, a, b, case)
        graph = build_mo(n, a, b)
        label = f"sigma[{case.value}]({n},{a},{b})"
        valid = is_automorphism(graph, perm)
    elif kind == "htg-iso":
        _need(vals, 2, "htg-iso takes n a")
        n, a = vals
        perm = htg_iso_g(n, a)
        label = f"htg-iso({n},{a})"
        valid = is_isomorphism(build_mo(n, a, a + 2), build_htg(n, a + 1), perm)
    else:
        raise ParamError(f"unknown builder {kind!r}")
    print(f"witness: {label}")
    print(f"permutation: {perm.cycle_string()}")
    print(f"valid: {_fmt(valid)}")
    return EXIT_OK if valid else EXIT_MISMATCH


def _need(vals, count, msg) -> None:
    if len(vals) != count:
        raise ParamError(msg)


def _first_case(case_enum, n, a, b):
    from .explicit_autos import (
        alpha_preconditions_hold,
        sigma_preconditions_hold,
        theta_preconditions_hold,
    )

    pred = {
        AlphaCase: alpha_preconditions_hold,
        ThetaCase: theta_preconditions_hold,
        SigmaCase: sigma_preconditions_hold,
    }[case_enum]
    for case in case_enum:
        if pred(n, a, b, case):
            return case
    raise ParamError(f"no {case_enum.__name__} preconditions hold for ({n},{a},{b})")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubicinv",
        description="Classify and verify invariant one-factor/two-cycle partitions "
        "of cubic vertex-transitive graphs",
    )
    parser.add_argument("--version", action="version", version=f"cubicinv {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a parameter set")
    p.add_argument("params", help='e.g. "MO(16,3,9)", "GP(5,2)", "HTG(16,4)"')
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="compare classifier against the brute-force oracle")
    p.add_argument("params")
    p.add_argument("--exhaustive", action="store_true",
                   help="also run the all-factorizations oracle (<= 32 vertices)")
    p.add_argument("--generators", action="store_true",
                   help="print an automorphism generating set in cycle notation")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="exhaustive agreement sweep over parameter space")
    p.add_argument("--max-n", type=int, default=40)
    p.add_argument("--gp-max-n", type=int, default=24,
                   help="separate bound for the GP family (default 24)")
    p.add_argument("--families", default="gp,htg,mo")
    p.add_argument("--exhaustive-cap", type=int, default=32,
                   help="vertex cap for the all-factorizations oracle")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default=None, help="report file (default stdout)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("export", help="export a graph")
    p.add_argument("params")
    p.add_argument("--format", choices=("edges", "dot", "record"), default="edges")
    p.add_argument("--color", action="store_true",
                   help="attach the canonical red/blue/green classes (feasible MO only)")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("witness", help="build an explicit automorphism and validate it")
    p.add_argument("builder", choices=("f", "girth4", "alpha", "theta", "sigma", "htg-iso"))
    p.add_argument("values", type=int, nargs="*")
    p.add_argument("--case", default=None,
                   help="branch/case tag (A/B, BLUE/GREEN, BR/GR, BR_BLUE, ...)")
    p.set_defaults(func=cmd_witness)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ParamError, PreconditionError, OracleSizeError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
