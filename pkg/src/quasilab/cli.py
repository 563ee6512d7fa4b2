"""Command-line interface.

Subcommands: check, find, analyze, construct, verify-paper.
Exit codes: 0 success / identity holds; 1 semantic failure (identity fails,
counter-model found, claim failed); 2 usage, parse or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import structure
from .abelian import recover_group, subtraction_quasigroup
from .errors import QuasilabError
from .identities import Identity, builtin, builtin_names, counterexample, holds, parse_identity
from .quasigroup import Quasigroup
from .search import SearchOptions, count as count_models, find_all
from .tables import format_table, parse_group_spec, read_table
from .verification import run_verification


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="quasilab",
        description="Finite quasigroup laboratory: identity checking, model search, structure analysis.",
    )
    p.add_argument("--max-order", type=int, default=None,
                   help="override the search/analysis order bound (env: QUASILAB_MAX_ORDER)")
    p.add_argument("--threads", type=int, default=1,
                   help="worker count; accepted for compatibility, the engine is single-process "
                        "and its output does not depend on this value")
    p.add_argument("--format", choices=("text", "json"), default="text", help="output format")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="check an identity against a Cayley table file")
    c.add_argument("table", help="path to a table in the 'order n' text format")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--identity", help=f"builtin identity name ({', '.join(builtin_names())})")
    g.add_argument("--identity-expr", help="identity as text, e.g. 'x*(y*x) = y'")

    f = sub.add_parser("find", help="enumerate quasigroups satisfying identities")
    f.add_argument("--order", type=int, required=True)
    f.add_argument("--identity", action="append", default=[], help="builtin name (repeatable)")
    f.add_argument("--identity-expr", action="append", default=[], help="identity text (repeatable)")
    f.add_argument("--up-to-iso", action="store_true", help="one representative per isomorphism class")
    f.add_argument("--limit", type=int, default=None)
    f.add_argument("--count-only", action="store_true")

    a = sub.add_parser("analyze", help="full structural report for a table file")
    a.add_argument("table")

    k = sub.add_parser("construct", help="build a group or its subtraction quasigroup")
    k.add_argument("--group", required=True, help="group spec, e.g. Z4 or Z2xZ2")
    k.add_argument("--subtraction", action="store_true", help="emit x*y = x - y instead of x + y")
    k.add_argument("--output", default=None, help="write to a file instead of stdout")

    v = sub.add_parser("verify-paper", help="run the built-in claim verification suite")
    v.add_argument("--max-autotopy-order", type=int, default=6)
    v.add_argument("--max-construction-order", type=int, default=8)
    v.add_argument("--debug-mutate-rows", default=None, metavar="R1,R2",
                   help="testing hook: swap two rows in constructed tables (must cause failures)")
    return p


def _resolve_identities(names: Sequence[str], exprs: Sequence[str]) -> list[Identity]:
    idents = [builtin(name) for name in names]
    idents.extend(parse_identity(expr) for expr in exprs)
    return idents


def _cmd_check(args) -> int:
    q = read_table(args.table)
    ident = _resolve_identities(
        [args.identity] if args.identity else [],
        [args.identity_expr] if args.identity_expr else [],
    )[0]
    cx = counterexample(q, ident)
    if args.format == "json":
        print(json.dumps({"holds": cx is None, "counterexample": cx}))
    elif cx is None:
        print("HOLDS")
    else:
        spot = ",".join(f"{v}={cx[v]}" for v in ident.vars)
        print(f"FAILS at {spot}")
    return 0 if cx is None else 1


def _cmd_find(args) -> int:
    idents = _resolve_identities(args.identity, args.identity_expr)
    opts = SearchOptions(
        order=args.order,
        identities=tuple(idents),
        up_to_isomorphism=args.up_to_iso,
        limit=args.limit,
    )
    if args.count_only:
        n = count_models(opts, max_order=args.max_order)
        print(json.dumps({"count": n}) if args.format == "json" else n)
        return 0
    models = find_all(opts, max_order=args.max_order)
    if args.format == "json":
        print(json.dumps({"count": len(models), "tables": [m.to_lists() for m in models]}))
        return 0
    blocks = [format_table(m) for m in models]
    sys.stdout.write("\n".join(blocks))
    return 0


def _analyze_report(q: Quasigroup, max_order: Optional[int]) -> dict:
    n = q.order
    units = q.unit_predicates()
    report: dict = {
        "schema": 1,
        "order": n,
        "units": {"left": units.left_unit, "right": units.right_unit, "is_loop": units.is_loop},
        "unipotent": units.is_unipotent,
        "identities": {name: holds(q, builtin(name)) for name in builtin_names()},
        "nuclei": {side: sorted(structure.nucleus(q, side)) for side in ("left", "right", "middle")},
        "core_distributive": None,
        "bol": structure.check_left_bol(q),
        "moufang": structure.check_moufang(q),
        "autotopy_count": None,
        "automorphism_count": None,
        "ga": None,
        "g": None,
        "decomposition_ok": None,
    }
    dist = structure.core_distributive(q)
    report["core_distributive"] = {"left": dist.left, "right": dist.right}
    atop_bound = max_order if max_order is not None else structure.AUTOTOPY_MAX_ORDER
    auto_bound = max_order if max_order is not None else structure.AUTOMORPHISM_MAX_ORDER
    if n <= auto_bound:
        report["automorphism_count"] = len(structure.automorphisms(q, max_order=auto_bound))
    if n <= atop_bound:
        ats = structure.autotopies(q, max_order=atop_bound)
        report["autotopy_count"] = len(ats)
        ga = structure.is_ga(q, max_order=atop_bound)
        gp = structure.is_g(q, max_order=atop_bound)
        report["ga"] = {"left_ga": ga.left_ga, "right_ga": ga.right_ga, "ga": ga.ga}
        report["g"] = {"left_g": gp.left_g, "right_g": gp.right_g}
        if report["identities"]["neumann"]:
            try:
                group = recover_group(q)
                report["decomposition_ok"] = all(
                    _try_decompose(q, t, group) for t in ats
                )
            except QuasilabError:
                report["decomposition_ok"] = False
    return report


def _try_decompose(q, t, group) -> bool:
    try:
        structure.decompose_autotopy(q, t, group=group)
        return True
    except QuasilabError:
        return False


def _cmd_analyze(args) -> int:
    q = read_table(args.table)
    report = _analyze_report(q, args.max_order)
    indent = 2 if args.format == "text" else None
    print(json.dumps(report, indent=indent))
    return 0


def _cmd_construct(args) -> int:
    g = parse_group_spec(args.group)
    if args.subtraction:
        q = subtraction_quasigroup(g)
        comment = f"group: {g.label} (subtraction, x*y = x - y)"
    else:
        q = Quasigroup(g.table, label=g.label)
        comment = f"group: {g.label}"
    text = format_table(q, comments=[comment])
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    mutate = None
    if args.debug_mutate_rows:
        r1, r2 = (int(v) for v in args.debug_mutate_rows.split(","))
        mutate = (r1, r2)
    report = run_verification(
        max_order=args.max_order if args.max_order is not None else 5,
        max_autotopy_order=args.max_autotopy_order,
        max_construction_order=args.max_construction_order,
        mutate_rows=mutate,
    )
    sys.stdout.write(report.to_json() if args.format == "json" else report.to_text())
    return 0 if report.overall else 1


_HANDLERS = {
    "check": _cmd_check,
    "find": _cmd_find,
    "analyze": _cmd_analyze,
    "construct": _cmd_construct,
    "verify-paper": _cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be >= 1")
    try:
        return _HANDLERS[args.command](args)
    except QuasilabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
