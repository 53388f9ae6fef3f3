"""Command-line front end: ``gg group | graph | conn | verify | fuzz``.

Exit codes: 0 success/agreement, 1 disagreement or check failure, 2 usage or
input error.  All randomness is seed-controlled, and ``verify``/``fuzz``
output is byte-stable for identical arguments.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .builders import (
    GraphKind,
    Reduction,
    enhanced_power_graph,
    graph_json,
    order_superpower_graph,
    power_graph,
    reduce_graph,
)
from .catalog import builtin_catalog, parse_catalog_text
from .connectivity import connectivity_report
from .families import GroupSpecError, parse_group_spec
from .graphs import GraphError, format_dot, format_edge_list, parse_edge_list
from .groups import build_group, classify_group, exponent_info, maximal_cyclic_subgroups, order_spectrum
from .theorems import TheoremId, fuzz_apex_graphs, sweep_catalog

_BUILDERS = {
    "power": power_graph,
    "enhanced": enhanced_power_graph,
    "super": order_superpower_graph,
}


_GRAMMAR = ('group expression grammar: spec := factor { "*" factor }; '
            "factor := Z(n) | E(p,k) | D(order) | Q(order) | SD(order) | S(n); "
            "D/Q/SD take the group order, so D(12) has 6 rotations. "
            "GG_ORDER_CAP overrides the default order cap of 5040.")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gg",
        description="finite-group graphs, exact connectivity, and theorem sweeps",
        epilog=_GRAMMAR)
    sub = parser.add_subparsers(dest="command", required=True)

    p_group = sub.add_parser("group", help="order/exponent/nilpotency summary of a group")
    p_group.add_argument("spec", help='group expression, e.g. "Z(2)*Z(9)"')

    p_graph = sub.add_parser("graph", help="emit a group graph")
    p_graph.add_argument("kind", choices=sorted(_BUILDERS))
    p_graph.add_argument("spec")
    p_graph.add_argument("--reduced", choices=["identity", "dominating"],
                         help="delete the identity vertex, or all dominating vertices")
    p_graph.add_argument("--format", dest="fmt", choices=["edges", "dot", "json"],
                         default="edges")
    p_graph.add_argument("--out", help="write to a file instead of stdout")

    p_conn = sub.add_parser("conn", help="connectivity report (JSON)")
    p_conn.add_argument("kind", choices=sorted(_BUILDERS) + ["file"])
    p_conn.add_argument("source", metavar="spec|path",
                        help="group expression, or an edge-list file with kind=file")

    p_verify = sub.add_parser("verify", help="sweep theorem checks over a catalog")
    p_verify.add_argument("ids", metavar="id|all",
                          help="'all', one id, or a comma-separated id list "
                               f"({', '.join(t.value for t in TheoremId)})")
    p_verify.add_argument("--catalog", help="file of group expressions (one per line)")
    p_verify.add_argument("--max-order", type=int, default=64,
                          help="family order bound; products get +8 slack (default 64)")
    p_verify.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                          help="worker processes (default: cpu count; 1 = serial)")
    p_verify.add_argument("--report", choices=["json", "table"], default="table")
    p_verify.add_argument("--timings", action="store_true",
                          help="include per-verdict wall time (breaks byte determinism)")

    p_fuzz = sub.add_parser("fuzz", help="fuzz the fast minimal-edge-connectivity "
                                         "decider on random apex graphs")
    p_fuzz.add_argument("--count", type=int, required=True)
    p_fuzz.add_argument("--seed", type=int, required=True)
    p_fuzz.add_argument("--nmin", type=int, default=4)
    p_fuzz.add_argument("--nmax", type=int, default=12)
    p_fuzz.add_argument("--p", default="1/2", help="edge probability as a rational")
    return parser


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_group(args) -> int:
    group = build_group(parse_group_spec(args.spec))
    cls = classify_group(group)
    exp, full = exponent_info(group)
    fam = maximal_cyclic_subgroups(group)
    yes = {True: "yes", False: "no"}
    lines = [
        f"group: {group.spec.render()}",
        f"order: {group.n}",
        "element orders (pi_G): " + ", ".join(map(str, order_spectrum(group))),
        f"exponent: {exp} ({'attained' if full else 'not attained'})",
        f"cyclic: {yes[cls.is_cyclic]}",
        f"abelian: {yes[cls.is_abelian]}",
        f"nilpotent: {yes[cls.is_nilpotent]}",
        f"p-group: {yes[cls.is_p_group]}" + (f" (p = {cls.p})" if cls.p else ""),
        f"elementary abelian 2-group: {yes[cls.is_elementary_abelian_2]}",
        f"prime exponent: {yes[cls.is_prime_exponent]}",
        f"nilpotent shape: {cls.nilpotent_shape.value}",
        f"maximal cyclic subgroups: {len(fam)}",
    ]
    hist = fam.size_histogram()
    lines.extend(f"  {hist[size]} of order {size}" for size in sorted(hist))
    for member in fam:
        lines.append(f"  <{group.labels[member.generator]}> = "
                     "{" + ", ".join(group.labels[e] for e in member.elements) + "}")
    print("\n".join(lines))
    return 0


def _cmd_graph(args) -> int:
    group = build_group(parse_group_spec(args.spec))
    gg = _BUILDERS[args.kind](group)
    if args.reduced:
        gg = reduce_graph(gg, Reduction(args.reduced))
    if args.fmt == "edges":
        text = format_edge_list(gg.graph)
    elif args.fmt == "dot":
        text = format_dot(gg.graph, gg.labels, name=f"{args.kind}({args.spec})")
    else:
        text = json.dumps(graph_json(gg), indent=2) + "\n"
    _emit(text, args.out)
    return 0


def _cmd_conn(args) -> int:
    if args.kind == "file":
        with open(args.source) as fh:
            graph = parse_edge_list(fh.read())
    else:
        group = build_group(parse_group_spec(args.source))
        graph = _BUILDERS[args.kind](group).graph
    report = connectivity_report(graph)
    print(json.dumps(report.to_json_dict(), indent=2))
    return 0


def _parse_ids(text: str) -> list[TheoremId]:
    if text.strip().lower() == "all":
        return list(TheoremId)
    ids = []
    for part in text.split(","):
        name = part.strip()
        try:
            ids.append(TheoremId(name))
        except ValueError:
            valid = ", ".join(t.value for t in TheoremId)
            raise GroupSpecError(f"unknown theorem id {name!r} (expected {valid})")
    return ids


def _cmd_verify(args) -> int:
    ids = _parse_ids(args.ids)
    if args.catalog:
        with open(args.catalog) as fh:
            specs = parse_catalog_text(fh.read())
    else:
        specs = builtin_catalog(args.max_order)
    result = sweep_catalog(ids, specs, max_order=args.max_order, jobs=args.jobs)
    if args.report == "json":
        for v in result.verdicts:
            print(json.dumps(v.to_json_dict(timings=args.timings)))
        for e in result.errors:
            print(json.dumps({"group": e.group, "error": e.error}))
        print(json.dumps({"summary": result.summary_dict()}))
    else:
        rows = [["theorem", "group", "kind", "applicable", "lhs", "rhs", "agree",
                 "witness"]]
        for v in result.verdicts:
            rows.append([v.theorem, v.group, v.kind or "-",
                         "yes" if v.applicable else "no",
                         _tbl(v.lhs), _tbl(v.rhs), _tbl(v.agree), v.witness or ""])
        widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
        for r in rows:
            print("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
        for e in result.errors:
            print(f"error  {e.group}  {e.error}")
        s = result.summary_dict()
        print(f"groups: {s['groups']}  verdicts: {s['verdicts']}  "
              f"agreements: {s['agreements']}  disagreements: {s['disagreements']}  "
              f"inapplicable: {s['inapplicable']}  errors: {s['errors']}")
    return 0 if result.disagreements == 0 and not result.errors else 1


def _tbl(value: bool | None) -> str:
    if value is None:
        return "-"
    return "true" if value else "false"


def _cmd_fuzz(args) -> int:
    try:
        probability = Fraction(args.p)
    except (ValueError, ZeroDivisionError):
        raise GroupSpecError(f"bad probability {args.p!r}, expected a rational like 1/2")
    if not 0 <= probability <= 1:
        raise GroupSpecError(f"probability {probability} out of [0, 1]")
    if args.count < 1 or args.nmin < 1 or args.nmax < args.nmin:
        raise GroupSpecError("need count >= 1 and 1 <= nmin <= nmax")
    summary = fuzz_apex_graphs(args.count, (args.nmin, args.nmax), probability,
                               args.seed)
    print(json.dumps(summary.to_json_dict(), indent=2))
    return 0 if summary.disagreements == 0 else 1


_COMMANDS = {
    "group": _cmd_group,
    "graph": _cmd_graph,
    "conn": _cmd_conn,
    "verify": _cmd_verify,
    "fuzz": _cmd_fuzz,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except GroupSpecError as exc:
        print(f"gg {args.command}: {exc}", file=sys.stderr)
        print(_GRAMMAR, file=sys.stderr)
        return 2
    except (GraphError, OSError) as exc:
        print(f"gg {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
