"""Command-line interface.

Subcommands: compute, family, tables, reduce, verify. Exit codes: 0 on
success, 1 for usage errors, 2 for input errors, 3 when verification finds
a bound violation. Output is byte-stable for fixed inputs and flags.
"""

from __future__ import annotations

import argparse
import json
import sys

from .enumeration import MAX_ORDER, verify_bounds
from .families import (
    FamilySpec,
    ga_spq4_closed,
    ga_srk3_closed,
    ga_sn3_closed,
    make_family,
    table_ab,
    table_cd,
    TABLE_AB_COLS,
    TABLE_AB_ROWS,
    TABLE_CD_COLS,
    TABLE_CD_ROWS,
)
from .graph import GraphError, find_cycle, format_edge_list, is_connected, is_unicyclic, parse_edge_list
from .indices import ag_index, edge_contribution, ga_index
from .transforms import SmallOrderError, reduction_pipeline, set_runtime_checks

USAGE_ERROR = 1
INPUT_ERROR = 2
VERIFICATION_FAILURE = 3

_SMALL_ORDER_NOTES = {
    "C3": "C_3 is the unique unicyclic graph on 3 vertices; GA = 3 meets both bounds",
    "C4": "C_4 attains the upper bound GA = 4 on 4 vertices",
    "paw": "the paw graph attains the lower bound on 4 vertices",
}


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _load_graph(path: str):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc}") from exc
    return parse_edge_list(text)


def _cmd_compute(args) -> int:
    g = _load_graph(args.path)
    if not g.edges:
        raise GraphError("graph has no edges; GA is undefined")
    if not is_connected(g):
        print("warning: graph is disconnected", file=sys.stderr)
    contribs = sorted(
        (edge_contribution(g, e) for e in g.edges),
        key=lambda c: (c.rd, c.edge),
    )
    girth = find_cycle(g).girth if is_unicyclic(g) else None
    if args.format == "json":
        _emit(_json_text({
            "n": g.n,
            "m": g.m,
            "connected": is_connected(g),
            "girth": girth,
            "ga": round(ga_index(g), 9),
            "ag": round(ag_index(g), 9),
            "edges": [
                {"u": c.edge[0], "v": c.edge[1], "du": c.du, "dv": c.dv,
                 "rd": round(c.rd, 9), "ga": round(c.ga, 9)}
                for c in contribs
            ],
        }), args.out)
    elif args.format == "csv":
        lines = ["u,v,du,dv,rd,ga"]
        lines.extend(f"{c.edge[0]},{c.edge[1]},{c.du},{c.dv},{c.rd:.9f},{c.ga:.9f}"
                     for c in contribs)
        _emit("\n".join(lines) + "\n", args.out)
    else:
        lines = [
            f"n = {g.n}",
            f"m = {g.m}",
            f"GA = {ga_index(g):.9f}",
            f"AG = {ag_index(g):.9f}",
        ]
        if girth is not None:
            lines.append(f"girth = {girth}")
        lines.append("edge   du dv  rd          GA_e")
        lines.extend(
            f"{c.edge[0]:>2}-{c.edge[1]:<2}  {c.du:>2} {c.dv:>2}  {c.rd:<10.6f}  {c.ga:.9f}"
            for c in contribs
        )
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_family(args) -> int:
    try:
        spec = FamilySpec(args.name, tuple(args.params))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    g = make_family(spec)
    if args.format == "json":
        if spec.family == "cycle":
            closed = float(spec.n)
        elif spec.family == "sn3":
            closed = ga_sn3_closed(spec.n)
        elif spec.family == "spq4":
            closed = ga_spq4_closed(*spec.params)
        else:
            closed = ga_srk3_closed(*spec.params)
        _emit(_json_text({
            "family": spec.family,
            "params": list(spec.params),
            "n": g.n,
            "edges": [list(e) for e in sorted(g.edges)],
            "ga": round(ga_index(g), 9),
            "ga_closed_form": round(closed, 9),
        }), args.out)
    else:
        _emit(format_edge_list(g), args.out)
    return 0


def _parse_range(text: str, what: str) -> tuple[int, int]:
    parts = text.split(":")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise ValueError(f"bad {what} range {text!r}, expected A or A:B") from None
    if lo > hi:
        raise ValueError(f"bad {what} range {text!r}: empty")
    return lo, hi


def _cmd_tables(args) -> int:
    try:
        if args.which == 1:
            rows = _parse_range(args.rows, "row") if args.rows else (TABLE_AB_ROWS[0], TABLE_AB_ROWS[-1])
            cols = _parse_range(args.cols, "column") if args.cols else (TABLE_AB_COLS[0], TABLE_AB_COLS[-1])
            if rows[0] < 0 or cols[0] < 0:
                raise ValueError("table 1 needs p >= q >= 0")
            data = table_ab(range(rows[0], rows[1] + 1), range(cols[0], cols[1] + 1))
            head, a_name, b_name = "p", "A", "B"
        else:
            rows = _parse_range(args.rows, "row") if args.rows else (TABLE_CD_ROWS[0], TABLE_CD_ROWS[-1])
            cols = _parse_range(args.cols, "column") if args.cols else (TABLE_CD_COLS[0], TABLE_CD_COLS[-1])
            if rows[0] < 1 or cols[0] < 1:
                raise ValueError("table 2 needs r >= k >= 1")
            data = table_cd(range(rows[0], rows[1] + 1), range(cols[0], cols[1] + 1))
            head, a_name, b_name = "r", "C", "D"
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR

    col_values = list(range(cols[0], cols[1] + 1))
    if args.format == "json":
        rows_out = []
        for row, cells in data:
            entry = {head: row}
            for c in col_values:
                pair = cells[c]
                entry[f"{a_name}({c})"] = None if pair is None else round(pair[0], 4)
                entry[f"{b_name}({c})"] = None if pair is None else round(pair[1], 4)
            rows_out.append(entry)
        _emit(_json_text({"table": args.which, "rows": rows_out}), args.out)
        return 0

    col_var = "q" if args.which == 1 else "k"
    header = [head]
    for c in col_values:
        header.append(f"{a_name}({col_var}={c})")
        header.append(f"{b_name}({col_var}={c})")
    body = []
    for row, cells in data:
        line = [str(row)]
        for c in col_values:
            pair = cells[c]
            if pair is None:
                line.extend(["-", "-"])
            else:
                line.extend([f"{pair[0]:.4f}", f"{pair[1]:.4f}"])
        body.append(line)
    if args.format == "text":
        widths = [max(len(header[i]), *(len(r[i]) for r in body)) for i in range(len(header))]
        lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
        lines.extend("  ".join(x.ljust(w) for x, w in zip(r, widths)) for r in body)
        _emit("\n".join(lines) + "\n", args.out)
    else:
        lines = [",".join(header)]
        lines.extend(",".join(r) for r in body)
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_reduce(args) -> int:
    g = _load_graph(args.path)
    if not is_unicyclic(g):
        raise GraphError("input graph is not unicyclic")
    try:
        set_runtime_checks(args.tol)
        try:
            trace = reduction_pipeline(g)
        finally:
            set_runtime_checks(None)
    except SmallOrderError as exc:
        note = _SMALL_ORDER_NOTES[exc.case]
        if args.format == "json":
            _emit(_json_text({
                "n": exc.n,
                "small_order_case": exc.case,
                "note": note,
                "ga": round(ga_index(g), 9),
            }), args.out)
        else:
            _emit(f"small-order case {exc.case}: {note}\nGA = {ga_index(g):.9f}\n", args.out)
        return 0
    if args.format == "json":
        _emit(trace.to_json(include_edges=args.trace), args.out)
    else:
        _emit(trace.to_text(include_edges=args.trace), args.out)
    return 0


def _cmd_verify(args) -> int:
    try:
        lo, hi = _parse_range(args.orders.replace("..", ":"), "order")
        if lo < 3:
            raise ValueError(f"orders start at 3, got {lo}")
        if hi > MAX_ORDER:
            raise ValueError(f"range too large: enumeration is capped at n = {MAX_ORDER}")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    reports = [verify_bounds(n, tol=args.tol) for n in range(lo, hi + 1)]
    total_violations = sum(len(r.violations) for r in reports)
    if args.format == "json":
        _emit(_json_text({
            "orders": [r.to_dict() for r in reports],
            "violations_total": total_violations,
        }), args.out)
    else:
        text = "".join(r.to_text() for r in reports)
        text += f"total violations: {total_violations}\n"
        _emit(text, args.out)
    return 0 if total_violations == 0 else VERIFICATION_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaindex",
        description="Geometric-arithmetic index of unicyclic graphs: "
                    "computation, extremal families, reduction traces, bound verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, formats=("text", "json")):
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", metavar="PATH", default=None)
        p.add_argument("--tol", type=float, default=1e-9)
        p.add_argument("--trace", action="store_true")

    p = sub.add_parser("compute", help="GA/AG indices and per-edge contributions of an edge list")
    p.add_argument("path")
    add_common(p, ("text", "json", "csv"))

    p = sub.add_parser("family", help="emit a named extremal family as an edge list")
    p.add_argument("name", choices=("cycle", "sn3", "spq4", "srk3"))
    p.add_argument("params", nargs="+", type=int)
    add_common(p)

    p = sub.add_parser("tables", help="comparison-function tables at 4 decimals")
    p.add_argument("which", type=int, choices=(1, 2))
    p.add_argument("--rows", default=None, metavar="A:B")
    p.add_argument("--cols", default=None, metavar="A:B")
    add_common(p, ("csv", "text", "json"))

    p = sub.add_parser("reduce", help="run the GA-decreasing reduction pipeline on an edge list")
    p.add_argument("path")
    add_common(p)

    p = sub.add_parser("verify", help="exhaustively verify the GA bounds for a range of orders")
    p.add_argument("orders", help="N or A..B (e.g. 5 or 3..9)")
    add_common(p)

    return parser


_HANDLERS = {
    "compute": _cmd_compute,
    "family": _cmd_family,
    "tables": _cmd_tables,
    "reduce": _cmd_reduce,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses exit code 2 for usage problems; remap per our contract
        return 0 if exc.code == 0 else USAGE_ERROR
    try:
        return _HANDLERS[args.command](args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
