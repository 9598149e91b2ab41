"""Command-line surface.

Subcommands wire the modules into reproducible runs:

  expand FTEXT --m M          jet coefficients of an ambient polynomial
  an decompose|table|graph|verify
  an-series decompositions, the summary table, the fiber graph, engine checks
  d4 ideals|verify|graph      the D4 ideal family, certificate suite, graph

Exit codes: 0 all good, 1 usage or parse error, 2 at least one claim
refuted, 3 budget exhausted on a required check.  Runs with identical
configuration produce byte-identical output; wall-clock timings only enter
reports behind --timings.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import an as an_mod
from . import d4 as d4_mod
from . import graphs
from . import jets
from .groebner import (
    BUDGET_EXHAUSTED,
    Budget,
    REFUTED,
    VERIFIED,
    VerificationReport,
)
from .poly import PolynomialParseError, parse_polynomial

SCHEMA = 1


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the contract here reserves 2 for
    refuted claims, so remap usage errors to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_budget_flags(p):
    p.add_argument("--budget-spairs", type=int, default=None, metavar="N")
    p.add_argument("--budget-seconds", type=float, default=None, metavar="S")
    p.add_argument("--timings", action="store_true", help="include wall-clock times in reports")


def _add_output_flags(p, formats, default):
    p.add_argument("--format", choices=formats, default=default)
    p.add_argument("--out", default=None, metavar="FILE")


def build_parser() -> _Parser:
    parser = _Parser(prog="jetfibers", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("expand", help="expand an ambient polynomial along a generic jet")
    p.add_argument("f", metavar="POLY")
    p.add_argument("--m", type=int, required=True)
    _add_output_flags(p, ("text", "json"), "text")

    pan = sub.add_parser("an", help="A-series surface commands")
    an_sub = pan.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    p = an_sub.add_parser("decompose", help="decompose one pairwise intersection")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    _add_output_flags(p, ("text", "json"), "text")

    p = an_sub.add_parser("table", help="dimension/component-count summary table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", required=True, metavar="M|A..B")
    _add_output_flags(p, ("text", "csv", "json"), "text")

    p = an_sub.add_parser("graph", help="fiber intersection graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None)
    _add_output_flags(p, ("dot", "json"), "dot")

    p = an_sub.add_parser("verify", help="engine verification of the decompositions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--j", type=int, default=None)
    _add_budget_flags(p)
    _add_output_flags(p, ("text", "json"), "text")

    pd4 = sub.add_parser("d4", help="D4 surface commands")
    d4_sub = pd4.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    p = d4_sub.add_parser("ideals", help="list the chart and component ideals")
    p.add_argument("--m", type=int, required=True)
    _add_output_flags(p, ("text", "json"), "text")

    p = d4_sub.add_parser("verify", help="run the certificate suite")
    p.add_argument("--m", type=int, required=True)
    p.add_argument(
        "--saturate",
        action="store_true",
        help="force the saturation-level component checks at any order",
    )
    _add_budget_flags(p)
    _add_output_flags(p, ("text", "json"), "text")

    p = d4_sub.add_parser("graph", help="fiber intersection graph")
    p.add_argument("--m", type=int, required=True)
    _add_budget_flags(p)
    _add_output_flags(p, ("dot", "json"), "dot")

    return parser


# ---------------------------------------------------------------------------
# helpers


def _budget(args) -> Budget | None:
    if args.budget_spairs is None and args.budget_seconds is None:
        return None
    base = Budget()
    return Budget(
        max_spairs=args.budget_spairs or base.max_spairs,
        max_seconds=args.budget_seconds or base.max_seconds,
    )


def _config(args, **extra) -> dict:
    cfg = {
        "command": args.command,
        "subcommand": getattr(args, "subcommand", None),
        "format": getattr(args, "format", None),
        "budget_spairs": getattr(args, "budget_spairs", None),
        "budget_seconds": getattr(args, "budget_seconds", None),
        "timings": getattr(args, "timings", False),
    }
    cfg.update(extra)
    return cfg


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _parse_m_range(spec: str) -> list[int]:
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        values = list(range(int(lo), int(hi) + 1))
        if not values:
            raise ValueError(f"empty order range {spec!r}")
        return values
    return [int(spec)]


def _report_lines(reports: list[VerificationReport]) -> str:
    lines = []
    counts = {VERIFIED: 0, REFUTED: 0, BUDGET_EXHAUSTED: 0}
    for r in reports:
        counts[r.outcome] += 1
        lines.append(f"{r.outcome.upper():<17} {r.claim}")
    lines.append(
        "summary: {v} verified, {r} refuted, {b} budget-exhausted".format(
            v=counts[VERIFIED], r=counts[REFUTED], b=counts[BUDGET_EXHAUSTED]
        )
    )
    return "\n".join(lines) + "\n"


def _verify_exit(reports: list[VerificationReport]) -> int:
    outcomes = {r.outcome for r in reports}
    if REFUTED in outcomes:
        return 2
    if BUDGET_EXHAUSTED in outcomes:
        return 3
    return 0


# ---------------------------------------------------------------------------
# command handlers


def _cmd_expand(args) -> int:
    f = parse_polynomial(args.f, ambient=True)
    if args.m < 0:
        raise ValueError("--m must be nonnegative")
    coeffs = jets.expand_ambient(f, args.m)
    if args.format == "json":
        payload = {
            "schema": SCHEMA,
            "config": _config(args, f=args.f, m=args.m),
            "coefficients": [str(c) for c in coeffs],
        }
        _emit(args, _json_text(payload))
    else:
        lines = [f"f^({j}) = {c}" for j, c in enumerate(coeffs)]
        _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_an_decompose(args) -> int:
    dec = an_mod.decompose_intersection(args.n, args.m, args.i, args.j)
    if args.format == "json":
        payload = {
            "schema": SCHEMA,
            "config": _config(args, n=args.n, m=args.m, i=args.i, j=args.j),
            "decomposition": dec.to_json_dict(),
        }
        _emit(args, _json_text(payload))
    else:
        lines = [
            f"case {dec.case}: {dec.count} component(s), dimension {dec.dimension}"
        ]
        lines += [f"  {d.label}" for d in dec.components]
        _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_an_table(args) -> int:
    m_values = _parse_m_range(args.m)
    if min(m_values) < args.n:
        raise ValueError(f"table orders must satisfy m >= n = {args.n}")
    rows = an_mod.an_table(args.n, m_values)
    if args.format == "csv":
        _emit(args, an_mod.table_csv(args.n, rows))
    elif args.format == "json":
        payload = {
            "schema": SCHEMA,
            "config": _config(args, n=args.n, m=args.m),
            "header": list(an_mod.table_header(args.n)),
            "rows": [list(r.cells()) for r in rows],
        }
        _emit(args, _json_text(payload))
    else:
        _emit(args, an_mod.table_text(args.n, rows))
    return 0


def _cmd_an_graph(args) -> int:
    g = graphs.an_fiber_graph(args.n, args.m)
    if args.format == "json":
        payload = {
            "schema": SCHEMA,
            "config": _config(args, n=args.n, m=args.m),
            "graph": g.to_json_dict(),
        }
        _emit(args, _json_text(payload))
    else:
        _emit(args, graphs.to_dot(g))
    return 0


def _cmd_an_verify(args) -> int:
    budget = _budget(args)
    if (args.i is None) != (args.j is None):
        raise ValueError("--i and --j go together")
    if args.i is not None:
        reports = [an_mod.verify_decomposition(args.n, args.m, args.i, args.j, budget)]
    else:
        reports = an_mod.verify_all_pairs(args.n, args.m, budget)
        fiber = graphs.an_fiber_graph(args.n, args.m)
        resolution = graphs.resolution_graph("An", args.n)
        reports.append(
            VerificationReport(
                claim=f"fiber graph matches the resolution graph (n{args.n})",
                outcome=VERIFIED if graphs.isomorphic(fiber, resolution) else REFUTED,
                certificate=fiber.to_json_dict(),
            )
        )
    payload = {
        "schema": SCHEMA,
        "config": _config(args, n=args.n, m=args.m, i=args.i, j=args.j),
        "reports": [r.to_json_dict(args.timings) for r in reports],
    }
    if args.format == "json":
        _emit(args, _json_text(payload))
    else:
        _emit(args, _report_lines(reports))
    return _verify_exit(reports)


def _cmd_d4_ideals(args) -> int:
    fam = d4_mod.d4_ideals(args.m)
    named = [fam.l322, fam.charts[1], fam.charts[2], fam.charts[3], fam.i0] + [
        fam.j[i] for i in (1, 2, 3)
    ]
    if args.format == "json":
        payload = {
            "schema": SCHEMA,
            "config": _config(args, m=args.m),
            "ideals": {
                ideal.label: [str(g) for g in ideal.generators] for ideal in named
            },
        }
        _emit(args, _json_text(payload))
    else:
        lines = []
        for ideal in named:
            lines.append(f"{ideal.label}:")
            lines += [f"  {g}" for g in ideal.generators]
        _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_d4_verify(args) -> int:
    budget = _budget(args)
    with_saturation = True if args.saturate else None
    reports = d4_mod.verify_suite(args.m, budget, with_saturation)
    fiber = graphs.build_graph(
        [f"Z{i}" for i in range(4)],
        [("Z0", "Z1"), ("Z0", "Z2"), ("Z0", "Z3")],
    )
    reports.append(
        VerificationReport(
            claim=f"fiber graph matches the resolution graph (m{args.m})",
            outcome=VERIFIED
            if graphs.isomorphic(fiber, graphs.resolution_graph("D4"))
            else REFUTED,
            certificate=fiber.to_json_dict(),
        )
    )
    payload = {
        "schema": SCHEMA,
        "config": _config(args, m=args.m, saturate=args.saturate),
        "reports": [r.to_json_dict(args.timings) for r in reports],
    }
    if args.format == "json":
        _emit(args, _json_text(payload))
    else:
        _emit(args, _report_lines(reports))
    return _verify_exit(reports)


def _cmd_d4_graph(args) -> int:
    g = graphs.d4_fiber_graph(args.m, _budget(args))
    if args.format == "json":
        payload = {
            "schema": SCHEMA,
            "config": _config(args, m=args.m),
            "graph": g.to_json_dict(),
        }
        _emit(args, _json_text(payload))
    else:
        _emit(args, graphs.to_dot(g))
    return 0


_HANDLERS = {
    ("expand", None): _cmd_expand,
    ("an", "decompose"): _cmd_an_decompose,
    ("an", "table"): _cmd_an_table,
    ("an", "graph"): _cmd_an_graph,
    ("an", "verify"): _cmd_an_verify,
    ("d4", "ideals"): _cmd_d4_ideals,
    ("d4", "verify"): _cmd_d4_verify,
    ("d4", "graph"): _cmd_d4_graph,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    handler = _HANDLERS[(args.command, getattr(args, "subcommand", None))]
    try:
        return handler(args)
    except PolynomialParseError as exc:
        print(f"jetfibers: parse error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"jetfibers: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
