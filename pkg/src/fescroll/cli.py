"""Command-line front end.

Subcommands: report, uniformity, cohomology, hilbpoly, hilbert, table,
verify.  Output formats: plain (default), json (a single object per
invocation), csv (fixed header row).  Exit codes: 0 success, 1 invalid
parameters, 2 theorem hypotheses not satisfied, 3 internal-consistency
failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bundle_family import (
    FamilyParams,
    build_split,
    bundle_cohomology,
    chern,
    is_uniform,
    iter_valid_params,
    splitting_type,
    validate_params,
)
from .errors import ConsistencyError, HypothesesError, ParameterError
from .hilbert_component import (
    HilbertReport,
    check_hypotheses,
    chi_normal,
    component_dimension,
)
from .scroll_invariants import embedding_dimension, scroll_degree, scroll_report
from .surface_lattice import CohomologyTable, DivisorClass, Surface, cohomology
from .verify import run_all

_REPORT_CHECKS = [
    "c1 and c2 agree across the three presentations",
    "degree agrees across c1^2-c2, deg xi^3 and the closed form",
    "Hilbert polynomial matches chi(Sym^m E) on m in [0, 8]",
    "cohomology of E matches its closed forms",
    "ell(c1, c2, 2, r) = b-t-2e-4 < 0 independent of r",
    "ell(c1, c2, 3, r) = 0 at r = 3e+5+t",
]

_TABLE_HEADER = [
    "e", "b", "t", "n", "d", "c2", "r", "ell2", "ell3", "h0E",
    "paper_regime", "dim", "codim",
]


def _fmt_divisor(d: DivisorClass) -> str:
    sign = "+" if d.c >= 0 else "-"
    return f"{d.a}*C0 {sign} {abs(d.c)}*f"


def _params_dict(params: FamilyParams) -> dict:
    return {"e": params.e, "b": params.b, "t": params.t}


def _flags_dict(flags) -> dict:
    return {
        "paper_regime": flags.paper_regime,
        "v1": flags.v1,
        "v2": flags.v2,
        "v3": flags.v3,
    }


def _table_dict(table: CohomologyTable) -> dict:
    return {"h0": table.h0, "h1": table.h1, "h2": table.h2, "chi": table.chi}


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _csv_text(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(_cell(value) for value in row) for row in rows)
    return "\n".join(lines)


def _hilbert_full_payload(report: HilbertReport) -> dict:
    return {
        "params": _params_dict(report.params),
        "flags": _flags_dict(report.flags),
        "n": report.n,
        "d": report.d,
        "chiN": report.chiN,
        "dim_component": report.dim_component,
        "hN": list(report.hN),
        "hTX": list(report.hTX),
        "chiTX": report.chiTX,
        "codim_scroll_locus": report.codim_scroll_locus,
    }


def _hilbert_gated_payload(params: FamilyParams, flags) -> dict:
    return {
        "params": _params_dict(params),
        "flags": _flags_dict(flags),
        "n": embedding_dimension(params),
        "d": scroll_degree(params),
        "chiN": chi_normal(params),
        "chiN_note": "euler characteristic only; not identified with h^0(N) "
                     "because the flags above do not all hold",
        "dim_component": None,
        "hN": None,
        "hTX": None,
        "chiTX": None,
        "codim_scroll_locus": None,
    }


# ------------------------------------------------------------------ report


def _report_payload(params: FamilyParams) -> dict:
    s = params.surface
    bun = build_split(params)
    cd = chern(params)
    evidence = is_uniform(params)
    split = splitting_type(params)
    rep = scroll_report(params)
    flags = check_hypotheses(params)
    payload = {
        "params": _params_dict(params),
        "scroll": {
            "n": rep.n,
            "d": rep.d,
            "c1": [cd.c1.a, cd.c1.c],
            "c2": cd.c2,
            "h_of_L": list(rep.h_of_L),
            "hilbert_poly": rep.hilbert_poly.to_pairs(),
            "cohomology": {
                "E": _table_dict(bundle_cohomology(params)),
                "A": _table_dict(cohomology(s, bun.A)),
                "B": _table_dict(cohomology(s, bun.B)),
            },
        },
        "uniformity": {
            "uniform": evidence.uniform,
            "r": evidence.r,
            "ell2": evidence.ell2,
            "ell3": evidence.ell3,
            "splitting_type": list(split),
        },
        "checks": {"passed": list(_REPORT_CHECKS)},
    }
    if flags.all_hold():
        payload["hilbert"] = _hilbert_full_payload(component_dimension(params))
    return payload


def _report_plain(payload: dict) -> str:
    p = payload["params"]
    sc = payload["scroll"]
    un = payload["uniformity"]
    c1 = DivisorClass(*sc["c1"])
    lines = [
        f"e={p['e']} b={p['b']} t={p['t']}",
        f"c1 = {_fmt_divisor(c1)}",
        f"c2 = {sc['c2']}",
        f"n = {sc['n']}",
        f"d = {sc['d']}",
        f"r = {un['r']}, ell2 = {un['ell2']}, ell3 = {un['ell3']}",
        f"uniform: {_cell(un['uniform'])}, splitting type "
        f"({un['splitting_type'][0]}, {un['splitting_type'][1]})",
    ]
    for name in ("E", "A", "B"):
        tab = sc["cohomology"][name]
        lines.append(f"h^i({name}) = ({tab['h0']}, {tab['h1']}, {tab['h2']})")
    lines.append(f"h^i(X, L) = {tuple(sc['h_of_L'])}")
    lines.append("P(m) = " + _poly_pretty(sc["hilbert_poly"]))
    if "hilbert" in payload:
        hb = payload["hilbert"]
        lines.append(
            f"hilbert: dim = {hb['dim_component']}, "
            f"codim of scroll locus = {hb['codim_scroll_locus']}, "
            f"chi(N) = {hb['chiN']}, h(T_X) = {tuple(hb['hTX'])}, "
            f"chi(T_X) = {hb['chiTX']}"
        )
    else:
        lines.append("hilbert: not reported (hypothesis flags do not all hold)")
    lines.append("checks passed: " + "; ".join(payload["checks"]["passed"]))
    return "\n".join(lines)


def _poly_pretty(pairs: list[list[int]]) -> str:
    terms = []
    for power, (num, den) in enumerate(pairs):
        if num == 0:
            continue
        coeff = str(num) if den == 1 else f"({num}/{den})"
        mono = "" if power == 0 else ("*m" if power == 1 else f"*m^{power}")
        terms.append(coeff + mono)
    return " + ".join(terms) if terms else "0"


def cmd_report(args) -> tuple[str, int]:
    params = validate_params(args.e, args.b, args.t)
    payload = _report_payload(params)
    if args.format == "json":
        return json.dumps(payload, indent=2), 0
    if args.format == "csv":
        hb = payload.get("hilbert")
        row = [
            params.e, params.b, params.t,
            payload["scroll"]["n"], payload["scroll"]["d"],
            payload["scroll"]["c1"][0], payload["scroll"]["c1"][1],
            payload["scroll"]["c2"],
            payload["uniformity"]["r"], payload["uniformity"]["ell2"],
            payload["uniformity"]["ell3"],
            payload["scroll"]["cohomology"]["E"]["h0"],
            hb is not None,
            hb["dim_component"] if hb else None,
            hb["codim_scroll_locus"] if hb else None,
        ]
        header = ["e", "b", "t", "n", "d", "c1_a", "c1_c", "c2", "r",
                  "ell2", "ell3", "h0E", "paper_regime", "dim", "codim"]
        return _csv_text(header, [row]), 0
    return _report_plain(payload), 0


# -------------------------------------------------------------- uniformity


def cmd_uniformity(args) -> tuple[str, int]:
    params = validate_params(args.e, args.b, args.t)
    evidence = is_uniform(params)
    split = splitting_type(params)
    payload = {
        "params": _params_dict(params),
        "uniform": evidence.uniform,
        "r": evidence.r,
        "ell2": evidence.ell2,
        "ell3": evidence.ell3,
        "splitting_type": list(split),
    }
    if args.format == "json":
        return json.dumps(payload, indent=2), 0
    if args.format == "csv":
        header = ["e", "b", "t", "r", "ell2", "ell3", "split_0", "split_1", "uniform"]
        row = [params.e, params.b, params.t, evidence.r, evidence.ell2,
               evidence.ell3, split[0], split[1], evidence.uniform]
        return _csv_text(header, [row]), 0
    return (
        f"r = {evidence.r}\nell2 = {evidence.ell2}\nell3 = {evidence.ell3}\n"
        f"splitting type ({split[0]}, {split[1]})\nuniform: {_cell(evidence.uniform)}",
        0,
    )


# -------------------------------------------------------------- cohomology


def cmd_cohomology(args) -> tuple[str, int]:
    s = Surface(args.e)
    d = DivisorClass(args.a, args.c)
    table = cohomology(s, d)
    if args.format == "json":
        payload = {"e": args.e, "class": [args.a, args.c], "table": _table_dict(table)}
        return json.dumps(payload, indent=2), 0
    if args.format == "csv":
        header = ["e", "a", "c", "h0", "h1", "h2", "chi"]
        row = [args.e, args.a, args.c, table.h0, table.h1, table.h2, table.chi]
        return _csv_text(header, [row]), 0
    return (
        f"h^i({args.a}*C0 + {args.c}*f on F_{args.e}) = "
        f"({table.h0}, {table.h1}, {table.h2}), chi = {table.chi}",
        0,
    )


# ---------------------------------------------------------------- hilbpoly


def cmd_hilbpoly(args) -> tuple[str, int]:
    params = validate_params(args.e, args.b, args.t)
    rep = scroll_report(params)
    pairs = rep.hilbert_poly.to_pairs()
    if args.format == "json":
        payload = {
            "params": _params_dict(params),
            "n": rep.n,
            "d": rep.d,
            "hilbert_poly": pairs,
        }
        return json.dumps(payload, indent=2), 0
    if args.format == "csv":
        header = ["e", "b", "t", "c0_num", "c0_den", "c1_num", "c1_den",
                  "c2_num", "c2_den", "c3_num", "c3_den"]
        row = [params.e, params.b, params.t]
        for num, den in pairs:
            row.extend([num, den])
        return _csv_text(header, [row]), 0
    return f"P(m) = {_poly_pretty(pairs)}", 0


# ----------------------------------------------------------------- hilbert


def cmd_hilbert(args) -> tuple[str, int]:
    b = args.force_b if args.force_b is not None else 2 * args.e + 3 + args.t
    params = validate_params(args.e, b, args.t)
    flags = check_hypotheses(params)
    if flags.all_hold():
        payload = _hilbert_full_payload(component_dimension(params))
        code = 0
    else:
        payload = _hilbert_gated_payload(params, flags)
        code = 2
    if args.format == "json":
        return json.dumps(payload, indent=2), code
    if args.format == "csv":
        header = ["e", "b", "t", "n", "d", "chiN", "dim", "codim",
                  "chiTX", "paper_regime", "v1", "v2", "v3"]
        fl = payload["flags"]
        row = [params.e, params.b, params.t, payload["n"], payload["d"],
               payload["chiN"], payload["dim_component"],
               payload["codim_scroll_locus"], payload["chiTX"],
               fl["paper_regime"], fl["v1"], fl["v2"], fl["v3"]]
        return _csv_text(header, [row]), code
    fl = payload["flags"]
    flag_line = ", ".join(f"{k}={_cell(v)}" for k, v in fl.items())
    lines = [
        f"e={params.e} b={params.b} t={params.t}",
        f"flags: {flag_line}",
        f"n = {payload['n']}, d = {payload['d']}",
    ]
    if code == 0:
        lines.append(
            f"dim = {payload['dim_component']} (= chi(N) = h^0(N) = {payload['chiN']})"
        )
        lines.append(f"h(N) = {tuple(payload['hN'])}")
        lines.append(
            f"h(T_X) = {tuple(payload['hTX'])}, chi(T_X) = {payload['chiTX']}"
        )
        lines.append(f"codim of scroll locus = {payload['codim_scroll_locus']}")
    else:
        failing = ", ".join(flags.failing())
        lines.append(f"hypotheses not satisfied: {failing}")
        lines.append(f"chi(N) = {payload['chiN']} ({payload['chiN_note']})")
        lines.append("dim, codim, h(T_X): not reported")
    return "\n".join(lines), code


# ------------------------------------------------------------------- table


def _table_rows(e_max: int, t_max: int, regime_only: bool) -> list[list]:
    rows = []
    for params in iter_valid_params(e_max, t_max):
        flags = check_hypotheses(params)
        if regime_only and not flags.paper_regime:
            continue
        evidence = is_uniform(params)
        dim = codim = None
        if flags.all_hold():
            report = component_dimension(params)
            dim = report.dim_component
            codim = report.codim_scroll_locus
        rows.append([
            params.e, params.b, params.t,
            embedding_dimension(params), scroll_degree(params),
            chern(params).c2,
            evidence.r, evidence.ell2, evidence.ell3,
            bundle_cohomology(params).h0,
            flags.paper_regime, dim, codim,
        ])
    return rows


def cmd_table(args) -> tuple[str, int]:
    if args.e_max < 0 or args.t_max < 0:
        raise ParameterError("bounds", "require --e-max >= 0 and --t-max >= 0")
    rows = _table_rows(args.e_max, args.t_max, args.paper_regime_only)
    if args.format == "json":
        payload = {
            "rows": [dict(zip(_TABLE_HEADER, row)) for row in rows]
        }
        return json.dumps(payload, indent=2), 0
    # plain and csv coincide for a grid listing
    return _csv_text(_TABLE_HEADER, rows), 0


# ------------------------------------------------------------------ verify


def cmd_verify(args) -> tuple[str, int]:
    if args.e_max < 0 or args.t_max < 0:
        raise ParameterError("bounds", "require --e-max >= 0 and --t-max >= 0")
    results = run_all(args.e_max, args.t_max)
    lines = []
    failed = 0
    for result in results:
        status = "PASS" if result.ok else "FAIL"
        lines.append(f"{status}  [{result.cases:6d} cases]  {result.name}")
        if not result.ok:
            failed += 1
            lines.extend(f"      {detail}" for detail in result.failures)
    lines.append(
        f"{len(results)} identities checked, {len(results) - failed} passed, "
        f"{failed} failed"
    )
    return "\n".join(lines), 0 if failed == 0 else 3


# -------------------------------------------------------------------- main


def _add_common(sub) -> None:
    sub.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    sub.add_argument("--out", default=None, help="write output to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fescroll",
        description="Exact invariants of rank-two bundles on F_e and their scrolls",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    sub = subparsers.add_parser("report", help="all invariants of one member")
    sub.add_argument("-e", type=int, required=True)
    sub.add_argument("-b", type=int, required=True)
    sub.add_argument("-t", type=int, required=True)
    _add_common(sub)
    sub.set_defaults(func=cmd_report)

    sub = subparsers.add_parser("uniformity", help="restriction invariants r and ell")
    sub.add_argument("-e", type=int, required=True)
    sub.add_argument("-b", type=int, required=True)
    sub.add_argument("-t", type=int, required=True)
    _add_common(sub)
    sub.set_defaults(func=cmd_uniformity)

    sub = subparsers.add_parser("cohomology", help="h^i of a*C0 + c*f on F_e")
    sub.add_argument("-e", type=int, required=True)
    sub.add_argument("-a", type=int, required=True)
    sub.add_argument("-c", type=int, required=True)
    _add_common(sub)
    sub.set_defaults(func=cmd_cohomology)

    sub = subparsers.add_parser("hilbpoly", help="Hilbert polynomial of (X, L)")
    sub.add_argument("-e", type=int, required=True)
    sub.add_argument("-b", type=int, required=True)
    sub.add_argument("-t", type=int, required=True)
    _add_common(sub)
    sub.set_defaults(func=cmd_hilbpoly)

    sub = subparsers.add_parser(
        "hilbert", help="Hilbert-scheme component report (b = 2e+3+t unless forced)"
    )
    sub.add_argument("-e", type=int, required=True)
    sub.add_argument("-t", type=int, required=True)
    sub.add_argument("--force-b", type=int, default=None, dest="force_b")
    _add_common(sub)
    sub.set_defaults(func=cmd_hilbert)

    sub = subparsers.add_parser("table", help="grid of invariants, one row per (e, b, t)")
    sub.add_argument("--e-max", type=int, required=True, dest="e_max")
    sub.add_argument("--t-max", type=int, required=True, dest="t_max")
    sub.add_argument("--paper-regime-only", action="store_true",
                     dest="paper_regime_only")
    _add_common(sub)
    sub.set_defaults(func=cmd_table)

    sub = subparsers.add_parser("verify", help="run every identity check over a grid")
    sub.add_argument("--e-max", type=int, required=True, dest="e_max")
    sub.add_argument("--t-max", type=int, required=True, dest="t_max")
    sub.add_argument("--out", default=None)
    sub.set_defaults(func=cmd_verify, format="plain")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except HypothesesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"error: internal consistency: {exc}", file=sys.stderr)
        return 3
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)
    return code


def entry() -> None:
    sys.exit(main())
