"""Command-line surface: distance tables, verification, metrics, MDS
listing, and pair-error channel experiments.

Exit codes: 0 success / all-match; 1 mismatch or guarantee violation;
2 usage or input error; 3 incomplete verification (budget skips).
tsv and json outputs are byte-deterministic for identical arguments.
"""

from __future__ import annotations

import argparse
import json
import sys

from .channel import correctability_experiment
from .codes import (
    CodeSpec,
    closed_form_pair_distance,
    distance_table,
    is_mds_pair,
)
from .gf import Field, build_field
from .oracle import EnumBudget, verify_family
from .pairmetrics import (
    hamming_distance,
    hamming_weight,
    pair_distance,
    pair_read,
    pair_weight,
    run_count,
)
from .polyring import RingElement

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_INCOMPLETE = 3


class InputError(Exception):
    """Bad user input; reported on stderr with exit code 2."""


def _fmt_cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _emit(records: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(records, indent=2))
        out.write("\n")
        return
    if not records:
        return
    columns = list(records[0].keys())
    rows = [[_fmt_cell(rec[c]) for c in columns] for rec in records]
    if fmt == "tsv":
        out.write("\t".join(columns) + "\n")
        for row in rows:
            out.write("\t".join(row) + "\n")
        return
    # pretty: aligned columns, header underline
    widths = [
        max(len(col), *(len(row[k]) for row in rows))
        for k, col in enumerate(columns)
    ]
    header = "  ".join(col.ljust(w) for col, w in zip(columns, widths))
    out.write(header.rstrip() + "\n")
    out.write("  ".join("-" * w for w in widths).rstrip() + "\n")
    for row in rows:
        out.write(
            "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() + "\n"
        )


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise InputError(f"cannot parse {what!r} as comma-separated integers") from exc


def _field_from_args(args) -> Field:
    try:
        if getattr(args, "modulus", None):
            coeffs = _parse_int_list(args.modulus, "--modulus")
            return Field(args.p, args.m, coeffs)
        return build_field(args.p, args.m)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _vector_from_args(field: Field, text: str, what: str) -> RingElement:
    entries = _parse_int_list(text, what)
    try:
        return RingElement(field, tuple(entries))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _witness_str(witness) -> str | None:
    if witness is None:
        return None
    return ",".join(str(c) for c in witness.coeffs)


def cmd_table(args, out) -> int:
    try:
        records = [
            {
                "i": rec.i,
                "dimension": rec.dimension,
                "d_hamming": rec.d_hamming,
                "d_pair": rec.d_pair,
                "branch": rec.branch,
                "mds_pair": rec.mds_pair,
            }
            for rec in distance_table(args.p, args.e, args.m)
        ]
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(records, args.format, out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    field = _field_from_args(args)
    try:
        budget = EnumBudget(max_codewords=args.max_enum)
        report = verify_family(args.p, args.e, args.m, budget, field)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    records = [
        {
            "i": entry.i,
            "dimension": entry.dimension,
            "formula_d_hamming": entry.formula_d_hamming,
            "oracle_d_hamming": entry.oracle_d_hamming,
            "formula_d_pair": entry.formula_d_pair,
            "oracle_d_pair": entry.oracle_d_pair,
            "witness": _witness_str(entry.witness),
            "status": entry.status,
        }
        for entry in report.entries
    ]
    _emit(records, args.format, out)
    if args.format == "pretty":
        out.write(f"verdict: {report.verdict}\n")
    if report.verdict == "mismatch":
        return EXIT_MISMATCH
    if report.verdict == "incomplete":
        return EXIT_INCOMPLETE
    return EXIT_OK


def cmd_weight(args, out) -> int:
    field = _field_from_args(args)
    vec = _vector_from_args(field, args.vector, "--vector")
    try:
        w_h = hamming_weight(vec)
        w_p = pair_weight(vec)
        pairs = pair_read(vec).pairs
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    records = [
        {
            "n": vec.n,
            "hamming_weight": w_h,
            "pair_weight": w_p,
            "pair_read": ",".join(f"({a},{b})" for a, b in pairs),
        }
    ]
    _emit(records, args.format, out)
    return EXIT_OK


def cmd_pairdist(args, out) -> int:
    field = _field_from_args(args)
    x = _vector_from_args(field, args.x, "--x")
    y = _vector_from_args(field, args.y, "--y")
    try:
        d_h = hamming_distance(x, y)
        d_p = pair_distance(x, y)
        blocks = run_count(x, y).block_count
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    identity = "n/a"
    violated = False
    if 0 < d_h < x.n:
        violated = d_p != d_h + blocks
        identity = "violated" if violated else "ok"
    records = [
        {
            "n": x.n,
            "d_hamming": d_h,
            "block_count": blocks,
            "d_pair": d_p,
            "identity": identity,
        }
    ]
    _emit(records, args.format, out)
    return EXIT_MISMATCH if violated else EXIT_OK


def cmd_mds(args, out) -> int:
    records = []
    try:
        for i in range(args.p**args.e):
            spec = CodeSpec(args.p, args.m, args.e, i)
            if is_mds_pair(spec):
                records.append(
                    {
                        "i": i,
                        "dimension": spec.dimension,
                        "d_pair": spec.i + 2,
                    }
                )
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(records, args.format, out)
    return EXIT_OK


def cmd_simulate(args, out) -> int:
    try:
        spec = CodeSpec(args.p, args.m, args.e, args.i)
        d_p = closed_form_pair_distance(spec)
        budget = EnumBudget(max_codewords=args.max_enum)
        rate, outcomes = correctability_experiment(
            spec, args.t, args.trials, args.seed, budget
        )
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    guarantee_t = (d_p - 1) // 2
    successes = sum(1 for o in outcomes if o.success)
    records = [
        {
            "p": args.p,
            "e": args.e,
            "m": args.m,
            "i": args.i,
            "t": args.t,
            "trials": args.trials,
            "seed": args.seed,
            "d_pair": d_p,
            "max_guaranteed_t": guarantee_t,
            "successes": successes,
            "success_rate": rate,
        }
    ]
    _emit(records, args.format, out)
    if args.t <= guarantee_t and successes < args.trials:
        return EXIT_MISMATCH
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("tsv", "json", "pretty"),
        default="pretty",
        help="output format (default: pretty)",
    )
    common.add_argument(
        "--jobs",
        type=int,
        default=1,
        metavar="N",
        help="cap on worker count; never affects output bytes",
    )

    parser = argparse.ArgumentParser(
        prog="paircodes",
        description="Pair-distance tables, brute-force verification and "
        "channel experiments for the cyclic codes <(x-1)^i> of length p^e.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p_table = add("table", cmd_table, "closed-form distance table for all i")
    p_table.add_argument("--p", type=int, required=True)
    p_table.add_argument("--e", type=int, required=True)
    p_table.add_argument("--m", type=int, required=True)

    p_verify = add("verify", cmd_verify, "closed forms vs brute-force oracle")
    p_verify.add_argument("--p", type=int, required=True)
    p_verify.add_argument("--e", type=int, required=True)
    p_verify.add_argument("--m", type=int, required=True)
    p_verify.add_argument("--max-enum", type=int, default=10_000_000)
    p_verify.add_argument("--modulus", help="override modulus c_0,...,c_m")

    p_weight = add("weight", cmd_weight, "Hamming/pair weight and pair read")
    p_weight.add_argument("--p", type=int, required=True)
    p_weight.add_argument("--m", type=int, required=True)
    p_weight.add_argument("--vector", required=True)
    p_weight.add_argument("--modulus", help="override modulus c_0,...,c_m")

    p_pd = add("pairdist", cmd_pairdist, "distances between two words")
    p_pd.add_argument("--p", type=int, required=True)
    p_pd.add_argument("--m", type=int, required=True)
    p_pd.add_argument("--x", required=True)
    p_pd.add_argument("--y", required=True)
    p_pd.add_argument("--modulus", help="override modulus c_0,...,c_m")

    p_mds = add("mds", cmd_mds, "generator exponents of MDS symbol-pair codes")
    p_mds.add_argument("--p", type=int, required=True)
    p_mds.add_argument("--e", type=int, required=True)
    p_mds.add_argument("--m", type=int, required=True)

    p_sim = add("simulate", cmd_simulate, "seeded pair-error decoding trials")
    p_sim.add_argument("--p", type=int, required=True)
    p_sim.add_argument("--e", type=int, required=True)
    p_sim.add_argument("--m", type=int, required=True)
    p_sim.add_argument("--i", type=int, required=True)
    p_sim.add_argument("--t", type=int, required=True)
    p_sim.add_argument("--trials", type=int, default=100)
    p_sim.add_argument("--seed", type=int, required=True)
    p_sim.add_argument("--max-enum", type=int, default=10_000_000)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be >= 1")
    try:
        return args.func(args, sys.stdout)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
