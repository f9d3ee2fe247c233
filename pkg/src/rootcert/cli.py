"""Command-line front end: classify, root, filter and bench subcommands.

Inputs are plain decimal strings, given as arguments or streamed one per
line over stdin by passing `-`.  Exit codes: 0 when every certified input
had an exact root (or the command is informational), 1 when at least one
input was certified a non-root, 2 on malformed input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Iterator

from .certificate import EQUAL, GATE, BranchResult, Certificate
from .cube import cbrt_certify
from .kernel import digit_root, parse_decimal
from .oracle import BenchRecord, bench_run, predicted_iterations
from .residues import candidates_for_root, residue_class_of, strip_factors
from .square import sqrt_certify
from .twins import discriminate

EXIT_ROOT = 0
EXIT_NON_ROOT = 1
EXIT_INPUT_ERROR = 2


def _iter_inputs(values: list[str]) -> Iterator[str]:
    if values == ["-"]:
        for line in sys.stdin:
            line = line.strip()
            if line:
                yield line
    else:
        yield from values


def _fmt_table(rows: list[list[str]], header: list[str]) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        for idx, cell in enumerate(row):
            widths[idx] = max(widths[idx], len(cell))
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    for row in rows:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    return "\n".join(lines)


# ---------------------------------------------------------------- root

_TRACE_HEADER = ["i", "N_i", "DR", "b_i", "b_i+1", "p_i", "frac_i", "f_i"]


def _branch_table(branch: BranchResult) -> str:
    rows = []
    prev_digit = 0
    for row in branch.rows:
        rows.append([
            str(row.step), str(row.n), str(row.dr), str(prev_digit),
            str(row.digit), str(row.p), str(row.frac), str(row.f),
        ])
        prev_digit = row.digit
    if branch.residual is not None:
        # terminal line in the style of the worked tables: N_(i+1) is 0 on an
        # exact root and the negative leftover on a failed branch
        rows.append([
            str(len(branch.rows)), str(branch.residual), "", str(prev_digit),
            "", "", "", "",
        ])
    return _fmt_table(rows, _TRACE_HEADER)


def _branch_heading(branch: BranchResult) -> str:
    if branch.outcome == EQUAL:
        state = "exact root"
    elif branch.outcome == GATE:
        state = f"rejected ({branch.reason})"
    else:
        state = "no root on this branch"
    return f"branch a = {branch.a}: {state}"


def _print_root_table(cert: Certificate, trace: bool, all_branches: bool) -> None:
    norm = cert.norm
    print(f"{cert.value}: {cert.verdict}" + (f", root = {cert.root}" if cert.is_power else ""))
    if norm.k or norm.l:
        print(f"  normalized: 2^{norm.k} * 3^{norm.l} * {norm.core}")
    if cert.reason:
        print(f"  {cert.reason}")
        return
    if not cert.branches:
        return
    shown = cert.branches
    if not all_branches and cert.is_power:
        shown = tuple(b for b in cert.branches if b.outcome == EQUAL)
    if norm.core > 1:
        print(f"  N = {norm.core}  DR(N) = {digit_root(norm.core)}")
    for branch in shown:
        print("  " + _branch_heading(branch))
        if trace and branch.rows:
            table = _branch_table(branch)
            print("    " + table.replace("\n", "\n    "))


def _branch_json(branch: BranchResult) -> dict:
    return {
        "a": branch.a,
        "outcome": branch.outcome,
        "reason": branch.reason,
        "residual": str(branch.residual) if branch.residual is not None else None,
        "rows": [
            {
                "i": row.step, "n": str(row.n), "dr": row.dr, "b": row.digit,
                "p": str(row.p), "frac": str(row.frac), "f": str(row.f),
            }
            for row in branch.rows
        ],
    }


def _cert_json(cert: Certificate) -> dict:
    winner = next((b for b in cert.branches if b.outcome == EQUAL), None)
    return {
        "input": str(cert.value),
        "verdict": cert.verdict,
        "root": str(cert.root) if cert.root is not None else None,
        "residual": str(winner.residual) if winner else None,
        "iterations": cert.iterations,
        "branches": [_branch_json(b) for b in cert.branches],
    }


def cmd_root(args: argparse.Namespace) -> int:
    certify = sqrt_certify if args.root == 2 else cbrt_certify
    any_error = False
    all_roots = True
    seen = False
    for text in _iter_inputs(args.values):
        try:
            value = parse_decimal(text)
            cert = certify(value)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            any_error = True
            continue
        seen = True
        all_roots = all_roots and cert.is_power
        if args.format == "json":
            print(json.dumps(_cert_json(cert)))
        else:
            _print_root_table(cert, args.trace, args.all_branches)
    if any_error:
        return EXIT_INPUT_ERROR
    if not seen:
        print("error: no inputs", file=sys.stderr)
        return EXIT_INPUT_ERROR
    return EXIT_ROOT if all_roots else EXIT_NON_ROOT


# ---------------------------------------------------------------- classify

def cmd_classify(args: argparse.Namespace) -> int:
    any_error = False
    for text in _iter_inputs(args.values):
        try:
            value = parse_decimal(text)
            norm = strip_factors(value)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            any_error = True
            continue
        cls = residue_class_of(norm.core) if norm.core > 1 else 1
        square_a = candidates_for_root(cls, 2).a_values
        cube_a = candidates_for_root(cls, 3).a_values
        if args.format == "json":
            print(json.dumps({
                "input": str(value),
                "k": norm.k,
                "l": norm.l,
                "core": str(norm.core),
                "class": cls,
                "dr": digit_root(norm.core),
                "square_candidates": list(square_a),
                "cube_candidates": list(cube_a),
                "trivial": norm.core == 1,
            }))
        else:
            parts = [
                f"k={norm.k}", f"l={norm.l}", f"core={norm.core}",
                f"class=[{cls}]", f"DR={digit_root(norm.core)}",
                f"square_a={list(square_a)}", f"cube_a={list(cube_a)}",
            ]
            if norm.core == 1:
                parts.append("(trivial core)")
            print(f"{value}: " + " ".join(parts))
    return EXIT_INPUT_ERROR if any_error else 0


# ---------------------------------------------------------------- filter

def cmd_filter(args: argparse.Namespace) -> int:
    any_error = False
    for text in _iter_inputs(args.values):
        try:
            value = parse_decimal(text)
            result = discriminate(value)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            any_error = True
            continue
        if args.format == "json":
            print(json.dumps({
                "input": str(value),
                "verdict": result.verdict,
                "class": result.core_class,
                "core": str(result.norm.core),
            }))
        else:
            print(f"{value}: {result.verdict} (class [{result.core_class}])")
    return EXIT_INPUT_ERROR if any_error else 0


# ---------------------------------------------------------------- bench

def _bench_rows(records: Iterable[BenchRecord], timing: bool) -> list[list[str]]:
    rows = []
    for rec in records:
        row = [
            str(rec.n_bits),
            str(rec.a) if rec.a is not None else "-",
            str(rec.iterations_measured) if rec.iterations_measured is not None else "-",
            str(rec.iterations_predicted),
            rec.verdict,
        ]
        if timing:
            row.append(f"{rec.elapsed * 1e3:.3f}ms")
        rows.append(row)
    return rows


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        bit_sizes = [int(part) for part in args.bits.split(",")]
        records = bench_run(bit_sizes, args.count, args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    measured = [
        abs(rec.iterations_measured - rec.iterations_predicted)
        for rec in records
        if rec.iterations_measured is not None
    ]
    mean_dev = sum(measured) / len(measured) if measured else 0.0
    if args.format == "json":
        for rec in records:
            payload = {
                "bits": rec.n_bits,
                "value": str(rec.value),
                "a": rec.a,
                "iterations_measured": rec.iterations_measured,
                "iterations_predicted": rec.iterations_predicted,
                "verdict": rec.verdict,
            }
            if args.timing:
                payload["elapsed"] = rec.elapsed
            print(json.dumps(payload))
        print(json.dumps({"summary": {
            "records": len(records),
            "iterated": len(measured),
            "mean_abs_deviation": mean_dev,
        }}))
    else:
        header = ["bits", "a", "measured", "predicted", "verdict"]
        if args.timing:
            header.append("elapsed")
        print(_fmt_table(_bench_rows(records, args.timing), header))
        print(f"mean |measured - predicted| = {mean_dev:.3f} over {len(measured)} iterated inputs")
    return 0


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rootcert",
        description="Certify integers as exact squares/cubes and classify them mod 18.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("values", nargs="+",
                       help="decimal values, or a single '-' to stream lines from stdin")
        p.add_argument("--format", choices=("table", "json"), default="table")

    p_classify = sub.add_parser("classify", help="normalization, class mod 18 and root candidates")
    add_common(p_classify)
    p_classify.set_defaults(func=cmd_classify)

    p_root = sub.add_parser("root", help="certify an exact square or cube root")
    add_common(p_root)
    p_root.add_argument("--root", type=int, choices=(2, 3), default=2,
                        help="root degree (default 2)")
    p_root.add_argument("--trace", action="store_true",
                        help="print the per-step digit table")
    p_root.add_argument("--all-branches", action="store_true",
                        help="print failing candidate branches too")
    p_root.set_defaults(func=cmd_root)

    p_filter = sub.add_parser("filter", help="separate square candidates from twin-prime products")
    add_common(p_filter)
    p_filter.set_defaults(func=cmd_filter)

    p_bench = sub.add_parser("bench", help="measured vs predicted iteration counts")
    p_bench.add_argument("--bits", default="64", help="comma-separated bit sizes")
    p_bench.add_argument("--count", type=int, default=10, help="inputs per bit size")
    p_bench.add_argument("--seed", type=int, default=0, help="generator seed")
    p_bench.add_argument("--format", choices=("table", "json"), default="table")
    p_bench.add_argument("--timing", action="store_true",
                         help="include wall-clock timings (breaks byte-for-byte determinism)")
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT_ERROR if exc.code not in (0, None) else 0
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
