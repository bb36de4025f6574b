"""Command-line interface.

Subcommands:
  index           exact index of one sequence, as JSON
  witness         certificate with derivation tag, optionally with the pipeline trace
  enumerate       all minimal zero-sum length-4 sequences (or orbit reps) for one modulus
  verify          range verification, one JSON report line per modulus
  counterexample  first sequence with index >= 2 for one modulus, or "none"

verify exits 0 when no counterexample was found, 1 when one was, 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .certify import Certificate, find_certificate
from .enumeration import iter_min_zero_sum4, iter_orbit_reps
from .harness import (
    DEFAULT_SAMPLE_INTERVAL,
    DEFAULT_SEED,
    FILTERS,
    MODES,
    find_counterexample,
    report_to_json,
    verify_range,
)
from .zseq import index, make_sequence

__all__ = ["build_parser", "entrypoint", "main"]


def _parse_seq(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zsindex",
        description="Index computation and certificate search for zero-sum sequences over Z_n.",
    )
    parser.add_argument("--version", action="version", version=f"zsindex {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_index = sub.add_parser("index", help="exact index of one sequence")
    p_index.add_argument("--n", type=int, required=True)
    p_index.add_argument("--seq", type=_parse_seq, required=True, metavar="a,b,c,d")

    p_witness = sub.add_parser("witness", help="certificate for one sequence")
    p_witness.add_argument("--n", type=int, required=True)
    p_witness.add_argument("--seq", type=_parse_seq, required=True, metavar="a,b,c,d")
    p_witness.add_argument("--explain", action="store_true", help="include the pipeline trace")

    p_enum = sub.add_parser("enumerate", help="list minimal zero-sum length-4 sequences")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--orbits", action="store_true", help="one orbit representative per line")

    p_verify = sub.add_parser("verify", help="verify a range of moduli")
    p_verify.add_argument("--from", dest="from_n", type=int, required=True, metavar="A")
    p_verify.add_argument("--to", dest="to_n", type=int, required=True, metavar="B")
    p_verify.add_argument(
        "--filter", choices=("coprime6", "two-prime-powers", "all"), default="coprime6"
    )
    p_verify.add_argument("--mode", choices=MODES, default="full")
    p_verify.add_argument("--jobs", type=int, default=1, metavar="J")
    p_verify.add_argument("--out", type=str, default=None, metavar="FILE")

    p_cex = sub.add_parser("counterexample", help="first index >= 2 sequence for one modulus")
    p_cex.add_argument("--n", type=int, required=True)

    return parser


def _cmd_index(args: argparse.Namespace) -> int:
    seq = make_sequence(args.n, args.seq)
    result = index(seq)
    value = int(result.value) if result.value.denominator == 1 else str(result.value)
    print(
        json.dumps(
            {"n": args.n, "seq": list(seq.coeffs), "value": value, "witness": result.witness}
        )
    )
    return 0


def _cmd_witness(args: argparse.Namespace) -> int:
    seq = make_sequence(args.n, args.seq)
    trace: list[str] | None = [] if args.explain else None
    outcome = find_certificate(seq, trace=trace)
    payload: dict = {"n": args.n, "seq": list(seq.coeffs)}
    if isinstance(outcome, Certificate):
        payload["certificate"] = {"m": outcome.m, "k": outcome.k, "derivation": outcome.derivation}
        code = 0
    else:
        payload["certificate"] = None
        payload["counterexample"] = {
            "value": int(outcome.result.value),
            "witness": outcome.result.witness,
        }
        code = 1
    if trace is not None:
        payload["trace"] = trace
    print(json.dumps(payload))
    return code


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if args.orbits:
        for orbit in iter_orbit_reps(args.n):
            print(",".join(map(str, orbit.rep.coeffs)), orbit.orbit_size)
    else:
        for seq in iter_min_zero_sum4(args.n):
            print(",".join(map(str, seq.coeffs)))
    return 0


def _cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if not 3 <= args.from_n <= args.to_n:
        parser.error(f"need 3 <= --from <= --to, got {args.from_n}..{args.to_n}")
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    filter_name = args.filter.replace("-", "_")
    manifest = {
        "manifest": {
            "version": __version__,
            "from": args.from_n,
            "to": args.to_n,
            "filter": filter_name,
            "mode": args.mode,
            "sample_interval": DEFAULT_SAMPLE_INTERVAL,
            "seed": DEFAULT_SEED,
        }
    }
    out = open(args.out, "w") if args.out else sys.stdout
    t0 = time.perf_counter()
    moduli = 0
    sequences = 0
    counterexamples = 0
    try:
        print(json.dumps(manifest, separators=(", ", ": ")), file=out)
        for report in verify_range(
            args.from_n, args.to_n, filter_name, args.mode, jobs=args.jobs
        ):
            print(report_to_json(report), file=out)
            moduli += 1
            sequences += report.sequences_checked
            counterexamples += len(report.counterexamples)
    finally:
        if args.out:
            out.close()
    print(
        f"verified {moduli} moduli, {sequences} sequences, "
        f"{counterexamples} counterexamples in {time.perf_counter() - t0:.2f}s",
        file=sys.stderr,
    )
    return 1 if counterexamples else 0


def _cmd_counterexample(args: argparse.Namespace) -> int:
    hit = find_counterexample(args.n)
    if hit is None:
        print("none")
        return 0
    seq, result = hit
    print(
        json.dumps(
            {
                "n": args.n,
                "seq": list(seq.coeffs),
                "value": int(result.value),
                "witness": result.witness,
            }
        )
    )
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "index":
            return _cmd_index(args)
        if args.command == "witness":
            return _cmd_witness(args)
        if args.command == "enumerate":
            return _cmd_enumerate(args)
        if args.command == "verify":
            return _cmd_verify(args, parser)
        if args.command == "counterexample":
            return _cmd_counterexample(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError(f"unhandled command {args.command!r}")


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
