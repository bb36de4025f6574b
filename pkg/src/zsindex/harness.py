"""Range verification: run the certificate pipeline over every sequence of every modulus.

A verification run produces one report per modulus: how many sequences and
orbits were checked, a histogram of certificate derivations, the number of
pipeline gaps (brute-force fallbacks on unit-leading sequences over moduli
that the constructive machinery is expected to cover), and any sequences
whose brute-force index is 2 or more.

Reports serialize to one JSON object per line with a stable key order, so
runs are diffable; wall time is kept on the in-memory report but excluded
from the serialized form to keep repeated runs byte-identical.
"""

from __future__ import annotations

import json
import math
import random
import time
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial

from .certify import BRUTE_FORCE, Certificate, CounterexampleReport, find_certificate
from .enumeration import iter_min_zero_sum4, iter_orbit_reps
from .zseq import IndexResult, Sequence, index

__all__ = [
    "FILTERS",
    "MODES",
    "VerificationReport",
    "find_counterexample",
    "in_constructive_domain",
    "report_to_json",
    "verify_modulus",
    "verify_range",
]

MODES = ("full", "orbits", "sample")
FILTERS = ("coprime6", "two_prime_powers", "all")

DEFAULT_SAMPLE_INTERVAL = 100
DEFAULT_SEED = 0


@dataclass
class VerificationReport:
    n: int
    mode: str
    sequences_checked: int
    orbits_checked: int
    derivation_histogram: dict[str, int]
    pipeline_gaps: int
    counterexamples: list[tuple[Sequence, IndexResult]]
    wall_time: float = field(default=0.0)


def _distinct_prime_factors(n: int) -> int:
    count = 0
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            count += 1
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        count += 1
    return count


def in_constructive_domain(n: int) -> bool:
    """Moduli the certificate searches are expected to cover without brute force:
    gcd(n, 6) = 1 and at most two distinct prime factors."""
    return math.gcd(n, 6) == 1 and _distinct_prime_factors(n) <= 2


def _is_unit_leading(seq: Sequence) -> bool:
    return any(math.gcd(x, seq.n) == 1 for x in seq.coeffs)


def _passes_filter(n: int, filter_name: str) -> bool:
    if filter_name == "coprime6":
        return math.gcd(n, 6) == 1
    if filter_name == "two_prime_powers":
        return in_constructive_domain(n)
    if filter_name == "all":
        return True
    raise ValueError(f"unknown filter {filter_name!r}, expected one of {FILTERS}")


def verify_modulus(
    n: int,
    mode: str = "full",
    *,
    sample_interval: int = DEFAULT_SAMPLE_INTERVAL,
    seed: int = DEFAULT_SEED,
) -> VerificationReport:
    """Verify one modulus.

    full:   run find_certificate on every minimal zero-sum length-4 sequence.
    orbits: run it on one representative per unit orbit (index is constant
            on orbits, so this settles the same question about phi(n) times cheaper).
    sample: run it only on a deterministic 1-in-K subset of the sequences.

    In every mode a deterministic 1-in-K sample (seeded by n, K =
    sample_interval) of the processed sequences is cross-checked against
    the full brute-force index; a disagreement raises RuntimeError since it
    would mean the pipeline and the oracle diverged.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}, expected one of {MODES}")
    t0 = time.perf_counter()
    rng = random.Random(f"{seed}:{n}")
    histogram: dict[str, int] = {}
    counterexamples: list[tuple[Sequence, IndexResult]] = []
    gaps = 0
    sequences_checked = 0
    orbits_checked = 0
    domain = in_constructive_domain(n)

    def process(seq: Sequence, crosscheck: bool) -> None:
        nonlocal gaps
        outcome = find_certificate(seq)
        if isinstance(outcome, Certificate):
            histogram[outcome.derivation] = histogram.get(outcome.derivation, 0) + 1
            if outcome.derivation == BRUTE_FORCE and domain and _is_unit_leading(seq):
                gaps += 1
        else:
            counterexamples.append((seq, outcome.result))
        if crosscheck:
            oracle = index(seq)
            if isinstance(outcome, Certificate) != (oracle.value == 1):
                raise RuntimeError(
                    f"pipeline/oracle disagreement on {seq.coeffs} over {n}: "
                    f"pipeline={outcome!r} oracle={oracle!r}"
                )

    if mode == "full":
        for seq in iter_min_zero_sum4(n):
            sequences_checked += 1
            process(seq, crosscheck=rng.randrange(sample_interval) == 0)
    elif mode == "orbits":
        for orbit in iter_orbit_reps(n):
            orbits_checked += 1
            sequences_checked += orbit.orbit_size
            process(orbit.rep, crosscheck=rng.randrange(sample_interval) == 0)
    else:  # sample
        for seq in iter_min_zero_sum4(n):
            if rng.randrange(sample_interval) == 0:
                sequences_checked += 1
                process(seq, crosscheck=True)

    return VerificationReport(
        n=n,
        mode=mode,
        sequences_checked=sequences_checked,
        orbits_checked=orbits_checked,
        derivation_histogram=dict(sorted(histogram.items())),
        pipeline_gaps=gaps,
        counterexamples=counterexamples,
        wall_time=time.perf_counter() - t0,
    )


def verify_range(
    from_n: int,
    to_n: int,
    filter_name: str = "coprime6",
    mode: str = "full",
    *,
    jobs: int = 1,
    sample_interval: int = DEFAULT_SAMPLE_INTERVAL,
    seed: int = DEFAULT_SEED,
) -> Iterator[VerificationReport]:
    """Yield one report per qualifying modulus in [from_n, to_n], in ascending n order.

    Moduli are independent work units; with jobs > 1 they are verified in a
    process pool, but emission order stays ascending regardless of
    completion order.
    """
    if not 3 <= from_n <= to_n:
        raise ValueError(f"need 3 <= from <= to, got from={from_n} to={to_n}")
    moduli = [n for n in range(from_n, to_n + 1) if _passes_filter(n, filter_name)]
    worker = partial(verify_modulus, mode=mode, sample_interval=sample_interval, seed=seed)
    if jobs <= 1 or len(moduli) <= 1:
        for n in moduli:
            yield worker(n)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(worker, moduli)


def find_counterexample(n: int) -> tuple[Sequence, IndexResult] | None:
    """First (lexicographic) minimal zero-sum length-4 sequence with index >= 2, if any.

    Uses the brute-force index directly; the certificate pipeline is not
    consulted, so this is an independent oracle scan.
    """
    for seq in iter_min_zero_sum4(n):
        result = index(seq)
        if result.value > 1:
            return seq, result
    return None


def _fraction_json(value: Fraction) -> int | str:
    return int(value) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def report_to_json(report: VerificationReport) -> str:
    """One-line JSON form with stable key order; wall_time deliberately excluded."""
    payload = {
        "n": report.n,
        "mode": report.mode,
        "sequences_checked": report.sequences_checked,
        "orbits_checked": report.orbits_checked,
        "derivation_histogram": dict(sorted(report.derivation_histogram.items())),
        "pipeline_gaps": report.pipeline_gaps,
        "counterexamples": [
            {"seq": list(seq.coeffs), "value": _fraction_json(res.value), "witness": res.witness}
            for seq, res in report.counterexamples
        ],
    }
    return json.dumps(payload, separators=(", ", ": "))
