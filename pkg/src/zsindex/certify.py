"""Constructive certificate searches proving that a sequence has index 1.

A certificate is a unit multiplier m with sum(|m*x_i|_n) = n.  For a normal
form (a, b, c) the searches are, in pipeline order:

  small_a          a = 2 special construction (odd n)
  interval         m in [k*n/c, k*n/b] with gcd(m, n) = 1, k <= b and m*a < n;
                   the weight then telescopes to m + (mc-kn) + (kn-mb) + (n-ma) = n
  half_interval    for t = 0..floor(s/2)-1 with s = floor(b/a), an integer
                   coprime to n inside [(2s-2t-1)n/2b, (s-t)n/b]; such M has
                   |Ma|_n > n/2 and |Mb|_n > n/2
  majority_small   M <= n/2 coprime to n with at least two of
                   |Ma|_n > n/2, |Mb|_n > n/2, |Mc|_n < n/2

The last two produce an intermediate multiplier M under which at least
three scaled coefficients drop below n/2; `finalize` composes M with the
forced multipliers 1, n-1, n-2, 2 to finish.  Whatever the searches miss
falls through to subgroup reduction and finally to the brute-force index
scan, which is the oracle of record.

All interval comparisons are cross-multiplied integer comparisons; no
floating point anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .normalform import TAG_NORMAL, NormalForm, classify, normal_form_sequence
from .zseq import IndexResult, Sequence, index, weight

__all__ = [
    "DERIVATIONS",
    "BRUTE_FORCE",
    "FORCED",
    "HALF_INTERVAL",
    "INTERVAL",
    "LIFTED",
    "MAJORITY_SMALL",
    "SMALL_A",
    "Certificate",
    "CertificateMiss",
    "CounterexampleReport",
    "ShapeStats",
    "find_certificate",
    "finalize",
    "make_certificate",
    "search_half_interval",
    "search_interval",
    "search_majority_small",
    "shape_stats",
    "small_a_certificate",
    "verify_certificate",
]

FORCED = "forced"
SMALL_A = "small_a"
INTERVAL = "interval"
HALF_INTERVAL = "half_interval"
MAJORITY_SMALL = "majority_small"
LIFTED = "lifted"
BRUTE_FORCE = "brute_force"

DERIVATIONS = frozenset(
    {FORCED, SMALL_A, INTERVAL, HALF_INTERVAL, MAJORITY_SMALL, LIFTED, BRUTE_FORCE}
)


class CertificateMiss(Exception):
    """A constructive search that is expected to succeed found nothing."""


@dataclass(frozen=True)
class Certificate:
    """A unit multiplier m with weight n for the sequence it certifies.

    k is the interval index and is only present for interval-derived
    certificates whose m satisfies k*n <= m*c, m*b <= k*n, 1 <= k <= b and
    m*a < n against the sequence's own normal form.
    """

    m: int
    derivation: str
    k: int | None = None

    def __post_init__(self) -> None:
        if self.derivation not in DERIVATIONS:
            raise ValueError(f"unknown derivation tag {self.derivation!r}")


@dataclass(frozen=True)
class CounterexampleReport:
    """A minimal zero-sum sequence whose brute-force index is 2 or more."""

    sequence: Sequence
    result: IndexResult


def verify_certificate(seq: Sequence, m: int) -> bool:
    """True iff gcd(m, n) = 1 and the weight of seq under m is exactly n."""
    if math.gcd(m, seq.n) != 1:
        return False
    return weight(seq, m) == seq.n


def make_certificate(seq: Sequence, m: int, derivation: str, k: int | None = None) -> Certificate:
    """Construct a certificate, checking the weight-n property against seq."""
    if not verify_certificate(seq, m):
        raise ValueError(f"multiplier {m} does not certify {seq.coeffs} over {seq.n}")
    return Certificate(m=m, derivation=derivation, k=k)


@dataclass(frozen=True)
class ShapeStats:
    """Shape statistics of a normal form: s = floor(b/a) and the interval index k1.

    k1 is the largest k >= 1 such that [(k-1)n/c, (k-1)n/b) contains no
    integer (equivalently ceil((k-1)n/c) = ceil((k-1)n/b)) while
    [k*n/c, k*n/b) contains one; it always exists and satisfies k1 <= b.
    """

    s: int
    k1: int


def _ceil_div(p: int, q: int) -> int:
    return -(-p // q)


def _open_interval_nonempty(n: int, b: int, c: int, k: int) -> bool:
    """Does [k*n/c, k*n/b) contain an integer?  Exact, via cross-multiplication."""
    m0 = _ceil_div(k * n, c)
    return m0 * b < k * n


def shape_stats(nf: NormalForm) -> ShapeStats:
    n, a, b, c = nf.n, nf.a, nf.b, nf.c
    s = b // a
    k1 = 0
    prev_nonempty = False  # the k = 0 interval [0, 0) is empty
    for k in range(1, b + 1):
        nonempty = _open_interval_nonempty(n, b, c, k)
        if nonempty and not prev_nonempty:
            k1 = k
        prev_nonempty = nonempty
    # Existence: any interval of index >= b has length > 2, so the first
    # nonempty interval qualifies and no index past b can.
    assert 1 <= k1 <= b, f"no interval index found for {nf}"
    return ShapeStats(s=s, k1=k1)


def search_interval(nf: NormalForm) -> Certificate | None:
    """First (k, m), k ascending then m ascending, with m in [k*n/c, k*n/b],
    gcd(m, n) = 1, 1 <= k <= b and m*a < n.

    Both interval endpoints are closed; an endpoint with m*c = k*n or
    m*b = k*n can never be coprime to n, so the convention costs nothing.
    """
    n, a, b, c = nf.n, nf.a, nf.b, nf.c
    seq = normal_form_sequence(nf)
    for k in range(1, b + 1):
        lo = _ceil_div(k * n, c)
        hi = (k * n) // b
        for m in range(lo, hi + 1):
            if m * a < n and math.gcd(m, n) == 1:
                return make_certificate(seq, m, INTERVAL, k=k)
    return None


def search_majority_small(nf: NormalForm) -> int | None:
    """Smallest M in [1, n/2] coprime to n for which at least two of
    |Ma|_n > n/2, |Mb|_n > n/2, |Mc|_n < n/2 hold.

    Any such M leaves at least three of the four scaled coefficients of the
    normal-form sequence below n/2; finalize turns that into a certificate.
    """
    n, a, b, c = nf.n, nf.a, nf.b, nf.c
    for cand in range(1, n // 2 + 1):
        if math.gcd(cand, n) != 1:
            continue
        hits = 0
        if 2 * ((cand * a) % n) > n:
            hits += 1
        if 2 * ((cand * b) % n) > n:
            hits += 1
        if 2 * ((cand * c) % n) < n:
            hits += 1
        if hits >= 2:
            return cand
    return None


def search_half_interval(nf: NormalForm) -> int | None:
    """First integer coprime to n in [(2s-2t-1)n/2b, (s-t)n/b] for t = 0, 1, ...

    Applicable only when s = floor(b/a) >= 2 (raises ValueError otherwise,
    which is distinct from a plain miss); t runs up to floor(s/2) - 1.
    """
    n, a, b = nf.n, nf.a, nf.b
    s = b // a
    if s < 2:
        raise ValueError(f"half-interval search needs floor(b/a) >= 2, got s={s}")
    for t in range(s // 2):
        lo = _ceil_div((2 * s - 2 * t - 1) * n, 2 * b)
        hi = ((s - t) * n) // b
        for cand in range(lo, hi + 1):
            if math.gcd(cand, n) == 1:
                return cand
    return None


def finalize(seq: Sequence, mid: int, derivation: str) -> Certificate | None:
    """Compose an intermediate multiplier with the forced multipliers 1, n-1, n-2, 2.

    Tries m = |mid|_n, |(n-1)mid|_n, |(n-2)mid|_n, |2 mid|_n in that order
    and returns the first unit with weight n, or None if none certifies.
    """
    n = seq.n
    if math.gcd(mid, n) != 1:
        raise ValueError(f"{mid} is not a unit modulo {n}")
    for factor in (1, n - 1, n - 2, 2):
        m = (factor * mid) % n
        if math.gcd(m, n) == 1 and weight(seq, m) == n:
            return make_certificate(seq, m, derivation)
    return None


def small_a_certificate(nf: NormalForm) -> Certificate:
    """Certificate for a normal form with a = 2 over an odd modulus.

    The sequence is (1, b+1, n-b, n-2).  For even b = 2t the multiplier
    (n-1)/2 works outright: the weight telescopes to m + (m-t) + t + 1 = n.
    For odd b = 2t+1, scaling by (n-1)/2 yields the normal form
    (a', b', c') = (t+1, (n-b)/2, (n-1)/2); every k >= ceil((n-b)/2b) puts
    the odd number 2k+1 inside [k*n/c', k*n/b'], so the scan takes the first
    such 2k+1 that is coprime to n and keeps (2k+1)*a' < n, then composes
    back through (n-1)/2.  Raises CertificateMiss when no candidate
    qualifies (possible for small moduli; the pipeline falls through to the
    general searches).
    """
    n, a, b = nf.n, nf.a, nf.b
    if a != 2:
        raise ValueError(f"small_a_certificate requires a = 2, got a={a}")
    if n % 2 == 0:
        raise ValueError("small_a_certificate requires an odd modulus")
    seq = normal_form_sequence(nf)
    half = (n - 1) // 2
    if b % 2 == 0:
        return make_certificate(seq, half, SMALL_A)
    t = (b - 1) // 2
    inner = NormalForm(n, t + 1, (n - b) // 2, half)  # the rescaled shape
    k = _ceil_div(n - b, 2 * b)
    while (2 * k + 1) * inner.a < n:
        m_odd = 2 * k + 1
        if math.gcd(m_odd, n) == 1:
            return make_certificate(seq, (m_odd * half) % n, SMALL_A)
        k += 1
    raise CertificateMiss(
        f"no odd multiplier certifies the b-odd construction for {nf}"
    )


def _compose(seq: Sequence, cert: Certificate, scaling: int | None) -> Certificate:
    """Turn a certificate for scale(seq, scaling) into one for seq itself.

    The interval index only survives an identity scaling; otherwise the
    composed multiplier no longer satisfies the k-interval inequalities.
    """
    if scaling is None or scaling == 1:
        return make_certificate(seq, cert.m % seq.n, cert.derivation, k=cert.k)
    return make_certificate(seq, (cert.m * scaling) % seq.n, cert.derivation)


def find_certificate(
    seq: Sequence, trace: list[str] | None = None
) -> Certificate | CounterexampleReport:
    """Run the full certificate pipeline on a minimal zero-sum length-4 sequence.

    Stage order (cheapest first): forced multiplier from classification,
    then on a normal form the a=2 construction, the interval search, the
    half-interval and majority-small searches (each finished through
    `finalize`), then subgroup reduction with witness lifting, and finally
    the brute-force scan.  A counterexample is a value, not an error.
    """
    log = trace.append if trace is not None else None
    out = classify(seq)
    if log:
        nf_txt = (
            f" normal_form=(a={out.normal_form.a}, b={out.normal_form.b}, c={out.normal_form.c})"
            if out.normal_form
            else ""
        )
        log(
            f"classify: tag={out.tag} forced_multiplier={out.forced_multiplier}"
            f" scaling={out.scaling}{nf_txt}"
        )
    if out.forced_multiplier is not None:
        fm = out.forced_multiplier
        if out.scaling is not None:
            fm = (fm * out.scaling) % seq.n
        cert = make_certificate(seq, fm, FORCED)
        if log:
            log(f"forced: m={cert.m}")
        return cert

    if out.tag == TAG_NORMAL:
        nf = out.normal_form
        assert nf is not None
        nf_seq = normal_form_sequence(nf)
        if nf.a == 2 and nf.n % 2 == 1:
            try:
                cert = small_a_certificate(nf)
                if log:
                    log(f"small_a: hit m={cert.m}")
                return _compose(seq, cert, out.scaling)
            except CertificateMiss as miss:
                if log:
                    log(f"small_a: miss ({miss})")
        cert = search_interval(nf)
        if cert is not None:
            if log:
                log(f"interval: hit k={cert.k} m={cert.m}")
            return _compose(seq, cert, out.scaling)
        if log:
            log("interval: miss")
        stats = shape_stats(nf)
        if log:
            log(f"shape: s={stats.s} k1={stats.k1}")
        if stats.s >= 2:
            mid = search_half_interval(nf)
            if mid is not None:
                cert = finalize(nf_seq, mid, HALF_INTERVAL)
                if cert is not None:
                    if log:
                        log(f"half_interval: M={mid} -> m={cert.m}")
                    return _compose(seq, cert, out.scaling)
                if log:
                    log(f"half_interval: M={mid} but no finisher certified")
            elif log:
                log("half_interval: miss")
        elif log:
            log("half_interval: skipped (s < 2)")
        mid = search_majority_small(nf)
        if mid is not None:
            cert = finalize(nf_seq, mid, MAJORITY_SMALL)
            if cert is not None:
                if log:
                    log(f"majority_small: M={mid} -> m={cert.m}")
                return _compose(seq, cert, out.scaling)
            if log:
                log(f"majority_small: M={mid} but no finisher certified")
        elif log:
            log("majority_small: miss")

    # Opaque outcome or a pipeline miss: reduce into a subgroup if possible.
    from .subgroup import lift_witness, try_subgroup_reduce  # local import, avoids a cycle

    reduction = try_subgroup_reduce(seq)
    if reduction is not None:
        if log:
            log(f"subgroup: d={reduction.d} reduced modulus={reduction.reduced.n}")
        sub = find_certificate(reduction.reduced, trace=trace)
        if isinstance(sub, Certificate):
            cert = lift_witness(reduction, sub.m)
            if log:
                log(f"lifted: m={cert.m}")
            return cert
        if log:
            log("subgroup: reduced sequence has no certificate, falling back")
    elif log:
        log("subgroup: not reducible")

    result = index(seq)
    if result.value == 1:
        cert = make_certificate(seq, result.witness, BRUTE_FORCE)
        if log:
            log(f"brute_force: witness m={cert.m}")
        return cert
    if log:
        log(f"counterexample: index={result.value} at m={result.witness}")
    return CounterexampleReport(sequence=seq, result=result)
