"""Reduction of length-4 minimal zero-sum sequences to forced multipliers or (a, b, c) form.

Writing nu for (sum of coefficients)/n, the classification ladder is:

  nu = 1            -> multiplier 1 already has weight n
  nu = 3            -> multiplier n-1: sum(n - x_i) = n
  nu = 2, x3 < n/2  -> multiplier n-2 (odd n only)
  nu = 2, x2 > n/2  -> multiplier 2   (odd n only)

What survives is nu = 2 with x2 < n/2 < x3.  If some coefficient is a unit,
the sequence is rescaled so its smallest unit coefficient becomes 1 and the
ladder is applied again to the scaled tuple (scaling need not preserve nu
or the n/2 split).  A scaled tuple (1, y2, y3, y4) that still has nu = 2
and y2 < n/2 < y3 is recorded as the normal form

  a = n - y4,  b = n - y3,  c = y2,

which satisfies 1 + c = a + b and 1 < a <= b < c < n/2.  Everything else
is opaque and handled downstream by subgroup reduction or brute force.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .modring import inv
from .zseq import Sequence, is_minimal_zero_sum, make_sequence, nu, scale

__all__ = [
    "TAG_ALL_BIG",
    "TAG_ALL_SMALL",
    "TAG_NORMAL",
    "TAG_NU1",
    "TAG_NU3",
    "TAG_OPAQUE",
    "NormalForm",
    "ReductionOutcome",
    "classify",
    "normal_form_sequence",
    "to_unit_leading",
]

TAG_NU1 = "nu1"
TAG_NU3 = "nu3"
TAG_ALL_SMALL = "all_small"
TAG_ALL_BIG = "all_big"
TAG_NORMAL = "normal"
TAG_OPAQUE = "opaque"


@dataclass(frozen=True)
class NormalForm:
    """The triple (a, b, c) with 1 + c = a + b and 1 < a <= b < c < n/2.

    Its associated sequence is (1, c, n-b, n-a); the arithmetic constraints
    already force that sequence to be minimal zero-sum with nu = 2.
    """

    n: int
    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        n, a, b, c = self.n, self.a, self.b, self.c
        if 1 + c != a + b:
            raise ValueError(f"normal form needs 1 + c = a + b, got a={a} b={b} c={c}")
        if not (1 < a <= b < c):
            raise ValueError(f"normal form needs 1 < a <= b < c, got a={a} b={b} c={c}")
        if not 2 * c < n:
            raise ValueError(f"normal form needs c < n/2, got c={c} n={n}")


@dataclass(frozen=True)
class ReductionOutcome:
    """Result of classifying a sequence.

    When `scaling` is present the tag, forced multiplier and normal form all
    describe the unit-scaled copy scale(S, scaling); a forced multiplier fm
    then certifies the original sequence through lpr(fm * scaling, n).
    Without scaling they describe the sequence itself.
    """

    tag: str
    forced_multiplier: int | None = None
    normal_form: NormalForm | None = None
    scaling: int | None = None


def _require_minimal4(seq: Sequence) -> None:
    if len(seq.coeffs) != 4:
        raise ValueError("expected a length-4 sequence")
    if not is_minimal_zero_sum(seq):
        raise ValueError(f"{seq.coeffs} over {seq.n} is not minimal zero-sum")


def to_unit_leading(seq: Sequence) -> tuple[int, Sequence] | None:
    """Rescale so that some coefficient becomes 1, if any coefficient is a unit.

    Returns (m, scaled) where m is the inverse of the smallest unit
    coefficient (smallest for determinism), or None when every coefficient
    shares a factor with n.
    """
    _require_minimal4(seq)
    n = seq.n
    for x in seq.coeffs:
        if math.gcd(x, n) == 1:
            m = inv(x, n)
            return m, scale(seq, m)
    return None


def _forced(seq: Sequence) -> tuple[str, int] | None:
    """Forced-multiplier ladder on one tuple; None when nu=2 splits strictly around n/2."""
    n = seq.n
    v = nu(seq)
    if v == 1:
        return TAG_NU1, 1
    if v == 3:
        return TAG_NU3, n - 1
    x2, x3 = seq.coeffs[1], seq.coeffs[2]
    if n % 2 == 1:  # n-2 and 2 are units only for odd n
        if 2 * x3 < n:
            return TAG_ALL_SMALL, n - 2
        if 2 * x2 > n:
            return TAG_ALL_BIG, 2
    return None


def classify(seq: Sequence) -> ReductionOutcome:
    """Classify a minimal zero-sum length-4 sequence per the reduction ladder.

    Total: every valid input lands in exactly one of the six outcomes.  Even
    moduli route the 2*x = n boundary and the even-forced-multiplier shapes
    to opaque, because their would-be multipliers n-2 and 2 are not units.
    """
    _require_minimal4(seq)
    n = seq.n
    hit = _forced(seq)
    if hit is not None:
        tag, fm = hit
        return ReductionOutcome(tag, forced_multiplier=fm)
    x2, x3 = seq.coeffs[1], seq.coeffs[2]
    if not (2 * x2 < n < 2 * x3):
        return ReductionOutcome(TAG_OPAQUE)
    ul = to_unit_leading(seq)
    if ul is None:
        return ReductionOutcome(TAG_OPAQUE)
    m, scaled = ul
    hit = _forced(scaled)
    if hit is not None:
        tag, fm = hit
        return ReductionOutcome(tag, forced_multiplier=fm, scaling=m)
    y2, y3, y4 = scaled.coeffs[1], scaled.coeffs[2], scaled.coeffs[3]
    if not (2 * y2 < n < 2 * y3):
        return ReductionOutcome(TAG_OPAQUE, scaling=m)
    nf = NormalForm(n, n - y4, n - y3, y2)
    return ReductionOutcome(TAG_NORMAL, normal_form=nf, scaling=m)


def normal_form_sequence(nf: NormalForm) -> Sequence:
    """The sequence (1, c, n-b, n-a) associated with a normal form."""
    return make_sequence(nf.n, [1, nf.c, nf.n - nf.b, nf.n - nf.a])
