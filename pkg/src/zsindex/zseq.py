"""Sequences over Z_n: zero-sum and minimality predicates, weights, brute-force index.

The brute-force index scan in this module is the ground-truth oracle for
everything else in the package: certificate searches are validated against
it and counterexample reports carry its result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .modring import check_modulus

__all__ = [
    "MAX_LEN",
    "IndexResult",
    "Sequence",
    "index",
    "is_minimal_zero_sum",
    "is_zero_sum",
    "make_sequence",
    "nu",
    "scale",
    "weight",
]

MAX_LEN = 8


@dataclass(frozen=True)
class Sequence:
    """A multiset of nonzero residues modulo n, stored as an ascending tuple."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        check_modulus(self.n)
        if not 1 <= len(self.coeffs) <= MAX_LEN:
            raise ValueError(f"sequence length must be in [1, {MAX_LEN}], got {len(self.coeffs)}")
        prev = 1
        for x in self.coeffs:
            if not 1 <= x <= self.n - 1:
                raise ValueError(f"coefficient {x} outside [1, {self.n - 1}] for modulus {self.n}")
            if x < prev:
                raise ValueError("coefficients must be sorted ascending")
            prev = x

    def __len__(self) -> int:
        return len(self.coeffs)


@dataclass(frozen=True)
class IndexResult:
    """Minimal weight over all unit multipliers, as a fraction of n, with its witness.

    For a zero-sum sequence the value is a positive integer; value 1 means
    some unit m satisfies sum(|m*x_i|_n) = n and `witness` is the smallest
    such m.
    """

    value: Fraction
    witness: int


def make_sequence(n: int, coeffs: list[int] | tuple[int, ...]) -> Sequence:
    """Build a sequence: reduce each entry to its least positive residue, sort ascending.

    Entries congruent to 0 mod n are rejected; a zero term would itself be a
    zero-sum subsequence.
    """
    check_modulus(n)
    if not coeffs:
        raise ValueError("empty coefficient list")
    reduced = []
    for x in coeffs:
        r = x % n
        if r == 0:
            raise ValueError(f"coefficient {x} is divisible by {n} (zero class not allowed)")
        reduced.append(r)
    return Sequence(n, tuple(sorted(reduced)))


def is_zero_sum(seq: Sequence) -> bool:
    """True when the coefficients sum to 0 mod n."""
    return sum(seq.coeffs) % seq.n == 0


def nu(seq: Sequence) -> int:
    """The integer (sum of coefficients)/n of a zero-sum length-4 sequence.

    Always 1, 2 or 3, since each of the four coefficients lies in [1, n-1].
    """
    if len(seq.coeffs) != 4:
        raise ValueError("nu is defined for length-4 sequences")
    total = sum(seq.coeffs)
    if total % seq.n != 0:
        raise ValueError("nu requires a zero-sum sequence")
    return total // seq.n


def _minimal_zero_sum4_raw(n: int, x1: int, x2: int, x3: int, x4: int) -> bool:
    """All 14 proper nonempty subset sums of a zero-sum 4-tuple are nonzero mod n.

    Unrolled for the enumeration hot path; must stay equivalent to the
    generic bitmask check used by is_minimal_zero_sum.
    """
    return (
        x1 % n != 0
        and x2 % n != 0
        and x3 % n != 0
        and x4 % n != 0
        and (x1 + x2) % n != 0
        and (x1 + x3) % n != 0
        and (x1 + x4) % n != 0
        and (x2 + x3) % n != 0
        and (x2 + x4) % n != 0
        and (x3 + x4) % n != 0
        and (x1 + x2 + x3) % n != 0
        and (x1 + x2 + x4) % n != 0
        and (x1 + x3 + x4) % n != 0
        and (x2 + x3 + x4) % n != 0
    )


def _proper_subsets_nonzero(n: int, coeffs: tuple[int, ...]) -> bool:
    k = len(coeffs)
    for mask in range(1, (1 << k) - 1):
        s = 0
        for i in range(k):
            if mask >> i & 1:
                s += coeffs[i]
        if s % n == 0:
            return False
    return True


def is_minimal_zero_sum(seq: Sequence) -> bool:
    """True when seq is zero-sum and no nonempty proper sub-multiset sums to 0 mod n."""
    if not is_zero_sum(seq):
        return False
    if len(seq.coeffs) == 4:
        return _minimal_zero_sum4_raw(seq.n, *seq.coeffs)
    return _proper_subsets_nonzero(seq.n, seq.coeffs)


def weight(seq: Sequence, m: int) -> int:
    """Sum of the least positive residues of m*x_i; m must be a unit mod n.

    For a zero-sum sequence the result is always a positive multiple of n,
    so n itself is the smallest achievable weight.
    """
    n = seq.n
    if math.gcd(m, n) != 1:
        raise ValueError(f"{m} is not a unit modulo {n}")
    total = 0
    for x in seq.coeffs:
        total += (m * x) % n  # never 0: m is a unit and x is a nonzero class
    return total


def scale(seq: Sequence, u: int) -> Sequence:
    """Coefficientwise least positive residue of u*x_i, re-sorted; u must be a unit."""
    n = seq.n
    if math.gcd(u, n) != 1:
        raise ValueError(f"{u} is not a unit modulo {n}")
    return Sequence(n, tuple(sorted((u * x) % n for x in seq.coeffs)))


def index(seq: Sequence) -> IndexResult:
    """Minimal weight over all units as a fraction of n, with the smallest witness.

    Scans units in ascending order.  A weight of exactly n is a proven
    global minimum for any sequence (zero-sum weights are positive
    multiples of n; non-zero-sum weights are never congruent to 0), so the
    scan stops early at the first such hit, which makes the witness both
    the first and the smallest one.
    """
    n = seq.n
    coeffs = seq.coeffs
    best_w: int | None = None
    best_m = 1
    for m in range(1, n):
        if math.gcd(m, n) != 1:
            continue
        w = 0
        for x in coeffs:
            w += (m * x) % n
        if best_w is None or w < best_w:
            best_w, best_m = w, m
            if w == n:
                break
    assert best_w is not None
    return IndexResult(Fraction(best_w, n), best_m)
