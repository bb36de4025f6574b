"""Subgroup reduction: divide out a common factor of all coefficients and lift witnesses back.

When d = gcd(x1, x2, x3, x4, n) exceeds 1 the sequence lives inside the
subgroup of index d, where it becomes a minimal zero-sum sequence over
Z_{n/d} (subset sums scale exactly by d, so minimality transfers both
ways).  A certificate m for the reduced sequence lifts back by shifting in
steps of n/d until the result is coprime to n, which takes fewer than d
steps: for each prime p dividing d but not n/d the shift walks through all
residue classes mod p, and the primes shared with n/d never obstruct.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .certify import LIFTED, Certificate, make_certificate
from .zseq import Sequence, is_minimal_zero_sum, weight

__all__ = ["SubgroupReduction", "lift_witness", "try_subgroup_reduce"]


@dataclass(frozen=True)
class SubgroupReduction:
    """A common divisor d > 1 of all coefficients and n, with the divided-out sequence."""

    d: int
    reduced: Sequence
    original_n: int


def try_subgroup_reduce(seq: Sequence) -> SubgroupReduction | None:
    """Reduce by d = gcd(all coefficients, n) when d > 1 and n/d >= 3."""
    if len(seq.coeffs) != 4:
        raise ValueError("subgroup reduction expects a length-4 sequence")
    if not is_minimal_zero_sum(seq):
        raise ValueError(f"{seq.coeffs} over {seq.n} is not minimal zero-sum")
    n = seq.n
    d = n
    for x in seq.coeffs:
        d = math.gcd(d, x)
    if d <= 1 or n // d < 3:
        return None
    reduced = Sequence(n // d, tuple(x // d for x in seq.coeffs))
    return SubgroupReduction(d=d, reduced=reduced, original_n=n)


def lift_witness(reduction: SubgroupReduction, m_sub: int) -> Certificate:
    """Lift a certificate of the reduced sequence to the original modulus.

    Precondition: m_sub is a unit mod n/d and certifies the reduced
    sequence.  The lifted multiplier is m_sub + t*(n/d) for the first
    t >= 0 making it coprime to n; since |m * d * y|_n = d * |m * y|_{n/d},
    its weight against the original sequence is d * (n/d) = n.
    """
    n = reduction.original_n
    d = reduction.d
    n_sub = reduction.reduced.n
    if math.gcd(m_sub, n_sub) != 1:
        raise ValueError(f"{m_sub} is not a unit modulo {n_sub}")
    if weight(reduction.reduced, m_sub) != n_sub:
        raise ValueError(f"{m_sub} does not certify the reduced sequence")
    original = Sequence(n, tuple(x * d for x in reduction.reduced.coeffs))
    base = m_sub % n_sub
    for t in range(d):
        m = base + t * n_sub
        if math.gcd(m, n) == 1:
            return make_certificate(original, m, LIFTED)
    raise AssertionError("unreachable: a coprime lift exists within d steps")
