"""Exhaustive generation of length-4 minimal zero-sum sequences, plus unit orbits.

The enumerator iterates all ordered triples (x1, x2, x3) and solves for the
unique x4, so it costs O(n^3/6) per modulus.  No cleverer sieve is used on
purpose: this stream is the trusted ground truth that every verification
mode builds on, and it must stay simple enough to audit by eye.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .modring import check_modulus, units
from .zseq import Sequence, _minimal_zero_sum4_raw

__all__ = ["OrbitRep", "iter_min_zero_sum4", "iter_orbit_reps", "orbit_canonical"]


@dataclass(frozen=True)
class OrbitRep:
    """Lexicographically least member of a unit orbit and the orbit's size."""

    rep: Sequence
    orbit_size: int


def iter_min_zero_sum4(n: int) -> Iterator[Sequence]:
    """Yield every minimal zero-sum length-4 sequence over Z_n exactly once.

    Tuples come out in strictly increasing lexicographic order: for each
    ascending (x1, x2, x3) the last coefficient is forced by the zero-sum
    condition, and it is kept only when x4 >= x3 and the 14 proper subset
    sums are all nonzero mod n.
    """
    check_modulus(n)
    for x1 in range(1, n):
        for x2 in range(x1, n):
            s12 = x1 + x2
            for x3 in range(x2, n):
                x4 = -(s12 + x3) % n
                if x4 < x3:  # covers x4 == 0 as well
                    continue
                if _minimal_zero_sum4_raw(n, x1, x2, x3, x4):
                    yield Sequence(n, (x1, x2, x3, x4))


def orbit_canonical(seq: Sequence) -> OrbitRep:
    """Canonical representative of the unit orbit of a length-4 sequence.

    The representative is the lexicographically least sorted coefficient
    tuple among all unit-scaled copies; orbit_size counts the distinct
    copies (it always divides phi(n)).
    """
    if len(seq.coeffs) != 4:
        raise ValueError("orbit_canonical expects a length-4 sequence")
    n = seq.n
    coeffs = seq.coeffs
    seen = set()
    best = coeffs
    for m in units(n):
        t = tuple(sorted((m * x) % n for x in coeffs))
        seen.add(t)
        if t < best:
            best = t
    return OrbitRep(Sequence(n, best), len(seen))


def iter_orbit_reps(n: int) -> Iterator[OrbitRep]:
    """Yield one OrbitRep per unit orbit of minimal zero-sum length-4 sequences.

    A sequence is emitted iff it is the lex-least member of its own orbit,
    so the union of the emitted orbits recovers iter_min_zero_sum4(n) with
    multiplicity orbit_size.  Streaming: no per-n materialization.
    """
    us = units(n)
    for seq in iter_min_zero_sum4(n):
        coeffs = seq.coeffs
        is_rep = True
        for m in us[1:]:
            if tuple(sorted((m * x) % n for x in coeffs)) < coeffs:
                is_rep = False
                break
        if is_rep:
            yield orbit_canonical(seq)
