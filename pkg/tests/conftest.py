"""Shared independent oracles for the test suite.

These deliberately reimplement functionality with different algorithms
(itertools subsets instead of bitmasks, factorization-based totient, full
unit scans without early exit) so that library code is always checked
against a second route.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations, combinations_with_replacement


def totient(n: int) -> int:
    """Euler phi via trial-division factorization."""
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            result -= result // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        result -= result // m
    return result


def factorize(n: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    m = n
    p = 2
    while p * p <= m:
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
        p += 1
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    return factors


def oracle_minimal_zero_sum(n: int, coeffs: tuple[int, ...]) -> bool:
    """Subset-based minimality oracle, independent of the library's checks."""
    if sum(coeffs) % n != 0:
        return False
    idx = range(len(coeffs))
    for size in range(1, len(coeffs)):
        for subset in combinations(idx, size):
            if sum(coeffs[i] for i in subset) % n == 0:
                return False
    return True


def oracle_enumerate4(n: int) -> list[tuple[int, ...]]:
    """All minimal zero-sum ascending 4-tuples over Z_n by full multiset scan."""
    out = []
    for tup in combinations_with_replacement(range(1, n), 4):
        if oracle_minimal_zero_sum(n, tup):
            out.append(tup)
    return out


def oracle_index(n: int, coeffs: tuple[int, ...]) -> tuple[Fraction, int]:
    """Full unit scan without early exit; returns (value, smallest witness)."""
    best_w = None
    best_m = None
    for m in range(1, n):
        if math.gcd(m, n) != 1:
            continue
        w = sum((m * x) % n or n for x in coeffs)
        if best_w is None or w < best_w:
            best_w, best_m = w, m
    assert best_w is not None and best_m is not None
    return Fraction(best_w, n), best_m
