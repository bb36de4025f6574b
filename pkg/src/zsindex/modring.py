"""Exact residue and unit-group arithmetic over Z_n.

Residues follow the least-positive convention: every class is represented
by an integer in [1, n], with the zero class represented by n itself.
Python integers are unbounded, so all operations are overflow-safe for
arbitrarily large moduli.
"""

from __future__ import annotations

import math

__all__ = ["check_modulus", "gcd", "inv", "lpr", "units"]


def check_modulus(n: int) -> int:
    """Validate a modulus; every construction in this package needs n >= 3."""
    if n < 3:
        raise ValueError(f"modulus must be at least 3, got {n}")
    return n


def lpr(x: int, n: int) -> int:
    """Least positive residue of x modulo n: the unique r in [1, n] with r == x (mod n)."""
    check_modulus(n)
    r = x % n
    return r if r else n


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two nonnegative integers, not both zero."""
    if a < 0 or b < 0:
        raise ValueError("gcd arguments must be nonnegative")
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def units(n: int) -> list[int]:
    """All m in [1, n-1] coprime to n, in ascending order.

    The ascending order is load-bearing: every "first witness" scan in the
    package inherits its determinism from it.
    """
    check_modulus(n)
    return [m for m in range(1, n) if math.gcd(m, n) == 1]


def inv(m: int, n: int) -> int:
    """Multiplicative inverse of a unit m modulo n, returned in [1, n-1]."""
    check_modulus(n)
    if math.gcd(m, n) != 1:
        raise ValueError(f"{m} is not a unit modulo {n}")
    # pow with exponent -1 runs the extended Euclidean algorithm in C.
    return pow(m, -1, n)
