"""Rank lower-bound formulas, evaluated in exact rational arithmetic.

The probabilistic tail bound n/2 - 21*sqrt(n*ln n) is irrational, so it is
replaced by a certified rational lower bound: ln n is over-approximated by a
truncated atanh series plus an explicit geometric tail, sqrt by an integer
square root rounded up.  Asserting rank >= floor(lower bound) is then sound
for the original inequality.  Natural log throughout.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import isqrt

_ATANH_TERMS = 30
_SQRT_SCALE = 10**20


def transitive_floor_bound(n: int) -> int:
    """floor(2n/3) - 1, the transitive-tournament rank floor."""
    return (2 * n) // 3 - 1


def reversal_sum_bound(n: int) -> int:
    """n - 2, the rank floor of the pair-sum matrix in odd characteristic."""
    return n - 2


def constant_seq_bound(n: int) -> int:
    """n - 1, the rank floor for constant weights over any field."""
    return n - 1


def finite_field_bound(n: int, p: int) -> Fraction:
    """n/(p - 1) - 1, the rank floor over the p-element field, any weights."""
    return Fraction(n, p - 1) - 1


def _atanh_upper(z: Fraction) -> Fraction:
    """Upper bound on atanh(z) for 0 <= z < 1: partial sum plus geometric tail."""
    total = Fraction(0)
    zsq = z * z
    power = z
    for i in range(_ATANH_TERMS):
        total += power / (2 * i + 1)
        power *= zsq
    # remaining terms are below power/(2m+1) * (1 + zsq + zsq^2 + ...)
    tail = power / ((2 * _ATANH_TERMS + 1) * (1 - zsq))
    return total + tail


@lru_cache(maxsize=None)
def _ln2_upper() -> Fraction:
    return 2 * _atanh_upper(Fraction(1, 3))


@lru_cache(maxsize=None)
def ln_upper(n: int) -> Fraction:
    """A rational upper bound on ln(n) for integer n >= 1."""
    if n < 1:
        raise ValueError(f"ln_upper needs n >= 1, got {n}")
    if n == 1:
        return Fraction(0)
    k = n.bit_length() - 1
    y = Fraction(n, 2**k)  # in [1, 2)
    z = (y - 1) / (y + 1)  # in [0, 1/3)
    return k * _ln2_upper() + 2 * _atanh_upper(z)


def sqrt_upper(q: Fraction) -> Fraction:
    """A rational upper bound on sqrt(q) for q >= 0."""
    q = Fraction(q)
    if q < 0:
        raise ValueError(f"sqrt_upper needs q >= 0, got {q}")
    s = _SQRT_SCALE
    scaled = -((-q.numerator * s * s) // q.denominator)  # ceil(q * s^2)
    return Fraction(isqrt(scaled) + 1, s)


def half_minus_tail_bound(n: int) -> Fraction:
    """A certified rational lower bound of n/2 - 21*sqrt(n*ln n)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    tail = 21 * sqrt_upper(n * ln_upper(n))
    return Fraction(n, 2) - tail


def half_minus_tail_floor(n: int) -> int:
    """Integer floor of the certified bound; the value actually asserted."""
    b = half_minus_tail_bound(n)
    return b.numerator // b.denominator


def half_minus_tail_vacuous(n: int) -> bool:
    """True when the bound is <= 0 and the rank assertion holds trivially."""
    return half_minus_tail_floor(n) <= 0
