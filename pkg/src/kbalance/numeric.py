"""Exact-when-possible real arithmetic for the vertex-count fixed points.

Values are ``Fraction`` whenever the result is rational (integer powers of
perfect powers, ``c = 0``, ...) and ``mpmath.mpf`` otherwise. Ceilings and
comparisons on ``mpf`` values are only trusted when they are stable under an
absolute perturbation of ``2**-30``; otherwise ``PrecisionError`` is raised.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

import gmpy2
import mpmath

Real = Union[Fraction, mpmath.mpf]

PERTURBATION_BITS = 30
GUARD_DIGITS = 40


class PrecisionError(ArithmeticError):
    """High-precision evaluation too close to a discontinuity to be trusted."""


def digits(x) -> int:
    """Rough decimal magnitude of ``x`` (at least 1)."""
    if isinstance(x, Fraction):
        x = abs(x)
        if x < 1:
            return 1
        return len(str(x.numerator // x.denominator))
    if isinstance(x, int):
        return max(1, len(str(abs(x))))
    x = abs(x)
    if x < 1:
        return 1
    return int(mpmath.floor(mpmath.log10(x))) + 1


def precision_for(*values) -> int:
    return max(digits(v) for v in values) + GUARD_DIGITS


def _exact_root(value: int, q: int) -> int | None:
    root, exact = gmpy2.iroot(value, q)
    return int(root) if exact else None


def exact_power(base, exponent) -> Fraction | None:
    """``base ** exponent`` as a Fraction when the result is rational, else None."""
    base, exponent = Fraction(base), Fraction(exponent)
    if base < 0:
        raise ValueError("negative base")
    if exponent == 0:
        return Fraction(1)
    if base == 0:
        return Fraction(0)
    q = exponent.denominator
    num = _exact_root(base.numerator, q)
    den = _exact_root(base.denominator, q)
    if num is None or den is None:
        return None
    return Fraction(num, den) ** exponent.numerator


def to_mpf(x) -> mpmath.mpf:
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


def power(base: Real, exponent) -> Real:
    """``base ** exponent``; exact for rational results, else at current mp precision."""
    exponent = Fraction(exponent)
    if isinstance(base, (int, Fraction)):
        exact = exact_power(base, exponent)
        if exact is not None:
            return exact
    return mpmath.power(to_mpf(base), to_mpf(exponent))


def ceil_real(x: Real) -> int:
    if isinstance(x, (int, Fraction)):
        return math.ceil(x)
    eps = mpmath.mpf(2) ** -PERTURBATION_BITS
    lo, hi = int(mpmath.ceil(x - eps)), int(mpmath.ceil(x + eps))
    if lo != hi:
        raise PrecisionError(f"ceiling of {mpmath.nstr(x, 30)} is unstable under +-2^-{PERTURBATION_BITS}")
    return lo


def ceil_sqrt(x: Real) -> int:
    """Smallest integer t with t*t >= x."""
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        if x <= 0:
            return 0
        # t^2 >= a/b  <=>  t^2 * b >= a
        a, b = x.numerator, x.denominator
        t = math.isqrt(a // b)
        while t * t * b < a:
            t += 1
        return t
    return ceil_real(mpmath.sqrt(x))


def compare(a: Real, b: Real) -> int:
    """Sign of ``a - b``; exact for rationals, margin-checked otherwise."""
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        diff = Fraction(a) - Fraction(b)
        return (diff > 0) - (diff < 0)
    with mpmath.workdps(precision_for(a, b)):
        diff = to_mpf(a) - to_mpf(b)
        if abs(diff) <= mpmath.mpf(2) ** -PERTURBATION_BITS:
            raise PrecisionError(f"cannot separate {mpmath.nstr(to_mpf(a), 30)} from {mpmath.nstr(to_mpf(b), 30)}")
        return 1 if diff > 0 else -1


def as_pair(x: Fraction) -> list[int]:
    return [x.numerator, x.denominator]


def fmt(x: Real) -> str:
    if isinstance(x, (int, Fraction)):
        return str(x)
    return mpmath.nstr(x, 20)
