"""Exact rational helpers shared by the eta formulas.

Rationals are :class:`fractions.Fraction` instances, which are always kept
in lowest terms with a positive denominator.
"""
from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction

__all__ = ["Rational", "frac", "sawtooth", "gcd", "gcd_all",
           "format_rational", "parse_rational"]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


def frac(x) -> Fraction:
    """Fractional part ``{x}`` in ``[0, 1)``; ``frac(-1/6) == 5/6``."""
    x = _as_fraction(x)
    return x - (x.numerator // x.denominator)


def sawtooth(x) -> Fraction:
    """The sawtooth ``((x))``: ``{x} - 1/2`` off the integers, ``0`` on them."""
    x = _as_fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return frac(x) - Fraction(1, 2)


def gcd(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise ValueError(f"gcd expects nonnegative integers, got ({a}, {b})")
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def gcd_all(values) -> int:
    values = list(values)
    if not values or all(v == 0 for v in values):
        raise ValueError("gcd of an empty or all-zero collection is undefined")
    return math.gcd(*values)


def format_rational(x) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    x = _as_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(value) -> Fraction:
    """Inverse of :func:`format_rational`; also accepts plain ints.

    Floats are refused: a binary float is not an exact rational input.
    """
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise ValueError(f"rational must be an int or a 'p/q' string, got {value!r}")
    text = value.strip()
    num, sep, den = text.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational {value!r}") from None
    if q == 0:
        raise ValueError(f"zero denominator in {value!r}")
    return Fraction(p, q)
