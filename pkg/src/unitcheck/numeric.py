"""Plain floating-point kernel shared by checked and fast evaluation.

Both execution modes route every arithmetic step through these functions, so
stripping the dimension bookkeeping can never change a value.  Python raises
on float division by zero and on overflow in ``**``; these helpers return the
IEEE results instead.
"""

from __future__ import annotations

import math
from collections import Counter
from enum import IntEnum

import numpy as np

from .errors import DomainError


class Precision(IntEnum):
    """Nominal storage width; mixed operations promote to the wider one."""

    SINGLE = 0
    DOUBLE = 1

    @classmethod
    def parse(cls, text: str) -> Precision:
        try:
            return cls[text.upper()]
        except KeyError:
            raise ValueError(f"unknown precision {text!r}") from None

    def __str__(self) -> str:
        return self.name.lower()


def to_precision(x: float, prec: Precision) -> float:
    if prec is Precision.SINGLE:
        with np.errstate(over="ignore"):
            return float(np.float32(x))
    return x


def fadd(a: float, b: float) -> float:
    return a + b


def fsub(a: float, b: float) -> float:
    return a - b


def fmul(a: float, b: float) -> float:
    return a * b


def fneg(a: float) -> float:
    return -a


def fdiv(a: float, b: float) -> float:
    try:
        return a / b
    except ZeroDivisionError:
        if a == 0.0 or math.isnan(a):
            return math.nan
        return math.copysign(math.inf, a) * math.copysign(1.0, b)


def fsqrt(a: float) -> float:
    if a < 0.0:
        return math.nan
    return math.sqrt(a)


def _ipow(x: float, n: int) -> float:
    # repeated multiplication keeps integer powers off the libm pow path
    r = 1.0
    for _ in range(abs(n)):
        r = r * x
    return fdiv(1.0, r) if n < 0 else r


def fpow(x: float, p: int, q: int, paths: Counter | None = None) -> float:
    """Compute ``x ** (p/q)``.

    Denominators 1, 2 and 3 go through repeated multiplication, ``sqrt`` and
    ``cbrt``; anything else falls back to the general ``pow``.  ``paths``
    (when given) tallies which route was taken.
    """
    if q < 1:
        raise ValueError(f"exponent denominator must be positive, got {q}")
    g = math.gcd(p, q)
    p, q = p // g, q // g
    if x < 0 and q % 2 == 0:
        raise DomainError(f"negative base {x!r} raised to {p}/{q}")
    if q == 1:
        route, result = "mul", _ipow(x, p)
    elif q == 2:
        route, result = "sqrt", _ipow(math.sqrt(x), p)
    elif q == 3:
        route, result = "cbrt", _ipow(float(np.cbrt(x)), p)
    else:
        route, result = "general", _general_pow(x, p, q)
    if paths is not None:
        paths[route] += 1
    return result


def _general_pow(x: float, p: int, q: int) -> float:
    sign = 1.0
    if x < 0:
        # odd q: real root exists
        x = -x
        sign = -1.0 if p % 2 else 1.0
    try:
        return sign * math.pow(x, p / q)
    except OverflowError:
        return sign * math.inf
    except ValueError:
        # 0 ** negative
        return sign * math.inf


def format_number(x: float) -> str:
    """Render with 17 significant digits so every double round-trips."""
    return f"{x:.17g}"
