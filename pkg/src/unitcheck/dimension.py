"""Dimension vectors, packed dimension codes, and the algebra over both.

A dimension is a vector of integer exponents, one per base axis (length,
mass, time, ...).  The same information can be packed into one signed integer
by treating the exponents as balanced digits in a fixed radix: with radix 10
the length, mass and time axes get the place values 1, 10 and 100.

Strict configurations refuse anything the packed code cannot represent
exactly.  Compat configurations do the raw integer arithmetic instead,
including truncating division for fractional powers and silent aliasing of
out-of-range exponents (length^10 and mass^1 share the code 10).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import CapacityOverflow, NonIntegerExponent

__all__ = [
    "EncodingConfig",
    "DimVector",
    "PackedDim",
    "DEFAULT_CONFIG",
    "dv_mul",
    "dv_div",
    "dv_pow",
    "pack",
    "unpack",
    "p_add",
    "p_sub",
    "p_scale",
    "VectorEncoding",
    "PackedEncoding",
    "make_encoding",
]

INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class EncodingConfig:
    """Shape of the dimension space and how strictly it is enforced.

    ``radix ** axis_count`` must fit in a signed 64-bit integer, which allows
    up to 18 axes at radix 10.
    """

    axis_count: int = 7
    radix: int = 10
    strict: bool = True

    def __post_init__(self) -> None:
        if self.axis_count < 1:
            raise ValueError(f"axis_count must be >= 1, got {self.axis_count}")
        if self.radix < 3:
            raise ValueError(f"radix must be >= 3, got {self.radix}")
        if self.radix**self.axis_count > INT64_MAX:
            raise CapacityOverflow(
                f"radix {self.radix} with {self.axis_count} axes does not fit "
                "in a 64-bit packed code"
            )

    @property
    def digit_range(self) -> tuple[int, int]:
        """Inclusive bounds of a balanced digit, e.g. ``(-4, 5)`` for radix 10."""
        return -((self.radix - 1) // 2), self.radix // 2

    def in_range(self, exponent: int) -> bool:
        lo, hi = self.digit_range
        return lo <= exponent <= hi

    def place_value(self, axis: int) -> int:
        return self.radix**axis


DEFAULT_CONFIG = EncodingConfig()


@dataclass(frozen=True)
class DimVector:
    """Integer exponents of the base dimensions; all zeros means dimensionless."""

    exponents: tuple[int, ...]

    def __init__(self, exponents: Iterable[int]) -> None:
        object.__setattr__(self, "exponents", tuple(int(e) for e in exponents))

    @classmethod
    def zero(cls, axis_count: int) -> DimVector:
        return cls((0,) * axis_count)

    @classmethod
    def axis(cls, index: int, axis_count: int) -> DimVector:
        """Unit vector for the base axis at ``index``."""
        exps = [0] * axis_count
        exps[index] = 1
        return cls(exps)

    @property
    def is_dimensionless(self) -> bool:
        return not any(self.exponents)

    def __len__(self) -> int:
        return len(self.exponents)

    def __iter__(self):
        return iter(self.exponents)

    def __getitem__(self, i):
        return self.exponents[i]

    def __mul__(self, other: DimVector) -> DimVector:
        return dv_mul(self, other)

    def __truediv__(self, other: DimVector) -> DimVector:
        return dv_div(self, other)

    def __repr__(self) -> str:
        return f"DimVector({self.exponents})"


@dataclass(frozen=True)
class PackedDim:
    """A dimension packed into one signed integer."""

    code: int

    @property
    def is_dimensionless(self) -> bool:
        return self.code == 0


def _same_length(a: DimVector, b: DimVector) -> None:
    if len(a) != len(b):
        raise ValueError(f"axis count mismatch: {len(a)} vs {len(b)}")


def dv_mul(a: DimVector, b: DimVector) -> DimVector:
    _same_length(a, b)
    return DimVector(x + y for x, y in zip(a.exponents, b.exponents))


def dv_div(a: DimVector, b: DimVector) -> DimVector:
    _same_length(a, b)
    return DimVector(x - y for x, y in zip(a.exponents, b.exponents))


def _trunc_div(n: int, d: int) -> int:
    # integer division rounding toward zero, as C++ does
    q = abs(n) // abs(d)
    return q if (n >= 0) == (d > 0) else -q


def dv_pow(a: DimVector, p: int, q: int, cfg: EncodingConfig = DEFAULT_CONFIG) -> DimVector:
    """Raise a dimension to the rational power ``p/q``.

    In strict mode every ``e*p`` must be divisible by ``q``; compat mode
    truncates toward zero per axis instead.
    """
    if q < 1:
        raise ValueError(f"exponent denominator must be positive, got {q}")
    out = []
    for e in a.exponents:
        num = e * p
        if num % q:
            if cfg.strict:
                raise NonIntegerExponent(
                    f"exponent {e} raised to {p}/{q} is not an integer"
                )
            out.append(_trunc_div(num, q))
        else:
            out.append(num // q)
    return DimVector(out)


def pack(v: DimVector, cfg: EncodingConfig = DEFAULT_CONFIG) -> PackedDim:
    if len(v) != cfg.axis_count:
        raise ValueError(f"expected {cfg.axis_count} exponents, got {len(v)}")
    if cfg.strict:
        lo, hi = cfg.digit_range
        for i, e in enumerate(v.exponents):
            if not lo <= e <= hi:
                raise CapacityOverflow(
                    f"exponent {e} on axis {i} is outside the packable range "
                    f"[{lo}, {hi}] for radix {cfg.radix}"
                )
    code = 0
    for e in reversed(v.exponents):
        code = code * cfg.radix + e
    return PackedDim(code)


def unpack(d: PackedDim, cfg: EncodingConfig = DEFAULT_CONFIG) -> DimVector:
    """Recover the balanced-digit exponents of a packed code."""
    _, hi = cfg.digit_range
    rest = d.code
    out = []
    for _ in range(cfg.axis_count):
        digit = rest % cfg.radix
        if digit > hi:
            digit -= cfg.radix
        out.append(digit)
        rest = (rest - digit) // cfg.radix
    if rest:
        raise CapacityOverflow(
            f"packed code {d.code} has digits beyond {cfg.axis_count} axes"
        )
    return DimVector(out)


@lru_cache(maxsize=4096)
def _strict_binary(op: str, a: int, b: int, cfg: EncodingConfig) -> PackedDim:
    # the same few codes recur constantly while evaluating; the
    # unpack/check/repack round trip only needs doing once per pair
    fn = dv_mul if op == "+" else dv_div
    return pack(fn(unpack(PackedDim(a), cfg), unpack(PackedDim(b), cfg)), cfg)


@lru_cache(maxsize=4096)
def _strict_scale(a: int, p: int, q: int, cfg: EncodingConfig) -> PackedDim:
    return pack(dv_pow(unpack(PackedDim(a), cfg), p, q, cfg), cfg)


def p_add(a: PackedDim, b: PackedDim, cfg: EncodingConfig = DEFAULT_CONFIG) -> PackedDim:
    if cfg.strict:
        return _strict_binary("+", a.code, b.code, cfg)
    return PackedDim(a.code + b.code)


def p_sub(a: PackedDim, b: PackedDim, cfg: EncodingConfig = DEFAULT_CONFIG) -> PackedDim:
    if cfg.strict:
        return _strict_binary("-", a.code, b.code, cfg)
    return PackedDim(a.code - b.code)


def p_scale(a: PackedDim, p: int, q: int, cfg: EncodingConfig = DEFAULT_CONFIG) -> PackedDim:
    """Scale a packed code by ``p/q``.

    Compat mode is the raw template arithmetic ``(p*n)/q`` with truncation, so
    odd exponents silently lose information (``p_scale(1, 1, 2) == 0``).
    """
    if q < 1:
        raise ValueError(f"exponent denominator must be positive, got {q}")
    if cfg.strict:
        return _strict_scale(a.code, p, q, cfg)
    return PackedDim(_trunc_div(a.code * p, q))


class VectorEncoding:
    """Dimension algebra on :class:`DimVector` values."""

    name = "vector"

    def __init__(self, cfg: EncodingConfig = DEFAULT_CONFIG) -> None:
        self.cfg = cfg
        self._zero = DimVector.zero(cfg.axis_count)

    def zero(self) -> DimVector:
        return self._zero

    def from_vector(self, v: DimVector) -> DimVector:
        return v

    def to_vector(self, d: DimVector) -> DimVector:
        return d

    def mul(self, a: DimVector, b: DimVector) -> DimVector:
        return dv_mul(a, b)

    def div(self, a: DimVector, b: DimVector) -> DimVector:
        return dv_div(a, b)

    def pow(self, a: DimVector, p: int, q: int) -> DimVector:
        return dv_pow(a, p, q, self.cfg)

    def __repr__(self) -> str:
        return f"VectorEncoding({self.cfg})"


class PackedEncoding:
    """Dimension algebra on :class:`PackedDim` codes."""

    name = "packed"

    def __init__(self, cfg: EncodingConfig = DEFAULT_CONFIG) -> None:
        self.cfg = cfg

    def zero(self) -> PackedDim:
        return PackedDim(0)

    def from_vector(self, v: DimVector) -> PackedDim:
        return pack(v, self.cfg)

    def to_vector(self, d: PackedDim) -> DimVector:
        return unpack(d, self.cfg)

    def mul(self, a: PackedDim, b: PackedDim) -> PackedDim:
        return p_add(a, b, self.cfg)

    def div(self, a: PackedDim, b: PackedDim) -> PackedDim:
        return p_sub(a, b, self.cfg)

    def pow(self, a: PackedDim, p: int, q: int) -> PackedDim:
        return p_scale(a, p, q, self.cfg)

    def __repr__(self) -> str:
        return f"PackedEncoding({self.cfg})"


def make_encoding(kind: str = "packed", cfg: EncodingConfig = DEFAULT_CONFIG):
    if kind == "vector":
        return VectorEncoding(cfg)
    if kind == "packed":
        return PackedEncoding(cfg)
    raise ValueError(f"unknown encoding {kind!r}")


def as_vector(exponents: Sequence[int], cfg: EncodingConfig = DEFAULT_CONFIG) -> DimVector:
    """Pad a short exponent list with zeros up to ``cfg.axis_count``."""
    if len(exponents) > cfg.axis_count:
        raise ValueError(f"too many exponents for {cfg.axis_count} axes")
    return DimVector(list(exponents) + [0] * (cfg.axis_count - len(exponents)))
