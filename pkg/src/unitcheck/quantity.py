"""Quantities: a value, a precision tag and a dimension.

Values are always held as Python floats in the coherent internal units
(whatever the base-unit factors define).  The dimension is a
:class:`~unitcheck.dimension.DimVector` or a
:class:`~unitcheck.dimension.PackedDim`, depending on the encoding of the
:class:`DimContext` the operation runs in.
"""

from __future__ import annotations

from collections import Counter
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, field
from typing import Union

from . import numeric as fk
from .dimension import DimVector, PackedDim, VectorEncoding
from .errors import DimensionMismatch, DomainError
from .numeric import Precision

Dim = Union[DimVector, PackedDim]


@dataclass
class OpCounter:
    """Instrumentation for one evaluation context.

    ``dim_ops`` counts every quantity operation that did dimension
    bookkeeping; ``pow_paths`` records which route each power took.
    """

    dim_ops: int = 0
    pow_paths: Counter = field(default_factory=Counter)


_watchers: ContextVar[tuple] = ContextVar("dim_op_watchers", default=())


@contextmanager
def watch_dim_ops():
    """Count every dimension operation performed in this context, by anyone.

    >>> with watch_dim_ops() as seen:
    ...     _ = q_mul(2.0, 3.0)
    >>> seen.dim_ops
    1
    """
    counter = OpCounter()
    token = _watchers.set(_watchers.get() + (counter,))
    try:
        yield counter
    finally:
        _watchers.reset(token)


@dataclass
class DimContext:
    encoding: object = field(default_factory=VectorEncoding)
    counter: OpCounter | None = None

    def tick(self) -> None:
        if self.counter is not None:
            self.counter.dim_ops += 1
        for w in _watchers.get():
            w.dim_ops += 1

    @property
    def paths(self) -> Counter | None:
        return self.counter.pow_paths if self.counter is not None else None


DEFAULT_CONTEXT = DimContext()


@dataclass(frozen=True)
class Quantity:
    value: float
    dim: Dim
    prec: Precision = Precision.DOUBLE

    @property
    def dimensionless(self) -> bool:
        return self.dim.is_dimensionless

    def __float__(self) -> float:
        if not self.dimensionless:
            raise DimensionMismatch(
                f"cannot convert a quantity of dimension {self.dim} to a number",
                self.dim,
                None,
            )
        return self.value

    def __add__(self, other):
        return q_add(self, other)

    def __radd__(self, other):
        return q_add(other, self)

    def __sub__(self, other):
        return q_sub(self, other)

    def __rsub__(self, other):
        return q_sub(other, self)

    def __mul__(self, other):
        return q_mul(self, other)

    def __rmul__(self, other):
        return q_mul(other, self)

    def __truediv__(self, other):
        return q_div(self, other)

    def __rtruediv__(self, other):
        return q_div(other, self)

    def __neg__(self):
        return q_neg(self)


def _coerce(x, ctx: DimContext) -> Quantity:
    if isinstance(x, Quantity):
        return x
    # plain numbers are dimensionless doubles
    return Quantity(float(x), ctx.encoding.zero(), Precision.DOUBLE)


def _finish(value: float, dim: Dim, prec: Precision) -> Quantity:
    return Quantity(fk.to_precision(value, prec), dim, prec)


def _require_same(a: Quantity, b: Quantity, what: str) -> None:
    if a.dim != b.dim:
        raise DimensionMismatch(f"{what} of different dimensions", a.dim, b.dim)


def q_add(a, b, ctx: DimContext = DEFAULT_CONTEXT) -> Quantity:
    a, b = _coerce(a, ctx), _coerce(b, ctx)
    ctx.tick()
    _require_same(a, b, "addition")
    return _finish(fk.fadd(a.value, b.value), a.dim, max(a.prec, b.prec))


def q_sub(a, b, ctx: DimContext = DEFAULT_CONTEXT) -> Quantity:
    a, b = _coerce(a, ctx), _coerce(b, ctx)
    ctx.tick()
    _require_same(a, b, "subtraction")
    return _finish(fk.fsub(a.value, b.value), a.dim, max(a.prec, b.prec))


def q_mul(a, b, ctx: DimContext = DEFAULT_CONTEXT) -> Quantity:
    a, b = _coerce(a, ctx), _coerce(b, ctx)
    ctx.tick()
    dim = ctx.encoding.mul(a.dim, b.dim)
    return _finish(fk.fmul(a.value, b.value), dim, max(a.prec, b.prec))


def q_div(a, b, ctx: DimContext = DEFAULT_CONTEXT) -> Quantity:
    a, b = _coerce(a, ctx), _coerce(b, ctx)
    ctx.tick()
    dim = ctx.encoding.div(a.dim, b.dim)
    return _finish(fk.fdiv(a.value, b.value), dim, max(a.prec, b.prec))


def q_neg(a, ctx: DimContext = DEFAULT_CONTEXT) -> Quantity:
    a = _coerce(a, ctx)
    ctx.tick()
    return _finish(fk.fneg(a.value), a.dim, a.prec)


def q_cmp(a, b, ctx: DimContext = DEFAULT_CONTEXT) -> int:
    """Three-way comparison: -1, 0 or 1.  NaN operands raise DomainError."""
    a, b = _coerce(a, ctx), _coerce(b, ctx)
    ctx.tick()
    _require_same(a, b, "comparison")
    if a.value != a.value or b.value != b.value:
        raise DomainError("comparison involving NaN is unordered")
    return (a.value > b.value) - (a.value < b.value)


def q_sqrt(a, ctx: DimContext = DEFAULT_CONTEXT) -> Quantity:
    a = _coerce(a, ctx)
    ctx.tick()
    dim = ctx.encoding.pow(a.dim, 1, 2)
    return _finish(fk.fsqrt(a.value), dim, a.prec)


def q_pow(a, p: int, q: int = 1, ctx: DimContext = DEFAULT_CONTEXT) -> Quantity:
    a = _coerce(a, ctx)
    ctx.tick()
    dim = ctx.encoding.pow(a.dim, p, q)
    return _finish(fk.fpow(a.value, p, q, ctx.paths), dim, a.prec)


def q_in(a, unit, ctx: DimContext = DEFAULT_CONTEXT) -> float:
    """Express ``a`` as a plain number of ``unit`` (a :class:`UnitDef`)."""
    a = _coerce(a, ctx)
    ctx.tick()
    udim = ctx.encoding.from_vector(unit.dim)
    if a.dim != udim:
        raise DimensionMismatch(
            f"cannot express quantity in {unit.symbol}", a.dim, udim
        )
    return fk.fdiv(a.value, unit.factor)


def q_convert(a: Quantity, prec: Precision) -> Quantity:
    """Store ``a`` at ``prec`` (narrowing rounds, widening is exact)."""
    return Quantity(fk.to_precision(a.value, prec), a.dim, prec)
