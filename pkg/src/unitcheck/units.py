"""Registry of base axes, units and constants.

A :class:`UnitSystem` is immutable; every ``define_*`` call returns a new
system.  Units are stored as a dimension plus the factor that converts one of
the unit into the coherent internal representation fixed by the base units::

    >>> sys = UnitSystem().define_axis("length").define_base_unit("m", "length", 1.0)
    >>> sys = sys.define_derived_unit("cm", "m/100")
    >>> sys.units["cm"].factor
    0.01

Derived unit and constant expressions may be given as source strings or as
parsed expression trees; either way they are folded to a single value at
definition time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from types import MappingProxyType
from typing import Mapping

from .dimension import DEFAULT_CONFIG, DimVector, EncodingConfig, PackedEncoding
from .errors import CapacityOverflow, InvalidFactor, Redefinition, UnitsError, UnknownAxis, UnknownUnit
from .lang import ast
from .numeric import Precision
from .quantity import DimContext, Quantity, q_div, q_mul, q_neg, q_add, q_sub, q_pow, q_sqrt


@dataclass(frozen=True)
class UnitDef:
    symbol: str
    dim: DimVector
    factor: float

    def __post_init__(self) -> None:
        _check_factor(self.symbol, self.factor)


def _check_factor(symbol: str, factor: float) -> None:
    if not (math.isfinite(factor) and factor > 0):
        raise InvalidFactor(f"unit {symbol!r} needs a positive finite factor, got {factor!r}")


def _frozen(d: dict) -> Mapping:
    return MappingProxyType(dict(d))


@dataclass(frozen=True)
class UnitSystem:
    encoding: object = field(default_factory=PackedEncoding)
    axes: tuple[str, ...] = ()
    units: Mapping[str, UnitDef] = field(default_factory=lambda: _frozen({}))
    constants: Mapping[str, Quantity] = field(default_factory=lambda: _frozen({}))

    @classmethod
    def with_config(cls, cfg: EncodingConfig = DEFAULT_CONFIG, encoding: str = "packed") -> UnitSystem:
        from .dimension import make_encoding

        return cls(make_encoding(encoding, cfg))

    @property
    def cfg(self) -> EncodingConfig:
        return self.encoding.cfg

    @property
    def context(self) -> DimContext:
        return DimContext(self.encoding)

    # definitions

    def define_axis(self, name: str) -> UnitSystem:
        if name in self.axes:
            raise Redefinition(f"axis {name!r} is already defined")
        if len(self.axes) >= self.cfg.axis_count:
            raise CapacityOverflow(
                f"cannot add axis {name!r}: the encoding has room for "
                f"{self.cfg.axis_count} axes"
            )
        return replace(self, axes=self.axes + (name,))

    def define_base_unit(self, symbol: str, axis: str, factor: float) -> UnitSystem:
        self._check_unused(symbol)
        if axis not in self.axes:
            raise UnknownAxis(f"unknown axis {axis!r}")
        dim = DimVector.axis(self.axes.index(axis), self.cfg.axis_count)
        return self._add_unit(UnitDef(symbol, dim, float(factor)))

    def define_derived_unit(self, symbol: str, expr) -> UnitSystem:
        self._check_unused(symbol)
        q = self.fold(expr)
        _check_factor(symbol, q.value)
        return self._add_unit(UnitDef(symbol, self.encoding.to_vector(q.dim), q.value))

    def define_constant(self, symbol: str, expr) -> UnitSystem:
        self._check_unused(symbol)
        q = self.fold(expr)
        return replace(self, constants=_frozen({**self.constants, symbol: q}))

    def _add_unit(self, unit: UnitDef) -> UnitSystem:
        # fail early if the dimension cannot be encoded
        self.encoding.from_vector(unit.dim)
        return replace(self, units=_frozen({**self.units, unit.symbol: unit}))

    def _check_unused(self, symbol: str) -> None:
        if symbol in self.units or symbol in self.constants:
            raise Redefinition(f"{symbol!r} is already defined")

    # lookups

    def __contains__(self, symbol: str) -> bool:
        return symbol in self.units or symbol in self.constants

    def quantity(self, symbol: str) -> Quantity:
        """A unit or constant as a double-precision quantity in this encoding."""
        if symbol in self.units:
            u = self.units[symbol]
            return Quantity(u.factor, self.encoding.from_vector(u.dim), Precision.DOUBLE)
        if symbol in self.constants:
            return self.constants[symbol]
        raise UnknownUnit(f"unknown unit or constant {symbol!r}")

    def place_value(self, axis: str) -> int:
        if axis not in self.axes:
            raise UnknownAxis(f"unknown axis {axis!r}")
        return self.cfg.place_value(self.axes.index(axis))

    def fold(self, expr) -> Quantity:
        """Evaluate a pure unit expression to a single quantity."""
        if isinstance(expr, str):
            from .lang.parser import parse_expression

            expr = parse_expression(expr)
        return _fold(expr, self, self.context)

    # rendering

    def axis_symbol(self, index: int) -> str:
        """Name used for an axis in rendered dimensions.

        Prefers the first unit on that axis with factor 1 (the coherent unit,
        so mass renders as ``kg`` when ``g`` has factor 1e-3), then the first
        unit on the axis, then the axis name itself.
        """
        axis_dim = DimVector.axis(index, self.cfg.axis_count)
        on_axis = [u for u in self.units.values() if u.dim == axis_dim]
        for u in on_axis:
            if u.factor == 1.0:
                return u.symbol
        if on_axis:
            return on_axis[0].symbol
        if index < len(self.axes):
            return self.axes[index]
        return f"axis{index}"

    def format_dim(self, dim) -> str:
        """Render a dimension as a product like ``m^1 s^-1``; ``1`` if dimensionless."""
        try:
            vec = self.encoding.to_vector(dim) if not isinstance(dim, DimVector) else dim
        except UnitsError:
            return f"<packed {dim.code}>"
        parts = [f"{self.axis_symbol(i)}^{e}" for i, e in enumerate(vec.exponents) if e]
        return " ".join(parts) if parts else "1"


def _fold(expr, sys: UnitSystem, ctx: DimContext) -> Quantity:
    try:
        if isinstance(expr, ast.Number):
            return Quantity(expr.value, ctx.encoding.zero(), Precision.DOUBLE)
        if isinstance(expr, ast.Name):
            return sys.quantity(expr.ident)
        if isinstance(expr, ast.BinOp):
            a = _fold(expr.left, sys, ctx)
            b = _fold(expr.right, sys, ctx)
            op = {"+": q_add, "-": q_sub, "*": q_mul, "/": q_div}[expr.op]
            return op(a, b, ctx)
        if isinstance(expr, ast.Neg):
            return q_neg(_fold(expr.operand, sys, ctx), ctx)
        if isinstance(expr, ast.Power):
            return q_pow(_fold(expr.base, sys, ctx), expr.exponent, 1, ctx)
        if isinstance(expr, ast.Sqrt):
            return q_sqrt(_fold(expr.arg, sys, ctx), ctx)
        if isinstance(expr, ast.Pow):
            return q_pow(_fold(expr.arg, sys, ctx), expr.p, expr.q, ctx)
    except UnitsError as exc:
        raise exc.at(expr.pos)
    raise TypeError(f"not an expression: {expr!r}")


define_axis = UnitSystem.define_axis
define_base_unit = UnitSystem.define_base_unit
define_derived_unit = UnitSystem.define_derived_unit
define_constant = UnitSystem.define_constant
