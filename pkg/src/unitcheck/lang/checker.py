"""Static dimension checker for UDL programs.

Statements are processed in order.  Declarations grow a
:class:`~unitcheck.units.UnitSystem`; ``let`` bindings grow the variable
environment.  Each expression node gets an inferred dimension, a precision
and, when it only involves literals, units and constants, a folded value.
At most one diagnostic is reported per statement and checking resumes with
the next statement.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .. import numeric as fk
from ..dimension import DEFAULT_CONFIG, EncodingConfig, make_encoding
from ..errors import DimensionMismatch, InvalidFactor, Redefinition, UnitsError, UnknownAxis, UnknownUnit
from ..numeric import Precision
from ..units import UnitDef, UnitSystem
from . import ast


@dataclass(frozen=True)
class NodeInfo:
    dim: object
    prec: Precision
    const: Optional[float] = None


@dataclass(frozen=True)
class Variable:
    dim: object
    prec: Precision


@dataclass(frozen=True)
class Diagnostic:
    file: str
    line: int
    col: int
    code: str
    message: str

    def __str__(self) -> str:
        return f"{self.file}:{self.line}:{self.col}: error[{self.code}]: {self.message}"

    @classmethod
    def from_error(cls, exc: UnitsError, file: str, fallback: ast.Pos) -> Diagnostic:
        pos = exc.pos or fallback
        return cls(file, pos.line, pos.col, exc.code, exc.message)


@dataclass
class TypedProgram:
    program: ast.Program
    system: UnitSystem
    info: dict = field(default_factory=dict)
    variables: dict = field(default_factory=dict)
    print_units: dict = field(default_factory=dict)  # PrintStmt -> UnitDef
    default_precision: Precision = Precision.DOUBLE
    diagnostics: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.diagnostics

    @property
    def encoding(self):
        return self.system.encoding

    def dim_of(self, expr):
        return self.info[expr].dim


class Checker:
    def __init__(self, system: UnitSystem, default_precision: Precision = Precision.DOUBLE):
        self.system = system
        self.enc = system.encoding
        self.default_precision = default_precision
        self.variables: dict[str, Variable] = {}
        self.info: dict = {}
        self.print_units: dict = {}

    def fmt(self, dim) -> str:
        return self.system.format_dim(dim)

    def mismatch(self, what: str, left, right, pos) -> DimensionMismatch:
        return DimensionMismatch(f"{what} ({self.fmt(left)} vs {self.fmt(right)})", left, right, pos)

    # statements

    def statement(self, stmt) -> None:
        sys = self.system
        if isinstance(stmt, ast.DimDecl):
            try:
                self.system = sys.define_axis(stmt.name)
            except UnitsError as exc:
                raise exc.at(stmt.name_pos)
        elif isinstance(stmt, ast.BaseUnitDecl):
            self.check_unused(stmt.symbol, stmt.name_pos)
            if stmt.axis not in sys.axes:
                raise UnknownAxis(f"unknown axis {stmt.axis!r}", stmt.axis_pos)
            try:
                self.system = sys.define_base_unit(stmt.symbol, stmt.axis, stmt.factor)
            except UnitsError as exc:
                raise exc.at(stmt.pos)
        elif isinstance(stmt, ast.UnitDecl):
            self.check_unused(stmt.symbol, stmt.name_pos)
            self.infer(stmt.expr)
            try:
                self.system = sys.define_derived_unit(stmt.symbol, stmt.expr)
            except UnitsError as exc:
                raise exc.at(stmt.pos)
        elif isinstance(stmt, ast.ConstDecl):
            self.check_unused(stmt.symbol, stmt.name_pos)
            self.infer(stmt.expr)
            self.system = sys.define_constant(stmt.symbol, stmt.expr)
        elif isinstance(stmt, ast.LetDecl):
            self.let(stmt)
        elif isinstance(stmt, ast.PrintStmt):
            self.print_(stmt)
        else:
            raise TypeError(f"unknown statement {stmt!r}")

    def check_unused(self, symbol: str, pos) -> None:
        if symbol in self.system or symbol in self.variables:
            raise Redefinition(f"{symbol!r} is already defined", pos)

    def let(self, stmt: ast.LetDecl) -> None:
        self.check_unused(stmt.name, stmt.name_pos)
        ann = self.infer(stmt.annotation).dim
        prec = stmt.precision if stmt.precision is not None else self.default_precision
        try:
            got = self.infer(stmt.expr).dim
        finally:
            # bind even on error so later statements do not cascade into UnknownUnit
            self.variables[stmt.name] = Variable(ann, prec)
        if got != ann:
            raise self.mismatch(f"value of '{stmt.name}' does not match its annotation", ann, got, stmt.pos)

    def print_(self, stmt: ast.PrintStmt) -> None:
        got = self.infer(stmt.expr).dim
        unit_info = self.infer(stmt.unit)
        if unit_info.const is None:
            raise UnknownUnit("the unit of a print statement must be built from units and constants",
                              stmt.unit.pos)
        if got != unit_info.dim:
            raise self.mismatch(f"cannot print value in '{stmt.unit_text}'", got, unit_info.dim, stmt.pos)
        try:
            unit = UnitDef(stmt.unit_text, self.enc.to_vector(unit_info.dim), unit_info.const)
        except InvalidFactor as exc:
            raise exc.at(stmt.unit.pos)
        self.print_units[stmt] = unit

    # expressions

    def infer(self, expr) -> NodeInfo:
        try:
            info = self._infer(expr)
        except UnitsError as exc:
            raise exc.at(expr.pos)
        self.info[expr] = info
        return info

    def _infer(self, expr) -> NodeInfo:
        enc = self.enc
        if isinstance(expr, ast.Number):
            prec = self.default_precision
            return NodeInfo(enc.zero(), prec, fk.to_precision(expr.value, prec))
        if isinstance(expr, ast.Name):
            var = self.variables.get(expr.ident)
            if var is not None:
                return NodeInfo(var.dim, var.prec, None)
            if expr.ident not in self.system:
                raise UnknownUnit(f"unknown name {expr.ident!r}", expr.pos)
            q = self.system.quantity(expr.ident)
            return NodeInfo(q.dim, q.prec, q.value)
        if isinstance(expr, ast.BinOp):
            a, b = self.infer(expr.left), self.infer(expr.right)
            prec = max(a.prec, b.prec)
            if expr.op in "+-":
                if a.dim != b.dim:
                    verb = "addition" if expr.op == "+" else "subtraction"
                    raise self.mismatch(f"{verb} of different dimensions", a.dim, b.dim, expr.pos)
                dim = a.dim
            elif expr.op == "*":
                dim = enc.mul(a.dim, b.dim)
            else:
                dim = enc.div(a.dim, b.dim)
            return NodeInfo(dim, prec, _fold2(expr.op, a.const, b.const, prec))
        if isinstance(expr, ast.Neg):
            a = self.infer(expr.operand)
            return NodeInfo(a.dim, a.prec, _lift(fk.fneg, a.const, a.prec))
        if isinstance(expr, ast.Power):
            a = self.infer(expr.base)
            dim = enc.pow(a.dim, expr.exponent, 1)
            return NodeInfo(dim, a.prec, _lift(lambda x: fk.fpow(x, expr.exponent, 1), a.const, a.prec))
        if isinstance(expr, ast.Sqrt):
            a = self.infer(expr.arg)
            dim = enc.pow(a.dim, 1, 2)
            return NodeInfo(dim, a.prec, _lift(fk.fsqrt, a.const, a.prec))
        if isinstance(expr, ast.Pow):
            a = self.infer(expr.arg)
            dim = enc.pow(a.dim, expr.p, expr.q)
            return NodeInfo(dim, a.prec, _lift(lambda x: fk.fpow(x, expr.p, expr.q), a.const, a.prec))
        raise TypeError(f"not an expression: {expr!r}")


_BINARY = {"+": fk.fadd, "-": fk.fsub, "*": fk.fmul, "/": fk.fdiv}


def _fold2(op, a, b, prec):
    if a is None or b is None:
        return None
    return fk.to_precision(_BINARY[op](a, b), prec)


def _lift(fn, a, prec):
    if a is None:
        return None
    return fk.to_precision(fn(a), prec)


def check(program: ast.Program, system: UnitSystem | None = None,
          default_precision: Precision = Precision.DOUBLE) -> TypedProgram:
    """Type-check ``program`` and return the annotated result.

    ``system`` supplies the encoding (and optionally predefined units).  The
    returned program is usable for evaluation only when ``.ok`` is true.
    """
    if system is None:
        system = UnitSystem()
    checker = Checker(system, default_precision)
    diagnostics = []
    for stmt in program.statements:
        try:
            checker.statement(stmt)
        except UnitsError as exc:
            diagnostics.append(Diagnostic.from_error(exc, program.file, stmt.pos))
    return TypedProgram(
        program=program,
        system=checker.system,
        info=checker.info,
        variables=checker.variables,
        print_units=checker.print_units,
        default_precision=default_precision,
        diagnostics=diagnostics,
    )


def new_system(encoding: str = "packed", cfg: EncodingConfig = DEFAULT_CONFIG) -> UnitSystem:
    return UnitSystem(make_encoding(encoding, cfg))
