"""Syntax tree for UDL programs.

Nodes compare by identity so that checker results can be keyed on them.
``span`` is the half-open character range of a node in its source.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Union

from ..numeric import Precision


class Pos(NamedTuple):
    line: int
    col: int

    def __str__(self) -> str:
        return f"{self.line}:{self.col}"


@dataclass(eq=False)
class Number:
    value: float
    pos: Pos
    span: tuple[int, int] = (0, 0)


@dataclass(eq=False)
class Name:
    ident: str
    pos: Pos
    span: tuple[int, int] = (0, 0)


@dataclass(eq=False)
class BinOp:
    op: str  # one of + - * /
    left: "Expr"
    right: "Expr"
    pos: Pos  # operator position
    span: tuple[int, int] = (0, 0)


@dataclass(eq=False)
class Neg:
    operand: "Expr"
    pos: Pos
    span: tuple[int, int] = (0, 0)


@dataclass(eq=False)
class Power:
    """``base ^ exponent`` with an integer exponent."""

    base: "Expr"
    exponent: int
    pos: Pos
    span: tuple[int, int] = (0, 0)


@dataclass(eq=False)
class Sqrt:
    arg: "Expr"
    pos: Pos
    span: tuple[int, int] = (0, 0)


@dataclass(eq=False)
class Pow:
    """``pow(arg, p, q)``, i.e. ``arg ** (p/q)``."""

    arg: "Expr"
    p: int
    q: int
    pos: Pos
    span: tuple[int, int] = (0, 0)


Expr = Union[Number, Name, BinOp, Neg, Power, Sqrt, Pow]


@dataclass(eq=False)
class DimDecl:
    name: str
    pos: Pos
    name_pos: Pos


@dataclass(eq=False)
class BaseUnitDecl:
    symbol: str
    axis: str
    factor: float
    pos: Pos
    name_pos: Pos
    axis_pos: Pos


@dataclass(eq=False)
class UnitDecl:
    symbol: str
    expr: Expr
    pos: Pos
    name_pos: Pos


@dataclass(eq=False)
class ConstDecl:
    symbol: str
    expr: Expr
    pos: Pos
    name_pos: Pos


@dataclass(eq=False)
class LetDecl:
    name: str
    annotation: Expr
    expr: Expr
    precision: Optional[Precision]
    pos: Pos
    name_pos: Pos


@dataclass(eq=False)
class PrintStmt:
    expr: Expr
    unit: Expr
    pos: Pos
    text: str = ""
    unit_text: str = ""


Statement = Union[DimDecl, BaseUnitDecl, UnitDecl, ConstDecl, LetDecl, PrintStmt]


@dataclass(eq=False)
class Program:
    statements: list = field(default_factory=list)
    source: str = ""
    file: str = "<input>"


def walk(expr: Expr):
    """Yield ``expr`` and all of its subexpressions, children first."""
    if isinstance(expr, BinOp):
        yield from walk(expr.left)
        yield from walk(expr.right)
    elif isinstance(expr, Neg):
        yield from walk(expr.operand)
    elif isinstance(expr, (Power,)):
        yield from walk(expr.base)
    elif isinstance(expr, (Sqrt, Pow)):
        yield from walk(expr.arg)
    yield expr


def unparse(expr: Expr) -> str:
    """Fully parenthesised source text for an expression tree."""
    if isinstance(expr, Number):
        return repr(expr.value)
    if isinstance(expr, Name):
        return expr.ident
    if isinstance(expr, BinOp):
        return f"({unparse(expr.left)} {expr.op} {unparse(expr.right)})"
    if isinstance(expr, Neg):
        return f"(-{unparse(expr.operand)})"
    if isinstance(expr, Power):
        return f"({unparse(expr.base)}^{expr.exponent})"
    if isinstance(expr, Sqrt):
        return f"sqrt({unparse(expr.arg)})"
    if isinstance(expr, Pow):
        return f"pow({unparse(expr.arg)}, {expr.p}, {expr.q})"
    raise TypeError(f"not an expression: {expr!r}")
