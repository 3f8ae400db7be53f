"""Checked and fast evaluation of type-checked UDL programs.

``eval_checked`` runs every operation on :class:`~unitcheck.quantity.Quantity`
values and counts the dimension bookkeeping it performs.  ``eval_fast`` first
strips the program down to closures over bare floats: units become their
factors, pure subexpressions become their folded values, and nothing touches
a dimension.  Both share the float kernel in :mod:`unitcheck.numeric`, so their
outputs are bit-identical.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .. import numeric as fk
from ..errors import DimensionMismatch, UnitsError
from ..quantity import (
    DimContext,
    OpCounter,
    Quantity,
    q_add,
    q_convert,
    q_div,
    q_in,
    q_mul,
    q_neg,
    q_pow,
    q_sqrt,
    q_sub,
    watch_dim_ops,
)
from . import ast
from .checker import TypedProgram


@dataclass(frozen=True)
class OutputRecord:
    label: str
    value: float
    unit: str | None
    pos: ast.Pos | None = None


class RuntimeFailure(Exception):
    """A runtime error with its source position, raised by the evaluators."""

    def __init__(self, error: UnitsError, file: str):
        super().__init__(str(error))
        self.error = error
        self.file = file

    def diagnostic(self):
        from .checker import Diagnostic

        return Diagnostic.from_error(self.error, self.file, ast.Pos(1, 1))


def _require_ok(tp: TypedProgram) -> None:
    if not tp.ok:
        raise ValueError("program has diagnostics; check it clean before evaluating")


def _record(stmt: ast.PrintStmt, tp: TypedProgram, value: float) -> OutputRecord:
    unit = tp.print_units[stmt]
    suffix = None if unit.dim.is_dimensionless else stmt.unit_text
    return OutputRecord(stmt.text, value, suffix, stmt.pos)


# checked mode

_Q_BINARY = {"+": q_add, "-": q_sub, "*": q_mul, "/": q_div}


class _CheckedEvaluator:
    def __init__(self, tp: TypedProgram, counter: OpCounter):
        self.tp = tp
        self.sys = tp.system
        self.ctx = DimContext(tp.encoding, counter)
        self.env: dict[str, Quantity] = {}

    def run(self) -> list[OutputRecord]:
        out = []
        for stmt in self.tp.program.statements:
            try:
                if isinstance(stmt, ast.LetDecl):
                    self.let(stmt)
                elif isinstance(stmt, ast.PrintStmt):
                    q = self.eval(stmt.expr)
                    out.append(_record(stmt, self.tp, q_in(q, self.tp.print_units[stmt], self.ctx)))
            except UnitsError as exc:
                raise RuntimeFailure(exc.at(stmt.pos), self.tp.program.file) from exc
        return out

    def let(self, stmt: ast.LetDecl) -> None:
        q = self.eval(stmt.expr)
        var = self.tp.variables[stmt.name]
        self.ctx.tick()
        if q.dim != var.dim:
            raise DimensionMismatch(f"value of '{stmt.name}' does not match its annotation",
                                    var.dim, q.dim, stmt.pos)
        self.env[stmt.name] = q_convert(q, var.prec)

    def eval(self, e) -> Quantity:
        ctx = self.ctx
        try:
            if isinstance(e, ast.Number):
                prec = self.tp.default_precision
                return Quantity(fk.to_precision(e.value, prec), ctx.encoding.zero(), prec)
            if isinstance(e, ast.Name):
                if e.ident in self.env:
                    return self.env[e.ident]
                return self.sys.quantity(e.ident)
            if isinstance(e, ast.BinOp):
                return _Q_BINARY[e.op](self.eval(e.left), self.eval(e.right), ctx)
            if isinstance(e, ast.Neg):
                return q_neg(self.eval(e.operand), ctx)
            if isinstance(e, ast.Power):
                return q_pow(self.eval(e.base), e.exponent, 1, ctx)
            if isinstance(e, ast.Sqrt):
                return q_sqrt(self.eval(e.arg), ctx)
            if isinstance(e, ast.Pow):
                return q_pow(self.eval(e.arg), e.p, e.q, ctx)
        except UnitsError as exc:
            raise exc.at(e.pos)
        raise TypeError(f"not an expression: {e!r}")


def eval_checked(tp: TypedProgram, counter: OpCounter | None = None) -> list[OutputRecord]:
    """Evaluate with full dimension tracking; ``counter`` collects op counts."""
    _require_ok(tp)
    return _CheckedEvaluator(tp, counter if counter is not None else OpCounter()).run()


# fast mode

_F_BINARY = {"+": fk.fadd, "-": fk.fsub, "*": fk.fmul, "/": fk.fdiv}


def _compile_expr(tp: TypedProgram, e):
    info = tp.info[e]
    if info.const is not None:
        value = info.const
        return lambda env: value
    single = info.prec is fk.Precision.SINGLE
    if isinstance(e, ast.Name):
        ident = e.ident
        return lambda env: env[ident]
    if isinstance(e, ast.BinOp):
        fn, left, right = _F_BINARY[e.op], _compile_expr(tp, e.left), _compile_expr(tp, e.right)
        raw = lambda env: fn(left(env), right(env))
    elif isinstance(e, ast.Neg):
        inner = _compile_expr(tp, e.operand)
        raw = lambda env: -inner(env)
    elif isinstance(e, ast.Power):
        inner, p = _compile_expr(tp, e.base), e.exponent
        raw = lambda env: fk.fpow(inner(env), p, 1)
    elif isinstance(e, ast.Sqrt):
        inner = _compile_expr(tp, e.arg)
        raw = lambda env: fk.fsqrt(inner(env))
    elif isinstance(e, ast.Pow):
        inner, p, q = _compile_expr(tp, e.arg), e.p, e.q
        raw = lambda env: fk.fpow(inner(env), p, q)
    else:
        raise TypeError(f"not an expression: {e!r}")
    if single:
        return lambda env: fk.to_precision(raw(env), fk.Precision.SINGLE)
    return raw


def _located(fn, pos, file):
    def run(env):
        try:
            return fn(env)
        except UnitsError as exc:
            raise RuntimeFailure(exc.at(pos), file) from exc
    return run


@dataclass
class FastProgram:
    """A checked program reduced to float-only closures."""

    steps: list = field(default_factory=list)

    def __call__(self) -> list[OutputRecord]:
        env: dict[str, float] = {}
        out: list[OutputRecord] = []
        for step in self.steps:
            step(env, out)
        return out


def compile_fast(tp: TypedProgram) -> FastProgram:
    _require_ok(tp)
    file = tp.program.file
    steps = []
    for stmt in tp.program.statements:
        if isinstance(stmt, ast.LetDecl):
            fn = _located(_compile_expr(tp, stmt.expr), stmt.pos, file)
            prec = tp.variables[stmt.name].prec

            def let_step(env, out, name=stmt.name, fn=fn, prec=prec):
                env[name] = fk.to_precision(fn(env), prec)

            steps.append(let_step)
        elif isinstance(stmt, ast.PrintStmt):
            fn = _located(_compile_expr(tp, stmt.expr), stmt.pos, file)
            factor = tp.print_units[stmt].factor

            def print_step(env, out, stmt=stmt, fn=fn, factor=factor):
                out.append(_record(stmt, tp, fk.fdiv(fn(env), factor)))

            steps.append(print_step)
    return FastProgram(steps)


def eval_fast(tp: TypedProgram) -> list[OutputRecord]:
    """Evaluate on bare floats after a clean check; no dimension bookkeeping."""
    return compile_fast(tp)()


def format_output(record: OutputRecord) -> str:
    text = f"{record.label} = {fk.format_number(record.value)}"
    return f"{text} {record.unit}" if record.unit else text


@dataclass
class BenchReport:
    iterations: int
    checked_seconds: float
    fast_seconds: float
    checked_dim_ops: int
    fast_dim_ops: int
    outputs_equal: bool
    pow_paths: dict = field(default_factory=dict)

    @property
    def speedup(self) -> float:
        return self.checked_seconds / self.fast_seconds if self.fast_seconds else float("inf")

    def lines(self) -> list[str]:
        return [
            f"iterations: {self.iterations}",
            f"checked: {self.checked_seconds:.6f} s, dimension ops {self.checked_dim_ops}",
            f"fast: {self.fast_seconds:.6f} s, dimension ops {self.fast_dim_ops}",
            f"speedup: {self.speedup:.2f}x",
            f"outputs equal: {'yes' if self.outputs_equal else 'no'}",
        ]


def bench(tp: TypedProgram, iterations: int) -> BenchReport:
    """Run a program ``iterations`` times in each mode and compare outputs."""
    if iterations < 1:
        raise ValueError("iterations must be positive")
    _require_ok(tp)

    counter = OpCounter()
    t0 = time.perf_counter()
    for _ in range(iterations):
        checked = eval_checked(tp, counter)
    t_checked = time.perf_counter() - t0

    fast_prog = compile_fast(tp)
    with watch_dim_ops() as fast_counter:
        t0 = time.perf_counter()
        for _ in range(iterations):
            fast = fast_prog()
        t_fast = time.perf_counter() - t0

    equal = [format_output(r) for r in checked] == [format_output(r) for r in fast]
    return BenchReport(iterations, t_checked, t_fast, counter.dim_ops, fast_counter.dim_ops,
                       equal, dict(counter.pow_paths))
