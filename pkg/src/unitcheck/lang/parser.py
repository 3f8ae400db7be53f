"""Recursive-descent parser for UDL.

Grammar (``*``/``/`` and ``+``/``-`` are left-associative, ``^`` binds
tightest, unary minus sits between the two)::

    program   := statement* ;
    statement := "dim" IDENT ";"
               | "unit" IDENT "=" "base" "(" IDENT "," NUMBER ")" ";"
               | "unit" IDENT "=" expr ";"
               | "const" IDENT "=" expr ";"
               | "let" IDENT ":" expr ("@" ("single"|"double"))? "=" expr ";"
               | "print" expr "in" expr ";"
    expr      := product (("+"|"-") product)* ;
    product   := term (("*"|"/") term)* ;
    term      := ("-")? power ;
    power     := atom ("^" INT)? ;
    atom      := NUMBER | IDENT | "(" expr ")"
               | "sqrt" "(" expr ")" | "pow" "(" expr "," INT "," INT ")" ;

INT may carry a leading minus sign where a signed exponent makes sense.
"""

from __future__ import annotations

from ..errors import ParseError
from ..numeric import Precision
from . import ast
from .lexer import Token, lex


class Parser:
    def __init__(self, tokens: list[Token], source: str = "", diagnostics: list | None = None):
        self.tokens = tokens
        self.source = source
        self.diagnostics = diagnostics
        self.i = 0

    # token helpers

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, kind: str) -> bool:
        return self.tok.kind == kind

    def advance(self) -> Token:
        t = self.tokens[self.i]
        if t.kind != "eof":
            self.i += 1
        return t

    def expect(self, kind: str, what: str | None = None) -> Token:
        if not self.peek(kind):
            self.error(f"expected {what or kind}, found {self.describe(self.tok)}")
        return self.advance()

    def error(self, msg: str, tok: Token | None = None):
        raise ParseError(msg, (tok or self.tok).pos)

    @staticmethod
    def describe(tok: Token) -> str:
        if tok.kind == "eof":
            return "end of input"
        return repr(tok.text)

    def _end(self) -> int:
        return self.tokens[self.i - 1].end

    # statements

    def parse_program(self) -> list:
        stmts = []
        while not self.peek("eof"):
            start = self.i
            try:
                stmts.append(self.statement())
            except ParseError as exc:
                if self.diagnostics is None:
                    raise
                self.diagnostics.append(exc)
                self.synchronize(start)
        return stmts

    def synchronize(self, start: int) -> None:
        if self.i == start:
            self.advance()
        while not self.peek("eof"):
            if self.tokens[self.i - 1].kind == "semi" and self.i > start:
                return
            self.advance()

    def statement(self):
        kw = self.tok
        handler = {
            "dim": self.dim_decl,
            "unit": self.unit_decl,
            "const": self.const_decl,
            "let": self.let_decl,
            "print": self.print_stmt,
        }.get(kw.kind)
        if handler is None:
            self.error(f"expected a statement, found {self.describe(kw)}")
        self.advance()
        return handler(kw)

    def dim_decl(self, kw: Token) -> ast.DimDecl:
        name = self.expect("ident", "axis name")
        self.expect("semi", "';'")
        return ast.DimDecl(name.text, kw.pos, name.pos)

    def unit_decl(self, kw: Token):
        name = self.expect("ident", "unit symbol")
        self.expect("eq", "'='")
        if self.peek("base"):
            self.advance()
            self.expect("lparen", "'('")
            axis = self.expect("ident", "axis name")
            self.expect("comma", "','")
            num = self.expect("number", "conversion factor")
            self.expect("rparen", "')'")
            self.expect("semi", "';'")
            return ast.BaseUnitDecl(name.text, axis.text, float(num.text), kw.pos, name.pos, axis.pos)
        expr = self.expr()
        self.expect("semi", "';'")
        return ast.UnitDecl(name.text, expr, kw.pos, name.pos)

    def const_decl(self, kw: Token) -> ast.ConstDecl:
        name = self.expect("ident", "constant name")
        self.expect("eq", "'='")
        expr = self.expr()
        self.expect("semi", "';'")
        return ast.ConstDecl(name.text, expr, kw.pos, name.pos)

    def let_decl(self, kw: Token) -> ast.LetDecl:
        name = self.expect("ident", "variable name")
        self.expect("colon", "':'")
        annotation = self.expr()
        precision = None
        if self.peek("at"):
            self.advance()
            word = self.tok
            if word.kind != "ident" or word.text not in ("single", "double"):
                self.error(f"expected 'single' or 'double', found {self.describe(word)}")
            self.advance()
            precision = Precision.parse(word.text)
        self.expect("eq", "'='")
        expr = self.expr()
        self.expect("semi", "';'")
        return ast.LetDecl(name.text, annotation, expr, precision, kw.pos, name.pos)

    def print_stmt(self, kw: Token) -> ast.PrintStmt:
        expr = self.expr()
        self.expect("in", "'in'")
        unit = self.expr()
        self.expect("semi", "';'")
        return ast.PrintStmt(expr, unit, kw.pos, self.text(expr), self.text(unit))

    def text(self, expr) -> str:
        if self.source:
            return self.source[expr.span[0]:expr.span[1]]
        return ast.unparse(expr)

    # expressions

    def expr(self):
        start = self.tok.start
        left = self.product()
        while self.peek("plus") or self.peek("minus"):
            op = self.advance()
            right = self.product()
            left = ast.BinOp(op.text, left, right, op.pos, (start, self._end()))
        return left

    def product(self):
        start = self.tok.start
        left = self.term()
        while self.peek("star") or self.peek("slash"):
            op = self.advance()
            right = self.term()
            left = ast.BinOp(op.text, left, right, op.pos, (start, self._end()))
        return left

    def term(self):
        if self.peek("minus"):
            op = self.advance()
            operand = self.power()
            return ast.Neg(operand, op.pos, (op.start, self._end()))
        return self.power()

    def power(self):
        start = self.tok.start
        base = self.atom()
        if self.peek("caret"):
            op = self.advance()
            exponent = self.integer("integer exponent")
            return ast.Power(base, exponent, op.pos, (start, self._end()))
        return base

    def integer(self, what: str) -> int:
        sign = 1
        if self.peek("minus"):
            self.advance()
            sign = -1
        tok = self.tok
        if not tok.is_int:
            self.error(f"expected {what}, found {self.describe(tok)}")
        self.advance()
        return sign * int(tok.text)

    def atom(self):
        tok = self.tok
        if tok.kind == "number":
            self.advance()
            return ast.Number(float(tok.text), tok.pos, (tok.start, tok.end))
        if tok.kind == "ident":
            self.advance()
            return ast.Name(tok.text, tok.pos, (tok.start, tok.end))
        if tok.kind == "lparen":
            self.advance()
            inner = self.expr()
            self.expect("rparen", "')'")
            # keep the parentheses in the span so printed labels match the source
            inner.span = (tok.start, self._end())
            return inner
        if tok.kind == "sqrt":
            self.advance()
            self.expect("lparen", "'('")
            arg = self.expr()
            self.expect("rparen", "')'")
            return ast.Sqrt(arg, tok.pos, (tok.start, self._end()))
        if tok.kind == "pow":
            self.advance()
            self.expect("lparen", "'('")
            arg = self.expr()
            self.expect("comma", "','")
            p = self.integer("integer numerator")
            self.expect("comma", "','")
            q_tok = self.tok
            q = self.integer("integer denominator")
            if q < 1:
                self.error("pow denominator must be a positive integer", q_tok)
            self.expect("rparen", "')'")
            return ast.Pow(arg, p, q, tok.pos, (tok.start, self._end()))
        self.error(f"expected an expression, found {self.describe(tok)}")


def parse(tokens: list[Token], source: str = "", file: str = "<input>",
          diagnostics: list | None = None) -> ast.Program:
    """Build a :class:`~unitcheck.lang.ast.Program` from ``lex`` output.

    Without ``diagnostics`` the first syntax error raises; with a list, errors
    are collected and parsing resumes after the next ``;``.
    """
    statements = Parser(tokens, source, diagnostics).parse_program()
    return ast.Program(statements, source, file)


def parse_source(source: str, file: str = "<input>", diagnostics: list | None = None) -> ast.Program:
    return parse(lex(source, diagnostics), source, file, diagnostics)


def parse_expression(source: str):
    """Parse a standalone expression such as ``"kg*m^2/s^2"``."""
    p = Parser(lex(source), source)
    expr = p.expr()
    p.expect("eof", "end of expression")
    return expr
