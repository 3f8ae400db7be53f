import pytest

from unitcheck import ParseError, lex, parse, parse_expression, parse_source
from unitcheck.lang import ast


def kinds(src):
    return [repr(t) for t in lex(src)][:-1]


def test_lex_let():
    assert kinds("let t: s = sqrt(x);") == [
        "let", "ident t", "colon", "ident s", "eq", "sqrt", "lparen", "ident x", "rparen", "semi",
    ]


@pytest.mark.parametrize("text,value", [("9.81", 9.81), ("2.99792458e8", 2.99792458e8),
                                        ("1e-3", 1e-3), (".5", 0.5), ("7", 7.0)])
def test_lex_numbers(text, value):
    (tok, eof) = lex(text)
    assert tok.kind == "number" and float(tok.text) == value
    assert eof.kind == "eof"


@pytest.mark.parametrize("bad", ["1.2.3", "2m", "let x$ = 1;", "1e"])
def test_lex_errors(bad):
    with pytest.raises(ParseError):
        lex(bad)


def test_lex_positions_and_comments():
    toks = lex("# header\n  dim length;  # trailing\nunit")
    assert [(t.kind, t.pos.line, t.pos.col) for t in toks] == [
        ("dim", 2, 3), ("ident", 2, 7), ("semi", 2, 13), ("unit", 3, 1), ("eof", 3, 5),
    ]


def test_lex_collects_errors():
    errors = []
    toks = lex("a $ b", errors)
    assert [t.kind for t in toks] == ["ident", "ident", "eof"]
    assert len(errors) == 1 and errors[0].pos == ast.Pos(1, 3)


def test_parse_let():
    (stmt,) = parse_source("let v: m/s = 5*m/s;").statements
    assert isinstance(stmt, ast.LetDecl)
    assert stmt.name == "v"
    assert ast.unparse(stmt.annotation) == "(m / s)"
    assert ast.unparse(stmt.expr) == "((5.0 * m) / s)"
    assert stmt.precision is None


def test_left_associativity_and_precedence():
    assert ast.unparse(parse_expression("a*b/c*d")) == "(((a * b) / c) * d)"
    assert ast.unparse(parse_expression("a + b*c - d")) == "((a + (b * c)) - d)"
    assert ast.unparse(parse_expression("-x^2")) == "(-(x^2))"
    assert ast.unparse(parse_expression("m/s^-2")) == "(m / (s^-2))"
    assert ast.unparse(parse_expression("pow(x, -1, 3)")) == "pow(x, -1, 3)"


def test_empty_annotation_is_error():
    with pytest.raises(ParseError) as info:
        parse_source("let x: = 1;")
    assert info.value.pos == ast.Pos(1, 8)


@pytest.mark.parametrize("src", ["unit m = base(length);", "print x;", "let x: m @quad = 1;",
                                 "pow(x, 1, 0)", "x ^ 1.5", "(a", "dim 3;"])
def test_syntax_errors(src):
    with pytest.raises(ParseError):
        parse_source(src) if ";" in src else parse_expression(src)


def test_statement_forms():
    prog = parse_source("""
        dim length;
        unit m = base(length, 1.0);
        unit cm = m/100;
        const c = 3e8*m;
        let x: m @single = 2*m;
        print (1*m + 75*cm) in cm;
    """)
    types = [type(s).__name__ for s in prog.statements]
    assert types == ["DimDecl", "BaseUnitDecl", "UnitDecl", "ConstDecl", "LetDecl", "PrintStmt"]
    assert prog.statements[1].factor == 1.0
    assert str(prog.statements[4].precision) == "single"
    assert prog.statements[5].text == "(1*m + 75*cm)"
    assert prog.statements[5].unit_text == "cm"


def test_positions_monotonic():
    prog = parse_source("dim a;\n  dim b; dim c;\nlet x: 1 = 2;")
    positions = [s.pos for s in prog.statements]
    assert positions == sorted(positions)
    assert positions[0] == ast.Pos(1, 1) and positions[-1] == ast.Pos(3, 1)


def test_recovery_at_semicolon():
    errors = []
    prog = parse(lex("dim ;\ndim a;\nlet x: = 1;\nprint a in a;"), diagnostics=errors)
    assert len(errors) == 2
    assert [type(s).__name__ for s in prog.statements] == ["DimDecl", "PrintStmt"]
