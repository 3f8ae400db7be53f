"""One-call helpers that run the whole lex/parse/check pipeline."""

from __future__ import annotations

from ..dimension import DEFAULT_CONFIG, EncodingConfig, make_encoding
from ..numeric import Precision
from ..units import UnitSystem
from .checker import Diagnostic, TypedProgram, check
from .parser import parse_source


def check_source(source: str, file: str = "<input>", encoding: str = "packed",
                 cfg: EncodingConfig = DEFAULT_CONFIG,
                 precision: Precision = Precision.DOUBLE) -> TypedProgram:
    """Parse and check ``source``.

    Syntax errors are returned as diagnostics on an otherwise empty program;
    the checker only runs on source that parsed cleanly.
    """
    errors: list = []
    program = parse_source(source, file, errors)
    system = UnitSystem(make_encoding(encoding, cfg))
    if errors:
        diags = [Diagnostic.from_error(e, file, e.pos) for e in errors]
        return TypedProgram(program, system, default_precision=precision, diagnostics=diags)
    return check(program, system, precision)
