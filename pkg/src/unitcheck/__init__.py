"""Dimensional analysis with integer-encoded dimensions.

The library layers are:

* :mod:`unitcheck.dimension` - exponent vectors, packed integer codes, and
  their algebra (strict or compat).
* :mod:`unitcheck.units` - an immutable registry of axes, units and constants.
* :mod:`unitcheck.quantity` - values carrying a dimension and a precision tag.
* :mod:`unitcheck.lang` - the UDL language: parse, check, then evaluate either
  with dimension tracking or on bare floats.
"""

from .dimension import (
    DEFAULT_CONFIG,
    DimVector,
    EncodingConfig,
    PackedDim,
    PackedEncoding,
    VectorEncoding,
    dv_div,
    dv_mul,
    dv_pow,
    make_encoding,
    p_add,
    p_scale,
    p_sub,
    pack,
    unpack,
)
from .errors import (
    CapacityOverflow,
    DimensionMismatch,
    DomainError,
    InvalidFactor,
    NonIntegerExponent,
    ParseError,
    Redefinition,
    UnitsError,
    UnknownAxis,
    UnknownUnit,
)
from .numeric import Precision
from .quantity import (
    DimContext,
    OpCounter,
    Quantity,
    q_add,
    q_cmp,
    q_div,
    q_in,
    q_mul,
    q_neg,
    q_pow,
    q_sqrt,
    q_sub,
    watch_dim_ops,
)
from .units import UnitDef, UnitSystem
from .lang.api import check_source
from .lang.checker import Diagnostic, TypedProgram, check
from .lang.evaluate import bench, compile_fast, eval_checked, eval_fast, format_output
from .lang.lexer import lex
from .lang.parser import parse, parse_expression, parse_source

__version__ = "0.1.0"

__all__ = [
    "bench",
    "CapacityOverflow",
    "check",
    "check_source",
    "compile_fast",
    "DEFAULT_CONFIG",
    "Diagnostic",
    "DimContext",
    "DimensionMismatch",
    "DimVector",
    "DomainError",
    "dv_div",
    "dv_mul",
    "dv_pow",
    "EncodingConfig",
    "eval_checked",
    "eval_fast",
    "format_output",
    "InvalidFactor",
    "lex",
    "make_encoding",
    "NonIntegerExponent",
    "OpCounter",
    "p_add",
    "p_scale",
    "p_sub",
    "pack",
    "PackedDim",
    "PackedEncoding",
    "parse",
    "parse_expression",
    "parse_source",
    "ParseError",
    "Precision",
    "q_add",
    "q_cmp",
    "q_div",
    "q_in",
    "q_mul",
    "q_neg",
    "q_pow",
    "q_sqrt",
    "q_sub",
    "Quantity",
    "Redefinition",
    "TypedProgram",
    "UnitDef",
    "UnitsError",
    "UnitSystem",
    "UnknownAxis",
    "UnknownUnit",
    "unpack",
    "VectorEncoding",
    "watch_dim_ops",
]
