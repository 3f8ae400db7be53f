import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from unitcheck import (
    DimContext,
    DimensionMismatch,
    DimVector,
    DomainError,
    NonIntegerExponent,
    OpCounter,
    PackedEncoding,
    Precision,
    Quantity,
    UnitDef,
    VectorEncoding,
    q_add,
    q_cmp,
    q_div,
    q_in,
    q_mul,
    q_neg,
    q_pow,
    q_sqrt,
    q_sub,
)
from unitcheck.dimension import dv_pow

from conftest import CFG3, CFG3_COMPAT

CTX = DimContext(VectorEncoding(CFG3))
L, M, T = DimVector((1, 0, 0)), DimVector((0, 1, 0)), DimVector((0, 0, 1))
ONE = DimVector((0, 0, 0))
S, D = Precision.SINGLE, Precision.DOUBLE


def q(v, dim=ONE, prec=D):
    return Quantity(v, dim, prec)


m, s, cm = q(1.0, L), q(1.0, T), q(0.01, L)


def test_add_examples():
    r = q_add(q_mul(1, m, CTX), q_mul(75, cm, CTX), CTX)
    assert r.value == 1 + 75 * 0.01 == 1.75
    assert r.dim == L
    x = q(3.5, L)
    assert q_add(x, q(0.0, L), CTX) == x
    with pytest.raises(DimensionMismatch) as info:
        q_add(m, s, CTX)
    assert (info.value.left, info.value.right) == (L, T)


def test_sub_mismatch():
    with pytest.raises(DimensionMismatch):
        q_sub(m, s, CTX)


def test_mul_div_examples():
    v = q_div(q_mul(5, m, CTX), s, CTX)
    assert (v.value, v.dim) == (5.0, DimVector((1, 0, -1)))
    ratio = q_div(v, v, CTX)
    assert ratio.value == 1.0 and ratio.dimensionless
    g0 = q(9.81, DimVector((1, 0, -2)))
    t2 = q_div(q_mul(2, m, CTX), g0, CTX)
    assert t2.value == 2 / 9.81
    assert t2.dim == DimVector((0, 0, 2))


def test_division_by_zero_is_ieee():
    assert q_div(m, q(0.0, T), CTX).value == math.inf
    assert q_div(q(-1.0, L), q(0.0, T), CTX).value == -math.inf
    assert math.isnan(q_div(q(0.0, L), q(0.0, T), CTX).value)


def test_cmp_examples():
    assert q_cmp(m, q_mul(75, cm, CTX), CTX) == 1
    x = q(2.0, L)
    assert q_cmp(x, x, CTX) == 0
    assert q_cmp(cm, m, CTX) == -1
    with pytest.raises(DimensionMismatch):
        q_cmp(m, s, CTX)
    with pytest.raises(DomainError):
        q_cmp(q(math.nan, L), m, CTX)


def test_sqrt_examples():
    t = q_sqrt(q(2 / 9.81, DimVector((0, 0, 2))), CTX)
    assert t.value == math.sqrt(2 / 9.81)
    assert t.dim == T
    assert q_sqrt(q(4.0), CTX) == q(2.0)
    with pytest.raises(NonIntegerExponent):
        q_sqrt(m, CTX)
    assert math.isnan(q_sqrt(q(-4.0), CTX).value)


def test_sqrt_compat_truncates():
    ctx = DimContext(PackedEncoding(CFG3_COMPAT))
    r = q_sqrt(Quantity(4.0, ctx.encoding.from_vector(L)), ctx)
    assert r.dim.code == 0 and r.value == 2.0


def test_pow_examples():
    r = q_pow(q(4.0, DimVector((2, 0, 0))), 1, 2, CTX)
    assert (r.value, r.dim) == (2.0, L)
    r = q_pow(q(8.0, DimVector((3, 0, 0))), 2, 3, CTX)
    assert r.value == pytest.approx(8 ** (2 / 3), rel=1e-15) and r.value == 4.0
    assert r.dim == DimVector((2, 0, 0))
    x = q(3.7, L)
    assert q_pow(x, 1, 1, CTX) == x
    with pytest.raises(DomainError):
        q_pow(q(-4.0), 1, 2, CTX)
    with pytest.raises(NonIntegerExponent):
        q_pow(m, 1, 3, CTX)
    assert q_pow(q(-8.0), 1, 3, CTX).value == -2.0
    assert q_pow(q(-32.0), 3, 5, CTX).value == pytest.approx(-8.0, rel=1e-15)


def test_pow_fast_paths_are_taken():
    counter = OpCounter()
    ctx = DimContext(VectorEncoding(CFG3), counter)
    for p, qq in ((3, 1), (1, 2), (2, 3), (2, 4), (1, 5)):
        q_pow(q(2.0), p, qq, ctx)
    assert counter.pow_paths == {"mul": 1, "sqrt": 2, "cbrt": 1, "general": 1}
    assert counter.dim_ops == 5


@pytest.mark.parametrize("p,qq", [(1, 2), (3, 2), (2, 1), (5, 1), (-2, 1), (1, 3), (2, 3), (-1, 3)])
def test_fast_paths_agree_with_general_pow(p, qq):
    for x in np.geomspace(0.1, 10.0, 201):
        fast = q_pow(q(float(x)), p, qq, CTX).value
        assert fast == pytest.approx(math.pow(x, p / qq), rel=1e-15, abs=0)


def test_in_examples():
    t = q(math.sqrt(2 / 9.81), T)
    assert q_in(t, UnitDef("s", T, 1.0), CTX) == math.sqrt(2 / 9.81)
    assert q_in(q(1.75, L), UnitDef("cm", L, 0.01), CTX) == 1.75 / 0.01 == 175.0
    with pytest.raises(DimensionMismatch):
        q_in(m, UnitDef("s", T, 1.0), CTX)


def test_numbers_coerce_to_dimensionless():
    r = q_mul(q(2.0), 3, CTX)
    assert r == q(6.0)
    assert q_add(q(1.0), 2.0, CTX) == q(3.0)
    with pytest.raises(DimensionMismatch):
        q_add(m, 2.0, CTX)


def test_operator_sugar():
    a, b = Quantity(2.0, L), Quantity(3.0, L)
    assert (a + b).value == 5.0
    assert (a * b).dim == DimVector((2, 0, 0))
    assert float(a / b) == 2.0 / 3.0
    assert (-a).value == -2.0
    with pytest.raises(DimensionMismatch):
        float(a)


@pytest.mark.parametrize("op", [q_add, q_sub, q_mul, q_div])
@pytest.mark.parametrize("pa", [S, D])
@pytest.mark.parametrize("pb", [S, D])
def test_precision_promotion(op, pa, pb):
    r = op(q(1.1, L, pa), q(2.3, L, pb), CTX)
    assert r.prec == max(pa, pb)


def test_single_rounds_results():
    r = q_mul(q(0.1, ONE, S), q(3.0, ONE, S), CTX)
    assert r.value == float(np.float32(0.1 * 3.0))
    assert r.value != 0.1 * 3.0
    assert q_sqrt(q(2.0, ONE, S), CTX).prec == S
    assert q_pow(q(2.0, ONE, S), 1, 3, CTX).value == float(np.float32(np.cbrt(2.0)))
    assert q_neg(q(0.1, ONE, S), CTX).prec == S


def test_packed_context():
    ctx = DimContext(PackedEncoding(CFG3))
    lm = Quantity(1.0, ctx.encoding.from_vector(L))
    ts = Quantity(2.0, ctx.encoding.from_vector(T))
    v = q_div(lm, ts, ctx)
    assert v.dim.code == -99
    with pytest.raises(DimensionMismatch):
        q_add(lm, ts, ctx)


# properties

dims = st.lists(st.integers(-3, 3), min_size=3, max_size=3).map(DimVector)
finite = st.floats(-1e6, 1e6, allow_nan=False)
precs = st.sampled_from([S, D])
quantities = st.builds(Quantity, finite, dims, precs)


@given(quantities, quantities)
def test_mul_commutes(a, b):
    assert q_mul(a, b, CTX) == q_mul(b, a, CTX)


@given(quantities, quantities, quantities)
def test_mul_dimension_associative(a, b, c):
    left = q_mul(q_mul(a, b, CTX), c, CTX)
    right = q_mul(a, q_mul(b, c, CTX), CTX)
    assert left.dim == right.dim


@given(finite, finite, dims, precs, precs)
def test_add_commutes(x, y, dim, pa, pb):
    a, b = Quantity(x, dim, pa), Quantity(y, dim, pb)
    assert q_add(a, b, CTX) == q_add(b, a, CTX)


@given(st.floats(1e-300, 1e300), dims.map(lambda d: DimVector(2 * e for e in d)), precs)
def test_pow_half_is_sqrt(x, dim, prec):
    a = Quantity(x, dim, prec)
    r1, r2 = q_pow(a, 1, 2, CTX), q_sqrt(a, CTX)
    assert r1.dim == r2.dim == dv_pow(dim, 1, 2, CFG3)
    assert r1.value == pytest.approx(r2.value, rel=1e-15)
    assert r1.prec == r2.prec == prec


@given(st.recursive(
    quantities,
    lambda kids: st.tuples(st.sampled_from([q_mul, q_div]), kids, kids),
    max_leaves=12,
))
def test_bookkeeping_never_changes_values(tree):
    # evaluate once on quantities and once on bare floats with numpy semantics
    def with_dims(t):
        if isinstance(t, Quantity):
            return t
        op, a, b = t
        return op(with_dims(a), with_dims(b), CTX)

    def bare(t):
        if isinstance(t, Quantity):
            return t.value, t.prec
        op, a, b = t
        (x, pa), (y, pb) = bare(a), bare(b)
        prec = max(pa, pb)
        with np.errstate(all="ignore"):
            r = np.float64(x) * np.float64(y) if op is q_mul else np.float64(x) / np.float64(y)
            if prec is S:
                r = np.float32(r)
        return float(r), prec

    value, prec = bare(tree)
    got = with_dims(tree)
    assert got.prec == prec
    assert got.value == value or (math.isnan(got.value) and math.isnan(value))
