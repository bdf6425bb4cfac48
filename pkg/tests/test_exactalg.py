import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from kostkacr.exactalg import (
    CycRational,
    Poly,
    RatFunc,
    cyc_arith,
    euler_phi,
    parse_ratfunc,
    poly_extract,
    ratfunc_arith,
    substitute,
    t_poly,
)

T = RatFunc.t_power(1, 1)
ONE = RatFunc.constant(1, 1)


def numeric(c: CycRational) -> complex:
    """Evaluate at zeta = exp(2 pi i / r) with floats."""
    z = cmath.exp(2j * cmath.pi / c.order)
    return sum(float(x) * z ** i for i, x in enumerate(c.coords))


@st.composite
def cyc(draw, order=None):
    r = order if order is not None else draw(st.integers(1, 6))
    coords = draw(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=7),
                           min_size=euler_phi(r), max_size=euler_phi(r)))
    return CycRational(r, coords)


@st.composite
def cyc_triple(draw):
    r = draw(st.integers(1, 6))
    return draw(cyc(r)), draw(cyc(r)), draw(cyc(r))


# ------------------------------------------------------------ Q(zeta)


def test_r2_zeta_is_real():
    z = CycRational.zeta(2)
    assert z.conj() == z
    assert z == -1


def test_r4_zeta_times_zeta_cubed_is_one():
    assert CycRational.zeta(4) * CycRational.zeta(4, 3) == 1


def test_r3_zeta_squared_reduces():
    z2 = CycRational.zeta(3, 2)
    assert z2.coords == (-1, -1)
    assert z2 == -1 - CycRational.zeta(3)


def test_coordinates_have_length_phi():
    for r in range(1, 13):
        assert len(CycRational.zeta(r).coords) == euler_phi(r)


def test_canonical_equality_across_representations():
    # 1 + zeta + zeta^2 + zeta^3 + zeta^4 = 0 for r = 5
    total = sum((CycRational.zeta(5, k) for k in range(5)), CycRational.from_rational(5, 0))
    assert total.is_zero()
    assert total == 0


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        CycRational.zeta(3) / CycRational.from_rational(3, 0)


def test_cyc_arith_dispatch():
    a, b = CycRational.zeta(6), CycRational.zeta(6, 2)
    assert cyc_arith(a, b, "add") == a + b
    assert cyc_arith(a, b, "mul") == CycRational.zeta(6, 3)
    assert cyc_arith(a, b, "div") == CycRational.zeta(6, 5)
    assert cyc_arith(a, None, "conj") == CycRational.zeta(6, 5)
    with pytest.raises(ValueError):
        cyc_arith(a, b, "pow")


def test_mismatched_orders_rejected():
    with pytest.raises(ValueError):
        CycRational.zeta(3) + CycRational.zeta(4)


@settings(max_examples=150, deadline=None)
@given(cyc_triple())
def test_field_axioms(abc):
    a, b, c = abc
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if a:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@settings(max_examples=150, deadline=None)
@given(cyc_triple())
def test_conjugation_is_an_involutive_automorphism(abc):
    a, b, _ = abc
    assert a.conj().conj() == a
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()


@settings(max_examples=100, deadline=None)
@given(cyc_triple())
def test_arithmetic_matches_complex_evaluation(abc):
    a, b, _ = abc
    assert abs(numeric(a * b) - numeric(a) * numeric(b)) < 1e-6
    assert abs(numeric(a.conj()) - numeric(a).conjugate()) < 1e-6
    if a:
        assert abs(numeric(b / a) - numeric(b) / numeric(a)) < 1e-6


def test_json_roundtrip():
    c = CycRational(3, [Fraction(1, 2), -3])
    assert c.to_json() == ["1/2", "-3"]
    assert CycRational.from_json(3, c.to_json()) == c


# ------------------------------------------------------------ rational functions


def test_normalization_cancels_common_factor():
    f = RatFunc(t_poly(1, [1, 0, -1]), t_poly(1, [1, -1]))
    assert f.den == 1
    assert f == parse_ratfunc("1 + t")


def test_a_over_a_is_one():
    a = parse_ratfunc("(3 - t^2)/(1 + 2*t)")
    assert ratfunc_arith(a, a, "div") == 1


def test_common_denominator_sum():
    a = ONE / (ONE - T)
    b = -T / (ONE - T)
    assert ratfunc_arith(a, b, "add") == 1


def test_denominator_is_monic():
    f = RatFunc(t_poly(1, [1]), t_poly(1, [2, -4]))
    assert f.den.leading_coefficient() == 1
    assert f == parse_ratfunc("1/(2 - 4*t)")


def test_division_by_zero_function():
    with pytest.raises(ZeroDivisionError):
        ratfunc_arith(ONE, RatFunc.constant(1, 0), "div")
    with pytest.raises(ValueError):
        ratfunc_arith(ONE, ONE, "pow")


def test_substitute_examples():
    assert substitute(parse_ratfunc("1 + t"), 2) == parse_ratfunc("1 + t^2")
    assert substitute(T, -1) == ONE / T
    assert substitute(parse_ratfunc("1 + t^2"), -2) == parse_ratfunc("(t^4 + 1)/t^4")


def test_poly_extract_examples():
    assert poly_extract(parse_ratfunc("(1 - t^2)/(1 - t)")) == t_poly(1, [1, 1])
    assert poly_extract(ONE / (ONE - T)) is None
    assert poly_extract(RatFunc(Poly.zero(1), t_poly(1, [1, -1]))) == Poly.zero(1)


def test_cyclotomic_coefficients_cancel():
    # 1/(1 - zeta t) + 1/(1 - zeta^-1 t) has rational coefficients
    r = 3
    one = Poly.constant(r, 1)
    z = CycRational.zeta(r)
    f = RatFunc(one, one - Poly.monomial(r, 1, z))
    total = f + f.conj()
    assert total.is_rational()
    assert total == RatFunc(Poly.from_coeffs(r, [2, 1]), Poly.from_coeffs(r, [1, 1, 1]))


def test_ratfunc_json_roundtrip():
    f = parse_ratfunc("(t^3 + t)/(1 - t^2)", 1)
    assert RatFunc.from_json(1, f.to_json()) == f


def test_with_order_reembeds_rational_functions():
    f = parse_ratfunc("t/(1 - t^3)")
    g = f.with_order(3)
    assert g.order == 3 and g.is_rational()
    assert g.with_order(1) == f
    with pytest.raises(ValueError):
        RatFunc.from_poly(Poly.monomial(3, 1, CycRational.zeta(3))).with_order(1)


def test_parse_rejects_unknown_symbols():
    with pytest.raises(ValueError):
        parse_ratfunc("x + 1")


small_poly = st.lists(st.integers(-5, 5), min_size=1, max_size=4)


@settings(max_examples=100, deadline=None)
@given(small_poly, small_poly, small_poly)
def test_normal_form_is_canonical(a, b, c):
    pa, pb, pc = t_poly(1, a), t_poly(1, b), t_poly(1, c)
    if pb.is_zero() or pc.is_zero():
        return
    reduced = RatFunc(pa, pb)
    unreduced = RatFunc(pa * pc, pb * pc)
    assert reduced.num == unreduced.num and reduced.den == unreduced.den
    other = RatFunc(pc, pb + pc) if not (pb + pc).is_zero() else ONE
    lhs = reduced + other
    rhs = unreduced + other
    assert lhs.num == rhs.num and lhs.den == rhs.den


@settings(max_examples=100, deadline=None)
@given(small_poly, small_poly, st.integers(1, 3))
def test_substitution_composes(a, b, k):
    if t_poly(1, b).is_zero():
        return
    f = RatFunc(t_poly(1, a), t_poly(1, b))
    assert f.substitute(-1).substitute(-1) == f
    assert f.substitute(k).substitute(-1) == f.substitute(-k)
    assert f.substitute(k) == RatFunc(t_poly(1, a).compose_power(k), t_poly(1, b).compose_power(k))


@settings(max_examples=100, deadline=None)
@given(small_poly, small_poly, st.fractions(min_value=-3, max_value=3, max_denominator=5))
def test_evaluation_agrees_with_fractions(a, b, x):
    pb = t_poly(1, b)
    den_at_x = sum(Fraction(c) * x ** i for i, c in enumerate(b))
    if pb.is_zero() or den_at_x == 0:
        return
    f = RatFunc(t_poly(1, a), pb)
    expected = sum(Fraction(c) * x ** i for i, c in enumerate(a)) / den_at_x
    value = f(CycRational.from_rational(1, x))
    assert Fraction(int(value.rational().p), int(value.rational().q)) == expected
