import pytest
from hypothesis import given, settings, strategies as st

from knotfiber.laurent import (
    LaurentError, LaurentPoly, parse_poly, poly_div_exact, poly_gcd,
)


def p1(text):
    return parse_poly(text, 1)


def p2(text):
    return parse_poly(text, 2)


class TestAdd:
    def test_cancellation(self):
        assert p2("x + 1") + p2("-x") == p2("1")

    def test_additive_identity(self):
        p = p1("3 - t + 2*t^5")
        assert p + LaurentPoly.zero(1) == p

    def test_coefficient_merge(self):
        assert p2("x^-2 + y") + p2("x^-2") == p2("2*x^-2 + y")

    def test_variable_count_mismatch(self):
        with pytest.raises(LaurentError):
            p1("t") + p2("x")


class TestMul:
    def test_difference_of_squares(self):
        assert p2("x - 1") * p2("x + 1") == p2("x^2 - 1")

    def test_multiplicative_identity(self):
        p = p2("3*x*y^-2 - 7")
        assert p * LaurentPoly.one(2) == p

    def test_monomial_shift(self):
        assert p1("t^-1 - 1 + t") * p1("t") == p1("1 - t + t^2")

    def test_variable_count_mismatch(self):
        with pytest.raises(LaurentError):
            p1("t") * p2("x")


class TestNormalizeUnits:
    def test_unit_extraction(self):
        poly = p1("-t^-3 + t^-2 - t^-1")
        canonical, unit = poly.normalize_units()
        assert canonical == p1("1 - t + t^2")
        assert unit == LaurentPoly.monomial(1, (-3,), -1)
        assert unit * canonical == poly

    def test_constant(self):
        canonical, unit = p1("5").normalize_units()
        assert canonical == p1("5")
        assert unit == p1("1")

    def test_seven_six_polynomial_fixed(self):
        poly = p1("1 - 5*t + 7*t^2 - 5*t^3 + t^4")
        canonical, unit = poly.normalize_units()
        assert canonical == poly
        assert unit == p1("1")

    def test_zero(self):
        canonical, unit = LaurentPoly.zero(1).normalize_units()
        assert canonical.is_zero()
        assert unit == p1("1")

    def test_monic_detection(self):
        assert p1("1 - 5*t + 7*t^2 - 5*t^3 + t^4").is_monic_up_to_units()
        assert not p1("2 - 3*t + 2*t^2").is_monic_up_to_units()
        assert not LaurentPoly.zero(1).is_monic_up_to_units()


class TestSpan:
    def test_constant(self):
        assert p2("1").span(0) == (0, 0)

    def test_mixed(self):
        assert p2("x^-2*y + x^4").span(0) == (-2, 4)
        assert p2("x^-2*y + x^4").span(1) == (0, 1)

    def test_zero_errors(self):
        with pytest.raises(LaurentError):
            LaurentPoly.zero(1).span(0)


class TestRendering:
    def test_spec_form(self):
        assert p2("-x^-2*y + 3").render() == "-x^-2*y + 3"

    def test_one_variable(self):
        assert p1("1 - t + t^2").render() == "1 - t + t^2"

    def test_zero(self):
        assert LaurentPoly.zero(2).render() == "0"
        assert parse_poly("0", 1).is_zero()

    def test_bad_tokens(self):
        with pytest.raises(LaurentError):
            parse_poly("q + 1", 1)
        with pytest.raises(LaurentError):
            parse_poly("", 1)


small_coeff = st.integers(min_value=-6, max_value=6)
small_exp = st.integers(min_value=-4, max_value=4)


def polys(num_vars):
    exps = st.tuples(*([small_exp] * num_vars))
    return st.dictionaries(exps, small_coeff, max_size=5).map(
        lambda d: LaurentPoly(num_vars, d))


@settings(max_examples=120, deadline=None)
@given(polys(1), polys(1), polys(1))
def test_ring_axioms_one_var(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(polys(2), polys(2), polys(2))
def test_ring_axioms_two_var(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=100, deadline=None)
@given(polys(1))
def test_normalize_idempotent(a):
    canonical, _ = a.normalize_units()
    again, unit = canonical.normalize_units()
    assert again == canonical
    assert unit == LaurentPoly.one(1)


@settings(max_examples=100, deadline=None)
@given(polys(1), polys(1))
def test_span_additivity(a, b):
    if a.is_zero() or b.is_zero():
        return
    lo_a, hi_a = a.span(0)
    lo_b, hi_b = b.span(0)
    lo, hi = (a * b).span(0)
    assert lo == lo_a + lo_b
    assert hi == hi_a + hi_b


@settings(max_examples=100, deadline=None)
@given(polys(1), polys(1))
def test_render_parse_round_trip(a, b):
    p = a * b
    assert parse_poly(p.render(), 1) == p


class TestGcdAndDivision:
    def test_gcd_basic(self):
        g = poly_gcd(p1("t^2 - 1"), p1("t^2 - 2*t + 1"))
        assert g == p1("-1 + t")

    def test_gcd_with_zero(self):
        assert poly_gcd(LaurentPoly.zero(1), p1("-2*t^3 + 2*t")) == \
            p1("-2*t^3 + 2*t").normalize_units()[0]

    def test_gcd_units_ignored(self):
        g = poly_gcd(p1("t^-3 - t^-2").scale(3), p1("2*t - 2*t^2"))
        assert g == p1("-1 + t")

    def test_exact_division(self):
        product = p1("1 - t + t^2") * p1("1 + t")
        assert poly_div_exact(product, p1("1 + t")) == p1("1 - t + t^2")

    def test_laurent_shift_division(self):
        assert poly_div_exact(p1("t^-1 + 1"), p1("t^-1")) == p1("1 + t")

    def test_inexact_raises(self):
        with pytest.raises(LaurentError):
            poly_div_exact(p1("t^2 + 1"), p1("t + 1"))
