from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from qtasm.exact import (
    ZETA, CenteredShape, CycQ6, DomainError, InterpolationError, LaurentPoly,
    alpha, format_value, interpolate_centered, inverse, parse_value, sigma,
)

nonzero = st.fractions(min_value=-20, max_value=20, max_denominator=30).filter(lambda v: v != 0)
cyc = st.builds(CycQ6, st.fractions(-5, 5, max_denominator=9), st.fractions(-5, 5, max_denominator=9))


def test_sigma_examples():
    assert sigma(1) == 0
    assert sigma(2) == F(3, 2)
    s = sigma(ZETA)
    assert s == 2 * ZETA - 1
    assert s * s == -3


def test_alpha_examples():
    assert alpha(F(3), F(2)) == F(-175, 36)
    a = F(7, 3)
    assert alpha(1, a) == sigma(a) ** 2


@given(nonzero, nonzero)
def test_alpha_symmetric(u, a):
    assert alpha(u, a) == alpha(inverse(u), a)


@given(nonzero)
def test_sigma_odd(u):
    assert sigma(inverse(u)) == -sigma(u)


def test_zeta_relations():
    assert ZETA * ZETA == ZETA - 1
    assert ZETA ** 6 == 1
    assert ZETA ** 3 == -1
    assert inverse(ZETA) == 1 - ZETA


@given(cyc, cyc, cyc)
def test_cyc_field_axioms(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    if x != 0:
        assert x * inverse(x) == 1


def test_cyc_zero_inverse():
    with pytest.raises(ZeroDivisionError):
        inverse(CycQ6(0, 0))


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        inverse(F(0))


@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-4, 4)), max_size=6),
       nonzero, nonzero)
def test_laurent_evaluation_is_a_homomorphism(spec, x, y):
    X, Y = LaurentPoly.var("x"), LaurentPoly.var("y")
    p = LaurentPoly.constant(0)
    for i, j, c in spec:
        p = p + c * X ** i * Y ** j
    q = X * Y ** -1 + 3 - Y
    pt = {"x": x, "y": y}
    assert (p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt)
    assert (p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt)


def test_laurent_no_zero_coefficients():
    X = LaurentPoly.var("x")
    p = (X + 1) - X
    assert p == 1
    assert all(c != 0 for c in p.terms.values())


def test_monomial_inverse_and_division():
    X = LaurentPoly.var("x")
    assert X * inverse(X) == 1
    assert sigma(X) == X - X ** -1


def test_interpolate_constant():
    p = interpolate_centered([(F(2), F(5))], CenteredShape(0))
    assert p == 5


def test_interpolate_round_trip():
    f = lambda x: x * x + 1 + inverse(x * x)
    samples = [(F(v), f(F(v))) for v in (2, 3, 5)]
    p = interpolate_centered(samples, CenteredShape(2))
    assert p.terms == {(-2,): 1, (0,): 1, (2,): 1}


@given(st.lists(st.fractions(-9, 9, max_denominator=7), min_size=4, max_size=4))
def test_interpolate_odd_shape_recovers_coefficients(coef):
    shape = CenteredShape(3)
    T = LaurentPoly.var("t")
    target = sum((c * T ** e for c, e in zip(coef, shape.exponents)), LaurentPoly.constant(0))
    pts = [F(k + 2, k + 5) for k in range(6)]
    got = interpolate_centered([(p, target.evaluate({"t": p})) for p in pts], shape)
    assert got == target


def test_interpolate_rejects_bad_input():
    with pytest.raises(InterpolationError):
        interpolate_centered([(F(2), 1)], CenteredShape(2))
    with pytest.raises(InterpolationError):
        interpolate_centered([(F(2), 1), (F(-2), 1), (F(3), 1)], CenteredShape(2))
    # an extra sample off the claimed shape is detected
    with pytest.raises(InterpolationError):
        interpolate_centered([(F(2), 1), (F(3), 1), (F(5), 7)], CenteredShape(0))


def test_shape_parity():
    assert CenteredShape(2).exponents == [-2, 0, 2]
    assert CenteredShape(1).parity == "odd"
    with pytest.raises(ValueError):
        CenteredShape(2, "odd")


def test_parse_and_format():
    assert parse_value("3/4") == F(3, 4)
    assert parse_value("zeta") == ZETA
    with pytest.raises(ValueError):
        parse_value("0.5")
    assert format_value(F(15, 4)) == "15/4"
    assert format_value(CycQ6(-81, 0)) == "-81 + 0*zeta"
    A = LaurentPoly.var("a")
    assert format_value(sigma(A) * sigma(A * A)) == "1*a^-3 - 1*a^-1 - 1*a + 1*a^3"


def test_domain_error_is_zero_division():
    assert issubclass(DomainError, ZeroDivisionError)
