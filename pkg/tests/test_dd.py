from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pseudogamma import dd
from pseudogamma.dd import DD

finite = st.floats(min_value=-1e150, max_value=1e150, allow_nan=False, allow_infinity=False)


def mp_of(x: DD):
    return mp.mpf(x.hi) + mp.mpf(x.lo)


def rel(a, b):
    return abs((a - b) / b) if b != 0 else abs(a)


@given(finite, finite)
def test_two_sum_is_exact(a, b):
    s, e = dd.two_sum(a, b)
    assert Fraction(s) + Fraction(e) == Fraction(a) + Fraction(b)


normal = st.one_of(st.just(0.0), st.floats(min_value=1e-100, max_value=1e100), st.floats(min_value=-1e100, max_value=-1e-100))


@given(normal, normal)
def test_two_prod_is_exact(a, b):
    # exact whenever the rounding error of a*b is itself a normal number
    p, e = dd.two_prod(a, b)
    assert Fraction(p) + Fraction(e) == Fraction(a) * Fraction(b)


@settings(max_examples=200)
@given(st.floats(min_value=1e-10, max_value=1e10), st.floats(min_value=1e-10, max_value=1e10))
def test_arithmetic_has_double_double_accuracy(a, b):
    x = DD(a) / 3.0 + DD(b)
    y = DD(b) * 7.0 - DD(a) / 11.0
    with mp.workdps(50):
        xm, ym = mp_of(x), mp_of(y)
        for got, want in ((x * y, xm * ym), (x / y, xm / ym), (x + y, xm + ym)):
            assert rel(mp_of(got), want) < 1e-30


@pytest.mark.parametrize("x", [1e-20, 1e-5, 0.3, 1.0, 2.5, 40.0, 700.0, -3.7])
def test_exp_log_against_mpmath(x):
    # argument reduction costs about |x| units of 2^-106
    tol = 1e-31 * max(10.0, abs(x))
    with mp.workdps(50):
        assert rel(mp_of(dd.exp(x)), mp.exp(x)) < tol
        if x > 0:
            assert rel(mp_of(dd.log(x)), mp.log(x)) < tol
        if x > -1:
            assert rel(mp_of(dd.log1p(x)), mp.log1p(x)) < tol
            assert rel(mp_of(dd.expm1(x)), mp.expm1(x)) < tol


@pytest.mark.parametrize("x", [1e-12, 0.1, 1.0, 3.0, 100.0, -7.25, 1e6])
def test_sin_cos_against_mpmath(x):
    s, c = dd.sin_cos(x)
    tol = 1e-31 * max(10.0, abs(x))
    with mp.workdps(50):
        assert abs(mp_of(s) - mp.sin(x)) < tol
        assert abs(mp_of(c) - mp.cos(x)) < tol


@pytest.mark.parametrize("y,x", [(1.0, 1.0), (1.0, -2.0), (-3.0, -0.5), (1e-20, 1.0), (2.0, 0.0)])
def test_atan2_against_mpmath(y, x):
    with mp.workdps(50):
        assert abs(mp_of(dd.atan2(y, x)) - mp.atan2(y, x)) < 1e-30


def test_from_str_and_decimal_string_round_trip():
    x = DD.from_str("0.3674")
    assert x.to_fraction() != Fraction(3674, 10000)  # not representable in two doubles
    assert abs(x.to_fraction() - Fraction(3674, 10000)) < Fraction(1, 10**33)
    assert x.to_decimal_string(20).startswith("3.674")


def test_comparisons_see_the_low_word():
    a = DD(1.0, 1e-20)
    assert a > 1.0 and DD(1.0) < a and a != DD(1.0)
    assert DD(1.0, -1e-20) < 1.0
