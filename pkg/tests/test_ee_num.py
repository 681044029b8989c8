import cmath
import math

import mpmath as mp
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pseudogamma import ee_num as e
from pseudogamma.ee_num import EXTENDED, STANDARD, LogComplex, PrecisionProfile
from pseudogamma.errors import CancellationToZero, SingularAtMinusOne, ZeroNotRepresentable

logs = st.floats(min_value=-1e6, max_value=1e6)
args = st.floats(min_value=-3.0, max_value=3.0)
moderate = st.complex_numbers(min_magnitude=1e-3, max_magnitude=1e3, allow_nan=False, allow_infinity=False)


def test_profiles():
    assert STANDARD.rel_tol == pytest.approx(1e-14)
    assert EXTENDED.extended and not STANDARD.extended
    with pytest.raises(ValueError):
        PrecisionProfile("standard", 20)
    with pytest.raises(ValueError):
        PrecisionProfile("quad", 30)


@given(moderate)
def test_cartesian_round_trip(z):
    v = LogComplex.from_complex(z)
    # exp(log|z|) carries the rounding of log|z| into the modulus
    assert abs(v.to_complex() - z) <= 4e-16 * (2.0 + abs(math.log(abs(z)))) * abs(z)


@given(logs, args, logs, args)
def test_mul_div_are_exact_in_log_space(a1, t1, a2, t2):
    a, b = LogComplex(a1, t1), LogComplex(a2, t2)
    p = a * b
    assert p.log_mod + p.lo == pytest.approx(a1 + a2, abs=1e-9)
    back = p / b
    assert back.log_mod + back.lo == pytest.approx(a1, abs=1e-9)
    assert abs(cmath.exp(1j * back.arg) - cmath.exp(1j * t1)) < 1e-12


@given(moderate, moderate)
def test_add_matches_complex_when_in_range(x, y):
    if abs(x + y) < 1e-6 * max(abs(x), abs(y)):
        return
    got = e.add(LogComplex.from_complex(x), LogComplex.from_complex(y)).to_complex()
    assert abs(got - (x + y)) <= 1e-13 * max(abs(x), abs(y))


def test_add_beyond_double_range():
    a = LogComplex(5000.0, 0.0)
    b = LogComplex(5000.0 + math.log(3.0), 0.0)
    s = e.add(a, b)
    assert s.log_mod == pytest.approx(5000.0 + math.log(4.0), rel=1e-15)


def test_exact_cancellation_is_reported():
    a = LogComplex(1e6, 0.3)
    with pytest.raises(CancellationToZero):
        e.sub(a, a)


def test_zero_and_minus_one():
    with pytest.raises(ZeroNotRepresentable):
        e.from_cartesian(0.0, 0.0)
    with pytest.raises(SingularAtMinusOne):
        e.log1p_c(e.from_cartesian(-1.0, 0.0))


@pytest.mark.parametrize("x", [1e-20 + 1e-20j, 1e-5 - 2e-6j, 0.05j, 0.3 + 0.2j, -0.5 + 0.1j, 3.0 - 4.0j])
def test_log1p_against_mpmath(x):
    got = e.log1p_c(LogComplex.from_complex(x)).to_complex()
    with mp.workdps(40):
        want = complex(mp.log1p(mp.mpc(x)))
    assert abs(got - want) <= 1e-15 * abs(want)


def test_log1p_tiny_argument_far_outside_double_range():
    x = LogComplex(-5000.0, 0.7)
    r = e.log1p_c(x)
    # log(1 + x) = x to first order
    assert r.log_mod == pytest.approx(-5000.0, abs=1e-12)
    assert r.arg == pytest.approx(0.7, abs=1e-15)


def test_pow_real_and_conjugate():
    v = LogComplex.from_complex(3 + 4j) ** 0.5
    assert abs(v.to_complex() - cmath.sqrt(3 + 4j)) < 1e-15
    assert LogComplex(1.0, 0.5).conjugate().arg == -0.5


def test_relative_distance():
    a = LogComplex(0.0, 0.0)
    assert e.relative_distance(a, a) == 0.0
    assert e.relative_distance(a, LogComplex(1e-12, 0.0)) == pytest.approx(1e-12, rel=1e-6)


def test_normalize_arg_range():
    for x in (-10.0, -math.pi, math.pi, 7.0, 1e6):
        y = e.normalize_arg(x)
        assert -math.pi < y <= math.pi
        assert abs(cmath.exp(1j * y) - cmath.exp(1j * x)) < 1e-9


# -- documented examples ----------------------------------------------------

def test_cartesian_examples():
    assert e.from_cartesian(1.0, 0.0) == LogComplex(0.0, 0.0)
    assert e.from_cartesian(0.0, 1.0) == LogComplex(0.0, math.pi / 2)
    v = e.from_cartesian(-2.0, 0.0)
    assert v.log_mod == math.log(2.0) and v.arg == math.pi


def test_mul_div_pow_examples():
    i = e.from_cartesian(0.0, 1.0)
    assert i * i == LogComplex(0.0, math.pi)
    z = LogComplex(3.2, -1.1)
    assert z * e.from_cartesian(1.0, 0.0) == z
    assert z / z == LogComplex(0.0, 0.0)
    cube = LogComplex(math.log(2.0), 0.0) ** 3
    assert cube.to_complex() == pytest.approx(8.0, rel=1e-15) and cube.arg == 0.0
    assert z ** 1 == z
    assert LogComplex(0.0, math.pi / 2) ** 2 == LogComplex(0.0, math.pi)


def test_add_examples():
    one = LogComplex.one()
    assert e.add(one, one).log_mod == pytest.approx(math.log(2.0), rel=1e-16)
    with pytest.raises(CancellationToZero):
        e.add(one, e.from_cartesian(-1.0, 0.0))
    big = LogComplex(400 * math.log(10.0), 0.0)
    s = e.add(big, one)
    # the increment 1e-400 is far below the resolution of log_mod
    assert s.log_mod == big.log_mod and s.arg == 0.0


def test_log1p_examples():
    tiny = e.log1p_c(e.from_cartesian(1e-300, 0.0))
    assert tiny.log_mod == pytest.approx(math.log(1e-300), rel=1e-15)
    assert e.log1p_c(e.from_cartesian(math.e - 1.0, 0.0)).to_complex() == pytest.approx(1.0, rel=1e-15)
    r = e.log1p_c(e.from_cartesian(1e-20, 0.0, EXTENDED), EXTENDED)
    with mp.workdps(60):
        want = mp.log(mp.log1p(mp.mpf(1e-20)))
        assert abs(mp.mpf(r.log_mod) + mp.mpf(r.lo) - want) < 1e-30
    # log_mod of ln(1 + 1e-20) keeps the second-order term -5e-41 in its low word
    assert r.lo == pytest.approx(-5e-21, rel=1e-6)


# -- properties -------------------------------------------------------------

@given(logs, args, logs, args)
def test_mul_commutes_bit_for_bit(a1, t1, a2, t2):
    a, b = LogComplex(a1, t1), LogComplex(a2, t2)
    assert e.mul(a, b) == e.mul(b, a)


@given(st.floats(min_value=-50.0, max_value=50.0), args, st.integers(min_value=1, max_value=64))
def test_pow_matches_repeated_mul(lm, t, m):
    a = LogComplex(lm, t)
    rep = a
    for _ in range(m - 1):
        rep = rep * a
    p = a ** m
    assert abs(p.log_mod - rep.log_mod) <= 1e-13 * max(1.0, abs(rep.log_mod))
    assert abs(cmath.exp(1j * p.arg) - cmath.exp(1j * rep.arg)) <= 1e-12 * m


@given(moderate, moderate, moderate)
def test_add_is_associative(x, y, z):
    mags = [abs(x), abs(y), abs(z)]
    if max(mags) / min(mags) > 1e10:
        return
    a, b, c = (LogComplex.from_complex(v) for v in (x, y, z))
    try:
        left = e.add(e.add(a, b), c)
        right = e.add(a, e.add(b, c))
    except CancellationToZero:
        return
    total = abs(x + y + z)
    if total < 1e-6 * max(mags):
        return
    assert e.relative_distance(left, right) <= 1e-12 * max(mags) / total


def test_arg_normalization_on_random_chains():
    import random

    rng = random.Random(5)
    v = LogComplex(0.3, 3.0)
    for _ in range(100_000):
        w = LogComplex(rng.uniform(-5, 5), rng.uniform(-math.pi, math.pi) * (1 if rng.random() < 0.5 else 7))
        op = rng.randrange(4)
        if op == 0:
            v = v * w
        elif op == 1:
            v = v / w
        elif op == 2:
            v = v ** rng.uniform(-3, 3)
        else:
            v = v.conjugate()
        assert -math.pi < v.arg <= math.pi
        if abs(v.log_mod) > 1e6:
            v = LogComplex(0.0, v.arg)
