import math

import pytest

import oracles
from pseudogamma import pseudo_gamma as pg
from pseudogamma.dd import DD
from pseudogamma.ee_num import EXTENDED, STANDARD
from pseudogamma.errors import (
    DomainError,
    FactorPole,
    HypothesisViolation,
    InvalidOverride,
    ProductTooLarge,
    RegimeViolation,
)
from pseudogamma.grid import GridSpec

# Reference values from tests/oracles.py (mpmath, 50-80 digits), frozen.
PAPER_K = 159
PAPER_Q = 130799282494.09993812
PAPER_W1 = 14675997331478.70758704237
TOY_Q = 198.18762657081658
TOY_W1 = 303.6622776601684
BOUND_MID = 1.3547306759583792e-12
BOUND_FINAL = 1.3547306759583792e-12
BOUND_GAP = 7.01569293572e-36

ORACLE_LOG_MOD = [
    # (s, R, K, log|nabla(s)|)
    (2.0, 6.0, 3, 2.3276768766139527e-18),
    (0.5 + 2.5j, 6.0, 2, 7.875587310041182e-08),
    (-1.0 + 0.3j, 6.0, 4, 1.4887828554395727e-35),
    (1.3 - 1.1j, 100.0, 3, -4.905850221343224e-38),
    (19.0 + 0.3j, 6.0, 3, -0.025178715406461487),
    (0.5 + 18.9j, 6.0, 2, -0.7954897142520759),
    (-17.0 - 4.0j, 6.0, 4, 0.03838603398220194),
]


def lm(v):
    return v.log_mod + v.lo


# -- parameters -------------------------------------------------------------

def test_paper_parameters():
    p = pg.paper_params()
    assert p.R == 4891999109997.0 and p.T == 2445999554999.0
    assert p.K == p.K_formula == PAPER_K
    assert p.log2_N == 160
    assert p.q == pytest.approx(PAPER_Q, rel=1e-15)
    assert p.W1 == pytest.approx(PAPER_W1, rel=1e-15)
    assert p.W2 == 3 * p.R + 0.5
    assert not p.k_override_active


def test_toy_parameters():
    p = pg.toy_params(100.0, 8)
    assert p.q == pytest.approx(TOY_Q, rel=1e-15)
    assert p.W1 == pytest.approx(TOY_W1, rel=1e-15)
    assert p.K == 8 and p.K_formula == 26 and p.k_override_active


@pytest.mark.parametrize("R", [6.0, 100.0, 1000.0, 1e6, 4891999109997.0])
def test_k_formula_against_oracle(R):
    assert pg.params_from(R).K_formula == oracles.params(R)["K_formula"]


def test_oracle_frozen_parameters_are_current():
    assert oracles.params(oracles.PAPER_R)["K_formula"] == PAPER_K
    assert float(oracles.params(100)["q"]) == TOY_Q
    mid, final = oracles.theorem_bounds(oracles.PAPER_R)
    assert float(mid) == BOUND_MID and float(final) == BOUND_FINAL
    assert float(final - mid) == pytest.approx(BOUND_GAP, rel=1e-10)


def test_parameter_errors():
    with pytest.raises(DomainError):
        pg.params_from(5.0)
    with pytest.raises(RegimeViolation):
        pg.params_from(1e6, regime="paper")
    with pytest.raises(InvalidOverride):
        pg.params_from(pg.PAPER_R, regime="paper", k_override=5)
    with pytest.raises(InvalidOverride):
        pg.params_from(100.0, k_override=41)
    with pytest.raises(DomainError):
        pg.params_from(100.0, Omega=0.0)


def test_unit_roots_exact_at_quarter_turns():
    K = 5
    n = 1 << (K + 1)
    assert pg.unit_root(n, K) == (1.0, 0.0)
    assert pg.unit_root(n // 2, K) == (-1.0, 0.0)
    assert pg.unit_root(n // 4, K) == (0.0, 1.0)
    assert pg.unit_root(3 * n // 4, K) == (0.0, -1.0)
    c, s = pg.unit_root(3, K)
    assert math.hypot(c, s) == pytest.approx(1.0, abs=1e-16)


# -- evaluators -------------------------------------------------------------

@pytest.mark.parametrize("s,R,K,want", ORACLE_LOG_MOD)
def test_closed_form_against_oracle(s, R, K, want):
    p = pg.toy_params(R, K)
    assert lm(pg.nabla_closed(s, p)) == pytest.approx(want, rel=1e-12)
    assert lm(pg.nabla_closed(s, p, EXTENDED)) == pytest.approx(want, rel=1e-12)


@pytest.mark.parametrize("s,R,K,want", ORACLE_LOG_MOD)
def test_direct_product_against_oracle(s, R, K, want):
    # the direct form sums N factor logs against a prefactor of size q*d/w2,
    # so its error is absolute, on the scale of q times a few ulps
    p = pg.toy_params(R, K)
    assert lm(pg.nabla_direct(s, p)) == pytest.approx(want, abs=1e-15 * max(1.0, p.q), rel=1e-13)


@pytest.mark.parametrize("s", [19.0 + 0.3j, 0.5 + 18.9j, -17.0 - 4.0j])
def test_direct_and_closed_agree_where_nabla_is_of_order_one(s):
    K = 3
    p = pg.toy_params(6.0, K)
    a, b = pg.nabla_direct(s, p), pg.nabla_closed(s, p)
    assert lm(a) == pytest.approx(lm(b), rel=1e-12)
    # the phases come from principal logs of different expressions; they
    # agree modulo 2 pi q / N
    step = 2 * math.pi * p.q / p.N
    turns = (a.arg - b.arg) / step
    wraps = [(a.arg - b.arg + 2 * math.pi * j) / step for j in (-1, 0, 1)]
    assert min(abs(w - round(w)) for w in wraps + [turns]) < 1e-9


def test_symmetry_center_is_exactly_one():
    for p in (pg.toy_params(100.0, 8), pg.paper_params()):
        for ev in ("direct", "closed"):
            v = pg.nabla(0.5, p, EXTENDED if p.regime == "paper" else STANDARD, ev)
            assert lm(v) == 0.0 and v.arg == 0.0


def test_paper_scale_values_are_one_below_double_resolution():
    p = pg.paper_params()
    det = pg.nabla_closed_detail(1.0, p, EXTENDED)[1]
    assert det.below_significance
    # ln(log|nabla(1)|) = ln(q/N) + N ln(1/(2 w2)) + ..., about -4.4e49
    assert det.log_value.log_mod == pytest.approx(-4.4e49, rel=0.05)


def test_direct_product_refuses_paper_scale():
    with pytest.raises(ProductTooLarge):
        pg.nabla_direct(1.0, pg.paper_params())


def test_poles_and_zeros_are_reported():
    p = pg.toy_params(6.0, 2)
    with pytest.raises(FactorPole):
        pg.nabla_direct(0.5 + p.w2, p)


def test_evaluator_selection():
    p = pg.toy_params(100.0, 8)
    assert lm(pg.nabla(1.2, p, evaluator="auto")) == pytest.approx(lm(pg.nabla_direct(1.2, p)), abs=1e-13)
    with pytest.raises(ValueError):
        pg.nabla(1.2, p, evaluator="magic")


# -- factor bounds and the theorem chain -------------------------------------

def test_factor_ratio_against_oracle():
    p = pg.toy_params(100.0, 8)
    for u, k in ((2.0, 512), (0.6, 1), (1.0, 300), (2.0, 256)):
        want = float(oracles.factor_ratio(u, k, 100, 8))
        assert abs(pg.ratio_factor(u, k, p)) == pytest.approx(want, rel=1e-14)
        assert abs(pg.ratio_factor_raw(u, k, p)) == pytest.approx(want, rel=1e-13)


def test_factor_bound_equality_case_holds_exactly():
    p = pg.toy_params(100.0, 8)
    r = pg.factor_bound_check(2.0, p.N, p)  # theta = 0, u = 2: the bound is attained
    assert r.holds and r.stages[0].margin == 0.0


def test_factor_bound_second_link_needs_larger_r():
    # 6R^(5/4) - 3(3R + R^(1/4)) is negative for R below about 6.85
    assert not pg.factor_bound_check(2.0, 1, pg.toy_params(6.0, 2)).holds
    assert pg.factor_bound_check(2.0, 1, pg.toy_params(7.0, 2)).holds


def test_nonvanishing_close_to_the_left_end():
    p = pg.toy_params(100.0, 8)
    for k in (1, 100, p.N):
        assert pg.nonvanishing_check(0.5 + 1e-9, k, p).holds


def test_u_and_k_domains():
    p = pg.toy_params(100.0, 8)
    with pytest.raises(DomainError):
        pg.factor_bound_check(0.5, 1, p)
    with pytest.raises(DomainError):
        pg.factor_bound_check(1.0, p.N + 1, p)


def test_ratio_identity():
    p = pg.toy_params(100.0, 8)
    for u in (0.6, 1.3, 2.0):
        assert pg.log_ratio_product(u, p).real == pytest.approx(lm(pg.nabla_direct(u, p)), abs=1e-13)


def test_chain_bounds_against_oracle():
    mid, final = pg.chain_bounds_dd(pg.paper_params())
    assert float(mid) == BOUND_MID and float(final) == BOUND_FINAL
    assert float(final - mid) == pytest.approx(BOUND_GAP, rel=1e-8)
    assert pg.constant_identity_holds()


def test_theorem1_report():
    r = pg.theorem1_check(pg.paper_params())
    assert r.holds and r.asserted
    assert r.margin == pytest.approx(BOUND_GAP, rel=1e-8)
    assert len(r.samples) == 64 and all(s["u"] > 0.5 for s in r.samples)


def test_theorem1_needs_the_stated_hypotheses():
    with pytest.raises(HypothesisViolation):
        pg.theorem1_check(pg.toy_params(100.0, 8, Omega=2.0))


def test_prop2_is_report_only_and_records_the_comparison():
    r = pg.prop2_circle_report(pg.toy_params(100.0, 8), n_angles=16)
    assert not r.asserted
    assert any("1.62 log R" in st.label for st in r.stages)
    assert any(n.startswith("bound comparison recorded") for n in r.notes)
    assert len(r.samples) == 16


def test_grid_for_theorem_interval_excludes_the_left_end():
    us = GridSpec.theorem_interval().real_points()
    assert len(us) == 64 and us[0] > 0.5 and us[-1] == 2.0


def test_dd_parameters_are_consistent():
    p = pg.paper_params()
    assert float(p.q_dd) == p.q
    assert float(p.r4_dd) == p.d
    assert isinstance(p.q_dd, DD)
