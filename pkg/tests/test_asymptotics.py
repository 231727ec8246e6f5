"""Asymptotic expansions against exact values: saddle-point inversions,
Bell and tree-total estimates, stat ladders, and mode predictions."""

import math

import pytest

from phylocount.asymptotics import (
    ORDER_HEURISTIC,
    ORDER_INV_N,
    RHO,
    bell_moser_wyman,
    h1z_numeric_check,
    lambert_r,
    lambert_w_principal,
    log_big,
    mode_Sstar_asymp,
    mode_T_asymp,
    moser_wyman_log_ratio,
    schroeder_log_ratio,
    schroeder_t_asymp,
    stats_convergence,
    stats_S_asymp,
    stats_S_salvy,
    stats_Sstar_asymp,
    stats_Sstar_salvy,
    stats_T_asymp,
)
from phylocount.distribution import limit_report, stats_S_closed, stats_Sstar_closed
from phylocount.triangles import bell, schroeder_t, triangle_row

OMEGA = 0.5671432904097838  # root of w e^w = 1


def test_lambert_r_residuals():
    for y in (1.0, math.e, 10.0, 1e3, 1e6, 1e9):
        r = lambert_r(y)
        assert abs(r * math.exp(r) - y) / y <= 1e-13
    assert lambert_r(1) == pytest.approx(OMEGA, abs=1e-15)
    assert lambert_r(math.e) == pytest.approx(1.0, abs=1e-13)


def test_lambert_r_monotone_and_domain():
    prev = 0.0
    for y in (0.5, 1, 2, 10, 100, 10**6):
        r = lambert_r(y)
        assert r > prev
        prev = r
    with pytest.raises(ValueError):
        lambert_r(0)
    with pytest.raises(ValueError):
        lambert_r(-2)


def test_lambert_principal_branch():
    assert lambert_w_principal(-0.5 * math.exp(-0.5)) == pytest.approx(-0.5, abs=1e-12)
    for y in (-0.35, -0.2, -0.05, -1e-4):
        w = lambert_w_principal(y)
        assert -1.0 < w < 0.0
        assert abs(w * math.exp(w) - y) <= 1e-15
    with pytest.raises(ValueError):
        lambert_w_principal(0.0)
    with pytest.raises(ValueError):
        lambert_w_principal(-1.0)


def test_log_big_accuracy():
    assert log_big(2**100) == pytest.approx(100 * math.log(2), rel=1e-14)
    assert log_big(12345) == pytest.approx(math.log(12345), rel=1e-15)
    assert log_big(10**5000) == pytest.approx(5000 * math.log(10), rel=1e-14)
    assert log_big(bell(30)) == pytest.approx(math.log(float(bell(30))), rel=1e-12)
    with pytest.raises(ValueError):
        log_big(0)


def test_moser_wyman_accuracy():
    at_100 = moser_wyman_log_ratio(100)
    at_1000 = moser_wyman_log_ratio(1000)
    assert abs(math.expm1(at_100)) < 0.01
    assert abs(at_1000) < abs(at_100)
    # direct float comparison is possible while B_n fits a float
    est = bell_moser_wyman(30)
    assert est.log_scale and est.error_order == ORDER_INV_N
    assert math.exp(est.value) == pytest.approx(float(bell(30)), rel=1e-3)
    with pytest.raises(ValueError):
        bell_moser_wyman(9)


def test_saddle_stats_against_exact():
    for n in (100, 400):
        ex = stats_S_closed(n)
        em, ev = stats_S_asymp(n)
        assert em.value == pytest.approx(float(ex.mean), rel=1e-2)
        assert ev.value == pytest.approx(float(ex.variance), rel=1e-2)
        ex = stats_Sstar_closed(n)
        em, ev = stats_Sstar_asymp(n)
        assert em.value == pytest.approx(float(ex.mean), rel=0.1)
        assert ev.value == pytest.approx(float(ex.variance), rel=0.1)


def test_stat_difference_scales_with_r():
    # the two partition families differ by O(r) in mean and variance
    for n in (100, 200, 400, 800):
        r = lambert_r(n)
        am, av = stats_S_asymp(n)
        bm, bv = stats_Sstar_asymp(n)
        assert 0.3 < abs(bm.value - am.value) / r < 1.5
        assert 0.3 < abs(bv.value - av.value) / r < 1.2


def test_tree_stats_coefficients():
    n = 10**6
    em, ev = stats_T_asymp(n)
    assert em.value / n == pytest.approx((1 - RHO) / (2 * RHO), rel=1e-5)
    assert ev.value / n == pytest.approx(
        (1 / RHO**2 - 2 / RHO - 1) / 4, rel=1e-5
    )
    with pytest.raises(ValueError):
        stats_T_asymp(3)


def test_salvy_bands():
    ex = stats_S_closed(1000)
    sm, sv = stats_S_salvy(1000)
    assert sm.error_order == ORDER_HEURISTIC
    assert abs(sm.value - float(ex.mean)) / float(ex.mean) < 0.15
    assert abs(sv.value - float(ex.variance)) / float(ex.variance) < 0.15
    ex2 = stats_Sstar_closed(1000)
    assert abs(sm.value - float(ex2.mean)) / float(ex2.mean) < 0.15
    assert abs(sv.value - float(ex2.variance)) / float(ex2.variance) < 0.15
    assert stats_Sstar_salvy is stats_S_salvy
    # beyond exact reach, stay within a band of the saddle-point route
    am, av = stats_S_asymp(10**4)
    sm, sv = stats_S_salvy(10**4)
    assert abs(sm.value - am.value) / am.value < 0.15
    assert abs(sv.value - av.value) / av.value < 0.15
    with pytest.raises(ValueError):
        stats_S_salvy(15)


def test_schroeder_total_ratio():
    at_50 = schroeder_log_ratio(50)
    assert abs(math.expm1(at_50)) < 1e-3
    assert abs(schroeder_log_ratio(200)) < abs(at_50)
    # each added bracket term helps at moderate n
    assert abs(schroeder_log_ratio(50, terms=2)) < abs(schroeder_log_ratio(50, terms=1))
    est = schroeder_t_asymp(40)
    assert est.log_scale and est.rho == RHO
    assert math.exp(est.value) == pytest.approx(float(schroeder_t(40)), rel=1e-2)
    with pytest.raises(ValueError):
        schroeder_t_asymp(50, terms=0)
    with pytest.raises(ValueError):
        schroeder_t_asymp(50, terms=4)
    with pytest.raises(ValueError):
        schroeder_t_asymp(3)


def test_mode_predictions_sstar():
    reports = {n: limit_report("sstar", n) for n in (100, 400)}
    ratios = {}
    for n, rep in reports.items():
        est = mode_Sstar_asymp(n)
        r = lambert_r(n)
        # location error stays on the o(sqrt(n)/r) scale
        assert abs(est.j_estimate - rep.mode_index) < 1.5 * math.sqrt(n) / r
        k_min, row = triangle_row("sstar", n)
        ratios[n] = est.log_value - log_big(row[rep.mode_index - k_min])
    assert abs(ratios[400]) < abs(ratios[100])


def test_mode_predictions_t():
    ratios = {}
    for n in (100, 400):
        est = mode_T_asymp(n)
        rep = limit_report("t", n)
        assert abs(est.j_estimate - rep.mode_index) < 0.1 * math.sqrt(n)
        k_min, row = triangle_row("t", n + 1)
        ratios[n] = est.log_value - log_big(row[rep.mode_index - k_min])
        assert abs(ratios[n]) < 0.01
    assert abs(ratios[400]) < abs(ratios[100])


def test_h1z_functional_identity():
    assert abs(h1z_numeric_check(0.1)) < 1e-12
    assert abs(h1z_numeric_check(0.2, order=40)) < 1e-12
    # close to the singularity the series tail dominates but stays small
    assert abs(h1z_numeric_check(0.35)) < 1e-2
    with pytest.raises(ValueError):
        h1z_numeric_check(0.0)
    with pytest.raises(ValueError):
        h1z_numeric_check(RHO)


def test_convergence_records():
    for family in ("s", "sstar", "t"):
        mean_rec, var_rec = stats_convergence(family)
        for rec in (mean_rec, var_rec):
            assert rec.family == family
            assert rec.bounded_by(3.0)
            assert rec.points[0].n == 100
            for pt in rec.points:
                assert pt.scaled_residual == pytest.approx(
                    abs(pt.exact - pt.estimate) * pt.n
                )
    with pytest.raises(ValueError):
        stats_convergence("f")
    with pytest.raises(ValueError):
        stats_convergence("s", ns=())


def test_convergence_custom_ladder():
    mean_rec, _ = stats_convergence("t", ns=(50, 100))
    assert tuple(pt.n for pt in mean_rec.points) == (50, 100)
