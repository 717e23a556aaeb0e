"""Bessel series, multiplier polynomial P_{n,t}, and the G_{n,t} bundle."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.special import jv

from al_ist.errors import ValidationError
from al_ist.laurent import CircleGrid, LaurentPoly, lp_eval_grid, monomial
from al_ist.multiplier import (
    MultiplierBundle,
    bessel_j,
    delta_nt,
    g_bundle,
    p_poly,
    s_bound,
    smallest_admissible_order,
    tail_bound,
)

# J_0(1) to 50 decimal digits, frozen from an arbitrary-precision series sum.
J0_AT_1 = 0.76519768655796655145

EXP_GRID = CircleGrid(256)


def exp_multiplier(t: float, g: CircleGrid) -> np.ndarray:
    return np.exp(1j * t * (g.nodes + 1.0 / g.nodes))


class TestBesselJ:
    def test_at_zero(self):
        assert bessel_j(0, 0.0) == 1.0
        for k in (1, 2, 5, -3):
            assert bessel_j(k, 0.0) == 0.0

    def test_j0_at_one(self):
        assert abs(bessel_j(0, 1.0) - J0_AT_1) <= 1e-15

    def test_negative_order_parity(self):
        x = 1.4  # 2t for t = 0.7
        assert abs(bessel_j(-3, x) + bessel_j(3, x)) <= 1e-16

    def test_against_scipy(self):
        for k in range(-12, 13):
            for x in (0.25, 1.0, 2.0, 4.0, 8.0):
                assert abs(bessel_j(k, x) - jv(k, x)) <= 1e-13

    def test_underflow_is_clean_zero(self):
        assert bessel_j(400, 1.0) == 0.0


class TestDelta:
    def test_formula_moderate_orders(self):
        for n, t in ((10, 1.0), (20, 2.0), (5, 0.5)):
            direct = t**n * math.exp(t) / math.factorial(n)
            assert abs(delta_nt(n, t) - direct) <= 1e-12 * direct

    def test_t_zero(self):
        assert delta_nt(0, 0.0) == 1.0
        assert delta_nt(3, 0.0) == 0.0

    def test_extreme_order_underflow_free(self):
        assert 0.0 < delta_nt(40, 4.0) < 1e-22

    @settings(max_examples=50)
    @given(st.integers(1, 60), st.floats(0.01, 8.0))
    def test_monotone_in_n_beyond_t(self, n, t):
        if n > t:
            assert delta_nt(n + 1, t) <= delta_nt(n, t) * (1 + 1e-12)


class TestPPoly:
    def test_zero_time_is_one(self):
        assert p_poly(8, 0.0) == LaurentPoly(0, [1.0])

    def test_coefficient_symmetry(self):
        p = p_poly(9, 0.8)
        for k in range(10):
            assert abs(p.coefficient(k) - p.coefficient(-k)) <= 1e-16

    def test_order_eight_half_time_within_delta(self):
        p = p_poly(8, 0.5)
        err = np.max(np.abs(lp_eval_grid(p, EXP_GRID) - exp_multiplier(0.5, EXP_GRID)))
        assert err <= delta_nt(8, 0.5)

    def test_coefficients_match_fft_of_exponential(self):
        # Fourier coefficients of e^{it(z + 1/z)} on a wide grid are
        # i^k J_k(2t); the truncation P keeps |k| <= n of them.
        t = 0.9
        m = 512
        g = CircleGrid(m)
        samples = exp_multiplier(t, g)
        fourier = np.fft.fft(samples) / m
        p = p_poly(12, t)
        for k in range(-12, 13):
            assert abs(p.coefficient(k) - fourier[k % m]) <= 1e-14


class TestGBundle:
    def test_rejects_order_one_at_time_one(self):
        with pytest.raises(ValidationError) as err:
            g_bundle(1, 1.0)
        assert "smallest admissible n is 3" in str(err.value)

    def test_smallest_admissible_order(self):
        assert smallest_admissible_order(1.0) == 3
        assert delta_nt(3, 1.0) < 1.0 <= delta_nt(2, 1.0)

    def test_order_ten_time_one(self):
        b = g_bundle(10, 1.0)
        assert abs(b.delta - math.e / math.factorial(10)) <= 1e-12 * b.delta
        peak = np.max(np.abs(lp_eval_grid(b.g, CircleGrid(64))))
        assert peak < 1.0

    def test_degree_is_twice_order(self):
        for n, t in ((5, 1.0), (12, 2.5)):
            b = g_bundle(n, t)
            assert b.g.min_deg == 0 and b.g.max_deg == 2 * n

    def test_bundle_invariant_rejects_large_peak(self):
        with pytest.raises(ValidationError):
            MultiplierBundle(1, 1.0, monomial(2.0, 1), 0.5)

    def test_schur_class_margin(self):
        for n, t in ((10, 1.0), (16, 2.0)):
            b = g_bundle(n, t)
            grid = CircleGrid(max(64, 8 * n))
            peak = np.max(np.abs(lp_eval_grid(b.g, grid)))
            assert peak <= 1.0 - b.delta**2 + 1e-12


class TestSBound:
    def test_formula(self):
        for n, t, r in ((10, 1.0, 0.5), (6, 0.7, 0.3)):
            want = 6.0 * delta_nt(n, t) * math.exp(t / r)
            assert abs(s_bound(n, t, r) - want) <= 1e-15 * want

    def test_pinned_value(self):
        assert abs(s_bound(10, 1.0, 0.5) - 3.3210213166646324e-05) <= 1e-12 * 3.3e-5

    def test_increment_bound_empirical(self):
        # max over the r-circle of |G_{n+1,t} - z G_{n,t}| <= S_n(t,r)
        n, t, r = 12, 1.0, 0.5
        g_n = g_bundle(n, t).g
        g_n1 = g_bundle(n + 1, t).g
        grid = CircleGrid(512, r)
        diff = lp_eval_grid(g_n1, grid) - grid.nodes * lp_eval_grid(g_n, grid)
        assert np.max(np.abs(diff)) <= s_bound(n, t, r)


class TestTailBound:
    def test_dominates_partial_sums(self):
        n, t, r = 10, 1.0, 0.5
        partial = sum(s_bound(k, t, r) * r ** (-k) for k in range(n, n + 31))
        assert partial <= tail_bound(n, t, r)

    def test_near_unit_radius_limit(self):
        n, t = 10, 1.0
        r = 1.0 - 1e-9
        want = 6.0 * delta_nt(n, t) * math.exp(2.0 * t)
        assert abs(tail_bound(n, t, r) - want) <= 1e-6 * want

    def test_rejects_bad_params(self):
        with pytest.raises(ValidationError):
            tail_bound(10, 1.0, 1.0)
        with pytest.raises(ValidationError):
            tail_bound(1, 2.0, 0.5)


@settings(max_examples=25, deadline=None)
@given(st.integers(4, 24), st.floats(0.05, 3.0))
def test_generating_function_fidelity(n, t):
    if delta_nt(n, t) >= 1.0 or n <= t:
        return
    g = CircleGrid(4 * n)
    err = np.max(np.abs(lp_eval_grid(p_poly(n, t), g) - exp_multiplier(t, g)))
    # double-precision evaluation noise floor sits near 1e-15 e^t
    assert err <= delta_nt(n, t) + 1e-13
