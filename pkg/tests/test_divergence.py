"""Tests for closed-form divergences, density ratios, and their cross-checks.

The closed forms (KL, Hellinger affinity, Kakutani summand) are validated
against adaptive quadrature of the defining integrals and against frozen
high-precision reference values.
"""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cauchyprod import (
    DivergencePair,
    SMALL_CHI,
    UHPoint,
    affinity_from_chi,
    canonical_lambda,
    cauchy_pdf,
    chi,
    hellinger_affinity,
    integrate_real_line,
    kakutani_from_chi,
    kakutani_term,
    kl_divergence,
    log_density_ratio,
    log_ratio_bound,
)

# High-precision reference affinities, indexed by chi.  Each float literal
# rounds the 30-digit value to the nearest double.
AFFINITY_REFS = {
    0.5: 0.970773111746017553,
    1.0: 0.945006330929758054,
    2.25: 0.891651589987122996,
    1e4: 0.06745480031212073,
    1e-8: 0.999999999375,
}

locations = st.floats(min_value=-20.0, max_value=20.0)
scales = st.floats(min_value=-1.5, max_value=1.5).map(lambda e: 10.0**e)
points = st.builds(UHPoint, locations, scales)


def random_pairs(seed: int, count: int) -> list[tuple[UHPoint, UHPoint]]:
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        locs = rng.uniform(-5.0, 5.0, size=2)
        scls = 10.0 ** rng.uniform(-0.7, 0.7, size=2)
        out.append((UHPoint(locs[0], scls[0]), UHPoint(locs[1], scls[1])))
    return out


class TestCauchyPdf:
    def test_peak_value_at_location(self):
        assert cauchy_pdf(UHPoint(0.0, 1.0), 0.0) == 1.0 / math.pi
        assert cauchy_pdf(UHPoint(3.0, 0.5), 3.0) == pytest.approx(
            2.0 / math.pi, rel=1e-15
        )

    def test_symmetric_about_location(self):
        z = UHPoint(1.5, 0.7)
        x = np.array([-4.0, -1.0, 0.0, 2.0, 9.0])
        left = cauchy_pdf(z, z.location - x)
        right = cauchy_pdf(z, z.location + x)
        np.testing.assert_array_equal(left, right)

    def test_integrates_to_one(self):
        z = UHPoint(-2.3, 0.4)
        result = integrate_real_line(lambda x: cauchy_pdf(z, x))
        assert result.value == pytest.approx(1.0, abs=1e-10)

    def test_scalar_in_scalar_out(self):
        out = cauchy_pdf(UHPoint(0.0, 1.0), 1.0)
        assert isinstance(out, float)
        assert out == 1.0 / (2.0 * math.pi)

    def test_array_in_array_out(self):
        out = cauchy_pdf(UHPoint(0.0, 1.0), np.zeros(4))
        assert out.shape == (4,)
        np.testing.assert_array_equal(out, np.full(4, 1.0 / math.pi))


class TestKlDivergence:
    def test_frozen_value_for_doubled_scale(self):
        # chi((0,2),(0,1)) = 1/2, so the divergence is log(9/8).
        value = kl_divergence(UHPoint(0.0, 2.0), UHPoint(0.0, 1.0))
        assert value == math.log1p(0.125)
        assert value == pytest.approx(math.log(9.0 / 8.0), rel=1e-15)

    def test_zero_at_coincidence(self):
        assert kl_divergence(UHPoint(1.0, 2.0), UHPoint(1.0, 2.0)) == 0.0

    @given(points, points)
    @settings(max_examples=300, deadline=None)
    def test_symmetric_to_the_bit(self, z, w):
        assert kl_divergence(z, w) == kl_divergence(w, z)

    @given(points, points)
    @settings(max_examples=300, deadline=None)
    def test_nonnegative(self, z, w):
        assert kl_divergence(z, w) >= 0.0


class TestLogDensityRatio:
    def test_exactly_zero_for_identical_parameters(self):
        z = UHPoint(0.7, 0.3)
        w = UHPoint(0.7, 0.3)
        x = np.array([-1e300, -17.0, 0.0, 0.7, 42.0, 1e300])
        out = log_density_ratio(z, w, x)
        np.testing.assert_array_equal(out, np.zeros(6))

    def test_far_field_limit_is_the_scale_ratio(self):
        z = UHPoint(0.7, 0.5)
        w = UHPoint(-3.2, 2.5)
        limit = math.log(w.scale) - math.log(z.scale)
        for x in (1e308, -1e308, 1e300, -1e300):
            assert log_density_ratio(z, w, x) == limit

    def test_matches_direct_log_density_difference(self):
        rng = np.random.default_rng(20260807)
        for _ in range(200):
            z = UHPoint(rng.uniform(-20, 20), 10.0 ** rng.uniform(-1.5, 1.5))
            w = UHPoint(rng.uniform(-20, 20), 10.0 ** rng.uniform(-1.5, 1.5))
            x = rng.uniform(-100.0, 100.0)
            direct = math.log(cauchy_pdf(w, x)) - math.log(cauchy_pdf(z, x))
            assert log_density_ratio(z, w, x) == pytest.approx(direct, abs=4e-15)

    def test_scalar_in_scalar_out(self):
        out = log_density_ratio(UHPoint(0.0, 1.0), UHPoint(1.0, 1.0), 0.5)
        assert isinstance(out, float)
        assert out == 0.0

    def test_antisymmetric_under_swap(self):
        z = UHPoint(0.0, 1.0)
        w = UHPoint(2.0, 0.5)
        x = np.linspace(-10.0, 10.0, 101)
        forward = log_density_ratio(z, w, x)
        backward = log_density_ratio(w, z, x)
        np.testing.assert_allclose(forward, -backward, atol=1e-14)


class TestLogRatioBound:
    def test_frozen_values(self):
        assert log_ratio_bound(0.0) == 2.0
        assert log_ratio_bound(1.0) == 4.0 + math.sqrt(5.0)

    def test_monotone_increasing(self):
        grid = np.concatenate([[0.0], np.logspace(-8, 6, 30)])
        values = np.array([log_ratio_bound(c) for c in grid])
        assert np.all(np.diff(values) > 0.0)

    def test_rejects_bad_arguments(self):
        for bad in (-1e-9, -1.0, math.nan, math.inf):
            with pytest.raises(ValueError):
                log_ratio_bound(bad)

    @given(points, points, st.floats(min_value=-1e6, max_value=1e6))
    @settings(max_examples=400, deadline=None)
    def test_dominates_every_pointwise_ratio(self, z, w, x):
        cap = math.log(log_ratio_bound(chi(z, w)))
        assert abs(log_density_ratio(z, w, x)) <= cap + 1e-12

    def test_pointwise_supremum_is_the_canonical_eigenvalue(self):
        # The true sup over x of p_w/p_z equals canonical_lambda(chi); the
        # published bound is merely uniform over all pairs at that chi.  A
        # dense grid must approach the sup from below and never cross it.
        for z, w in random_pairs(20260808, 25):
            lam = canonical_lambda(chi(z, w))
            grids = []
            for p in (z, w):
                grids.append(
                    np.linspace(p.location - 20.0 * p.scale, p.location + 20.0 * p.scale, 30001)
                )
            x = np.concatenate(grids)
            grid_max = float(np.exp(log_density_ratio(z, w, x)).max())
            assert grid_max <= lam * (1.0 + 1e-12)
            assert grid_max >= lam * (1.0 - 1e-4)


class TestAffinity:
    def test_one_exactly_at_zero_chi(self):
        assert affinity_from_chi(0.0) == 1.0
        z = UHPoint(2.0, 3.0)
        assert hellinger_affinity(z, UHPoint(2.0, 3.0)) == 1.0

    @pytest.mark.parametrize("t,expected", sorted(AFFINITY_REFS.items()))
    def test_frozen_reference_values(self, t, expected):
        assert affinity_from_chi(t) == pytest.approx(expected, rel=1e-13)

    def test_strictly_decreasing(self):
        grid = np.concatenate([[0.0], np.logspace(-10, 7, 60)])
        values = affinity_from_chi(grid)
        assert np.all(np.diff(values) < 0.0)

    def test_small_beyond_a_million(self):
        assert affinity_from_chi(1e6) < 0.05

    def test_array_matches_scalar_calls(self):
        grid = np.array([0.0, 0.5, 1.0, 2.25, 1e4])
        values = affinity_from_chi(grid)
        assert values.shape == (5,)
        for t, v in zip(grid, values):
            assert v == affinity_from_chi(float(t))

    def test_bounded_by_one(self):
        grid = np.logspace(-15, 8, 50)
        assert np.all(affinity_from_chi(grid) <= 1.0)
        assert np.all(affinity_from_chi(grid) > 0.0)


class TestKakutani:
    def test_surrogate_branch_is_exactly_chi_over_eight(self):
        for t in (1e-13, 1e-15, 2.5e-14, 0.0):
            assert kakutani_from_chi(t) == 0.125 * t

    def test_reference_value_at_unit_chi(self):
        expected = -math.log(AFFINITY_REFS[1.0])
        assert kakutani_from_chi(1.0) == pytest.approx(expected, rel=1e-10)

    def test_reference_value_at_large_chi(self):
        expected = -math.log(AFFINITY_REFS[1e4])
        assert kakutani_from_chi(1e4) == pytest.approx(expected, rel=1e-12)

    def test_reference_value_at_tiny_chi(self):
        # Above the surrogate cutoff the log form must still track the true
        # value (~ chi/16) despite heavy cancellation.
        expected = -math.log(AFFINITY_REFS[1e-8])
        assert kakutani_from_chi(1e-8) == pytest.approx(expected, rel=1e-6)

    def test_array_mixes_both_branches(self):
        grid = np.array([0.0, 1e-13, 1e-8, 1.0])
        values = kakutani_from_chi(grid)
        assert values[0] == 0.0
        assert values[1] == 0.125e-13
        assert values[2] == kakutani_from_chi(1e-8)
        assert values[3] == kakutani_from_chi(1.0)

    def test_zero_exactly_at_coincidence(self):
        assert kakutani_term(UHPoint(1.0, 2.0), UHPoint(1.0, 2.0)) == 0.0

    @given(points, points)
    @settings(max_examples=300, deadline=None)
    def test_chain_of_upper_bounds(self, z, w):
        t = chi(z, w)
        kak = kakutani_term(z, w)
        half_kl = 0.5 * kl_divergence(z, w)
        assert 0.0 <= kak <= half_kl + 1e-12
        assert half_kl <= 0.125 * t + 1e-12


class TestClosedFormsAgainstQuadrature:
    QUAD_PAIRS = [
        (UHPoint(0.0, 1.0), UHPoint(0.0, 2.0)),
        (UHPoint(0.0, 1.0), UHPoint(1.0, 1.0)),
        (UHPoint(0.5, 0.7), UHPoint(-1.2, 2.0)),
        (UHPoint(0.0, 1.0), UHPoint(100.0, 1.0)),
    ]

    @pytest.mark.parametrize("z,w", QUAD_PAIRS)
    def test_affinity_matches_its_defining_integral(self, z, w):
        result = integrate_real_line(
            lambda x: np.sqrt(cauchy_pdf(z, x) * cauchy_pdf(w, x)), tol=1e-11
        )
        assert hellinger_affinity(z, w) == pytest.approx(result.value, rel=1e-10)

    @pytest.mark.parametrize("z,w", QUAD_PAIRS[:3])
    def test_kl_matches_its_defining_integral(self, z, w):
        result = integrate_real_line(
            lambda x: cauchy_pdf(z, x) * (-log_density_ratio(z, w, x)), tol=1e-11
        )
        assert kl_divergence(z, w) == pytest.approx(result.value, rel=1e-9, abs=1e-12)


class TestDivergencePair:
    def test_of_constructor_and_properties(self):
        z = UHPoint(0.0, 2.0)
        w = UHPoint(0.0, 1.0)
        pair = DivergencePair.of(z, w)
        assert pair.chi_value == chi(z, w)
        assert pair.kl == kl_divergence(z, w)
        assert pair.affinity == hellinger_affinity(z, w)
        assert pair.kakutani == kakutani_term(z, w)

    def test_coincident_pair_has_all_zero_divergences(self):
        pair = DivergencePair.of(UHPoint(3.0, 0.5), UHPoint(3.0, 0.5))
        assert pair.chi_value == 0.0
        assert pair.kl == 0.0
        assert pair.affinity == 1.0
        assert pair.kakutani == 0.0

    def test_rejects_stale_chi(self):
        z = UHPoint(0.0, 2.0)
        w = UHPoint(0.0, 1.0)
        with pytest.raises(ValueError):
            DivergencePair(z, w, 2.0 * chi(z, w))

    def test_accepts_chi_within_tolerance(self):
        z = UHPoint(0.0, 2.0)
        w = UHPoint(0.0, 1.0)
        value = chi(z, w)
        pair = DivergencePair(z, w, value * (1.0 + 1e-13))
        assert pair.chi_value != value
        assert pair.kl == pytest.approx(kl_divergence(z, w), rel=1e-12)

    def test_frozen(self):
        pair = DivergencePair.of(UHPoint(0.0, 1.0), UHPoint(1.0, 1.0))
        with pytest.raises(AttributeError):
            pair.chi_value = 0.0
