"""Tests for the half-plane parameter types, the group action, and reduction."""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cauchyprod import (
    CanonicalForm,
    DEGENERATE_CHI,
    MoebiusMap,
    UHPoint,
    act,
    act_pair,
    canonical_lambda,
    chi,
    reduce_to_canonical,
)

# Draw ranges keep the invariance identities well conditioned: with locations
# in +-20 and scales in 10**+-1.5 the floating-point deviation of chi under a
# mapped pair stays below ~1e-10, two decades under the asserted tolerance.
locations = st.floats(min_value=-20.0, max_value=20.0, allow_nan=False)
scale_exponents = st.floats(min_value=-1.5, max_value=1.5, allow_nan=False)
angles = st.floats(min_value=0.0, max_value=math.pi, allow_nan=False)


@st.composite
def points(draw):
    return UHPoint(draw(locations), 10.0 ** draw(scale_exponents))


@st.composite
def moebius_maps(draw):
    # Triangular @ rotation reaches every determinant-one map (Iwasawa-style
    # factorization), including maps with c != 0.
    anchor = draw(points())
    return MoebiusMap.translation_scaling(anchor) @ MoebiusMap.rotation(draw(angles))


class TestUHPoint:
    def test_rejects_nonpositive_scale(self):
        for bad in (0.0, -1.0, -1e-300):
            with pytest.raises(ValueError):
                UHPoint(0.0, bad)

    def test_rejects_nonfinite_fields(self):
        with pytest.raises(ValueError):
            UHPoint(math.nan, 1.0)
        with pytest.raises(ValueError):
            UHPoint(math.inf, 1.0)
        with pytest.raises(ValueError):
            UHPoint(0.0, math.nan)
        with pytest.raises(ValueError):
            UHPoint(0.0, math.inf)

    def test_complex_round_trip(self):
        z = UHPoint(-2.5, 0.75)
        assert z.as_complex() == complex(-2.5, 0.75)
        assert UHPoint.from_complex(z.as_complex()) == z

    def test_coerces_int_fields_to_float(self):
        z = UHPoint(3, 2)
        assert isinstance(z.location, float) and isinstance(z.scale, float)


class TestMoebiusMap:
    def test_rejects_determinant_away_from_one(self):
        with pytest.raises(ValueError):
            MoebiusMap(2.0, 0.0, 0.0, 1.0)
        with pytest.raises(ValueError):
            MoebiusMap(1.0, 0.0, 0.0, 1.0 + 1e-9)

    def test_accepts_determinant_within_tolerance(self):
        MoebiusMap(1.0, 0.0, 0.0, 1.0 + 1e-13)

    def test_normalized_rescales_positive_determinant(self):
        m = MoebiusMap.normalized(2.0, 0.0, 0.0, 2.0)
        assert (m.a, m.b, m.c, m.d) == (1.0, 0.0, 0.0, 1.0)

    def test_normalized_rejects_nonpositive_determinant(self):
        with pytest.raises(ValueError):
            MoebiusMap.normalized(1.0, 0.0, 0.0, -1.0)
        with pytest.raises(ValueError):
            MoebiusMap.normalized(1.0, 2.0, 2.0, 4.0)

    def test_rotation_stabilizes_i(self):
        for theta in (0.0, 0.3, 1.0, math.pi / 2):
            image = act(MoebiusMap.rotation(theta), UHPoint(0.0, 1.0))
            assert abs(image.location) < 1e-15
            assert abs(image.scale - 1.0) < 1e-15

    @given(points())
    @settings(max_examples=200, deadline=None)
    def test_translation_scaling_sends_anchor_to_i(self, w):
        image = act(MoebiusMap.translation_scaling(w), w)
        # The location vanishes exactly by construction of the b entry.
        assert image.location == 0.0
        assert abs(image.scale - 1.0) < 5e-16

    @given(moebius_maps())
    @settings(max_examples=200, deadline=None)
    def test_inverse_composes_to_identity(self, m):
        ident = m @ m.inverse()
        assert abs(ident.a - 1.0) < 1e-12
        assert abs(ident.b) < 1e-12
        assert abs(ident.c) < 1e-12
        assert abs(ident.d - 1.0) < 1e-12

    @given(moebius_maps(), points())
    @settings(max_examples=200, deadline=None)
    def test_action_matches_complex_arithmetic(self, m, z):
        zc = z.as_complex()
        expected = (m.a * zc + m.b) / (m.c * zc + m.d)
        image = act(m, z)
        assert image.location == pytest.approx(expected.real, rel=1e-11, abs=1e-11)
        assert image.scale == pytest.approx(expected.imag, rel=1e-11)

    @given(moebius_maps(), moebius_maps(), points())
    @settings(max_examples=200, deadline=None)
    def test_composition_acts_as_iterated_action(self, m1, m2, z):
        via_product = act(m1 @ m2, z)
        via_steps = act(m1, act(m2, z))
        assert via_product.location == pytest.approx(via_steps.location, rel=1e-9, abs=1e-9)
        assert via_product.scale == pytest.approx(via_steps.scale, rel=1e-9)

    @given(moebius_maps(), points())
    @settings(max_examples=300, deadline=None)
    def test_image_stays_in_half_plane(self, m, z):
        assert act(m, z).scale > 0.0


class TestChi:
    def test_frozen_values(self):
        i = UHPoint(0.0, 1.0)
        assert chi(UHPoint(0.0, 2.0), i) == 0.5
        assert chi(UHPoint(1.0, 1.0), i) == 1.0
        assert chi(i, i) == 0.0

    @given(points(), points())
    @settings(max_examples=300, deadline=None)
    def test_symmetric_to_the_last_bit(self, z, w):
        assert chi(z, w) == chi(w, z)

    @given(points(), points())
    @settings(max_examples=300, deadline=None)
    def test_zero_only_at_numerically_coincident_parameters(self, z, w):
        value = chi(z, w)
        assert value >= 0.0
        if z.location == w.location and z.scale == w.scale:
            assert value == 0.0
        elif value == 0.0:
            # Zero for distinct parameters only when both squared differences
            # underflow, i.e. the parameters agree to ~1e-154.
            assert abs(z.location - w.location) < 1e-150
            assert abs(z.scale - w.scale) < 1e-150

    @given(moebius_maps(), points(), points())
    @settings(max_examples=300, deadline=None)
    def test_invariant_under_the_action(self, m, z, w):
        before = chi(z, w)
        after = chi(*act_pair(m, z, w))
        assert after == pytest.approx(before, rel=1e-9, abs=1e-13)

    def test_scaling_both_parameters_preserves_chi(self):
        z, w = UHPoint(3.0, 4.0), UHPoint(1.0, 2.0)
        scaled = chi(UHPoint(300.0, 400.0), UHPoint(100.0, 200.0))
        assert scaled == pytest.approx(chi(z, w), rel=1e-15)


class TestCanonicalLambda:
    def test_frozen_values(self):
        assert canonical_lambda(0.0) == 1.0
        assert canonical_lambda(0.5) == 2.0
        assert canonical_lambda(2.25) == 4.0

    @given(st.floats(min_value=-6.0, max_value=12.0))
    @settings(max_examples=300, deadline=None)
    def test_inverts_the_defining_identity(self, exponent):
        t = 10.0**exponent
        lam = canonical_lambda(t)
        assert lam >= 1.0
        assert (lam - 1.0) ** 2 / lam == pytest.approx(t, rel=1e-9)

    def test_large_argument_branch(self):
        assert canonical_lambda(2e16) == 2e16 + 2.0
        assert canonical_lambda(1e300) == 1e300 + 2.0
        # Continuity at the branch point, up to the local float spacing of 2.
        assert abs(canonical_lambda(1e16) - (1e16 + 2.0)) <= 2.0

    def test_small_argument_asymptote(self):
        # lam - 1 = sqrt(t) + t/2 + O(t**1.5), computed without cancellation.
        for t in (1e-10, 1e-8, 1e-6):
            lam = canonical_lambda(t)
            assert lam - 1.0 == pytest.approx(math.sqrt(t) + 0.5 * t, rel=1e-6)

    def test_array_input_matches_scalar(self):
        ts = np.array([0.0, 0.5, 2.25, 100.0])
        out = canonical_lambda(ts)
        assert out.shape == ts.shape
        assert [canonical_lambda(float(t)) for t in ts] == list(out)

    def test_rejects_negative_and_nonfinite(self):
        for bad in (-1e-9, math.nan, math.inf):
            with pytest.raises(ValueError):
                canonical_lambda(bad)
        with pytest.raises(ValueError):
            canonical_lambda(np.array([1.0, -2.0]))

    def test_monotone_increasing(self):
        grid = np.logspace(-8, 8, 200)
        lams = canonical_lambda(grid)
        assert np.all(np.diff(lams) > 0.0)


class TestReduceToCanonical:
    @given(points(), points())
    @settings(max_examples=300, deadline=None)
    def test_map_reaches_the_axis_pair(self, z, w):
        t = chi(z, w)
        form = reduce_to_canonical(z, w)
        iz = act(form.map, z)
        iw = act(form.map, w)
        # Below DEGENERATE_CHI the pair is deliberately treated as coincident,
        # so the z image can sit sqrt(chi) away from lam*i; above it the map
        # is exact up to roundoff amplified by lam.
        slack = 1e-13 * (1.0 + form.lam)
        if t < DEGENERATE_CHI:
            slack += 2.0 * math.sqrt(t)
        assert abs(iz.location) < slack
        assert abs(iz.scale - form.lam) < slack
        assert abs(iw.location) < slack
        assert abs(iw.scale - 1.0) < slack

    @given(points(), points())
    @settings(max_examples=300, deadline=None)
    def test_reported_lambda_is_the_canonical_one(self, z, w):
        t = chi(z, w)
        form = reduce_to_canonical(z, w)
        assert form.lam >= 1.0
        if t >= DEGENERATE_CHI:
            assert form.lam == canonical_lambda(t)

    @given(points(), points())
    @settings(max_examples=200, deadline=None)
    def test_chi_preserved_through_the_map(self, z, w):
        form = reduce_to_canonical(z, w)
        before = chi(z, w)
        after = chi(*act_pair(form.map, z, w))
        assert after == pytest.approx(before, rel=1e-9, abs=1e-13)

    def test_frozen_spot_check(self):
        form = reduce_to_canonical(UHPoint(0.0, 2.0), UHPoint(0.0, 1.0))
        assert form.lam == 2.0

    def test_coincident_pair_reduces_to_lambda_one(self):
        z = UHPoint(4.0, 0.25)
        form = reduce_to_canonical(z, z)
        assert form.lam == 1.0
        expected = MoebiusMap.translation_scaling(z)
        assert (form.map.a, form.map.b, form.map.c, form.map.d) == (
            expected.a,
            expected.b,
            expected.c,
            expected.d,
        )

    def test_axis_pair_is_essentially_fixed(self):
        z, w = UHPoint(0.0, 3.5), UHPoint(0.0, 1.0)
        form = reduce_to_canonical(z, w)
        iz = act(form.map, z)
        assert abs(iz.location) < 1e-12
        assert iz.scale == pytest.approx(3.5, rel=1e-12)

    def test_swapped_pair_gets_the_same_lambda(self):
        z, w = UHPoint(1.0, 0.5), UHPoint(-2.0, 3.0)
        assert reduce_to_canonical(z, w).lam == reduce_to_canonical(w, z).lam


def test_canonical_form_rejects_lambda_below_one():
    with pytest.raises(ValueError):
        CanonicalForm(0.5, MoebiusMap.identity())
    with pytest.raises(ValueError):
        CanonicalForm(math.nan, MoebiusMap.identity())
