"""Filter-curve sampling and application tests.

Curve construction is checked against explicit per-bin loops and hand
interpolation; sampling contracts are checked by enumeration of the feasible
sets.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from filteraug.augment import (
    AugmentConfig,
    FilterCurve,
    FilterType,
    apply_curve,
    build_linear_curve,
    build_step_curve,
    filter_augment,
    sample_band_count,
    sample_boundaries,
    sample_weights,
)
from filteraug.presets import SED_MIXED
from filteraug.rng import stream

from conftest import random_spectrogram


class TestSampleBandCount:
    def test_feasible_range(self):
        cfg = AugmentConfig(band_number_range=(2, 5), min_bandwidth=4)
        rng = stream(0)
        counts = {sample_band_count(cfg, 128, rng) for _ in range(2000)}
        assert counts == {2, 3, 4, 5}

    def test_degenerate_range(self):
        cfg = AugmentConfig(band_number_range=(1, 1), min_bandwidth=1)
        rng = stream(0)
        assert all(sample_band_count(cfg, 64, rng) == 1 for _ in range(50))

    def test_cap_from_min_bandwidth(self):
        # only n = 2 fits 10 bins with gaps of at least 4
        cfg = AugmentConfig(band_number_range=(2, 5), min_bandwidth=4)
        rng = stream(0)
        assert all(sample_band_count(cfg, 10, rng) == 2 for _ in range(200))

    def test_cap_below_configured_minimum(self):
        cfg = AugmentConfig(band_number_range=(2, 5), min_bandwidth=4)
        rng = stream(0)
        assert all(sample_band_count(cfg, 6, rng) == 1 for _ in range(50))

    def test_too_narrow_raises(self):
        cfg = AugmentConfig(band_number_range=(2, 5), min_bandwidth=4)
        with pytest.raises(ValueError, match="too narrow"):
            sample_band_count(cfg, 3, stream(0))


class TestSampleBoundaries:
    def test_single_band(self):
        assert np.array_equal(sample_boundaries(1, 128, 4, stream(0)), [0, 128])

    def test_two_bands_support_enumeration(self):
        # feasible interior boundaries are exactly 4..124; check emitted set
        rng = stream(1)
        seen = set()
        for _ in range(20_000):
            b = sample_boundaries(2, 128, 4, rng)
            assert b[0] == 0 and b[2] == 128
            assert 4 <= b[1] <= 124
            seen.add(int(b[1]))
        assert seen == set(range(4, 125))

    def test_unique_feasible_layout(self):
        rng = stream(2)
        for _ in range(100):
            assert np.array_equal(sample_boundaries(3, 12, 4, rng), [0, 4, 8, 12])

    def test_infeasible_raises(self):
        with pytest.raises(ValueError, match="cannot fit"):
            sample_boundaries(4, 12, 4, stream(0))

    def test_zero_min_bandwidth_rejected(self):
        with pytest.raises(ValueError, match="min_bandwidth"):
            sample_boundaries(2, 12, 0, stream(0))


class TestSampleWeights:
    def test_within_range(self):
        w = sample_weights(1000, (-6.0, 6.0), stream(3))
        assert np.all(w >= -6.0) and np.all(w <= 6.0)

    def test_degenerate_range(self):
        assert np.array_equal(sample_weights(5, (0.0, 0.0), stream(0)), np.zeros(5))

    def test_uniform_statistics(self):
        w = sample_weights(100_000, (-6.0, 6.0), stream(4))
        assert abs(w.mean()) < 0.1
        assert w.min() < -5.8 and w.max() > 5.8

    def test_count_validation(self):
        with pytest.raises(ValueError, match="count"):
            sample_weights(0, (-6.0, 6.0), stream(0))


class TestBuildStepCurve:
    def test_single_band_constant(self):
        curve = build_step_curve([0, 128], [3.0], 128)
        assert np.array_equal(curve.weights_db, np.full(128, 3.0))

    def test_two_bands_per_bin_loop(self):
        curve = build_step_curve([0, 64, 128], [-6.0, 6.0], 128)
        for f in range(128):
            assert curve.weights_db[f] == (-6.0 if f < 64 else 6.0)

    def test_boost_edges_attenuate_middle_shape(self):
        # band layout like the low/high boost example: up below ~400 Hz,
        # down in the middle, up again above ~5 kHz
        curve = build_step_curve([0, 23, 107, 128], [5.0, -4.0, 3.0], 128)
        assert np.all(curve.weights_db[:23] == 5.0)
        assert np.all(curve.weights_db[23:107] == -4.0)
        assert np.all(curve.weights_db[107:] == 3.0)

    def test_shape_mismatch_raises(self):
        with pytest.raises(ValueError, match="one weight per band"):
            build_step_curve([0, 64, 128], [1.0], 128)

    def test_bad_boundaries_raise(self):
        with pytest.raises(ValueError, match="boundaries"):
            build_step_curve([0, 64, 100], [1.0, 2.0], 128)
        with pytest.raises(ValueError, match="boundaries"):
            build_step_curve([0, 64, 64, 128], [1.0, 2.0, 3.0], 128)


class TestBuildLinearCurve:
    def test_flat_weights_constant(self):
        curve = build_linear_curve([0, 128], [2.0, 2.0], 128)
        assert np.array_equal(curve.weights_db, np.full(128, 2.0))

    def test_hand_interpolated_case(self):
        curve = build_linear_curve([0, 2, 4], [0.0, 2.0, 0.0], 4)
        assert np.array_equal(curve.weights_db, [0.0, 1.0, 2.0, 1.0])

    def test_peaks_and_dips_shape(self):
        # knots alternating up/down produce local maxima at the up knots
        boundaries = [0, 20, 28, 60, 128]
        weights = [6.0, -5.0, 4.0, -3.0, 5.0]
        curve = build_linear_curve(boundaries, weights, 128)
        w = curve.weights_db
        assert w[0] == 6.0
        assert w[20] == -5.0 and w[20] == w.min()
        assert w[28] == 4.0
        assert np.all(np.diff(w[0:21]) < 0)   # falling to the first dip
        assert np.all(np.diff(w[20:29]) > 0)  # rising to the second peak
        assert np.all(np.diff(w[28:61]) < 0)
        assert np.all(np.diff(w[60:128]) > 0)

    def test_shape_mismatch_raises(self):
        with pytest.raises(ValueError, match="one weight per boundary"):
            build_linear_curve([0, 64, 128], [1.0, 2.0], 128)


class TestApplyCurve:
    def test_zero_curve_is_identity(self, spec8x16):
        curve = build_step_curve([0, 16], [0.0], 16)
        out = apply_curve(spec8x16, curve)
        assert np.array_equal(out.values, spec8x16.values)

    def test_constant_shift(self):
        spec = random_spectrogram(stream(5)).with_values(np.zeros((4, 16)))
        out = apply_curve(spec, build_step_curve([0, 16], [6.0], 16))
        assert np.all(out.values == 6.0)

    def test_matches_naive_double_loop(self, spec8x16):
        curve = build_linear_curve([0, 5, 16], [-2.0, 3.0, 1.0], 16)
        out = apply_curve(spec8x16, curve)
        for t in range(8):
            for f in range(16):
                expected = spec8x16.values[t, f] + curve.weights_db[f]
                assert out.values[t, f] == pytest.approx(expected, abs=1e-12)

    def test_length_mismatch_raises(self, spec8x16):
        with pytest.raises(ValueError, match="bins"):
            apply_curve(spec8x16, build_step_curve([0, 8], [1.0], 8))

    def test_no_flooring_after_addition(self):
        spec = random_spectrogram(stream(6)).with_values(np.full((2, 16), -99.0))
        out = apply_curve(spec, build_step_curve([0, 16], [-6.0], 16))
        assert np.all(out.values == -105.0)


class TestFilterAugment:
    def test_mix_ratio_one_always_step(self, spec8x16):
        cfg = AugmentConfig(filter_type=FilterType.MIXED, mix_ratio=1.0,
                            band_number_range=(1, 3), min_bandwidth=2)
        for seed in range(40):
            _, curve = filter_augment(spec8x16, cfg, stream(seed))
            assert curve.kind is FilterType.STEP

    def test_mix_ratio_zero_always_linear(self, spec8x16):
        cfg = AugmentConfig(filter_type=FilterType.MIXED, mix_ratio=0.0,
                            band_number_range=(1, 3), min_bandwidth=2)
        for seed in range(40):
            _, curve = filter_augment(spec8x16, cfg, stream(seed))
            assert curve.kind is FilterType.LINEAR

    def test_same_seed_bitwise_identical(self, spec8x16):
        cfg = AugmentConfig(band_number_range=(1, 4), min_bandwidth=2)
        a, ca = filter_augment(spec8x16, cfg, stream(99))
        b, cb = filter_augment(spec8x16, cfg, stream(99))
        assert np.array_equal(a.values, b.values)
        assert np.array_equal(ca.weights_db, cb.weights_db)
        assert np.array_equal(ca.boundaries, cb.boundaries)

    def test_mixed_branches_use_their_sub_configs(self, spec8x16):
        step_cfg = AugmentConfig(band_number_range=(1, 1), min_bandwidth=2, db_range=(2.0, 2.0))
        linear_cfg = AugmentConfig(filter_type=FilterType.LINEAR, band_number_range=(1, 1),
                                   min_bandwidth=2, db_range=(-3.0, -3.0))
        cfg = AugmentConfig(filter_type=FilterType.MIXED, mix_ratio=0.5,
                            step_config=step_cfg, linear_config=linear_cfg)
        kinds = set()
        for seed in range(60):
            out, curve = filter_augment(spec8x16, cfg, stream(seed))
            kinds.add(curve.kind)
            expected = 2.0 if curve.kind is FilterType.STEP else -3.0
            assert np.array_equal(out.values, spec8x16.values + expected)
        assert kinds == {FilterType.STEP, FilterType.LINEAR}

    def test_identity_config(self, spec8x16):
        cfg = AugmentConfig(db_range=(0.0, 0.0), band_number_range=(1, 4), min_bandwidth=2)
        out, _ = filter_augment(spec8x16, cfg, stream(1))
        assert np.array_equal(out.values, spec8x16.values)

    def test_returned_curve_matches_output(self, spec8x16):
        out, curve = filter_augment(spec8x16, SED_MIXED, stream(17))
        assert np.allclose(out.values, spec8x16.values + curve.weights_db[None, :])


class TestConfigValidation:
    def test_db_range_order(self):
        with pytest.raises(ValueError, match="db_range"):
            AugmentConfig(db_range=(6.0, -6.0))

    def test_band_range(self):
        with pytest.raises(ValueError, match="band_number_range"):
            AugmentConfig(band_number_range=(0, 3))
        with pytest.raises(ValueError, match="band_number_range"):
            AugmentConfig(band_number_range=(4, 2))

    def test_min_bandwidth(self):
        with pytest.raises(ValueError, match="min_bandwidth"):
            AugmentConfig(min_bandwidth=0)

    def test_mix_ratio(self):
        with pytest.raises(ValueError, match="mix_ratio"):
            AugmentConfig(mix_ratio=1.5)


@pytest.mark.parametrize("draw", [
    lambda rng: sample_band_count(AugmentConfig(), 128, rng),
    lambda rng: sample_boundaries(4, 128, 4, rng),
    lambda rng: sample_weights(8, (-6.0, 6.0), rng),
])
def test_sampling_ops_deterministic_per_seed(draw):
    first = draw(stream(321))
    second = draw(stream(321))
    assert np.array_equal(first, second)


feasible_case = st.integers(4, 200).flatmap(
    lambda n_bins: st.tuples(
        st.just(n_bins),
        st.integers(1, max(1, n_bins // 4)).flatmap(
            lambda bw: st.tuples(st.just(bw), st.integers(1, n_bins // bw))
        ),
    )
)


@settings(max_examples=200, deadline=None)
@given(case=feasible_case, seed=st.integers(0, 2**32 - 1))
def test_boundary_validity_property(case, seed):
    n_bins, (min_bw, n) = case
    b = sample_boundaries(n, n_bins, min_bw, stream(seed))
    assert b[0] == 0 and b[-1] == n_bins
    assert np.all(np.diff(b) >= min_bw)


@settings(max_examples=100, deadline=None)
@given(case=feasible_case, seed=st.integers(0, 2**32 - 1),
       kind=st.sampled_from([FilterType.STEP, FilterType.LINEAR]))
def test_db_bound_property(case, seed, kind):
    n_bins, (min_bw, n) = case
    rng = stream(seed)
    b = sample_boundaries(n, n_bins, min_bw, rng)
    if kind is FilterType.STEP:
        curve = build_step_curve(b, sample_weights(n, (-6.0, 6.0), rng), n_bins)
    else:
        curve = build_linear_curve(b, sample_weights(n + 1, (-6.0, 6.0), rng), n_bins)
    assert np.all(curve.weights_db >= -6.0)
    assert np.all(curve.weights_db <= 6.0)


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_time_invariance_property(seed):
    spec = random_spectrogram(stream(seed), n_frames=6, n_mels=24)
    cfg = AugmentConfig(band_number_range=(1, 5), min_bandwidth=2)
    out, _ = filter_augment(spec, cfg, stream(seed + 1))
    offsets = out.values - spec.values
    assert np.allclose(offsets, offsets[0][None, :], atol=0.0)


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_curve_additivity_property(seed):
    rng = stream(seed)
    spec = random_spectrogram(rng, n_frames=5, n_mels=32)
    c1 = build_step_curve(sample_boundaries(3, 32, 4, rng), sample_weights(3, (-6, 6), rng), 32)
    c2 = build_linear_curve(sample_boundaries(2, 32, 4, rng), sample_weights(3, (-6, 6), rng), 32)
    combined = FilterCurve(
        weights_db=c1.weights_db + c2.weights_db,
        boundaries=np.array([0, 32]),
        boundary_weights=np.zeros(1),
        kind=FilterType.STEP,
    )
    chained = apply_curve(apply_curve(spec, c1), c2)
    direct = apply_curve(spec, combined)
    assert np.allclose(chained.values, direct.values, atol=1e-9)


@settings(max_examples=100, deadline=None)
@given(case=feasible_case, seed=st.integers(0, 2**32 - 1))
def test_step_structure_property(case, seed):
    n_bins, (min_bw, n) = case
    rng = stream(seed)
    b = sample_boundaries(n, n_bins, min_bw, rng)
    curve = build_step_curve(b, sample_weights(n, (-6.0, 6.0), rng), n_bins)
    assert len(np.unique(curve.weights_db)) <= n
    change_points = np.nonzero(np.diff(curve.weights_db))[0] + 1
    assert set(change_points.tolist()) <= set(b[1:-1].tolist())


@settings(max_examples=100, deadline=None)
@given(case=feasible_case, seed=st.integers(0, 2**32 - 1))
def test_linear_second_difference_property(case, seed):
    n_bins, (min_bw, n) = case
    rng = stream(seed)
    b = sample_boundaries(n, n_bins, min_bw, rng)
    curve = build_linear_curve(b, sample_weights(n + 1, (-6.0, 6.0), rng), n_bins)
    w = curve.weights_db
    for f in range(1, n_bins - 1):
        inside = any(b[i] <= f - 1 and f + 1 <= b[i + 1] for i in range(len(b) - 1))
        if inside:
            assert abs(w[f - 1] - 2 * w[f] + w[f + 1]) < 1e-9
