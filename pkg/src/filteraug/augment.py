"""Random per-band filter curves and masking transforms for log-mel spectrograms.

The filter transform simulates an acoustic filter by adding random dB weights
on random frequency bands: it samples a band count, band boundaries that keep
at least a minimum bandwidth between them, and one uniform dB weight per band
(step curves) or per boundary (linear curves, interpolated between knots).
The same curve is added to every frame. Frequency and time masking replace a
random band or frame interval with a fill value instead.

All transforms are pure given their generator; pass a fresh stream per call
site (see :mod:`filteraug.rng`) to reproduce results exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum

import numpy as np

from .spectro import LogMelSpectrogram


class FilterType(str, Enum):
    STEP = "step"
    LINEAR = "linear"
    MIXED = "mixed"


@dataclass(frozen=True)
class AugmentConfig:
    """Hyperparameters of the filter transform.

    ``db_range`` bounds the sampled band weights, ``band_number_range`` bounds
    the number of bands, and ``min_bandwidth`` (mel bins) keeps any band from
    becoming too narrow to matter. ``mix_ratio`` is the probability that a
    mixed-type application picks the step branch; the optional sub-configs let
    the two branches run with their own hyperparameters.
    """

    filter_type: FilterType = FilterType.STEP
    db_range: tuple[float, float] = (-6.0, 6.0)
    band_number_range: tuple[int, int] = (2, 5)
    min_bandwidth: int = 4
    mix_ratio: float = 1.0
    step_config: "AugmentConfig | None" = field(default=None, repr=False)
    linear_config: "AugmentConfig | None" = field(default=None, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "filter_type", FilterType(self.filter_type))
        object.__setattr__(self, "db_range", (float(self.db_range[0]), float(self.db_range[1])))
        object.__setattr__(
            self,
            "band_number_range",
            (int(self.band_number_range[0]), int(self.band_number_range[1])),
        )
        min_db, max_db = self.db_range
        n_min, n_max = self.band_number_range
        if min_db > max_db:
            raise ValueError(f"db_range must satisfy min <= max, got {self.db_range}")
        if not (1 <= n_min <= n_max):
            raise ValueError(f"band_number_range must satisfy 1 <= min <= max, got {self.band_number_range}")
        if self.min_bandwidth < 1:
            raise ValueError(f"min_bandwidth must be >= 1, got {self.min_bandwidth}")
        if not (0.0 <= self.mix_ratio <= 1.0):
            raise ValueError(f"mix_ratio must be in [0, 1], got {self.mix_ratio}")


@dataclass(frozen=True)
class MaskConfig:
    """Hyperparameters of the masking baselines.

    ``max_mask_ratio`` caps the masked fraction of mel bins (frequency
    masking); ``time_mask_range`` bounds the masked frame count (time
    masking). Masked cells are filled with the spectrogram mean or, with
    ``fill_mode="constant"``, with ``fill_db``.
    """

    max_mask_ratio: float = 1.0 / 16.0
    time_mask_range: tuple[int, int] = (7, 30)
    fill_mode: str = "mean"
    fill_db: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "time_mask_range",
            (int(self.time_mask_range[0]), int(self.time_mask_range[1])),
        )
        t_min, t_max = self.time_mask_range
        if not (0.0 <= self.max_mask_ratio <= 1.0):
            raise ValueError(f"max_mask_ratio must be in [0, 1], got {self.max_mask_ratio}")
        if not (0 <= t_min <= t_max):
            raise ValueError(f"time_mask_range must satisfy 0 <= min <= max, got {self.time_mask_range}")
        if self.fill_mode not in ("mean", "constant"):
            raise ValueError(f"fill_mode must be 'mean' or 'constant', got {self.fill_mode!r}")


@dataclass(frozen=True)
class FilterCurve:
    """One realized filter: a per-mel-bin dB offset vector.

    Keeps the boundaries and sampled weights that generated it for audit and
    rendering.
    """

    weights_db: np.ndarray
    boundaries: np.ndarray
    boundary_weights: np.ndarray
    kind: FilterType

    @property
    def n_bins(self) -> int:
        return len(self.weights_db)


def sample_band_count(cfg: AugmentConfig, n_bins: int, rng: np.random.Generator) -> int:
    """Draw the number of frequency bands, uniform over the feasible range.

    The configured range is capped at ``n_bins // min_bandwidth`` (the largest
    band count whose bands can all honor the minimum bandwidth); if the cap
    falls below the configured minimum, the cap wins.
    """
    if n_bins < 1:
        raise ValueError(f"n_bins must be >= 1, got {n_bins}")
    cap = n_bins // cfg.min_bandwidth
    if cap < 1:
        raise ValueError(
            f"spectrogram too narrow: {n_bins} bins cannot fit one band of width {cfg.min_bandwidth}"
        )
    hi = min(cfg.band_number_range[1], cap)
    lo = min(cfg.band_number_range[0], hi)
    return int(rng.integers(lo, hi + 1))


def sample_boundaries(
    n: int, n_bins: int, min_bandwidth: int, rng: np.random.Generator
) -> np.ndarray:
    """Draw n + 1 band boundaries: 0, n - 1 interior bins, and n_bins.

    Interior boundaries are built by drawing n - 1 integers uniformly with
    replacement from [0, n_bins - n * min_bandwidth], sorting them, and adding
    i * min_bandwidth to the i-th draw, which guarantees every consecutive gap
    is at least ``min_bandwidth`` without rejection sampling.
    """
    if n < 1:
        raise ValueError(f"band count must be >= 1, got {n}")
    if min_bandwidth < 1:
        raise ValueError(f"min_bandwidth must be >= 1, got {min_bandwidth}")
    if n * min_bandwidth > n_bins:
        raise ValueError(
            f"cannot fit {n} bands of width >= {min_bandwidth} into {n_bins} bins"
        )
    bounds = np.empty(n + 1, dtype=np.int64)
    bounds[0] = 0
    bounds[n] = n_bins
    if n > 1:
        slack = n_bins - n * min_bandwidth
        cuts = np.sort(rng.integers(0, slack + 1, size=n - 1))
        bounds[1:n] = cuts + min_bandwidth * np.arange(1, n)
    return bounds


def sample_weights(
    count: int, db_range: tuple[float, float], rng: np.random.Generator
) -> np.ndarray:
    """Draw ``count`` independent uniform dB weights from ``db_range``."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    min_db, max_db = db_range
    if min_db > max_db:
        raise ValueError(f"db_range must satisfy min <= max, got {db_range}")
    if min_db == max_db:
        return np.full(count, float(min_db))
    return rng.uniform(min_db, max_db, size=count)


def _check_boundaries(boundaries: np.ndarray, n_bins: int) -> np.ndarray:
    b = np.asarray(boundaries, dtype=np.int64)
    if b.ndim != 1 or len(b) < 2:
        raise ValueError(f"boundaries must be a vector of at least 2 entries, got shape {b.shape}")
    if b[0] != 0 or b[-1] != n_bins or np.any(np.diff(b) <= 0):
        raise ValueError(
            f"boundaries must increase strictly from 0 to {n_bins}, got {b.tolist()}"
        )
    return b


def build_step_curve(boundaries: np.ndarray, weights: np.ndarray, n_bins: int) -> FilterCurve:
    """Curve that is constant on each band: ``weights[i]`` on [b_i, b_i+1)."""
    b = _check_boundaries(boundaries, n_bins)
    w = np.asarray(weights, dtype=np.float64)
    if len(w) != len(b) - 1:
        raise ValueError(f"need one weight per band: {len(b) - 1} bands, {len(w)} weights")
    curve = np.repeat(w, np.diff(b))
    return FilterCurve(weights_db=curve, boundaries=b, boundary_weights=w, kind=FilterType.STEP)


def build_linear_curve(boundaries: np.ndarray, weights: np.ndarray, n_bins: int) -> FilterCurve:
    """Curve interpolated linearly between per-boundary weights.

    Knot i sits at bin coordinate ``boundaries[i]``; the curve is evaluated at
    integer bins 0..n_bins-1, so the final knot at ``n_bins`` lies one past the
    last bin.
    """
    b = _check_boundaries(boundaries, n_bins)
    w = np.asarray(weights, dtype=np.float64)
    if len(w) != len(b):
        raise ValueError(f"need one weight per boundary: {len(b)} boundaries, {len(w)} weights")
    curve = np.interp(np.arange(n_bins), b, w)
    # interpolation cannot leave the knot hull; clip 1-ulp rounding overshoot
    curve = np.clip(curve, w.min(), w.max())
    return FilterCurve(weights_db=curve, boundaries=b, boundary_weights=w, kind=FilterType.LINEAR)


def apply_curve(spec: LogMelSpectrogram, curve: FilterCurve) -> LogMelSpectrogram:
    """Add the curve's dB offsets to every frame. No flooring is applied."""
    if curve.n_bins != spec.n_mels:
        raise ValueError(f"curve has {curve.n_bins} bins but spectrogram has {spec.n_mels}")
    return spec.with_values(spec.values + curve.weights_db[None, :])


def _sample_curve(
    spec: LogMelSpectrogram, cfg: AugmentConfig, rng: np.random.Generator
) -> FilterCurve:
    n = sample_band_count(cfg, spec.n_mels, rng)
    boundaries = sample_boundaries(n, spec.n_mels, cfg.min_bandwidth, rng)
    if cfg.filter_type is FilterType.STEP:
        weights = sample_weights(n, cfg.db_range, rng)
        return build_step_curve(boundaries, weights, spec.n_mels)
    weights = sample_weights(n + 1, cfg.db_range, rng)
    return build_linear_curve(boundaries, weights, spec.n_mels)


def filter_augment(
    spec: LogMelSpectrogram, cfg: AugmentConfig, rng: np.random.Generator
) -> tuple[LogMelSpectrogram, FilterCurve]:
    """Apply one randomly sampled filter curve to a spectrogram.

    For the mixed type, a single Bernoulli(mix_ratio) draw per call selects
    the step branch on success and the linear branch otherwise; each branch
    runs with its own sub-config when one is set.

    Returns:
        The augmented spectrogram and the curve that was applied.
    """
    if cfg.filter_type is FilterType.MIXED:
        if rng.random() < cfg.mix_ratio:
            branch = cfg.step_config or replace(
                cfg, filter_type=FilterType.STEP, step_config=None, linear_config=None
            )
        else:
            branch = cfg.linear_config or replace(
                cfg, filter_type=FilterType.LINEAR, step_config=None, linear_config=None
            )
        if branch.filter_type is FilterType.MIXED:
            raise ValueError("mixed-type sub-configs must be step or linear")
        return filter_augment(spec, branch, rng)
    curve = _sample_curve(spec, cfg, rng)
    return apply_curve(spec, curve), curve


def _fill_value(spec: LogMelSpectrogram, cfg: MaskConfig) -> float:
    if cfg.fill_mode == "mean":
        return float(spec.values.mean())
    return float(cfg.fill_db)


def frequency_mask(
    spec: LogMelSpectrogram, cfg: MaskConfig, rng: np.random.Generator
) -> LogMelSpectrogram:
    """Replace a random band of mel bins with the fill value.

    The width is uniform over [0, floor(n_mels * max_mask_ratio)] and the
    start uniform over the positions where the band fits; a zero width leaves
    the input unchanged. Two draws are consumed per call regardless of width.
    """
    n_bins = spec.n_mels
    max_width = int(n_bins * cfg.max_mask_ratio)
    width = int(rng.integers(0, max_width + 1))
    start = int(rng.integers(0, n_bins - width + 1))
    values = spec.values.copy()
    values[:, start : start + width] = _fill_value(spec, cfg)
    return spec.with_values(values)


def time_mask(
    spec: LogMelSpectrogram, cfg: MaskConfig, rng: np.random.Generator
) -> LogMelSpectrogram:
    """Replace a random interval of frames with the fill value.

    The width is uniform over ``time_mask_range``, capped at the frame count
    when the range exceeds it; the start is uniform over the positions where
    the interval fits.
    """
    n_frames = spec.n_frames
    t_min, t_max = cfg.time_mask_range
    lo = min(t_min, n_frames)
    hi = min(t_max, n_frames)
    width = int(rng.integers(lo, hi + 1))
    start = int(rng.integers(0, n_frames - width + 1))
    values = spec.values.copy()
    values[start : start + width, :] = _fill_value(spec, cfg)
    return spec.with_values(values)
