"""Named hyperparameter presets.

The sed-* presets carry the settings tuned for sound event detection, the
sv-* preset the narrower dB range re-tuned for speaker verification, and
freq-mask the masking baseline they are compared against.
"""

from __future__ import annotations

from typing import Any

from .augment import AugmentConfig, FilterType, MaskConfig

SED_STEP = AugmentConfig(
    filter_type=FilterType.STEP,
    db_range=(-6.0, 6.0),
    band_number_range=(2, 5),
    min_bandwidth=4,
)

SED_LINEAR = AugmentConfig(
    filter_type=FilterType.LINEAR,
    db_range=(-6.0, 6.0),
    band_number_range=(3, 6),
    min_bandwidth=6,
)

SED_MIXED = AugmentConfig(
    filter_type=FilterType.MIXED,
    mix_ratio=0.7,
    step_config=SED_STEP,
    linear_config=SED_LINEAR,
)

SV_LINEAR = AugmentConfig(
    filter_type=FilterType.LINEAR,
    db_range=(-1.5, 1.5),
    band_number_range=(3, 6),
    min_bandwidth=6,
)

FREQ_MASK = MaskConfig(max_mask_ratio=1.0 / 16.0)

AUGMENT_PRESETS: dict[str, AugmentConfig] = {
    "sed-step": SED_STEP,
    "sed-linear": SED_LINEAR,
    "sed-mixed": SED_MIXED,
    "sv-linear": SV_LINEAR,
}

MASK_PRESETS: dict[str, MaskConfig] = {
    "freq-mask": FREQ_MASK,
}

PRESET_NAMES: tuple[str, ...] = (*AUGMENT_PRESETS, *MASK_PRESETS)


def filter_config_to_dict(cfg: AugmentConfig) -> dict[str, Any]:
    """JSON-friendly view of a filter config, as printed by the CLI."""
    out: dict[str, Any] = {"type": cfg.filter_type.value}
    if cfg.filter_type is FilterType.MIXED:
        out["mix_ratio"] = cfg.mix_ratio
        if cfg.step_config is not None:
            out["step"] = filter_config_to_dict(cfg.step_config)
        if cfg.linear_config is not None:
            out["linear"] = filter_config_to_dict(cfg.linear_config)
        return out
    out["db_range"] = list(cfg.db_range)
    out["band_number_range"] = list(cfg.band_number_range)
    out["min_bandwidth"] = cfg.min_bandwidth
    return out
