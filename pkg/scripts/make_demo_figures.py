#!/usr/bin/env python3
"""Generate demo figures: a synthetic clip's log-mel spectrogram, the same
spectrogram after step- and linear-type filter augmentation, and the applied
curves.

Usage:
    python scripts/make_demo_figures.py --out-dir demo_out --seed 7
"""

from __future__ import annotations

import argparse
from pathlib import Path

import numpy as np

from filteraug.augment import filter_augment
from filteraug.formats import write_curve_csv, write_spectrogram
from filteraug.presets import SED_LINEAR, SED_STEP
from filteraug.render import RenderSpec, render_curve, render_spectrogram
from filteraug.rng import stream
from filteraug.spectro import Waveform, normalize_peak, waveform_to_log_mel


def synth_clip(seed: int, seconds: float = 4.0, sample_rate: int = 16000) -> Waveform:
    """Noise plus a handful of tones and a slow chirp, so every band has energy."""
    rng = stream(seed)
    t = np.arange(int(seconds * sample_rate)) / sample_rate
    x = 0.2 * rng.uniform(-1.0, 1.0, len(t))
    for freq, amp in [(220.0, 0.5), (880.0, 0.35), (2500.0, 0.25), (6400.0, 0.2)]:
        x += amp * np.sin(2 * np.pi * freq * t)
    x += 0.3 * np.sin(2 * np.pi * (300.0 + 1200.0 * t / seconds) * t)
    return normalize_peak(Waveform(x, sample_rate))


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", type=Path, default=Path("demo_out"))
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--colormap", choices=["grayscale", "viridis"], default="viridis")
    args = parser.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    render = RenderSpec(colormap=args.colormap)

    spec = waveform_to_log_mel(synth_clip(args.seed))
    write_spectrogram(spec, args.out_dir / "original.lmsp")
    render_spectrogram(spec, render, args.out_dir / "original.png")

    for name, preset in [("step", SED_STEP), ("linear", SED_LINEAR)]:
        out, curve = filter_augment(spec, preset, stream(args.seed))
        write_spectrogram(out, args.out_dir / f"{name}.lmsp")
        render_spectrogram(out, render, args.out_dir / f"{name}.png")
        render_curve(curve, args.out_dir / f"{name}_curve.png")
        write_curve_csv(curve, args.out_dir / f"{name}_curve.csv")
        print(f"{name}: bands at {curve.boundaries.tolist()}, "
              f"weights {np.round(curve.boundary_weights, 2).tolist()}")

    print(f"wrote figures to {args.out_dir}/")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
