"""Batch command-line front end.

Subcommands: ``spectrogram`` (WAV to LMSP), ``augment`` (filter/mask one
spectrogram), ``batch`` (augment a manifest of files with per-item derived
seeds), ``render`` (LMSP or curve CSV to PNG).

Exit codes: 0 success, 1 partial batch failure, 2 invalid input or config.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any

import numpy as np

from .augment import AugmentConfig, FilterCurve, FilterType, MaskConfig, filter_augment, frequency_mask, time_mask
from .formats import read_curve_csv, read_spectrogram, spectrogram_from_bytes, write_curve_csv, write_spectrogram
from .presets import AUGMENT_PRESETS, MASK_PRESETS, PRESET_NAMES, filter_config_to_dict
from .render import COLORMAPS, RenderSpec, render_curve, render_spectrogram
from .rng import default_seed, split_seed, stream
from .spectro import LogMelSpectrogram, SpectrogramConfig, Waveform, normalize_peak, waveform_to_log_mel
from .wav import read_wav


class CliError(ValueError):
    """Invalid input or configuration; maps to exit code 2."""


@dataclass(frozen=True)
class ResolvedTransforms:
    """The augmentation stages one augment/batch invocation will run."""

    preset: str | None
    filter_config: AugmentConfig | None
    freq_mask_ratio: float | None
    time_mask_range: tuple[int, int] | None
    fill_mode: str
    fill_db: float

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.preset,
            "filter": None if self.filter_config is None else filter_config_to_dict(self.filter_config),
            "freq_mask_ratio": self.freq_mask_ratio,
            "time_mask_range": None if self.time_mask_range is None else list(self.time_mask_range),
        }


def _add_stft_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("spectrogram computation (WAV inputs)")
    group.add_argument("--n-fft", type=int, default=2048)
    group.add_argument("--win-length", type=int, default=2048)
    group.add_argument("--hop-length", type=int, default=256)
    group.add_argument("--n-mels", type=int, default=128)
    group.add_argument("--f-min", type=float, default=0.0)
    group.add_argument("--f-max", type=float, default=8000.0)
    group.add_argument("--db-floor", type=float, default=-100.0)


def _add_transform_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("augmentation")
    group.add_argument("--preset", choices=PRESET_NAMES)
    group.add_argument("--filter-type", choices=[t.value for t in FilterType])
    group.add_argument("--db-range", nargs=2, type=float, metavar=("MIN", "MAX"))
    group.add_argument("--band-range", nargs=2, type=int, metavar=("MIN", "MAX"))
    group.add_argument("--min-bandwidth", type=int)
    group.add_argument("--mix-ratio", type=float)
    group.add_argument("--freq-mask-ratio", type=float)
    group.add_argument("--time-mask-range", nargs=2, type=int, metavar=("MIN", "MAX"))
    group.add_argument("--fill-mode", choices=["mean", "constant"])
    group.add_argument("--fill-db", type=float)


def _spectrogram_config(args: argparse.Namespace) -> SpectrogramConfig:
    return SpectrogramConfig(
        n_fft=args.n_fft,
        win_length=args.win_length,
        hop_length=args.hop_length,
        n_mels=args.n_mels,
        f_min=args.f_min,
        f_max=args.f_max,
        db_floor=args.db_floor,
    )


def _resolve_transforms(args: argparse.Namespace) -> ResolvedTransforms:
    filter_overrides: dict[str, Any] = {}
    if args.filter_type is not None:
        filter_overrides["filter_type"] = FilterType(args.filter_type)
    if args.db_range is not None:
        filter_overrides["db_range"] = tuple(args.db_range)
    if args.band_range is not None:
        filter_overrides["band_number_range"] = tuple(args.band_range)
    if args.min_bandwidth is not None:
        filter_overrides["min_bandwidth"] = args.min_bandwidth
    if args.mix_ratio is not None:
        filter_overrides["mix_ratio"] = args.mix_ratio

    filter_config: AugmentConfig | None = None
    freq_mask_ratio: float | None = None
    if args.preset in AUGMENT_PRESETS:
        filter_config = AUGMENT_PRESETS[args.preset]
        if filter_overrides:
            # explicit flags replace the preset's branch configs too
            filter_config = replace(
                filter_config, step_config=None, linear_config=None, **filter_overrides
            )
    elif args.preset in MASK_PRESETS:
        freq_mask_ratio = MASK_PRESETS[args.preset].max_mask_ratio
        if filter_overrides:
            raise CliError(f"preset {args.preset!r} is a masking preset; filter flags do not apply")
    elif filter_overrides:
        try:
            filter_config = AugmentConfig(**filter_overrides)
        except ValueError as exc:
            raise CliError(str(exc)) from exc

    if args.freq_mask_ratio is not None:
        freq_mask_ratio = args.freq_mask_ratio
    time_mask_range = None if args.time_mask_range is None else tuple(args.time_mask_range)

    if filter_config is None and freq_mask_ratio is None and time_mask_range is None:
        raise CliError("no augmentation specified: give --preset or explicit transform flags")

    resolved = ResolvedTransforms(
        preset=args.preset,
        filter_config=filter_config,
        freq_mask_ratio=freq_mask_ratio,
        time_mask_range=time_mask_range,
        fill_mode=args.fill_mode or "mean",
        fill_db=0.0 if args.fill_db is None else args.fill_db,
    )
    _validate_masks(resolved)
    return resolved


def _validate_masks(resolved: ResolvedTransforms) -> None:
    try:
        if resolved.freq_mask_ratio is not None:
            MaskConfig(max_mask_ratio=resolved.freq_mask_ratio)
        if resolved.time_mask_range is not None:
            MaskConfig(time_mask_range=resolved.time_mask_range)
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _apply_transforms(
    spec: LogMelSpectrogram, resolved: ResolvedTransforms, rng: np.random.Generator
) -> tuple[LogMelSpectrogram, FilterCurve | None]:
    curve: FilterCurve | None = None
    if resolved.filter_config is not None:
        spec, curve = filter_augment(spec, resolved.filter_config, rng)
    if resolved.freq_mask_ratio is not None:
        cfg = MaskConfig(
            max_mask_ratio=resolved.freq_mask_ratio,
            fill_mode=resolved.fill_mode,
            fill_db=resolved.fill_db,
        )
        spec = frequency_mask(spec, cfg, rng)
    if resolved.time_mask_range is not None:
        cfg = MaskConfig(
            time_mask_range=resolved.time_mask_range,
            fill_mode=resolved.fill_mode,
            fill_db=resolved.fill_db,
        )
        spec = time_mask(spec, cfg, rng)
    return spec, curve


def _load_spectrogram(path: str | Path, args: argparse.Namespace) -> LogMelSpectrogram:
    """Load LMSP directly or compute the spectrogram inline for WAV input."""
    data = Path(path).read_bytes()
    if data[:4] == b"LMSP":
        return spectrogram_from_bytes(data)
    if data[:4] == b"RIFF":
        w = normalize_peak(read_wav(path))
        return waveform_to_log_mel(w, _spectrogram_config(args))
    raise CliError(f"{path}: neither an LMSP spectrogram nor a WAV file")


def cmd_spectrogram(args: argparse.Namespace) -> int:
    w = normalize_peak(read_wav(args.input))
    spec = waveform_to_log_mel(w, _spectrogram_config(args))
    write_spectrogram(spec, args.output)
    return 0


def cmd_augment(args: argparse.Namespace) -> int:
    resolved = _resolve_transforms(args)
    if args.print_config:
        print(json.dumps(resolved.to_json(), indent=2))
        return 0
    if args.input is None or args.output is None:
        raise CliError("input and output paths are required unless --print-config is given")
    spec = _load_spectrogram(args.input, args)
    rng = stream(default_seed() if args.seed is None else args.seed)
    out, curve = _apply_transforms(spec, resolved, rng)
    write_spectrogram(out, args.output)
    if args.emit_curve:
        if curve is None:
            raise CliError("--emit-curve requires a filter stage")
        write_curve_csv(curve, args.emit_curve)
    return 0


def cmd_batch(args: argparse.Namespace) -> int:
    resolved = _resolve_transforms(args)
    entries = [line.strip() for line in Path(args.manifest).read_text().splitlines() if line.strip()]
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    master_seed = default_seed() if args.master_seed is None else args.master_seed
    jobs = max(1, args.jobs)

    def process(item: tuple[int, str]) -> tuple[str, Exception | None]:
        index, in_path = item
        try:
            spec = _load_spectrogram(in_path, args)
            rng = stream(split_seed(master_seed, index))
            out, _ = _apply_transforms(spec, resolved, rng)
            out_path = out_dir / f"{index:04d}_{Path(in_path).stem}.lmsp"
            write_spectrogram(out, out_path)
            return in_path, None
        except Exception as exc:  # per-item isolation: one bad file must not sink the batch
            return in_path, exc

    items = list(enumerate(entries))
    if jobs == 1:
        results = [process(item) for item in items]
    else:
        from concurrent.futures import ThreadPoolExecutor  # deferred: batch-only cost

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(process, items))

    failures = [(path, exc) for path, exc in results if exc is not None]
    for path, exc in failures:
        print(f"error: {path}: {exc}", file=sys.stderr)
    print(f"processed {len(results) - len(failures)}/{len(results)} files")
    return 1 if failures else 0


def cmd_render(args: argparse.Namespace) -> int:
    suffix = Path(args.input).suffix.lower()
    db_range = None if args.db_range is None else (args.db_range[0], args.db_range[1])
    if suffix == ".lmsp":
        spec = read_spectrogram(args.input)
        render = RenderSpec(colormap=args.colormap, db_display_range=db_range or (-80.0, 0.0))
        render_spectrogram(spec, render, args.output)
    elif suffix == ".csv":
        weights = read_curve_csv(args.input)
        render_curve(weights, args.output, height=args.height, value_range=db_range)
    else:
        raise CliError(f"{args.input}: expected a .lmsp spectrogram or .csv curve")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="filteraug",
        description="Spectrogram-domain audio augmentation: random filter curves and masking.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_spec = sub.add_parser("spectrogram", help="compute a log-mel spectrogram from a WAV file")
    p_spec.add_argument("input", help="input WAV path")
    p_spec.add_argument("output", help="output LMSP path")
    _add_stft_flags(p_spec)
    p_spec.set_defaults(func=cmd_spectrogram)

    p_aug = sub.add_parser("augment", help="augment one spectrogram (LMSP or WAV input)")
    p_aug.add_argument("input", nargs="?", help="input LMSP or WAV path")
    p_aug.add_argument("output", nargs="?", help="output LMSP path")
    _add_transform_flags(p_aug)
    _add_stft_flags(p_aug)
    p_aug.add_argument("--seed", type=int, help="random seed (default: FILTERAUG_SEED or built-in)")
    p_aug.add_argument("--emit-curve", metavar="PATH", help="also write the applied filter curve as CSV")
    p_aug.add_argument("--print-config", action="store_true", help="print the resolved config as JSON and exit")
    p_aug.set_defaults(func=cmd_augment)

    p_batch = sub.add_parser("batch", help="augment every file in a manifest")
    p_batch.add_argument("manifest", help="text file with one input path per line")
    p_batch.add_argument("out_dir", help="directory for augmented outputs")
    _add_transform_flags(p_batch)
    _add_stft_flags(p_batch)
    p_batch.add_argument("--master-seed", type=int, help="seed that per-item seeds derive from")
    p_batch.add_argument("--jobs", type=int, default=1, help="parallel workers (results do not depend on this)")
    p_batch.set_defaults(func=cmd_batch)

    p_render = sub.add_parser("render", help="render an LMSP spectrogram or curve CSV as PNG")
    p_render.add_argument("input", help="input .lmsp or .csv path")
    p_render.add_argument("output", help="output PNG path")
    p_render.add_argument("--colormap", choices=list(COLORMAPS), default="grayscale")
    p_render.add_argument("--db-range", nargs=2, type=float, metavar=("LO", "HI"),
                          help="display range (spectrograms default to -80..0 dB, curves autoscale)")
    p_render.add_argument("--height", type=int, default=200, help="curve plot height in pixels")
    p_render.set_defaults(func=cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())
