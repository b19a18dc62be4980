/**
 * Array-level augmentation: hand a 2-D float buffer in, get the augmented
 * buffer (and the applied curve) back.
 *
 * Each call round-trips through the backing CLI with explicit seeds and the
 * LMSP/CSV formats, so results are exactly the backend's outputs at float32
 * resolution and are reproducible from (values, config, seed) alone.
 */

import { mkdtemp, readFile, rm, writeFile } from "node:fs/promises";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { parseCurveCsv } from "./csv.js";
import { decodeLmsp, encodeLmsp, Spectrogram } from "./lmsp.js";
import { AUGMENT_PRESET_NAMES } from "./presets.js";
import { runCli } from "./runner.js";

export interface ArraySpec {
  /** row-major (time-major) values, length nFrames * nMels */
  values: Float32Array;
  nFrames: number;
  nMels: number;
  sampleRate?: number;
  hopLength?: number;
}

export interface FilterConfig {
  type: "step" | "linear" | "mixed";
  dbRange: [number, number];
  bandNumberRange: [number, number];
  minBandwidth: number;
  /** mixed type only */
  mixRatio?: number;
}

export type AugmentPresetName = (typeof AUGMENT_PRESET_NAMES)[number];

export interface MaskOptions {
  kind: "freq" | "time";
  /** frequency masking: maximum masked fraction of mel bins */
  maxMaskRatio?: number;
  /** time masking: masked frame count range */
  timeMaskRange?: [number, number];
  fillMode?: "mean" | "constant";
  fillDb?: number;
}

export interface AugmentResult {
  values: Float32Array;
  /** per-mel-bin dB offsets of the curve that was applied */
  curveDb: number[];
}

export type Seed = number | bigint;

function validateSpec(spec: ArraySpec): void {
  const { values, nFrames, nMels } = spec;
  if (!Number.isInteger(nFrames) || !Number.isInteger(nMels) || nFrames < 1 || nMels < 1) {
    throw new Error(`invalid dims ${nFrames}x${nMels}`);
  }
  if (values.length !== nFrames * nMels) {
    throw new Error(`values length ${values.length} does not match ${nFrames}x${nMels}`);
  }
  for (let i = 0; i < values.length; i++) {
    if (!Number.isFinite(values[i])) {
      throw new Error(`non-finite value at index ${i}`);
    }
  }
}

function toSpectrogram(spec: ArraySpec): Spectrogram {
  return {
    nFrames: spec.nFrames,
    nMels: spec.nMels,
    sampleRate: spec.sampleRate ?? 16000,
    hopLength: spec.hopLength ?? 256,
    values: spec.values,
  };
}

function filterFlags(config: FilterConfig | AugmentPresetName): string[] {
  if (typeof config === "string") {
    if (!(AUGMENT_PRESET_NAMES as readonly string[]).includes(config)) {
      throw new Error(`unknown augment preset ${JSON.stringify(config)}`);
    }
    return ["--preset", config];
  }
  const flags = [
    "--filter-type", config.type,
    "--db-range", String(config.dbRange[0]), String(config.dbRange[1]),
    "--band-range", String(config.bandNumberRange[0]), String(config.bandNumberRange[1]),
    "--min-bandwidth", String(config.minBandwidth),
  ];
  if (config.mixRatio !== undefined) {
    flags.push("--mix-ratio", String(config.mixRatio));
  }
  return flags;
}

function maskFlags(options: MaskOptions): string[] {
  const flags: string[] = [];
  if (options.kind === "freq") {
    flags.push("--freq-mask-ratio", String(options.maxMaskRatio ?? 1 / 16));
  } else {
    const [lo, hi] = options.timeMaskRange ?? [7, 30];
    flags.push("--time-mask-range", String(lo), String(hi));
  }
  if (options.fillMode !== undefined) {
    flags.push("--fill-mode", options.fillMode);
  }
  if (options.fillDb !== undefined) {
    flags.push("--fill-db", String(options.fillDb));
  }
  return flags;
}

async function runThroughCli(
  spec: ArraySpec,
  flags: string[],
  seed: Seed,
  wantCurve: boolean
): Promise<AugmentResult> {
  validateSpec(spec);
  const workDir = await mkdtemp(join(tmpdir(), "filteraug-"));
  try {
    const inPath = join(workDir, "in.lmsp");
    const outPath = join(workDir, "out.lmsp");
    const curvePath = join(workDir, "curve.csv");
    await writeFile(inPath, encodeLmsp(toSpectrogram(spec)));
    const args = ["augment", inPath, outPath, ...flags, "--seed", seed.toString()];
    if (wantCurve) {
      args.push("--emit-curve", curvePath);
    }
    await runCli(args);
    const output = decodeLmsp(new Uint8Array(await readFile(outPath)));
    const curveDb = wantCurve ? parseCurveCsv(await readFile(curvePath, "utf8")) : [];
    return { values: output.values, curveDb };
  } finally {
    await rm(workDir, { recursive: true, force: true });
  }
}

/** Apply one randomly sampled filter curve; returns the curve for audit. */
export async function augmentArray(
  spec: ArraySpec,
  config: FilterConfig | AugmentPresetName,
  seed: Seed
): Promise<AugmentResult> {
  return runThroughCli(spec, filterFlags(config), seed, true);
}

/** Apply frequency or time masking. */
export async function maskArray(
  spec: ArraySpec,
  options: MaskOptions,
  seed: Seed
): Promise<Float32Array> {
  const result = await runThroughCli(spec, maskFlags(options), seed, false);
  return result.values;
}

const MASK_64 = (1n << 64n) - 1n;

/** splitmix64 finalizer; the documented per-call seed derivation. */
function mix64(value: bigint): bigint {
  let z = (value + 0x9e3779b97f4a7c15n) & MASK_64;
  z = ((z ^ (z >> 30n)) * 0xbf58476d1ce4e5b9n) & MASK_64;
  z = ((z ^ (z >> 27n)) * 0x94d049bb133111ebn) & MASK_64;
  return z ^ (z >> 31n);
}

export function deriveCallSeed(masterSeed: Seed, index: number): bigint {
  return mix64(mix64(BigInt(masterSeed) & MASK_64) ^ BigInt(index));
}

/**
 * A fixed configuration bound to a master seed.
 *
 * Call n uses seed deriveCallSeed(masterSeed, n), so two augmenters built
 * with the same arguments produce identical call-by-call results. Not safe
 * to share across concurrent callers; create one per worker.
 */
export class BoundAugmenter {
  readonly config: FilterConfig | AugmentPresetName;
  readonly masterSeed: bigint;
  private callIndex = 0;

  constructor(config: FilterConfig | AugmentPresetName, masterSeed: Seed) {
    this.config = config;
    this.masterSeed = BigInt(masterSeed) & MASK_64;
  }

  get callsMade(): number {
    return this.callIndex;
  }

  async augment(spec: ArraySpec): Promise<AugmentResult> {
    const seed = deriveCallSeed(this.masterSeed, this.callIndex++);
    return augmentArray(spec, this.config, seed);
  }

  async mask(spec: ArraySpec, options: MaskOptions): Promise<Float32Array> {
    const seed = deriveCallSeed(this.masterSeed, this.callIndex++);
    return maskArray(spec, options, seed);
  }
}
