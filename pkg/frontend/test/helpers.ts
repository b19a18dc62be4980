import { execFile } from "node:child_process";
import { promisify } from "node:util";

import { ArraySpec } from "../src/augmenter.js";
import { backendInterpreter } from "../src/runner.js";

const execFileAsync = promisify(execFile);

export type TestSpec = ArraySpec & { sampleRate: number; hopLength: number };

/**
 * Per-item seeds the backend's batch command derives from a master seed,
 * fetched in one interpreter call via the documented split function.
 */
export async function batchItemSeeds(masterSeeds: number[], count: number): Promise<bigint[][]> {
  const { python, env } = backendInterpreter();
  const code = [
    "import sys",
    "from filteraug.rng import split_seed",
    "masters = [int(m) for m in sys.argv[1].split(',')]",
    "count = int(sys.argv[2])",
    "for m in masters:",
    "    print(','.join(str(split_seed(m, i)) for i in range(count)))",
  ].join("\n");
  const { stdout } = await execFileAsync(
    python,
    ["-c", code, masterSeeds.join(","), String(count)],
    { env }
  );
  return stdout
    .trim()
    .split("\n")
    .map((line) => line.split(",").map((s) => BigInt(s)));
}

/** mulberry32: small deterministic PRNG for test data. */
export function makeRng(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state + 0x6d2b79f5) >>> 0;
    let t = state;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function randomSpec(
  rng: () => number,
  nFrames: number,
  nMels: number
): TestSpec {
  const values = new Float32Array(nFrames * nMels);
  for (let i = 0; i < values.length; i++) {
    values[i] = -80 + 80 * rng();
  }
  return { values, nFrames, nMels, sampleRate: 16000, hopLength: 256 };
}

export async function mapLimit<T, R>(
  items: T[],
  limit: number,
  fn: (item: T, index: number) => Promise<R>
): Promise<R[]> {
  const results = new Array<R>(items.length);
  let next = 0;
  async function worker(): Promise<void> {
    while (next < items.length) {
      const index = next++;
      results[index] = await fn(items[index], index);
    }
  }
  await Promise.all(Array.from({ length: Math.min(limit, items.length) }, worker));
  return results;
}
