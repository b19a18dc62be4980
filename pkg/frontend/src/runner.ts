/** Locates and invokes the backing Python CLI. */

import { execFile } from "node:child_process";
import { delimiter, resolve } from "node:path";
import { fileURLToPath } from "node:url";
import { promisify } from "node:util";

const execFileAsync = promisify(execFile);

// dist/src/runner.js -> frontend/ -> repo root, where src/ holds the package
const FRONTEND_ROOT = resolve(fileURLToPath(import.meta.url), "..", "..", "..");
const BACKEND_SRC = resolve(FRONTEND_ROOT, "..", "src");

export interface CliResult {
  stdout: string;
  stderr: string;
}

export interface BackendInterpreter {
  python: string;
  env: NodeJS.ProcessEnv;
}

/**
 * The interpreter and environment used to reach the backend: python3 (or
 * FILTERAUG_PYTHON) with the backend package directory prepended to
 * PYTHONPATH so a checkout works without installation.
 */
export function backendInterpreter(): BackendInterpreter {
  const python = process.env.FILTERAUG_PYTHON ?? "python3";
  const existing = process.env.PYTHONPATH;
  const pythonPath = existing ? `${BACKEND_SRC}${delimiter}${existing}` : BACKEND_SRC;
  return { python, env: { ...process.env, PYTHONPATH: pythonPath } };
}

/** Run `filteraug <args>` via `python -m filteraug`. */
export async function runCli(args: string[]): Promise<CliResult> {
  const { python, env } = backendInterpreter();
  try {
    const { stdout, stderr } = await execFileAsync(python, ["-m", "filteraug", ...args], {
      env,
      maxBuffer: 64 * 1024 * 1024,
    });
    return { stdout, stderr };
  } catch (err) {
    const detail = err as { code?: number; stderr?: string; message: string };
    const stderr = detail.stderr?.trim();
    throw new Error(
      `filteraug ${args[0]} failed (exit ${detail.code ?? "?"}): ${stderr || detail.message}`
    );
  }
}
