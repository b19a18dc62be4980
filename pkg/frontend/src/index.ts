export {
  augmentArray,
  maskArray,
  deriveCallSeed,
  BoundAugmenter,
} from "./augmenter.js";
export type {
  ArraySpec,
  FilterConfig,
  MaskOptions,
  AugmentResult,
  AugmentPresetName,
  Seed,
} from "./augmenter.js";
export { encodeLmsp, decodeLmsp, LmspFormatError, LMSP_HEADER_SIZE, LMSP_VERSION } from "./lmsp.js";
export type { Spectrogram } from "./lmsp.js";
export { parseCurveCsv } from "./csv.js";
export { PRESETS, PRESET_NAMES, AUGMENT_PRESET_NAMES } from "./presets.js";
export type { PresetJson, FilterConfigJson } from "./presets.js";
export { runCli, backendInterpreter } from "./runner.js";
export type { CliResult, BackendInterpreter } from "./runner.js";
