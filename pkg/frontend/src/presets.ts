/**
 * Preset hyperparameters, mirroring the backing CLI's resolved configs
 * exactly as `filteraug augment --preset <name> --print-config` reports them.
 */

export interface FilterConfigJson {
  type: "step" | "linear" | "mixed";
  db_range?: [number, number];
  band_number_range?: [number, number];
  min_bandwidth?: number;
  mix_ratio?: number;
  step?: FilterConfigJson;
  linear?: FilterConfigJson;
}

export interface PresetJson {
  name: string;
  filter: FilterConfigJson | null;
  freq_mask_ratio: number | null;
  time_mask_range: [number, number] | null;
}

const SED_STEP_FILTER: FilterConfigJson = {
  type: "step",
  db_range: [-6.0, 6.0],
  band_number_range: [2, 5],
  min_bandwidth: 4,
};

const SED_LINEAR_FILTER: FilterConfigJson = {
  type: "linear",
  db_range: [-6.0, 6.0],
  band_number_range: [3, 6],
  min_bandwidth: 6,
};

export const PRESETS: Record<string, PresetJson> = {
  "sed-step": {
    name: "sed-step",
    filter: SED_STEP_FILTER,
    freq_mask_ratio: null,
    time_mask_range: null,
  },
  "sed-linear": {
    name: "sed-linear",
    filter: SED_LINEAR_FILTER,
    freq_mask_ratio: null,
    time_mask_range: null,
  },
  "sed-mixed": {
    name: "sed-mixed",
    filter: {
      type: "mixed",
      mix_ratio: 0.7,
      step: SED_STEP_FILTER,
      linear: SED_LINEAR_FILTER,
    },
    freq_mask_ratio: null,
    time_mask_range: null,
  },
  "sv-linear": {
    name: "sv-linear",
    filter: {
      type: "linear",
      db_range: [-1.5, 1.5],
      band_number_range: [3, 6],
      min_bandwidth: 6,
    },
    freq_mask_ratio: null,
    time_mask_range: null,
  },
  "freq-mask": {
    name: "freq-mask",
    filter: null,
    freq_mask_ratio: 0.0625,
    time_mask_range: null,
  },
};

export const AUGMENT_PRESET_NAMES = ["sed-step", "sed-linear", "sed-mixed", "sv-linear"] as const;
export const PRESET_NAMES = [...AUGMENT_PRESET_NAMES, "freq-mask"] as const;
