/**
 * LMSP binary spectrogram container.
 *
 * Layout (little-endian): magic "LMSP", version u16 = 1, n_frames u32,
 * n_mels u32, sample_rate u32, hop_length u32, then n_frames * n_mels
 * float32 values, time-major.
 */

export const LMSP_HEADER_SIZE = 22;
export const LMSP_VERSION = 1;

const MAGIC = [0x4c, 0x4d, 0x53, 0x50]; // "LMSP"

export interface Spectrogram {
  nFrames: number;
  nMels: number;
  sampleRate: number;
  hopLength: number;
  /** time-major values, length nFrames * nMels */
  values: Float32Array;
}

export class LmspFormatError extends Error {}

export function encodeLmsp(spec: Spectrogram): Uint8Array {
  const { nFrames, nMels, sampleRate, hopLength, values } = spec;
  if (nFrames < 1 || nMels < 1) {
    throw new LmspFormatError(`invalid dims ${nFrames}x${nMels}`);
  }
  if (values.length !== nFrames * nMels) {
    throw new LmspFormatError(
      `values length ${values.length} does not match ${nFrames}x${nMels}`
    );
  }
  const out = new Uint8Array(LMSP_HEADER_SIZE + values.length * 4);
  const view = new DataView(out.buffer);
  MAGIC.forEach((byte, i) => view.setUint8(i, byte));
  view.setUint16(4, LMSP_VERSION, true);
  view.setUint32(6, nFrames, true);
  view.setUint32(10, nMels, true);
  view.setUint32(14, sampleRate, true);
  view.setUint32(18, hopLength, true);
  for (let i = 0; i < values.length; i++) {
    view.setFloat32(LMSP_HEADER_SIZE + 4 * i, values[i], true);
  }
  return out;
}

export function decodeLmsp(bytes: Uint8Array): Spectrogram {
  if (bytes.length < LMSP_HEADER_SIZE) {
    throw new LmspFormatError(
      `file is ${bytes.length} bytes, header needs ${LMSP_HEADER_SIZE}`
    );
  }
  const view = new DataView(bytes.buffer, bytes.byteOffset, bytes.byteLength);
  for (let i = 0; i < 4; i++) {
    if (view.getUint8(i) !== MAGIC[i]) {
      throw new LmspFormatError("bad magic");
    }
  }
  const version = view.getUint16(4, true);
  if (version !== LMSP_VERSION) {
    throw new LmspFormatError(`unsupported version ${version}`);
  }
  const nFrames = view.getUint32(6, true);
  const nMels = view.getUint32(10, true);
  const sampleRate = view.getUint32(14, true);
  const hopLength = view.getUint32(18, true);
  const expected = nFrames * nMels * 4;
  if (bytes.length - LMSP_HEADER_SIZE !== expected) {
    throw new LmspFormatError(
      `payload is ${bytes.length - LMSP_HEADER_SIZE} bytes, header promises ${expected}`
    );
  }
  const values = new Float32Array(nFrames * nMels);
  for (let i = 0; i < values.length; i++) {
    values[i] = view.getFloat32(LMSP_HEADER_SIZE + 4 * i, true);
  }
  return { nFrames, nMels, sampleRate, hopLength, values };
}
