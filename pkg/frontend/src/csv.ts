/** Curve CSV parsing: header "bin,weight_db", one row per mel bin. */

export function parseCurveCsv(text: string): number[] {
  const lines = text.split("\n").filter((line) => line.length > 0);
  if (lines.length === 0 || lines[0] !== "bin,weight_db") {
    throw new Error(`expected header "bin,weight_db", got ${JSON.stringify(lines[0])}`);
  }
  const weights: number[] = [];
  for (let i = 1; i < lines.length; i++) {
    const comma = lines[i].indexOf(",");
    const bin = Number(lines[i].slice(0, comma));
    if (bin !== i - 1) {
      throw new Error(`bins must be consecutive from 0, got ${bin} at row ${i - 1}`);
    }
    const weight = Number(lines[i].slice(comma + 1));
    if (!Number.isFinite(weight)) {
      throw new Error(`non-numeric weight at row ${i - 1}`);
    }
    weights.push(weight);
  }
  return weights;
}
