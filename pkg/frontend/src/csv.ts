/** CSV loading for the emulator's output tables. */

import { readFileSync } from "node:fs";

export interface SweepRow {
  alg: string;
  p: number;
  B: number;
  H: number;
  W: number;
  reps: number;
  mean_depth: number;
  mean_pred_writes: number;
  max_pred_writes: number;
}

export interface FidelityRow {
  sigma: number;
  elapsed_ns: number;
  mean_fidelity: number;
}

const SWEEP_HEADER = [
  "alg", "p", "B", "H", "W", "reps",
  "mean_depth", "mean_pred_writes", "max_pred_writes",
];

const FIDELITY_HEADER = ["sigma", "elapsed_ns", "mean_fidelity"];

function parseTable(text: string, expected: string[]): Record<string, string>[] {
  const lines = text.split(/\r?\n/).filter((ln) => ln.trim().length > 0);
  if (lines.length === 0) throw new Error("empty CSV");
  const header = lines[0].split(",").map((h) => h.trim());
  for (const col of expected) {
    if (!header.includes(col)) throw new Error(`missing column ${col}`);
  }
  if (lines.length === 1) throw new Error("CSV has a header but no rows");
  return lines.slice(1).map((ln, i) => {
    const cells = ln.split(",");
    if (cells.length !== header.length) {
      throw new Error(`row ${i + 1} has ${cells.length} cells, expected ${header.length}`);
    }
    const row: Record<string, string> = {};
    header.forEach((h, j) => (row[h] = cells[j].trim()));
    return row;
  });
}

function num(row: Record<string, string>, key: string): number {
  const v = Number(row[key]);
  if (!Number.isFinite(v)) throw new Error(`non-numeric ${key}: ${row[key]}`);
  return v;
}

export function readSweepCsv(path: string): SweepRow[] {
  return parseTable(readFileSync(path, "utf8"), SWEEP_HEADER).map((r) => ({
    alg: r.alg,
    p: num(r, "p"),
    B: num(r, "B"),
    H: num(r, "H"),
    W: num(r, "W"),
    reps: num(r, "reps"),
    mean_depth: num(r, "mean_depth"),
    mean_pred_writes: num(r, "mean_pred_writes"),
    max_pred_writes: num(r, "max_pred_writes"),
  }));
}

export function readFidelityCsv(path: string): FidelityRow[] {
  return parseTable(readFileSync(path, "utf8"), FIDELITY_HEADER).map((r) => ({
    sigma: num(r, "sigma"),
    elapsed_ns: num(r, "elapsed_ns"),
    mean_fidelity: num(r, "mean_fidelity"),
  }));
}

export function groupBy<T>(rows: T[], key: (r: T) => string): Map<string, T[]> {
  const out = new Map<string, T[]>();
  for (const r of rows) {
    const k = key(r);
    const bucket = out.get(k);
    if (bucket) bucket.push(r);
    else out.set(k, [r]);
  }
  return out;
}
