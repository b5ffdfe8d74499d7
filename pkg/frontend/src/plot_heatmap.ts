/** Verified logical-qubit fidelity as a heatmap over elapsed time and
 * modulator voltage noise. */

import { readFidelityCsv, type FidelityRow } from "./csv.js";
import { heatmap } from "./svg.js";
import { cliArgs, writeChart } from "./render.js";

export function heatmapChart(rows: FidelityRow[]): string {
  const xs = [...new Set(rows.map((r) => r.elapsed_ns))].sort((a, b) => a - b);
  const ys = [...new Set(rows.map((r) => r.sigma))].sort((a, b) => a - b);
  const grid = new Map<string, number>();
  for (const r of rows) grid.set(`${r.sigma}|${r.elapsed_ns}`, r.mean_fidelity);
  const lo = Math.min(...rows.map((r) => r.mean_fidelity), 0.99);
  return heatmap({
    title: "Mean verified fidelity vs time and voltage noise",
    xLabel: "elapsed time (ns, one column per cycle)",
    yLabel: "voltage noise sigma (V)",
    xValues: xs,
    yValues: ys,
    cell: (xi, yi) => grid.get(`${ys[yi]}|${xs[xi]}`),
    lo,
    meta: "identity pattern; fidelity averaged over surviving trials",
  });
}

async function main() {
  const { input, output } = cliArgs(process.argv.slice(2));
  await writeChart(heatmapChart(readFidelityCsv(input)), output);
  console.log(`wrote ${output}`);
}

if (process.argv[1] && process.argv[1].endsWith("plot_heatmap.ts")) {
  main().catch((e) => {
    console.error(`plot_heatmap: ${e.message}`);
    process.exit(2);
  });
}
