/** Average achieved path depth vs edge probability, one curve per block
 * width, with the boosted-fusion reference line at p = 0.75. */

import { groupBy, readSweepCsv, type SweepRow } from "./csv.js";
import { linePlot, PALETTE, type Series } from "./svg.js";
import { cliArgs, writeChart } from "./render.js";

export function depthChart(rows: SweepRow[]): string {
  const algs = [...new Set(rows.map((r) => r.alg))].sort().join("+");
  const W = rows[0].W;
  const byB = [...groupBy(rows, (r) => `${r.alg} B=${r.B}`).entries()].sort();
  const series: Series[] = byB.map(([label, rs], i) => ({
    label,
    color: PALETTE[i % PALETTE.length],
    points: rs.map((r) => [r.p, Math.max(r.mean_depth, 1)] as [number, number]),
  }));
  return linePlot({
    title: `Average maximum path depth (${algs}, H=${rows[0].H})`,
    xLabel: "edge probability p",
    yLabel: "mean path depth",
    series,
    logY: true,
    yDomain: [1, W],
    guides: [
      { axis: "x", value: 0.75, label: "boosted fusion p=0.75" },
      { axis: "y", value: W, label: `width limit ${W}`, dash: true },
    ],
    meta: "y-axis: log10; depth saturates at the simulated cluster width",
  });
}

async function main() {
  const { input, output } = cliArgs(process.argv.slice(2));
  await writeChart(depthChart(readSweepCsv(input)), output);
  console.log(`wrote ${output}`);
}

if (process.argv[1] && process.argv[1].endsWith("plot_depth.ts")) {
  main().catch((e) => {
    console.error(`plot_depth: ${e.message}`);
    process.exit(2);
  });
}
