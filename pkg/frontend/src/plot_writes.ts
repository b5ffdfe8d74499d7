/** Average predecessor writes per block search vs edge probability, one
 * curve per block width, with the high-p asymptote guides (2BH for the
 * global search, H for the incremental one). */

import { groupBy, readSweepCsv, type SweepRow } from "./csv.js";
import { linePlot, PALETTE, type Guide, type Series } from "./svg.js";
import { cliArgs, writeChart } from "./render.js";

export function writesChart(rows: SweepRow[]): string {
  const algs = [...new Set(rows.map((r) => r.alg))].sort();
  const H = rows[0].H;
  const byB = [...groupBy(rows, (r) => `${r.alg} B=${r.B}`).entries()].sort();
  const series: Series[] = byB.map(([label, rs], i) => ({
    label,
    color: PALETTE[i % PALETTE.length],
    points: rs.map((r) => [r.p, r.mean_pred_writes] as [number, number]),
  }));
  const guides: Guide[] = [];
  for (const alg of algs) {
    if (alg === "ibfs") {
      guides.push({ axis: "y", value: H, label: `H = ${H}` });
    } else {
      for (const B of new Set(rows.filter((r) => r.alg === alg).map((r) => r.B))) {
        guides.push({ axis: "y", value: 2 * B * H, label: `2BH = ${2 * B * H}` });
      }
    }
  }
  return linePlot({
    title: `Predecessor writes per block search (${algs.join("+")}, H=${H})`,
    xLabel: "edge probability p",
    yLabel: "mean predecessor writes per cycle",
    series,
    guides,
    meta: "asymptote guides: 2BH (global search), H (incremental search)",
  });
}

async function main() {
  const { input, output } = cliArgs(process.argv.slice(2));
  await writeChart(writesChart(readSweepCsv(input)), output);
  console.log(`wrote ${output}`);
}

if (process.argv[1] && process.argv[1].endsWith("plot_writes.ts")) {
  main().catch((e) => {
    console.error(`plot_writes: ${e.message}`);
    process.exit(2);
  });
}
