/** Write a chart to disk as SVG or rasterized PNG, by file extension. */

import { writeFileSync } from "node:fs";

export async function writeChart(svg: string, outPath: string): Promise<void> {
  if (outPath.endsWith(".png")) {
    const { Resvg } = await import("@resvg/resvg-js");
    const png = new Resvg(svg, { fitTo: { mode: "width", value: 1280 } })
      .render()
      .asPng();
    writeFileSync(outPath, png);
  } else {
    writeFileSync(outPath, svg);
  }
}

export function cliArgs(argv: string[]): { input: string; output: string } {
  let input = "";
  let output = "";
  for (let i = 0; i < argv.length; i++) {
    if (argv[i] === "--in") input = argv[++i] ?? "";
    else if (argv[i] === "--out") output = argv[++i] ?? "";
  }
  if (!input || !output) {
    throw new Error("usage: --in <csv> --out <png|svg>");
  }
  return { input, output };
}
