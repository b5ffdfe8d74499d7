import { existsSync, mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

import { readFidelityCsv, readSweepCsv } from "../src/csv.js";
import { depthChart } from "../src/plot_depth.js";
import { writesChart } from "../src/plot_writes.js";
import { heatmapChart } from "../src/plot_heatmap.js";
import { fidelityColor } from "../src/svg.js";
import { writeChart } from "../src/render.js";

const DATA = join(__dirname, "..", "..", "data");
const out = mkdtempSync(join(tmpdir(), "figs-"));

describe("committed fixtures", () => {
  it("parses the sweep tables", () => {
    for (const alg of ["gbfs", "ibfs"]) {
      const rows = readSweepCsv(join(DATA, `sweep_${alg}.csv`));
      expect(rows.length).toBeGreaterThan(10);
      expect(rows.every((r) => r.alg === alg)).toBe(true);
    }
  });

  it("parses the fidelity table", () => {
    const rows = readFidelityCsv(join(DATA, "fidelity_heatmap.csv"));
    expect(rows.length).toBeGreaterThan(50);
    expect(new Set(rows.map((r) => r.sigma)).size).toBeGreaterThan(3);
  });
});

describe("depth figure", () => {
  it("regenerates from the committed CSVs, saturating at the width cap", async () => {
    const rows = readSweepCsv(join(DATA, "sweep_gbfs.csv"));
    const svg = depthChart(rows);
    expect(svg).toContain("boosted fusion p=0.75");
    expect(svg).toContain("log10");
    const highP = rows.filter((r) => r.p === 1.0);
    expect(highP.every((r) => r.mean_depth === r.W)).toBe(true);
    const path = join(out, "depth.png");
    await writeChart(svg, path);
    expect(existsSync(path)).toBe(true);
    expect(readFileSync(path).subarray(1, 4).toString()).toBe("PNG");
  });

  it("shows the incremental search far below the global one", () => {
    const g = readSweepCsv(join(DATA, "sweep_gbfs.csv"));
    const i = readSweepCsv(join(DATA, "sweep_ibfs.csv"));
    const at = (rows: typeof g, p: number, B: number) =>
      rows.find((r) => r.p === p && r.B === B)!.mean_depth;
    for (const p of [0.7, 0.8, 0.9]) {
      expect(at(i, p, 5)).toBeLessThan(0.5 * at(g, p, 5));
    }
    expect(() => depthChart(i)).not.toThrow();
  });

  it("rejects malformed and empty CSVs", () => {
    const bad = join(out, "bad.csv");
    writeFileSync(bad, "a,b,c\n1,2,3\n");
    expect(() => readSweepCsv(bad)).toThrow(/missing column/);
    const empty = join(out, "empty.csv");
    writeFileSync(empty, "");
    expect(() => readSweepCsv(empty)).toThrow(/empty/);
  });
});

describe("writes figure", () => {
  it("approaches the asymptote guides", async () => {
    const g = readSweepCsv(join(DATA, "sweep_gbfs.csv"));
    const svg = writesChart(g);
    expect(svg).toContain("2BH = 200");
    const top = g.find((r) => r.p === 1.0 && r.B === 5)!;
    expect(top.mean_pred_writes).toBeGreaterThan(190);
    expect(top.mean_pred_writes).toBeLessThan(210);
    const i = readSweepCsv(join(DATA, "sweep_ibfs.csv"));
    const isvg = writesChart(i);
    expect(isvg).toContain("H = 20");
    const itop = i.find((r) => r.p === 1.0 && r.B === 5)!;
    expect(Math.abs(itop.mean_pred_writes - 20)).toBeLessThan(2);
    await writeChart(svg, join(out, "writes.svg"));
    expect(existsSync(join(out, "writes.svg"))).toBe(true);
  });

  it("renders a single-row table as a single marker", () => {
    const single = join(out, "single.csv");
    writeFileSync(single,
      "alg,p,B,H,W,reps,mean_depth,mean_pred_writes,max_pred_writes\n" +
      "gbfs,0.75,5,20,2000,10,1000,193,199\n");
    const svg = writesChart(readSweepCsv(single));
    expect((svg.match(/<circle/g) ?? []).length).toBe(1);
  });
});

describe("fidelity heatmap", () => {
  it("renders the sigma=0 row as uniform fidelity 1", async () => {
    const rows = readFidelityCsv(join(DATA, "fidelity_heatmap.csv"));
    const svg = heatmapChart(rows);
    const zeroRow = [...svg.matchAll(/<rect class="cell" data-x="[^"]*" data-y="0" data-v="([0-9.]+)" [^>]*fill="([^"]+)"/g)];
    expect(zeroRow.length).toBeGreaterThan(10);
    const fills = new Set(zeroRow.map((m) => m[2]));
    expect(fills.size).toBe(1);
    expect([...fills][0]).toBe(fidelityColor(1.0, Math.min(...rows.map((r) => r.mean_fidelity), 0.99)));
    for (const m of zeroRow) {
      expect(Number(m[1])).toBeCloseTo(1.0, 6);
    }
    await writeChart(svg, join(out, "heat.png"));
    expect(existsSync(join(out, "heat.png"))).toBe(true);
  });

  it("fidelity decreases with sigma at fixed elapsed time", () => {
    const rows = readFidelityCsv(join(DATA, "fidelity_heatmap.csv"));
    const sigmas = [...new Set(rows.map((r) => r.sigma))].sort((a, b) => a - b);
    const t = Math.max(...rows.map((r) => r.elapsed_ns));
    const at = (s: number) =>
      rows.find((r) => r.sigma === s && r.elapsed_ns === t)!.mean_fidelity;
    for (let i = 1; i < sigmas.length; i++) {
      expect(at(sigmas[i])).toBeLessThan(at(sigmas[i - 1]) + 1e-9);
    }
  });

  it("rejects a table without the sigma column", () => {
    const bad = join(out, "nosigma.csv");
    writeFileSync(bad, "elapsed_ns,mean_fidelity\n0,1\n");
    expect(() => readFidelityCsv(bad)).toThrow(/missing column sigma/);
  });

  it("is deterministic: same CSV, identical bytes", () => {
    const rows = readFidelityCsv(join(DATA, "fidelity_heatmap.csv"));
    expect(heatmapChart(rows)).toBe(heatmapChart(rows));
  });
});
