/** Minimal deterministic SVG chart building: line plots and heatmaps.
 *
 * Output is a pure function of the input data - fixed styling, no
 * timestamps - so re-rendering the same CSV yields identical bytes.
 */

export interface Series {
  label: string;
  color: string;
  points: Array<[number, number]>;
}

export interface Guide {
  axis: "x" | "y";
  value: number;
  label: string;
  dash?: boolean;
}

export interface LinePlotSpec {
  title: string;
  xLabel: string;
  yLabel: string;
  series: Series[];
  guides?: Guide[];
  logY?: boolean;
  yDomain?: [number, number];
  meta?: string;
}

export const PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd",
  "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"];

const W = 640;
const H = 440;
const M = { left: 72, right: 150, top: 44, bottom: 52 };

const fmt = (v: number): string => {
  const s = v.toPrecision(6);
  return String(Number(s));
};

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

function ticks(lo: number, hi: number, n = 6): number[] {
  if (!(hi > lo)) return [lo];
  const span = hi - lo;
  const step0 = Math.pow(10, Math.floor(Math.log10(span / n)));
  const err = span / (n * step0);
  const step = step0 * (err >= 7.5 ? 10 : err >= 3.5 ? 5 : err >= 1.5 ? 2 : 1);
  const out: number[] = [];
  for (let v = Math.ceil(lo / step) * step; v <= hi + 1e-12; v += step) {
    out.push(Number(v.toPrecision(12)));
  }
  return out;
}

function logTicks(lo: number, hi: number): number[] {
  const out: number[] = [];
  for (let e = Math.floor(Math.log10(lo)); e <= Math.ceil(Math.log10(hi)); e++) {
    const v = Math.pow(10, e);
    if (v >= lo / 1.0001 && v <= hi * 1.0001) out.push(v);
  }
  return out.length >= 2 ? out : [lo, hi];
}

export function linePlot(spec: LinePlotSpec): string {
  const pts = spec.series.flatMap((s) => s.points);
  if (pts.length === 0) throw new Error("nothing to plot");
  const xs = pts.map((p) => p[0]);
  let ys = pts.map((p) => p[1]);
  const xLo = Math.min(...xs);
  const xHi = Math.max(...xs);
  let [yLo, yHi] = spec.yDomain ?? [Math.min(...ys), Math.max(...ys)];
  if (spec.logY) {
    const floor = Math.min(...ys.filter((v) => v > 0), 1);
    yLo = Math.max(yLo, Math.min(floor, 1));
    ys = ys.map((v) => Math.max(v, yLo));
  }
  if (yHi <= yLo) yHi = yLo + 1;
  const px = (x: number) =>
    M.left + ((x - xLo) / (xHi - xLo || 1)) * (W - M.left - M.right);
  const py = (y: number) => {
    const t = spec.logY
      ? (Math.log10(Math.max(y, yLo)) - Math.log10(yLo)) /
        (Math.log10(yHi) - Math.log10(yLo) || 1)
      : (y - yLo) / (yHi - yLo || 1);
    return H - M.bottom - t * (H - M.top - M.bottom);
  };

  const parts: string[] = [];
  parts.push(`<svg xmlns="http://www.w3.org/2000/svg" width="${W}" height="${H}" viewBox="0 0 ${W} ${H}" font-family="Helvetica,Arial,sans-serif">`);
  if (spec.meta) parts.push(`<desc>${esc(spec.meta)}</desc>`);
  parts.push(`<rect width="${W}" height="${H}" fill="white"/>`);
  parts.push(`<text x="${W / 2}" y="24" text-anchor="middle" font-size="15">${esc(spec.title)}</text>`);

  const yTicks = spec.logY ? logTicks(yLo, yHi) : ticks(yLo, yHi);
  for (const v of yTicks) {
    const y = py(v);
    parts.push(`<line x1="${M.left}" y1="${fmt(y)}" x2="${W - M.right}" y2="${fmt(y)}" stroke="#e0e0e0"/>`);
    parts.push(`<text x="${M.left - 8}" y="${fmt(y + 4)}" text-anchor="end" font-size="11">${fmt(v)}</text>`);
  }
  for (const v of ticks(xLo, xHi)) {
    const x = px(v);
    parts.push(`<line x1="${fmt(x)}" y1="${M.top}" x2="${fmt(x)}" y2="${H - M.bottom}" stroke="#f0f0f0"/>`);
    parts.push(`<text x="${fmt(x)}" y="${H - M.bottom + 18}" text-anchor="middle" font-size="11">${fmt(v)}</text>`);
  }
  parts.push(`<rect x="${M.left}" y="${M.top}" width="${W - M.left - M.right}" height="${H - M.top - M.bottom}" fill="none" stroke="#333"/>`);

  for (const g of spec.guides ?? []) {
    const dash = g.dash === false ? "" : ` stroke-dasharray="6 4"`;
    if (g.axis === "x") {
      const x = fmt(px(g.value));
      parts.push(`<line x1="${x}" y1="${M.top}" x2="${x}" y2="${H - M.bottom}" stroke="#555"${dash}/>`);
      parts.push(`<text x="${x}" y="${M.top - 6}" text-anchor="middle" font-size="10" fill="#555">${esc(g.label)}</text>`);
    } else {
      const y = fmt(py(g.value));
      parts.push(`<line x1="${M.left}" y1="${y}" x2="${W - M.right}" y2="${y}" stroke="#555"${dash}/>`);
      parts.push(`<text x="${W - M.right + 4}" y="${y}" font-size="10" fill="#555">${esc(g.label)}</text>`);
    }
  }

  spec.series.forEach((s, i) => {
    const pathPts = [...s.points].sort((a, b) => a[0] - b[0]);
    const d = pathPts
      .map(([x, y], j) => `${j === 0 ? "M" : "L"}${fmt(px(x))},${fmt(py(y))}`)
      .join(" ");
    parts.push(`<path d="${d}" fill="none" stroke="${s.color}" stroke-width="1.8"/>`);
    for (const [x, y] of pathPts) {
      parts.push(`<circle cx="${fmt(px(x))}" cy="${fmt(py(y))}" r="2.6" fill="${s.color}"/>`);
    }
    const ly = M.top + 16 + i * 16;
    parts.push(`<line x1="${W - M.right + 10}" y1="${ly - 4}" x2="${W - M.right + 30}" y2="${ly - 4}" stroke="${s.color}" stroke-width="2"/>`);
    parts.push(`<text x="${W - M.right + 34}" y="${ly}" font-size="11">${esc(s.label)}</text>`);
  });

  parts.push(`<text x="${(M.left + W - M.right) / 2}" y="${H - 12}" text-anchor="middle" font-size="12">${esc(spec.xLabel)}</text>`);
  parts.push(`<text x="18" y="${(M.top + H - M.bottom) / 2}" text-anchor="middle" font-size="12" transform="rotate(-90 18 ${(M.top + H - M.bottom) / 2})">${esc(spec.yLabel)}</text>`);
  parts.push("</svg>");
  return parts.join("\n");
}

/** Fidelity color scale: 1.0 maps to the exact top color. */
export function fidelityColor(f: number, lo: number): string {
  const t = Math.max(0, Math.min(1, (f - lo) / (1 - lo || 1)));
  // dark blue (low) -> yellow (high)
  const r = Math.round(40 + t * (253 - 40));
  const g = Math.round(40 + t * (231 - 40));
  const b = Math.round(120 + t * (37 - 120));
  return `rgb(${r},${g},${b})`;
}

export interface HeatmapSpec {
  title: string;
  xLabel: string;
  yLabel: string;
  xValues: number[];
  yValues: number[];
  cell: (xi: number, yi: number) => number | undefined;
  lo: number;
  meta?: string;
}

export function heatmap(spec: HeatmapSpec): string {
  if (spec.xValues.length === 0 || spec.yValues.length === 0) {
    throw new Error("nothing to plot");
  }
  const plotW = W - M.left - M.right;
  const plotH = H - M.top - M.bottom;
  const cw = plotW / spec.xValues.length;
  const ch = plotH / spec.yValues.length;
  const parts: string[] = [];
  parts.push(`<svg xmlns="http://www.w3.org/2000/svg" width="${W}" height="${H}" viewBox="0 0 ${W} ${H}" font-family="Helvetica,Arial,sans-serif">`);
  if (spec.meta) parts.push(`<desc>${esc(spec.meta)}</desc>`);
  parts.push(`<rect width="${W}" height="${H}" fill="white"/>`);
  parts.push(`<text x="${W / 2}" y="24" text-anchor="middle" font-size="15">${esc(spec.title)}</text>`);
  spec.yValues.forEach((yv, yi) => {
    spec.xValues.forEach((xv, xi) => {
      const v = spec.cell(xi, yi);
      if (v === undefined) return;
      const x = M.left + xi * cw;
      const y = M.top + yi * ch;
      parts.push(`<rect class="cell" data-x="${xv}" data-y="${yv}" data-v="${v.toFixed(6)}" x="${fmt(x)}" y="${fmt(y)}" width="${fmt(cw + 0.5)}" height="${fmt(ch + 0.5)}" fill="${fidelityColor(v, spec.lo)}"/>`);
    });
    parts.push(`<text x="${M.left - 8}" y="${fmt(M.top + (yi + 0.65) * ch)}" text-anchor="end" font-size="10">${fmt(yv)}</text>`);
  });
  spec.xValues.forEach((xv, xi) => {
    if (xi % Math.ceil(spec.xValues.length / 10) !== 0) return;
    parts.push(`<text x="${fmt(M.left + (xi + 0.5) * cw)}" y="${H - M.bottom + 16}" text-anchor="middle" font-size="10">${fmt(xv)}</text>`);
  });
  // color bar
  const barX = W - M.right + 24;
  for (let i = 0; i < 40; i++) {
    const v = spec.lo + ((39 - i) / 39) * (1 - spec.lo);
    parts.push(`<rect x="${barX}" y="${fmt(M.top + (i * plotH) / 40)}" width="16" height="${fmt(plotH / 40 + 0.5)}" fill="${fidelityColor(v, spec.lo)}"/>`);
  }
  parts.push(`<text x="${barX + 20}" y="${M.top + 8}" font-size="10">1</text>`);
  parts.push(`<text x="${barX + 20}" y="${H - M.bottom}" font-size="10">${fmt(spec.lo)}</text>`);
  parts.push(`<rect x="${M.left}" y="${M.top}" width="${plotW}" height="${plotH}" fill="none" stroke="#333"/>`);
  parts.push(`<text x="${(M.left + W - M.right) / 2}" y="${H - 12}" text-anchor="middle" font-size="12">${esc(spec.xLabel)}</text>`);
  parts.push(`<text x="18" y="${(M.top + H - M.bottom) / 2}" text-anchor="middle" font-size="12" transform="rotate(-90 18 ${(M.top + H - M.bottom) / 2})">${esc(spec.yLabel)}</text>`);
  parts.push("</svg>");
  return parts.join("\n");
}
