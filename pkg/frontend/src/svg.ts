// Small SVG string helpers shared by the panel builders. No DOM, no
// plotting library: the files are built as plain strings so the output
// is identical everywhere node runs.

export function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

/** Round-number ticks covering [min, max], roughly `count` of them. */
export function niceTicks(min: number, max: number, count: number): number[] {
  const range = max - min || 1;
  const rough = range / count;
  const mag = Math.pow(10, Math.floor(Math.log10(rough)));
  const step = [1, 2, 5, 10].map((m) => m * mag).find((n) => n >= rough) ?? rough;
  const start = Math.ceil(min / step) * step;
  const ticks: number[] = [];
  for (let v = start; v <= max + step * 1e-9; v += step) {
    // clean up float drift so labels print as 0.3, not 0.30000000000000004
    ticks.push(Number(v.toPrecision(12)));
  }
  return ticks;
}

/** Powers of ten spanning [min, max], for log-scale axes. */
export function decadeTicks(min: number, max: number): number[] {
  const lo = Math.floor(Math.log10(min));
  const hi = Math.ceil(Math.log10(max));
  const ticks: number[] = [];
  for (let e = lo; e <= hi; e++) ticks.push(Math.pow(10, e));
  return ticks;
}

export function fmtTick(v: number): string {
  if (v !== 0 && (Math.abs(v) < 1e-3 || Math.abs(v) >= 1e4)) {
    return v.toExponential(0).replace("e+", "e").replace(/e(-?)0*(\d)/, "e$1$2");
  }
  return String(v);
}

/** points="" attribute for a polyline. */
export function pointsAttr(pts: Array<[number, number]>): string {
  return pts.map(([x, y]) => `${x.toFixed(2)},${y.toFixed(2)}`).join(" ");
}

export const PALETTE = ["#4361ee", "#e63946", "#2d6a4f", "#f4a261", "#7209b7", "#0096c7"];
export const HMC_COLOR = "#000000";
