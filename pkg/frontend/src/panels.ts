/**
 * The three figure panels, rebuilt from the driver's CSV output:
 *
 *   sphere   - 3D scatter of the chain positions pushed onto the unit
 *              sphere (g applied to the north pole). First sample red,
 *              the next 50 green, the rest a faint neutral cloud.
 *   mmd      - per-h convergence curves on a log y-axis, HMC in black.
 *   autocorr - per-h feature autocorrelation curves, HMC in black.
 *
 * Rendering is a pure function of the parsed tables; the plot* wrappers
 * just add file IO. Nothing here ever writes back to an input file.
 */

import { writeFileSync } from "fs";

import { readTrace, readCurve, requireHmc, SchemaError, Trace, CurveTable } from "./csv.js";
import { esc, niceTicks, decadeTicks, fmtTick, pointsAttr, PALETTE, HMC_COLOR } from "./svg.js";

export type CurveKind = "mmd" | "autocorr";

const UNIT_TOL = 1e-6;

// ---------------------------------------------------------------------------
// Sphere scatter
// ---------------------------------------------------------------------------

/** g applied to the north pole e3 = (0,0,1): the third column of g. */
export function spherePoints(trace: Trace): Array<[number, number, number]> {
  return trace.g.map((m) => [m[2], m[5], m[8]]);
}

export function renderSphere(traces: Trace[], source: string): string {
  const pts = traces.flatMap((t) => spherePoints(t));

  // Every sample must sit on the unit sphere; anything else means the
  // trace was corrupted or is not a rotation trace at all.
  pts.forEach((p, i) => {
    const r = Math.hypot(p[0], p[1], p[2]);
    if (Math.abs(r - 1) > UNIT_TOL) {
      throw new SchemaError(`${source}: sample ${i + 1} is off the unit sphere (radius ${r})`);
    }
  });

  // Orthographic camera: azimuth/elevation fixed, z roughly up.
  const az = -0.6, el = 0.35;
  const right = [-Math.sin(az), Math.cos(az), 0];
  const up = [-Math.sin(el) * Math.cos(az), -Math.sin(el) * Math.sin(az), Math.cos(el)];
  const fwd = [Math.cos(el) * Math.cos(az), Math.cos(el) * Math.sin(az), Math.sin(el)];
  const dot = (a: number[], b: ArrayLike<number>) => a[0] * b[0] + a[1] * b[1] + a[2] * b[2];

  const W = 480, H = 480, cx = 240, cy = 252, R = 180;
  const sx = (p: number[]) => cx + R * dot(right, p);
  const sy = (p: number[]) => cy - R * dot(up, p);

  let s = `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${W} ${H}" font-family="Helvetica, Arial, sans-serif">\n`;
  s += `<rect width="${W}" height="${H}" fill="#fff"/>\n`;
  s += `<text x="${cx}" y="22" font-size="13" font-weight="600" text-anchor="middle" fill="#222">Samples on the sphere</text>\n`;
  s += `<text x="${cx}" y="38" font-size="9" text-anchor="middle" fill="#888">${esc(`${pts.length} samples from ${source}`)}</text>\n`;
  s += `<circle cx="${cx}" cy="${cy}" r="${R}" fill="#fcfcfe" stroke="#bbb" stroke-width="1"/>\n`;

  // Wireframe hint: equator and the prime meridian, drawn as faint loops.
  for (const circle of ["equator", "meridian"]) {
    const loop: Array<[number, number]> = [];
    for (let k = 0; k <= 120; k++) {
      const t = (2 * Math.PI * k) / 120;
      const p = circle === "equator"
        ? [Math.cos(t), Math.sin(t), 0]
        : [0, Math.cos(t), Math.sin(t)];
      loop.push([sx(p), sy(p)]);
    }
    s += `<polyline points="${pointsAttr(loop)}" fill="none" stroke="#e3e3e8" stroke-width="0.7"/>\n`;
  }

  // Neutral cloud first, back to front, then the green burn-in path and
  // the red starting point on top so the caption colors stay visible.
  const order = pts.map((_, i) => i).sort((a, b) => dot(fwd, pts[a]) - dot(fwd, pts[b]));
  for (const i of order) {
    if (i <= 50) continue;
    const p = pts[i];
    const op = dot(fwd, p) >= 0 ? 0.4 : 0.12;
    s += `<circle cx="${sx(p).toFixed(1)}" cy="${sy(p).toFixed(1)}" r="1.7" fill="#4361ee" fill-opacity="${op}"/>\n`;
  }
  for (let i = Math.min(50, pts.length - 1); i >= 1; i--) {
    const p = pts[i];
    const op = dot(fwd, p) >= 0 ? 0.95 : 0.45;
    s += `<circle cx="${sx(p).toFixed(1)}" cy="${sy(p).toFixed(1)}" r="2.8" fill="#2ca02c" fill-opacity="${op}"/>\n`;
  }
  const p0 = pts[0];
  s += `<circle cx="${sx(p0).toFixed(1)}" cy="${sy(p0).toFixed(1)}" r="5" fill="#d62728" stroke="#fff" stroke-width="1.2"/>\n`;

  // Legend
  const lx = 16, ly = H - 52;
  s += `<circle cx="${lx}" cy="${ly}" r="4" fill="#d62728"/>` +
    `<text x="${lx + 10}" y="${ly + 3}" font-size="9" fill="#444">first sample</text>\n`;
  s += `<circle cx="${lx}" cy="${ly + 16}" r="3" fill="#2ca02c"/>` +
    `<text x="${lx + 10}" y="${ly + 19}" font-size="9" fill="#444">samples 2-51</text>\n`;
  s += `<circle cx="${lx}" cy="${ly + 32}" r="2" fill="#4361ee" fill-opacity="0.6"/>` +
    `<text x="${lx + 10}" y="${ly + 35}" font-size="9" fill="#444">remainder</text>\n`;
  s += `</svg>\n`;
  return s;
}

export function plotSphere(tracePaths: string[], outPath: string): void {
  const traces = tracePaths.map((p) => readTrace(p));
  const label = tracePaths.length === 1 ? tracePaths[0] : `${tracePaths.length} traces`;
  writeFileSync(outPath, renderSphere(traces, label));
}

// ---------------------------------------------------------------------------
// Curve panels (MMD + autocorrelation)
// ---------------------------------------------------------------------------

function seriesColor(label: string, idx: number): string {
  return label === "hmc" ? HMC_COLOR : PALETTE[idx % PALETTE.length];
}

export function renderCurves(table: CurveTable, kind: CurveKind, source: string): string {
  const wantX = kind === "mmd" ? "N" : "lag";
  if (table.xName !== wantX) {
    throw new SchemaError(`${source}: ${kind} panel expects x column "${wantX}", file has "${table.xName}"`);
  }
  requireHmc(table, source);

  const W = 560, H = 400;
  const ml = 64, mr = 18, mt = 46, mb = 50;
  const pw = W - ml - mr, ph = H - mt - mb;

  const xMin = Math.min(...table.x), xMax = Math.max(...table.x);
  const xOf = (v: number) => ml + ((v - xMin) / (xMax - xMin || 1)) * pw;

  // y scale: log for MMD (the whole point of the panel is the decay
  // rate), linear for autocorrelations which can go negative.
  const logScale = kind === "mmd";
  let yOf: (v: number) => number;
  let yTicks: number[];
  if (logScale) {
    const pos = table.columns.flat().filter((v) => v > 0);
    if (pos.length === 0) {
      throw new SchemaError(`${source}: no positive values to place on a log axis`);
    }
    const lo = Math.min(...pos) * 0.8, hi = Math.max(...pos) * 1.25;
    const la = Math.log10(lo), lb = Math.log10(hi);
    yOf = (v) => mt + ph - ((Math.log10(v) - la) / (lb - la)) * ph;
    yTicks = decadeTicks(lo, hi).filter((t) => t >= lo && t <= hi);
    if (yTicks.length < 2) {
      yTicks = niceTicks(lo, hi, 4).filter((t) => t > 0);
    }
  } else {
    const all = table.columns.flat();
    const lo = Math.min(0, ...all), hi = Math.max(1, ...all) * 1.02;
    yOf = (v) => mt + ph - ((v - lo) / (hi - lo || 1)) * ph;
    yTicks = niceTicks(lo, hi, 5);
  }

  const title = kind === "mmd" ? "Convergence: MMD vs sample count" : "Feature autocorrelation";
  const yLabel = kind === "mmd" ? "MMD (log scale)" : "autocorrelation";
  const xLabel = kind === "mmd" ? "samples N" : "lag";

  let s = `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${W} ${H}" font-family="Helvetica, Arial, sans-serif">\n`;
  s += `<rect width="${W}" height="${H}" fill="#fff"/>\n`;
  s += `<text x="${ml}" y="20" font-size="13" font-weight="600" fill="#222">${esc(title)}</text>\n`;
  s += `<text x="${ml}" y="34" font-size="9" fill="#888">${esc(source)}</text>\n`;

  for (const t of yTicks) {
    const y = yOf(t);
    s += `<line x1="${ml}" y1="${y.toFixed(1)}" x2="${ml + pw}" y2="${y.toFixed(1)}" stroke="#eee" stroke-width="0.6"/>\n`;
    s += `<text x="${ml - 6}" y="${(y + 3).toFixed(1)}" font-size="9" text-anchor="end" fill="#555">${fmtTick(t)}</text>\n`;
  }
  for (const t of niceTicks(xMin, xMax, 6)) {
    const x = xOf(t);
    s += `<line x1="${x.toFixed(1)}" y1="${mt + ph}" x2="${x.toFixed(1)}" y2="${mt + ph + 4}" stroke="#888" stroke-width="0.8"/>\n`;
    s += `<text x="${x.toFixed(1)}" y="${mt + ph + 16}" font-size="9" text-anchor="middle" fill="#555">${fmtTick(t)}</text>\n`;
  }
  if (!logScale) {
    const y0 = yOf(0);
    s += `<line x1="${ml}" y1="${y0.toFixed(1)}" x2="${ml + pw}" y2="${y0.toFixed(1)}" stroke="#bbb" stroke-width="0.8" stroke-dasharray="3,3"/>\n`;
  }
  s += `<rect x="${ml}" y="${mt}" width="${pw}" height="${ph}" fill="none" stroke="#888" stroke-width="0.8"/>\n`;
  s += `<text x="${ml + pw / 2}" y="${H - 14}" font-size="10" text-anchor="middle" fill="#333">${esc(xLabel)}</text>\n`;
  s += `<text x="16" y="${mt + ph / 2}" font-size="10" text-anchor="middle" fill="#333" transform="rotate(-90 16 ${mt + ph / 2})">${esc(yLabel)}</text>\n`;

  // One line per column; markers only when there are few points.
  const markers = table.x.length <= 16;
  table.labels.forEach((label, j) => {
    const color = seriesColor(label, j);
    const pts: Array<[number, number]> = [];
    table.x.forEach((x, i) => {
      const v = table.columns[j][i];
      if (logScale && v <= 0) return;
      pts.push([xOf(x), yOf(v)]);
    });
    const width = label === "hmc" ? 2 : 1.4;
    s += `<polyline points="${pointsAttr(pts)}" fill="none" stroke="${color}" stroke-width="${width}" data-series="${esc(label)}"/>\n`;
    if (markers) {
      for (const [x, y] of pts) {
        s += `<circle cx="${x.toFixed(2)}" cy="${y.toFixed(2)}" r="2" fill="${color}"/>\n`;
      }
    }
  });

  // Legend, top right of the plot area.
  const lx = ml + pw - 96, ly = mt + 12;
  table.labels.forEach((label, j) => {
    const y = ly + 14 * j;
    s += `<line x1="${lx}" y1="${y}" x2="${lx + 20}" y2="${y}" stroke="${seriesColor(label, j)}" stroke-width="${label === "hmc" ? 2 : 1.4}"/>\n`;
    s += `<text x="${lx + 26}" y="${y + 3}" font-size="9" fill="#333">${esc(label)}</text>\n`;
  });

  s += `</svg>\n`;
  return s;
}

export function plotCurves(csvPath: string, outPath: string, kind: CurveKind): void {
  const table = readCurve(csvPath);
  writeFileSync(outPath, renderCurves(table, kind, csvPath));
}
