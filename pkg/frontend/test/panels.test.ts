import { mkdtempSync, writeFileSync, readFileSync } from "fs";
import { tmpdir } from "os";
import path from "path";
import { fileURLToPath } from "url";
import { describe, it, expect } from "vitest";

import { readTrace, readCurve, SchemaError, CurveTable } from "../src/csv.js";
import { renderSphere, renderCurves, spherePoints, plotSphere, plotCurves } from "../src/panels.js";

const FIX = path.join(path.dirname(fileURLToPath(import.meta.url)), "fixtures");
const tmp = mkdtempSync(path.join(tmpdir(), "liemc-panels-"));

const TRACE = path.join(FIX, "trace_small.csv");
const MMD = path.join(FIX, "mmd_curve.csv");
const ACF = path.join(FIX, "autocorr.csv");

function polylines(svg: string): Array<{ series: string; stroke: string; points: string }> {
  const out: Array<{ series: string; stroke: string; points: string }> = [];
  const re = /<polyline points="([^"]*)"[^>]*stroke="([^"]*)"[^>]*data-series="([^"]*)"/g;
  let m;
  while ((m = re.exec(svg)) !== null) {
    out.push({ points: m[1], stroke: m[2], series: m[3] });
  }
  return out;
}

describe("criterion 8: panel regeneration from fixtures", () => {
  it("all three panels render without error", () => {
    const sphere = path.join(tmp, "sphere.svg");
    const mmd = path.join(tmp, "mmd.svg");
    const acf = path.join(tmp, "acf.svg");
    plotSphere([TRACE], sphere);
    plotCurves(MMD, mmd, "mmd");
    plotCurves(ACF, acf, "autocorr");
    for (const f of [sphere, mmd, acf]) {
      const svg = readFileSync(f, "utf-8");
      expect(svg.startsWith("<svg")).toBe(true);
      expect(svg).toContain("</svg>");
    }
  });

  it("sphere panel asserts unit-norm points", () => {
    // pulling one matrix entry off the manifold must be caught before drawing
    const lines = readFileSync(TRACE, "utf-8").trim().split("\n");
    const row = lines[7].split(",");
    row[9] = String(Number(row[9]) * 1.5); // g33 of sample 7
    lines[7] = row.join(",");
    const p = path.join(tmp, "off_sphere.csv");
    writeFileSync(p, lines.join("\n") + "\n");
    expect(() => renderSphere([readTrace(p)], p)).toThrow(SchemaError);
    expect(() => renderSphere([readTrace(p)], p)).toThrow(/unit sphere/);
  });

  it("MMD panel has one line per h plus a black HMC line", () => {
    const svg = renderCurves(readCurve(MMD), "mmd", MMD);
    const lines = polylines(svg);
    const hs = lines.filter((l) => l.series.startsWith("h="));
    const hmc = lines.filter((l) => l.series === "hmc");
    expect(hs.map((l) => l.series)).toEqual(["h=0.01", "h=0.1", "h=1"]);
    expect(hmc.length).toBe(1);
    expect(hmc[0].stroke).toBe("#000000");
    hs.forEach((l) => expect(l.stroke).not.toBe("#000000"));
  });
});

describe("sphere details", () => {
  it("marks the first sample red and the next 50 green", () => {
    const svg = renderSphere([readTrace(TRACE)], TRACE);
    // one legend swatch + one data point in red
    expect(svg.match(/#d62728/g)!.length).toBe(2);
    // 50 green samples + one legend swatch
    expect(svg.match(/#2ca02c/g)!.length).toBe(51);
    // remainder: 120 - 51 neutral cloud points + one legend swatch
    expect(svg.match(/#4361ee/g)!.length).toBe(70);
  });

  it("projects g onto the north pole column", () => {
    const t = readTrace(TRACE);
    const pts = spherePoints(t);
    expect(pts.length).toBe(120);
    expect(pts[0]).toEqual([t.g[0][2], t.g[0][5], t.g[0][8]]);
  });

  it("concatenates several traces", () => {
    const svg = renderSphere([readTrace(TRACE), readTrace(TRACE)], "two traces");
    expect(svg.match(/#4361ee/g)!.length).toBe(240 - 51 + 1);
  });
});

describe("curve details", () => {
  it("rejects a kind/file mismatch", () => {
    expect(() => renderCurves(readCurve(ACF), "mmd", ACF)).toThrow(/expects x column "N"/);
    expect(() => renderCurves(readCurve(MMD), "autocorr", MMD)).toThrow(/expects x column "lag"/);
  });

  it("rejects a table without the hmc column", () => {
    const p = path.join(tmp, "nohmc.csv");
    writeFileSync(p, "N,h=0.1,h=1\n250,0.5,0.6\n500,0.4,0.5\n");
    expect(() => renderCurves(readCurve(p), "mmd", p)).toThrow(/no "hmc" column/);
  });

  it("uses a log y-axis for MMD: decades are equally spaced", () => {
    const table: CurveTable = {
      xName: "N",
      x: [100, 200, 300],
      labels: ["h=0.1", "hmc"],
      columns: [
        [1.0, 0.1, 0.01],
        [1.0, 0.5, 0.25],
      ],
    };
    const svg = renderCurves(table, "mmd", "synthetic");
    const line = polylines(svg).find((l) => l.series === "h=0.1")!;
    const ys = line.points.split(" ").map((p) => Number(p.split(",")[1]));
    const d1 = ys[1] - ys[0];
    const d2 = ys[2] - ys[1];
    expect(Math.abs(d1 - d2)).toBeLessThan(0.1);
    expect(d1).toBeGreaterThan(0); // smaller MMD sits lower on the panel
  });

  it("autocorrelation panel keeps a linear axis with a zero line", () => {
    const svg = renderCurves(readCurve(ACF), "autocorr", ACF);
    expect(svg).toContain("stroke-dasharray");
    expect(svg).toContain("autocorrelation");
    const lines = polylines(svg);
    expect(lines.length).toBe(readCurve(ACF).labels.length);
  });

  it("legend lists every series", () => {
    const svg = renderCurves(readCurve(MMD), "mmd", MMD);
    for (const label of ["h=0.01", "h=0.1", "h=1", "hmc"]) {
      expect(svg).toContain(`>${label}</text>`);
    }
  });
});

describe("read-only guarantee", () => {
  it("plotting does not touch the inputs and is deterministic", () => {
    const before = readFileSync(MMD, "utf-8");
    const out1 = path.join(tmp, "det1.svg");
    const out2 = path.join(tmp, "det2.svg");
    plotCurves(MMD, out1, "mmd");
    plotCurves(MMD, out2, "mmd");
    expect(readFileSync(MMD, "utf-8")).toBe(before);
    expect(readFileSync(out1, "utf-8")).toBe(readFileSync(out2, "utf-8"));
  });
});
