import { mkdtempSync, writeFileSync, readFileSync } from "fs";
import { tmpdir } from "os";
import path from "path";
import { fileURLToPath } from "url";
import { describe, it, expect } from "vitest";

import { readTrace, readCurve, requireHmc, SchemaError, TRACE_HEADER } from "../src/csv.js";

const FIX = path.join(path.dirname(fileURLToPath(import.meta.url)), "fixtures");
const tmp = mkdtempSync(path.join(tmpdir(), "liemc-plots-"));

function write(name: string, text: string): string {
  const p = path.join(tmp, name);
  writeFileSync(p, text);
  return p;
}

describe("readTrace", () => {
  it("parses the fixture trace", () => {
    const t = readTrace(path.join(FIX, "trace_small.csv"));
    expect(t.g.length).toBe(120);
    expect(t.g[0].length).toBe(9);
    expect(t.v[0].length).toBe(3);
    expect(t.hamiltonian.every(Number.isFinite)).toBe(true);
    expect(t.accepted.every((a) => typeof a === "boolean")).toBe(true);
  });

  it("rejects a tampered header", () => {
    const lines = readFileSync(path.join(FIX, "trace_small.csv"), "utf-8").split("\n");
    lines[0] = lines[0].replace("g11", "g_11");
    const p = write("bad_header.csv", lines.join("\n"));
    expect(() => readTrace(p)).toThrow(SchemaError);
    expect(() => readTrace(p)).toThrow(/trace header/);
  });

  it("rejects a header-only trace", () => {
    const p = write("empty_trace.csv", TRACE_HEADER.join(",") + "\n");
    expect(() => readTrace(p)).toThrow(/no samples/);
  });

  it("rejects a ragged row, naming the line", () => {
    const good = readFileSync(path.join(FIX, "trace_small.csv"), "utf-8").split("\n");
    const row = good[3].split(",");
    row.pop();
    const p = write("ragged.csv", [good[0], good[1], good[2], row.join(",")].join("\n"));
    expect(() => readTrace(p)).toThrow(/line 4/);
  });

  it("rejects non-numeric cells", () => {
    const good = readFileSync(path.join(FIX, "trace_small.csv"), "utf-8").split("\n");
    const row = good[1].split(",");
    row[5] = "0.1.2";
    const p = write("nonnum.csv", [good[0], row.join(",")].join("\n"));
    expect(() => readTrace(p)).toThrow(/non-numeric/);
  });

  it("rejects an empty file", () => {
    const p = write("nothing.csv", "");
    expect(() => readTrace(p)).toThrow(/empty/);
  });
});

describe("readCurve", () => {
  it("parses the MMD fixture", () => {
    const c = readCurve(path.join(FIX, "mmd_curve.csv"));
    expect(c.xName).toBe("N");
    expect(c.labels).toEqual(["h=0.01", "h=0.1", "h=1", "hmc"]);
    expect(c.x[0]).toBe(250);
    expect(c.columns.length).toBe(4);
    expect(c.columns[0].length).toBe(c.x.length);
  });

  it("parses the autocorrelation fixture", () => {
    const c = readCurve(path.join(FIX, "autocorr.csv"));
    expect(c.xName).toBe("lag");
    expect(c.x[0]).toBe(0);
    // lag 0 is 1 by definition in every column
    c.columns.forEach((col) => expect(col[0]).toBe(1));
  });

  it("rejects an unknown x column", () => {
    const p = write("badx.csv", "step,h=0.1,hmc\n1,0.5,0.6\n");
    expect(() => readCurve(p)).toThrow(/expected "N" or "lag"/);
  });

  it("rejects a single-column file", () => {
    const p = write("onecol.csv", "N\n250\n");
    expect(() => readCurve(p)).toThrow(/at least one series/);
  });

  it("rejects ragged curve rows", () => {
    const p = write("raggedcurve.csv", "N,h=0.1,hmc\n250,0.5\n");
    expect(() => readCurve(p)).toThrow(/line 2/);
  });

  it("requireHmc flags a table without the reference column", () => {
    const p = write("nohmc.csv", "N,h=0.1,h=1\n250,0.5,0.6\n");
    const c = readCurve(p);
    expect(() => requireHmc(c, p)).toThrow(/no "hmc" column/);
  });
});
