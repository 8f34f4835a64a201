/**
 * Readers for the two CSV schemas the experiment driver emits.
 *
 * Trace files:   step,g11..g33,v1,v2,v3,H,accepted   (one row per sample)
 * Curve files:   N,h=...,...,hmc   or   lag,h=...,...,hmc
 *
 * Parsing is strict on purpose: a plot built from a half-understood file
 * is worse than no plot, so any header or cell that does not match the
 * documented schema raises SchemaError.
 */

import { readFileSync } from "fs";

export class SchemaError extends Error {}

export const TRACE_HEADER = [
  "step",
  "g11", "g12", "g13",
  "g21", "g22", "g23",
  "g31", "g32", "g33",
  "v1", "v2", "v3",
  "H",
  "accepted",
];

export interface Trace {
  /** rotation matrices, row-major, one 9-vector per sample */
  g: number[][];
  v: number[][];
  hamiltonian: number[];
  accepted: boolean[];
}

export interface CurveTable {
  /** name of the first column: "N" for MMD curves, "lag" for autocorrelations */
  xName: string;
  x: number[];
  /** column labels after the first, e.g. ["h=0.01", "h=0.1", "hmc"] */
  labels: string[];
  /** columns[i] goes with labels[i] */
  columns: number[][];
}

function splitRows(text: string, path: string): string[][] {
  const lines = text.split("\n").map((l) => l.replace(/\r$/, "")).filter((l) => l.length > 0);
  if (lines.length === 0) {
    throw new SchemaError(`${path}: file is empty`);
  }
  return lines.map((l) => l.split(","));
}

function toNumber(cell: string, path: string, line: number): number {
  const v = Number(cell);
  if (cell.trim() === "" || Number.isNaN(v)) {
    throw new SchemaError(`${path}: non-numeric cell ${JSON.stringify(cell)} on line ${line}`);
  }
  return v;
}

export function readTrace(path: string): Trace {
  const rows = splitRows(readFileSync(path, "utf-8"), path);
  const header = rows[0];
  if (header.length !== TRACE_HEADER.length || header.some((c, i) => c !== TRACE_HEADER[i])) {
    throw new SchemaError(`${path}: unexpected trace header [${header.join(",")}]`);
  }
  const body = rows.slice(1);
  if (body.length === 0) {
    throw new SchemaError(`${path}: trace has no samples`);
  }
  const g: number[][] = [];
  const v: number[][] = [];
  const hamiltonian: number[] = [];
  const accepted: boolean[] = [];
  body.forEach((row, i) => {
    if (row.length !== TRACE_HEADER.length) {
      throw new SchemaError(`${path}: line ${i + 2} has ${row.length} fields, expected ${TRACE_HEADER.length}`);
    }
    const nums = row.map((c) => toNumber(c, path, i + 2));
    g.push(nums.slice(1, 10));
    v.push(nums.slice(10, 13));
    hamiltonian.push(nums[13]);
    accepted.push(nums[14] !== 0);
  });
  return { g, v, hamiltonian, accepted };
}

export function readCurve(path: string): CurveTable {
  const rows = splitRows(readFileSync(path, "utf-8"), path);
  const header = rows[0];
  if (header.length < 2) {
    throw new SchemaError(`${path}: curve file needs an x column plus at least one series`);
  }
  const xName = header[0];
  if (xName !== "N" && xName !== "lag") {
    throw new SchemaError(`${path}: first column is ${JSON.stringify(xName)}, expected "N" or "lag"`);
  }
  const labels = header.slice(1);
  const body = rows.slice(1);
  if (body.length === 0) {
    throw new SchemaError(`${path}: curve file has no rows`);
  }
  const x: number[] = [];
  const columns: number[][] = labels.map(() => []);
  body.forEach((row, i) => {
    if (row.length !== header.length) {
      throw new SchemaError(`${path}: line ${i + 2} has ${row.length} fields, expected ${header.length}`);
    }
    x.push(toNumber(row[0], path, i + 2));
    for (let j = 1; j < row.length; j++) {
      columns[j - 1].push(toNumber(row[j], path, i + 2));
    }
  });
  return { xName, x, labels, columns };
}

/** Fail unless the table carries the reversible reference column. */
export function requireHmc(table: CurveTable, path: string): void {
  if (!table.labels.includes("hmc")) {
    throw new SchemaError(`${path}: no "hmc" column (found: ${table.labels.join(", ")})`);
  }
}
