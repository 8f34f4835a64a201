#!/usr/bin/env node
/**
 * plot --kind {sphere,mmd,autocorr} --in <csv...> --out <img>
 *
 * Reads the experiment CSVs and writes one SVG panel. Exit codes:
 *   0  panel written
 *   1  usage error (bad flags, unknown kind)
 *   2  input could not be read or does not match the documented schema
 */

import { realpathSync } from "node:fs";
import { parseArgs } from "node:util";
import { pathToFileURL } from "node:url";

import { SchemaError } from "./csv.js";
import { plotSphere, plotCurves } from "./panels.js";

const USAGE = "usage: plot --kind {sphere,mmd,autocorr} --in <csv...> --out <img>";

export function main(argv: string[]): number {
  let parsed;
  try {
    parsed = parseArgs({
      args: argv,
      options: {
        kind: { type: "string" },
        in: { type: "string", multiple: true },
        out: { type: "string" },
      },
      allowPositionals: false,
    });
  } catch (err) {
    console.error(`${(err as Error).message}\n${USAGE}`);
    return 1;
  }
  const { kind, in: inputs, out } = parsed.values;
  if (!kind || !inputs || inputs.length === 0 || !out) {
    console.error(USAGE);
    return 1;
  }

  try {
    if (kind === "sphere") {
      plotSphere(inputs, out);
    } else if (kind === "mmd" || kind === "autocorr") {
      if (inputs.length !== 1) {
        console.error(`plot: ${kind} takes exactly one aggregated CSV, got ${inputs.length}`);
        return 1;
      }
      plotCurves(inputs[0], out, kind);
    } else {
      console.error(`plot: unknown kind ${JSON.stringify(kind)}\n${USAGE}`);
      return 1;
    }
  } catch (err) {
    if (err instanceof SchemaError || (err as NodeJS.ErrnoException).code !== undefined) {
      console.error(`plot: ${(err as Error).message}`);
      return 2;
    }
    throw err;
  }
  console.log(`SVG -> ${out}`);
  return 0;
}

// Run only when invoked as a script (directly or through the bin
// symlink), not when imported by the tests.
function invokedAsScript(): boolean {
  if (!process.argv[1]) return false;
  try {
    return import.meta.url === pathToFileURL(realpathSync(process.argv[1])).href;
  } catch {
    return false;
  }
}

if (invokedAsScript()) {
  process.exit(main(process.argv.slice(2)));
}
