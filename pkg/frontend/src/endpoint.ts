/**
 * Process transport for the downsampling endpoint.
 *
 * One call spawns `python3 -m thinseries downsample`, streams the raw
 * array bytes to its stdin and reads uint64 indices back from stdout.
 * A non-zero exit re-throws the endpoint's stderr text verbatim, so
 * callers see the same error messages the core raises in-process.
 */

import { spawn, spawnSync } from "node:child_process";

import { DtypeTag } from "./dtypes.js";

export interface EndpointRequest {
  algo: string;
  dtype: DtypeTag;
  count: number;
  nOut: number;
  xDtype?: DtypeTag;
  parallel?: boolean;
  ratio?: number;
  workers?: number;
  payload: Buffer[];
}

export interface EndpointConfig {
  /** Interpreter to launch; THINSERIES_PYTHON overrides the default. */
  python?: string;
}

const MAX_RESULT_BYTES = 1 << 30;

function interpreter(cfg?: EndpointConfig): string {
  return cfg?.python ?? process.env.THINSERIES_PYTHON ?? "python3";
}

function argv(req: EndpointRequest): string[] {
  const args = [
    "-m",
    "thinseries",
    "downsample",
    "--algo",
    req.algo,
    "--dtype",
    req.dtype,
    "--count",
    String(req.count),
    "--n-out",
    String(req.nOut),
  ];
  if (req.xDtype !== undefined) {
    args.push("--x-dtype", req.xDtype);
  }
  if (req.parallel) {
    args.push("--parallel");
  }
  if (req.ratio !== undefined) {
    args.push("--ratio", String(req.ratio));
  }
  if (req.workers !== undefined) {
    args.push("--workers", String(req.workers));
  }
  return args;
}

function fail(code: number | null, stderr: string): never {
  const text = stderr.trim();
  throw new Error(text || `downsample endpoint exited with code ${code}`);
}

function decode(stdout: Buffer): BigUint64Array {
  if (stdout.byteLength % 8 !== 0) {
    throw new Error("truncated result stream");
  }
  // Buffer slices of the pool are not 8-byte aligned; copy once
  const out = new BigUint64Array(stdout.byteLength / 8);
  new Uint8Array(out.buffer).set(stdout);
  return out;
}

export function callSync(
  req: EndpointRequest,
  cfg?: EndpointConfig,
): BigUint64Array {
  const input =
    req.payload.length === 1 ? req.payload[0] : Buffer.concat(req.payload);
  const proc = spawnSync(interpreter(cfg), argv(req), {
    input,
    maxBuffer: MAX_RESULT_BYTES,
  });
  if (proc.error) {
    throw proc.error;
  }
  if (proc.status !== 0) {
    fail(proc.status, proc.stderr.toString());
  }
  return decode(proc.stdout);
}

export function callAsync(
  req: EndpointRequest,
  cfg?: EndpointConfig,
): Promise<BigUint64Array> {
  return new Promise((resolve, reject) => {
    const proc = spawn(interpreter(cfg), argv(req), {
      stdio: ["pipe", "pipe", "pipe"],
    });
    const out: Buffer[] = [];
    const err: Buffer[] = [];
    proc.stdout.on("data", (chunk: Buffer) => out.push(chunk));
    proc.stderr.on("data", (chunk: Buffer) => err.push(chunk));
    proc.on("error", reject);
    proc.on("close", (code) => {
      try {
        if (code !== 0) {
          fail(code, Buffer.concat(err).toString());
        }
        resolve(decode(Buffer.concat(out)));
      } catch (exc) {
        reject(exc);
      }
    });
    for (const part of req.payload) {
      proc.stdin.write(part);
    }
    proc.stdin.end();
    // swallow EPIPE when the endpoint dies before reading everything;
    // the close handler reports the real failure
    proc.stdin.on("error", () => {});
  });
}
