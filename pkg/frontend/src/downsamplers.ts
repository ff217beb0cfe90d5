/**
 * One stateless handle per algorithm.
 *
 * `downsample([x], y, nOut, options)` mirrors the core call shape over
 * host TypedArrays and resolves to the selected indices as a
 * BigUint64Array.  `downsampleSync` is the blocking variant.  Handles
 * hold no state, so one instance can serve any number of concurrent
 * calls; the async form keeps the event loop free while the endpoint
 * works.
 */

import {
  DtypeTag,
  HalfBits,
  SeriesArray,
  bytesOf,
  tagOf,
  xTagOf,
} from "./dtypes.js";
import { EndpointConfig, EndpointRequest, callAsync, callSync } from "./endpoint.js";

export interface DownsampleOptions extends EndpointConfig {
  /** Split bin work across threads on the endpoint (default false). */
  parallel?: boolean;
  /** Thread count when parallel; endpoint picks a default otherwise. */
  workers?: number;
  /** Reinterpret a Uint16Array `y` as raw half-float bits. */
  dtype?: DtypeTag;
  /** Candidates per output point in the preselection pass. */
  minmaxRatio?: number;
}

const BASE_OPTIONS = ["parallel", "workers", "dtype", "python"];

type Parsed = {
  x?: SeriesArray;
  y: SeriesArray | HalfBits;
  nOut: number;
  opts: DownsampleOptions;
};

function parseArgs(args: unknown[]): Parsed {
  // (y, nOut, opts?) or (x, y, nOut, opts?); the second positional
  // being a number is what marks the x-less form
  if (typeof args[1] === "number") {
    const [y, nOut, opts] = args as [SeriesArray, number, DownsampleOptions?];
    return { y, nOut, opts: opts ?? {} };
  }
  const [x, y, nOut, opts] = args as [
    SeriesArray,
    SeriesArray,
    number,
    DownsampleOptions?,
  ];
  return { x, y, nOut, opts: opts ?? {} };
}

export abstract class Downsampler {
  abstract readonly algorithm: string;

  protected extraOptions(): string[] {
    return [];
  }

  private request(parsed: Parsed): EndpointRequest {
    const allowed = [...BASE_OPTIONS, ...this.extraOptions()];
    for (const key of Object.keys(parsed.opts)) {
      if (!allowed.includes(key)) {
        throw new TypeError(`unknown option: ${key}`);
      }
    }
    const { x, y, nOut, opts } = parsed;
    if (!Number.isInteger(nOut)) {
      throw new Error("invalid n_out");
    }
    const dtype = tagOf(y, opts.dtype);
    const payload: Buffer[] = [];
    let xDtype: DtypeTag | undefined;
    if (x !== undefined) {
      xDtype = xTagOf(x);
      if (x.length !== y.length) {
        throw new Error("length mismatch");
      }
      payload.push(bytesOf(x));
    }
    payload.push(bytesOf(y));
    return {
      algo: this.algorithm,
      dtype,
      count: y.length,
      nOut,
      xDtype,
      parallel: opts.parallel,
      ratio: opts.minmaxRatio,
      workers: opts.workers,
      payload,
    };
  }

  downsample(
    y: SeriesArray | HalfBits,
    nOut: number,
    opts?: DownsampleOptions,
  ): Promise<BigUint64Array>;
  downsample(
    x: SeriesArray,
    y: SeriesArray | HalfBits,
    nOut: number,
    opts?: DownsampleOptions,
  ): Promise<BigUint64Array>;
  downsample(...args: unknown[]): Promise<BigUint64Array> {
    const parsed = parseArgs(args);
    let req: EndpointRequest;
    try {
      req = this.request(parsed);
    } catch (exc) {
      return Promise.reject(exc);
    }
    return callAsync(req, parsed.opts);
  }

  downsampleSync(
    y: SeriesArray | HalfBits,
    nOut: number,
    opts?: DownsampleOptions,
  ): BigUint64Array;
  downsampleSync(
    x: SeriesArray,
    y: SeriesArray | HalfBits,
    nOut: number,
    opts?: DownsampleOptions,
  ): BigUint64Array;
  downsampleSync(...args: unknown[]): BigUint64Array {
    const parsed = parseArgs(args);
    return callSync(this.request(parsed), parsed.opts);
  }
}

export class EveryNthDownsampler extends Downsampler {
  readonly algorithm = "everynth";
}

export class MinMaxDownsampler extends Downsampler {
  readonly algorithm = "minmax";
}

export class M4Downsampler extends Downsampler {
  readonly algorithm = "m4";
}

export class LTTBDownsampler extends Downsampler {
  readonly algorithm = "lttb";
}

export class MinMaxLTTBDownsampler extends Downsampler {
  readonly algorithm = "minmaxlttb";

  protected override extraOptions(): string[] {
    return ["minmaxRatio"];
  }
}
