import { DtypeTag, SeriesArray } from "../src/dtypes.js";

/** Small deterministic PRNG so failures reproduce from the case seed. */
export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

function finiteHalfBits(rng: () => number): number {
  // sign + 15 magnitude bits, with the exponent-all-ones band (inf/nan)
  // clamped down to the largest finite half
  let m = Math.floor(rng() * 0x8000);
  if ((m & 0x7c00) === 0x7c00) {
    m = 0x7bff;
  }
  return rng() < 0.5 ? m : m | 0x8000;
}

export function randomSeries(tag: DtypeTag, n: number, seed: number): SeriesArray {
  const rng = mulberry32(seed);
  switch (tag) {
    case "f64": {
      const a = new Float64Array(n);
      for (let i = 0; i < n; i++) a[i] = rng() * 2 - 1;
      return a;
    }
    case "f32": {
      const a = new Float32Array(n);
      for (let i = 0; i < n; i++) a[i] = rng() * 2 - 1;
      return a;
    }
    case "f16": {
      const a = new Uint16Array(n);
      for (let i = 0; i < n; i++) a[i] = finiteHalfBits(rng);
      return a;
    }
    case "i8": {
      const a = new Int8Array(n);
      for (let i = 0; i < n; i++) a[i] = Math.floor(rng() * 256) - 128;
      return a;
    }
    case "i16": {
      const a = new Int16Array(n);
      for (let i = 0; i < n; i++) a[i] = Math.floor(rng() * 65536) - 32768;
      return a;
    }
    case "i32": {
      const a = new Int32Array(n);
      for (let i = 0; i < n; i++) a[i] = (Math.floor(rng() * 4294967296) | 0);
      return a;
    }
    case "i64": {
      const a = new BigInt64Array(n);
      for (let i = 0; i < n; i++) {
        const hi = BigInt(Math.floor(rng() * 4294967296)) << 32n;
        a[i] = BigInt.asIntN(64, hi | BigInt(Math.floor(rng() * 4294967296)));
      }
      return a;
    }
    case "u8": {
      const a = new Uint8Array(n);
      for (let i = 0; i < n; i++) a[i] = Math.floor(rng() * 256);
      return a;
    }
    case "u16": {
      const a = new Uint16Array(n);
      for (let i = 0; i < n; i++) a[i] = Math.floor(rng() * 65536);
      return a;
    }
    case "u32": {
      const a = new Uint32Array(n);
      for (let i = 0; i < n; i++) a[i] = Math.floor(rng() * 4294967296);
      return a;
    }
    case "u64": {
      const a = new BigUint64Array(n);
      for (let i = 0; i < n; i++) {
        const hi = BigInt(Math.floor(rng() * 4294967296)) << 32n;
        a[i] = hi | BigInt(Math.floor(rng() * 4294967296));
      }
      return a;
    }
  }
}

export type XKind = "i32" | "i64" | "f64";

export function increasingX(kind: XKind, n: number, seed: number): SeriesArray {
  const rng = mulberry32(seed);
  let acc = 0;
  const steps = new Float64Array(n);
  for (let i = 0; i < n; i++) {
    acc += 1 + Math.floor(rng() * 4);
    steps[i] = acc;
  }
  if (kind === "f64") {
    return steps.map((v) => v * 0.5);
  }
  if (kind === "i32") {
    return Int32Array.from(steps);
  }
  return BigInt64Array.from(steps, (v) => BigInt(v));
}

export function asNumbers(idx: BigUint64Array): number[] {
  return Array.from(idx, (v) => Number(v));
}

export function isStrictlyAscending(idx: BigUint64Array): boolean {
  for (let i = 1; i < idx.length; i++) {
    const prev = idx[i - 1]!;
    const cur = idx[i]!;
    if (cur <= prev) {
      return false;
    }
  }
  return true;
}
