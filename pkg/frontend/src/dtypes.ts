/**
 * Dtype dispatch table: TypedArray constructor -> wire tag.
 *
 * The tag travels on the endpoint command line and fixes how the raw
 * bytes are interpreted on the other side.  Unsupported array kinds are
 * rejected here, before anything crosses the process boundary.
 */

export type DtypeTag =
  | "f16"
  | "f32"
  | "f64"
  | "i8"
  | "i16"
  | "i32"
  | "i64"
  | "u8"
  | "u16"
  | "u32"
  | "u64";

export type SeriesArray =
  | Float64Array
  | Float32Array
  | Int8Array
  | Int16Array
  | Int32Array
  | BigInt64Array
  | Uint8Array
  | Uint16Array
  | Uint32Array
  | BigUint64Array;

// half floats have no host array type on node 20; callers hand over the
// raw bit patterns in a Uint16Array and say so via the dtype option
export type HalfBits = Uint16Array;

const TAGS = new Map<Function, DtypeTag>([
  [Float64Array, "f64"],
  [Float32Array, "f32"],
  [Int8Array, "i8"],
  [Int16Array, "i16"],
  [Int32Array, "i32"],
  [BigInt64Array, "i64"],
  [Uint8Array, "u8"],
  [Uint16Array, "u16"],
  [Uint32Array, "u32"],
  [BigUint64Array, "u64"],
]);

export function tagOf(arr: unknown, override?: DtypeTag): DtypeTag {
  if (!ArrayBuffer.isView(arr) || arr instanceof DataView) {
    throw new Error("unsupported dtype");
  }
  const tag = TAGS.get(arr.constructor);
  if (tag === undefined) {
    throw new Error("unsupported dtype");
  }
  if (override === undefined) {
    return tag;
  }
  if (override === "f16" && tag === "u16") {
    return "f16";
  }
  if (override !== tag) {
    throw new Error("unsupported dtype");
  }
  return tag;
}

/** Tag for an index (x) array; the endpoint takes any numeric tag but f16. */
export function xTagOf(arr: unknown): DtypeTag {
  const tag = tagOf(arr);
  if (tag === "f16") {
    throw new Error("unsupported dtype");
  }
  return tag;
}

export function bytesOf(arr: ArrayBufferView): Buffer {
  return Buffer.from(arr.buffer, arr.byteOffset, arr.byteLength);
}

// the wire format is little-endian, same as every platform node targets;
// refuse to run rather than silently swap bytes on an exotic host
const probe = new Uint8Array(new Uint32Array([1]).buffer);
if (probe[0] !== 1) {
  throw new Error("big-endian hosts are not supported");
}
