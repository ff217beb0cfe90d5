import { describe, expect, it } from "vitest";

import { tagOf, xTagOf } from "../src/dtypes.js";

describe("dtype dispatch table", () => {
  it("maps every supported TypedArray to its tag", () => {
    expect(tagOf(new Float64Array(1))).toBe("f64");
    expect(tagOf(new Float32Array(1))).toBe("f32");
    expect(tagOf(new Int8Array(1))).toBe("i8");
    expect(tagOf(new Int16Array(1))).toBe("i16");
    expect(tagOf(new Int32Array(1))).toBe("i32");
    expect(tagOf(new BigInt64Array(1))).toBe("i64");
    expect(tagOf(new Uint8Array(1))).toBe("u8");
    expect(tagOf(new Uint16Array(1))).toBe("u16");
    expect(tagOf(new Uint32Array(1))).toBe("u32");
    expect(tagOf(new BigUint64Array(1))).toBe("u64");
  });

  it("treats Uint16Array as half floats only on request", () => {
    const halves = new Uint16Array([0x3c00, 0xbc00]);
    expect(tagOf(halves)).toBe("u16");
    expect(tagOf(halves, "f16")).toBe("f16");
  });

  it("rejects overrides that contradict the array type", () => {
    expect(() => tagOf(new Float32Array(1), "f16")).toThrow("unsupported dtype");
    expect(() => tagOf(new Float64Array(1), "f32")).toThrow("unsupported dtype");
  });

  it("accepts a matching no-op override", () => {
    expect(tagOf(new Float32Array(1), "f32")).toBe("f32");
  });

  it("rejects non-TypedArray values", () => {
    expect(() => tagOf([1, 2, 3])).toThrow("unsupported dtype");
    expect(() => tagOf(new DataView(new ArrayBuffer(8)))).toThrow(
      "unsupported dtype",
    );
    expect(() => tagOf(new Uint8ClampedArray(4))).toThrow("unsupported dtype");
    expect(() => tagOf("bytes")).toThrow("unsupported dtype");
  });

  it("maps index axes, including datetime ticks as i64", () => {
    expect(xTagOf(new BigInt64Array(1))).toBe("i64");
    expect(xTagOf(new Uint16Array(1))).toBe("u16");
    expect(xTagOf(new Float64Array(1))).toBe("f64");
  });
});
