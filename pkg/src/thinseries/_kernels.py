"""JIT kernel factories.

Everything here is built around one shape of inner loop: four
accumulator arrays (low values, their lane offsets, high values, their
lane offsets) updated chunk by chunk with compare/blend operations the
JIT backend turns into vector instructions.  Index accumulators share
the element width of the data, so an outer loop reduces each block to
scalars before lane offsets can overflow and folds the result into
64-bit running extrema.

Factories return lazily specialized dispatchers; callers cache them per
(transform kind, lane geometry) so each variant compiles once per dtype.
"""

import numpy as np
from numba import njit


# ---------------------------------------------------------------------------
# scalar argminmax (reference path)

def make_scalar_direct():
    @njit(nogil=True)
    def scalar_direct(a):
        n = a.shape[0]
        minv = a[0]
        maxv = a[0]
        mini = np.int64(0)
        maxi = np.int64(0)
        for i in range(1, n):
            v = a[i]
            if v < minv:
                minv = v
                mini = i
            if v > maxv:
                maxv = v
                maxi = i
        return mini, maxi

    return scalar_direct


def make_scalar_f16ord():
    # a: int16 view of f16 bit patterns, compared in ordinal space
    @njit(nogil=True)
    def scalar_f16ord(a):
        n = a.shape[0]
        w = a[0]
        cur = ((w >> np.int16(15)) & np.int16(0x7FFF)) ^ w
        minv = cur
        maxv = cur
        mini = np.int64(0)
        maxi = np.int64(0)
        for i in range(1, n):
            w = a[i]
            v = ((w >> np.int16(15)) & np.int16(0x7FFF)) ^ w
            if v < minv:
                minv = v
                mini = i
            if v > maxv:
                maxv = v
                maxi = i
        return mini, maxi

    return scalar_f16ord


# ---------------------------------------------------------------------------
# blocked lane argminmax
#
# The three variants differ only in how a loaded element becomes a
# comparable value (identity, xor-with-constant, f16 ordinal map); the
# transform is inlined in source because the blend pattern only turns
# into vector code when the loop body is free of opaque calls.

def make_vector_direct(lane, max_chunks, idt):
    @njit(nogil=True)
    def vector_direct(a):
        n = a.shape[0]
        gmin_v = a[0]
        gmax_v = a[0]
        gmin_i = np.int64(0)
        gmax_i = np.int64(0)
        lo_v = np.empty(lane, a.dtype)
        hi_v = np.empty(lane, a.dtype)
        lo_i = np.empty(lane, idt)
        hi_i = np.empty(lane, idt)
        pos = np.int64(0)
        while n - pos >= lane:
            nchunk = (n - pos) // lane
            if nchunk > max_chunks:
                nchunk = max_chunks
            base = pos
            for j in range(lane):
                v = a[base + j]
                lo_v[j] = v
                hi_v[j] = v
                lo_i[j] = idt(j)
                hi_i[j] = idt(j)
            for c in range(1, nchunk):
                o = c * lane
                for j in range(lane):
                    v = a[base + o + j]
                    cur = idt(o + j)
                    lt = v < lo_v[j]
                    gt = v > hi_v[j]
                    lo_i[j] = cur if lt else lo_i[j]
                    hi_i[j] = cur if gt else hi_i[j]
                    lo_v[j] = min(lo_v[j], v)
                    hi_v[j] = max(hi_v[j], v)
            bmin_v = lo_v[0]
            bmin_i = np.int64(lo_i[0])
            bmax_v = hi_v[0]
            bmax_i = np.int64(hi_i[0])
            for j in range(1, lane):
                if lo_v[j] < bmin_v or (
                    lo_v[j] == bmin_v and np.int64(lo_i[j]) < bmin_i
                ):
                    bmin_v = lo_v[j]
                    bmin_i = np.int64(lo_i[j])
                if hi_v[j] > bmax_v or (
                    hi_v[j] == bmax_v and np.int64(hi_i[j]) < bmax_i
                ):
                    bmax_v = hi_v[j]
                    bmax_i = np.int64(hi_i[j])
            if bmin_v < gmin_v:
                gmin_v = bmin_v
                gmin_i = base + bmin_i
            if bmax_v > gmax_v:
                gmax_v = bmax_v
                gmax_i = base + bmax_i
            pos += nchunk * lane
        for i in range(pos, n):
            v = a[i]
            if v < gmin_v:
                gmin_v = v
                gmin_i = i
            if v > gmax_v:
                gmax_v = v
                gmax_i = i
        return gmin_i, gmax_i

    return vector_direct


def make_vector_xor(lane, max_chunks, idt, xor_const):
    # a: signed view of an unsigned array; xor maps to ordinal space
    xc = xor_const

    @njit(nogil=True)
    def vector_xor(a):
        n = a.shape[0]
        gmin_v = a[0] ^ xc
        gmax_v = a[0] ^ xc
        gmin_i = np.int64(0)
        gmax_i = np.int64(0)
        lo_v = np.empty(lane, a.dtype)
        hi_v = np.empty(lane, a.dtype)
        lo_i = np.empty(lane, idt)
        hi_i = np.empty(lane, idt)
        pos = np.int64(0)
        while n - pos >= lane:
            nchunk = (n - pos) // lane
            if nchunk > max_chunks:
                nchunk = max_chunks
            base = pos
            for j in range(lane):
                v = a[base + j] ^ xc
                lo_v[j] = v
                hi_v[j] = v
                lo_i[j] = idt(j)
                hi_i[j] = idt(j)
            for c in range(1, nchunk):
                o = c * lane
                for j in range(lane):
                    v = a[base + o + j] ^ xc
                    cur = idt(o + j)
                    lt = v < lo_v[j]
                    gt = v > hi_v[j]
                    lo_i[j] = cur if lt else lo_i[j]
                    hi_i[j] = cur if gt else hi_i[j]
                    lo_v[j] = min(lo_v[j], v)
                    hi_v[j] = max(hi_v[j], v)
            bmin_v = lo_v[0]
            bmin_i = np.int64(lo_i[0])
            bmax_v = hi_v[0]
            bmax_i = np.int64(hi_i[0])
            for j in range(1, lane):
                if lo_v[j] < bmin_v or (
                    lo_v[j] == bmin_v and np.int64(lo_i[j]) < bmin_i
                ):
                    bmin_v = lo_v[j]
                    bmin_i = np.int64(lo_i[j])
                if hi_v[j] > bmax_v or (
                    hi_v[j] == bmax_v and np.int64(hi_i[j]) < bmax_i
                ):
                    bmax_v = hi_v[j]
                    bmax_i = np.int64(hi_i[j])
            if bmin_v < gmin_v:
                gmin_v = bmin_v
                gmin_i = base + bmin_i
            if bmax_v > gmax_v:
                gmax_v = bmax_v
                gmax_i = base + bmax_i
            pos += nchunk * lane
        for i in range(pos, n):
            v = a[i] ^ xc
            if v < gmin_v:
                gmin_v = v
                gmin_i = i
            if v > gmax_v:
                gmax_v = v
                gmax_i = i
        return gmin_i, gmax_i

    return vector_xor


def make_vector_f16ord(lane, max_chunks):
    # a: int16 view of f16 bit patterns
    idt = np.int16

    @njit(nogil=True)
    def vector_f16ord(a):
        n = a.shape[0]
        w = a[0]
        t0 = ((w >> np.int16(15)) & np.int16(0x7FFF)) ^ w
        gmin_v = t0
        gmax_v = t0
        gmin_i = np.int64(0)
        gmax_i = np.int64(0)
        lo_v = np.empty(lane, np.int16)
        hi_v = np.empty(lane, np.int16)
        lo_i = np.empty(lane, idt)
        hi_i = np.empty(lane, idt)
        pos = np.int64(0)
        while n - pos >= lane:
            nchunk = (n - pos) // lane
            if nchunk > max_chunks:
                nchunk = max_chunks
            base = pos
            for j in range(lane):
                w = a[base + j]
                v = ((w >> np.int16(15)) & np.int16(0x7FFF)) ^ w
                lo_v[j] = v
                hi_v[j] = v
                lo_i[j] = idt(j)
                hi_i[j] = idt(j)
            for c in range(1, nchunk):
                o = c * lane
                for j in range(lane):
                    w = a[base + o + j]
                    v = ((w >> np.int16(15)) & np.int16(0x7FFF)) ^ w
                    cur = idt(o + j)
                    lt = v < lo_v[j]
                    gt = v > hi_v[j]
                    lo_i[j] = cur if lt else lo_i[j]
                    hi_i[j] = cur if gt else hi_i[j]
                    lo_v[j] = min(lo_v[j], v)
                    hi_v[j] = max(hi_v[j], v)
            bmin_v = lo_v[0]
            bmin_i = np.int64(lo_i[0])
            bmax_v = hi_v[0]
            bmax_i = np.int64(hi_i[0])
            for j in range(1, lane):
                if lo_v[j] < bmin_v or (
                    lo_v[j] == bmin_v and np.int64(lo_i[j]) < bmin_i
                ):
                    bmin_v = lo_v[j]
                    bmin_i = np.int64(lo_i[j])
                if hi_v[j] > bmax_v or (
                    hi_v[j] == bmax_v and np.int64(hi_i[j]) < bmax_i
                ):
                    bmax_v = hi_v[j]
                    bmax_i = np.int64(hi_i[j])
            if bmin_v < gmin_v:
                gmin_v = bmin_v
                gmin_i = base + bmin_i
            if bmax_v > gmax_v:
                gmax_v = bmax_v
                gmax_i = base + bmax_i
            pos += nchunk * lane
        for i in range(pos, n):
            w = a[i]
            v = ((w >> np.int16(15)) & np.int16(0x7FFF)) ^ w
            if v < gmin_v:
                gmin_v = v
                gmin_i = i
            if v > gmax_v:
                gmax_v = v
                gmax_i = i
        return gmin_i, gmax_i

    return vector_f16ord


# ---------------------------------------------------------------------------
# per-bin selection

def make_bin_kernels(pair):
    """Per-bin extrema writers around an argminmax kernel `pair`.

    Both kernels fill disjoint slots of preallocated output arrays, so a
    bin range can be split across threads without any coordination.
    """

    @njit(nogil=True)
    def minmax_bins(a, off, b0, b1, idx, cnt):
        for b in range(b0, b1):
            s = off[b]
            e = off[b + 1]
            if e <= s:
                cnt[b] = 0
                continue
            i0, i1 = pair(a[s:e])
            lo = s + i0
            hi = s + i1
            k = 2 * b
            if lo == hi:
                idx[k] = lo
                cnt[b] = 1
            elif lo < hi:
                idx[k] = lo
                idx[k + 1] = hi
                cnt[b] = 2
            else:
                idx[k] = hi
                idx[k + 1] = lo
                cnt[b] = 2

    @njit(nogil=True)
    def m4_bins(a, off, b0, b1, idx, cnt):
        for b in range(b0, b1):
            s = off[b]
            e = off[b + 1]
            if e <= s:
                cnt[b] = 0
                continue
            i0, i1 = pair(a[s:e])
            p = s + min(i0, i1)
            q = s + max(i0, i1)
            k = 4 * b
            idx[k] = s
            m = 1
            if p > s:
                idx[k + m] = p
                m += 1
            if q > idx[k + m - 1]:
                idx[k + m] = q
                m += 1
            if e - 1 > idx[k + m - 1]:
                idx[k + m] = e - 1
                m += 1
            cnt[b] = m

    return minmax_bins, m4_bins


@njit(nogil=True)
def compact_bins(idx, cnt, width, total):
    """Concatenate the per-bin slots into one dense index array."""
    out = np.empty(total, np.int64)
    m = 0
    for b in range(cnt.shape[0]):
        k = b * width
        for t in range(cnt[b]):
            out[m] = idx[k + t]
            m += 1
    return out


# ---------------------------------------------------------------------------
# triangle-area selection

def make_lttb_implicit(yd):
    @njit(nogil=True)
    def lttb_implicit(y, off, out):
        n = y.shape[0]
        nb = off.shape[0] - 1
        ax = 0.0
        ay = yd(y[0])
        lastx = np.float64(n - 1)
        lasty = yd(y[n - 1])
        out[0] = 0
        m = 1
        for k in range(nb):
            s = off[k]
            e = off[k + 1]
            if e <= s:
                continue
            if k == nb - 1:
                cx = lastx
                cy = lasty
            else:
                s2 = off[k + 1]
                e2 = off[k + 2]
                if e2 <= s2:
                    cx = lastx
                    cy = lasty
                else:
                    sx = 0.0
                    sy = 0.0
                    for i in range(s2, e2):
                        sx += np.float64(i)
                        sy += yd(y[i])
                    cw = np.float64(e2 - s2)
                    cx = sx / cw
                    cy = sy / cw
            best = s
            besta = -1.0
            for i in range(s, e):
                by = yd(y[i])
                area = 0.5 * abs(
                    (ax - cx) * (by - ay) - (ax - np.float64(i)) * (cy - ay)
                )
                if area > besta:
                    besta = area
                    best = i
            out[m] = best
            m += 1
            ax = np.float64(best)
            ay = yd(y[best])
        out[m] = n - 1
        return m + 1

    return lttb_implicit


def make_lttb_explicit(yd):
    @njit(nogil=True)
    def lttb_explicit(x, y, off, out):
        n = y.shape[0]
        nb = off.shape[0] - 1
        ax = np.float64(x[0])
        ay = yd(y[0])
        lastx = np.float64(x[n - 1])
        lasty = yd(y[n - 1])
        out[0] = 0
        m = 1
        for k in range(nb):
            s = off[k]
            e = off[k + 1]
            if e <= s:
                continue
            if k == nb - 1:
                cx = lastx
                cy = lasty
            else:
                s2 = off[k + 1]
                e2 = off[k + 2]
                if e2 <= s2:
                    cx = lastx
                    cy = lasty
                else:
                    sx = 0.0
                    sy = 0.0
                    for i in range(s2, e2):
                        sx += np.float64(x[i])
                        sy += yd(y[i])
                    cw = np.float64(e2 - s2)
                    cx = sx / cw
                    cy = sy / cw
            best = s
            besta = -1.0
            for i in range(s, e):
                by = yd(y[i])
                area = 0.5 * abs(
                    (ax - cx) * (by - ay) - (ax - np.float64(x[i])) * (cy - ay)
                )
                if area > besta:
                    besta = area
                    best = i
            out[m] = best
            m += 1
            ax = np.float64(x[best])
            ay = yd(y[best])
        out[m] = n - 1
        return m + 1

    return lttb_explicit


@njit(inline="always")
def f64_of(v):
    return np.float64(v)


@njit(inline="always")
def f64_of_half_bits(h):
    """Decode the int16 bit pattern of an f16 into float64."""
    u = np.uint16(h)
    e = np.int64((u >> np.uint16(10)) & np.uint16(0x1F))
    f = np.int64(u & np.uint16(0x3FF))
    if e == 0:
        val = np.float64(f) * 5.960464477539063e-08  # 2**-24
    elif e == 31:
        val = np.nan if f != 0 else np.inf
    else:
        val = np.float64(f + 1024) * 2.0 ** (e - 25)
    return -val if (u & np.uint16(0x8000)) != 0 else val


# ---------------------------------------------------------------------------
# binning support

@njit(nogil=True)
def is_uniform_spaced(x):
    """True when consecutive gaps are all equal and positive."""
    n = x.shape[0]
    if n < 2:
        return False
    d = x[1] - x[0]
    if not (d > 0):
        return False
    for i in range(1, n - 1):
        if x[i + 1] - x[i] != d:
            return False
    return True


@njit(nogil=True)
def fill_width_offsets(x, x0, span, n_bins, k0, k1, out):
    """offsets[k] = first index i with float64(x[i]) >= edge k."""
    n = x.shape[0]
    for k in range(k0, k1):
        e = x0 + (np.float64(k) * span) / np.float64(n_bins)
        lo = np.int64(0)
        hi = np.int64(n)
        while lo < hi:
            mid = (lo + hi) >> 1
            if np.float64(x[mid]) < e:
                lo = mid + 1
            else:
                hi = mid
        out[k] = lo
