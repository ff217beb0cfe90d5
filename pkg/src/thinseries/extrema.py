"""Single-pass argmin/argmax with runtime kernel dispatch.

The comparison domain is always a signed integer or float order:

* signed ints and floats compare natively,
* unsigned ints are re-viewed as signed and XORed with the most negative
  value of the width (a strictly monotone involution),
* f16 is re-viewed as int16 and mapped through the ordinal transform
  ``((v >> 15) & 0x7FFF) ^ v`` (monotone over non-NaN patterns) instead
  of being upcast.

Ties resolve to the first occurrence on both the scalar and the lane
paths, so the two are interchangeable bit for bit.
"""

import numpy as np

from . import _kernels
from .dtypes import SIGNED_VIEW, as_value_series
from .features import block_chunks, detect_features, lane_count

_INDEX_DTYPE = {1: np.int8, 2: np.int16, 4: np.int32, 8: np.int64}

# xor constant mapping unsigned order onto signed order, per signed width
_XOR_CONST = {
    np.dtype(np.int8): np.int8(-128),
    np.dtype(np.int16): np.int16(-32768),
    np.dtype(np.int32): np.int32(-2147483648),
    np.dtype(np.int64): np.int64(-9223372036854775808),
}

_scalar_direct = _kernels.make_scalar_direct()
_scalar_f16ord = _kernels.make_scalar_f16ord()

_vector_cache = {}


def ord_transform_i16(v):
    """Map f16 bit patterns (as int16) onto an order-preserving int16.

    Accepts a scalar or an array.  The shift is arithmetic, so for
    non-negative patterns this is the identity and for negative ones it
    flips the magnitude bits.  Applying it twice returns the input.
    """
    v = np.asarray(v, dtype=np.int16)
    r = ((v >> 15) & np.int16(0x7FFF)) ^ v
    return r if r.ndim else np.int16(r)


_UNSIGNED_VIEW = {v: k for k, v in SIGNED_VIEW.items()}


def ord_transform_uint(v):
    """Map unsigned ints onto signed ints of the same width, preserving order.

    The value is re-viewed as signed and XORed with the smallest signed
    value of that width.  Strictly monotone; feeding a signed result
    back through runs the inverse direction, so the map is an involution.
    """
    a = np.asarray(v)
    if a.dtype in SIGNED_VIEW:
        signed = SIGNED_VIEW[a.dtype]
        r = a.view(signed) ^ _XOR_CONST[signed]
    elif a.dtype in _XOR_CONST:
        r = (a ^ _XOR_CONST[a.dtype]).view(_UNSIGNED_VIEW[a.dtype])
    else:
        raise ValueError("unsupported dtype")
    return r if a.ndim else r[()]


def _comparison_view(y):
    """(array in comparison domain, transform kind) without copying."""
    dt = y.dtype
    if dt == np.float16:
        return y.view(np.int16), "f16ord"
    if dt in SIGNED_VIEW:
        return y.view(SIGNED_VIEW[dt]), "xor"
    return y, "direct"


def _vector_kernel(kind, itemsize):
    fs = detect_features()
    lane = lane_count(itemsize, fs.vector_bits)
    chunks = block_chunks(itemsize, lane)
    key = (kind, lane, chunks)
    k = _vector_cache.get(key)
    if k is None:
        idt = _INDEX_DTYPE[itemsize]
        if kind == "f16ord":
            k = _kernels.make_vector_f16ord(lane, chunks)
        elif kind == "xor":
            xc = _XOR_CONST[np.dtype(_INDEX_DTYPE[itemsize])]
            k = _kernels.make_vector_xor(lane, chunks, idt, xc)
        else:
            k = _kernels.make_vector_direct(lane, chunks, idt)
        _vector_cache[key] = k
    return k


def _pair_kernel(y):
    """(comparison-domain view, kernel) downstream bin loops should use."""
    a, kind = _comparison_view(y)
    if detect_features().vector_bits == 0:
        if kind == "f16ord":
            return a, _scalar_f16ord
        # unsigned values compare natively on the scalar path
        return (y if kind == "xor" else a), _scalar_direct
    return a, _vector_kernel(kind, a.dtype.itemsize)


def argminmax_scalar(v):
    """(argmin, argmax) by a plain strict-comparison scan.

    This is the reference path: one left-to-right pass, `<`/`>` only,
    so the earliest index wins every tie.
    """
    v = as_value_series(v)
    if v.shape[0] == 0:
        raise ValueError("empty series")
    if v.dtype == np.float16:
        i, j = _scalar_f16ord(v.view(np.int16))
    else:
        i, j = _scalar_direct(v)
    return int(i), int(j)


def argminmax_vector(v):
    """(argmin, argmax) via the blocked lane kernel.

    Bit-identical to :func:`argminmax_scalar` for every input; worth
    calling directly only to pin the lane path (e.g. in tests), since
    :func:`argminmax` already dispatches here when profitable.
    """
    v = as_value_series(v)
    if v.shape[0] == 0:
        raise ValueError("empty series")
    a, kind = _comparison_view(v)
    i, j = _vector_kernel(kind, a.dtype.itemsize)(a)
    return int(i), int(j)


def argminmax(v):
    """(argmin, argmax) through the widest kernel the CPU supports."""
    v = as_value_series(v)
    if v.shape[0] == 0:
        raise ValueError("empty series")
    a, kind = _comparison_view(v)
    if detect_features().vector_bits == 0:
        if kind == "f16ord":
            i, j = _scalar_f16ord(a)
        else:
            i, j = _scalar_direct(v if kind == "xor" else a)
        return int(i), int(j)
    i, j = _vector_kernel(kind, a.dtype.itemsize)(a)
    return int(i), int(j)


def lane_of(dtype):
    """Lane width (elements per chunk) selected for `dtype` on this host."""
    itemsize = np.dtype(dtype).itemsize
    return lane_count(itemsize, detect_features().vector_bits)
