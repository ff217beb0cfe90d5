"""Element-type tags and input validation helpers.

Every public entry point funnels its arrays through :func:`as_value_series`
or :func:`as_index_series`, so dtype/contiguity errors carry uniform
messages no matter which algorithm raised them.
"""

import numpy as np

# Short tag -> numpy dtype, for the 11 supported value types.
VALUE_DTYPES = {
    "f16": np.dtype(np.float16),
    "f32": np.dtype(np.float32),
    "f64": np.dtype(np.float64),
    "i8": np.dtype(np.int8),
    "i16": np.dtype(np.int16),
    "i32": np.dtype(np.int32),
    "i64": np.dtype(np.int64),
    "u8": np.dtype(np.uint8),
    "u16": np.dtype(np.uint16),
    "u32": np.dtype(np.uint32),
    "u64": np.dtype(np.uint64),
}

TAG_BY_DTYPE = {dt: tag for tag, dt in VALUE_DTYPES.items()}

# Unsigned dtype -> signed dtype of equal width (re-view, never a cast).
SIGNED_VIEW = {
    np.dtype(np.uint8): np.dtype(np.int8),
    np.dtype(np.uint16): np.dtype(np.int16),
    np.dtype(np.uint32): np.dtype(np.int32),
    np.dtype(np.uint64): np.dtype(np.int64),
}


def tag_of(arr):
    """Short dtype tag ("f32", "u8", ...) for a supported array."""
    try:
        return TAG_BY_DTYPE[arr.dtype]
    except KeyError:
        raise ValueError("unsupported dtype") from None


def as_value_series(y):
    """Validate y as a 1-D contiguous array of a supported dtype.

    Array inputs are passed through without copying; other sequences are
    converted with ``np.asarray`` first (a convenience, not the fast path).
    """
    y = np.asarray(y)
    if y.dtype not in TAG_BY_DTYPE:
        raise ValueError("unsupported dtype")
    if y.ndim != 1:
        raise ValueError("expected a 1-D series")
    if not y.flags.c_contiguous:
        raise ValueError("non-contiguous input")
    return y


def as_index_series(x, length):
    """Validate optional x against its value series.

    datetime64 arrays are re-viewed as their 64-bit integer ticks.
    Monotonicity of x is a documented precondition and is not checked
    here; a full scan would rival the downsampling cost itself.
    """
    if x is None:
        return None
    x = np.asarray(x)
    if np.issubdtype(x.dtype, np.datetime64):
        x = x.view(np.int64)
    if x.dtype not in TAG_BY_DTYPE or x.dtype == np.float16:
        raise ValueError("unsupported dtype")
    if x.ndim != 1:
        raise ValueError("expected a 1-D series")
    if not x.flags.c_contiguous:
        raise ValueError("non-contiguous input")
    if x.shape[0] != length:
        raise ValueError("length mismatch")
    return x
