"""Bin boundary generation.

Boundaries are n_bins+1 non-decreasing offsets; bin k covers the
half-open index range [offsets[k], offsets[k+1]) and the final bin also
absorbs the last element, so the bins always partition [0, len).

Two regimes:

* no x (or x with perfectly even spacing): exact integer arithmetic,
  offsets[k] = floor(k * len / n_bins);
* arbitrary non-decreasing x: float bin edges over the x span, each
  located by binary search.

Evenly spaced x is detected up front and routed to the integer formula,
which is what makes "same x spacing, same output" hold exactly instead
of within a float edge case.
"""

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import _kernels
from .dtypes import as_index_series


def _count_offsets(length, n_bins, k0, k1):
    k = np.arange(k0, k1, dtype=np.int64)
    return k * np.int64(length) // np.int64(n_bins)


def equal_count_boundaries(length, n_bins):
    """Split `length` items into `n_bins` near-equal runs.

    offsets[k] = floor(k * length / n_bins); every bin is within one
    element of length / n_bins, and even splits are exact.
    """
    if n_bins < 1:
        raise ValueError("invalid bin count")
    return _count_offsets(length, n_bins, 0, n_bins + 1).astype(np.uint64)


def _width_setup(x, n_bins):
    """Validated (x0, span) for the float-edge path, or a shortcut array."""
    length = x.shape[0]
    if length == 0:
        return None, None, np.zeros(n_bins + 1, np.int64)
    x0 = float(x[0])
    xn = float(x[length - 1])
    span = xn - x0
    if not np.isfinite(span):
        raise ValueError("invalid index span")
    if span == 0.0:
        # zero span: everything lands in the final (right-closed) bin
        out = np.zeros(n_bins + 1, np.int64)
        out[n_bins] = length
        return None, None, out
    return x0, span, None


def equal_width_boundaries(x, n_bins):
    """Split by equal x-width bins located via binary search.

    Edges are e_k = x[0] + k * (x[len-1] - x[0]) / n_bins in 64-bit
    float; offsets[k] is the first index with x >= e_k, with the outer
    offsets forced to 0 and len so coverage is total.  Perfectly even x
    falls back to the counting formula.
    """
    if n_bins < 1:
        raise ValueError("invalid bin count")
    x = as_index_series(x, np.asarray(x).shape[0])
    length = x.shape[0]
    x0, span, shortcut = _width_setup(x, n_bins)
    if shortcut is not None:
        return shortcut.astype(np.uint64)
    if _kernels.is_uniform_spaced(x):
        return equal_count_boundaries(length, n_bins)
    out = np.empty(n_bins + 1, np.int64)
    _kernels.fill_width_offsets(x, x0, span, n_bins, 1, n_bins, out)
    out[0] = 0
    out[n_bins] = length
    return out.astype(np.uint64)


def boundaries_parallel(x, length, n_bins, workers):
    """Same boundaries as the sequential functions, computed by chunks.

    Bins are assigned to workers in contiguous runs of
    ceil(n_bins / workers), so each worker reads one contiguous region
    of x; the output does not depend on scheduling.
    """
    if n_bins < 1:
        raise ValueError("invalid bin count")
    if workers < 1:
        raise ValueError("invalid worker count")
    if x is None:
        if workers == 1:
            return equal_count_boundaries(length, n_bins)
        out = np.empty(n_bins + 1, np.int64)
        chunk = -(-n_bins // workers)

        def count_run(k0, k1):
            out[k0:k1] = _count_offsets(length, n_bins, k0, k1)

        _fan_out(count_run, n_bins + 1, chunk, workers)
        return out.astype(np.uint64)

    x = as_index_series(x, length)
    if workers == 1:
        return equal_width_boundaries(x, n_bins)
    x0, span, shortcut = _width_setup(x, n_bins)
    if shortcut is not None:
        return shortcut.astype(np.uint64)
    if _kernels.is_uniform_spaced(x):
        return boundaries_parallel(None, length, n_bins, workers)
    out = np.empty(n_bins + 1, np.int64)
    chunk = -(-n_bins // workers)

    def width_run(k0, k1):
        _kernels.fill_width_offsets(x, x0, span, n_bins, k0, k1, out)

    _fan_out(width_run, n_bins + 1, chunk, workers)
    out[0] = 0
    out[n_bins] = length
    return out.astype(np.uint64)


def _fan_out(run, n_offsets, chunk, workers):
    spans = []
    k0 = 0
    while k0 < n_offsets:
        k1 = min(k0 + chunk, n_offsets)
        spans.append((k0, k1))
        k0 = k1
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(run, a, b) for a, b in spans]
        for f in futures:
            f.result()
