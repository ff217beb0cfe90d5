"""The five downsampling algorithms.

All of them return ascending unsigned 64-bit indices into the value
series.  Selection happens bin by bin: the extrema-based algorithms call
the argmin/argmax kernel on each bin's slice, the triangle algorithm
walks bins left to right.  A series no longer than the requested output
is returned as-is (identity selection).

Duplicate picks inside a bin (argmin == argmax, or extrema coinciding
with a bin's first/last element) are emitted once, so fewer than n_out
indices can come back even without gaps.
"""

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import _kernels
from .binning import (
    boundaries_parallel,
    equal_count_boundaries,
    equal_width_boundaries,
)
from .extrema import _pair_kernel

_bin_kernels_by_pair = {}
_lttb_kernels = {}


def _identity(length):
    return np.arange(length, dtype=np.uint64)


def _resolve_workers(workers):
    if workers is None:
        return os.cpu_count() or 1
    if workers < 1:
        raise ValueError("invalid worker count")
    return workers


def _bin_kernels(pair):
    kerns = _bin_kernels_by_pair.get(pair)
    if kerns is None:
        kerns = _kernels.make_bin_kernels(pair)
        _bin_kernels_by_pair[pair] = kerns
    return kerns


def _lttb_kernel(mode, half):
    key = (mode, half)
    k = _lttb_kernels.get(key)
    if k is None:
        yd = _kernels.f64_of_half_bits if half else _kernels.f64_of
        make = (
            _kernels.make_lttb_implicit
            if mode == "implicit"
            else _kernels.make_lttb_explicit
        )
        k = make(yd)
        _lttb_kernels[key] = k
    return k


def _interior_offsets(x, length, n_bins, parallel, workers):
    """Offsets partitioning interior indices 1..length-2 into n_bins."""
    if x is None:
        if parallel and workers > 1:
            off = boundaries_parallel(None, length - 2, n_bins, workers)
        else:
            off = equal_count_boundaries(length - 2, n_bins)
    else:
        xi = x[1 : length - 1]
        if parallel and workers > 1:
            off = boundaries_parallel(xi, length - 2, n_bins, workers)
        else:
            off = equal_width_boundaries(xi, n_bins)
    return off.view(np.int64) + 1


def _run_bins(kern, a, off, n_bins, width, parallel, workers):
    idx = np.empty(width * n_bins, np.int64)
    cnt = np.empty(n_bins, np.int64)
    if not parallel or workers == 1:
        kern(a, off, 0, n_bins, idx, cnt)
    else:
        chunk = -(-n_bins // workers)
        spans = [
            (b0, min(b0 + chunk, n_bins)) for b0 in range(0, n_bins, chunk)
        ]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(kern, a, off, b0, b1, idx, cnt)
                for b0, b1 in spans
            ]
            for f in futures:
                f.result()
    total = int(cnt.sum())
    return _kernels.compact_bins(idx, cnt, width, total)


def _check_not_empty(y):
    if y.shape[0] == 0:
        raise ValueError("empty series")


def every_nth(length, n_out):
    """Stride selection: indices 0, s, 2s, ... with s = ceil(len / n_out)."""
    if n_out < 1:
        raise ValueError("invalid n_out")
    if length <= n_out:
        return _identity(length)
    stride = -(-length // n_out)
    return np.arange(0, length, stride, dtype=np.uint64)


def minmax(x, y, n_out, parallel=False, workers=None):
    """Per bin: the positions of the minimum and maximum value."""
    if n_out < 2:
        raise ValueError("invalid n_out")
    if n_out % 2:
        raise ValueError("n_out must be a multiple of 2")
    _check_not_empty(y)
    length = y.shape[0]
    if length <= n_out:
        return _identity(length)
    workers = _resolve_workers(workers)
    n_bins = n_out // 2
    if x is None:
        if parallel and workers > 1:
            off = boundaries_parallel(None, length, n_bins, workers)
        else:
            off = equal_count_boundaries(length, n_bins)
    else:
        if parallel and workers > 1:
            off = boundaries_parallel(x, length, n_bins, workers)
        else:
            off = equal_width_boundaries(x, n_bins)
    a, pair = _pair_kernel(y)
    kern = _bin_kernels(pair)[0]
    sel = _run_bins(
        kern, a, off.view(np.int64), n_bins, 2, parallel, workers
    )
    return sel.astype(np.uint64)


def m4(x, y, n_out, parallel=False, workers=None):
    """Per bin: first index, argmin, argmax, last index (sorted, deduped)."""
    if n_out < 4:
        raise ValueError("invalid n_out")
    if n_out % 4:
        raise ValueError("n_out must be a multiple of 4")
    _check_not_empty(y)
    length = y.shape[0]
    if length <= n_out:
        return _identity(length)
    workers = _resolve_workers(workers)
    n_bins = n_out // 4
    if x is None:
        if parallel and workers > 1:
            off = boundaries_parallel(None, length, n_bins, workers)
        else:
            off = equal_count_boundaries(length, n_bins)
    else:
        if parallel and workers > 1:
            off = boundaries_parallel(x, length, n_bins, workers)
        else:
            off = equal_width_boundaries(x, n_bins)
    a, pair = _pair_kernel(y)
    kern = _bin_kernels(pair)[1]
    sel = _run_bins(
        kern, a, off.view(np.int64), n_bins, 4, parallel, workers
    )
    return sel.astype(np.uint64)


def _lttb_views(y):
    if y.dtype == np.float16:
        return y.view(np.int16), True
    return y, False


def lttb(x, y, n_out, parallel=False, workers=None):
    """Largest-triangle selection over n_out-2 interior bins.

    Endpoints are always kept.  Walking bins left to right, each bin
    contributes the point spanning the largest triangle between the
    previously selected point and the centroid of the next bin (the
    final point stands in for the bin after the last).  Areas are
    computed in 64-bit float whatever the input dtype.  The parallel
    flag is accepted for interface symmetry but the walk is inherently
    sequential.
    """
    if n_out < 3:
        raise ValueError("n_out too small for LTTB")
    _check_not_empty(y)
    length = y.shape[0]
    if length <= n_out:
        return _identity(length)
    off = _interior_offsets(x, length, n_out - 2, False, 1)
    yv, half = _lttb_views(y)
    out = np.empty(n_out, np.int64)
    if x is None:
        m = _lttb_kernel("implicit", half)(yv, off, out)
    else:
        m = _lttb_kernel("explicit", half)(x, yv, off, out)
    return out[:m].astype(np.uint64)


def minmaxlttb(x, y, n_out, ratio=4, parallel=False, workers=None):
    """Two-stage LTTB: min/max preselection, then the triangle pass.

    Interior bins aligned with the n_out-2 triangle bins are split into
    ceil(ratio/2) sub-bins each; every sub-bin contributes its argmin
    and argmax.  The triangle stage then runs over candidates only, with
    their original positions as x, and results map back to the input.
    Short series (len <= n_out * ratio) skip preselection entirely.
    """
    if n_out < 3:
        raise ValueError("n_out too small for LTTB")
    if ratio < 1:
        raise ValueError("invalid ratio")
    _check_not_empty(y)
    length = y.shape[0]
    if length <= n_out * ratio:
        return lttb(x, y, n_out, parallel=parallel, workers=workers)
    workers = _resolve_workers(workers)
    nsub = (n_out - 2) * ((ratio + 1) // 2)
    off = _interior_offsets(x, length, nsub, parallel, workers)
    a, pair = _pair_kernel(y)
    kern = _bin_kernels(pair)[0]
    sel = _run_bins(kern, a, off, nsub, 2, parallel, workers)

    full = np.empty(sel.shape[0] + 2, np.int64)
    full[0] = 0
    full[1:-1] = sel
    full[-1] = length - 1
    m = full.shape[0]
    if m <= n_out:
        return full.astype(np.uint64)

    y2 = y[full]
    yv, half = _lttb_views(y2)
    out = np.empty(n_out, np.int64)
    if x is None:
        # candidate positions stand in for x; bins split by count so the
        # stage stays aligned with the preselection bins
        off2 = equal_count_boundaries(m - 2, n_out - 2).view(np.int64) + 1
        m2 = _lttb_kernel("explicit", half)(full, yv, off2, out)
    else:
        x2 = x[full]
        off2 = equal_width_boundaries(x2[1:-1], n_out - 2).view(np.int64) + 1
        m2 = _lttb_kernel("explicit", half)(x2, yv, off2, out)
    return full[out[:m2]].astype(np.uint64)
