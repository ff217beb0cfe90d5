"""Benchmark harness.

Methodology: generate one random array per (dtype, n) outside the timed
region, warm each cell up with one untimed call (JIT compilation and
dispatch caches), then time `repeats` calls on a monotonic clock and
report median and standard deviation in milliseconds.  Cells never run
concurrently, so parallel cells measure only the library's own
threading.
"""

import statistics
import time
from dataclasses import dataclass, field

import numpy as np

from .api import downsample
from .dtypes import VALUE_DTYPES

DEFAULT_SIZES = (1_000_000, 10_000_000)
DEFAULT_ALGORITHMS = ("everynth", "minmax", "m4", "lttb", "minmaxlttb")

CSV_HEADER = "dtype,algorithm,parallel,n,median_ms,std_ms"


@dataclass
class BenchConfig:
    dtypes: tuple = ("f32", "f64")
    sizes: tuple = DEFAULT_SIZES
    n_out: int = 2000
    algorithms: tuple = DEFAULT_ALGORITHMS
    parallel: tuple = (False, True)
    repeats: int = 11
    seed: int = 42
    fmt: str = "csv"

    def validate(self):
        bad = [t for t in self.dtypes if t not in VALUE_DTYPES]
        if bad:
            raise ValueError(f"unsupported dtype: {', '.join(bad)}")
        bad = [a for a in self.algorithms if a not in DEFAULT_ALGORITHMS]
        if bad:
            raise ValueError(f"unknown algorithm: {', '.join(bad)}")
        if not self.sizes:
            raise ValueError("sizes must be non-empty")
        if self.repeats < 3:
            raise ValueError("repeats must be >= 3")
        if self.fmt not in ("csv", "markdown"):
            raise ValueError(f"unknown format: {self.fmt}")
        return self


@dataclass
class BenchRow:
    dtype: str
    algorithm: str
    parallel: bool
    n: int
    median_ms: float = float("nan")
    std_ms: float = float("nan")
    error: str = field(default="", repr=False)


def generate_data(dtype, n, seed):
    """Deterministic random series: full range for ints, uniform floats."""
    if dtype not in VALUE_DTYPES:
        raise ValueError("unsupported dtype")
    dt = VALUE_DTYPES[dtype]
    rng = np.random.default_rng(seed)
    if dt.kind in "iu":
        info = np.iinfo(dt)
        return rng.integers(info.min, info.max, size=n, dtype=dt, endpoint=True)
    if dt == np.float16:
        return rng.random(n, dtype=np.float32).astype(np.float16)
    return rng.random(n, dtype=dt)


def _time_cell(y, algorithm, par, n_out, repeats):
    downsample(algorithm, y, n_out=n_out, parallel=par)  # warm-up
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter_ns()
        downsample(algorithm, y, n_out=n_out, parallel=par)
        t1 = time.perf_counter_ns()
        times.append((t1 - t0) / 1e6)
    return statistics.median(times), statistics.stdev(times)


def run_bench(cfg, progress=None):
    """One BenchRow per (dtype, size, algorithm, parallel) combination."""
    cfg.validate()
    rows = []
    for dtype in cfg.dtypes:
        for n in cfg.sizes:
            y = generate_data(dtype, n, cfg.seed)
            for algorithm in cfg.algorithms:
                for par in cfg.parallel:
                    row = BenchRow(dtype, algorithm, bool(par), n)
                    try:
                        med, std = _time_cell(
                            y, algorithm, par, cfg.n_out, cfg.repeats
                        )
                        row.median_ms = med
                        row.std_ms = std
                    except Exception as exc:  # record, keep benching
                        row.error = str(exc)
                    rows.append(row)
                    if progress is not None:
                        progress(row)
            del y
    return rows


def _row_key(row):
    dtype_order = list(VALUE_DTYPES)
    algo_order = list(DEFAULT_ALGORITHMS)
    return (
        dtype_order.index(row.dtype),
        row.n,
        algo_order.index(row.algorithm),
        row.parallel,
    )


def emit_table(rows, fmt="csv"):
    """Render rows as bit-stable CSV or a pivoted markdown table."""
    rows = sorted(rows, key=_row_key)
    if fmt == "csv":
        lines = [CSV_HEADER]
        for r in rows:
            if r.error:
                med = std = ""
            else:
                med = f"{r.median_ms:.6f}"
                std = f"{r.std_ms:.6f}"
            lines.append(
                f"{r.dtype},{r.algorithm},{str(r.parallel).lower()},{r.n},{med},{std}"
            )
        return "\n".join(lines) + "\n"
    if fmt != "markdown":
        raise ValueError(f"unknown format: {fmt}")

    cols = []
    for r in rows:
        c = (r.algorithm, r.parallel)
        if c not in cols:
            cols.append(c)
    heads = ["dtype", "n"] + [
        f"{a} ({'parallel' if p else 'sequential'})" for a, p in cols
    ]
    cells = {}
    groups = []
    for r in rows:
        g = (r.dtype, r.n)
        if g not in groups:
            groups.append(g)
        cells[(g, (r.algorithm, r.parallel))] = (
            "err" if r.error else f"{r.median_ms:.3f} ± {r.std_ms:.3f}"
        )
    lines = [
        "| " + " | ".join(heads) + " |",
        "| " + " | ".join("---" for _ in heads) + " |",
    ]
    for g in groups:
        vals = [cells.get((g, c), "") for c in cols]
        lines.append(
            "| " + " | ".join([g[0], str(g[1])] + vals) + " |"
        )
    return "\n".join(lines) + "\n"
