"""Shared test fixtures and data generators."""

import numpy as np
import pytest

# verdict lines collected by the acceptance tests, echoed after the run
VERDICTS = []


def pytest_terminal_summary(terminalreporter):
    if VERDICTS:
        terminalreporter.section("acceptance verdicts")
        for line in VERDICTS:
            terminalreporter.write_line(line)


ALL_TAGS = (
    "f16",
    "f32",
    "f64",
    "i8",
    "i16",
    "i32",
    "i64",
    "u8",
    "u16",
    "u32",
    "u64",
)

DTYPES = {
    "f16": np.float16,
    "f32": np.float32,
    "f64": np.float64,
    "i8": np.int8,
    "i16": np.int16,
    "i32": np.int32,
    "i64": np.int64,
    "u8": np.uint8,
    "u16": np.uint16,
    "u32": np.uint32,
    "u64": np.uint64,
}


def random_series(tag, n, seed, ties=False):
    """Deterministic random series; with ties=True, runs of duplicated
    extreme values are splattered across the array."""
    dt = np.dtype(DTYPES[tag])
    rng = np.random.default_rng(seed)
    if dt.kind in "iu":
        info = np.iinfo(dt)
        y = rng.integers(info.min, info.max, size=n, dtype=dt, endpoint=True)
    elif dt == np.float16:
        y = rng.random(n, dtype=np.float32).astype(np.float16)
    else:
        y = rng.random(n, dtype=dt)
    if ties and n >= 4:
        lo = y.min()
        hi = y.max()
        k = max(2, min(64, n // 7))
        y[rng.integers(0, n, size=k)] = lo
        y[rng.integers(0, n, size=k)] = hi
        run = rng.integers(0, max(1, n - 3))
        y[run : run + 3] = lo
    return y


def random_x(n, seed, gaps=False, dtype=np.int64):
    """Non-decreasing index series, optionally with large gaps."""
    rng = np.random.default_rng(seed)
    steps = rng.integers(1, 5, size=n).astype(np.int64)
    if gaps and n > 4:
        jumps = rng.integers(0, n, size=max(1, n // 100))
        steps[jumps] += rng.integers(10_000, 100_000, size=jumps.shape[0])
    x = np.cumsum(steps) - steps[0]
    return x.astype(dtype)


@pytest.fixture(scope="session")
def warm_kernels():
    """Compile the dispatch kernels once so timing tests see steady state."""
    import thinseries as ts

    for tag in ALL_TAGS:
        y = random_series(tag, 256, 1)
        ts.argminmax(y)
        ts.argminmax_scalar(y)
        ts.argminmax_vector(y)
    return True
