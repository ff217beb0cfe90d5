"""Runtime CPU capability detection and kernel geometry.

The extrema kernels are written against a portable fixed-width lane
abstraction; at import time we only need to know which vector register
width the host supports so the dispatcher can pick lane counts that the
JIT backend will actually turn into vector code.

Set ``THINSERIES_FORCE_LEVEL`` to ``scalar``, ``128``, ``256`` or ``512``
to override detection (useful for testing the fallback paths).
"""

import os
from dataclasses import dataclass


@dataclass(frozen=True)
class FeatureSet:
    cpu: str
    levels: tuple  # capability levels, "scalar" always present
    vector_bits: int  # widest vector width in bits, 0 when scalar-only

    @property
    def selected(self):
        return "scalar" if self.vector_bits == 0 else str(self.vector_bits)


# Lane counts (elements per chunk) per vector width and element size.
# Tuned so one chunk spans a few hardware registers; larger chunks give
# the JIT room to unroll, smaller ones waste the horizontal reduction.
_LANES = {
    512: {1: 16, 2: 32, 4: 64, 8: 32},
    256: {1: 16, 2: 32, 4: 32, 8: 16},
    128: {1: 16, 2: 16, 4: 16, 8: 8},
}

_INDEX_MAX = {1: 127, 2: 32767, 4: 2147483647, 8: 9223372036854775807}


def _detect(force=None):
    """Uncached detection; `force` overrides the probed level."""
    cpu = "unknown"
    flags = set()
    try:
        from llvmlite import binding

        cpu = binding.get_host_cpu_name()
        feats = binding.get_host_cpu_features()
        flags = {name for name, on in feats.items() if on}
    except Exception:
        pass

    levels = ["scalar"]
    if {"sse2", "neon"} & flags:
        levels.append("128")
    if "avx2" in flags:
        levels.append("256")
    if {"avx512f", "avx512bw"} <= flags:
        levels.append("512")

    if force is not None:
        force = str(force)
        if force == "scalar":
            return FeatureSet(cpu, tuple(levels), 0)
        if force in levels:
            return FeatureSet(cpu, tuple(levels), int(force))
        # Unsupported override: fall through to the detected maximum.

    bits = 0 if len(levels) == 1 else int(levels[-1])
    return FeatureSet(cpu, tuple(levels), bits)


_CACHED = None


def detect_features():
    """FeatureSet of the executing CPU, computed once per process."""
    global _CACHED
    if _CACHED is None:
        _CACHED = _detect(os.environ.get("THINSERIES_FORCE_LEVEL"))
    return _CACHED


def lane_count(itemsize, vector_bits):
    """Elements per lane chunk for a given element size and width.

    Scalar-only hosts still get the narrowest geometry: the blocked
    kernel is plain portable code and stays correct without vector
    units, it just compiles to scalar instructions there.
    """
    table = _LANES.get(vector_bits, _LANES[128])
    return table[itemsize]


def block_chunks(itemsize, lane):
    """Chunks per overflow-free block.

    Index lanes are as wide as the data lanes, so a block may only grow
    until the largest in-block offset still fits the signed index lane:
    floor(MAX_SIGNED / lane) chunks.
    """
    return _INDEX_MAX[itemsize] // lane
