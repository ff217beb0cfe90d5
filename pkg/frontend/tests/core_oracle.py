"""Batch oracle: run manifest cases through the core API in one process.

Reads a JSON manifest of cases (raw little-endian array files plus call
parameters), runs each through `thinseries.downsample` directly, and
prints all index lists as JSON.  Keeping this a single process means the
JIT warm-up cost is paid once for the whole conformance matrix.
"""

import json
import sys

import numpy as np

import thinseries
from thinseries.dtypes import VALUE_DTYPES


def load(path, tag):
    arr = np.fromfile(path, dtype=VALUE_DTYPES[tag].newbyteorder("<"))
    return arr.astype(arr.dtype.newbyteorder("="), copy=False)


def main():
    with open(sys.argv[1]) as f:
        manifest = json.load(f)
    results = []
    for case in manifest:
        y = load(case["yFile"], case["yDtype"])
        args = [y]
        if "xFile" in case:
            args.insert(0, load(case["xFile"], case["xDtype"]))
        kwargs = {"n_out": case["nOut"]}
        if "ratio" in case:
            kwargs["minmax_ratio"] = case["ratio"]
        idx = thinseries.downsample(case["algo"], *args, **kwargs)
        results.append([int(i) for i in idx])
    json.dump(results, sys.stdout)


if __name__ == "__main__":
    main()
