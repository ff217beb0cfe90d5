"""Public downsampling API.

`downsample` is the single functional entry point; the *Downsampler
classes wrap it in small stateless estimator objects (get_params /
set_params / fit / transform) so they drop into pipelines that expect
that protocol.
"""

import inspect

import numpy as np

from . import _kernels, algorithms
from .dtypes import as_index_series, as_value_series

_ALGORITHMS = ("everynth", "minmax", "m4", "lttb", "minmaxlttb")


def _normalize_x(x):
    """Drop x when its spacing carries no information.

    Evenly spaced x selects exactly like no x at all, and routing both
    through the literal same code path is what makes that equality exact
    rather than approximate.
    """
    if x is not None and _kernels.is_uniform_spaced(x):
        return None
    return x


def downsample(algorithm, *args, n_out, parallel=False, workers=None, **kwargs):
    """Select up to n_out representative indices from a series.

    Parameters
    ----------
    algorithm : str
        One of "everynth", "minmax", "m4", "lttb", "minmaxlttb".
    *args : [x,] y
        The value series y, optionally preceded by a non-decreasing
        index series x of the same length.
    n_out : int
        Requested number of output points (keyword-only).
    parallel : bool
        Process bins concurrently.  Output is bit-identical to the
        sequential run; the triangle walk of lttb stays sequential.
    workers : int, optional
        Worker cap for parallel runs; defaults to the host CPU count.
    minmax_ratio : int
        minmaxlttb only: preselected candidates per output point
        (default 4).

    Returns
    -------
    numpy.ndarray
        Strictly ascending uint64 indices into y, at most n_out of them.
    """
    if algorithm not in _ALGORITHMS:
        raise ValueError(f"unknown algorithm: {algorithm!r}")
    if len(args) == 1:
        x, y = None, args[0]
    elif len(args) == 2:
        x, y = args
    else:
        raise TypeError("expected positional arguments ([x,] y)")
    y = as_value_series(y)
    x = as_index_series(x, y.shape[0])
    if algorithm == "minmaxlttb":
        ratio = kwargs.pop("minmax_ratio", 4)
    if kwargs:
        raise TypeError(f"unexpected keyword arguments: {sorted(kwargs)}")

    if algorithm == "everynth":
        return algorithms.every_nth(y.shape[0], n_out)
    x = _normalize_x(x)
    if algorithm == "minmax":
        return algorithms.minmax(x, y, n_out, parallel=parallel, workers=workers)
    if algorithm == "m4":
        return algorithms.m4(x, y, n_out, parallel=parallel, workers=workers)
    if algorithm == "lttb":
        return algorithms.lttb(x, y, n_out, parallel=parallel, workers=workers)
    return algorithms.minmaxlttb(
        x, y, n_out, ratio=ratio, parallel=parallel, workers=workers
    )


class Downsampler:
    """Stateless estimator around one downsampling algorithm.

    Subclasses pin the algorithm; parameters live on the instance so
    `get_params` / `set_params` round-trip them like any estimator.
    """

    _algorithm = None

    def __init__(self, n_out=2000, parallel=False):
        self.n_out = n_out
        self.parallel = parallel

    def get_params(self, deep=True):
        sig = inspect.signature(type(self).__init__)
        return {
            name: getattr(self, name)
            for name in sig.parameters
            if name != "self"
        }

    def set_params(self, **params):
        valid = self.get_params()
        for key, value in params.items():
            if key not in valid:
                raise ValueError(
                    f"invalid parameter {key!r} for {type(self).__name__}"
                )
            setattr(self, key, value)
        return self

    def _call_kwargs(self, overrides):
        kwargs = {k: v for k, v in self.get_params().items()}
        kwargs.update({k: v for k, v in overrides.items() if v is not None})
        return kwargs

    def downsample(self, *args, **overrides):
        """Indices for ([x,] y); keywords override instance parameters."""
        return downsample(
            self._algorithm, *args, **self._call_kwargs(overrides)
        )

    def fit(self, X, y=None):
        """Validate input; downsampling keeps no state worth learning."""
        as_value_series(X)
        return self

    def transform(self, X):
        """The selected values themselves, as a new (small) array."""
        X = as_value_series(X)
        return X[self.downsample(X)]

    def fit_transform(self, X, y=None):
        return self.fit(X).transform(X)


class EveryNthDownsampler(Downsampler):
    _algorithm = "everynth"


class MinMaxDownsampler(Downsampler):
    _algorithm = "minmax"


class M4Downsampler(Downsampler):
    _algorithm = "m4"


class LTTBDownsampler(Downsampler):
    _algorithm = "lttb"


class MinMaxLTTBDownsampler(Downsampler):
    _algorithm = "minmaxlttb"

    def __init__(self, n_out=2000, parallel=False, minmax_ratio=4):
        super().__init__(n_out=n_out, parallel=parallel)
        self.minmax_ratio = minmax_ratio
