"""CPU-optimized, zero-copy time series downsampling.

Select up to ``n_out`` representative indices from a long series with
EveryNth, MinMax, M4, LTTB or MinMaxLTTB, all built on a single-pass
argmin/argmax kernel with runtime CPU dispatch.

>>> import numpy as np, thinseries
>>> y = np.random.default_rng(0).random(1_000_000, dtype=np.float32)
>>> idx = thinseries.downsample("minmaxlttb", y, n_out=1000)
>>> idx.dtype, len(idx)
(dtype('uint64'), 1000)
"""

from .api import (
    Downsampler,
    EveryNthDownsampler,
    LTTBDownsampler,
    M4Downsampler,
    MinMaxDownsampler,
    MinMaxLTTBDownsampler,
    downsample,
)
from .binning import (
    boundaries_parallel,
    equal_count_boundaries,
    equal_width_boundaries,
)
from .dtypes import as_index_series, as_value_series
from .extrema import (
    argminmax,
    argminmax_scalar,
    argminmax_vector,
    ord_transform_i16,
    ord_transform_uint,
)
from .features import FeatureSet, detect_features

__version__ = "0.1.0"

__all__ = [
    "Downsampler",
    "EveryNthDownsampler",
    "MinMaxDownsampler",
    "M4Downsampler",
    "LTTBDownsampler",
    "MinMaxLTTBDownsampler",
    "downsample",
    "argminmax",
    "argminmax_scalar",
    "argminmax_vector",
    "ord_transform_i16",
    "ord_transform_uint",
    "equal_count_boundaries",
    "equal_width_boundaries",
    "boundaries_parallel",
    "FeatureSet",
    "detect_features",
    "as_value_series",
    "as_index_series",
    "__version__",
]
