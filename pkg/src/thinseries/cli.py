"""Command line interface.

Subcommands:

* ``bench`` runs the benchmark harness and writes CSV or markdown;
  ``bench features`` prints the detected CPU capabilities.
* ``features`` is a shorthand for the same capability report.
* ``downsample`` is a streaming endpoint for foreign callers: raw
  little-endian values in (x bytes, when given, followed by y bytes),
  raw uint64 indices out.  Errors print their message to stderr and
  exit 1; bad invocations exit 2.
"""

import argparse
import sys

import numpy as np

from .api import downsample
from .bench import BenchConfig, emit_table, run_bench
from .dtypes import VALUE_DTYPES
from .features import detect_features


def _csv_list(text):
    return tuple(t for t in (p.strip() for p in text.split(",")) if t)


def _sizes(text):
    try:
        return tuple(int(p) for p in _csv_list(text))
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid sizes: {text!r}")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="thinseries",
        description="Time series downsampling toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bench", help="run the benchmark harness")
    b.add_argument(
        "topic",
        nargs="?",
        choices=["features"],
        help="print CPU capabilities instead of benchmarking",
    )
    b.add_argument("--dtypes", type=_csv_list, default=("f32", "f64"))
    b.add_argument("--sizes", type=_sizes, default=(1_000_000, 10_000_000))
    b.add_argument("--n-out", type=int, default=2000)
    b.add_argument(
        "--algos",
        type=_csv_list,
        default=("everynth", "minmax", "m4", "lttb", "minmaxlttb"),
    )
    b.add_argument(
        "--parallel", choices=["true", "false", "both"], default="both"
    )
    b.add_argument("--repeats", type=int, default=11)
    b.add_argument("--seed", type=int, default=42)
    b.add_argument("--format", choices=["csv", "markdown"], default="csv")
    b.add_argument("--out", default="-", help="output path, - for stdout")
    b.add_argument(
        "--quiet", action="store_true", help="suppress per-cell progress"
    )

    sub.add_parser("features", help="print CPU capabilities")

    d = sub.add_parser("downsample", help="downsample a raw binary stream")
    d.add_argument("--algo", required=True)
    d.add_argument("--dtype", required=True, choices=sorted(VALUE_DTYPES))
    d.add_argument("--count", type=int, required=True, help="element count")
    d.add_argument("--n-out", type=int, required=True)
    d.add_argument(
        "--x-dtype",
        default=None,
        choices=sorted(set(VALUE_DTYPES) - {"f16"}),
        help="when given, x precedes y on the input stream",
    )
    d.add_argument("--parallel", action="store_true")
    d.add_argument("--ratio", type=int, default=None)
    d.add_argument("--workers", type=int, default=None)
    d.add_argument("--input", default="-", help="input path, - for stdin")
    d.add_argument("--output", default="-", help="output path, - for stdout")
    return parser


def _print_features(stream):
    fs = detect_features()
    stream.write(f"cpu: {fs.cpu}\n")
    stream.write(f"levels: {','.join(fs.levels)}\n")
    stream.write(f"selected: {fs.selected}\n")


def _le(dtype_tag):
    dt = VALUE_DTYPES[dtype_tag]
    return dt.newbyteorder("<")


def _read_exact(stream, nbytes):
    data = stream.read(nbytes)
    if data is None or len(data) != nbytes:
        raise ValueError("truncated input stream")
    return data


def _cmd_downsample(args):
    stream = sys.stdin.buffer if args.input == "-" else open(args.input, "rb")
    try:
        x = None
        if args.x_dtype is not None:
            xdt = _le(args.x_dtype)
            raw = _read_exact(stream, args.count * xdt.itemsize)
            x = np.frombuffer(raw, dtype=xdt)
            if not x.dtype.isnative:
                x = x.astype(x.dtype.newbyteorder("="))
        ydt = _le(args.dtype)
        raw = _read_exact(stream, args.count * ydt.itemsize)
        y = np.frombuffer(raw, dtype=ydt)
        if not y.dtype.isnative:
            y = y.astype(y.dtype.newbyteorder("="))
    finally:
        if stream is not sys.stdin.buffer:
            stream.close()

    kwargs = {"n_out": args.n_out, "parallel": args.parallel}
    if args.workers is not None:
        kwargs["workers"] = args.workers
    if args.ratio is not None:
        kwargs["minmax_ratio"] = args.ratio
    series = (y,) if x is None else (x, y)
    idx = downsample(args.algo, *series, **kwargs)

    payload = idx.astype(np.dtype(np.uint64).newbyteorder("<"), copy=False)
    if args.output == "-":
        sys.stdout.buffer.write(payload.tobytes())
        sys.stdout.buffer.flush()
    else:
        with open(args.output, "wb") as f:
            f.write(payload.tobytes())
    return 0


def _cmd_bench(args):
    cfg = BenchConfig(
        dtypes=args.dtypes,
        sizes=args.sizes,
        n_out=args.n_out,
        algorithms=args.algos,
        parallel={
            "true": (True,),
            "false": (False,),
            "both": (False, True),
        }[args.parallel],
        repeats=args.repeats,
        seed=args.seed,
        fmt=args.format,
    )
    cfg.validate()

    progress = None
    if not args.quiet:

        def progress(row):
            state = row.error if row.error else f"{row.median_ms:.3f} ms"
            print(
                f"{row.dtype} {row.algorithm} parallel={row.parallel} "
                f"n={row.n}: {state}",
                file=sys.stderr,
            )

    rows = run_bench(cfg, progress=progress)
    text = emit_table(rows, cfg.fmt)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as f:
            f.write(text)
    return 0


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "features":
            _print_features(sys.stdout)
            return 0
        if args.command == "bench":
            if args.topic == "features":
                _print_features(sys.stdout)
                return 0
            return _cmd_bench(args)
        return _cmd_downsample(args)
    except (ValueError, TypeError) as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
