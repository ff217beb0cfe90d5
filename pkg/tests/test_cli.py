"""Command line surface: features report, bench output, binary endpoint."""

import subprocess
import sys

import numpy as np
import pytest

from thinseries import downsample
from thinseries.bench import CSV_HEADER
from thinseries.cli import main
from thinseries.features import detect_features


def le(a):
    return a.astype(a.dtype.newbyteorder("<"), copy=False).tobytes()


def read_indices(path):
    return np.fromfile(path, dtype=np.dtype(np.uint64).newbyteorder("<"))


def test_features_report(capsys):
    assert main(["features"]) == 0
    lines = capsys.readouterr().out.splitlines()
    fs = detect_features()
    assert lines[0] == f"cpu: {fs.cpu}"
    assert lines[1] == f"levels: {','.join(fs.levels)}"
    assert lines[2] == f"selected: {fs.selected}"
    assert fs.selected in fs.levels


def test_bench_features_alias(capsys):
    assert main(["bench", "features"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("cpu: ")
    assert "selected: " in out


BENCH_ARGS = [
    "bench",
    "--dtypes", "f32",
    "--sizes", "600",
    "--n-out", "50",
    "--algos", "minmax",
    "--parallel", "false",
    "--repeats", "3",
]


def test_bench_csv_to_file(tmp_path, capsys):
    out = tmp_path / "rows.csv"
    assert main(BENCH_ARGS + ["--quiet", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 2
    dtype, algo, par, n, med, std = lines[1].split(",")
    assert (dtype, algo, par, n) == ("f32", "minmax", "false", "600")
    assert float(med) > 0 and float(std) >= 0
    assert capsys.readouterr().out == ""


def test_bench_markdown_stdout_with_progress(capsys):
    assert main(BENCH_ARGS + ["--format", "markdown"]) == 0
    captured = capsys.readouterr()
    assert captured.out.startswith("| dtype | n |")
    # progress lines go to stderr so they never pollute piped tables
    assert "f32 minmax parallel=False n=600:" in captured.err


def test_bench_unknown_algorithm_exits_1(capsys):
    assert main(["bench", "--algos", "median", "--quiet"]) == 1
    assert "unknown algorithm: median" in capsys.readouterr().err


def test_bench_malformed_sizes_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["bench", "--sizes", "1e6"])
    assert exc.value.code == 2


def run_endpoint(tmp_path, payload, args):
    src = tmp_path / "in.bin"
    dst = tmp_path / "out.bin"
    src.write_bytes(payload)
    code = main(
        ["downsample", *args, "--input", str(src), "--output", str(dst)]
    )
    return code, dst


def test_endpoint_roundtrip_f64(tmp_path):
    y = np.random.default_rng(0).random(1000)
    code, dst = run_endpoint(
        tmp_path,
        le(y),
        ["--algo", "minmax", "--dtype", "f64", "--count", "1000",
         "--n-out", "10"],
    )
    assert code == 0
    assert np.array_equal(read_indices(dst), downsample("minmax", y, n_out=10))


def test_endpoint_roundtrip_with_x(tmp_path):
    rng = np.random.default_rng(1)
    x = np.cumsum(rng.integers(1, 5, 400)).astype(np.int64)
    y = rng.random(400, dtype=np.float32)
    code, dst = run_endpoint(
        tmp_path,
        le(x) + le(y),
        ["--algo", "m4", "--dtype", "f32", "--x-dtype", "i64",
         "--count", "400", "--n-out", "8"],
    )
    assert code == 0
    assert np.array_equal(read_indices(dst), downsample("m4", x, y, n_out=8))


def test_endpoint_roundtrip_f16(tmp_path):
    y = np.random.default_rng(2).random(512, np.float32).astype(np.float16)
    code, dst = run_endpoint(
        tmp_path,
        le(y),
        ["--algo", "lttb", "--dtype", "f16", "--count", "512",
         "--n-out", "20"],
    )
    assert code == 0
    assert np.array_equal(read_indices(dst), downsample("lttb", y, n_out=20))


def test_endpoint_passes_tuning_flags(tmp_path):
    y = np.random.default_rng(3).random(5000)
    code, dst = run_endpoint(
        tmp_path,
        le(y),
        ["--algo", "minmaxlttb", "--dtype", "f64", "--count", "5000",
         "--n-out", "40", "--ratio", "3", "--parallel", "--workers", "2"],
    )
    assert code == 0
    want = downsample(
        "minmaxlttb", y, n_out=40, minmax_ratio=3, parallel=True, workers=2
    )
    assert np.array_equal(read_indices(dst), want)


def test_endpoint_truncated_stream(tmp_path, capsys):
    code, _ = run_endpoint(
        tmp_path,
        b"\x00" * 79,  # one byte short of 10 float64 values
        ["--algo", "minmax", "--dtype", "f64", "--count", "10",
         "--n-out", "2"],
    )
    assert code == 1
    assert capsys.readouterr().err.strip() == "truncated input stream"


def test_endpoint_core_error_text_verbatim(tmp_path, capsys):
    code, _ = run_endpoint(
        tmp_path,
        le(np.zeros(10)),
        ["--algo", "minmax", "--dtype", "f64", "--count", "10",
         "--n-out", "3"],
    )
    assert code == 1
    assert capsys.readouterr().err.strip() == "n_out must be a multiple of 2"


def test_endpoint_unknown_algorithm(tmp_path, capsys):
    code, _ = run_endpoint(
        tmp_path,
        le(np.zeros(4)),
        ["--algo", "mean", "--dtype", "f64", "--count", "4", "--n-out", "2"],
    )
    assert code == 1
    assert capsys.readouterr().err.strip() == "unknown algorithm: 'mean'"


def test_endpoint_missing_input_file_exits_1(tmp_path, capsys):
    code = main(
        ["downsample", "--algo", "minmax", "--dtype", "f64", "--count", "4",
         "--n-out", "2", "--input", str(tmp_path / "absent.bin")]
    )
    assert code == 1
    assert "absent.bin" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["downsample", "--dtype", "f64", "--count", "4", "--n-out", "2"],
        ["downsample", "--algo", "minmax", "--dtype", "f128", "--count", "4",
         "--n-out", "2"],
        ["downsample", "--algo", "minmax", "--dtype", "f64", "--x-dtype",
         "f16", "--count", "4", "--n-out", "2"],
        ["nonsense"],
    ],
)
def test_invocation_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_endpoint_over_real_pipes():
    # one end-to-end run through an actual child process and stdin/stdout
    y = np.random.default_rng(4).random(2000, dtype=np.float32)
    proc = subprocess.run(
        [sys.executable, "-m", "thinseries", "downsample",
         "--algo", "minmaxlttb", "--dtype", "f32",
         "--count", "2000", "--n-out", "16"],
        input=le(y),
        capture_output=True,
        timeout=300,
    )
    assert proc.returncode == 0, proc.stderr.decode()
    got = np.frombuffer(proc.stdout, dtype=np.dtype(np.uint64).newbyteorder("<"))
    assert np.array_equal(got, downsample("minmaxlttb", y, n_out=16))
