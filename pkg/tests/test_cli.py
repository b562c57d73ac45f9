import json

import pytest

from latticerect.cli import (
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_RESOURCE,
    EXIT_USAGE,
    digest,
    main,
)
from latticerect.onevalue import f_divisorlayer


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_divisorlayer_example(capsys):
    code, out, _ = run(capsys, "compute", "--n", "1024",
                       "--algo", "divisorlayer")
    assert code == EXIT_OK
    assert out == "1275797150128\n"


def test_compute_all_algo_choices_agree(capsys):
    want = f"{f_divisorlayer(100)}\n"
    for algo in ("baseline", "sqrt", "cuberoot", "tenmoment",
                 "divisorlayer", "auto"):
        code, out, _ = run(capsys, "compute", "--n", "100", "--algo", algo)
        assert code == EXIT_OK
        assert out == want


def test_compute_csv_and_jsonl(capsys):
    code, out, _ = run(capsys, "compute", "--n", "4", "--format", "csv",
                       "--header")
    assert code == EXIT_OK
    assert out == "n,value\n4,44\n"
    code, out, _ = run(capsys, "compute", "--n", "4", "--format", "jsonl")
    assert code == EXIT_OK
    rec = json.loads(out)
    assert rec == {"n": 4, "value": "44", "algo": "auto"}


def test_table_csv_example(capsys):
    code, out, _ = run(capsys, "table", "--max", "4", "--format", "csv")
    assert code == EXIT_OK
    assert out == "1,0\n2,1\n3,10\n4,44\n"


def test_table_csv_bytes_are_stable(capsys):
    runs = [run(capsys, "table", "--max", "50", "--format", "csv",
                "--header")[1] for _ in range(2)]
    assert runs[0] == runs[1]
    lines = runs[0].splitlines()
    assert lines[0] == "n,value"
    assert len(lines) == 51
    for i, line in enumerate(lines[1:], start=1):
        n_str, v_str = line.split(",")
        assert n_str == str(i)
        assert v_str == str(f_divisorlayer(i))
        assert v_str == str(int(v_str))  # canonical decimal


def test_table_output_file(tmp_path, capsys):
    path = tmp_path / "t.csv"
    code, out, _ = run(capsys, "table", "--max", "3", "--format", "csv",
                       "--out", str(path))
    assert code == EXIT_OK
    assert out == ""
    assert path.read_text() == "1,0\n2,1\n3,10\n"


def test_table_resource_refusal(capsys):
    code, _, err = run(capsys, "table", "--max", str(2 ** 22 + 1))
    assert code == EXIT_RESOURCE
    assert "force" in err


def test_verify_all_algorithms(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "64", "--algos", "all")
    assert code == EXIT_OK
    assert "ok" in out


def test_verify_single_n_and_bad_algo(capsys):
    code, out, _ = run(capsys, "verify", "--n", "500",
                       "--algos", "cuberoot,divisorlayer")
    assert code == EXIT_OK
    code, _, err = run(capsys, "verify", "--algos", "nosuch,baseline")
    assert code == EXIT_USAGE
    code, _, err = run(capsys, "verify", "--algos", "baseline")
    assert code == EXIT_USAGE
    code, _, err = run(capsys, "verify", "--max-n", str(2 ** 20 + 1))
    assert code == EXIT_RESOURCE


def test_verify_detects_mismatch(capsys, monkeypatch):
    import latticerect.cli as cli

    broken = dict(cli.ALGORITHMS)
    broken["sqrt"] = lambda n: cli.ALGORITHMS["baseline"](n) + (n == 7)
    monkeypatch.setattr(cli, "ALGORITHMS", broken)
    code, out, _ = run(capsys, "verify", "--max-n", "10",
                       "--algos", "baseline,sqrt")
    assert code == EXIT_MISMATCH
    assert out.startswith("MISMATCH n=7:")


def test_bench_csv_shape(capsys):
    code, out, _ = run(capsys, "bench", "4", "5", "--algos",
                       "baseline,divisorlayer", "--repeats", "3",
                       "--format", "csv", "--header")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "algo,n,seconds,repeats,digest"
    assert len(lines) == 5
    for line in lines[1:]:
        algo, n, seconds, repeats, dig = line.split(",")
        assert algo in ("baseline", "divisorlayer")
        assert int(n) in (16, 32)
        assert float(seconds) >= 0.0
        assert repeats == "3"
        value = f_divisorlayer(int(n))
        assert dig == digest(value)


def test_digest_format():
    assert digest(1275797150128) == "12757971:13"
    assert digest(7) == "7:1"
    assert digest(-12345678901) == "12345678:11"


def test_asymptotic_output(capsys):
    code, out, _ = run(capsys, "asymptotic", "8", "10", "--format", "csv",
                       "--header")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "k,n,residual,residual_minus_B"
    assert len(lines) == 4
    for k, line in zip((8, 9, 10), lines[1:]):
        ks, ns, res, diff = line.split(",")
        assert int(ks) == k and int(ns) == 2 ** k
        float(res), float(diff)  # parseable floats
    code, _, _ = run(capsys, "asymptotic", "5", "3")
    assert code == EXIT_USAGE


def test_usage_errors(capsys):
    assert run(capsys, "compute")[0] == EXIT_USAGE       # missing --n
    assert run(capsys, "nosuchverb")[0] == EXIT_USAGE
    assert run(capsys, "compute", "--n", "-3")[0] == EXIT_USAGE


def test_entry_point_installed():
    import shutil
    import subprocess

    exe = shutil.which("latticerect")
    assert exe, "console script not installed"
    got = subprocess.run([exe, "compute", "--n", "4"],
                         capture_output=True, text=True)
    assert got.returncode == 0
    assert got.stdout == "44\n"
