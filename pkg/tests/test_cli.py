import subprocess
import sys

import pytest

import raney.numbers
from raney.cli import main
from raney.records import Record, format_record, parse_record


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def column(out, index):
    return [int(line.split()[index]) for line in out.splitlines()[1:]]


def test_raney_table(capsys):
    status, out, _ = run(capsys, "raney", "--p", "4", "--r", "2", "--k-max", "3")
    assert status == 0
    assert column(out, 1) == [1, 2, 9, 52]


def test_raney_catalan_and_ones(capsys):
    assert column(run(capsys, "raney", "--p", "2", "--r", "1", "--k-max", "4")[1], 1) == [1, 1, 2, 5, 14]
    assert set(column(run(capsys, "raney", "--p", "1", "--r", "1", "--k-max", "9")[1], 1)) == {1}


def test_raney_check_columns(capsys):
    status, out, _ = run(capsys, "raney", "--p", "3", "--r", "2", "--k-max", "6", "--check")
    assert status == 0
    lines = out.splitlines()
    assert lines[0].split() == ["k", "closed", "composition_sum", "convolution", "agree"]
    assert all(line.split()[-1] == "ok" for line in lines[1:])


def test_large_values_printed_in_full(capsys):
    _, out, _ = run(capsys, "raney", "--p", "5", "--r", "3", "--k-max", "40")
    last = out.splitlines()[-1].split()[1]
    assert int(last) == raney.numbers.raney_closed(5, 3, 40)
    assert "e" not in last.lower()


def test_catalan(capsys):
    status, out, _ = run(capsys, "catalan", "--p", "3", "--k-max", "4")
    assert status == 0 and column(out, 1) == [1, 1, 3, 12, 55]


@pytest.mark.parametrize("p,r,k,expected", [(2, 2, 1, 2), (3, 2, 0, 1), (4, 2, 1, 2), (2, 2, 3, 14)])
def test_enumerate_records(capsys, p, r, k, expected):
    status, out, _ = run(capsys, "enumerate", "--p", str(p), "--r", str(r), "--k", str(k))
    assert status == 0
    lines = out.splitlines()
    assert len(lines) == expected
    recs = [parse_record(line) for line in lines]
    assert [rec.code for rec in recs] == sorted(rec.code for rec in recs)
    assert all(rec[:3] == (p, r, k) for rec in recs)


def test_enumerate_methods_agree(capsys):
    a = run(capsys, "enumerate", "--p", "3", "--r", "2", "--k", "3")[1]
    b = run(capsys, "enumerate", "--p", "3", "--r", "2", "--k", "3", "--method", "tiered")[1]
    assert a == b


def test_enumerate_dot_files(capsys, tmp_path):
    out_dir = tmp_path / "dots"
    status, out, _ = run(capsys, "enumerate", "--p", "2", "--r", "2", "--k", "2", "--format", "dot",
                         "--out", str(out_dir))
    assert status == 0 and out == ""
    files = sorted(out_dir.glob("*.dot"))
    assert len(files) == 5
    assert files[0].read_text().startswith("graph coral_p2_r2_k2_0000 {")


def test_records_to_file(capsys, tmp_path):
    target = tmp_path / "corals.txt"
    assert run(capsys, "enumerate", "--p", "2", "--r", "1", "--k", "4", "--out", str(target))[0] == 0
    assert len(target.read_text().splitlines()) == 14


def test_unwritable_out_path(capsys, tmp_path):
    target = tmp_path / "missing" / "x.txt"
    status, _, err = run(capsys, "enumerate", "--p", "2", "--r", "1", "--k", "1", "--out", str(target))
    assert status == 3 and err


def test_size_cap_exit_status(capsys, monkeypatch):
    assert run(capsys, "enumerate", "--p", "2", "--r", "2", "--k", "6", "--cap", "100")[0] == 3
    monkeypatch.setenv("RANEY_CAP", "10")
    assert run(capsys, "enumerate", "--p", "2", "--r", "2", "--k", "3")[0] == 3
    assert run(capsys, "webs", "minus", "--k", "3")[0] == 3
    monkeypatch.setenv("RANEY_CAP", "lots")
    assert run(capsys, "enumerate", "--p", "2", "--r", "2", "--k", "3")[0] == 2


@pytest.mark.parametrize("argv", [
    ["raney", "--p", "0", "--r", "1", "--k-max", "2"],
    ["raney", "--p", "2"],
    ["enumerate", "--p", "2", "--r", "2", "--k", "1", "--format", "table"],
    ["webs", "sideways", "--k", "1"],
    ["webs", "minus", "--k", "1", "--p", "3"],
    ["conjecture", "--n", "2", "--j", "1", "--k-max", "2"],
    ["conjecture", "--n", "4", "--j", "4", "--k-max", "2"],
    ["nonsense"],
    [],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


@pytest.mark.parametrize("variant,k,expected", [("constant", 1, 2), ("minus", 1, 1), ("constant", 0, 1),
                                                ("constant", 3, 52), ("minus", 3, 22)])
def test_webs_records(capsys, variant, k, expected):
    status, out, _ = run(capsys, "webs", variant, "--k", str(k))
    assert status == 0
    recs = [parse_record(line) for line in out.splitlines()]
    assert len(recs) == expected
    sign = "-" if variant == "minus" else "+"
    assert all(rec.boundary.startswith(sign) and len(rec.classes) == len(rec.code) for rec in recs)


def test_webs_constant_records_exact(capsys):
    out = run(capsys, "webs", "constant", "--k", "1")[1]
    assert out == ("4 2 1 3,0,0,2,2,0,0,2,0,0 ++++++ oiiioiioii\n"
                   "4 2 1 3,0,2,2,0,0,2,0,0,0 ++++++ oiioiioiii\n")


def test_webs_dot(capsys):
    status, out, _ = run(capsys, "webs", "constant", "--k", "1", "--format", "dot")
    assert status == 0
    assert out.count("digraph") == 2 and " -> " in out


def test_webs_constant_p3(capsys):
    status, out, _ = run(capsys, "webs", "constant", "--k", "1", "--p", "3")
    assert status == 0 and len(out.splitlines()) == 3
    assert all(line.startswith("9 3 1 ") for line in out.splitlines())


def test_conjecture_table(capsys):
    status, out, _ = run(capsys, "conjecture", "--n", "3", "--j", "2", "--k-max", "3")
    assert status == 0
    assert "UNVERIFIED" in out.splitlines()[0]
    body = [line for line in out.splitlines() if not line.startswith("#")]
    assert column("\n".join(body), 1) == [1, 2, 9, 52]
    out = run(capsys, "conjecture", "--n", "4", "--j", "1", "--k-max", "1")[1]
    body = [line.split() for line in out.splitlines() if not line.startswith("#")][1:]
    assert body == [["0", "1", "1"], ["1", "6", "6"]]


def test_verify_quick(capsys):
    status, out, _ = run(capsys, "verify", "--k-max", "2")
    assert status == 0
    lines = out.splitlines()
    names = [line.split()[1] for line in lines[:-1]]
    assert len(names) == len(set(names)) == 13
    assert lines[-1] == "13/13 suites passed"


def test_verify_detects_corruption(capsys, monkeypatch):
    real = raney.numbers.raney_composition_sum
    monkeypatch.setattr(raney.numbers, "raney_composition_sum", lambda p, r, k: real(p, r, k) + (k == 3))
    status, out, _ = run(capsys, "verify", "--k-max", "3")
    assert status == 1
    assert "FAIL  triple-identity" in out


def test_verify_reports_crashing_suite(capsys, monkeypatch):
    def boom(*args):
        raise RuntimeError("broken")

    monkeypatch.setattr(raney.numbers, "p_catalan", boom)
    status, out, _ = run(capsys, "verify", "--k-max", "1")
    assert status == 1 and "RuntimeError: broken" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "raney", "catalan", "--k-max", "3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert column(proc.stdout, 1) == [1, 1, 2, 5]


def test_record_roundtrip():
    for rec in [Record(2, 2, 1, (3, 0, 0, 2, 0, 0)),
                Record(4, 1, 1, (3, 0, 2, 0, 0, 2, 0, 0), "-++++", "iooiioii")]:
        line = format_record(rec)
        assert parse_record(line) == rec
        assert format_record(parse_record(line)) == line


@pytest.mark.parametrize("line", ["1 2 3", "1 2 3 2,0", "2 2 1 3,0,0,0 ++x oiii", "2 2 1 3,0,0,0 +++ oii"])
def test_record_rejects_garbage(line):
    with pytest.raises(ValueError):
        parse_record(line)


def test_cli_records_reencode_byte_identical(capsys):
    for argv in (["enumerate", "--p", "3", "--r", "2", "--k", "3"], ["webs", "constant", "--k", "2"],
                 ["webs", "minus", "--k", "2"]):
        out = run(capsys, *argv)[1]
        again = "".join(format_record(parse_record(line)) + "\n" for line in out.splitlines())
        assert again == out
