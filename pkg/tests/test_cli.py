import json
import subprocess
import sys

import pytest

from squaretori.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_plain(line):
    return dict(item.split("=", 1) for item in line.split())


# --- goldens ---------------------------------------------------------------

def test_count_plain(capsys):
    code, out, err = run_cli(capsys, "count", "4")
    assert code == 0 and err == ""
    assert out == "n=4 psi=6 sigma=7 rho=0.857142857143\n"


def test_count_csv(capsys):
    code, out, err = run_cli(capsys, "--format", "csv", "count", "12")
    assert code == 0 and err == ""
    assert out == "n,psi,sigma,rho\n12,24,28,0.857142857143\n"


def test_count_json(capsys):
    code, out, err = run_cli(capsys, "--format", "json", "count", "1")
    assert code == 0 and err == ""
    payload = json.loads(out)
    assert payload == {"n": 1, "psi": 1, "sigma": 1, "rho": 1}


def test_enumerate_one(capsys):
    code, out, err = run_cli(capsys, "enumerate", "1")
    assert code == 0 and err == ""
    assert out == "w h t cyclic\n1 1 0 true\n"


def test_enumerate_two_all_cyclic(capsys):
    code, out, err = run_cli(capsys, "--format", "csv", "enumerate", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "w,h,t,cyclic"
    assert lines[1:] == ["1,2,0,true", "2,1,0,true", "2,1,1,true"]


def test_enumerate_cyclic_only(capsys):
    code, out, err = run_cli(
        capsys, "--format", "csv", "enumerate", "4", "--cyclic-only"
    )
    assert code == 0
    rows = out.splitlines()[1:]
    assert len(rows) == 6
    assert "2,2,0,false" not in rows
    code, out, err = run_cli(capsys, "--format", "csv", "enumerate", "4")
    assert len(out.splitlines()) == 1 + 7


def test_classify_identity(capsys):
    code, out, err = run_cli(capsys, "classify", "1", "0", "0", "1")
    assert code == 0
    assert parse_plain(out.strip()) == {
        "w": "1", "h": "1", "t": "0", "n": "1", "content": "1",
        "d1": "1", "d2": "1", "cyclic": "true",
    }


def test_classify_doubled_lattice(capsys):
    code, out, err = run_cli(capsys, "classify", "2", "0", "0", "2")
    assert code == 0
    values = parse_plain(out.strip())
    assert values["n"] == "4" and values["content"] == "2"
    assert (values["d1"], values["d2"]) == ("2", "2")
    assert values["cyclic"] == "false"


def test_classify_reduction(capsys):
    code, out, err = run_cli(capsys, "classify", "0", "2", "3", "1")
    assert code == 0
    values = parse_plain(out.strip())
    assert (values["w"], values["h"], values["t"]) == ("6", "1", "3")
    assert values["n"] == "6" and values["content"] == "1"
    assert values["cyclic"] == "true"


def test_sweep_one(capsys):
    code, out, err = run_cli(capsys, "sweep", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[1] == "1 1 1 1 1 1 1"
    assert lines[2].startswith("final cum_ratio=1 ")


def test_sweep_ten_csv(capsys):
    code, out, err = run_cli(capsys, "--format", "csv", "sweep", "10")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,psi,sigma,rho,cum_psi,cum_sigma,cum_ratio"
    assert lines[1] == "1,1,1,1,1,1,1"
    assert lines[4] == "4,6,7,0.857142857143,14,15,0.933333333333"
    assert lines[10] == "10,18,18,1,82,87,0.942528735632"
    assert lines[11] == "# final cum_ratio=0.942528735632 deviation=0.0185903327106"


def test_extremal_table(capsys):
    code, out, err = run_cli(capsys, "--format", "csv", "extremal", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "k,rho,deviation"
    assert lines[1].startswith("1,1,")
    assert lines[2].startswith("2,0.791208791209,")


def test_extremal_deviations_decrease(capsys):
    code, out, err = run_cli(capsys, "--format", "csv", "extremal", "12")
    devs = [float(line.split(",")[2]) for line in out.splitlines()[1:]]
    assert all(d >= 0 for d in devs)
    assert all(b < a for a, b in zip(devs[1:], devs[2:]))  # from k=2 onward


# --- cross-format and determinism -------------------------------------------

@pytest.mark.parametrize(
    "argv",
    [
        ("count", "12"),
        ("enumerate", "6"),
        ("classify", "2", "4", "1", "5"),
        ("sweep", "8"),
        ("extremal", "5"),
    ],
)
def test_identical_invocations_are_byte_identical(capsys, argv):
    _, first, _ = run_cli(capsys, *argv)
    _, second, _ = run_cli(capsys, *argv)
    assert first == second


@pytest.mark.parametrize(
    "argv", [("count", "4"), ("count", "1"), ("classify", "2", "0", "0", "2")]
)
def test_formats_carry_the_same_values(capsys, argv):
    _, plain, _ = run_cli(capsys, *argv)
    _, csv_text, _ = run_cli(capsys, "--format", "csv", *argv)
    _, json_text, _ = run_cli(capsys, "--format", "json", *argv)
    from_plain = parse_plain(plain.strip())
    header, row = (line.split(",") for line in csv_text.splitlines())
    from_csv = dict(zip(header, row))
    from_json = {
        k: str(v).lower() if isinstance(v, bool) else str(v)
        for k, v in json.loads(json_text).items()
    }
    assert from_plain == from_csv == from_json


def test_extremal_formats_agree(capsys):
    _, csv_text, _ = run_cli(capsys, "--format", "csv", "extremal", "6")
    _, json_text, _ = run_cli(capsys, "--format", "json", "extremal", "6")
    _, plain, _ = run_cli(capsys, "extremal", "6")
    csv_rows = [line.split(",") for line in csv_text.splitlines()[1:]]
    json_rows = [json.loads(line) for line in json_text.splitlines()]
    plain_rows = [line.split() for line in plain.splitlines()[1:]]
    for row, payload, words in zip(csv_rows, json_rows, plain_rows):
        assert int(row[0]) == payload["k"] == int(words[0])
        assert float(row[1]) == payload["rho"] == float(words[1])
        assert float(row[2]) == payload["deviation"] == float(words[2])


def test_sweep_formats_agree(capsys):
    _, csv_text, _ = run_cli(capsys, "--format", "csv", "sweep", "6")
    _, json_text, _ = run_cli(capsys, "--format", "json", "sweep", "6")
    csv_rows = [line.split(",") for line in csv_text.splitlines()[1:-1]]
    json_rows = [json.loads(line) for line in json_text.splitlines()[:-1]]
    for row, payload in zip(csv_rows, json_rows):
        assert int(row[0]) == payload["n"]
        assert int(row[1]) == payload["psi"]
        assert int(row[2]) == payload["sigma"]
        assert float(row[3]) == payload["rho"]
        assert int(row[4]) == payload["cum_psi"]
        assert int(row[5]) == payload["cum_sigma"]
        assert float(row[6]) == payload["cum_ratio"]


# --- errors and exit codes -----------------------------------------------------

def test_zero_is_a_domain_error(capsys):
    code, out, err = run_cli(capsys, "count", "0")
    assert code == 1 and out == "" and err != ""


def test_overflow_is_reported(capsys):
    code, out, err = run_cli(capsys, "count", str(3 * 2**61))
    assert code == 1 and "error" in err


def test_rank_error_exit(capsys):
    code, out, err = run_cli(capsys, "classify", "1", "0", "2", "0")
    assert code == 1 and err != ""


def test_enumeration_budget_exit(capsys):
    code, out, err = run_cli(capsys, "--max-triples", "3", "enumerate", "12")
    assert code == 1 and err != ""


def test_sieve_budget_exit(capsys):
    code, out, err = run_cli(capsys, "--max-sieve", "100", "sweep", "200")
    assert code == 1 and err != ""


def test_extremal_range_exit(capsys):
    # must refuse up front: no partial table on stdout
    code, out, err = run_cli(capsys, "extremal", "51")
    assert code == 1 and err != "" and out == ""
    code, out, err = run_cli(capsys, "extremal", "0")
    assert code == 1 and err != "" and out == ""


def test_usage_error_exits_with_two(capsys):
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["count", "not-a-number"])
    assert info.value.code == 2


# --- the installed module entry point -------------------------------------------

def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "squaretori", "--format", "json", "count", "4"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert result.returncode == 0
    assert result.stderr == ""
    assert json.loads(result.stdout)["psi"] == 6
