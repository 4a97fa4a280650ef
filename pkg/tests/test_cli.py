import io
import json

import pytest

from bisetcover.bisets import DEFAULT_ENUMERATION_CAP, set_enumeration_cap
from bisetcover.cli import build_parser, main
from bisetcover.instances import parse_instance
from bisetcover.rationals import rat
from bisetcover.verify import certify_solution

K4 = "4 6 2\n0 1 1\n0 2 1\n0 3 1\n1 2 1\n1 3 1\n2 3 1\n"
PATH4 = "4 3 2\n0 1 1\n1 2 1\n2 3 1\n"


@pytest.fixture(autouse=True)
def _restore_cap():
    yield
    set_enumeration_cap(DEFAULT_ENUMERATION_CAP)


@pytest.fixture
def k4_file(tmp_path):
    p = tmp_path / "k4.txt"
    p.write_text(K4)
    return str(p)


def run_cli(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def test_solve_exit_zero(k4_file):
    code, text = run_cli(["--input", k4_file])
    assert code == 0
    assert "cost = 4/1" in text
    assert "final-connectivity" in text


def test_oracle_mode_reports_true_ratio(k4_file, tmp_path):
    report = tmp_path / "rep.json"
    code, text = run_cli(
        ["--input", k4_file, "--mode", "oracle", "--json", str(report)]
    )
    assert code == 0
    doc = json.loads(report.read_text())
    assert doc["oracle"]["opt_cost"]["rat"] == "4/1"
    assert doc["oracle"]["true_ratio"]["rat"] == "1/1"
    assert "true ratio = 1/1" in text


def test_json_report_reloadable(k4_file, tmp_path):
    report = tmp_path / "rep.json"
    code, _ = run_cli(["--input", k4_file, "--json", str(report)])
    assert code == 0
    doc = json.loads(report.read_text())
    inst = parse_instance(doc["instance"])
    res = certify_solution(
        inst, doc["k"], [tuple(e) for e in doc["solution"]["edges"]], doc
    )
    assert res.passed
    assert doc["cost"] == {"rat": "4/1", "approx": 4.0}


def test_classify_mode(k4_file, tmp_path):
    report = tmp_path / "cls.json"
    code, text = run_cli(
        ["--input", k4_file, "--mode", "classify", "--json", str(report)]
    )
    assert code == 0
    doc = json.loads(report.read_text())
    assert doc["verdicts"]["crossing_supermodular"]["holds"]
    assert doc["verdicts"]["symmetric"]["holds"]
    assert not doc["verdicts"]["independence_free"]["holds"]
    assert "crossing_supermodular: holds" in text


def test_classify_mode_area_variant(k4_file):
    code, text = run_cli(
        ["--input", k4_file, "--mode", "classify", "--r1", "0,1,2"]
    )
    assert code == 0
    assert "area(kcs(k=2), R=[0, 1, 2])" in text


def test_infeasible_exit_three(tmp_path, capsys):
    p = tmp_path / "path4.txt"
    p.write_text(PATH4)
    code, _ = run_cli(["--input", str(p)])
    assert code == 3
    err = capsys.readouterr().err
    assert "infeasible" in err
    assert "biset" in err.lower()


def test_parse_error_exit_two(tmp_path, capsys):
    p = tmp_path / "dup.txt"
    p.write_text("3 2 1\n0 1 1\n0 1 2\n")
    code, _ = run_cli(["--input", str(p)])
    assert code == 2
    assert "line 3" in capsys.readouterr().err


def test_missing_input_exit_two(capsys):
    code, _ = run_cli([])
    assert code == 2
    assert "--input or --seed" in capsys.readouterr().err


def test_bad_r1_exit_two(k4_file, capsys):
    code, _ = run_cli(["--input", k4_file, "--r1", "0,9"])
    assert code == 2
    assert "out of range" in capsys.readouterr().err


def test_k_flag_overrides_header(k4_file):
    code, text = run_cli(["--input", k4_file, "--k", "1"])
    assert code == 0
    assert "k=1" in text


def test_r1_flag_reaches_solver(tmp_path):
    lines = ["8 28 2"]
    for u in range(8):
        for v in range(u + 1, 8):
            lines.append(f"{u} {v} 1")
    p = tmp_path / "k8.txt"
    p.write_text("\n".join(lines) + "\n")
    code, text = run_cli(["--input", str(p), "--r1", "5,6,7"])
    assert code == 0
    assert "R=[5, 6, 7]" in text


def test_seed_generates_instance(tmp_path):
    report = tmp_path / "seeded.json"
    code, _ = run_cli(["--seed", "3", "--json", str(report)])
    assert code == 0
    doc = json.loads(report.read_text())
    assert doc["n"] == 6 and doc["k"] == 2


def test_seed_respects_max_n(tmp_path):
    report = tmp_path / "seeded.json"
    code, _ = run_cli(
        ["--seed", "3", "--max-n", "7", "--json", str(report)]
    )
    assert code == 0
    assert json.loads(report.read_text())["n"] == 7


def test_determinism_modulo_wall_time(k4_file, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run_cli(["--input", k4_file, "--json", str(a)])[0] == 0
    assert run_cli(["--input", k4_file, "--json", str(b)])[0] == 0
    strip = lambda p: [
        ln for ln in p.read_text().splitlines() if "wall_time_s" not in ln
    ]
    assert strip(a) == strip(b)


def test_lp_dump(k4_file, tmp_path):
    dump = tmp_path / "lp.txt"
    code, _ = run_cli(["--input", k4_file, "--lp-dump", str(dump)])
    assert code == 0
    text = dump.read_text()
    assert text.startswith("\\ biset cover lp")
    assert ">= 2" in text


def test_oracle_mode_beyond_cap_exit_two(tmp_path, capsys):
    lines = ["8 28 2"]
    for u in range(8):
        for v in range(u + 1, 8):
            lines.append(f"{u} {v} 1")
    p = tmp_path / "k8.txt"
    p.write_text("\n".join(lines) + "\n")
    code, _ = run_cli(["--input", str(p), "--mode", "oracle"])
    assert code == 2


def test_parser_rejects_unknown_mode():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["--mode", "bogus"])
