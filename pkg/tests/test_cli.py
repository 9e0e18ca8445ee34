import json
import subprocess
import sys
from pathlib import Path

import pytest

from cyclo2adic.cli import RunConfig, main, run

GOLDEN = Path(__file__).parent / "golden"


def run_main(argv):
    proc = subprocess.run(
        [sys.executable, "-m", "cyclo2adic", *argv], capture_output=True, text=True, check=False
    )
    return proc.returncode, proc.stdout, proc.stderr


def test_analyze_5_3():
    status, text = run(RunConfig("analyze", 5, 3))
    assert status == 0
    doc = json.loads(text)
    assert set(doc) == {"params", "report", "verdicts", "version"}
    assert doc["report"]["phi2"] == 15 and doc["report"]["lower_bound"] == 6
    assert doc["report"]["S2"] == "28352"
    assert doc["verdicts"] == {"theorem1": "pass", "theorem2": "not-applicable"}


def test_big_integers_are_strings():
    doc = json.loads(run(RunConfig("det", 13, 11))[1])
    for key in ("det_exact", "det_plus", "det_minus", "hadamard_bound"):
        assert isinstance(doc["report"][key], str)
        int(doc["report"][key])


def test_validate_congruence_violation():
    status, text = run(RunConfig("validate", 7, 5))
    assert status == 2
    assert json.loads(text)["error"]["reason"] == "congruence-violation"


def test_validate_non_strict():
    status, text = run(RunConfig("validate", 7, 5, strict=False))
    assert status == 0 and json.loads(text)["params"]["N"] == 35


def test_partition_dump_matches_golden():
    doc = json.loads(run(RunConfig("validate", 5, 3, partition=True))[1])
    assert doc["report"]["partition"] == json.loads((GOLDEN / "partition_5_3.json").read_text())


def test_generate_json_and_raw():
    doc = json.loads(run(RunConfig("generate", 5, 3))[1])
    assert doc["report"] == {"bits": "000000110111011", "weight": 7}
    assert run(RunConfig("generate", 5, 3, output_format="raw")) == (0, "000000110111011\n")


def test_g_override():
    doc = json.loads(run(RunConfig("generate", 5, 3, g_override=8))[1])
    assert doc["params"]["g"] == 8
    assert run(RunConfig("generate", 5, 3, g_override=4))[0] == 2


def test_spectrum_command():
    status, text = run(RunConfig("spectrum", 5, 7))
    doc = json.loads(text)
    assert status == 0
    assert doc["report"]["max_residual"] < doc["report"]["tolerance"]
    assert doc["verdicts"] == {"lemma1": "pass", "lemma2": "pass", "lemma5": "pass"}
    assert set(doc["report"]["classes"]) == {"ZERO", "D00", "D01", "D10", "D11", "D0p_q", "D1p_q", "D0q_p", "D1q_p"}


def test_det_command():
    doc = json.loads(run(RunConfig("det", 5, 3))[1])
    assert doc["report"]["det_exact"] == "1792"
    assert doc["report"]["matched_sign"] == "minus"
    assert doc["verdicts"] == {"closed_form": "pass", "gcd_divisibility": "pass", "nonzero": "pass"}


def test_det_command_rejects_non_strict():
    assert run(RunConfig("det", 7, 5, strict=False))[0] == 2


def test_raa_command():
    doc = json.loads(run(RunConfig("raa", 5, 7))[1])
    assert doc["report"]["T"] == 70
    assert doc["verdicts"] == {"recovered": "pass", "size_matches_phi2": "pass"}
    status, text = run(RunConfig("raa", 5, 3))
    doc = json.loads(text)
    # two periods of (5,3) admit a smaller approximation; see test_adic
    assert status == 1 and doc["verdicts"]["recovered"] == "fail"
    assert doc["verdicts"]["size_matches_phi2"] == "pass"
    assert run(RunConfig("raa", 5, 3, bits=31))[0] == 0


def test_config_validation():
    assert run(RunConfig("analyze"))[0] == 2
    assert run(RunConfig("analyze", 5, 3, output_format="csv"))[0] == 2
    assert run(RunConfig("analyze", 5, 3, output_format="raw"))[0] == 2


def test_table_custom_pairs_csv():
    status, text = run(RunConfig("table", pairs=((5, 3), (5, 7)), output_format="csv"))
    assert status == 0
    assert text == "p,q,phi2,lower_bound,maximal,matched_sign\n5,3,15,6,true,minus\n5,7,35,22,true,minus\n"


def test_table_det_limit_skips():
    status, text = run(RunConfig("table", pairs=((5, 3), (13, 23)), output_format="json", det_limit=100))
    rows = json.loads(text)["report"]["rows"]
    assert status == 0 and [r["matched_sign"] for r in rows] == ["minus", "skipped"]


def test_table_invalid_pair():
    assert run(RunConfig("table", pairs=((7, 5),)))[0] == 2


@pytest.mark.slow
def test_table_full_matches_golden(tmp_path):
    out = tmp_path / "table.csv"
    status, _, _ = run_main(["table", "--format", "csv", "--out", str(out)])
    assert status == 0
    assert out.read_text() == (GOLDEN / "table.csv").read_text()


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze", "--p", "13", "--q", "11"],
        ["spectrum", "--p", "5", "--q", "11"],
        ["det", "--p", "13", "--q", "11"],
        ["table", "--format", "csv", "--det-limit", "143"],
        ["validate", "--p", "5", "--q", "7", "--partition"],
    ],
)
def test_byte_identical_reruns(argv):
    first = run_main(argv)
    second = run_main(argv)
    assert first[0] == 0 and first == second


def test_main_exit_codes(capsys):
    assert main(["validate", "--p", "7", "--q", "5"]) == 2
    assert "congruence-violation" in capsys.readouterr().err
    assert main(["analyze", "--p", "5", "--q", "3"]) == 0
    assert json.loads(capsys.readouterr().out)["report"]["phi2"] == 15


def test_main_pairs_flag(capsys):
    assert main(["table", "--pairs", "5:3,17:19", "--format", "csv", "--det-limit", "0"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[1:] == ["5,3,15,6,true,skipped", "17,19,323,286,true,skipped"]


def test_main_bad_pairs_flag():
    status, _, err = run_main(["table", "--pairs", "5-3"])
    assert status == 2 and "expected p1:q1" in err
