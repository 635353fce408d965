import io
import json
import subprocess
import sys

import pytest

from binomgcd.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_ord():
    assert run("ord", "--n", "6", "--k", "3", "--p", "2") == (0, "2\n", "")


def test_gcd_factored():
    code, out, _ = run("gcd", "--n", "30", "--q", "2", "--factored")
    assert code == 0 and out == "435 = 3·5·29\n"


def test_gcd_plain_prints_full_decimal():
    code, out, _ = run("gcd", "--n", "6", "--q", "3")
    assert (code, out) == (0, "20\n")


def test_gcd_json():
    code, out, _ = run("gcd", "--n", "30", "--q", "2", "--factored", "--json")
    assert json.loads(out) == {"n": 30, "q": 2, "gcd": 435, "factors": {"3": 1, "5": 1, "29": 1}}


def test_predict():
    code, out, _ = run("predict", "--n", "30", "--q", "2", "--p", "7")
    assert code == 0 and out.splitlines()[0] == "applicable, ord 0"


def test_predict_not_applicable():
    code, out, _ = run("predict", "--n", "6", "--q", "3", "--p", "2")
    assert code == 0
    assert out.splitlines() == ["not applicable", "oracle ord 2"]


def test_witness():
    code, out, _ = run("witness", "--n", "30", "--q", "2", "--p", "5", "--json")
    assert code == 0
    assert json.loads(out) == {"n": 30, "q": 2, "p": 5, "index": 20, "ord": 1, "valid": True}


def test_table():
    code, out, _ = run("table", "--q", "2", "--n-max", "30")
    rows = {line.split()[0]: line for line in out.splitlines()[1:]}
    assert rows["6"].split(None, 1)[1] == "15 = 3·5"
    assert rows["30"].split(None, 1)[1] == "435 = 3·5·29"


def test_verify_ok():
    code, out, _ = run("verify", "--n-max", "30", "--q-max", "2")
    assert code == 0 and "mismatched" in out


def test_verify_json_stream_and_summary():
    code, out, err = run("verify", "--n-max", "12", "--q-max", "3", "--json")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert records and set(records[0]) == {"n", "q", "p", "hypothesis", "predicted", "actual", "match"}
    summary = json.loads(err)
    assert summary["checked"] == len(records)


def test_verify_csv():
    code, out, _ = run("verify", "--n-max", "12", "--q-max", "3", "--csv")
    assert code == 0 and out.splitlines()[0] == "n,q,p,hypothesis,predicted,actual,match"


def test_verify_weakened_findings_exit_zero():
    code, _, _ = run("verify", "--n-max", "20", "--q-max", "4", "--mode", "weakened")
    assert code == 0


def test_verify_strict_mismatch_exit_two(monkeypatch):
    import binomgcd.harness as harness
    from binomgcd.theorem_q import Prediction

    def wrong(family, p):
        n, q = family
        return Prediction(n, q, int(p), True, 1)

    monkeypatch.setattr(harness, "predict_theorem_q", wrong)
    code, _, _ = run("verify", "--n-max", "10", "--q-max", "2")
    assert code == 2


@pytest.mark.parametrize("argv, fragment", [
    (["ord", "--n", "6", "--k", "9", "--p", "2"], "0 <= k <= n"),
    (["ord", "--n", "six", "--k", "1", "--p", "2"], "not a decimal integer"),
    (["ord", "--n", "0x10", "--k", "1", "--p", "2"], "not a decimal integer"),
    (["ord", "--n", "6", "--k", "1", "--p", "4"], "4 is not prime"),
    (["gcd", "--n", "3", "--q", "3"], "n > q > 0"),
    (["predict", "--n", "5", "--q", "0", "--p", "2"], "n > q > 0"),
    (["witness", "--n", "6", "--q", "3", "--p", "2"], "not 1 mod q"),
    (["verify", "--n-max", "2"], "--n-max must be > 2"),
    (["verify", "--jobs", "0"], "--jobs"),
    (["verify", "--mode", "sloppy"], "invalid choice"),
    (["bogus"], "invalid choice"),
])
def test_usage_errors(argv, fragment):
    code, out, err = run(*argv)
    assert code == 1
    assert fragment in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "binomgcd", "ord", "--n", "6", "--k", "3", "--p", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "2\n"
