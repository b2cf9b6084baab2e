import json

import pytest

from fmcurve import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr()


def test_verify_lemma(capsys):
    code, out = run(capsys, "verify-lemma", "--format", "json")
    data = json.loads(out.out)
    assert code == 0
    assert data["summary"] == {"pass": 5, "fail": 0, "flagged-discrepancy": 1}


def test_exit_codes(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify-smooth", "--bogus"])
    assert exc.value.code == cli.EXIT_USAGE
    assert run(capsys, "verify-smooth", "--mu", "[2, 3")[0] == cli.EXIT_JSON
    assert run(capsys, "verify-smooth", "--mu", "[2, 3, 4]")[0] == cli.EXIT_JSON
    assert run(capsys, "verify-smooth", "--mu", "[0.5, 3, 4, 5]")[0] == cli.EXIT_JSON
    assert run(capsys, "verify-smooth", "--mu", "[2, 3, 4, 4]")[0] == cli.EXIT_OMEGA


def test_parse_mu():
    assert cli.parse_mu('["1/2", 3, [0, 1], 5]').mu6 is not None
    assert cli.parse_mu("random:3") == cli.parse_mu("random:3")
    assert cli.parse_mu("mu0") == cli.moduli.mu0()


def test_j_report(capsys):
    code, out = run(capsys, "j-report", "--mu", "mu0", "--format", "json")
    data = json.loads(out.out)
    assert code == 0 and len(data) == 7
    assert len({tuple(v["j"]) for v in data.values()}) == 1
    assert data["T12"]["approx"].startswith("(1792.0")


def test_emit_model(capsys):
    code, out = run(capsys, "emit-model", "--mu", "random", "--quotient", "Kstar", "--format", "json")
    data = json.loads(out.out)
    assert code == 0
    assert data["reports"][0]["status"] == "flagged-discrepancy"
    assert len(data["invariant_monomials"]) == 13


def test_equiv(capsys):
    code, out = run(capsys, "equiv", "--mu", "[2,3,4,5]", "--mu-prime", "[2,3,4,7]")
    assert out.out.strip() == "inequivalent"
    code, out = run(capsys, "equiv", "--mu", "[2,3,4,5]", "--mu-prime", '["1/2","1/3","1/4","1/5"]')
    assert out.out.strip() == "A"


def test_genus_report(capsys):
    code, out = run(capsys, "genus-report")
    assert code == 0 and "49" in out.out


def test_verify_all_is_deterministic(capsys):
    outs = []
    for _ in range(2):
        code, out = run(capsys, "verify-all", "--format", "json")
        data = json.loads(out.out)
        data.pop("timestamp")
        outs.append(json.dumps(data))
    assert outs[0] == outs[1]
    assert all(r["anchor"] for r in json.loads(outs[0])["reports"])
