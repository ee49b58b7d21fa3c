import json

import pytest

from dihedralcovers import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_cover_subcommand(capsys):
    code, out = run(capsys, "cover", "--n", "3", "--m", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["chi"] == 2 and doc["K2"] == 0 and doc["label"] == "K3"
    assert doc["command"] == "cover" and doc["seed"] == 0


def test_deform_subcommand(capsys):
    code, out = run(capsys, "deform", "--n", "2", "--m", "1")
    assert code == 0
    doc = json.loads(out)
    assert (doc["target"], doc["source"], doc["lowerBound"]) == (26, 24, 2)


def test_torsion_subcommand(capsys):
    code, out = run(capsys, "torsion", "--n", "2", "--field", "Fp:101",
                    "--curve", '{"g":1,"F":"x0^4 - x1^4"}',
                    "--pair",
                    '{"a":0,"b":2,"P":"0","f":"x0^4 - x1^4","q":"1"}')
    assert code == 0
    doc = json.loads(out)
    assert doc["torsion"] is True


def test_pic_subcommand(capsys):
    code, out = run(capsys, "pic", "--field", "Fp:7",
                    "--curve", '{"g":1,"F":"x0^4 - 5*x0^2*x1^2 + 4*x1^4"}',
                    "--pair", '{"a":1,"b":1,"P":"0","f":"x0^2 - x1^2",'
                    '"q":"x0^2 - 4*x1^2"}',
                    "--op", "class")
    assert code == 0
    doc = json.loads(out)
    assert doc["order"] == 2
    assert doc["stratum"] == [1, 1]


def test_check_subcommand_exit_codes(capsys):
    code, out = run(capsys, "check", "--n", "3", "--m", "1",
                    "--a", "x0^3 + x1^3 + x2^3",
                    "--F", "x0*x1 + x0*x2 + x1*x2", "--seed", "7")
    assert code == 0
    doc = json.loads(out)
    assert doc["conditionI"] == "pass" and doc["conditionII"] == "pass"
    code, _ = run(capsys, "check", "--n", "3", "--m", "1",
                  "--a", "x0^3", "--F", "x0^2")
    assert code == 1


def test_dn_table(capsys):
    code, out = run(capsys, "dn-table", "--n", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["order"] == 6
    labels = [c["label"] for c in doc["characters"]]
    assert labels == ["chi1", "chi2", "rho1"]


def test_jacobian_subcommand(capsys):
    code, out = run(capsys, "jacobian", "--field", "Fp:7",
                    "--curve", '{"g":1,"F":"x0^4 - 5*x0^2*x1^2 + 4*x1^4"}',
                    "--orders")
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 8
    assert doc["orderHistogram"] == {"1": 1, "2": 3, "4": 4}


def test_output_is_deterministic(capsys):
    _, out1 = run(capsys, "check", "--n", "3", "--m", "1",
                  "--a", "x0^3 + x1^3 + x2^3",
                  "--F", "x0*x1 + x0*x2 + x1*x2", "--seed", "11")
    _, out2 = run(capsys, "check", "--n", "3", "--m", "1",
                  "--a", "x0^3 + x1^3 + x2^3",
                  "--F", "x0*x1 + x0*x2 + x1*x2", "--seed", "11")
    assert out1 == out2


def test_parse_error_exit_code(capsys):
    code, _ = run(capsys, "torsion", "--n", "2",
                  "--curve", '{"g":1,"F":"x0^4 +"}',
                  "--pair", '{"a":0,"b":2,"P":"0","f":"x0^4 - x1^4","q":"1"}')
    assert code == 2
    code, _ = run(capsys, "cover", "--n", "3")
    assert code == 2
    code, _ = run(capsys)
    assert code == 2


def test_batch_mode(tmp_path, capsys):
    jobs = [{"command": "cover", "n": 2, "m": 1},
            {"command": "deform", "n": 3, "m": 1, "d": 2},
            {"command": "dn-table", "n": 3}]
    path = tmp_path / "jobs.json"
    path.write_text(json.dumps(jobs))
    code, out = run(capsys, "--json", str(path))
    assert code == 0
    docs = json.loads(out)
    assert [d["command"] for d in docs] == ["cover", "deform", "dn-table"]
    assert docs[0]["K2"] == 4


def test_batch_mode_reports_bad_jobs(tmp_path, capsys):
    path = tmp_path / "jobs.json"
    path.write_text(json.dumps([{"command": "cover", "n": 2, "m": 1},
                                {"command": "bogus"}]))
    code, out = run(capsys, "--json", str(path))
    assert code == 2
    docs = json.loads(out)
    assert "error" in docs[1]
