import json

import pytest

from qcactus import cli
from qcactus.qarith import RatFunc


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_crystal_apply(capsys):
    code, out = run(capsys, "crystal", "apply", "--pattern", "1,0,0,0,0,0", "--ops", "sigma1")
    assert code == 0
    assert out.strip() == "0,0,0,0,1,0"


def test_crystal_apply_right_to_left(capsys):
    # e1^1 fires before sigma
    code, out = run(
        capsys, "crystal", "apply", "--pattern", "1,0,0,0,0,0", "--ops", "sigma,e1^1"
    )
    assert code == 0
    assert out.strip() == "0,0,0,1,0,0"


def test_coxeter_kernel_faithful(capsys):
    code, out = run(capsys, "coxeter", "kernel", "--type", "A2", "--subset", "1")
    assert code == 0
    report = json.loads(out)
    assert report["failures"] == 0
    assert report["checks"][0]["witness"]["order_formula"] == 1


def test_coxeter_kernel_product(capsys):
    code, out = run(capsys, "coxeter", "kernel", "--type", "A1xA1", "--subset", "1")
    assert code == 0
    report = json.loads(out)
    assert report["checks"][0]["witness"]["order_formula"] == 2


def test_coxeter_kernel_empty_subset(capsys):
    code, out = run(capsys, "coxeter", "kernel", "--type", "A3", "--subset", "")
    assert code == 0
    report = json.loads(out)
    assert report["checks"][0]["witness"]["order_formula"] == 1


def test_coxeter_kernel_bad_subset(capsys):
    with pytest.raises(SystemExit):
        cli.main(["coxeter", "kernel", "--type", "A2", "--subset", "5"])


def test_gk_normalform(capsys):
    code, out = run(capsys, "gk", "normalform", "--expr", "z2*z1*v1")
    assert code == 0
    data = json.loads(out)
    assert all(set(item) == {"monomial", "coeff"} for item in data)
    assert all(len(item["monomial"]) == 6 for item in data)
    # coefficients reload as canonical rational functions
    for item in data:
        RatFunc.from_json(item["coeff"])


def test_verify_conjecture_trivial(capsys, tmp_path):
    out_file = tmp_path / "report.json"
    code, _ = run(capsys, "verify-conjecture", "--max-degree", "0", "--out", str(out_file))
    assert code == 0
    report = json.loads(out_file.read_text())
    assert report["failures"] == 0
    assert report["modules"] == [{"lambda": [0, 0], "dim": 1,
                                  "seconds": report["modules"][0]["seconds"]}]


def test_verify_conjecture_small(capsys, tmp_path):
    out_file = tmp_path / "report.json"
    code, _ = run(
        capsys, "verify-conjecture", "--max-degree", "2", "--jobs", "1",
        "--out", str(out_file),
    )
    assert code == 0
    report = json.loads(out_file.read_text())
    assert report["failures"] == 0
    assert len(report["modules"]) == 6
    lams = [tuple(m["lambda"]) for m in report["modules"]]
    assert lams == sorted(lams)


def test_module_verify_report_schema(capsys):
    code, out = run(capsys, "module", "verify", "--l1", "1", "--l2", "0", "--suite", "all")
    assert code == 0
    report = json.loads(out)
    assert report["lambda"] == [1, 0]
    assert report["dim"] == 3
    assert report["failures"] == 0
    for check in report["checks"]:
        assert check["status"] in ("pass", "fail", "skipped")
        assert "name" in check and "anchor" in check


def test_module_export(capsys, tmp_path):
    out_file = tmp_path / "matrices.json"
    code, _ = run(
        capsys, "module", "export", "--l1", "1", "--l2", "0",
        "--which", "C1,N1,P1", "--out", str(out_file),
    )
    assert code == 0
    payload = json.loads(out_file.read_text())
    assert payload["lambda"] == [1, 0]
    assert payload["dim"] == 3
    assert payload["basis"] == ["0,0,0,0,1,0", "0,0,0,1,0,0", "1,0,0,0,0,0"]
    assert set(payload["matrices"]) == {"C1", "N1", "P1"}
    n1 = payload["matrices"]["N1"]
    assert RatFunc.from_json(n1[0][2]).is_one()
    assert RatFunc.from_json(n1[0][0]).is_zero()


def test_module_export_bad_tag(tmp_path):
    with pytest.raises(SystemExit):
        cli.main(["module", "export", "--l1", "0", "--l2", "0", "--which", "Z9",
                  "--out", str(tmp_path / "x.json")])


def test_suite_seed_determinism(capsys):
    code1, out1 = run(capsys, "suite", "--name", "crystal", "--seed", "7")
    code2, out2 = run(capsys, "suite", "--name", "crystal", "--seed", "7")
    assert code1 == code2 == 0
    r1, r2 = json.loads(out1), json.loads(out2)
    strip = lambda checks: [
        {k: v for k, v in c.items() if k != "seconds"} for c in checks
    ]
    assert strip(r1["checks"]) == strip(r2["checks"])
