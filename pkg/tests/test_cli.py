import json
from fractions import Fraction

import pytest

from cayley import cli
from cayley.poly import Polynomial, poly_to_json_dict
from cayley.symmetry import AffineVectorField, SymmetryAlgebra, span_contains

GOLDEN_PLAIN = {
    3: "x3 = x1*x2 - 1/3*x1^3",
    4: "x4 = x1*x3 + 1/2*x2^2 - x1^2*x2 + 1/4*x1^4",
    5: "x5 = x1*x4 + x2*x3 - x1^2*x3 - x1*x2^2 + x1^3*x2 - 1/5*x1^5",
    6: "x6 = x1*x5 + x2*x4 + 1/2*x3^2 - x1^2*x4 - 2*x1*x2*x3 - 1/3*x2^3"
    " + x1^3*x3 + 3/2*x1^2*x2^2 - x1^4*x2 + 1/6*x1^6",
}

GOLDEN_LATEX = {
    3: r"x_3 = x_1x_2-\frac{1}{3}x_1^3",
    4: r"x_4 = x_1x_3+\frac{1}{2}x_2^2-x_1^2x_2+\frac{1}{4}x_1^4",
    5: r"x_5 = x_1x_4+x_2x_3-x_1^2x_3-x_1x_2^2+x_1^3x_2-\frac{1}{5}x_1^5",
    6: r"x_6 = x_1x_5+x_2x_4+\frac{1}{2}x_3^2-x_1^2x_4-2x_1x_2x_3-\frac{1}{3}x_2^3"
    r"+x_1^3x_3+\frac{3}{2}x_1^2x_2^2-x_1^4x_2+\frac{1}{6}x_1^6",
}


def run(capsys, argv):
    code = cli.main(argv)
    return code, capsys.readouterr().out


def test_generate_plain_golden(capsys):
    for n, expected in GOLDEN_PLAIN.items():
        code, out = run(capsys, ["generate", "--n", str(n), "--format", "plain"])
        assert code == 0
        assert out == expected + "\n"


def test_generate_latex_golden(capsys):
    for n, expected in GOLDEN_LATEX.items():
        code, out = run(capsys, ["generate", "--n", str(n), "--format", "latex"])
        assert code == 0
        assert out == expected + "\n"


def test_generate_json_default_parameter(capsys):
    _, with_b = run(capsys, ["generate", "--n", "5", "--b", "0", "--format", "json"])
    _, without_b = run(capsys, ["generate", "--n", "5", "--format", "json"])
    assert with_b == without_b
    data = json.loads(without_b)
    assert data["n"] == 5
    assert data["terms"][0] == {"exps": [[5, 1]], "num": "-1", "den": "1"}


def test_generate_is_deterministic(capsys):
    _, first = run(capsys, ["generate", "--n", "7", "--format", "json"])
    _, second = run(capsys, ["generate", "--n", "7", "--format", "json"])
    assert first == second


def test_generate_variant(capsys):
    code, out = run(capsys, ["generate", "--variant"])
    assert code == 0
    assert out == "x4 = x1*x3 + 1/2*x2^2 - 1/3*x1^3\n"


def test_generate_bad_b(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["generate", "--n", "3", "--b", "nonsense"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_verify_all_checks_pass(capsys):
    code, out = run(capsys, ["verify", "--n", "3..8"])
    assert code == 0
    report = json.loads(out)
    assert report["pass"] is True
    assert [r["target"]["n"] for r in report["reports"]] == list(range(3, 9))
    for target_report in report["reports"]:
        names = [c["name"] for c in target_report["checks"]]
        assert names == cli.CHECK_ORDER
        assert all(c["status"] == "pass" for c in target_report["checks"])


def test_verify_single_check(capsys):
    code, out = run(capsys, ["verify", "--n", "4", "--checks", "pick"])
    assert code == 0
    report = json.loads(out)
    checks = report["reports"][0]["checks"]
    assert len(checks) == 1
    assert checks[0]["name"] == "pick"
    assert "0" in checks[0]["detail"]


def test_verify_unknown_check(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--n", "4", "--checks", "nonsense"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_verify_variant_isotropy(capsys):
    code, out = run(capsys, ["verify", "--n", "4", "--variant", "--checks", "isotropy"])
    assert code == 0
    report = json.loads(out)
    check = report["reports"][0]["checks"][0]
    assert check["status"] == "pass"
    assert "dimension 2" in check["detail"]
    assert report["reports"][0]["target"] == {"n": 4, "variant": True}


def test_verify_variant_all_restricted(capsys):
    code, out = run(capsys, ["verify", "--n", "4", "--variant"])
    assert code == 0
    report = json.loads(out)
    names = [c["name"] for c in report["reports"][0]["checks"]]
    assert names == cli.VARIANT_CHECKS
    assert report["pass"] is True


def test_verify_variant_rejects_inapplicable_check(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--n", "4", "--variant", "--checks", "annihilation"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_verify_needs_three_variables(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--n", "2"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_verify_reports_failure_with_exit_one(capsys, monkeypatch):
    monkeypatch.setattr(cli, "_check_pick", lambda n, phi, variant: (False, "forced failure"))
    code, out = run(capsys, ["verify", "--n", "3", "--checks", "pick"])
    assert code == 1
    report = json.loads(out)
    assert report["pass"] is False
    assert report["reports"][0]["checks"][0]["status"] == "fail"


def test_verify_is_deterministic(capsys):
    _, first = run(capsys, ["verify", "--n", "3..4", "--checks", "orbit,isotropy"])
    _, second = run(capsys, ["verify", "--n", "3..4", "--checks", "orbit,isotropy"])
    assert first == second


def test_large_n_guard(capsys, monkeypatch):
    monkeypatch.delenv("CAYLEY_MAX_N", raising=False)
    with pytest.raises(SystemExit) as exc:
        cli.main(["generate", "--n", "21"])
    assert exc.value.code == 2
    capsys.readouterr()
    code, out = run(capsys, ["generate", "--n", "21", "--force"])
    assert code == 0
    assert out.startswith("x21 = ")


def test_large_n_guard_env_override(capsys, monkeypatch):
    monkeypatch.setenv("CAYLEY_MAX_N", "22")
    code, out = run(capsys, ["generate", "--n", "22"])
    assert code == 0
    assert out.startswith("x22 = ")


def test_symmetries_cayley(capsys):
    code, out = run(capsys, ["symmetries", "--n", "3"])
    assert code == 0
    data = json.loads(out)
    assert data["source"] == "cayley"
    assert data["dimension"] == 3
    assert data["isotropy"]["dimension"] == 1
    assert len(data["basis"]) == 3
    for entry in data["basis"]:
        assert set(entry) == {"n", "constant", "linear", "eigenvalue"}


def test_symmetries_variant_isotropy_subreport(capsys):
    code, out = run(capsys, ["symmetries", "--n", "4", "--variant"])
    assert code == 0
    data = json.loads(out)
    assert data["source"] == "variant"
    assert data["isotropy"]["dimension"] == 2


def _field_from_json(entry):
    return AffineVectorField(
        entry["n"],
        [Fraction(v) for v in entry["constant"]],
        [[Fraction(v) for v in row] for row in entry["linear"]],
    )


def test_symmetries_from_file_contains_rotation(capsys, tmp_path):
    quadric = Polynomial(3, [({1: 2}, 1), ({2: 2}, 1), ({3: 1}, -1)])
    path = tmp_path / "quadric.json"
    path.write_text(json.dumps(poly_to_json_dict(quadric)))
    code, out = run(capsys, ["symmetries", "--file", str(path)])
    assert code == 0
    data = json.loads(out)
    assert data["source"] == "file"
    basis = tuple(_field_from_json(entry) for entry in data["basis"])
    algebra = SymmetryAlgebra(basis, tuple(Fraction(0) for _ in basis))
    rotation = AffineVectorField(3, [0, 0, 0], [[0, 1, 0], [-1, 0, 0], [0, 0, 0]])
    assert span_contains(algebra, [rotation])


def test_symmetries_bad_file(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(SystemExit) as exc:
        cli.main(["symmetries", "--file", str(path)])
    assert exc.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        cli.main(["symmetries", "--file", str(tmp_path / "missing.json")])
    assert exc.value.code == 2
    capsys.readouterr()


def test_invariants_bundle_output(capsys):
    code, out = run(capsys, ["invariants", "--n", "4"])
    assert code == 0
    assert json.loads(out) == {
        "n": 4,
        "signature": {"pos": 2, "neg": 1, "zero": 0},
        "pick": "0",
        "hessian_det_constant": True,
        "hessian_det_value": "-1",
        "ruling": {"dim": 1, "linear": True},
        "source": "cayley",
    }


def test_invariants_variant(capsys):
    code, out = run(capsys, ["invariants", "--variant"])
    assert code == 0
    data = json.loads(out)
    assert data["source"] == "variant"
    assert data["hessian_det_value"] == "-1"


def test_invariants_family(capsys):
    code, out = run(capsys, ["invariants", "--n", "5", "--b", "1"])
    assert code == 0
    data = json.loads(out)
    assert data["source"] == "family"
    assert data["signature"] == {"pos": 2, "neg": 2, "zero": 0}
