import json
from importlib import resources

import jsonschema
import pytest

from newton_spectra.cli import main
from newton_spectra.fixtures import result_schema


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_spp_output(capsys):
    code, out, _ = run(capsys, "compute", "-f", "x^3+y^3", "--format", "spp")
    assert code == 0
    assert out == "((-1/3,1),1),((0,1),2),((1/3,1),1)\n"


def test_f1_spp_prefix(capsys):
    code, out, _ = run(capsys, "compute", "--fixture", "f1", "--format", "spp")
    assert code == 0
    assert out.startswith("((-19/24,1),1),((-43/60,1),1),((-2/3,2),1),")


def test_json_validates(capsys):
    code, out, _ = run(capsys, "compute", "-f", "x^2+y^2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, result_schema())
    assert data["milnor"] == 1
    assert data["spectral_pairs"] == [{"alpha": "0", "w": 1, "m": 1}]
    assert data["basis"][0]["monomial"] == "1"


def test_json_fixture_with_checks(capsys):
    code, out, _ = run(capsys, "compute", "--fixture", "f2", "--format", "json", "--check")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, result_schema())
    assert data["diagnostics"]["checks"]["ok"] is True
    assert len(data["basis"]) == 31


def test_table_output(capsys):
    code, out, _ = run(capsys, "compute", "-f", "x^3+y^4")
    assert code == 0
    assert "milnor    6" in out and "spectral pairs" in out


def test_not_convenient(capsys):
    code, _, err = run(capsys, "compute", "-f", "x^2*y+y^3", "--vars", "x,y")
    assert code == 3
    assert "not convenient: axis x" in err


def test_degenerate_is_unsupported(capsys):
    code, _, err = run(capsys, "compute", "-f", "x^2+2*x*y+y^2")
    assert code == 3 and "degenerate" in err


def test_parse_error(capsys):
    code, _, err = run(capsys, "compute", "-f", "x^^2+y")
    assert code == 2 and "parse error" in err


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["compute", "--format", "xml", "-f", "x^2+y^2"])
    assert info.value.code == 2
    assert main([]) == 2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "pairs.txt"
    code, out, _ = run(capsys, "compute", "-f", "x^2+y^3", "--format", "spp", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == "((-1/6,1),1),((1/6,1),1)\n"


def test_diff_subcommand(tmp_path, capsys):
    a = tmp_path / "a.spp"
    b = tmp_path / "b.spp"
    a.write_text("((0,2),1),((1/2,1),1)")
    b.write_text("((0,2),1)")
    code, out, _ = run(capsys, "diff", str(a), str(b))
    assert code == 1 and out.strip() == "+((1/2,1),1)"
    code, out, _ = run(capsys, "diff", str(a), str(a))
    assert code == 0 and out == ""
    b.write_text("((0,2)")
    assert run(capsys, "diff", str(a), str(b))[0] == 2


def test_fixture_check_against_reference(capsys):
    code, _, err = run(capsys, "compute", "--fixture", "f1", "--format", "spp", "--check")
    assert code == 0, err
