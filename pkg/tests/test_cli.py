import json

import pytest

from multalg.cli import main
from multalg.fixtures import FIXTURES
from multalg.serialize import ParseError, algebra_from_spec, algebra_to_spec, dumps, module_from_spec, read_json
from multalg.fields import QQ


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def ex_file(tmp_path, capsys):
    code, out, _ = run(capsys, "fixture", "worked_example")
    assert code == 0
    p = tmp_path / "ex.json"
    p.write_text(out)
    return p


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_fixture_round_trip(name, capsys):
    code, out, _ = run(capsys, "fixture", name, "--verify")
    assert code == 0
    assert algebra_from_spec(json.loads(out)) == FIXTURES[name]()


def test_analyze_golden(ex_file, capsys):
    code, out, _ = run(capsys, "analyze", str(ex_file), "--json", "--verify")
    assert code == 0
    r = json.loads(out)
    assert r["algebra"]["dim"] == 5
    assert r["left_multipliers"]["dim"] == 7 and r["right_multipliers"]["dim"] == 7
    assert r["multiplier_algebra"]["dim"] == 6
    assert r["unit"] is None and r["idempotent"]["value"]
    assert r["strict_closure"]["both"]["equals_A"]
    assert not r["local_units"]["two_sided"]["value"]


def test_analyze_deterministic(ex_file, capsys):
    outs = {run(capsys, "analyze", str(ex_file), "--json")[1] for _ in range(2)}
    assert len(outs) == 1


def test_human_output(ex_file, capsys):
    code, out, _ = run(capsys, "multipliers", str(ex_file))
    assert code == 0
    assert "multiplier_algebra.dim: 6" in out.splitlines()


def test_unital_matrix_units_dense(tmp_path, capsys):
    _, out, _ = run(capsys, "fixture", "matrix_units2")
    p = tmp_path / "m2.json"
    p.write_text(out)
    code, out, _ = run(capsys, "analyze", str(p), "--json")
    r = json.loads(out)
    assert code == 0 and r["multiplier_algebra"]["dim"] == 4 and r["dense"]["both"]


def test_non_associative_file(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"field": "Q", "dim": 2, "product": [[0, 0, 1, "1"], [1, 0, 1, "1"]]}))
    code, _, err = run(capsys, "analyze", str(p))
    assert code == 1 and "(b0, b0, b0)" in err


def test_parse_error_location(tmp_path, capsys):
    p = tmp_path / "broken.json"
    p.write_text('{"field": "Q",\n')
    code, _, err = run(capsys, "units", str(p))
    assert code == 1 and "line 2" in err


@pytest.mark.parametrize("spec, needle", [
    ({"dim": 1}, "field"),
    ({"field": "Q", "dim": 1, "product": [[0, 0, 3, "1"]]}, "out of range"),
    ({"field": "GF:2", "dim": 1, "product": [[0, 0, 0, "1/2"]]}, "product[0][3]"),
    ({"field": "Q", "dim": 1, "product": [[0, 0, 0, 1.5]]}, "scalars"),
])
def test_validation_messages(spec, needle):
    with pytest.raises(ParseError, match=needle.replace("[", r"\[").replace("]", r"\]")):
        algebra_from_spec(spec)


def test_field_override(ex_file, capsys):
    code, out, _ = run(capsys, "multipliers", str(ex_file), "--field", "GF:2", "--json")
    assert code == 0 and json.loads(out)["algebra"]["field"] == "GF:2"


def test_unknown_fixture(capsys):
    assert run(capsys, "fixture", "nope")[0] == 1


def test_oracle_command(capsys):
    code, out, _ = run(capsys, "oracle", "--field", "GF:2", "--max-dim", "3", "--json")
    assert code == 0 and json.loads(out)["mismatches"] == 0


def test_oracle_requires_prime_field(capsys):
    assert run(capsys, "oracle", "--field", "Q")[0] == 1


def test_coalg_dual_of_grouplike(tmp_path, capsys):
    _, out, _ = run(capsys, "fixture", "grouplike3")
    p = tmp_path / "g.json"
    p.write_text(out)
    code, out, _ = run(capsys, "coalg", "dual", str(p))
    spec = json.loads(out)
    assert code == 0
    assert algebra_from_spec(spec).product == FIXTURES["finite_functions3"]().product


def test_coalg_cofrobenius(tmp_path, capsys):
    _, out, _ = run(capsys, "fixture", "comatrix2")
    p = tmp_path / "c.json"
    p.write_text(out)
    code, out, _ = run(capsys, "coalg", "cofrobenius", str(p), "--json", "--verify")
    assert code == 0 and json.loads(out)["witness"] is not None


def test_extend_command(tmp_path, ex_file, capsys):
    _, out, _ = run(capsys, "fixture", "matrix_units3")
    m3 = tmp_path / "m3.json"
    m3.write_text(out)
    A, B = read_json(ex_file), json.loads(out)
    M = [["0"] * A["dim"] for _ in range(B["dim"])]
    for j, lab in enumerate(A["basis"]):
        M[B["basis"].index(lab)][j] = "1"
    hom = tmp_path / "hom.json"
    hom.write_text(json.dumps({"map": M}))
    code, out, _ = run(capsys, "extend", str(ex_file), str(m3), str(hom), "--json", "--verify")
    r = json.loads(out)
    assert code == 0 and r["extension"]["unital"] and r["extension"]["images"]["1"] == "e11 + e22 + e33"


def test_extend_non_multiplicative_hom(tmp_path, ex_file, capsys):
    hom = tmp_path / "hom.json"
    hom.write_text(json.dumps({"map": [["1"] * 5 for _ in range(5)]}))
    code, _, err = run(capsys, "extend", str(ex_file), str(ex_file), str(hom))
    assert code == 1


@pytest.mark.parametrize("argv", [
    ["colimit", "--sets", "5"],
    ["colimit", "--family", "matrices", "--multiplier", "banded", "--sets", "5"],
    ["colimit", "--multiplier", "poly", "--coeffs", "1,0,1", "--sets", "5"],
])
def test_colimit_command(argv, capsys):
    assert run(capsys, *argv)[0] == 0


def test_colimit_banded_needs_matrices(capsys):
    assert run(capsys, "colimit", "--multiplier", "banded")[0] == 1


def test_dumps_sorted():
    assert dumps({"b": 1, "a": 2}).index('"a"') < dumps({"b": 1, "a": 2}).index('"b"')


def test_module_spec():
    A = FIXTURES["matrix_units2"]()
    triples = [[i, j, k, "1"] for i, (r, c) in enumerate([(1, 1), (1, 2), (2, 1), (2, 2)])
               for j, k in [(c - 1, r - 1)]]
    M = module_from_spec({"dim": 2, "action": triples}, A)
    assert M.dim == 2


def test_star_survives_round_trip():
    from multalg.fixtures import matrix_units

    A = matrix_units(2, QQ, star=True)
    assert algebra_from_spec(json.loads(dumps(algebra_to_spec(A)))) == A
