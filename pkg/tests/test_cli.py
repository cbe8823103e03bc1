import json

import pytest

from cusp_atlas.cli import JobSpec, emit, main, parse_input, run
from cusp_atlas.errors import SchemaError

SUPPORT_DOC = {
    "command": "support",
    "group": {"family": "Sp", "N": 6},
    "blocks": [
        {"pi": {"name": "p", "dim": 1, "type": "orthogonal"}, "a": 2, "sign": 1},
        {"pi": "p", "a": 4, "sign": -1},
    ],
}


def test_support_document():
    out = run(parse_input(SUPPORT_DOC))
    assert out["gl_twists"] == [["p", "3/2"], ["p", "1/2"]]
    assert out["cusp_blocks"] == [["p", 2]]
    assert out["cusp_char"] == [[["p", 2], -1]]
    assert all(out["checks"].values())
    assert out["p_adic_group"] == "SO_7(F)"


def test_enumerate_document():
    out = run(parse_input({"command": "enumerate", "group": {"family": "Sp", "N": 4}}))
    assert out == {"pairs": 7, "by_triple": {"d=0": 5, "d=1": 2}}


def test_cuspidal_test_document():
    doc = {
        "command": "cuspidal-test",
        "group": {"family": "Sp", "N": 4},
        "blocks": [
            {"pi": {"name": "m1", "dim": 1, "type": "orthogonal"}, "a": 2, "sign": -1},
            {"pi": {"name": "m2", "dim": 1, "type": "orthogonal"}, "a": 2, "sign": -1},
        ],
    }
    out = run(parse_input(doc))
    assert out == {"cuspidal": True, "sgroup_factors": True}


def test_schema_error_pointers():
    bad = json.loads(json.dumps(SUPPORT_DOC))
    bad["blocks"][0]["sign"] = 0
    with pytest.raises(SchemaError) as err:
        parse_input(bad)
    assert err.value.pointer == "/blocks/0/sign"

    with pytest.raises(SchemaError) as err:
        parse_input({"command": "support", "group": {"family": "Sp", "N": 6},
                     "blocks": [], "extra": 1})
    assert err.value.pointer == "/extra"

    with pytest.raises(SchemaError) as err:
        parse_input({"command": "support", "group": {"family": "Xp", "N": 6},
                     "blocks": []})
    assert err.value.pointer == "/group/family"

    with pytest.raises(SchemaError):
        parse_input({"command": "nope"})


def test_undefined_label_reference():
    doc = {"command": "support", "group": {"family": "Sp", "N": 6},
           "blocks": [{"pi": "ghost", "a": 2, "sign": 1}]}
    with pytest.raises(SchemaError) as err:
        parse_input(doc)
    assert err.value.pointer == "/blocks/0/pi"


def test_emit_round_trip_is_identity():
    out = run(parse_input(SUPPORT_DOC))
    text = emit(out)
    assert emit(json.loads(text)) == text
    compact = emit(out, compact=True)
    assert emit(json.loads(compact), compact=True) == compact


def test_run_is_deterministic():
    left = emit(run(parse_input(SUPPORT_DOC)))
    right = emit(run(parse_input(json.loads(json.dumps(SUPPORT_DOC)))))
    assert left == right


def test_validate_documents():
    out = run(parse_input({"command": "validate", "group": {"family": "Sp", "N": 4},
                           "partition": [3, 1]}))
    assert out["valid"] is False
    out = run(parse_input({"command": "validate", "group": {"family": "Sp", "N": 4},
                           "partition": [2, 2]}))
    assert out["valid"] and out["orbit_count"] == 1
    assert out["component_group"]["generators"] == ["z_2"]

    out = run(parse_input({
        "command": "validate", "group": {"family": "Sp", "N": 4},
        "blocks": [{"pi": {"name": "p", "dim": 1, "type": "orthogonal"}, "a": 2},
                   {"pi": "p", "a": 2}]}))
    assert out["valid"] is False  # repeated block


def test_springer_documents():
    out = run(parse_input({"command": "springer", "group": {"family": "Sp", "N": 6},
                           "partition": [4, 2], "signs": [1, -1]}))
    assert out["datum"]["d"] == 1 and out["datum"]["torus_rank"] == 2

    out = run(parse_input({"command": "springer", "group": {"family": "Oeven", "N": 4},
                           "partition": [2, 2], "signs": []}))
    assert out["case"] == "III" and out["weyl_rep"] == "induced"

    out = run(parse_input({
        "command": "springer",
        "factors": [{"partition": [3, 1], "signs": [1, -1]},
                    {"partition": [3, 1], "signs": [1, -1]}]}))
    assert out["c_levi"] == ["s1*s2"]


def test_reducibility_document():
    doc = {"command": "reducibility", "group": {"family": "Sp", "N": 6},
           "blocks": [{"pi": {"name": "p", "dim": 1, "type": "orthogonal"}, "a": 2},
                      {"pi": "p", "a": 4}],
           "pi": "p"}
    assert run(parse_input(doc)) == {"pi": "p", "x": "5/2"}


def test_bernstein_and_hecke_documents():
    doc = {"command": "bernstein", "group": {"family": "Sp", "N": 10},
           "gl_factors": [{"pi": {"name": "r", "dim": 1, "type": "orthogonal"},
                           "ell": 2}],
           "cusp_blocks": [{"pi": "r", "a": 2}, {"pi": "r", "a": 4}]}
    out = run(parse_input(doc))
    assert out["factors"] == [{"pi": "r", "type": "B", "rank": 2, "star": False}]
    assert out["torus_dim"] == 2 and out["n_sharp"] == 6

    doc = dict(doc, command="hecke", theta={"r": 1})
    out = run(parse_input(doc))
    assert out["factors"][0]["x_plus"] == "5/2"
    assert out["factors"][0]["mu_short"] == "5"


def test_enumerate_bound(monkeypatch):
    job = parse_input({"command": "enumerate", "group": {"family": "Sp", "N": 40}})
    from cusp_atlas.errors import BoundExceeded
    with pytest.raises(BoundExceeded):
        run(job, bound=10)


def test_main_exit_codes(tmp_path, capsys):
    doc = tmp_path / "job.json"
    doc.write_text(json.dumps(SUPPORT_DOC))
    assert main(["support", "--input", str(doc)]) == 0
    captured = capsys.readouterr()
    assert json.loads(captured.out)["levi"] == "GL_1^2 x Sp_2"

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"command": "support"}))
    assert main(["support", "--input", str(bad)]) == 2

    invalid = tmp_path / "invalid.json"
    invalid.write_text(json.dumps({
        "command": "springer", "group": {"family": "Sp", "N": 4},
        "partition": [3, 1], "signs": []}))
    assert main(["springer", "--input", str(invalid)]) == 3


def test_main_selfcheck_quick(capsys):
    assert main(["selfcheck", "--bound", "6", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["ok"] is True


def test_command_mismatch_rejected():
    with pytest.raises(SchemaError):
        parse_input(SUPPORT_DOC, command="enumerate")
    job = parse_input(dict(SUPPORT_DOC), command="support")
    assert isinstance(job, JobSpec)
