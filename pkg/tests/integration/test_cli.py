"""End-to-end runs of the command-line interface."""

import json
from typing import Optional

import pytest
from typer.testing import CliRunner

from apps.cli.io import EXIT_FAILED, EXIT_INVALID, EXIT_OK
from apps.cli.main import app

runner = CliRunner()

UNIT_BASIS = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]


def _run(*args: str, input: Optional[str] = None):
    return runner.invoke(app, list(args), input=input)


def _write(path, payload) -> str:
    path.write_text(json.dumps(payload))
    return str(path)


@pytest.fixture
def cylinder_file() -> str:
    result = _run("preset", "cylinder")
    assert result.exit_code == EXIT_OK, result.output
    return result.stdout


@pytest.fixture
def affine_file(tmp_path) -> str:
    result = _run("preset", "affine", "--n", "4", "--k", "2", "--a", "0,0;1,0", "--b", "1,2;3,4")
    assert result.exit_code == EXIT_OK, result.output
    return _write(tmp_path / "affine.json", json.loads(result.stdout))


def test_preset_pipes_into_build(cylinder_file):
    result = _run("monoid", "build", "--json", input=cylinder_file)
    assert result.exit_code == EXIT_OK, result.output
    summary = json.loads(result.stdout)
    assert summary["k"] == 2
    assert summary["active"] is True
    assert summary["commutative"] is False
    assert len(summary["generators"]) == 5


def test_monoid_check_passes(cylinder_file):
    result = _run("monoid", "check", "--samples", "3", "--seed", "7", "--json", input=cylinder_file)
    assert result.exit_code == EXIT_OK, result.output
    report = json.loads(result.stdout)
    assert report["ok"] is True
    assert report["failed"] == 0
    assert report["seed"] == 7


def test_monoid_check_is_reproducible(cylinder_file):
    first = _run("monoid", "check", "--samples", "2", "--seed", "3", "--json", input=cylinder_file)
    second = _run("monoid", "check", "--samples", "2", "--seed", "3", "--json", input=cylinder_file)
    assert first.stdout == second.stdout


def test_product_of_explicit_points(tmp_path, affine_file):
    x = _write(tmp_path / "x.json", {"face_rays": [], "basis": UNIT_BASIS, "values": ["1", "2", "3", "4"]})
    y = _write(tmp_path / "y.json", {"face_rays": [], "basis": UNIT_BASIS, "values": [5, 6, 7, 8]})
    result = _run("monoid", "mul", "--monoid", affine_file, "--x", x, "--y", y, "--json")
    assert result.exit_code == EXIT_OK, result.output
    # generators are ordered e4, e3, e2, e1
    assert json.loads(result.stdout)["generator_values"] == ["32", "21", "41486", "241"]


def test_inverse_of_a_unit(tmp_path, affine_file):
    x = _write(tmp_path / "x.json", {"face_rays": [], "basis": UNIT_BASIS, "values": ["2", "3", "1/2", "5"]})
    result = _run("monoid", "inv", "--monoid", affine_file, "--x", x, "--json")
    assert result.exit_code == EXIT_OK, result.output
    assert json.loads(result.stdout)["coordinates"] is not None


def test_inverse_of_a_non_unit(tmp_path, affine_file):
    x = _write(tmp_path / "x.json", {"generator_values": ["1", "0", "1", "1"]})
    result = _run("monoid", "inv", "--monoid", affine_file, "--x", x)
    assert result.exit_code == EXIT_INVALID


def test_point_of_the_wrong_rank(tmp_path, affine_file):
    x = _write(tmp_path / "x.json", {"face_rays": [], "basis": [[1, 0, 0], [0, 1, 0], [0, 0, 1]], "values": [1, 1, 1]})
    result = _run("monoid", "mul", "--monoid", affine_file, "--x", x, "--y", x)
    assert result.exit_code == EXIT_INVALID


def test_mismatched_root_ranks(tmp_path):
    payload = {"cone": {"rays": [[1, 0], [0, 1]]}, "tau": [0], "pairs": [{"e1": [-1, 0, 0], "e2": [-1, 1]}]}
    result = _run("monoid", "build", "--monoid", _write(tmp_path / "m.json", payload))
    assert result.exit_code == EXIT_INVALID


def test_malformed_json():
    result = _run("monoid", "build", input="{not json")
    assert result.exit_code == EXIT_INVALID


def test_incompatible_pairs_fail_check(tmp_path):
    payload = {
        "cone": {"rays": [[1, 0], [0, 1]]},
        "tau": [0],
        "pairs": [{"e1": [-1, 0], "e2": [0, -1]}],
    }
    result = _run("roots", "check", "--monoid", _write(tmp_path / "m.json", payload), "--json")
    assert result.exit_code == EXIT_FAILED
    assert json.loads(result.stdout)["compatible"] is False

    result = _run("monoid", "build", "--monoid", str(tmp_path / "m.json"))
    assert result.exit_code == EXIT_INVALID


QUADRIC_PAIRS = "-1,0,0,1;-1,0,1,2|0,-1,0,2;0,-1,2,1"


def test_check_pairs_given_with_cone_and_tau(tmp_path):
    rays = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 1, 0, 1], [1, 0, 0, 1]]
    cone = _write(tmp_path / "cone.json", {"rays": rays})
    result = _run("roots", "check", "--cone", cone, "--tau", "0,1", "--pairs", QUADRIC_PAIRS, "--json")
    assert result.exit_code == EXIT_OK, result.output
    assert json.loads(result.stdout) == {"compatible": True, "violations": []}

    swapped = {
        "tau_rays": [0, 1],
        "pairs": [{"e1": [0, -1, 0, 2], "e2": [0, -1, 2, 1]}, {"e1": [-1, 0, 0, 1], "e2": [-1, 0, 1, 2]}],
    }
    pairs = _write(tmp_path / "pairs.json", swapped)
    result = _run("roots", "check", "--cone", cone, "--tau", "0,1", "--pairs", pairs, "--json")
    assert result.exit_code == EXIT_FAILED
    assert {v["reason"] for v in json.loads(result.stdout)["violations"]} == {"kronecker"}

    assert _run("roots", "check", "--cone", cone, "--tau", "0,1").exit_code == EXIT_INVALID
    assert _run("roots", "check", "--cone", cone, "--tau", "0,1", "--pairs", "1,0").exit_code == EXIT_INVALID


def test_cone_commands(tmp_path):
    cone = _write(tmp_path / "cone.json", {"rank": 2, "rays": [[1, 0], [1, 2]]})
    faces = json.loads(_run("cone", "faces", "--cone", cone, "--json").stdout)
    assert faces["count"] == 4
    assert [f["regular"] for f in faces["faces"]] == [True, True, True, False]
    hilbert = json.loads(_run("cone", "hilbert", "--cone", cone, "--json").stdout)
    assert hilbert["generators"] == [[0, 1], [1, 0], [2, -1]]
    dual = json.loads(_run("cone", "dual", "--cone", cone, "--json").stdout)
    assert sorted(dual["rays"]) == [[0, 1], [2, -1]]


def test_non_full_dimensional_cone(tmp_path):
    cone = _write(tmp_path / "cone.json", {"rays": [[1, 0, 0], [0, 1, 0]]})
    assert _run("cone", "faces", "--cone", cone).exit_code == EXIT_INVALID


def test_roots_enumerate_and_pairs(tmp_path):
    cone = _write(tmp_path / "cone.json", {"rays": [[1, 0], [0, 1]]})
    roots = json.loads(_run("roots", "enumerate", "--cone", cone, "--ray", "0", "--bound", "2", "--json").stdout)
    assert roots["roots"] == [[-1, 0], [-1, 1], [-1, 2]]
    pairs = json.loads(_run("act", "pairs", "--cone", cone, "--e=-1,0", "--json").stdout)
    assert len(pairs["pairs"]) == 2


def test_construct_then_build(tmp_path):
    cone = _write(tmp_path / "cone.json", {"rays": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 1, 0, 1], [1, 0, 0, 1]]})
    result = _run("roots", "construct", "--cone", cone, "--tau", "0,1", "--c=0,0,1,1", "--c=0,0,-2,1")
    assert result.exit_code == EXIT_OK, result.output
    built = _run("monoid", "build", "--json", input=result.stdout)
    assert built.exit_code == EXIT_OK, built.output
    assert json.loads(built.stdout)["characters"] == [[0, 0, -1, -1], [0, 0, 2, -1]]


def test_root_action(tmp_path):
    cone = _write(tmp_path / "cone.json", {"rays": [[1, 0], [0, 1]]})
    x = _write(tmp_path / "x.json", {"face_rays": [], "basis": [[1, 0], [0, 1]], "values": ["2", "3"]})
    result = _run("act", "root", "--cone", cone, "--x", x, "--e=-1,0", "--a=-2", "--json")
    assert result.exit_code == EXIT_OK, result.output
    payload = json.loads(result.stdout)
    assert payload["point"]["face_rays"] == [0]
    assert payload["degenerate_parameter"] == "-2"


def test_idempotent_classification(cylinder_file):
    result = _run("idem", "classify", "--face", "2", "--json", input=cylinder_file)
    assert result.exit_code == EXIT_OK, result.output
    (locus,) = json.loads(result.stdout)["loci"]
    assert locus["case"] == "positive"
    assert locus["closure_faces"] == [[2], [0, 2], [1, 2], [0, 1, 2]]

    everything = json.loads(_run("idem", "classify", "--json", input=cylinder_file).stdout)
    assert len(everything["loci"]) == 20


def test_idempotent_verify(cylinder_file):
    result = _run("idem", "verify", "--face", "2", "--samples", "8", "--json", input=cylinder_file)
    assert result.exit_code == EXIT_OK, result.output
    assert json.loads(result.stdout)["ok"] is True


def test_center_equations(cylinder_file):
    result = _run("center", "equations", "--bound", "4", "--json", input=cylinder_file)
    assert result.exit_code == EXIT_OK, result.output
    locus = json.loads(result.stdout)
    assert locus["active"] is True
    assert [1, 0, 0, 0] in locus["vanishing"]
    assert len(locus["equations"]) == 5


def test_center_bound_too_small(cylinder_file):
    assert _run("center", "equations", "--bound", "1", input=cylinder_file).exit_code == EXIT_INVALID


def test_text_output(cylinder_file):
    result = _run("monoid", "build", input=cylinder_file)
    assert result.exit_code == EXIT_OK, result.output
    assert "active: true" in result.stdout.lower()
