"""Scene files: validation, errors, and the serialize/load round trip."""

from __future__ import annotations

import json

import pytest

from virtbetti.errors import SceneError, UnknownName
from virtbetti.fixtures import builtin_scene
from virtbetti.scene import dump_scene, load_scene, scene_from_dict, scene_to_dict
from virtbetti.scissor import evaluate_beta
from virtbetti.stratified import beta_of_stratified

MINIMAL = {
    "schema_version": 1,
    "complexes": {
        "circle": {
            "vertices": ["a", "b", "c"],
            "maximal_simplices": [["a", "b"], ["b", "c"], ["c", "a"]],
        },
        "pt": {"vertices": ["a"], "maximal_simplices": [["a"]]},
    },
    "pairs": {
        "line": {"total": "circle", "boundary_maximal": [["a"]]},
    },
    "atoms": {
        "circle": {"model": "circle"},
        "pt": {"model": "pt"},
        "exotic": {"beta": "1 + 3*t^2", "chi_c": 4, "compact_nonsingular": False},
    },
    "expressions": {
        "line": {
            "op": "difference",
            "total": {"op": "atom", "name": "circle"},
            "closed": {"op": "atom", "name": "pt"},
        },
    },
    "stratifications": {
        "circle-two": {
            "strata": [
                {"name": "arc", "dim": 1, "model": {"kind": "open", "pair": "line"}},
                {"name": "pt", "dim": 0, "model": {"kind": "compact", "complex": "pt"}},
            ],
            "frontier": {"arc": ["pt"]},
        },
    },
    "arrangements": {
        "whole": {
            "total": "circle",
            "pieces": [
                {"name": "X", "maximal_simplices": [["a", "b"], ["b", "c"], ["c", "a"]]},
            ],
        },
    },
    "weight_inputs": {
        "small": {"b": [1, 1], "beta": [1, 1]},
    },
}


def test_minimal_scene_loads_and_computes():
    scene = scene_from_dict(MINIMAL)
    assert tuple(scene.complex("circle").betti_mod2()) == (1, 1)
    assert evaluate_beta(scene.expression("line"), scene.atoms).to_text() == "t"
    assert beta_of_stratified(scene.stratification("circle-two"), strict=True).to_text() == "1 + t"
    assert scene.atoms.lookup("exotic").declared


def test_schema_version_is_checked():
    with pytest.raises(SceneError):
        scene_from_dict({"schema_version": 99})


def test_unknown_reference_is_flagged():
    bad = json.loads(json.dumps(MINIMAL))
    bad["pairs"]["line"]["total"] = "nope"
    with pytest.raises(UnknownName):
        scene_from_dict(bad)


def test_unknown_expression_op():
    bad = json.loads(json.dumps(MINIMAL))
    bad["expressions"]["line"] = {"op": "quotient"}
    with pytest.raises(SceneError):
        scene_from_dict(bad)


def test_face_closure_is_computed_on_load():
    scene = scene_from_dict(MINIMAL)
    assert scene.complex("circle").contains_simplex(("a",))


def test_round_trip_minimal():
    scene = scene_from_dict(MINIMAL)
    again = scene_from_dict(scene_to_dict(scene))
    assert again == scene


def test_round_trip_builtin_scene():
    scene = builtin_scene()
    data = scene_to_dict(scene)
    again = scene_from_dict(data)
    assert again == scene
    # serialization is canonical: a second pass is byte-identical
    assert json.dumps(data, sort_keys=True) == json.dumps(scene_to_dict(again), sort_keys=True)


def test_dump_and_load_file(tmp_path):
    scene = scene_from_dict(MINIMAL)
    path = tmp_path / "scene.json"
    dump_scene(scene, str(path))
    assert load_scene(str(path)) == scene


def test_load_rejects_bad_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(SceneError):
        load_scene(str(path))


def test_load_missing_file():
    with pytest.raises(SceneError):
        load_scene("/no/such/file.json")


def test_boundary_strata_reference(tmp_path):
    data = json.loads(json.dumps(MINIMAL))
    data["complexes"]["two-pts"] = {
        "vertices": ["a", "b"],
        "maximal_simplices": [["a"], ["b"]],
    }
    data["pairs"]["arcs"] = {"total": "circle", "boundary_maximal": [["a"], ["b"]]}
    data["stratifications"]["singular-boundary"] = {
        "strata": [
            {
                "name": "open-part",
                "dim": 1,
                "model": {
                    "kind": "open",
                    "pair": "arcs",
                    "boundary_nonsingular": False,
                    "boundary_strata": "two-points-strat",
                },
            },
        ],
    }
    data["stratifications"]["two-points-strat"] = {
        "strata": [
            {"name": "pts", "dim": 0, "model": {"kind": "compact", "complex": "two-pts"}},
        ],
    }
    scene = scene_from_dict(data)
    beta = beta_of_stratified(scene.stratification("singular-boundary"))
    assert beta.to_text() == "-1 + t"
