"""Canonical report serialization: stable bytes, no ambient state."""

import json

import pytest

from limitlearn import ExperimentConfig, Status, canonical_json, make_report
from limitlearn.reports import SCHEMA_VERSION, to_jsonable


def test_to_jsonable_handles_library_shapes():
    assert to_jsonable(Status.PASS_AT_HORIZON) == "PASS_AT_HORIZON"
    assert to_jsonable(frozenset({3, 1})) == [1, 3]
    assert to_jsonable({5, 2}) == [2, 5]
    assert to_jsonable((1, (2, 3))) == [1, [2, 3]]
    assert to_jsonable({2: "b", 1: "a"}) == {"2": "b", "1": "a"}
    assert to_jsonable({"x": None}) == {"x": None}


def test_to_jsonable_uses_as_dict_hook():
    class Thing:
        def as_dict(self):
            return {"v": (1, 2)}

    assert to_jsonable(Thing()) == {"v": [1, 2]}


def test_to_jsonable_rejects_unknown_types():
    with pytest.raises(TypeError, match="cannot serialize"):
        to_jsonable(object())


def test_canonical_json_layout():
    blob = canonical_json({"b": 1, "a": [2, 1]})
    assert blob.endswith("\n")
    assert blob == '{\n  "a": [\n    2,\n    1\n  ],\n  "b": 1\n}\n'
    # key order in the input must not matter
    assert canonical_json({"a": [2, 1], "b": 1}) == blob


def test_make_report_shape():
    cfg = ExperimentConfig(command="construct", params={"horizon": 5})
    rep = make_report(cfg, {"answer": frozenset({1})}, work={"queries": 9})
    assert rep["schema_version"] == SCHEMA_VERSION
    assert rep["config"]["command"] == "construct"
    assert rep["results"] == {"answer": [1]}
    assert rep["work"] == {"queries": 9}
    # reports must stay loadable and re-serializable byte for byte
    blob = canonical_json(rep)
    assert canonical_json(json.loads(blob)) == blob


def test_reports_carry_no_timestamps():
    cfg = ExperimentConfig(command="suite", params={})
    rep = make_report(cfg, {})
    blob = canonical_json(rep)
    for needle in ("time", "date", "stamp"):
        assert needle not in blob
