"""Tests for problem-file parsing, validation locations and canonical emission."""
import copy
import json
from pathlib import Path

import pytest

from src.cli.schema import emit, parse
from src.core.errors import ValidationError
from src.linalg.field import FieldSpec

PROBLEMS = Path(__file__).resolve().parents[2] / "data" / "problems"


@pytest.mark.parametrize("path", sorted(PROBLEMS.glob("*.json")), ids=lambda p: p.name)
def test_bundled_problem_files_parse(path):
    problem = parse(path.read_text(encoding="utf-8"))
    assert problem.algebras


def test_a2_problem_contents(problems_dir):
    problem = parse((problems_dir / "a2.json").read_text(encoding="utf-8"))
    assert problem.modules["P1"].dims == (1, 1)
    assert problem.bimodules["B11"].dim(0, 0) == 1
    assert problem.complexes["C"].lo == -1


def test_emit_is_canonical(problems_dir):
    problem = parse((problems_dir / "field.json").read_text(encoding="utf-8"))
    text = emit(problem)
    assert json.loads(text)["field"] == {"Fp": 5}
    assert emit(parse(text)) == text


def test_field_override(a2_document):
    problem = parse(json.dumps(a2_document), FieldSpec.prime(3))
    assert problem.field == FieldSpec.prime(3)
    assert problem.algebras["A2"].field == FieldSpec.prime(3)


def _location(doc: dict) -> str:
    with pytest.raises(ValidationError) as excinfo:
        parse(json.dumps(doc))
    return excinfo.value.location


class TestLocations:
    def test_unknown_key(self, a2_document):
        doc = copy.deepcopy(a2_document)
        doc["colour"] = "blue"
        assert _location(doc) == "colour"

    def test_wrong_dims(self, a2_document):
        doc = copy.deepcopy(a2_document)
        doc["modules"]["S1"]["dims"] = [1, 0, 0]
        assert _location(doc) == "modules.S1.dims"

    def test_unknown_arrow_action(self, a2_document):
        doc = copy.deepcopy(a2_document)
        doc["modules"]["S1"]["actions"] = {"z": [["1"]]}
        assert _location(doc) == "modules.S1.actions.z"

    def test_unknown_algebra(self, a2_document):
        doc = copy.deepcopy(a2_document)
        doc["modules"]["S1"]["algebra"] = "B"
        assert _location(doc) == "modules.S1.algebra"

    def test_non_prime_field(self, a2_document):
        doc = copy.deepcopy(a2_document)
        doc["field"] = {"Fp": 4}
        assert _location(doc) == "field"

    def test_broken_relation(self):
        doc = {
            "algebras": {
                "A3R": {
                    "vertices": 3,
                    "arrows": [{"name": "a", "source": 1, "target": 2}, {"name": "b", "source": 2, "target": 3}],
                    "relations": [[{"path": ["a", "b"]}]],
                }
            },
            "modules": {"M": {"algebra": "A3R", "dims": [1, 1, 1], "actions": {"a": [["1"]], "b": [["1"]]}}},
        }
        assert _location(doc) == "modules.M.relations[0]"
