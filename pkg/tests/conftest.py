"""Pytest configuration and fixtures."""
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from src.algebra.bundled import bundled_algebra
from src.api.main import app
from src.linalg.field import FieldSpec

PROBLEMS = Path(__file__).resolve().parents[1] / "data" / "problems"


@pytest.fixture
def client():
    """Create a test client for the FastAPI app."""
    return TestClient(app)


@pytest.fixture
def problems_dir() -> Path:
    return PROBLEMS


@pytest.fixture
def q() -> FieldSpec:
    return FieldSpec.rationals()


@pytest.fixture
def k_alg():
    """The ground field as a one-vertex algebra."""
    return bundled_algebra("K")


@pytest.fixture
def a2():
    """1 --a--> 2."""
    return bundled_algebra("A2")


@pytest.fixture
def a3r():
    """1 --a--> 2 --b--> 3 with ab = 0."""
    return bundled_algebra("A3R")


@pytest.fixture
def kronecker():
    return bundled_algebra("KR")


@pytest.fixture
def a2_document() -> dict:
    """A small problem document over A2, as the API receives it."""
    return {
        "field": "Q",
        "algebras": {"A2": {"vertices": 2, "arrows": [{"name": "a", "source": 1, "target": 2}]}},
        "modules": {
            "S1": {"algebra": "A2", "dims": [1, 0]},
            "S2": {"algebra": "A2", "dims": [0, 1]},
        },
        "checks": [{"identity": "module.cohomological.HRR", "m": "S1", "n": "S2", "id": "ext"}],
    }
