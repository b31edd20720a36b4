"""Tests for projective covers, minimal resolutions and lifts."""
import pytest

from src.algebra.algebra import build_algebra
from src.algebra.bundled import bundled_algebra, loop_presentation
from src.core.config import settings
from src.core.errors import CapExceeded
from src.homology import resolution
from src.homology.functors import ext_from_resolution
from src.homology.resolution import (
    clear_resolution_memo,
    describe_resolution,
    global_dimension,
    lift_module_map,
    minimal_projective_resolution,
    multiplicity_table,
    perturbed_lift,
    projective_cover,
    resolution_of_regular_bimodule,
    resolution_of_simple,
)
from src.modules.projective import simple_module
from src.modules.random import random_endomorphism, random_module


@pytest.mark.parametrize("name, expected", [("K", 0), ("A2", 1), ("A3R", 2), ("KR", 1)])
def test_global_dimension(name, expected):
    assert global_dimension(bundled_algebra(name)) == expected


def test_resolution_of_first_simple_over_a3r(a3r):
    res = resolution_of_simple(a3r, 0)
    assert res.length == 2
    assert res.multiplicities() == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert res.is_exact()
    assert res.is_radical()


def test_projective_cover_of_random_module(kronecker):
    m = random_module(kronecker, 21)
    p, cover = projective_cover(m)
    assert cover.morphism.rank() == m.total_dim
    assert cover.morphism.intertwining_defect() == []


@pytest.mark.parametrize("seed", range(4))
def test_random_resolutions_are_exact(a3r, seed):
    res = minimal_projective_resolution(random_module(a3r, seed))
    assert res.is_exact()
    assert res.length <= 2


def test_loop_resolution_hits_the_cap(q):
    loop = build_algebra(loop_presentation(q))
    with pytest.raises(CapExceeded) as excinfo:
        minimal_projective_resolution(simple_module(loop, 0), cap=3)
    assert excinfo.value.exit_code == 3


def test_regular_bimodule_resolution(a2):
    res = resolution_of_regular_bimodule(a2)
    assert res.length == 1
    assert res.is_exact()


def test_multiplicity_table(a3r):
    table = multiplicity_table(resolution_of_simple(a3r, 0))
    assert list(table.index) == ["P_0", "P_1", "P_2"]
    assert list(table.columns) == ["1", "2", "3"]
    assert table.loc["P_1", "2"] == 1
    assert int(table.to_numpy().sum()) == 3


def test_describe_resolution(a2):
    text = describe_resolution(resolution_of_simple(a2, 0))
    assert "P_0 = e1A" in text
    assert "P_1 = e2A" in text
    assert "length 1" in text


def test_lift_does_not_depend_on_choices(a3r):
    m, n = random_module(a3r, 3), random_module(a3r, 4)
    phi, psi = random_endomorphism(m, 5), random_endomorphism(n, 6)
    res = minimal_projective_resolution(m)
    lifts = lift_module_map(phi, res, res)
    first = ext_from_resolution(res, n, phi, psi, lifts)
    for seed in range(3):
        other = ext_from_resolution(res, n, phi, psi, perturbed_lift(res, lifts, seed))
        assert other.traces == first.traces


def test_resolution_memo_is_bounded(monkeypatch, a3r):
    monkeypatch.setattr(settings, "construction_cache_size", 2)
    clear_resolution_memo()
    first = resolution_of_simple(a3r, 0)
    assert resolution_of_simple(a3r, 0) is first
    lengths = [resolution_of_simple(a3r, i).length for i in range(3)]
    assert lengths == [2, 1, 0]
    assert len(resolution._memo) == 2
    assert resolution_of_simple(a3r, 0) is not first
    clear_resolution_memo()
