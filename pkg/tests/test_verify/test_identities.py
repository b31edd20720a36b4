"""Tests for identity ids, reports and single-identity verification."""
import pytest
from pydantic import ValidationError as PydanticValidationError

from src.algebra.algebra import build_algebra
from src.algebra.bundled import loop_presentation
from src.algebra.constructions import opposite_algebra
from src.complexes.random import random_bimodule_complex
from src.core.errors import UnimodularityError
from src.linalg.matrix import IntMatrix
from src.modules.bimodule import dim_matrix
from src.modules.projective import indecomposable_projective, simple_module
from src.modules.random import random_bimodule
from src.modules.representation import identity_morphism
from src.verify.checks import compare, diagnose, verify
from src.verify.closed_forms import CheckInputs
from src.verify.corpus import build_inputs, partner_algebra
from src.verify.identities import Flavor, IdentityId, Level, VerificationReport, Version, all_identities, digest


def test_identity_count():
    ids = all_identities()
    assert len(ids) == 24
    assert len({i.key for i in ids}) == 24
    assert len(all_identities([Level.module], [Flavor.hrr])) == 4
    assert len(all_identities([Level.bimodule])) == 4


def test_parse_round_trip():
    identity = IdentityId.parse("complex.hochschild_homological.Lefschetz")
    assert identity.level == Level.complex
    assert identity.flavor == Flavor.lefschetz
    assert identity.key == "complex.hochschild_homological.Lefschetz"


def test_hochschild_only_at_module_and_complex_levels():
    with pytest.raises(PydanticValidationError):
        IdentityId.parse("bimodule.hochschild_cohomological.HRR")


def test_deterministic_drops_timing():
    r = VerificationReport(check_id="x", passed=True, elapsed_ms=12.5)
    assert "elapsed_ms" not in r.deterministic()
    assert r.deterministic()["check_id"] == "x"


def test_digest_is_stable(a2):
    s = simple_module(a2, 0)
    assert digest(s) == digest(simple_module(a2, 0))
    assert digest(s) != digest(simple_module(a2, 1))


def test_diagnose_reports_one_based_entries():
    lhs = IntMatrix.from_rows([[1, 0], [0, 1]])
    rhs = IntMatrix.from_rows([[1, 0], [2, 1]])
    assert diagnose(lhs, rhs) == "entries differ at (2,1): 0 vs 2"
    report = compare("m", lhs, rhs, "left", "right")
    assert not report.passed
    assert report.lhs == [["1", "0"], ["0", "1"]]


class TestHandChecks:
    def test_ext_euler_between_simples(self, a2):
        identity = IdentityId.parse("module.cohomological.HRR")
        report = verify(identity, CheckInputs(a2, simple_module(a2, 0), simple_module(a2, 1)), "ext")
        assert report.passed
        assert report.lhs == -1
        assert report.check_id == "ext"

    def test_tor_lefschetz(self, a2, q):
        identity = IdentityId.parse("module.homological.Lefschetz")
        p1 = indecomposable_projective(a2, 0)
        d2 = indecomposable_projective(opposite_algebra(a2), 1)
        phi = identity_morphism(p1).scale(q.coerce(2))
        chi = identity_morphism(d2).scale(q.coerce(5))
        report = verify(identity, CheckInputs(a2, p1, d2, phi, chi))
        assert report.passed
        assert report.check_id == identity.key

    def test_lefschetz_defaults_to_identities(self, a3r):
        identity = IdentityId.parse("module.cohomological.Lefschetz")
        s1, s3 = simple_module(a3r, 0), simple_module(a3r, 2)
        report = verify(identity, CheckInputs(a3r, s1, s3))
        assert report.passed
        assert report.lhs == "1"

    def test_loop_is_rejected(self, q):
        loop = build_algebra(loop_presentation(q))
        s = simple_module(loop, 0)
        with pytest.raises(UnimodularityError):
            verify(IdentityId.parse("module.cohomological.HRR"), CheckInputs(loop, s, s))


@pytest.mark.parametrize("identity", all_identities([Level.module]), ids=lambda i: i.key)
def test_random_module_identities_hold(a3r, identity):
    for seed in range(3):
        assert verify(identity, build_inputs(identity, a3r, seed)).passed


@pytest.mark.slow
@pytest.mark.parametrize(
    "identity",
    all_identities([Level.bimodule, Level.complex, Level.bimodule_complex]),
    ids=lambda i: i.key,
)
def test_random_heavy_identities_hold(a2, identity):
    assert verify(identity, build_inputs(identity, a2, 7)).passed


class TestRectangularBimodules:
    """A3R-A2 against K-A2 (or A2-K): the bimodule identities with three different algebras."""

    @pytest.mark.parametrize("identity", all_identities([Level.bimodule]), ids=lambda i: i.key)
    def test_bimodule_identities_hold(self, a2, a3r, k_alg, identity):
        m = random_bimodule(a3r, a2, 11, budget=1)
        if identity.version == Version.homological:
            n = random_bimodule(a2, k_alg, 12, budget=1)
            shape = (1, 3)
        else:
            n = random_bimodule(k_alg, a2, 12, budget=1)
            shape = (3, 1)
        assert dim_matrix(m).shape == (2, 3)
        report = verify(identity, CheckInputs(a2, m, n))
        assert report.passed
        assert (len(report.lhs), len(report.lhs[0])) == shape

    @pytest.mark.slow
    @pytest.mark.parametrize("identity", all_identities([Level.bimodule_complex], [Flavor.hrr]), ids=lambda i: i.key)
    def test_bimodule_complex_identities_hold(self, a2, kronecker, k_alg, identity):
        m = random_bimodule_complex(kronecker, a2, 5, max_length=2)
        if identity.version == Version.homological:
            n = random_bimodule_complex(a2, k_alg, 6, max_length=2)
        else:
            n = random_bimodule_complex(k_alg, a2, 6, max_length=2)
        assert verify(identity, CheckInputs(a2, m, n)).passed

    def test_partner_algebras(self, a2):
        partners = {partner_algebra(a2, s).presentation for s in range(12)}
        assert a2.presentation in partners
        assert len(partners) == 3
        assert partner_algebra(a2, 0) is a2

    @pytest.mark.parametrize("seed", [1, 3, 5])
    def test_corpus_draws_distinct_sides(self, a2, seed):
        identity = IdentityId.parse("bimodule.cohomological.HRR")
        inputs = build_inputs(identity, a2, seed)
        assert inputs.m.right == a2
        assert inputs.n.right == a2
        assert verify(identity, inputs).passed
