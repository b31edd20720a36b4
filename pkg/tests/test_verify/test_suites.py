"""Tests for the corpora, corollaries, closed forms, lemmas and oracles."""
import pytest

from src.algebra.bundled import bundled_algebra
from src.linalg.matrix import Matrix
from src.modules.projective import indecomposable_projective, simple_module
from src.modules.representation import identity_morphism
from src.verify.closed_forms import chern_character, hattori_stallings_trace, shklyarov_pairing_matrix
from src.verify.corollaries import verify_closed_forms, verify_corollaries
from src.verify.corpus import identity_corpus, identity_seed, round_robin_corpus, samples_for
from src.verify.identities import IdentityId, Level, all_identities
from src.verify.lemmas import simple_multiplicity_table, verify_alternate_forms, verify_lemma_suite, verify_oracles


def failures(reports):
    return [f"{r.check_id}: {r.diagnosis}" for r in reports if not r.passed]


class TestCorpus:
    def test_heavy_levels_run_fewer_samples(self):
        module = IdentityId.parse("module.cohomological.HRR")
        complex_ = IdentityId.parse("complex.cohomological.HRR")
        assert samples_for(module, 20) == 20
        assert samples_for(complex_, 20) == 5
        assert samples_for(complex_, 2) == 1

    def test_identity_corpus_size(self):
        identities = all_identities([Level.module])
        corpus = list(identity_corpus(identities, 3, 0))
        assert len(corpus) == 8 * 3
        assert corpus[0][0].endswith("#001")

    def test_corpus_is_reproducible(self):
        identities = all_identities()
        assert list(identity_corpus(identities, 4, 11)) == list(identity_corpus(identities, 4, 11))
        assert list(identity_corpus(identities, 4, 11)) != list(identity_corpus(identities, 4, 12))

    def test_identity_seed_mixes_the_key(self):
        a = IdentityId.parse("module.cohomological.HRR")
        b = IdentityId.parse("module.cohomological.Lefschetz")
        assert identity_seed(a, 0) != identity_seed(b, 0)

    def test_round_robin(self):
        identities = all_identities([Level.module])
        corpus = list(round_robin_corpus(identities, 10, 0))
        assert len(corpus) == 10
        assert corpus[8][1] == identities[0]


class TestClosedForms:
    def test_pairing_is_cartan_transpose(self, a2):
        assert shklyarov_pairing_matrix(a2).to_ints() == [[1, 1], [0, 1]]

    def test_chern_character_of_simple(self, a2, q):
        assert chern_character(simple_module(a2, 0)) == Matrix.column([1, -1], q)

    def test_hattori_stallings_of_projective(self, a3r, q):
        p = indecomposable_projective(a3r, 1)
        assert hattori_stallings_trace(identity_morphism(p)) == Matrix.column([0, 1, 0], q)


@pytest.mark.parametrize("name", ["K", "A2", "A3R", "KR"])
def test_corollaries_and_closed_forms_pass(name):
    a = bundled_algebra(name)
    assert failures(verify_corollaries(a)) == []
    assert failures(verify_closed_forms(a, seed=3)) == []


def test_corollary_reports_are_timed(a3r):
    reports = {r.check_id: r for r in verify_corollaries(a3r)}
    degrees = reports["corollary.hochschild_homology_degrees"]
    assert degrees.lhs == [3, 0, 0]
    assert "gldim(A^e)" in degrees.lhs_provenance
    assert all(r.elapsed_ms > 0 for r in reports.values())


def test_simple_multiplicities_match_ext(a3r):
    t, e = simple_multiplicity_table(a3r)
    assert t == e
    assert t.rows == 3


def test_alternate_forms(a3r):
    reports = verify_alternate_forms(a3r, samples=2, seed=0)
    assert len(reports) == 8
    assert failures(reports) == []


@pytest.mark.slow
def test_lemma_suite(a2, kronecker):
    assert failures(verify_lemma_suite(a2, kronecker, samples=1, seed=0)) == []


@pytest.mark.slow
def test_oracles(a3r):
    assert failures(verify_oracles(a3r, samples=2, seed=1)) == []
