from collections import Counter

import pytest

import oracles
from prymcov.homenum import (
    EnumerationTooLarge,
    SurfaceHom,
    classes_up_to_conjugacy,
    enumerate_homs,
    is_surjective,
    surjective_homs,
    transposition_census,
    transposition_histogram,
)
from prymcov.permgroup import Permutation, cyclic, dihedral, symmetric

S3 = symmetric(3)


def hom(*cycle_lists):
    return SurfaceHom(S3, tuple(S3.index_of(Permutation.from_cycles(3, *c)) for c in cycle_lists))


@pytest.fixture(scope="module")
def surj():
    return surjective_homs(2, S3)


def test_genus0_single_hom():
    homs = enumerate_homs(0, S3)
    assert len(homs) == 1 and homs[0].images == ()


def test_genus1_commuting_pairs():
    # oracle: commuting pairs in S3 = |G| * #classes = 18
    raw = oracles.s3_surface_homs(1)
    assert len(raw) == 18
    assert len(enumerate_homs(1, S3)) == 18
    assert surjective_homs(1, S3) == []


def test_genus2_total_matches_oracle():
    raw = oracles.s3_surface_homs(2)
    assert len(raw) == 486
    ours = {tuple(S3.perm(a).mapping for a in h.images) for h in enumerate_homs(2, S3)}
    assert ours == set(raw)


def test_surjective_count_matches_oracle(surj):
    raw = [t for t in oracles.s3_surface_homs(2) if len(oracles.closure(t, 3)) == 6]
    assert len(raw) == 360
    assert len(surj) == 360


def test_every_hom_satisfies_relation(surj):
    for h in surj:
        assert h.relation_holds()
        x = oracles.ident(3)
        for a, b in h.pairs():
            x = oracles.mul(x, oracles.commutator(S3.perm(a).mapping, S3.perm(b).mapping))
        assert x == oracles.ident(3)


class TestSurjective:
    def test_trivial(self):
        assert not is_surjective(hom((), (), (), ()))

    def test_transpositions_only(self):
        h = hom(((0, 1),), ((0, 1),), ((0, 2),), ((0, 2),))
        assert h.relation_holds() and is_surjective(h)

    def test_sigma_tau_pair(self):
        # A1 = (0 1 2), B1 = (0 1), A2 = (0 2 1), B2 = (0 1)
        h = hom(((0, 1, 2),), ((0, 1),), ((0, 2, 1),), ((0, 1),))
        assert h.relation_holds()
        assert is_surjective(h)

    def test_cyclic_image(self):
        h = hom(((0, 1, 2),), (), (), ())
        assert h.relation_holds() and not is_surjective(h)


class TestClasses:
    def test_sixty_free_orbits(self, surj):
        classes = classes_up_to_conjugacy(surj)
        assert len(classes) == 60
        assert all(c.size == 6 for c in classes)
        assert sum(c.size for c in classes) == 360

    def test_representatives_minimal_and_sorted(self, surj):
        classes = classes_up_to_conjugacy(surj)
        reps = [c.representative.images for c in classes]
        assert reps == sorted(reps)
        for r in reps:
            orbit = {tuple(S3.conj(g, a) for a in r) for g in S3.elements()}
            assert r == min(orbit)

    def test_central_image_orbit_size_one(self):
        classes = classes_up_to_conjugacy(enumerate_homs(2, S3))
        trivial = [c for c in classes if c.representative.images == (0, 0, 0, 0)]
        assert trivial[0].size == 1

    def test_abelian_target_orbits_are_singletons(self):
        Z3 = cyclic(3)
        homs = enumerate_homs(2, Z3)
        assert len(homs) == 81  # abelian: every tuple
        # conjugation is trivial in an abelian group
        assert len(classes_up_to_conjugacy(homs)) == 81

    def test_burnside_count_d4(self):
        D4 = dihedral(4)
        homs = surjective_homs(1, D4)
        tuples = {h.images for h in homs}
        # Burnside: #orbits = average number of fixed points
        fixed = sum(
            sum(1 for t in tuples if tuple(D4.conj(g, a) for a in t) == t) for g in D4.elements()
        )
        assert len(classes_up_to_conjugacy(homs)) == fixed // D4.order

    def test_not_closed_under_conjugation(self, surj):
        with pytest.raises(ValueError):
            classes_up_to_conjugacy(surj[:1] + surj[2:3])

    def test_conjugation_preserves_relation_and_surjectivity(self, surj):
        for h in surj[::17]:
            for g in S3.elements():
                k = h.conjugate(g)
                assert k.relation_holds() and is_surjective(k)


class TestCensus:
    def test_examples(self):
        assert transposition_census(hom((), (), (), ())) == 0
        assert transposition_census(hom(((0, 1),), ((0, 1),), ((0, 1),), ((0, 1),))) == 4

    def test_requires_permutation_target(self):
        with pytest.raises(TypeError):
            transposition_census(SurfaceHom(dihedral(3), (0, 0)))

    def test_histogram_against_oracle(self, surj):
        raw = [t for t in oracles.s3_surface_homs(2) if len(oracles.closure(t, 3)) == 6]
        oracle_hist = Counter(sum(oracles.is_transposition(p) for p in t) for t in raw)
        hist = transposition_histogram(surj)
        assert set(hist) == {0, 1, 2, 3, 4}
        assert hist == {k: oracle_hist.get(k, 0) for k in range(5)}
        # frozen from the brute force above
        assert hist == {0: 0, 1: 96, 2: 144, 3: 96, 4: 24}
        assert sum(hist.values()) == 360

    def test_empty_histogram(self):
        assert transposition_histogram([]) == {0: 0}
        assert transposition_histogram([], genus=1) == {0: 0, 1: 0, 2: 0}


class TestGuard:
    def test_raises_with_count(self):
        with pytest.raises(EnumerationTooLarge) as info:
            enumerate_homs(3, symmetric(4), limit=10**6)
        assert info.value.count == 24**6 and info.value.limit == 10**6

    def test_negative_genus(self):
        with pytest.raises(ValueError):
            enumerate_homs(-1, S3)
