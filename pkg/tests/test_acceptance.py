"""Exit criteria for the build, one recorded pass/fail line each."""

import itertools
import random
import time

import pytest

import triple_covers
from prymcov import genera
from prymcov.covers import (
    CoveringRep,
    discriminant_rep,
    factorization_witness,
    fiber_product_rep,
    galois_closure,
    is_cyclic_triple_cover,
    monodromy_group,
)
from prymcov.genera import (
    D6,
    RamificationProfile,
    find_tower_monodromy,
    genus_closure,
    genus_discriminant,
    genus_from_monodromy,
    genus_triple_cover,
    ramification_profile,
    tower_accola_residuals,
    tower_report,
)
from prymcov.homenum import classes_up_to_conjugacy, enumerate_homs, is_surjective, transposition_histogram
from prymcov.permgroup import Permutation, are_isomorphic, dihedral, generated_subgroup, symmetric
from prymcov.prym import (
    ETA_IN,
    PolarizationType,
    count_galois_covers_via_factorization,
    default_labels,
    infer_eta_location,
    principal_grid,
    prym_map_fiber,
    pullback_type,
)

pytestmark = pytest.mark.acceptance

S3 = symmetric(3)


def s3_genus2_surjective():
    return [h for h in enumerate_homs(2, S3) if is_surjective(h)]


def test_hom_count(criterion):
    start = time.perf_counter()
    homs = enumerate_homs(2, S3)
    surj = [h for h in homs if is_surjective(h)]
    classes = classes_up_to_conjugacy(surj)
    elapsed = time.perf_counter() - start
    ok = len(homs) == 486 and len(surj) == 360 and len(classes) == 60 and elapsed < 1.0
    criterion(1, "surjective homs pi1(genus 2) -> S3", ok,
              f"{len(surj)} surjective, {len(classes)} classes, {elapsed:.3f}s")


def test_case_histogram(criterion):
    hist = transposition_histogram(s3_genus2_surjective())
    observed = {k: hist[k] for k in range(1, 5)}
    expected = {1: 96, 2: 108, 3: 96, 4: 60}
    criterion(2, "transposition census of the 360 surjective homs", observed == expected,
              f"computed {observed}, expected {expected}")


def test_tower_genera(criterion):
    genera._cached_coset_action.cache_clear()
    start = time.perf_counter()
    tuples = find_tower_monodromy()
    elapsed = time.perf_counter() - start
    named = tower_report(tuples[0].branches).named()
    expected = {"Z": 7, "Y": 4, "D": 3, "B": 2, "A": 1, "E": 1, "C": 0, "X": 2}
    ok = bool(tuples) and named == expected and elapsed < 5.0
    criterion(3, "D6 tower genera from coset actions", ok,
              f"{len(tuples)} tuples, search {elapsed:.2f}s, genera {named}")


def test_accola(criterion):
    residuals = tower_accola_residuals(find_tower_monodromy()[0].branches)
    criterion(4, "Accola identities on D6 and <psi^3, tau>", residuals == {"D6": 0, "C": 0}, str(residuals))


def test_hurwitz_agreement(criterion):
    rng = random.Random(20261014)
    samples = triple_covers.draw_many(rng, 60, max_genus=2, max_s=4, max_t=2)
    checked = bad = closure_checked = 0
    for g, s, t, c in samples:
        r = ramification_profile(c)
        checked += 1
        if r != RamificationProfile(s, t) or genus_from_monodromy(c) != genus_triple_cover(g, r):
            bad += 1
            continue
        if is_cyclic_triple_cover(c):
            continue
        closure_checked += 1
        if genus_from_monodromy(discriminant_rep(c)) != genus_discriminant(g, r):
            bad += 1
        elif genus_from_monodromy(galois_closure(c).action) != genus_closure(g, r):
            bad += 1
    ok = checked >= 50 and bad == 0
    criterion(5, "Riemann-Hurwitz on monodromy vs closed formulas", ok,
              f"{checked} covers, {closure_checked} non-cyclic, {bad} disagreements")


def test_polarization_classification(criterion):
    principal, _ = principal_grid(max_genus=5, max_s=8, max_t=4)
    ok = set(principal) == {(2, 0, 0), (1, 2, 0), (1, 0, 1)}
    criterion(6, "principal polarization verdicts on the grid", ok, str(principal))


def test_prym_fiber(criterion):
    labels = default_labels()
    base = prym_map_fiber(labels)
    base_sets = {frozenset([frozenset(a), frozenset(b)]) for a, b in base}
    invariant = True
    for perm in itertools.permutations(labels):
        rename = dict(zip(labels, perm))
        moved = {frozenset([frozenset(rename[x] for x in a), frozenset(rename[x] for x in b)]) for a, b in base}
        invariant &= prym_map_fiber(perm) == base and moved == base_sets
    ok = len(base) == 10 and invariant
    criterion(7, "Prym map fibre has 10 partitions, relabelling invariant", ok, f"{len(base)} partitions, 720 relabellings")


def test_eta_consistency(criterion):
    two = PolarizationType((2,))
    dichotomy = (str(pullback_type(two, 3, False)), str(pullback_type(two, 3, True))) == ("(6)", "(2)")
    eta = infer_eta_location(PolarizationType((1, 1)))
    count = count_galois_covers_via_factorization()
    classes = len(classes_up_to_conjugacy(s3_genus2_surjective()))
    ok = dichotomy and eta == ETA_IN and count == 60 == classes
    criterion(8, "pullback dichotomy, eta location, 15*4 = hom classes", ok, f"{eta}; {count} vs {classes}")


def test_group_facts(criterion):
    s3_iso = are_isomorphic(dihedral(3), S3)
    G = D6
    involutions = [a for a in G.elements() if G.element_order(a) == 2]
    triples = good = 0
    for iota, sigma, tau in itertools.product(G.elements(), repeat=3):
        if not (G.element_order(iota) == 2 and G.element_order(tau) == 2 and G.element_order(sigma) == 3):
            continue
        if G.mul(iota, tau) != G.mul(tau, iota):
            continue
        if G.conj(tau, sigma) != G.inv(sigma) or G.conj(iota, sigma) != G.inv(sigma):
            continue
        if generated_subgroup(G, [iota, sigma, tau]).order != G.order:
            continue
        triples += 1
        psi = G.product([iota, sigma, tau])
        good += G.element_order(psi) == 6 and G.mul(psi, psi) == sigma
    ok = s3_iso and len(involutions) == 7 and triples > 0 and good == triples
    criterion(9, "D3 = S3, seven involutions in D6, psi = iota sigma tau", ok,
              f"{len(involutions)} involutions, {good}/{triples} triples")


def test_factorization_lemma(criterion):
    classes = classes_up_to_conjugacy(s3_genus2_surjective())
    both = 0
    for c in classes:
        f = CoveringRep(2, 3, tuple(S3.perm(a) for a in c.representative.images))
        g = discriminant_rep(f)
        iso = are_isomorphic(monodromy_group(fiber_product_rep(f, g)).group, monodromy_group(f).group)
        both += iso and factorization_witness(f, g) is not None
    f = CoveringRep(2, 3, tuple(S3.perm(a) for a in classes[0].representative.images))
    swap, ident = Permutation((1, 0)), Permutation((0, 1))
    g_bad = CoveringRep(2, 2, (swap, ident, ident, ident))
    bad_iso = are_isomorphic(monodromy_group(fiber_product_rep(f, g_bad)).group, monodromy_group(f).group)
    bad_witness = factorization_witness(f, g_bad) is not None
    ok = both == len(classes) == 60 and not bad_iso and not bad_witness
    criterion(10, "image isomorphism iff factorization", ok,
              f"{both}/{len(classes)} classes; counterexample iso={bad_iso}, witness={bad_witness}")
