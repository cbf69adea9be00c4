"""Reproducible claim checks: every finite quantity recomputed from scratch
and compared with its expected value."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Callable

from . import covers, genera, homenum, prym
from .genera import RamificationProfile
from .permgroup import symmetric


@dataclass(frozen=True)
class LedgerEntry:
    claim: str
    description: str
    computed: Any
    expected: Any

    @property
    def status(self) -> str:
        return "match" if self.computed == self.expected else "mismatch"

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "description": self.description,
            "computed": self.computed,
            "expected": self.expected,
            "status": self.status,
        }


def _s3_genus2():
    S3 = symmetric(3)
    surj = homenum.surjective_homs(2, S3)
    return S3, surj


def _hom_count():
    _, surj = _s3_genus2()
    return len(surj)


def _hom_classes():
    _, surj = _s3_genus2()
    return len(homenum.classes_up_to_conjugacy(surj))


def _hom_histogram():
    _, surj = _s3_genus2()
    hist = homenum.transposition_histogram(surj)
    return {str(k): hist[k] for k in range(1, 5)}


def _etale_genera():
    S3, surj = _s3_genus2()
    h = homenum.classes_up_to_conjugacy(surj)[0].representative
    c = covers.CoveringRep(2, 3, tuple(S3.perm(a) for a in h.images))
    y = genera.genus_from_monodromy(c)
    d = genera.genus_from_monodromy(covers.discriminant_rep(c))
    z = genera.genus_from_monodromy(covers.galois_closure(c).action)
    return {"Y": y, "D": d, "Z": z}


@lru_cache(maxsize=1)
def _tower_branches() -> tuple[int, ...]:
    return genera.find_tower_monodromy()[0].branches


def _tower_genera():
    return genera.tower_report(_tower_branches()).named()


def _accola():
    return genera.tower_accola_residuals(_tower_branches())


def _principal_cases():
    principal, _ = prym.principal_grid()
    return [list(x) for x in principal]


def _prym_type_genus2():
    return str(prym.prym_type(2, RamificationProfile(0, 0)))


def _pullback_dichotomy():
    two = prym.PolarizationType((2,))
    return {
        "eta not in": str(prym.pullback_type(two, 3, False)),
        "eta in": str(prym.pullback_type(two, 3, True)),
    }


def _eta():
    return prym.infer_eta_location(prym.PolarizationType((1, 1)))


def _pair_dimension():
    g = genera.tower_report(_tower_branches()).genera
    return prym.prym_pair_dimension(g["Z"], g["Y"], g["D"], g["X"])


def _factorization():
    return {
        "double covers": prym.nontrivial_torsion_points(2, 2),
        "order-3 subgroups": prym.prime_order_subgroups(3, 2),
        "product": prym.count_galois_covers_via_factorization(),
        "hom classes": _hom_classes(),
    }


CLAIMS: list[tuple[str, str, Callable[[], Any], Any]] = [
    ("hom-count", "surjective homs pi1(genus 2) -> S3", _hom_count, 360),
    ("hom-classes", "classes of surjective homs up to conjugation", _hom_classes, 60),
    (
        "hom-histogram",
        "surjective homs by number of transposition images",
        _hom_histogram,
        {"1": 96, "2": 108, "3": 96, "4": 60},
    ),
    ("etale-genera", "genera of Y, D, Z for an etale non-cyclic triple cover of genus 2", _etale_genera, {"Y": 4, "D": 3, "Z": 7}),
    (
        "tower-genera",
        "genera of the D6 quotients from coset actions",
        _tower_genera,
        {"Z": 7, "Y": 4, "D": 3, "B": 2, "A": 1, "E": 1, "C": 0, "X": 2},
    ),
    ("tower-accola", "Accola residuals for D6 and <psi^3, tau>", _accola, {"D6": 0, "C": 0}),
    ("prym-type", "polarization type for genus 2, s = t = 0", _prym_type_genus2, "(3,3)"),
    ("prym-principal", "principal profiles (g_X, s, t) on the grid", _principal_cases, [[1, 0, 1], [1, 2, 0], [2, 0, 0]]),
    ("prym-fiber", "size of the Prym map fibre", lambda: len(prym.prym_map_fiber(prym.default_labels())), 10),
    (
        "prym-collisions",
        "Weierstrass points with a common Abel-Prym image",
        lambda: len(prym.abel_prym_collisions(prym.canonical_incidence())),
        4,
    ),
    (
        "prym-xi-weierstrass",
        "Weierstrass points of the theta curve",
        lambda: len(prym.xi_weierstrass_points(prym.canonical_incidence())),
        6,
    ),
    ("pullback-dichotomy", "type of q*P(g) by location of eta", _pullback_dichotomy, {"eta not in": "(6)", "eta in": "(2)"}),
    ("eta-location", "location of eta given type (1,1) on P(p,q)", _eta, prym.ETA_IN),
    ("pair-dimension", "dim P(p,q)", _pair_dimension, 2),
    (
        "factorization-count",
        "Galois S3 covers counted as double covers times 3-torsion subgroups",
        _factorization,
        {"double covers": 15, "order-3 subgroups": 4, "product": 60, "hom classes": 60},
    ),
]


def run_ledger(only: str | None = None) -> list[LedgerEntry]:
    out = []
    for claim, desc, fn, expected in CLAIMS:
        if only and not claim.startswith(only):
            continue
        out.append(LedgerEntry(claim, desc, fn(), expected))
    return out
