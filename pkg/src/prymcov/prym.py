"""Prym varieties of triple covers: dimensions, polarization types and the
finite combinatorics attached to the genus-2 étale case.

Only numerical shadows are modelled. A polarization type is the nondecreasing
elementary-divisor chain ``d1 | d2 | ... | dr``; Weierstrass points are bare
labels with an incidence map.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Hashable, Iterable, Mapping

from .genera import RamificationProfile


class InvalidPolarization(ValueError):
    pass


@dataclass(frozen=True)
class PolarizationType:
    ds: tuple[int, ...]

    def __post_init__(self):
        ds = tuple(sorted(int(d) for d in self.ds))
        if any(d <= 0 for d in ds):
            raise InvalidPolarization(f"entries must be positive: {ds}")
        for a, b in zip(ds, ds[1:]):
            if b % a:
                raise InvalidPolarization(f"divisibility chain broken: {a} does not divide {b}")
        object.__setattr__(self, "ds", ds)

    @classmethod
    def parse(cls, text: str) -> PolarizationType:
        body = text.strip().strip("()")
        return cls(tuple(int(x) for x in body.split(",") if x.strip()))

    @property
    def dimension(self) -> int:
        return len(self.ds)

    def is_principal(self) -> bool:
        return all(d == 1 for d in self.ds)

    def scaled(self, k: int) -> PolarizationType:
        return PolarizationType(tuple(k * d for d in self.ds))

    def divided(self, k: int) -> PolarizationType:
        if any(d % k for d in self.ds):
            raise InvalidPolarization(f"{self} is not divisible by {k}")
        return PolarizationType(tuple(d // k for d in self.ds))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.ds)) + ")"


def prym_dimension(g_x: int, r: RamificationProfile) -> int:
    dim = 2 * g_x - 2 + r.s // 2 + r.t
    if dim < 0:
        raise InvalidPolarization(f"dimension would be {dim}")
    return dim


def prym_type(g_x: int, r: RamificationProfile) -> PolarizationType:
    """Type induced on the Prym of a non-cyclic triple cover of a genus-g_x curve."""
    if g_x < 1:
        raise InvalidPolarization("over P^1 the Prym variety is the whole Jacobian")
    ones = g_x - 2 + r.s // 2 + r.t
    if ones < 0:
        raise InvalidPolarization(f"multiplicity of 1 would be {ones}; no non-cyclic cover has this profile")
    return PolarizationType((1,) * ones + (3,) * g_x)


def is_principal_multiple(t: PolarizationType) -> bool:
    return len(set(t.ds)) <= 1


def classify_ppp(g_x: int, r: RamificationProfile) -> str:
    """Whether the induced polarization is a multiple of a principal one.

    Returns ``"not-principal"`` or a case name like ``"genus-2-étale"`` /
    ``"genus-1-(2,0)"`` derived from the inputs.
    """
    if not is_principal_multiple(prym_type(g_x, r)):
        return "not-principal"
    if r.s == 0 and r.t == 0:
        return f"genus-{g_x}-étale"
    return f"genus-{g_x}-({r.s},{r.t})"


def principal_grid(
    max_genus: int = 5, max_s: int = 8, max_t: int = 4
) -> tuple[list[tuple[int, int, int]], list[tuple[int, int, int]]]:
    """Scan ``1 <= g_x <= max_genus``, even ``s <= max_s``, ``t <= max_t``.

    Returns the principal profiles and the profiles for which no non-cyclic
    cover exists (``prym_type`` raises).
    """
    principal, impossible = [], []
    for g_x in range(1, max_genus + 1):
        for s in range(0, max_s + 1, 2):
            for t in range(max_t + 1):
                try:
                    verdict = classify_ppp(g_x, RamificationProfile(s, t))
                except InvalidPolarization:
                    impossible.append((g_x, s, t))
                    continue
                if verdict != "not-principal":
                    principal.append((g_x, s, t))
    return principal, impossible


# POLARIZATION BOOKKEEPING UNDER ISOGENIES
# ---------------------------------------


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % k for k in range(2, int(p**0.5) + 1))


def pullback_type(t: PolarizationType, p: int, eta_in_A: bool) -> PolarizationType:
    """Type on the pullback of A under a cyclic étale cover of prime degree p.

    Every entry scales by p, except the first when the kernel generator
    ``eta`` lies in A.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not t.ds:
        raise InvalidPolarization("empty type")
    if eta_in_A:
        return PolarizationType((t.ds[0],) + tuple(p * d for d in t.ds[1:]))
    return t.scaled(p)


def complement_type(sub: PolarizationType, ambient_dim: int) -> PolarizationType:
    """Type of the complement of a sub-abelian variety in a principally
    polarized one: the non-1 entries carry over, padded with 1s."""
    dim = ambient_dim - sub.dimension
    nontrivial = tuple(d for d in sub.ds if d != 1)
    if dim < len(nontrivial) or dim < 0:
        raise InvalidPolarization(f"complement of dimension {dim} cannot carry {sub}")
    return PolarizationType((1,) * (dim - len(nontrivial)) + nontrivial)


ETA_IN = "eta in P(g)"
ETA_OUT = "eta not in P(g)"


@dataclass(frozen=True)
class EtaChain:
    """The inference chain locating the 3-torsion point defining Z -> D."""

    on_prym_g: PolarizationType
    pulled_back: PolarizationType
    halved: PolarizationType
    complement: PolarizationType


def eta_chain(
    eta_in: bool, pp_dim: int = 3, p: int = 3, double_cover_type: PolarizationType = PolarizationType((2,))
) -> EtaChain:
    """Pull the type (2) of P(g) back along Z -> D, halve it (the restriction of
    the Jacobian polarization to P(p) is twice a principal one), then take the
    complement inside the principally polarized P(p) of dimension ``pp_dim``."""
    pulled = pullback_type(double_cover_type, p, eta_in)
    halved = pulled.divided(2)
    return EtaChain(double_cover_type, pulled, halved, complement_type(halved, pp_dim))


def infer_eta_location(observed_complement_type: PolarizationType, pp_dim: int = 3) -> str:
    """Which side of the dichotomy the observed type on P(p,q) selects."""
    outcomes = {eta_chain(flag, pp_dim).complement: flag for flag in (True, False)}
    if observed_complement_type not in outcomes:
        known = ", ".join(str(t) for t in outcomes)
        raise InvalidPolarization(f"{observed_complement_type} is neither of {known}")
    return ETA_IN if outcomes[observed_complement_type] else ETA_OUT


def prym_pair_dimension(g_z: int, g_y: int, g_d: int, g_x: int) -> int:
    """dim P(p,q) = dim JZ - dim JY - dim P(g), with dim P(g) = g_D - g_X."""
    return g_z - g_y - (g_d - g_x)


# COUNTING GALOIS S3 COVERS BY FACTORIZATION
# ------------------------------------------


def nontrivial_torsion_points(genus: int, n: int) -> int:
    """Nonzero n-torsion points of a Jacobian of the given genus."""
    return n ** (2 * genus) - 1


def prime_order_subgroups(p: int, rank: int) -> int:
    """Subgroups of order p in (Z/p)^rank."""
    return (p**rank - 1) // (p - 1)


def count_galois_covers_via_factorization(base_genus: int = 2) -> int:
    """Connected étale double covers D -> X times order-3 subgroups of E[3]."""
    return nontrivial_torsion_points(base_genus, 2) * prime_order_subgroups(3, 2)


# WEIERSTRASS COMBINATORICS
# -------------------------

Label = Hashable
Partition = tuple[tuple[Label, ...], tuple[Label, ...]]


def prym_map_fiber(weierstrass_labels: Iterable[Label]) -> list[Partition]:
    """Splittings of six Weierstrass points into two unordered triples.

    Labels are sorted; each partition lists the triple holding the least
    label first.
    """
    labels = sorted(set(weierstrass_labels))
    if len(labels) != 6:
        raise ValueError(f"need exactly 6 distinct labels, got {len(labels)}")
    first, rest = labels[0], labels[1:]
    out = []
    for pair in itertools.combinations(rest, 2):
        T = (first,) + pair
        out.append((T, tuple(x for x in labels if x not in T)))
    assert len(out) == comb(6, 3) // 2
    return out


@dataclass(frozen=True)
class WeierstrassIncidence:
    """Where each Weierstrass point of Y (10 of them) lands among those of X (6)."""

    assignment: Mapping[Label, Label]

    def __post_init__(self):
        object.__setattr__(self, "assignment", dict(self.assignment))
        if len(self.assignment) != 10:
            raise ValueError("Y has 10 Weierstrass points")
        sizes = sorted((len(f) for f in self.fibers().values()), reverse=True)
        if sizes != [3, 3, 1, 1, 1, 1]:
            raise ValueError(f"fiber sizes {sizes} differ from (3,3,1,1,1,1)")

    def fibers(self) -> dict[Label, tuple[Label, ...]]:
        out: dict[Label, list[Label]] = {}
        for q, p in self.assignment.items():
            out.setdefault(p, []).append(q)
        return {p: tuple(sorted(qs)) for p, qs in out.items()}

    def relabel(self, q_map: Mapping[Label, Label], p_map: Mapping[Label, Label]) -> WeierstrassIncidence:
        return WeierstrassIncidence({q_map[q]: p_map[p] for q, p in self.assignment.items()})


def canonical_incidence() -> WeierstrassIncidence:
    """q1,q2,q3 over p1; q4,q5,q6 over p2; q(6+i) over p(2+i)."""
    a = {f"q{i}": "p1" for i in (1, 2, 3)}
    a |= {f"q{i}": "p2" for i in (4, 5, 6)}
    a |= {f"q{6 + i}": f"p{2 + i}" for i in range(1, 5)}
    return WeierstrassIncidence(a)


def xi_weierstrass_points(incidence: WeierstrassIncidence) -> set[frozenset[Label]]:
    """Pairs of Weierstrass points of Y lying in a common full fibre."""
    return {
        frozenset(pair)
        for qs in incidence.fibers().values()
        if len(qs) == 3
        for pair in itertools.combinations(qs, 2)
    }


def abel_prym_collisions(incidence: WeierstrassIncidence) -> set[Label]:
    """Weierstrass points alone in their fibre; these share one Abel-Prym image."""
    return {qs[0] for qs in incidence.fibers().values() if len(qs) == 1}


def format_partition(part: Partition) -> str:
    return "{" + ",".join(map(str, part[0])) + "}|{" + ",".join(map(str, part[1])) + "}"


def default_labels() -> list[str]:
    return [f"w{i}" for i in range(1, 7)]
