"""Genera of coverings and of quotients of a Galois cover.

Two independent routes are provided: closed-form formulas for triple
covers in terms of the ramification profile ``(s, t)``, and Riemann-Hurwitz
evaluated on monodromy,

    2 - 2 g_Y = d (2 - 2 g_X) - sum_b (d - #cycles(s_b)).

Quotients ``Z/H`` of a Galois cover ``Z -> base`` are handled by pushing the
element monodromy through the coset action on ``G/H``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .covers import CoveringRep, GaloisClosureRep, ReducibleCoveringError
from .permgroup import (
    CosetAction,
    FiniteGroup,
    Subgroup,
    coset_action,
    dihedral,
    dihedral_element,
    generated_subgroup,
    subgroup_lattice,
    trivial,
    whole,
)


class InconsistentGenusError(ValueError):
    """A genus formula produced a negative or non-integral value."""


@dataclass(frozen=True)
class RamificationProfile:
    """``s`` simple and ``t`` total ramification points of a triple cover."""

    s: int = 0
    t: int = 0

    def __post_init__(self):
        if self.s < 0 or self.t < 0:
            raise ValueError("s and t must be nonnegative")
        if self.s % 2:
            raise InconsistentGenusError(f"s = {self.s} is odd; s/2 must be integral")


def _checked(value: int, what: str) -> int:
    if value < 0:
        raise InconsistentGenusError(f"{what} would be {value}: inconsistent profile")
    return value


def genus_triple_cover(g_x: int, r: RamificationProfile) -> int:
    return _checked(3 * g_x - 2 + r.s // 2 + r.t, "genus of the triple cover")


def genus_discriminant(g_x: int, r: RamificationProfile) -> int:
    return _checked(2 * g_x - 1 + r.s // 2, "genus of the discriminant curve")


def genus_closure(g_x: int, r: RamificationProfile) -> int:
    return _checked(6 * g_x - 5 + 3 * r.s // 2 + 2 * r.t, "genus of the Galois closure")


def euler_characteristic(c: CoveringRep) -> int:
    """``2 - 2g`` of the total space (connected or not)."""
    d = c.degree
    return d * (2 - 2 * c.genus) - sum(d - b.num_cycles() for b in c.branches)


def genus_from_monodromy(c: CoveringRep) -> int:
    if not c.is_connected():
        raise ReducibleCoveringError("genus_from_monodromy needs a connected cover")
    chi = euler_characteristic(c)
    if chi % 2:
        raise InconsistentGenusError(f"odd total branching (chi = {chi}); invalid monodromy")
    return _checked((2 - chi) // 2, "genus from monodromy")


def ramification_profile(c: CoveringRep) -> RamificationProfile:
    """``(s, t)`` of a degree-3 cover read off the local monodromies."""
    if c.degree != 3:
        raise ValueError("profile is only defined for triple covers")
    s = sum(1 for b in c.branches if b.num_cycles() == 2)
    t = sum(1 for b in c.branches if b.num_cycles() == 1)
    return RamificationProfile(s, t)


@lru_cache(maxsize=None)
def _cached_coset_action(G: FiniteGroup, H: Subgroup) -> CosetAction:
    return coset_action(G, H)


def quotient_rep(m: GaloisClosureRep, H: Subgroup) -> CoveringRep:
    """The cover ``Z/H -> base`` as a permutation representation of degree [G:H]."""
    act = _cached_coset_action(m.group, H)
    return CoveringRep(
        m.base_genus,
        act.degree,
        tuple(act(a) for a in m.handles),
        tuple(act(a) for a in m.branches),
    )


def quotient_genus(m: GaloisClosureRep, H: Subgroup) -> int:
    return genus_from_monodromy(quotient_rep(m, H))


# ACCOLA
# ------


def accola_check(p: int, n0: int, p0: int, parts: Sequence[tuple[int, int]]) -> int:
    """Residual ``(s-1) p + n0 p0 - sum n_i p_i`` for a partition with s parts.

    ``p`` is the genus of the curve, ``(n0, p0)`` the order of the acting
    group and the genus of the full quotient, ``parts`` the ``(n_i, p_i)``.
    Zero means the identity holds.
    """
    if not parts:
        raise ValueError("a partition needs at least one part")
    s = len(parts)
    return (s - 1) * p + n0 * p0 - sum(n * g for n, g in parts)


def accola_solve(p: int, n0: int, p0: int | None, parts: Sequence[tuple[int, int | None]]) -> int:
    """Solve the identity for the one genus given as None.

    The unknown may be ``p0`` or the genus of a single part.
    """
    unknowns = [p0 is None] + [g is None for _, g in parts]
    if sum(unknowns) != 1:
        raise ValueError("exactly one genus must be unknown")
    s = len(parts)
    known = sum(n * g for n, g in parts if g is not None)
    if p0 is None:
        num, den = known - (s - 1) * p, n0
    else:
        (n_unknown,) = [n for n, g in parts if g is None]
        num, den = (s - 1) * p + n0 * p0 - known, n_unknown
    if num % den or num < 0:
        raise InconsistentGenusError(f"no nonnegative integral solution ({num}/{den})")
    return num // den


def verify_partition(G: FiniteGroup | Subgroup, parts: Sequence[Subgroup]) -> bool:
    """Do the subgroups cover G with pairwise trivial intersections.

    ``G`` may itself be a subgroup, in which case its members are covered.
    """
    if isinstance(G, Subgroup):
        elements, e = set(G.members), G.parent.identity
    else:
        elements, e = set(G.elements()), G.identity
    covered = set()
    for H in parts:
        covered |= H.members
    if covered != elements:
        return False
    return all((H.members & K.members) == {e} for H, K in itertools.combinations(parts, 2))


def accola_residual(m: GaloisClosureRep, G0: Subgroup, parts: Sequence[Subgroup]) -> int:
    """Accola residual with every genus computed by ``quotient_genus``."""
    if not verify_partition(G0, parts):
        raise ValueError("parts do not partition G0")
    p = quotient_genus(m, trivial(m.group))
    p0 = quotient_genus(m, G0)
    return accola_check(p, G0.order, p0, [(H.order, quotient_genus(m, H)) for H in parts])


# THE D6 TOWER
# ------------

D6 = dihedral(6)


def d6(k: int, e: int = 0) -> int:
    """Id of ``psi^k tau^e`` in D6."""
    return dihedral_element(6, k, e)


def d6_subgroup(*gens: tuple[int, int]) -> Subgroup:
    """``<psi^k tau^e, ...>`` from (k, e) pairs."""
    return generated_subgroup(D6, [d6(k, e) for k, e in gens])


# Subgroup for each curve of the tower over the bottom P^1 = Z/D6.
# "P1'" is the second rational quotient, Z/<psi^3 tau, psi^2>.
TOWER_SUBGROUPS: dict[str, tuple[tuple[int, int], ...]] = {
    "Z": (),
    "Y": ((0, 1),),
    "B": ((3, 1),),
    "A": ((3, 0),),
    "D": ((2, 0),),
    "C": ((3, 0), (0, 1)),
    "X": ((2, 0), (0, 1)),
    "P1'": ((3, 1), (2, 0)),
    "E": ((1, 0),),
    "P1": ((1, 0), (0, 1)),
}

NAMED_CURVES = ("Z", "Y", "D", "B", "A", "E", "C", "X")


def tower_subgroup(name: str) -> Subgroup:
    return d6_subgroup(*TOWER_SUBGROUPS[name])


@dataclass(frozen=True)
class TowerTuple:
    branches: tuple[int, ...]
    central_count: int

    def labels(self) -> list[str]:
        return [D6.label(a) for a in self.branches]


@dataclass(frozen=True)
class TowerReport:
    branches: tuple[int, ...]
    genera: dict[str, int] = field(hash=False)

    def named(self) -> dict[str, int]:
        return {k: self.genera[k] for k in NAMED_CURVES}

    def to_json(self) -> dict:
        return {
            "monodromy": [D6.label(a) for a in self.branches],
            "monodromy_ids": list(self.branches),
            "genera": dict(self.genera),
        }


def tower_cover(branches: Sequence[int]) -> GaloisClosureRep:
    return GaloisClosureRep(D6, 0, (), tuple(branches))


def find_tower_monodromy(n_branch: int = 6) -> list[TowerTuple]:
    """Every ordered tuple of D6 involutions that can realise the tower.

    Conditions: product is the identity, the entries generate D6, and the
    quotient by ``<psi^2, tau>`` (the base X) has genus 2. Output is in
    lexicographic order of element ids.
    """
    G = D6
    e = G.identity
    involutions = [a for a in G.elements() if a != e and G.mul(a, a) == e]
    center = d6(3)
    X = tower_subgroup("X")
    out = []
    for tup in itertools.product(involutions, repeat=n_branch):
        if G.product(tup) != e:
            continue
        if generated_subgroup(G, tup).order != G.order:
            continue
        if quotient_genus(tower_cover(tup), X) != 2:
            continue
        out.append(TowerTuple(tup, sum(1 for a in tup if a == center)))
    if not out:
        raise RuntimeError("no tower monodromy found")
    return out


def tower_report(branches: Sequence[int] | None = None) -> TowerReport:
    """Genera of every curve in the tower, from coset actions."""
    if branches is None:
        branches = find_tower_monodromy()[0].branches
    m = tower_cover(branches)
    genera = {name: quotient_genus(m, tower_subgroup(name)) for name in TOWER_SUBGROUPS}
    return TowerReport(tuple(branches), genera)


def tower_accola_residuals(branches: Sequence[int]) -> dict[str, int]:
    """Both Accola identities used for the tower, genera from coset actions.

    ``"D6"``: D6 is the union of <psi>, the three conjugates of <tau> and the
    three conjugates of <psi^3 tau>. ``"C"``: <psi^3, tau> is the union of
    <psi^3>, <psi^3 tau>, <tau>.
    """
    m = tower_cover(branches)
    full = whole(D6)
    psi = d6(1)
    tau_part = d6_subgroup((0, 1))
    refl_part = d6_subgroup((3, 1))
    parts_d6 = [d6_subgroup((1, 0))]
    parts_d6 += [tau_part.conjugate(D6.power(psi, k)) for k in range(3)]
    parts_d6 += [refl_part.conjugate(D6.power(psi, k)) for k in range(3)]
    parts_c = [d6_subgroup((3, 0)), d6_subgroup((3, 1)), d6_subgroup((0, 1))]
    return {
        "D6": accola_residual(m, full, parts_d6),
        "C": accola_residual(m, tower_subgroup("C"), parts_c),
    }


@dataclass(frozen=True)
class TowerGraph:
    vertices: tuple[tuple[str, int], ...]
    # (upper, lower, degree): upper = Z/H maps onto lower = Z/K with H < K
    edges: tuple[tuple[str, str, int], ...]


def tower_graph(branches: Sequence[int] | None = None) -> TowerGraph:
    """Quotient diagram of the tower: one vertex per conjugacy class of subgroups.

    Edges are covering relations in the poset of subgroup classes.
    """
    report = tower_report(branches)
    lattice = subgroup_lattice(D6)
    name_of = {}
    for name in TOWER_SUBGROUPS:
        name_of[lattice.class_of(tower_subgroup(name))] = name
    if len(name_of) != len(lattice.classes):
        raise RuntimeError("tower names do not cover every subgroup class")
    order = [name for name in TOWER_SUBGROUPS]
    vertices = tuple((name, report.genera[name]) for name in order)
    edges = []
    for i, j in lattice.class_hasse_edges():
        lo, hi = lattice.classes[i][0], lattice.classes[j][0]
        edges.append((name_of[i], name_of[j], hi.order // lo.order))
    edges.sort(key=lambda e: (order.index(e[0]), order.index(e[1])))
    return TowerGraph(vertices, tuple(edges))


def tower_dot(graph: TowerGraph) -> str:
    lines = ["digraph tower {", "\trankdir=TB;"]
    for name, g in graph.vertices:
        lines.append(f'\t"{name}" [label="{name} (genus {g})"];')
    for upper, lower, deg in graph.edges:
        lines.append(f'\t"{upper}" -> "{lower}" [label="{deg}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
