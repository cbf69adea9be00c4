"""Coverings of curves encoded by their permutation monodromy.

A covering of degree d of a genus-g base, branched over n points, is given
by permutations of the fibre ``0..d-1``: handle images ``A1, B1, ..., Ag, Bg``
and local monodromies ``s1..sn`` around the branch points, subject to

    [A1, B1] ... [Ag, Bg] * s1 ... sn = id.

The total space is connected iff the generated group is transitive.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .permgroup import (
    FiniteGroup,
    Permutation,
    compose,
    compose_all,
    conjugating_permutation,
    cycle_type,
    generated_subgroup,
    orbits,
    regular_permutations,
    sign,
)


class ReducibleCoveringError(ValueError):
    """The monodromy is intransitive, so the total space is disconnected."""


class BaseMismatch(ValueError):
    pass


@dataclass(frozen=True)
class CoveringRep:
    genus: int
    degree: int
    handles: tuple[Permutation, ...] = ()
    branches: tuple[Permutation, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "handles", tuple(self.handles))
        object.__setattr__(self, "branches", tuple(self.branches))
        if len(self.handles) != 2 * self.genus:
            raise ValueError(f"expected {2 * self.genus} handle permutations, got {len(self.handles)}")
        for p in self.handles + self.branches:
            if p.degree != self.degree:
                raise ValueError(f"permutation {p} has degree {p.degree}, expected {self.degree}")
        if not self.relation().is_identity():
            raise ValueError("monodromy violates the global relation")

    def relation(self) -> Permutation:
        d = self.degree
        x = Permutation.identity(d)
        for i in range(self.genus):
            a, b = self.handles[2 * i], self.handles[2 * i + 1]
            x = compose(x, compose(compose(a, b), compose(a.inverse(), b.inverse())))
        return compose(x, compose_all(self.branches, d))

    @property
    def generators(self) -> tuple[Permutation, ...]:
        return self.handles + self.branches

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def components(self) -> list[tuple[int, ...]]:
        return orbits(self.generators, self.degree)

    def is_etale(self) -> bool:
        return all(b.is_identity() for b in self.branches)

    def map(self, f) -> CoveringRep:
        """Apply ``f`` to every permutation (f should be a homomorphism)."""
        handles = tuple(f(p) for p in self.handles)
        branches = tuple(f(p) for p in self.branches)
        degree = (handles + branches)[0].degree if handles + branches else self.degree
        return CoveringRep(self.genus, degree, handles, branches)

    def restrict(self, orbit: Sequence[int]) -> CoveringRep:
        """The component of the total space over one orbit, relabelled 0..k-1."""
        orbit = sorted(orbit)
        index = {x: i for i, x in enumerate(orbit)}

        def r(p: Permutation) -> Permutation:
            images = [index.get(p(x)) for x in orbit]
            if None in images:
                raise ValueError("not an orbit")
            return Permutation(tuple(images))

        return CoveringRep(self.genus, len(orbit), tuple(map(r, self.handles)), tuple(map(r, self.branches)))

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "degree": self.degree,
            "handles": [list(p.mapping) for p in self.handles],
            "branches": [list(p.mapping) for p in self.branches],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> CoveringRep:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            int(data["genus"]),
            int(data["degree"]),
            tuple(Permutation(tuple(p)) for p in data.get("handles", [])),
            tuple(Permutation(tuple(p)) for p in data.get("branches", [])),
        )


@dataclass(frozen=True)
class MonodromyGroup:
    group: FiniteGroup
    transitive: bool

    @property
    def order(self) -> int:
        return self.group.order


def monodromy_group(c: CoveringRep) -> MonodromyGroup:
    G = FiniteGroup.from_permutations(c.generators, c.degree, name="M(f)")
    return MonodromyGroup(G, c.is_connected())


def _require_connected(c: CoveringRep) -> None:
    if not c.is_connected():
        raise ReducibleCoveringError(f"intransitive monodromy, components {c.components()}")


def is_galois(c: CoveringRep) -> bool:
    _require_connected(c)
    return monodromy_group(c).order == c.degree


def is_cyclic_triple_cover(c: CoveringRep) -> bool:
    """For a connected degree-3 cover: is the monodromy inside A3."""
    if c.degree != 3:
        raise ValueError("only defined for degree 3")
    _require_connected(c)
    return all(sign(p) == 1 for p in c.generators)


_SWAP = Permutation((1, 0))
_ID2 = Permutation((0, 1))


def sign_permutation(p: Permutation) -> Permutation:
    return _ID2 if sign(p) == 1 else _SWAP


def discriminant_rep(c: CoveringRep) -> CoveringRep:
    """The double cover given by ``sign o rho``."""
    return c.map(sign_permutation)


def product_permutation(p: Permutation, q: Permutation) -> Permutation:
    """``p x q`` on pairs, pair ``(i, j)`` being index ``i*deg(q) + j``."""
    m = q.degree
    return Permutation(tuple(p(i) * m + q(j) for i in range(p.degree) for j in range(m)))


def fiber_product_rep(c1: CoveringRep, c2: CoveringRep) -> CoveringRep:
    if c1.genus != c2.genus or len(c1.branches) != len(c2.branches):
        raise BaseMismatch("coverings must share a base and branch-point list")
    return CoveringRep(
        c1.genus,
        c1.degree * c2.degree,
        tuple(product_permutation(p, q) for p, q in zip(c1.handles, c2.handles)),
        tuple(product_permutation(p, q) for p, q in zip(c1.branches, c2.branches)),
    )


def equivalent_reps(c1: CoveringRep, c2: CoveringRep) -> Permutation | None:
    """A relabelling of the fibre conjugating c1 into c2 (both connected), or None."""
    if c1.degree != c2.degree or len(c1.generators) != len(c2.generators):
        return None
    if not c1.generators:
        return Permutation.identity(c1.degree) if c1.degree == 1 else None
    return conjugating_permutation(c1.generators, c2.generators)


def factorization_witness(cf: CoveringRep, cg: CoveringRep) -> dict[Permutation, Permutation] | None:
    """A homomorphism ``alpha: Im rho_f -> Im rho_g`` with ``rho_g = alpha o rho_f``.

    Built by walking words in the generators; returns None when the
    prescribed assignment is not well defined.
    """
    if len(cf.generators) != len(cg.generators):
        raise BaseMismatch("coverings must share a base")
    alpha = {Permutation.identity(cf.degree): Permutation.identity(cg.degree)}
    frontier = list(alpha)
    pairs = list(zip(cf.generators, cg.generators))
    while frontier:
        new = []
        for x in frontier:
            for a, b in pairs:
                y, z = compose(x, a), compose(alpha[x], b)
                if y not in alpha:
                    alpha[y] = z
                    new.append(y)
                elif alpha[y] != z:
                    return None
        frontier = new
    for x in alpha:
        for y in alpha:
            if alpha[compose(x, y)] != compose(alpha[x], alpha[y]):
                return None
    return alpha


@dataclass(frozen=True)
class GaloisClosureRep:
    """A Galois cover of a base, as a group plus element-valued monodromy.

    ``handles`` and ``branches`` are element ids of ``group``; the cover
    itself is the left-regular action, of degree ``|group|``.
    """

    group: FiniteGroup
    base_genus: int
    handles: tuple[int, ...] = ()
    branches: tuple[int, ...] = ()

    def __post_init__(self):
        G = self.group
        if len(self.handles) != 2 * self.base_genus:
            raise ValueError("wrong number of handle elements")
        if any(not 0 <= a < G.order for a in self.handles + self.branches):
            raise ValueError(f"element ids must lie in 0..{G.order - 1}")
        x = G.identity
        for i in range(self.base_genus):
            x = G.mul(x, G.commutator(self.handles[2 * i], self.handles[2 * i + 1]))
        if G.mul(x, G.product(self.branches)) != G.identity:
            raise ValueError("element monodromy violates the global relation")

    @property
    def degree(self) -> int:
        return self.group.order

    @cached_property
    def action(self) -> CoveringRep:
        reg = regular_permutations(self.group)
        return CoveringRep(
            self.base_genus,
            self.group.order,
            tuple(reg[a] for a in self.handles),
            tuple(reg[a] for a in self.branches),
        )

    def generates(self) -> bool:
        return generated_subgroup(self.group, self.handles + self.branches).order == self.group.order


def galois_closure(c: CoveringRep) -> GaloisClosureRep:
    """Galois closure via the left-regular action of the monodromy group."""
    _require_connected(c)
    G = monodromy_group(c).group
    return GaloisClosureRep(
        G,
        c.genus,
        tuple(G.index_of(p) for p in c.handles),
        tuple(G.index_of(p) for p in c.branches),
    )


def cycle_types(c: CoveringRep) -> dict[str, list[list[int]]]:
    return {
        "handles": [list(cycle_type(p)) for p in c.handles],
        "branches": [list(cycle_type(p)) for p in c.branches],
    }
