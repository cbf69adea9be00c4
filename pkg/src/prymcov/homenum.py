"""Homomorphisms from closed surface groups into finite groups.

The fundamental group of a closed genus-g surface has generators
``a1, b1, ..., ag, bg`` and the single relation ``prod [ai, bi] = 1`` with
``[a, b] = a b a^-1 b^-1``. A homomorphism is its tuple of images
``(A1, B1, ..., Ag, Bg)``; enumeration is plain exhaustion.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .permgroup import FiniteGroup, cycle_type, generated_subgroup

MAX_TUPLES = 10**8


class EnumerationTooLarge(RuntimeError):
    def __init__(self, count: int, limit: int):
        super().__init__(f"refusing to enumerate {count} tuples (limit {limit})")
        self.count = count
        self.limit = limit


@dataclass(frozen=True)
class SurfaceHom:
    target: FiniteGroup = field(compare=False, hash=False, repr=False)
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) % 2:
            raise ValueError("images must come in (A_i, B_i) pairs")

    @property
    def genus(self) -> int:
        return len(self.images) // 2

    def pairs(self) -> list[tuple[int, int]]:
        return [(self.images[2 * i], self.images[2 * i + 1]) for i in range(self.genus)]

    def relation_holds(self) -> bool:
        return surface_relation(self.target, self.images) == self.target.identity

    def conjugate(self, g: int) -> SurfaceHom:
        G = self.target
        return SurfaceHom(G, tuple(G.conj(g, a) for a in self.images))

    def labels(self) -> list[str]:
        return [self.target.label(a) for a in self.images]


def surface_relation(G: FiniteGroup, images: Sequence[int]) -> int:
    """Evaluate ``prod_i [A_i, B_i]`` in G."""
    x = G.identity
    for i in range(0, len(images), 2):
        x = G.mul(x, G.commutator(images[i], images[i + 1]))
    return x


def enumerate_homs(genus: int, G: FiniteGroup, limit: int = MAX_TUPLES) -> list[SurfaceHom]:
    """All homomorphisms, in lexicographic order of the image tuple."""
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    count = G.order ** (2 * genus)
    if count > limit:
        raise EnumerationTooLarge(count, limit)
    e = G.identity
    out = []
    for images in itertools.product(G.elements(), repeat=2 * genus):
        if surface_relation(G, images) == e:
            out.append(SurfaceHom(G, images))
    return out


def is_surjective(h: SurfaceHom) -> bool:
    return generated_subgroup(h.target, h.images).order == h.target.order


def surjective_homs(genus: int, G: FiniteGroup, limit: int = MAX_TUPLES) -> list[SurfaceHom]:
    return [h for h in enumerate_homs(genus, G, limit) if is_surjective(h)]


@dataclass(frozen=True)
class ConjugacyClass:
    representative: SurfaceHom
    size: int


def classes_up_to_conjugacy(
    homs: Iterable[SurfaceHom], by: Iterable[int] | None = None
) -> list[ConjugacyClass]:
    """Orbits under simultaneous conjugation.

    ``by`` restricts the conjugating elements (default: the whole target).
    Representatives are lexicographically minimal within their orbit, and
    classes are returned sorted by representative.
    """
    homs = list(homs)
    if not homs:
        return []
    G = homs[0].target
    if any(h.target is not G for h in homs):
        raise ValueError("all homomorphisms must share a target")
    conjugators = list(G.elements()) if by is None else list(by)
    remaining = {h.images for h in homs}
    out = []
    for h in sorted(remaining):
        if h not in remaining:
            continue
        orbit = {tuple(G.conj(g, a) for a in h) for g in conjugators}
        missing = orbit - remaining
        if missing and len(missing) != len(orbit):
            raise ValueError("input is not closed under the conjugation action")
        remaining -= orbit
        out.append(ConjugacyClass(SurfaceHom(G, min(orbit)), len(orbit)))
    out.sort(key=lambda c: c.representative.images)
    return out


def transposition_census(h: SurfaceHom) -> int:
    """Number of images that are transpositions."""
    G = h.target
    if G.permutations is None:
        raise TypeError("transposition census needs a permutation group target")
    d = G.perm(G.identity).degree
    transposition = (2,) + (1,) * (d - 2)
    return sum(1 for a in h.images if cycle_type(G.perm(a)) == transposition)


def transposition_histogram(homs: Iterable[SurfaceHom], genus: int | None = None) -> dict[int, int]:
    """Histogram ``{k: #homs with k transposition images}`` for k = 0..2g.

    ``genus`` fixes the key range when ``homs`` may be empty.
    """
    homs = list(homs)
    counts = Counter(transposition_census(h) for h in homs)
    if genus is None:
        genus = homs[0].genus if homs else 0
    top = 2 * genus
    return {k: counts.get(k, 0) for k in range(top + 1)}
