"""Permutations and explicitly tabulated finite groups.

Groups here are small (order at most a few dozen), so everything is stored
as a full multiplication table and every algorithm is exhaustive. Element
ids are indices into the table; labels are display metadata only.

Permutations act on ``0..d-1`` and compose right-to-left:
``compose(p, q)(i) == p(q(i))``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterable, Sequence


class DegreeMismatch(ValueError):
    """Raised when permutations of different degrees are combined."""


# PERMUTATIONS
# ------------


@dataclass(frozen=True, order=True)
class Permutation:
    mapping: tuple[int, ...]

    def __post_init__(self):
        mapping = tuple(int(i) for i in self.mapping)
        if sorted(mapping) != list(range(len(mapping))):
            raise ValueError(f"not a bijection of 0..{len(mapping) - 1}: {mapping}")
        object.__setattr__(self, "mapping", mapping)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> Permutation:
        """Build from disjoint cycles, e.g. ``from_cycles(3, (0, 1, 2))``."""
        mapping = list(range(degree))
        seen = set()
        for cycle in cycles:
            for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
                if a in seen:
                    raise ValueError(f"cycles are not disjoint at {a}")
                seen.add(a)
                mapping[a] = b
        return cls(tuple(mapping))

    @property
    def degree(self) -> int:
        return len(self.mapping)

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __invert__(self) -> Permutation:
        return self.inverse()

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, j in enumerate(self.mapping):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.mapping))

    def cycles(self) -> list[tuple[int, ...]]:
        """All cycles including fixed points, each starting at its least point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = []
            i = start
            while not seen[i]:
                seen[i] = True
                cycle.append(i)
                i = self.mapping[i]
            out.append(tuple(cycle))
        return out

    def num_cycles(self) -> int:
        return len(self.cycles())

    def order(self) -> int:
        from math import lcm

        return reduce(lcm, (len(c) for c in self.cycles()), 1)

    def __str__(self) -> str:
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        if not nontrivial:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in nontrivial)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p o q``, i.e. ``i -> p(q(i))``."""
    if p.degree != q.degree:
        raise DegreeMismatch(f"cannot compose degree {p.degree} with degree {q.degree}")
    return Permutation(tuple(p.mapping[j] for j in q.mapping))


def compose_all(perms: Iterable[Permutation], degree: int) -> Permutation:
    return reduce(compose, perms, Permutation.identity(degree))


def cycle_type(p: Permutation) -> tuple[int, ...]:
    """Cycle lengths as a nonincreasing tuple (fixed points included)."""
    return tuple(sorted((len(c) for c in p.cycles()), reverse=True))


def sign(p: Permutation) -> int:
    even_cycles = sum(1 for c in p.cycles() if len(c) % 2 == 0)
    return -1 if even_cycles % 2 else 1


def is_transitive(perms: Iterable[Permutation], degree: int) -> bool:
    return len(orbits(perms, degree)) == 1


def orbits(perms: Iterable[Permutation], degree: int) -> list[tuple[int, ...]]:
    """Orbits of the group generated by ``perms`` on ``0..degree-1``."""
    perms = list(perms)
    seen = [False] * degree
    out = []
    for start in range(degree):
        if seen[start]:
            continue
        seen[start] = True
        orbit = [start]
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for p in perms:
                j = p(i)
                if not seen[j]:
                    seen[j] = True
                    orbit.append(j)
                    queue.append(j)
        out.append(tuple(sorted(orbit)))
    return out


def conjugating_permutation(
    gens_a: Sequence[Permutation], gens_b: Sequence[Permutation]
) -> Permutation | None:
    """Find ``c`` with ``c a_i c^-1 == b_i`` for all i, or None.

    Both generator lists must be transitive of the same degree. The search
    tries every image of point 0 and propagates along the generators.
    """
    if len(gens_a) != len(gens_b):
        raise ValueError("generator lists differ in length")
    if not gens_a:
        return None
    n = gens_a[0].degree
    if any(g.degree != n for g in itertools.chain(gens_a, gens_b)):
        raise DegreeMismatch("all generators must share a degree")
    for target in range(n):
        c = [-1] * n
        c[0] = target
        queue = deque([0])
        ok = True
        while queue and ok:
            i = queue.popleft()
            for a, b in zip(gens_a, gens_b):
                # c(a(i)) must equal b(c(i))
                j, cj = a(i), b(c[i])
                if c[j] == -1:
                    c[j] = cj
                    queue.append(j)
                elif c[j] != cj:
                    ok = False
                    break
        if ok and -1 not in c and sorted(c) == list(range(n)):
            return Permutation(tuple(c))
    return None


# FINITE GROUPS
# -------------


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group given by its full multiplication table.

    ``table[a][b]`` is the id of ``a*b``. ``permutations`` is set for groups
    realised as permutation groups; there ``a*b`` is ``compose(p_a, p_b)``.
    """

    table: tuple[tuple[int, ...], ...]
    identity: int = 0
    labels: tuple[str, ...] | None = None
    permutations: tuple[Permutation, ...] | None = None
    name: str = "G"
    _inverse: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        n = len(self.table)
        if any(len(row) != n for row in self.table):
            raise ValueError("multiplication table must be square")
        inv = [-1] * n
        for a in range(n):
            for b in range(n):
                if self.table[a][b] == self.identity:
                    inv[a] = b
                    break
        if -1 in inv:
            raise ValueError("some element has no inverse")
        object.__setattr__(self, "_inverse", tuple(inv))

    @classmethod
    def from_permutations(
        cls, generators: Iterable[Permutation], degree: int | None = None, name: str = "G"
    ) -> FiniteGroup:
        """The permutation group generated by ``generators``.

        Elements are ordered lexicographically by mapping, so the identity is 0.
        """
        gens = list(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree is required when there are no generators")
            degree = gens[0].degree
        e = Permutation.identity(degree)
        found = {e}
        frontier = [e]
        while frontier:
            new = []
            for h in frontier:
                for g in gens:
                    x = compose(h, g)
                    if x not in found:
                        found.add(x)
                        new.append(x)
            frontier = new
        elems = tuple(sorted(found))
        index = {p: i for i, p in enumerate(elems)}
        table = tuple(tuple(index[compose(a, b)] for b in elems) for a in elems)
        labels = tuple(str(p) for p in elems)
        return cls(table, index[e], labels, elems, name)

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return len(self.table)

    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def product(self, elems: Iterable[int]) -> int:
        return reduce(self.mul, elems, self.identity)

    def inv(self, a: int) -> int:
        return self._inverse[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        x = self.identity
        for _ in range(k):
            x = self.mul(x, a)
        return x

    def conj(self, g: int, a: int) -> int:
        """``g a g^-1``."""
        return self.mul(self.mul(g, a), self.inv(g))

    def commutator(self, a: int, b: int) -> int:
        """``a b a^-1 b^-1``."""
        return self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.mul(x, a)
            k += 1
        return k

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    def element(self, label: str) -> int:
        """Look up an element id by its label."""
        if self.labels is None or label not in self.labels:
            raise KeyError(label)
        return self.labels.index(label)

    def perm(self, a: int) -> Permutation:
        if self.permutations is None:
            raise TypeError(f"{self.name} is not a permutation group")
        return self.permutations[a]

    def index_of(self, p: Permutation) -> int:
        if self.permutations is None:
            raise TypeError(f"{self.name} is not a permutation group")
        return self._perm_index[p]

    @cached_property
    def _perm_index(self) -> dict[Permutation, int]:
        return {p: i for i, p in enumerate(self.permutations)}

    def is_abelian(self) -> bool:
        return all(self.table[a][b] == self.table[b][a] for a in self.elements() for b in self.elements())

    def check_axioms(self) -> None:
        """Assert identity, inverse and associativity laws (exhaustive)."""
        e = self.identity
        for a in self.elements():
            assert self.mul(e, a) == a == self.mul(a, e)
            assert self.mul(a, self.inv(a)) == e == self.mul(self.inv(a), a)
        for a, b, c in itertools.product(self.elements(), repeat=3):
            assert self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "table": [list(row) for row in self.table],
            "labels": list(self.labels) if self.labels else None,
        }


# constructors


def symmetric(d: int) -> FiniteGroup:
    gens = []
    if d >= 2:
        gens = [Permutation.from_cycles(d, (0, 1)), Permutation.from_cycles(d, tuple(range(d)))]
    return FiniteGroup.from_permutations(gens, d, name=f"S{d}")


def alternating(d: int) -> FiniteGroup:
    gens = [Permutation.from_cycles(d, (0, 1, k)) for k in range(2, d)]
    return FiniteGroup.from_permutations(gens, d, name=f"A{d}")


def cyclic(n: int) -> FiniteGroup:
    """Z/n as rotations of an n-gon, element k being the k-th power."""
    if n < 1:
        raise ValueError("n must be positive")
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    labels = tuple("1" if k == 0 else ("g" if k == 1 else f"g^{k}") for k in range(n))
    return FiniteGroup(table, 0, labels, name=f"Z{n}")


def _dihedral_label(k: int, e: int) -> str:
    rot = "" if k == 0 else ("psi" if k == 1 else f"psi^{k}")
    if e == 0:
        return rot or "1"
    return f"{rot} tau" if rot else "tau"


def dihedral(n: int) -> FiniteGroup:
    """D_n of order 2n; element ``k + n*e`` is ``psi^k tau^e``.

    Multiplication uses ``tau psi tau = psi^-1``, i.e.
    ``psi^a tau^e * psi^b tau^f = psi^(a + (-1)^e b) tau^(e+f)``.
    """
    if n < 1:
        raise ValueError("n must be positive")

    def idx(k: int, e: int) -> int:
        return k % n + n * (e % 2)

    table = []
    for e in range(2):
        for a in range(n):
            row = []
            for f in range(2):
                for b in range(n):
                    row.append(idx(a + (-b if e else b), e + f))
            table.append(tuple(row))
    labels = tuple(_dihedral_label(k, e) for e in range(2) for k in range(n))
    return FiniteGroup(tuple(table), 0, labels, name=f"D{n}")


def dihedral_element(n: int, k: int, e: int = 0) -> int:
    """Id of ``psi^k tau^e`` in ``dihedral(n)``."""
    return k % n + n * (e % 2)


def regular_permutations(G: FiniteGroup) -> tuple[Permutation, ...]:
    """Left-regular representation: element g sends x to g*x."""
    return tuple(Permutation(tuple(G.mul(g, x) for x in G.elements())) for g in G.elements())


# ISOMORPHISMS
# ------------


def generating_sequence(G: FiniteGroup) -> list[int]:
    """A short generating sequence, chosen greedily by decreasing element order."""
    gens: list[int] = []
    current = {G.identity}
    by_order = sorted(G.elements(), key=lambda a: (-G.element_order(a), a))
    for a in by_order:
        if len(current) == G.order:
            break
        if a not in current:
            gens.append(a)
            current = set(generated_subgroup(G, gens).members)
    return gens


def _extend_hom(
    G: FiniteGroup, H: FiniteGroup, gens: Sequence[int], images: Sequence[int]
) -> dict[int, int] | None:
    """Extend ``gens[i] -> images[i]`` to a homomorphism on <gens>, or None."""
    phi = {G.identity: H.identity}
    queue = deque([G.identity])
    while queue:
        x = queue.popleft()
        for g, h in zip(gens, images):
            y, hy = G.mul(x, g), H.mul(phi[x], h)
            if y not in phi:
                phi[y] = hy
                queue.append(y)
            elif phi[y] != hy:
                return None
    # consistency on generators is necessary but not sufficient; verify on the table
    for a in phi:
        for b in phi:
            if phi[G.mul(a, b)] != H.mul(phi[a], phi[b]):
                return None
    return phi


def extend_homomorphism(
    G: FiniteGroup, H: FiniteGroup, gens: Sequence[int], images: Sequence[int]
) -> dict[int, int] | None:
    return _extend_hom(G, H, gens, images)


def find_isomorphism(G: FiniteGroup, H: FiniteGroup) -> dict[int, int] | None:
    """Exhaustive isomorphism search; returns ``{g: phi(g)}`` or None."""
    if G.order != H.order:
        return None
    gens = generating_sequence(G)
    orders = [G.element_order(g) for g in gens]
    candidates = [[h for h in H.elements() if H.element_order(h) == k] for k in orders]
    for images in itertools.product(*candidates):
        phi = _extend_hom(G, H, gens, images)
        if phi is not None and len(phi) == G.order and len(set(phi.values())) == H.order:
            return phi
    return None


def are_isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    return find_isomorphism(G, H) is not None


# SUBGROUPS
# ---------


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup = field(compare=False, hash=False, repr=False)
    members: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        if self.parent.identity not in self.members:
            raise ValueError("a subgroup must contain the identity")

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def __contains__(self, a: int) -> bool:
        return a in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __le__(self, other: Subgroup) -> bool:
        return self.members <= other.members

    def __lt__(self, other: Subgroup) -> bool:
        return self.members < other.members

    def is_closed(self) -> bool:
        G = self.parent
        return all(G.mul(a, b) in self.members for a in self.members for b in self.members) and all(
            G.inv(a) in self.members for a in self.members
        )

    def conjugate(self, g: int) -> Subgroup:
        return Subgroup(self.parent, frozenset(self.parent.conj(g, a) for a in self.members))

    def is_normal(self) -> bool:
        return all(self.conjugate(g) == self for g in self.parent.elements())

    def core(self) -> Subgroup:
        """Largest normal subgroup of the parent contained in this one."""
        return core(self.parent, self)

    def as_group(self) -> FiniteGroup:
        """Re-tabulate as a standalone group (ids renumbered in sorted order)."""
        G = self.parent
        elems = sorted(self.members)
        index = {a: i for i, a in enumerate(elems)}
        table = tuple(tuple(index[G.mul(a, b)] for b in elems) for a in elems)
        labels = tuple(G.label(a) for a in elems)
        perms = tuple(G.perm(a) for a in elems) if G.permutations else None
        return FiniteGroup(table, index[G.identity], labels, perms, name=f"<{G.name} subgroup>")

    def label(self) -> str:
        return "{" + ", ".join(self.parent.label(a) for a in sorted(self.members)) + "}"


def generated_subgroup(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    gens = list(gens)
    found = {G.identity}
    frontier = [G.identity]
    while frontier:
        new = []
        for h in frontier:
            for g in gens:
                x = G.mul(h, g)
                if x not in found:
                    found.add(x)
                    new.append(x)
        frontier = new
    return Subgroup(G, frozenset(found))


def whole(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, frozenset(G.elements()))


def trivial(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, frozenset([G.identity]))


def core(G: FiniteGroup, H: Subgroup) -> Subgroup:
    members = set(H.members)
    for g in G.elements():
        members &= H.conjugate(g).members
    return Subgroup(G, frozenset(members))


@dataclass(frozen=True)
class SubgroupLattice:
    group: FiniteGroup = field(repr=False)
    classes: tuple[tuple[Subgroup, ...], ...]

    @property
    def subgroups(self) -> list[Subgroup]:
        return [H for cls in self.classes for H in cls]

    def representatives(self) -> list[Subgroup]:
        return [cls[0] for cls in self.classes]

    def class_of(self, H: Subgroup) -> int:
        for i, cls in enumerate(self.classes):
            if H in cls:
                return i
        raise KeyError(H.label())

    def inclusions(self) -> list[tuple[Subgroup, Subgroup]]:
        """All proper inclusions ``H < K`` between subgroups."""
        subs = self.subgroups
        return [(H, K) for H in subs for K in subs if H < K]

    def class_hasse_edges(self) -> list[tuple[int, int]]:
        """Covering relations between conjugacy classes.

        Class i lies below class j when some member of i is a proper subgroup
        of some member of j; only covering pairs (no class strictly between)
        are returned.
        """
        n = len(self.classes)
        below = [[False] * n for _ in range(n)]
        for i, ci in enumerate(self.classes):
            for j, cj in enumerate(self.classes):
                if i != j and any(H < K for H in ci for K in cj):
                    below[i][j] = True
        edges = []
        for i in range(n):
            for j in range(n):
                if below[i][j] and not any(below[i][k] and below[k][j] for k in range(n)):
                    edges.append((i, j))
        return edges


def all_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Every subgroup, found by joining cyclic subgroups until nothing new appears."""
    cyclic_subs = {generated_subgroup(G, [a]).members for a in G.elements()}
    found = set(cyclic_subs)
    frontier = set(cyclic_subs)
    while frontier:
        new = set()
        for H in frontier:
            for C in cyclic_subs:
                if C <= H:
                    continue
                J = generated_subgroup(G, H | C).members
                if J not in found:
                    new.add(J)
        found |= new
        frontier = new
    subs = [Subgroup(G, m) for m in found]
    subs.sort(key=lambda H: (H.order, sorted(H.members)))
    return subs


def subgroup_lattice(G: FiniteGroup) -> SubgroupLattice:
    remaining = all_subgroups(G)
    classes = []
    while remaining:
        H = remaining[0]
        conj = {H.conjugate(g) for g in G.elements()}
        cls = tuple(sorted(conj, key=lambda K: sorted(K.members)))
        classes.append(cls)
        remaining = [K for K in remaining if K not in conj]
    classes.sort(key=lambda c: (c[0].order, sorted(c[0].members)))
    return SubgroupLattice(G, tuple(classes))


# COSET ACTIONS
# -------------


@dataclass(frozen=True)
class CosetAction:
    """Permutation action of a group on the right cosets of a subgroup.

    Element g sends the coset ``H x`` to ``H x g^-1``; the inverse keeps the
    action a homomorphism for right-to-left composition.
    """

    group: FiniteGroup = field(repr=False)
    subgroup: Subgroup
    cosets: tuple[frozenset[int], ...]
    action: tuple[Permutation, ...]

    @property
    def degree(self) -> int:
        return len(self.cosets)

    def __call__(self, g: int) -> Permutation:
        return self.action[g]

    def kernel(self) -> Subgroup:
        return Subgroup(self.group, frozenset(g for g in self.group.elements() if self.action[g].is_identity()))

    def is_transitive(self) -> bool:
        return is_transitive(self.action, self.degree)


def right_cosets(G: FiniteGroup, H: Subgroup) -> tuple[frozenset[int], ...]:
    cosets = []
    seen: set[int] = set()
    for x in G.elements():
        if x in seen:
            continue
        c = frozenset(G.mul(h, x) for h in H.members)
        seen |= c
        cosets.append(c)
    return tuple(cosets)


def coset_action(G: FiniteGroup, H: Subgroup) -> CosetAction:
    cosets = right_cosets(G, H)
    where = {}
    for i, c in enumerate(cosets):
        for x in c:
            where[x] = i
    reps = [min(c) for c in cosets]
    action = tuple(
        Permutation(tuple(where[G.mul(x, G.inv(g))] for x in reps)) for g in G.elements()
    )
    return CosetAction(G, H, cosets, action)
