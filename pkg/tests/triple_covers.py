"""Random valid triple-cover monodromies, built on raw tuples."""

import itertools

import oracles
from prymcov.covers import CoveringRep
from prymcov.permgroup import Permutation

TRANSPOSITIONS = [(1, 0, 2), (0, 2, 1), (2, 1, 0)]
THREE_CYCLES = [(1, 2, 0), (2, 0, 1)]
E = oracles.ident(3)


def _prod(perms):
    x = E
    for p in perms:
        x = oracles.mul(x, p)
    return x


def random_triple_cover(rng, g, s, t):
    """A connected degree-3 cover of a genus-g base with s simple and t total
    branch points, or None when the draw cannot be completed."""
    branches = [rng.choice(TRANSPOSITIONS) for _ in range(s)] + [rng.choice(THREE_CYCLES) for _ in range(t)]
    rng.shuffle(branches)
    b = _prod(branches)
    if g == 0:
        if b != E:
            return None
        handles = []
    else:
        handles = [rng.choice(oracles.S3) for _ in range(2 * (g - 1))]
        head = _prod(oracles.commutator(handles[2 * i], handles[2 * i + 1]) for i in range(g - 1))
        # head * [x, y] * b = id
        need = oracles.mul(oracles.inv(head), oracles.inv(b))
        pairs = [(x, y) for x, y in itertools.product(oracles.S3, repeat=2) if oracles.commutator(x, y) == need]
        if not pairs:
            return None
        handles += list(rng.choice(pairs))
    gens = handles + branches
    if not gens or len(oracles.closure(gens, 3)) not in (3, 6):
        return None
    return CoveringRep(g, 3, tuple(map(Permutation, handles)), tuple(map(Permutation, branches)))


def draw_many(rng, n, max_genus=2, max_s=4, max_t=2):
    """``n`` covers as (g, s, t, rep), cycling through profiles."""
    out = []
    attempts = 0
    while len(out) < n:
        attempts += 1
        if attempts > 100 * n:
            raise RuntimeError("generator starved")
        g = rng.randint(0, max_genus)
        s = rng.choice(range(0, max_s + 1, 2))
        t = rng.randint(0, max_t)
        c = random_triple_cover(rng, g, s, t)
        if c is not None:
            out.append((g, s, t, c))
    return out
