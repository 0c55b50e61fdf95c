"""Seeded random homogeneous data shared by the unit and acceptance tests."""

from __future__ import annotations

import random

from blowup.algebra import PolyRing


def random_form(rng: random.Random, ring: PolyRing, degree: int, terms: int) -> object:
    mons = list(ring.monomials_of_degree(degree))
    picks = rng.sample(mons, min(terms, len(mons)))
    return ring.from_dict({e: rng.randrange(1, ring.p) for e in picks})


def random_ideal(rng: random.Random, ring: PolyRing, ngens: int = 3, maxdeg: int = 3, terms: int = 3):
    return [random_form(rng, ring, rng.randint(1, maxdeg), rng.randint(1, terms)) for _ in range(ngens)]


def random_membership_pair(rng: random.Random, ring: PolyRing):
    """A homogeneous ``(f, gens)``; about half the ``f`` are built inside the ideal."""
    gens = random_ideal(rng, ring, rng.randint(1, 3), 2, 3)
    d = max(g.degree() for g in gens) + rng.randint(0, 2)
    if rng.random() < 0.5:
        f = ring.zero()
        for g in gens:
            if g.degree() <= d:
                f = f + random_form(rng, ring, d - g.degree(), 2) * g
        if rng.random() < 0.3:
            # perturb by a single monomial so near-misses are exercised too
            f = f + random_form(rng, ring, d, 1)
    else:
        f = random_form(rng, ring, d, rng.randint(1, 4))
    return f, gens
