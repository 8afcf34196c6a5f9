"""Seeded random quivers for property sweeps."""

from __future__ import annotations

import random
from itertools import product

from .core import Quiver


def random_acyclic_quiver(rng: random.Random, n: int, max_mult: int = 3, density: float = 0.6) -> Quiver:
    """Arrows only go forward along a random vertex order, so no oriented cycles."""
    order = list(range(n))
    rng.shuffle(order)
    mult = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < density:
                mult[order[a]][order[b]] = rng.randint(1, max_mult)
    return Quiver(n, mult)


def acyclic_corpus(size: int, seed: int = 0, n_min: int = 2, n_max: int = 4, max_mult: int = 3) -> list[Quiver]:
    rng = random.Random(seed)
    return [random_acyclic_quiver(rng, rng.randint(n_min, n_max), max_mult) for _ in range(size)]


def three_vertex_acyclic(max_mult: int = 3) -> list[Quiver]:
    """Every quiver on 1 -> 2 -> 3 order with multiplicities 0..max_mult.

    Up to relabelling this covers every acyclic 3-vertex quiver.
    """
    out = []
    for m12, m13, m23 in product(range(max_mult + 1), repeat=3):
        out.append(Quiver(3, ((0, m12, m13), (0, 0, m23), (0, 0, 0))))
    return out
