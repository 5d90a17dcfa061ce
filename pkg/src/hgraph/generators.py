"""Small graph families and seeded random generators, all as edge lists."""

from __future__ import annotations

import random
from itertools import combinations

from .core import HGraph


def complete(n):
    return list(combinations(range(n), 2))


def cycle(n):
    return [(i, (i + 1) % n) for i in range(n)] if n >= 3 else []


def path(n):
    return [(i, i + 1) for i in range(n - 1)]


def star(leaves):
    return [(0, i) for i in range(1, leaves + 1)]


def wheel(rim):
    """Hub 0 joined to every vertex of a rim cycle on 1..rim."""
    return star(rim) + [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return outer + spokes + inner


def sun3():
    """Triangle 0 1 2 with ears 3 (on 0 1), 4 (on 1 2) and 5 (on 0 2)."""
    return [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 0), (5, 2)]


def random_tree(n, seed):
    rng = random.Random(seed)
    return [(rng.randrange(i), i) for i in range(1, n)]


def bounded_degeneracy(n, d, seed):
    """Each vertex links to ``min(i, d)`` random earlier ones: degeneracy <= d."""
    rng = random.Random(seed)
    edges = []
    for i in range(1, n):
        for j in rng.sample(range(i), min(i, d)):
            edges.append((j, i))
    return edges


def gnp(n, p, seed):
    rng = random.Random(seed)
    return [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]


def build(edges, n=None):
    """An :class:`HGraph` on ``0..n-1`` (or on the mentioned ids)."""
    return HGraph.from_edges(edges, range(n) if n is not None else ())
