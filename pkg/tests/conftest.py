from __future__ import annotations

import random

from rsvp.generators import (
    complete,
    cycle,
    disjoint_union,
    paley,
    path,
    random_gnm,
    random_regular,
    rook,
    shrikhande,
)
from rsvp.graphs import Graph


def shuffled_copy(g: Graph, rng: random.Random) -> Graph:
    """Structurally identical graph with adjacency rows in random storage
    order. Only tests may do this; it exists to prove order independence."""
    h = Graph(g.n, g.edges())
    for row in h.adjacency:
        rng.shuffle(row)
    return h


def random_graph(rng: random.Random, max_n: int = 10) -> Graph:
    n = rng.randint(1, max_n)
    limit = n * (n - 1) // 2
    return random_gnm(n, rng.randint(0, limit), rng.randrange(1 << 30))


def mixed_family_graph(rng: random.Random, max_n: int = 24) -> Graph:
    """Graphs drawn across all generator families, disconnected ones included."""
    pick = rng.randrange(10)
    if pick <= 2:
        return random_graph(rng, max_n)
    if pick == 3:
        n = rng.randrange(4, max_n + 1, 2)
        return random_regular(n, rng.choice([2, 3]), rng.randrange(1 << 30))
    if pick == 4:
        return cycle(rng.randint(3, max_n))
    if pick == 5:
        return path(rng.randint(1, max_n))
    if pick == 6:
        return complete(rng.randint(1, min(8, max_n)))
    if pick == 7:
        half = max_n // 2
        return disjoint_union(random_graph(rng, half), random_graph(rng, half))
    if pick == 8:
        return paley(rng.choice([5, 13, 17]))
    return rook(4) if rng.random() < 0.5 else shrikhande()
