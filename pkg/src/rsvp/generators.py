"""Deterministic graph generators for the families used by the test harness."""

from __future__ import annotations

import random
from math import comb, isqrt

from .graphs import Graph

_REGULAR_PAIRING_ATTEMPTS = 1000


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycle needs k >= 3")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete(k: int) -> Graph:
    if k < 1:
        raise ValueError("complete needs k >= 1")
    return Graph(k, [(u, w) for u in range(k) for w in range(u + 1, k)])


def path(k: int) -> Graph:
    if k < 1:
        raise ValueError("path needs k >= 1")
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Vertices of ``h`` are relabeled to g.n..g.n+h.n-1."""
    shifted = [(u + g.n, w + g.n) for u, w in h.edges()]
    return Graph(g.n + h.n, g.edges() + shifted)


def rook(k: int) -> Graph:
    """k x k rook's graph: cell (i, j) is vertex k*i + j, adjacency along
    shared row or column. Equivalently the line graph of K(k,k); rook(4) is
    the SRG(16, 6, 2, 2) that contains 4-cliques."""
    if k < 1:
        raise ValueError("rook needs k >= 1")
    edges = []
    for i in range(k):
        for j in range(k):
            v = k * i + j
            for jj in range(j + 1, k):
                edges.append((v, k * i + jj))
            for ii in range(i + 1, k):
                edges.append((v, k * ii + j))
    return Graph(k * k, edges)


def shrikhande() -> Graph:
    """Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)};
    cell (a, b) is vertex 4*a + b. The other SRG(16, 6, 2, 2): no 4-cliques,
    so it is not isomorphic to rook(4) despite identical parameters."""
    deltas = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)]
    edges = set()
    for a in range(4):
        for b in range(4):
            v = 4 * a + b
            for da, db in deltas:
                w = 4 * ((a + da) % 4) + (b + db) % 4
                edges.add((v, w) if v < w else (w, v))
    return Graph(16, edges)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    for d in range(2, isqrt(q) + 1):
        if q % d == 0:
            return False
    return True


def paley(q: int) -> Graph:
    """Paley graph of prime order q with q = 1 (mod 4): u ~ w iff u - w is a
    nonzero quadratic residue mod q."""
    if not _is_prime(q):
        raise ValueError(f"paley order {q} is not prime")
    if q % 4 != 1:
        raise ValueError(f"paley order {q} is not 1 mod 4")
    residues = {x * x % q for x in range(1, q)}
    edges = [(u, w) for u in range(q) for w in range(u + 1, q) if (w - u) % q in residues]
    return Graph(q, edges)


def random_gnm(n: int, m: int, seed: int) -> Graph:
    """Uniform simple graph with exactly n vertices and m edges."""
    if n < 0:
        raise ValueError("n must be >= 0")
    limit = comb(n, 2)
    if not 0 <= m <= limit:
        raise ValueError(f"m={m} outside 0..{limit} for n={n}")
    rng = random.Random(seed)
    pairs = [(u, w) for u in range(n) for w in range(u + 1, n)]
    return Graph(n, rng.sample(pairs, m))


def random_regular(n: int, d: int, seed: int) -> Graph:
    """Random d-regular graph via the pairing model, rejecting pairings with
    loops or repeated edges."""
    if not 0 <= d < n:
        raise ValueError(f"degree d={d} outside 0..{n - 1}")
    if n * d % 2:
        raise ValueError(f"n*d = {n * d} is odd; no {d}-regular graph on {n} vertices")
    if d == 0:
        return Graph(n)
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(_REGULAR_PAIRING_ATTEMPTS):
        rng.shuffle(stubs)
        edges: set[tuple[int, int]] = set()
        for i in range(0, len(stubs), 2):
            u, w = stubs[i], stubs[i + 1]
            if u == w:
                break
            key = (u, w) if u < w else (w, u)
            if key in edges:
                break
            edges.add(key)
        else:
            return Graph(n, edges)
    raise RuntimeError(f"no simple {d}-regular pairing found for n={n} after "
                       f"{_REGULAR_PAIRING_ATTEMPTS} attempts")


def worked_example() -> Graph:
    """Fixed 6-vertex, 7-edge graph used as the golden fixture throughout the
    test suite. Labels are pinned: the documented hop-parent groups and
    signature elements are stated relative to exactly this numbering."""
    return Graph(6, [(0, 1), (0, 5), (1, 2), (2, 3), (2, 5), (3, 4), (4, 5)])


_FAMILIES = {
    "cycle": cycle,
    "complete": complete,
    "path": path,
    "disjoint_union": disjoint_union,
    "rook": rook,
    "shrikhande": shrikhande,
    "paley": paley,
    "random_gnm": random_gnm,
    "random_regular": random_regular,
    "worked_example": worked_example,
}


def generate(family: str, *params) -> Graph:
    """Dispatch to a generator by family name."""
    try:
        fn = _FAMILIES[family]
    except KeyError:
        known = ", ".join(sorted(_FAMILIES))
        raise ValueError(f"unknown family {family!r}; known: {known}") from None
    return fn(*params)
