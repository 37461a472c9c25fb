"""Exact isomorphism search for small graphs, and small-graph corpora.

The search is meant as ground truth at test scale (n up to ~16 in general),
not as a competitor to industrial solvers; the worst case is exponential.
"""

from __future__ import annotations

import random
from collections import Counter, deque
from functools import lru_cache
from math import comb

from .generators import disjoint_union, random_gnm
from .graphs import Graph, Permutation
from .refinement import color_refinement
from .signature import verify_mapping

_SAMPLED_CORPUS_SIZE = 32


def _bfs_order(g: Graph) -> list[int]:
    # components in min-id order, FIFO within; keeps every prefix as
    # connected as possible so adjacency pruning bites early
    seen = [False] * g.n
    order: list[int] = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def find_isomorphism(g1: Graph, g2: Graph) -> Permutation | None:
    """Exact: a verified isomorphism if one exists, else None.

    Backtracking over vertex assignments with degree and adjacency
    consistency pruning, seeded by joint color refinement classes; candidate
    order is ascending ids, so failures reproduce exactly.
    """
    if g1.n != g2.n or g1.m != g2.m:
        return None
    n = g1.n
    if n == 0:
        return Permutation(())
    if g1.degree_sequence() != g2.degree_sequence():
        return None

    colors = color_refinement(disjoint_union(g1, g2)).colors
    c1, c2 = colors[:n], colors[n:]
    if Counter(c1) != Counter(c2):
        return None
    candidates: dict[int, list[int]] = {}
    for v in range(n):
        candidates.setdefault(c2[v], []).append(v)

    order = _bfs_order(g1)
    adj1 = g1.adjacency
    adj2 = g2.adjacency
    adjset2 = [set(row) for row in adj2]
    mapping = [-1] * n
    used = [False] * n

    def assign(k: int) -> bool:
        if k == n:
            return True
        u = order[k]
        mapped_images = [mapping[w] for w in adj1[u] if mapping[w] >= 0]
        want = len(mapped_images)
        deg_u = len(adj1[u])
        for v in candidates[c1[u]]:
            if used[v] or len(adj2[v]) != deg_u:
                continue
            if any(x not in adjset2[v] for x in mapped_images):
                continue
            # every mapped neighbor of v must be the image of a neighbor of u
            if sum(used[x] for x in adj2[v]) != want:
                continue
            mapping[u] = v
            used[v] = True
            if assign(k + 1):
                return True
            mapping[u] = -1
            used[v] = False
        return False

    if not assign(0):
        return None
    result = Permutation(tuple(mapping))
    assert verify_mapping(g1, g2, result)
    return result


def _invariant_key(g: Graph):
    return (g.m, g.degree_sequence(), color_refinement(g).class_sizes())


@lru_cache(maxsize=None)
def _classes_exact(n: int) -> tuple[Graph, ...]:
    # one representative per isomorphism class on exactly n vertices, built
    # by attaching vertex n-1 to representatives on n-1 vertices in every way
    if n == 1:
        return (Graph(1),)
    produced: list[Graph] = []
    buckets: dict[object, list[Graph]] = {}
    for base in _classes_exact(n - 1):
        base_edges = base.edges()
        for mask in range(1 << (n - 1)):
            extra = [(i, n - 1) for i in range(n - 1) if mask >> i & 1]
            candidate = Graph(n, base_edges + extra)
            bucket = buckets.setdefault(_invariant_key(candidate), [])
            if all(find_isomorphism(candidate, g) is None for g in bucket):
                bucket.append(candidate)
                produced.append(candidate)
    return tuple(produced)


def exhaustive_corpus(max_n: int, seed: int = 0) -> list[Graph]:
    """Deterministic corpus of graphs on exactly ``max_n`` vertices.

    Up to 7 vertices this is one representative per isomorphism class
    (duplicate-free by construction). Above that, enumeration is off the
    table and a seeded sample of random graphs is returned instead.
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    if max_n <= 7:
        return list(_classes_exact(max_n))
    rng = random.Random(seed)
    limit = comb(max_n, 2)
    return [
        random_gnm(max_n, rng.randint(0, limit), rng.randrange(1 << 30))
        for _ in range(_SAMPLED_CORPUS_SIZE)
    ]
