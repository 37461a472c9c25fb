"""All-pairs hop distances by repeated breadth-first search.

``None`` is the explicit unreachable marker inside the matrix; it is never a
numeric sentinel. The convention that an unreachable pair counts as distance
0 belongs to the signature layer, which is the only consumer of it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import Graph


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric n x n table of hop counts (``None`` = unreachable)."""

    rows: tuple[tuple[int | None, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, v: int) -> tuple[int | None, ...]:
        return self.rows[v]


def bfs_distances(g: Graph, s: int) -> list[int | None]:
    """Minimum hop counts from ``s`` to every vertex (``None`` = unreachable)."""
    if not 0 <= s < g.n:
        raise ValueError(f"start vertex {s} outside 0..{g.n - 1}")
    dist: list[int | None] = [None] * g.n
    dist[s] = 0
    queue = deque([s])
    adjacency = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in adjacency[u]:
            if dist[w] is None:
                dist[w] = du + 1
                queue.append(w)
    return dist


def distance_matrix(g: Graph) -> DistanceMatrix:
    """Hop distances between all vertex pairs; row v is ``bfs_distances(g, v)``."""
    return DistanceMatrix(tuple(tuple(bfs_distances(g, v)) for v in range(g.n)))
