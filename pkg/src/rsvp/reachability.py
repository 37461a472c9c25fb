"""Vertex-deleted multi-source reachability and the per-vertex hop-parent index.

For a vertex ``v``, every neighbor ``s`` of ``v`` starts one traversal of the
graph with ``v`` (and its incident edges) removed. A traversal records, for
each surviving edge, how far each endpoint sits behind the other: both the
shortest routes and the longer "around the back" routes that plain BFS trees
discard. The per-start records are then merged into one index keyed on the
distance from ``v`` itself.

The emission rule is deliberately order-invariant: it is a function of BFS
distances and the edge set alone, so reordering adjacency storage cannot
change the result. Relabeling the graph relabels the index (equivariance).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from .graphs import Graph

# How the per-group count is derived. "traversals" counts the start vertices
# that contributed an entry at that hop; the alternative "parents" (count =
# parent list size) exists for experimentation only and nothing ships with it.
_COUNT_SEMANTICS = "traversals"


class TraversalEntry(NamedTuple):
    """One reachability record from a single-start traversal."""

    target: int
    hop: int  # distance of `parent` from the start, plus one
    parent: int


class Group(NamedTuple):
    """Aggregated records for one target at one distance from the source."""

    hop: int  # distance from the deleted source vertex
    count: int  # contributing start traversals at this hop
    parents: tuple[int, ...]  # sorted union of parents across traversals


@dataclass(frozen=True)
class HopParentIndex:
    """Per-target groups for one source vertex.

    ``groups[t]`` is ordered by strictly increasing hop. Targets that no
    traversal reached, and the source itself, get an empty tuple.
    """

    source: int
    groups: tuple[tuple[Group, ...], ...]


def _deleted_bfs_distances(g: Graph, v: int, s: int) -> list[int | None]:
    # BFS from s in g with vertex v blocked
    dist: list[int | None] = [None] * g.n
    dist[s] = 0
    queue = deque([s])
    adjacency = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in adjacency[u]:
            if w != v and dist[w] is None:
                dist[w] = du + 1
                queue.append(w)
    return dist


def deleted_neighborhood_bfs(g: Graph, v: int, s: int) -> list[TraversalEntry]:
    """Traverse ``g - v`` from start ``s`` and emit reachability entries.

    With d() the BFS distances from ``s`` in the deleted graph, every edge
    (u, t) of ``g - v`` yields an entry (target=t, hop=d(u)+1, parent=u) when
    d(u) is finite, and symmetrically for the other endpoint. Each edge is
    therefore recorded at most twice, once per endpoint.
    """
    if s not in g.adjacency[v]:
        raise ValueError(f"start {s} is not a neighbor of deleted vertex {v}")
    dist = _deleted_bfs_distances(g, v, s)
    entries: list[TraversalEntry] = []
    adjacency = g.adjacency
    for t in range(g.n):
        if t == v:
            continue
        for u in adjacency[t]:
            if u == v:
                continue
            du = dist[u]
            if du is not None:
                entries.append(TraversalEntry(t, du + 1, u))
    return entries


def aggregate_hp(g: Graph, v: int) -> HopParentIndex:
    """Merge the per-start traversals for ``v`` into its hop-parent index.

    Entry hops are offset by one (the edge from ``v`` to the start); within a
    (target, hop) group the parent lists are unioned and the count is the
    number of distinct starts that contributed. A vertex of degree 0 gets an
    index that is empty for every target.
    """
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    acc: list[dict[int, tuple[set[int], set[int]]]] = [{} for _ in range(g.n)]
    for s in g.adjacency[v]:
        for t, hop, parent in deleted_neighborhood_bfs(g, v, s):
            bucket = acc[t].get(hop + 1)
            if bucket is None:
                bucket = (set(), set())
                acc[t][hop + 1] = bucket
            bucket[0].add(parent)
            bucket[1].add(s)
    groups = []
    for t in range(g.n):
        per_target = []
        for h in sorted(acc[t]):
            parents, starts = acc[t][h]
            count = len(starts) if _COUNT_SEMANTICS == "traversals" else len(parents)
            per_target.append(Group(h, count, tuple(sorted(parents))))
        groups.append(tuple(per_target))
    return HopParentIndex(source=v, groups=tuple(groups))
