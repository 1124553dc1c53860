"""Simple-graph core: BFS distances, graph powers, diameter, exact max clique.

Graphs are simple and undirected with vertices 0..n-1, immutable after
construction.  Clique search is exact Bron-Kerbosch with pivoting; the graphs
in this artifact stay small enough (tens of vertices) that exactness is cheap,
and powered graphs are usually complete, which short-circuits the search.
"""

from __future__ import annotations

import json
import math
from collections import deque
from typing import Iterable, Sequence

INF = math.inf


class Graph:
    """An immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "_adj")

    n: int
    edges: frozenset[tuple[int, int]]

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise ValueError(f"vertex count must be >= 1, got {n}")
        canon = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            canon.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(canon))
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in canon:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", tuple(frozenset(s) for s in adj))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Graph is immutable")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Graph):
            return self.n == other.n and self.edges == other.edges
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced by ``vertices``, relabeled 0..k-1 in given order."""
        verts = list(vertices)
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertices in induced subgraph request")
        index = {v: i for i, v in enumerate(verts)}
        sub_edges = [
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        ]
        return Graph(len(verts), sub_edges)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        return cls(data["n"], [tuple(e) for e in data["edges"]])

    def to_dot(self) -> str:
        lines = ["graph G {"]
        lines.extend(f"  {v};" for v in range(self.n))
        lines.extend(f"  {u} -- {v};" for u, v in self.sorted_edges())
        lines.append("}")
        return "\n".join(lines)


def bfs_distances(g: Graph, source: int) -> list[float]:
    """Hop counts from ``source``; INF for unreachable vertices."""
    dist: list[float] = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if dist[w] == INF:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def all_pairs_distance(g: Graph) -> list[list[float]]:
    """Symmetric n x n matrix of shortest-path hop counts (INF if disconnected)."""
    return [bfs_distances(g, v) for v in range(g.n)]


def diameter(g: Graph) -> float:
    """Maximum finite distance; INF iff disconnected; 0 for a single vertex."""
    worst = 0.0
    for row in all_pairs_distance(g):
        m = max(row)
        if m == INF:
            return INF
        worst = max(worst, m)
    return int(worst)


def is_connected(g: Graph) -> bool:
    return max(bfs_distances(g, 0)) != INF


def power(g: Graph, r: int) -> Graph:
    """The r-th power: same vertices, edges between vertices at distance <= r."""
    if r < 1:
        raise ValueError(f"power exponent must be >= 1, got {r}")
    if r == 1:
        return g
    dist = all_pairs_distance(g)
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if dist[u][v] <= r
    ]
    return Graph(g.n, edges)


def is_complete(g: Graph) -> bool:
    return len(g.edges) == g.n * (g.n - 1) // 2


def max_clique(g: Graph) -> tuple[int, ...]:
    """One maximum clique, as a sorted vertex tuple.  Exact.

    Bron-Kerbosch with pivoting over maximal cliques, keeping the largest
    seen.  Complete graphs skip the search.
    """
    if is_complete(g):
        return tuple(range(g.n))

    best: list[tuple[int, ...]] = [()]
    adj = [g.neighbors(v) for v in range(g.n)]

    def extend(clique: set[int], candidates: set[int], excluded: set[int]) -> None:
        if not candidates and not excluded:
            if len(clique) > len(best[0]):
                best[0] = tuple(sorted(clique))
            return
        if len(clique) + len(candidates) <= len(best[0]):
            return
        pivot = max(candidates | excluded, key=lambda u: len(candidates & adj[u]))
        for v in sorted(candidates - adj[pivot]):
            extend(clique | {v}, candidates & adj[v], excluded & adj[v])
            candidates.remove(v)
            excluded.add(v)

    extend(set(), set(range(g.n)), set())
    return best[0]


def clique_number(g: Graph) -> int:
    """Order of a maximum clique."""
    return len(max_clique(g))
