"""Simple undirected graphs with minor operations and contraction traces.

Vertices are the contiguous ids ``0..vertex_count-1``. Adjacency is stored as
one neighbor set per vertex; the edge count is cached. Operations that shrink
the graph (edge contraction, vertex deletion) compact the id range and return
a new value together with an updated :class:`ContractionTrace`, so every
surviving vertex can always be mapped back to the set of original vertices it
stands for.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Iterator
from typing import Optional

from .errors import InternalInvariantError


class Graph:
    """Undirected simple graph: no self-loops, no parallel edges.

    Mutators require exclusive access to the value; queries never mutate.
    ``neighbors`` returns the live internal set for speed -- treat it as
    read-only.
    """

    __slots__ = ("_adj", "_m")

    def __init__(self, vertex_count: int = 0) -> None:
        if vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        self._adj: list[set[int]] = [set() for _ in range(vertex_count)]
        self._m = 0

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        g = cls(vertex_count)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    @property
    def vertex_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return self._m

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < len(self._adj):
            raise ValueError(f"vertex {v} out of range 0..{len(self._adj) - 1}")

    def add_edge(self, u: int, v: int) -> None:
        """Insert edge (u, v); adding an existing edge is a no-op."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if v not in self._adj[u]:
            self._adj[u].add(v)
            self._adj[v].add(u)
            self._m += 1

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self._adj[u]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def neighbors(self, v: int) -> set[int]:
        self._check_vertex(v)
        return self._adj[v]

    def vertices(self) -> range:
        return range(len(self._adj))

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        for u in range(len(self._adj)):
            for v in sorted(self._adj[u]):
                if v > u:
                    yield (u, v)

    def copy(self) -> "Graph":
        g = Graph.__new__(Graph)
        g._adj = [set(s) for s in self._adj]
        g._m = self._m
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"

    def min_degree(self) -> int:
        if not self._adj:
            raise ValueError("min_degree of empty graph")
        return min(len(s) for s in self._adj)

    def neighborhood_of_set(self, vertex_set: Iterable[int]) -> set[int]:
        """External neighborhood: vertices outside the set with a neighbor in it."""
        inside = set(vertex_set)
        for v in inside:
            self._check_vertex(v)
        out: set[int] = set()
        for v in inside:
            out.update(self._adj[v])
        return out - inside

    def edge_triangle_count(self, u: int, v: int) -> int:
        """Number of triangles through edge (u, v), i.e. |N(u) & N(v)|."""
        if not self.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        return len(self._adj[u] & self._adj[v])

    def connected_components(self) -> list[list[int]]:
        """Sorted vertex lists, one per component, ordered by smallest member."""
        n = len(self._adj)
        seen = [False] * n
        comps: list[list[int]] = []
        for s in range(n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comp.sort()
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        if len(self._adj) <= 1:
            return True
        return len(self.connected_components()) == 1

    def shortest_path(self, u: int, v: int) -> Optional[list[int]]:
        """A minimum-length u-v path, or None if u and v are disconnected.

        BFS expands neighbors in ascending id order, so ties always resolve
        the same way and identical inputs give identical paths.
        """
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return [u]
        parent = {u: u}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for y in sorted(self._adj[x]):
                if y not in parent:
                    parent[y] = x
                    if y == v:
                        path = [v]
                        while path[-1] != u:
                            path.append(parent[path[-1]])
                        path.reverse()
                        return path
                    queue.append(y)
        return None

    def bfs_distances(self, source: int) -> list[int]:
        """Hop distance from source to every vertex; -1 for unreachable."""
        self._check_vertex(source)
        dist = [-1] * len(self._adj)
        dist[source] = 0
        queue = deque([source])
        while queue:
            x = queue.popleft()
            for y in self._adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def diameter(self) -> float:
        """Largest pairwise distance; math.inf if the graph is disconnected."""
        n = len(self._adj)
        if n == 0:
            raise ValueError("diameter of empty graph")
        worst = 0
        for s in range(n):
            dist = self.bfs_distances(s)
            far = max(dist)
            if min(dist) < 0:
                return math.inf
            worst = max(worst, far)
        return worst

    def min_pairwise_common_neighbors(self, vertex_set: Iterable[int]) -> int:
        """Min over pairs {u, v} of the set of |N(u) & N(v) & set|."""
        inside = sorted(set(vertex_set))
        if len(inside) < 2:
            raise ValueError("need at least two vertices")
        for v in inside:
            self._check_vertex(v)
        member = set(inside)
        restricted = [self._adj[v] & member for v in inside]
        best = len(member)
        for i in range(len(inside)):
            for j in range(i + 1, len(inside)):
                common = len(restricted[i] & restricted[j])
                if common < best:
                    best = common
                    if best == 0:
                        return 0
        return best

    def induced_subgraph(self, vertex_set: Iterable[int]) -> tuple["Graph", list[int]]:
        """Subgraph on the given vertices plus the id remap back to self.

        Returns (subgraph, vertex_map) where vertex_map[new_id] = old_id;
        new ids follow the sorted order of the requested set.
        """
        chosen = sorted(set(vertex_set))
        if not chosen:
            raise ValueError("induced subgraph of empty vertex set")
        for v in chosen:
            self._check_vertex(v)
        index = {old: new for new, old in enumerate(chosen)}
        sub = Graph(len(chosen))
        for new, old in enumerate(chosen):
            for w in self._adj[old]:
                peer = index.get(w)
                if peer is not None and peer > new:
                    sub._adj[new].add(peer)
                    sub._adj[peer].add(new)
                    sub._m += 1
        return sub, chosen


class ContractionTrace:
    """Maps each live vertex of a minor to its set of original vertices.

    Invariants (checked by :func:`validate_trace`): preimages are pairwise
    disjoint, each induces a connected subgraph of the original graph, and
    adjacency in the minor lifts to at least one original edge.
    """

    __slots__ = ("preimages", "original_vertex_count")

    def __init__(self, preimages: list[set[int]], original_vertex_count: int) -> None:
        self.preimages = preimages
        self.original_vertex_count = original_vertex_count

    @classmethod
    def identity(cls, vertex_count: int) -> "ContractionTrace":
        return cls([{v} for v in range(vertex_count)], vertex_count)

    def preimage(self, v: int) -> set[int]:
        return self.preimages[v]

    def copy(self) -> "ContractionTrace":
        return ContractionTrace([set(s) for s in self.preimages], self.original_vertex_count)


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    """New graph with edge (u, v) removed; vertex ids are unchanged."""
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    out = g.copy()
    out._adj[u].discard(v)
    out._adj[v].discard(u)
    out._m -= 1
    return out


def delete_vertex(g: Graph, trace: ContractionTrace, v: int) -> tuple[Graph, ContractionTrace]:
    """New graph without v; ids above v shift down by one to stay contiguous."""
    g._check_vertex(v)
    n = g.vertex_count
    out = Graph(n - 1)
    for x in range(n):
        if x == v:
            continue
        nx = x if x < v else x - 1
        for y in g._adj[x]:
            if y == v:
                continue
            ny = y if y < v else y - 1
            if ny > nx:
                out._adj[nx].add(ny)
                out._adj[ny].add(nx)
                out._m += 1
    new_pre = [set(trace.preimages[x]) for x in range(n) if x != v]
    return out, ContractionTrace(new_pre, trace.original_vertex_count)


def contract_edge(
    g: Graph, trace: ContractionTrace, u: int, v: int
) -> tuple[Graph, ContractionTrace]:
    """Contract edge (u, v): merge both endpoints into one vertex.

    The merged vertex keeps id min(u, v) and inherits N(u) | N(v) - {u, v}
    (parallel edges collapse, the contracted edge disappears). Ids above
    max(u, v) shift down by one. Preimages of u and v are unioned.
    """
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    keep, drop = (u, v) if u < v else (v, u)
    n = g.vertex_count
    out = Graph(n - 1)

    def relabel(x: int) -> int:
        if x == drop:
            x = keep
        return x if x < drop else x - 1

    for x in range(n):
        if x == drop:
            continue
        nx = relabel(x)
        source = g._adj[x] if x != keep else (g._adj[keep] | g._adj[drop])
        for y in source:
            if y == keep or y == drop:
                continue
            ny = relabel(y)
            if ny > nx:
                out._adj[nx].add(ny)
                out._adj[ny].add(nx)
                out._m += 1
    new_pre = []
    for x in range(n):
        if x == drop:
            continue
        pre = set(trace.preimages[x])
        if x == keep:
            pre |= trace.preimages[drop]
        new_pre.append(pre)
    return out, ContractionTrace(new_pre, trace.original_vertex_count)


def validate_trace(original: Graph, minor: Graph, trace: ContractionTrace) -> None:
    """Raise InternalInvariantError unless the trace is consistent.

    Checks: one preimage per live vertex, pairwise disjointness, per-preimage
    connectivity in the original graph, and an original edge behind every
    minor edge.
    """
    if trace.original_vertex_count != original.vertex_count:
        raise InternalInvariantError("trace records a different original size")
    if len(trace.preimages) != minor.vertex_count:
        raise InternalInvariantError("one preimage per live vertex required")
    seen: set[int] = set()
    for v, pre in enumerate(trace.preimages):
        if not pre:
            raise InternalInvariantError(f"empty preimage for vertex {v}")
        if pre & seen:
            raise InternalInvariantError(f"preimage of vertex {v} overlaps another")
        seen |= pre
        if not _connected_within(original, pre):
            raise InternalInvariantError(f"preimage of vertex {v} is disconnected")
    for u, v in minor.edges():
        if not _some_edge_between(original, trace.preimages[u], trace.preimages[v]):
            raise InternalInvariantError(f"minor edge ({u}, {v}) has no original edge")


def _connected_within(g: Graph, vertex_set: set[int]) -> bool:
    start = next(iter(vertex_set))
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y in vertex_set and y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == len(vertex_set)


def _some_edge_between(g: Graph, a: set[int], b: set[int]) -> bool:
    small, large = (a, b) if len(a) <= len(b) else (b, a)
    return any(not g.neighbors(x).isdisjoint(large) for x in small)
