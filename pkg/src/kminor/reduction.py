"""Greedy density-preserving reduction to a locally minimal minor.

Given a graph with edge_count >= d * vertex_count, repeatedly apply the
cheapest move that keeps the density ratio while strictly shrinking
|V| + |E|:

  delete-edge (u, v)     legal iff  m - 1        >= d * n
  contract    (u, v), t triangles
                         legal iff  m - t - 1    >= d * (n - 1)
  delete-vertex v, deg dv
                         legal iff  m - dv       >= d * (n - 1)  and n >= 2

A global minimum (the textbook existence argument) is computationally out of
reach; the point of this module is that any *local* fixpoint of this move set
already has every property the downstream stages consume. With integer d, at
a fixpoint: no legal delete-edge forces m = d * n exactly; given that, no
legal contraction forces every edge into >= d triangles; and those two
together force minimum degree >= d + 1. Each move lowers |V| + |E| by at
least one, so reduction finishes within |V| + |E| moves.

Move order: exhaust edge deletions first (the edge with maximum endpoint
degree sum, ties to lowest ids), then contract the edge with fewest
triangles (ties to lowest ids), then delete a minimum-degree vertex. The
delete-vertex move is kept for completeness but is unreachable under this
order: once m = d * n and every edge has >= d triangles, every degree
already exceeds d.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import DensityTooLowError, InternalInvariantError
from .graph import ContractionTrace, Graph, validate_trace


@dataclass(frozen=True)
class Move:
    kind: str  # "delete-edge" | "contract" | "delete-vertex"
    vertices: tuple[int, ...]


@dataclass
class ReducedMinor:
    """A fixpoint minor: m = d*n, every edge in >= d triangles, min degree >= d+1."""

    graph: Graph
    trace: ContractionTrace
    d: int

    def validate(self, original: Graph) -> None:
        g, d = self.graph, self.d
        if g.edge_count != d * g.vertex_count:
            raise InternalInvariantError(
                f"fixpoint violated: m={g.edge_count} != d*n={d * g.vertex_count}"
            )
        for u, v in g.edges():
            if g.edge_triangle_count(u, v) < d:
                raise InternalInvariantError(f"edge ({u},{v}) in fewer than {d} triangles")
        if g.vertex_count and g.min_degree() < d + 1:
            raise InternalInvariantError(f"min degree below {d + 1}")
        validate_trace(original, g, self.trace)


def applicable_moves(g: Graph, d: int) -> list[Move]:
    """Every density-preserving shrinking move available on g.

    Pure enumeration by the legality arithmetic; no precondition on g, so it
    can also probe graphs already below the density threshold.
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    n, m = g.vertex_count, g.edge_count
    moves: list[Move] = []
    for u, v in g.edges():
        if m - 1 >= d * n:
            moves.append(Move("delete-edge", (u, v)))
        t = g.edge_triangle_count(u, v)
        if m - t - 1 >= d * (n - 1):
            moves.append(Move("contract", (u, v)))
    if n >= 2:
        for v in g.vertices():
            if m - g.degree(v) >= d * (n - 1):
                moves.append(Move("delete-vertex", (v,)))
    return moves


def reduce_minor(g: Graph, d: int) -> ReducedMinor:
    """Run moves to a fixpoint and return the reduced minor with its trace.

    Raises DensityTooLowError when edge_count < d * vertex_count.
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    if g.edge_count < d * g.vertex_count:
        raise DensityTooLowError(
            f"density too low: {g.edge_count} edges < d*n = {d * g.vertex_count}"
        )
    engine = _Engine(g, d)
    engine.run()
    graph, trace = engine.materialize()
    rm = ReducedMinor(graph=graph, trace=trace, d=d)
    engine.check_fixpoint()
    return rm


class _Engine:
    """Mutable working state over stable ids; compacts once at the end.

    Selection uses lazy heaps: every key change pushes a fresh entry, and a
    popped entry counts only if it still matches the live value (stale ones
    are re-pushed with the current key). Tuple ordering in the heap gives the
    lowest-ids tie-break for free.
    """

    def __init__(self, g: Graph, d: int) -> None:
        self.d = d
        self.adj: list[set[int]] = [set(g.neighbors(v)) for v in g.vertices()]
        self.alive: set[int] = set(g.vertices())
        self.n = g.vertex_count
        self.m = g.edge_count
        self.preimages: list[set[int]] = [{v} for v in g.vertices()]
        self.tri: dict[tuple[int, int], int] = {}
        self.tri_heap: list[tuple[int, int, int]] = []
        for u, v in g.edges():
            t = len(self.adj[u] & self.adj[v])
            self.tri[(u, v)] = t
            self.tri_heap.append((t, u, v))
        heapq.heapify(self.tri_heap)
        self.degsum_heap: list[tuple[int, int, int]] = [
            (-(len(self.adj[u]) + len(self.adj[v])), u, v) for u, v in self.tri
        ]
        heapq.heapify(self.degsum_heap)

    # -- bookkeeping ------------------------------------------------------

    def _edge_alive(self, u: int, v: int) -> bool:
        return u in self.alive and v in self.adj[u]

    def _tri_change(self, a: int, b: int, delta: int) -> None:
        key = (a, b) if a < b else (b, a)
        t = self.tri[key] + delta
        self.tri[key] = t
        heapq.heappush(self.tri_heap, (t, key[0], key[1]))

    def _remove_edge(self, u: int, v: int) -> None:
        for w in self.adj[u] & self.adj[v]:
            self._tri_change(u, w, -1)
            self._tri_change(v, w, -1)
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        del self.tri[(u, v) if u < v else (v, u)]
        self.m -= 1

    def _add_edge(self, u: int, v: int) -> None:
        common = self.adj[u] & self.adj[v]
        self.adj[u].add(v)
        self.adj[v].add(u)
        key = (u, v) if u < v else (v, u)
        self.tri[key] = len(common)
        heapq.heappush(self.tri_heap, (len(common), key[0], key[1]))
        for w in common:
            self._tri_change(u, w, +1)
            self._tri_change(v, w, +1)
        self.m += 1

    def _contract(self, u: int, v: int) -> None:
        keep, drop = (u, v) if u < v else (v, u)
        self._remove_edge(keep, drop)
        for w in sorted(self.adj[drop]):
            self._remove_edge(drop, w)
            if w not in self.adj[keep]:
                self._add_edge(keep, w)
        self.alive.discard(drop)
        self.n -= 1
        self.preimages[keep] |= self.preimages[drop]
        # degrees around the merged vertex may have grown past any stored key
        deg_keep = len(self.adj[keep])
        for w in self.adj[keep]:
            key = (-(deg_keep + len(self.adj[w])), min(keep, w), max(keep, w))
            heapq.heappush(self.degsum_heap, key)

    # -- selection --------------------------------------------------------

    def _pop_max_degsum_edge(self) -> tuple[int, int]:
        while True:
            neg, u, v = heapq.heappop(self.degsum_heap)
            if not self._edge_alive(u, v):
                continue
            current = len(self.adj[u]) + len(self.adj[v])
            if -neg == current:
                return u, v
            # everywhere else keys only decay, so re-push and keep looking
            heapq.heappush(self.degsum_heap, (-current, u, v))

    def _peek_min_triangle_edge(self) -> tuple[int, int, int] | None:
        while self.tri_heap:
            t, u, v = heapq.heappop(self.tri_heap)
            if not self._edge_alive(u, v):
                continue
            current = self.tri[(u, v)]
            if t == current:
                heapq.heappush(self.tri_heap, (t, u, v))
                return t, u, v
            heapq.heappush(self.tri_heap, (current, u, v))
        return None

    # -- main loop --------------------------------------------------------

    def run(self) -> None:
        d = self.d
        while True:
            excess = self.m - d * self.n
            if excess < 0:
                raise InternalInvariantError("density ratio lost during reduction")
            if excess >= 1:
                u, v = self._pop_max_degsum_edge()
                self._remove_edge(u, v)
                continue
            entry = self._peek_min_triangle_edge()
            if entry is not None and entry[0] <= d - 1:
                self._contract(entry[1], entry[2])
                continue
            victim = self._deletable_vertex()
            if victim is not None:
                for w in sorted(self.adj[victim]):
                    self._remove_edge(victim, w)
                self.alive.discard(victim)
                self.n -= 1
                continue
            return

    def _deletable_vertex(self) -> int | None:
        if self.n < 2:
            return None
        best = min(((len(self.adj[v]), v) for v in self.alive), default=None)
        if best is not None and self.m - best[0] >= self.d * (self.n - 1):
            return best[1]
        return None

    # -- output -----------------------------------------------------------

    def materialize(self) -> tuple[Graph, ContractionTrace]:
        live = sorted(self.alive)
        index = {old: new for new, old in enumerate(live)}
        out = Graph(len(live))
        for old in live:
            nu = index[old]
            for w in self.adj[old]:
                nw = index[w]
                if nw > nu:
                    out.add_edge(nu, nw)
        pre = [set(self.preimages[old]) for old in live]
        n_original = len(self.preimages)
        return out, ContractionTrace(pre, n_original)

    def check_fixpoint(self) -> None:
        d = self.d
        if self.m != d * self.n:
            raise InternalInvariantError("fixpoint reached with m != d*n")
        if self.tri and min(self.tri.values()) < d:
            raise InternalInvariantError("fixpoint reached with a sparse-triangle edge")
        if self.alive and min(len(self.adj[v]) for v in self.alive) < d + 1:
            raise InternalInvariantError("fixpoint reached with min degree <= d")
