"""Vertex connectivity via unit-capacity flow, separators, and core extraction.

Connectivity questions are answered by max-flow on the vertex-split digraph
(each vertex becomes an in/out arc of capacity one), so every path count
comes with a matching minimum vertex cut by Menger's theorem. The all-pairs
scheme is quadratic in the vertex count; the graphs this package feeds it
have at most ~2d vertices, where correctness beats cleverness.
"""

from __future__ import annotations

import logging
import math
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .errors import CoreExtractionError, InternalInvariantError
from .graph import Graph

logger = logging.getLogger(__name__)


@dataclass
class SeparatorResult:
    """A vertex cut with the two sides it separates; side_a is the smaller."""

    separator: set[int]
    side_a: set[int]
    side_b: set[int]


def max_vertex_disjoint_paths(g: Graph, u: int, v: int) -> tuple[int, set[int]]:
    """Maximum internally vertex-disjoint u-v paths plus a minimum vertex cut.

    Requires distinct, nonadjacent endpoints. The two returned quantities are
    equal by Menger's theorem; that equality is asserted on every call.
    """
    if u == v:
        raise ValueError("endpoints must be distinct")
    if g.has_edge(u, v):
        raise ValueError("endpoints must be nonadjacent")
    n = g.vertex_count
    big = n + 1
    # split nodes: vertex w -> in node 2w, out node 2w+1
    cap: dict[int, dict[int, int]] = {}

    def arc(a: int, b: int, c: int) -> None:
        cap.setdefault(a, {})[b] = cap.setdefault(a, {}).get(b, 0) + c
        cap.setdefault(b, {}).setdefault(a, 0)

    for w in range(n):
        if w != u and w != v:
            arc(2 * w, 2 * w + 1, 1)
    for x, y in g.edges():
        arc(2 * x + 1, 2 * y, big)
        arc(2 * y + 1, 2 * x, big)
    source, sink = 2 * u + 1, 2 * v
    cap.setdefault(source, {})
    cap.setdefault(sink, {})

    flow = 0
    while True:
        parent: dict[int, int] = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in sorted(cap[a]):
                if b not in parent and cap[a][b] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        # augment by the bottleneck (always 1 through an internal vertex)
        bottleneck = big
        b = sink
        while b != source:
            a = parent[b]
            bottleneck = min(bottleneck, cap[a][b])
            b = a
        b = sink
        while b != source:
            a = parent[b]
            cap[a][b] -= bottleneck
            cap[b][a] += bottleneck
            b = a
        flow += bottleneck

    reach = {source}
    queue = deque([source])
    while queue:
        a = queue.popleft()
        for b, c in cap[a].items():
            if c > 0 and b not in reach:
                reach.add(b)
                queue.append(b)
    cut = {w for w in range(n) if w != u and w != v and 2 * w in reach and 2 * w + 1 not in reach}
    if len(cut) != flow:
        raise InternalInvariantError(
            f"Menger mismatch: {flow} paths but cut of size {len(cut)}"
        )
    return flow, cut


def find_small_separator(g: Graph, k: int) -> Optional[SeparatorResult]:
    """A separator of size < k, or None exactly when g is k-connected.

    Scans nonadjacent vertex pairs in lexicographic order and stops at the
    first pair with fewer than k disjoint paths; complete graphs have no
    nonadjacent pair and no separator. Requires a connected input with more
    than k vertices.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if g.vertex_count <= k:
        raise ValueError(f"need more than k={k} vertices, got {g.vertex_count}")
    if not g.is_connected():
        raise ValueError("find_small_separator requires a connected graph")
    n = g.vertex_count
    for u in range(n):
        for v in range(u + 1, n):
            if g.has_edge(u, v):
                continue
            count, cut = max_vertex_disjoint_paths(g, u, v)
            if count < k:
                return _split_by_cut(g, cut, u)
    return None


def _split_by_cut(g: Graph, cut: set[int], u: int) -> SeparatorResult:
    remaining = [w for w in g.vertices() if w not in cut]
    comp_of: dict[int, int] = {}
    comps: list[set[int]] = []
    for s in remaining:
        if s in comp_of:
            continue
        comp = {s}
        comp_of[s] = len(comps)
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y not in cut and y not in comp_of:
                    comp_of[y] = len(comps)
                    comp.add(y)
                    queue.append(y)
        comps.append(comp)
    side_u = comps[comp_of[u]]
    rest: set[int] = set()
    for i, comp in enumerate(comps):
        if i != comp_of[u]:
            rest |= comp
    a, b = (side_u, rest) if len(side_u) <= len(rest) else (rest, side_u)
    result = SeparatorResult(separator=set(cut), side_a=a, side_b=b)
    _check_separator(g, result)
    return result


def _check_separator(g: Graph, sep: SeparatorResult) -> None:
    if not sep.side_a or not sep.side_b:
        raise InternalInvariantError("separator sides must be nonempty")
    total = len(sep.separator) + len(sep.side_a) + len(sep.side_b)
    if total != g.vertex_count or (sep.side_a & sep.side_b):
        raise InternalInvariantError("separator sides do not partition V")
    for x in sep.side_a:
        if not g.neighbors(x).isdisjoint(sep.side_b):
            raise InternalInvariantError("edge crosses the separator")


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff g has more than k vertices and no vertex cut smaller than k."""
    if g.vertex_count <= k:
        return False
    if not g.is_connected():
        return False
    return find_small_separator(g, k) is None


def extract_connected_core(h: Graph, d: int) -> tuple[Graph, list[int]]:
    """A ceil(d/3)-connected induced core of h with min degree >= ceil(2d/3).

    If h passes the connectivity test it is returned whole. Otherwise one
    split suffices: take the smaller side A of a separator of size < ceil(d/3)
    (a disconnected h splits on the empty separator), and certify h[A] by the
    sufficient condition that every vertex pair in A has >= ceil(d/3) common
    neighbors inside A, falling back to the flow-based test. Requires
    min degree of h at least d.

    Returns (core, vertex_map) with vertex_map[new_id] = id in h.
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    if h.vertex_count == 0:
        raise ValueError("cannot extract a core from an empty graph")
    if h.min_degree() < d:
        raise ValueError(f"min degree {h.min_degree()} below d={d}")
    k = -(-d // 3)  # ceil(d/3)
    two_thirds = -(-2 * d // 3)  # ceil(2d/3)

    if not h.is_connected():
        comps = h.connected_components()
        comps.sort(key=lambda c: (len(c), c[0]))
        side_a = set(comps[0])
        separator: set[int] = set()
    else:
        sep = find_small_separator(h, k)
        if sep is None:
            identity = list(range(h.vertex_count))
            return h.copy(), identity
        side_a, separator = sep.side_a, sep.separator

    if h.vertex_count <= 2 * d and len(side_a) > d:
        raise CoreExtractionError(
            f"core extraction failed: smaller side has {len(side_a)} > d={d} vertices"
        )
    if len(side_a) > d - len(separator):
        logger.warning(
            "smaller side size %d exceeds d - |S| = %d; proceeding per the "
            "sufficient-condition check",
            len(side_a),
            d - len(separator),
        )
    core, vertex_map = h.induced_subgraph(side_a)
    if core.min_degree() < two_thirds:
        raise CoreExtractionError(
            f"core extraction failed: side min degree {core.min_degree()} "
            f"< {two_thirds}"
        )
    if core.vertex_count >= 2:
        certified = core.min_pairwise_common_neighbors(core.vertices()) >= k
    else:
        certified = True
    if not certified and not is_k_connected(core, k):
        raise CoreExtractionError(
            "core extraction failed: side is neither common-neighbor certified "
            f"nor {k}-connected (d={d} too small for this regime)"
        )
    return core, vertex_map
