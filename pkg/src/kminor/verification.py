"""Independent certificate checking and exact minor search on tiny graphs.

verify_certificate trusts nothing upstream: it re-checks disjointness,
branch connectivity, and pairwise adjacency directly against the input
graph. has_complete_minor / hadwiger_number give exact ground truth by
exhaustive search and are capped at 12 vertices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import CertificateFormatError
from .graph import Graph

ORACLE_VERTEX_CAP = 12


@dataclass(frozen=True)
class Violation:
    kind: str  # "overlap" | "disconnected-branch" | "missing-adjacency"
    indices: tuple[int, ...]

    def __str__(self) -> str:
        if len(self.indices) == 1:
            return f"{self.kind}: branch {self.indices[0]}"
        return f"{self.kind}: branches {self.indices[0]} and {self.indices[1]}"


@dataclass
class VerificationReport:
    valid: bool
    violations: list[Violation] = field(default_factory=list)


def verify_certificate(g: Graph, branch_sets: Sequence[Sequence[int]]) -> VerificationReport:
    """Check a family of branch sets against g; report every violation.

    A valid family witnesses a complete minor: the sets are pairwise
    disjoint, each induces a connected subgraph of g, and some edge of g
    joins every pair. Out-of-range or empty branch sets are malformed
    input, not violations.
    """
    sets: list[set[int]] = []
    for i, branch in enumerate(branch_sets):
        s = set(branch)
        if not s:
            raise CertificateFormatError(f"branch {i} is empty")
        for v in s:
            if not 0 <= v < g.vertex_count:
                raise CertificateFormatError(f"branch {i}: vertex {v} out of range")
        sets.append(s)

    violations: list[Violation] = []
    k = len(sets)
    for i in range(k):
        for j in range(i + 1, k):
            if sets[i] & sets[j]:
                violations.append(Violation("overlap", (i, j)))
    for i, s in enumerate(sets):
        if not _connected_in(g, s):
            violations.append(Violation("disconnected-branch", (i,)))
    for i in range(k):
        for j in range(i + 1, k):
            if not _adjacent_sets(g, sets[i], sets[j]):
                violations.append(Violation("missing-adjacency", (i, j)))
    return VerificationReport(valid=not violations, violations=violations)


def _connected_in(g: Graph, vertex_set: set[int]) -> bool:
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


def _adjacent_sets(g: Graph, a: set[int], b: set[int]) -> bool:
    small, large = (a, b) if len(a) <= len(b) else (b, a)
    return any(not g.neighbors(x).isdisjoint(large) for x in small)


def has_complete_minor(g: Graph, k: int) -> tuple[bool, Optional[list[list[int]]]]:
    """Exhaustively decide whether K_k is a minor of g; witness on success.

    Search assigns vertices to branch sets one whole set at a time, in
    increasing order of each set's minimum vertex (canonical order, so no
    family is visited twice under relabeling). Vertices may stay unused --
    a partition-only search would be wrong, since forming a minor may
    require deleting vertices.
    """
    n = g.vertex_count
    if n > ORACLE_VERTEX_CAP:
        raise ValueError(f"exhaustive search capped at {ORACLE_VERTEX_CAP} vertices, got {n}")
    if k <= 0:
        return True, []
    if k > n:
        return False, None

    adj_mask = [0] * n
    for u in range(n):
        for v in g.neighbors(u):
            adj_mask[u] |= 1 << v

    # All connected nonempty subsets, smallest first so witnesses surface fast.
    connected: list[int] = []
    for mask in range(1, 1 << n):
        if _mask_connected(mask, adj_mask):
            connected.append(mask)
    connected.sort(key=lambda m: (m.bit_count(), m))
    nbr_mask = {m: _mask_neighbors(m, adj_mask) for m in connected}

    chosen: list[int] = []

    def extend(pool: int, min_vertex: int) -> bool:
        if len(chosen) == k:
            return True
        if pool.bit_count() < k - len(chosen):
            return False
        for cand in connected:
            if cand & ~pool:
                continue
            low = (cand & -cand).bit_length() - 1
            if low <= min_vertex:
                continue
            nb = nbr_mask[cand]
            if any(not nb & b for b in chosen):
                continue
            chosen.append(cand)
            if extend(pool & ~cand, low):
                return True
            chosen.pop()
        return False

    if extend((1 << n) - 1, -1):
        witness = [_mask_to_list(m) for m in chosen]
        return True, witness
    return False, None


def hadwiger_number(g: Graph, max_order: Optional[int] = None) -> int:
    """Largest k such that K_k is a minor of g (optionally capped)."""
    n = g.vertex_count
    if n > ORACLE_VERTEX_CAP:
        raise ValueError(f"exhaustive search capped at {ORACLE_VERTEX_CAP} vertices, got {n}")
    upper = n if max_order is None else min(n, max_order)
    for k in range(upper, 0, -1):
        found, _ = has_complete_minor(g, k)
        if found:
            return k
    return 0


def _mask_connected(mask: int, adj_mask: list[int]) -> bool:
    start = (mask & -mask).bit_length() - 1
    seen = 1 << start
    frontier = seen
    while frontier:
        grow = 0
        m = frontier
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            grow |= adj_mask[v] & mask
        frontier = grow & ~seen
        seen |= frontier
    return seen == mask


def _mask_neighbors(mask: int, adj_mask: list[int]) -> int:
    out = 0
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        out |= adj_mask[v]
    return out & ~mask


def _mask_to_list(mask: int) -> list[int]:
    out = []
    v = 0
    m = mask
    while m:
        if m & 1:
            out.append(v)
        m >>= 1
        v += 1
    return out
