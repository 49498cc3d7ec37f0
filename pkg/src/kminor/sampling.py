"""Las-Vegas sampling of small dominating sets with few components.

One round draws s vertices uniformly with repetitions and accepts iff the
support (i) leaves at most `domination_slack` vertices without a neighbor in
it, (ii) is not swallowed by any avoid set, and (iii) spans at most six
components. The probabilistic analysis only shows rounds succeed often; the
checks here make acceptance a certainty, so randomness affects runtime and
never correctness. join_components then wires the accepted set together along
shortest paths.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass
from typing import AbstractSet, Optional, Sequence

from .errors import JoinOverflowError, LemmaPreconditionError, SamplerFailedError
from .graph import Graph

COMPONENT_CAP = 6
JOIN_BUDGET = 65  # up to five connecting paths, each at most 13 interior vertices


@dataclass(frozen=True)
class SamplerParams:
    """Scale parameter n with the retry policy; everything else derives from n.

    n is the caller's scale (the pipeline passes 2d), not the working graph's
    vertex count. Derived quantities are recomputed on every access so a
    params value can never smuggle stale numbers across different n.
    """

    n: int
    retry_cap: int = 1000
    seed: int = 0

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("scale parameter n must be at least 2")
        if self.retry_cap < 1:
            raise ValueError("retry_cap must be positive")

    @property
    def sample_size(self) -> int:
        return math.ceil(3.1 * math.sqrt(math.log(self.n)))

    @property
    def domination_slack(self) -> int:
        return math.ceil(self.n * math.exp(-math.sqrt(math.log(self.n)) / 3.0))

    @property
    def component_cap(self) -> int:
        return COMPONENT_CAP

    @property
    def t_cap(self) -> int:
        return math.floor(self.n / math.sqrt(math.log(self.n)))


@dataclass
class DominatorSet:
    """An accepted sample: vertices plus the evidence the checks produced."""

    vertices: set[int]
    non_dominated: set[int]
    raw_size: int
    joined_size: Optional[int] = None
    rounds_used: int = 1


def draw_sample(g: Graph, s: int, rng: random.Random) -> list[int]:
    """s independent uniform draws from V(g), with repetitions, in draw order."""
    if g.vertex_count == 0:
        raise ValueError("cannot sample from an empty graph")
    if s < 1:
        raise ValueError("sample size must be positive")
    n = g.vertex_count
    return [rng.randrange(n) for _ in range(s)]


def check_domination(
    g: Graph, candidate: AbstractSet[int], slack: int
) -> tuple[set[int], bool]:
    """Vertices with no neighbor in the candidate set, and whether few enough.

    Membership in the candidate does not dominate: a vertex counts as
    dominated only through an incident edge into the set.
    """
    non_dominated = {v for v in g.vertices() if g.neighbors(v).isdisjoint(candidate)}
    return non_dominated, len(non_dominated) <= slack


def check_avoidance(
    candidate: AbstractSet[int], avoid_sets: Sequence[AbstractSet[int]]
) -> bool:
    """True iff the candidate has a vertex outside every avoid set."""
    return all(not avoid >= candidate for avoid in avoid_sets)


def sample_dominator(
    g: Graph,
    params: SamplerParams,
    avoid_sets: Sequence[AbstractSet[int]],
    rng: random.Random,
) -> DominatorSet:
    """Retry rounds until one sample passes all three checks.

    Preconditions (each failure named): min degree of g at least n/6, at most
    t_cap avoid sets, every avoid set within the domination slack. The avoid
    sizes are re-checked before every round. Raises SamplerFailedError after
    retry_cap rejected rounds.
    """
    if g.vertex_count == 0:
        raise LemmaPreconditionError("lemma precondition violated: empty graph")
    if 6 * g.min_degree() < params.n:
        raise LemmaPreconditionError(
            f"lemma precondition violated: min degree {g.min_degree()} < n/6 "
            f"with n={params.n}"
        )
    if len(avoid_sets) > params.t_cap:
        raise LemmaPreconditionError(
            f"lemma precondition violated: too many avoid sets "
            f"({len(avoid_sets)} > {params.t_cap})"
        )
    s = params.sample_size
    slack = params.domination_slack
    for round_index in range(params.retry_cap):
        for j, avoid in enumerate(avoid_sets):
            if len(avoid) > slack:
                raise LemmaPreconditionError(
                    f"lemma precondition violated: avoid set {j} larger than "
                    f"the domination slack ({len(avoid)} > {slack})"
                )
        support = set(draw_sample(g, s, rng))
        non_dominated, dominated_ok = check_domination(g, support, slack)
        if not dominated_ok:
            continue
        if not check_avoidance(support, avoid_sets):
            continue
        if _component_count_within(g, support) > COMPONENT_CAP:
            continue
        return DominatorSet(
            vertices=support,
            non_dominated=non_dominated,
            raw_size=len(support),
            rounds_used=round_index + 1,
        )
    raise SamplerFailedError(
        f"sampler failed: no accepted round within retry_cap={params.retry_cap}"
    )


def _component_count_within(g: Graph, vertex_set: set[int]) -> int:
    seen: set[int] = set()
    count = 0
    for s in sorted(vertex_set):
        if s in seen:
            continue
        count += 1
        seen.add(s)
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y in vertex_set and y not in seen:
                    seen.add(y)
                    queue.append(y)
    return count


def join_components(g: Graph, vertex_set: AbstractSet[int]) -> set[int]:
    """Grow the set along shortest paths until it induces a connected subgraph.

    The component containing the lowest vertex id is the hub; every other
    component is tied to it by a shortest path in g (multi-source BFS from
    the hub, ascending-id expansion, so ties are deterministic). Requires a
    connected g and at most six components; raises JoinOverflowError if more
    than 65 vertices would be added, which signals the diameter hypothesis
    was violated.
    """
    members = set(vertex_set)
    if not members:
        raise ValueError("cannot join an empty set")
    if not g.is_connected():
        raise ValueError("join_components requires a connected graph")
    comps = _components_of_subset(g, members)
    if len(comps) > COMPONENT_CAP:
        raise ValueError(f"more than {COMPONENT_CAP} components to join")
    hub = comps[0]  # ordered by minimum id, so this holds min(members)
    result = set(members)
    added = 0
    for comp in comps[1:]:
        path = _shortest_hub_path(g, hub, comp)
        for w in path[1:-1]:
            if w not in result:
                result.add(w)
                added += 1
                if added > JOIN_BUDGET:
                    raise JoinOverflowError(
                        f"join overflow: more than {JOIN_BUDGET} vertices needed "
                        "(diameter hypothesis violated; d too small)"
                    )
    return result


def _components_of_subset(g: Graph, members: set[int]) -> list[list[int]]:
    comps: list[list[int]] = []
    seen: set[int] = set()
    for s in sorted(members):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y in members and y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        comp.sort()
        comps.append(comp)
    return comps


def _shortest_hub_path(g: Graph, hub: list[int], target: list[int]) -> list[int]:
    """Shortest path from any hub vertex to any target vertex, lowest-id ties."""
    target_set = set(target)
    parent: dict[int, int] = {}
    queue = deque()
    for h in hub:  # hub is sorted, so seeding order is deterministic
        parent[h] = h
        if h in target_set:
            return [h]
        queue.append(h)
    while queue:
        x = queue.popleft()
        for y in sorted(g.neighbors(x)):
            if y in parent:
                continue
            parent[y] = x
            if y in target_set:
                path = [y]
                while parent[path[-1]] != path[-1]:
                    path.append(parent[path[-1]])
                path.reverse()
                return path
            queue.append(y)
    raise ValueError("hub cannot reach target component in a connected graph")
