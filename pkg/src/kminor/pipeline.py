"""End-to-end extraction: reduce, take a dense neighborhood, carve a highly
connected core, then peel off connected dominating branch sets until the
working graph gives out (best-effort) or the planned iteration count is done
(guarantee). Every certificate is re-verified against the original input
before it is returned.

Id spaces: the reducer returns a minor G* of the input with a contraction
trace; the dense neighborhood H lives inside G*, the core inside H, and the
iteration loop inside the core. Branch sets are kept in core ids and only
translated outward (core -> H -> G* -> original) once, at certificate
assembly, which keeps transient ids out of all bookkeeping.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .connectivity import extract_connected_core
from .errors import (
    DensityTooLowError,
    GuaranteeUnmetError,
    InternalInvariantError,
    LemmaPreconditionError,
    SamplerFailedError,
)
from .graph import ContractionTrace, Graph
from .reduction import ReducedMinor, reduce_minor
from .sampling import (
    SamplerParams,
    check_avoidance,
    check_domination,
    join_components,
    sample_dominator,
)
from .verification import verify_certificate

MODE_BEST_EFFORT = "best-effort"
MODE_GUARANTEE = "guarantee"

VertexSetLike = Sequence[int] | set[int] | frozenset[int]


@dataclass(frozen=True)
class PipelineConfig:
    d: int
    seed: int = 0
    mode: str = MODE_BEST_EFFORT
    retry_cap: int = 1000
    iteration_override: Optional[int] = None

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError("d must be a positive integer")
        if self.mode not in (MODE_BEST_EFFORT, MODE_GUARANTEE):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.retry_cap < 1:
            raise ValueError("retry_cap must be positive")
        if self.iteration_override is not None and self.iteration_override < 0:
            raise ValueError("iteration_override must be nonnegative")


@dataclass
class MinorCertificate:
    """A complete minor of the input graph, in original vertex ids.

    branch_sets are pairwise disjoint, each connected in the original graph,
    and every pair is joined by an original edge; order == len(branch_sets).
    """

    order: int
    branch_sets: list[list[int]]
    d: int
    seed: int
    mode: str
    iterations: Optional[int] = None
    sampler_rounds: Optional[int] = None
    small_d_regime: bool = False


def guarantee_iteration_target(d: int) -> int:
    """floor(d / (10 sqrt(ln d))); 0 where the formula degenerates (d = 1)."""
    if d < 2:
        return 0
    return math.floor(d / (10.0 * math.sqrt(math.log(d))))


def pick_min_degree_vertex(g: Graph) -> int:
    """The lowest-id vertex of minimum degree."""
    if g.vertex_count == 0:
        raise ValueError("empty graph")
    return min(g.vertices(), key=lambda v: (g.degree(v), v))


def extract_dense_neighborhood(rm: ReducedMinor) -> tuple[Graph, list[int]]:
    """Induced subgraph on the neighborhood of a minimum-degree vertex.

    At the reducer's fixpoint this has at most 2d vertices and min degree at
    least d (each incident edge sits in >= d triangles); violations mean the
    reducer is broken, not the input.
    """
    g, d = rm.graph, rm.d
    v = pick_min_degree_vertex(g)
    h, vertex_map = g.induced_subgraph(g.neighbors(v))
    if h.vertex_count > 2 * d:
        raise InternalInvariantError(
            f"dense neighborhood has {h.vertex_count} > 2d = {2 * d} vertices"
        )
    if h.min_degree() < d:
        raise InternalInvariantError(
            f"dense neighborhood has min degree {h.min_degree()} < d = {d}"
        )
    return h, vertex_map


def expand_branch_sets(
    trace: ContractionTrace, minor_sets: Sequence[VertexSetLike]
) -> list[set[int]]:
    """Lift vertex sets over a minor to original-vertex sets via preimages."""
    out: list[set[int]] = []
    claimed: set[int] = set()
    for s in minor_sets:
        expanded: set[int] = set()
        for v in s:
            if not 0 <= v < len(trace.preimages):
                raise InternalInvariantError(f"vertex {v} outside the trace")
            expanded |= trace.preimages[v]
        if expanded & claimed:
            raise InternalInvariantError("expanded branch sets overlap; trace corrupt")
        claimed |= expanded
        out.append(expanded)
    return out


class _IterationLoop:
    """The peeling loop over the core, in core-vertex ids throughout."""

    def __init__(self, core: Graph, d: int, cfg: PipelineConfig) -> None:
        self.core = core
        self.d = d
        self.cfg = cfg
        self.params = SamplerParams(n=2 * d, retry_cap=cfg.retry_cap, seed=cfg.seed)
        self.rng = random.Random(cfg.seed)
        self.alive: set[int] = set(core.vertices())
        self.avoid: list[set[int]] = []
        self.branches: list[set[int]] = []
        self.deleted_total = 0
        self.rounds_total = 0

    def run(self) -> None:
        guarantee = self.cfg.mode == MODE_GUARANTEE
        if guarantee:
            planned = self.cfg.iteration_override
            if planned is None:
                planned = max(1, guarantee_iteration_target(self.d))
        else:
            planned = self.cfg.iteration_override  # None = run until checks fail
        while planned is None or len(self.branches) < planned:
            if guarantee:
                self._assert_guarantee_budget()
            working = self._working_graph_if_safe(guarantee)
            if working is None:
                break
            subgraph, vertex_map = working
            if not self._one_iteration(subgraph, vertex_map, guarantee):
                break

    def _assert_guarantee_budget(self) -> None:
        if 3 * self.deleted_total >= self.d:
            raise GuaranteeUnmetError(
                f"guarantee mode: deletion budget exhausted after "
                f"{len(self.branches)} iterations ({self.deleted_total} deleted, "
                f"budget d/3 with d={self.d}); d is too small for the guarantee"
            )

    def _working_graph_if_safe(self, guarantee: bool) -> Optional[tuple[Graph, list[int]]]:
        def fail(reason: str) -> None:
            if guarantee:
                raise GuaranteeUnmetError(f"guarantee mode: {reason}")

        if not self.alive:
            fail("working graph is empty")
            return None
        subgraph, vertex_map = self.core.induced_subgraph(self.alive)
        if not subgraph.is_connected():
            fail("working graph disconnected")
            return None
        if 3 * subgraph.min_degree() <= self.d:
            fail(
                f"working min degree {subgraph.min_degree()} not above d/3 "
                f"(d={self.d})"
            )
            return None
        if __debug__:
            # dense enough implies small diameter; both sides checked
            assert subgraph.vertex_count < 6 * subgraph.min_degree()
            assert subgraph.diameter() <= 14
        return subgraph, vertex_map

    def _one_iteration(
        self, subgraph: Graph, vertex_map: list[int], guarantee: bool
    ) -> bool:
        to_local = {core_id: local for local, core_id in enumerate(vertex_map)}
        avoid_local = [
            {to_local[x] for x in avoid_set} for avoid_set in self.avoid
        ]
        try:
            drawn = sample_dominator(subgraph, self.params, avoid_local, self.rng)
        except (SamplerFailedError, LemmaPreconditionError):
            if guarantee:
                raise
            return False
        self.rounds_total += drawn.rounds_used
        joined = join_components(subgraph, drawn.vertices)
        drawn.joined_size = len(joined)
        self._check_preserved_post_join(subgraph, joined, avoid_local)

        branch = {vertex_map[x] for x in joined}
        neighborhood = {
            vertex_map[x] for x in subgraph.neighborhood_of_set(joined)
        }
        self.branches.append(branch)
        self.deleted_total += len(branch)
        self.alive -= branch
        self.avoid = [a & self.alive for a in self.avoid]
        self.avoid.append(self.alive - neighborhood)
        return True

    def _check_preserved_post_join(
        self, subgraph: Graph, joined: set[int], avoid_local: list[set[int]]
    ) -> None:
        # domination and avoidance are monotone under vertex addition; re-check
        _, still_dominating = check_domination(
            subgraph, joined, self.params.domination_slack
        )
        if not still_dominating or not check_avoidance(joined, avoid_local):
            raise InternalInvariantError(
                "joining broke a property that is monotone under vertex addition"
            )


def run_pipeline(g: Graph, cfg: PipelineConfig) -> MinorCertificate:
    """Extract a complete-minor certificate from g under cfg.

    Raises DensityTooLowError if edge_count < d * vertex_count. In guarantee
    mode any mid-loop failure raises; in best-effort mode the loop simply
    stops and returns what was built (always a valid, possibly small,
    complete minor). A certificate that fails self-verification raises
    InternalInvariantError, since that can only be a bug.
    """
    d = cfg.d
    if g.vertex_count == 0:
        raise DensityTooLowError("density too low: the graph is empty")
    if g.edge_count < d * g.vertex_count:
        raise DensityTooLowError(
            f"density too low: {g.edge_count} edges < d*n = {d * g.vertex_count}"
        )
    rm = reduce_minor(g, d)
    dense, dense_map = extract_dense_neighborhood(rm)
    core, core_map = extract_connected_core(dense, d)

    loop = _IterationLoop(core, d, cfg)
    loop.run()

    minor_sets = [
        {dense_map[core_map[x]] for x in branch} for branch in loop.branches
    ]
    original_sets = expand_branch_sets(rm.trace, minor_sets)
    cert = MinorCertificate(
        order=len(original_sets),
        branch_sets=[sorted(s) for s in original_sets],
        d=d,
        seed=cfg.seed,
        mode=cfg.mode,
        iterations=len(loop.branches),
        sampler_rounds=loop.rounds_total,
        small_d_regime=(
            cfg.mode == MODE_GUARANTEE and guarantee_iteration_target(d) < 2
        ),
    )
    report = verify_certificate(g, cert.branch_sets)
    if not report.valid:
        details = "; ".join(str(v) for v in report.violations)
        raise InternalInvariantError(f"certificate self-verification failed: {details}")
    return cert
