"""scikit-learn style front end for complete-minor extraction.

The extractor behaves like an unsupervised estimator: hyperparameters in the
constructor, ``fit(X)`` on an adjacency matrix (or Graph), and fitted
attributes describing the extracted minor. ``labels_`` assigns each vertex
its branch-set index, -1 for vertices outside every branch set, so
``fit_predict`` reads like clustering with noise.
"""

from __future__ import annotations

from typing import Any, Optional

import numpy as np
from sklearn.base import BaseEstimator

from .errors import DensityTooLowError
from .pipeline import MODE_BEST_EFFORT, MinorCertificate, PipelineConfig, run_pipeline
from .validation import as_graph


class CompleteMinorExtractor(BaseEstimator):
    """Extract a large complete-graph minor from an undirected graph.

    Parameters
    ----------
    d : int or None
        Density parameter; the input must have at least d * n edges. None
        picks floor(m / n) from the fitted graph.
    seed : int
        Seed for the extraction's randomness; fixed seed, fixed output.
    mode : str
        "best-effort" (default) runs until a safety check fails;
        "guarantee" runs the fixed theorem-backed iteration count.
    max_retries : int
        Las-Vegas retry cap per sampling stage.
    iteration_override : int or None
        Force the loop length (benchmarks); safety checks still apply.

    Attributes
    ----------
    order_ : int
        Number of branch sets extracted (the complete minor's order).
    branch_sets_ : list[list[int]]
        Pairwise-disjoint connected vertex sets, one per branch.
    labels_ : ndarray of shape (n_vertices,)
        Branch index per vertex, -1 where unused.
    certificate_ : MinorCertificate
        Full certificate including run metadata.
    d_ : int
        The density parameter actually used.
    """

    def __init__(
        self,
        d: Optional[int] = None,
        seed: int = 0,
        mode: str = MODE_BEST_EFFORT,
        max_retries: int = 1000,
        iteration_override: Optional[int] = None,
    ) -> None:
        self.d = d
        self.seed = seed
        self.mode = mode
        self.max_retries = max_retries
        self.iteration_override = iteration_override

    def fit(self, X: Any, y: Any = None) -> "CompleteMinorExtractor":
        g = as_graph(X)
        if self.d is not None:
            d = self.d
        else:
            if g.vertex_count == 0 or g.edge_count < g.vertex_count:
                raise DensityTooLowError(
                    "cannot auto-pick d: graph needs at least as many edges as vertices"
                )
            d = g.edge_count // g.vertex_count
        cfg = PipelineConfig(
            d=d,
            seed=self.seed,
            mode=self.mode,
            retry_cap=self.max_retries,
            iteration_override=self.iteration_override,
        )
        cert: MinorCertificate = run_pipeline(g, cfg)
        labels = np.full(g.vertex_count, -1, dtype=int)
        for i, branch in enumerate(cert.branch_sets):
            labels[branch] = i
        self.n_vertices_ = g.vertex_count
        self.d_ = d
        self.certificate_ = cert
        self.branch_sets_ = [list(b) for b in cert.branch_sets]
        self.order_ = cert.order
        self.labels_ = labels
        return self

    def fit_predict(self, X: Any, y: Any = None) -> np.ndarray:
        """Fit and return the per-vertex branch labels (-1 = unused)."""
        return self.fit(X, y).labels_
