"""Significance-profile feature vectors from censuses and null expectations.

For each graphlet class the damped ratio

    delta_i = (N_obs_i - <N_rand_i>) / (N_obs_i + <N_rand_i> + epsilon)

compares the observed count to the null-model mean; the embedding is the
L2-normalized delta vector (a subgraph ratio profile).  ``epsilon`` keeps
rare classes from dominating and defaults to 4.  A graph indistinguishable
from its null has an all-zero delta vector; normalization is then undefined
and the zero vector is emitted with a ``zero_delta`` metadata flag so the
dimension stays fixed.

Static embeddings are 16-d (triads vs NE), temporal 36-d (windowed motifs
vs timestamp shuffles), and combined 52-d (static block first).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .graphs import DirectedGraph, TemporalGraph
from .nullmodels import (
    NE_ANALYTIC,
    NullExpectation,
    ne_expected_triads,
    ne_simulated_triads,
    shuffle_expected_motifs,
)
from .temporal import temporal_motif_census
from .triads import triad_census

DEFAULT_EPSILON = 4.0

STATIC_DIM = 16
TEMPORAL_DIM = 36
COMBINED_DIM = STATIC_DIM + TEMPORAL_DIM


@dataclass(frozen=True)
class EmbeddingVector:
    """A feature vector with provenance metadata.

    kind is "static", "temporal" or "combined"; values have length 16, 36
    or 52 accordingly.  metadata records at least graph_id and the null
    model descriptor, plus zero_delta when the vector collapsed to zero.
    """

    values: np.ndarray
    kind: str
    epsilon: float
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "values", np.asarray(self.values, dtype=np.float64))
        expected = {"static": STATIC_DIM, "temporal": TEMPORAL_DIM, "combined": COMBINED_DIM}
        if self.kind not in expected:
            raise DomainError(f"unknown embedding kind {self.kind!r}")
        if self.values.shape != (expected[self.kind],):
            raise DomainError(
                f"{self.kind} embedding must have {expected[self.kind]} entries"
            )

    @property
    def graph_id(self):
        return self.metadata.get("graph_id")


def delta(observed, expected: NullExpectation | np.ndarray, epsilon=DEFAULT_EPSILON):
    """Damped observed-vs-null ratios; every entry lies strictly in (-1, 1)."""
    obs = np.asarray(observed, dtype=np.float64)
    exp = np.asarray(
        expected.means if isinstance(expected, NullExpectation) else expected,
        dtype=np.float64,
    )
    if obs.shape != exp.shape:
        raise DomainError("observed and expected vectors differ in length")
    if epsilon <= 0:
        raise DomainError("epsilon must be positive")
    if np.any(obs < 0) or np.any(exp < 0):
        raise DomainError("counts must be non-negative")
    out = (obs - exp) / (obs + exp + epsilon)
    if np.any(np.abs(out) >= 1.0):
        raise AssertionError("delta out of (-1, 1); inputs violate the contract")
    return out


def srp(deltas) -> np.ndarray:
    """L2-normalize; an all-zero delta vector stays the zero vector."""
    deltas = np.asarray(deltas, dtype=np.float64)
    norm = np.linalg.norm(deltas)
    if norm == 0.0:
        return np.zeros_like(deltas)
    return deltas / norm


def static_embedding(
    g: DirectedGraph,
    epsilon=DEFAULT_EPSILON,
    model=NE_ANALYTIC,
    samples=0,
    seed=None,
    graph_id=None,
) -> EmbeddingVector:
    """16-d profile of the triad census against the NE null."""
    observed = triad_census(g).counts
    if model == NE_ANALYTIC:
        expected = ne_expected_triads(g.n, g.m)
    else:
        expected = ne_simulated_triads(g.n, g.m, samples, seed)
    d = delta(observed, expected, epsilon)
    values = srp(d)
    meta = {"graph_id": graph_id, "null_model": expected.describe()}
    if not values.any():
        meta["zero_delta"] = True
    return EmbeddingVector(values, "static", float(epsilon), meta)


def temporal_embedding(
    g: TemporalGraph,
    delta_window,
    samples,
    seed,
    epsilon=DEFAULT_EPSILON,
    graph_id=None,
) -> EmbeddingVector:
    """36-d profile of the motif census against the shuffle ensemble."""
    if g.num_events < 3:
        raise DomainError("temporal embedding needs at least 3 events")
    observed = temporal_motif_census(g, delta_window).counts
    expected = shuffle_expected_motifs(g, delta_window, samples, seed)
    d = delta(observed, expected, epsilon)
    values = srp(d)
    meta = {
        "graph_id": graph_id,
        "null_model": expected.describe(),
        "delta": int(delta_window),
    }
    if not values.any():
        meta["zero_delta"] = True
    return EmbeddingVector(values, "temporal", float(epsilon), meta)


def concat(a: EmbeddingVector, b: EmbeddingVector) -> EmbeddingVector:
    """Concatenate two embeddings of the same graph, a's block first.

    The pipeline always calls this as concat(static, temporal); the reverse
    order would be a different (valid) vector.
    """
    if a.graph_id != b.graph_id:
        raise DomainError(
            f"graph_id mismatch: {a.graph_id!r} vs {b.graph_id!r}"
        )
    meta = {
        "graph_id": a.graph_id,
        "blocks": [
            {"kind": a.kind, "length": len(a.values), **{k: v for k, v in a.metadata.items() if k != "graph_id"}},
            {"kind": b.kind, "length": len(b.values), **{k: v for k, v in b.metadata.items() if k != "graph_id"}},
        ],
    }
    return EmbeddingVector(
        np.concatenate([a.values, b.values]), "combined", a.epsilon, meta
    )
