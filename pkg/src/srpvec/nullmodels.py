"""Expected graphlet counts under null models.

Static graphs use the equal-nodes-equal-edges (NE) random digraph null,
either analytically (independent edges with p = m / n(n-1)) or by Monte
Carlo over digraphs with exactly m edges.  Temporal graphs use a
timestamp-shuffle ensemble: permute the timestamp multiset over the fixed
(u, v) pair list, which preserves the static projection exactly.

Randomness: numpy PCG64, sample s of a run seeded with ``seed + s``; the
generator name and root seed are recorded on the result.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import DomainError
from .graphs import DirectedGraph, TemporalGraph
from .temporal import temporal_motif_census
from .triads import EDGE_COUNTS, LABELED_COUNTS, triad_census

RNG_ALGORITHM = "numpy PCG64"

NE_ANALYTIC = "ne-analytic"
NE_SIMULATED = "ne-sim"
TIME_SHUFFLE = "shuffle"


@dataclass(frozen=True)
class NullExpectation:
    """Mean graphlet counts (length 16 or 36) under one null model."""

    means: np.ndarray
    model: str
    samples: int = 0
    seed: int | None = None
    rng: str = RNG_ALGORITHM
    delta: int | None = None

    def __post_init__(self):
        means = np.asarray(self.means, dtype=np.float64)
        object.__setattr__(self, "means", means)
        if means.shape not in ((16,), (36,)):
            raise DomainError("null expectation must have 16 or 36 entries")
        if np.any(means < 0):
            raise DomainError("null means must be non-negative")

    def describe(self):
        out = {"model": self.model, "samples": self.samples}
        if self.samples:
            out["seed"] = self.seed
            out["rng"] = self.rng
        if self.delta is not None:
            out["delta"] = self.delta
        return out


def ne_expected_triads(n: int, m: int) -> NullExpectation:
    """Analytic NE triad means: C(n,3) * w_i * p^e_i * (1-p)^(6-e_i).

    p = m / n(n-1) treats edges as independent; the occupancy identity
    sum_i w_i p^e (1-p)^(6-e) = 1 makes the means total C(n, 3).
    """
    if n < 3:
        raise DomainError("NE expectation needs n >= 3")
    if not 0 <= m <= n * (n - 1):
        raise DomainError("edge count out of range for a simple digraph")
    p = m / (n * (n - 1))
    means = comb(n, 3) * LABELED_COUNTS * p ** EDGE_COUNTS * (1.0 - p) ** (6 - EDGE_COUNTS)
    return NullExpectation(means, NE_ANALYTIC)


def ne_expected_triads_exact_m(n: int, m: int) -> NullExpectation:
    """Exact triad means when the null fixes exactly m edges.

    This is the quantity the Monte-Carlo estimator converges to; it differs
    from the analytic independent-edge means by hypergeometric corrections
    of order e^2 / m.  Exposed for diagnostics and tests.
    """
    if n < 3:
        raise DomainError("NE expectation needs n >= 3")
    K = n * (n - 1)
    if not 0 <= m <= K:
        raise DomainError("edge count out of range for a simple digraph")
    den = comb(K, m)
    means = np.array(
        [
            comb(n, 3) * w * (comb(K - 6, m - e) / den if m >= e else 0.0)
            for w, e in zip(LABELED_COUNTS.tolist(), EDGE_COUNTS.tolist())
        ]
    )
    return NullExpectation(means, "ne-exact-m")


def random_fixed_m_digraph(n: int, m: int, rng) -> tuple[np.ndarray, np.ndarray]:
    """Uniform simple digraph with exactly m edges, as (src, dst) arrays."""
    K = n * (n - 1)
    idx = rng.choice(K, size=m, replace=False)
    src = idx // (n - 1)
    rem = idx % (n - 1)
    dst = rem + (rem >= src)
    return src.astype(np.int64), dst.astype(np.int64)


def ne_simulated_triads(n: int, m: int, samples: int, seed: int) -> NullExpectation:
    """Monte-Carlo NE triad means over `samples` exact-m digraphs."""
    if samples < 1:
        raise DomainError("samples must be >= 1")
    if n < 3:
        raise DomainError("NE expectation needs n >= 3")
    if not 0 <= m <= n * (n - 1):
        raise DomainError("edge count out of range for a simple digraph")
    acc = np.zeros(16, dtype=np.float64)
    for s in range(samples):
        rng = np.random.default_rng(seed + s)
        src, dst = random_fixed_m_digraph(n, m, rng)
        g = DirectedGraph(n, list(zip(src.tolist(), dst.tolist())))
        acc += triad_census(g).counts
    return NullExpectation(acc / samples, NE_SIMULATED, samples=samples, seed=seed)


def shuffled_timestamps(g: TemporalGraph, samples: int, seed: int):
    """Yield `samples` graphs with the timestamp multiset permuted over the
    fixed pair list.  Static projection and timestamp multiset are invariant.
    """
    events = g.events
    times = g.t.copy()
    for s in range(samples):
        rng = np.random.default_rng(seed + s)
        perm = rng.permutation(len(times))
        shuffled = [(u, v, int(times[perm[i]])) for i, (u, v, _) in enumerate(events)]
        yield TemporalGraph(g.n, shuffled, labels=g.labels, stats=g.stats)


def shuffle_expected_motifs(
    g: TemporalGraph, delta, samples: int, seed: int
) -> NullExpectation:
    """Mean motif counts over a timestamp-shuffle ensemble.

    Fewer than 3 events admit no triples; the means are zero by definition.
    """
    delta = int(delta)
    if delta <= 0:
        raise DomainError("delta must be positive")
    if samples < 1:
        raise DomainError("samples must be >= 1")
    acc = np.zeros(36, dtype=np.float64)
    if g.num_events >= 3:
        for shuffled in shuffled_timestamps(g, samples, seed):
            acc += temporal_motif_census(shuffled, delta).counts
    return NullExpectation(
        acc / samples, TIME_SHUFFLE, samples=samples, seed=seed, delta=delta
    )
