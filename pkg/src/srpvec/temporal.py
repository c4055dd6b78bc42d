"""Census of the 36 two/three-node, three-edge, time-windowed motifs.

A motif instance is a time-ordered triple of events (i < j < k in the event
total order) with t_k - t_i <= delta whose union spans at most 3 nodes.
Node roles: a = source of the first edge, b = its target, c = the first
additional node met scanning the second then the third edge (source before
target).  A motif code M[row, col] records the ordered pair of the second
edge (row) and the third edge (col) against the role order

    1: a->b   2: b->a   3: a->c   4: c->a   5: b->c   6: c->b

which fixes the row/column axes; counts are reported row-major M11..M66.
Triples are arbitrary subsequences inside the window, not only consecutive
events, and the window bound is inclusive.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import DomainError
from .graphs import TemporalGraph

#: Column labels in output order.
MOTIF_LABELS = tuple(f"M{r}{c}" for r in range(1, 7) for c in range(1, 7))


@dataclass(frozen=True)
class MotifCode:
    """One of the 36 motif classes, identified by (row, col) in 1..6."""

    row: int
    col: int

    @property
    def index(self):
        return (self.row - 1) * 6 + (self.col - 1)

    @property
    def label(self):
        return f"M{self.row}{self.col}"


@dataclass(frozen=True)
class TemporalMotifCensus:
    """Counts over the 36 codes (row-major) at window length delta."""

    counts: np.ndarray
    delta: int

    def __post_init__(self):
        object.__setattr__(self, "counts", np.asarray(self.counts, dtype=np.int64))
        if self.counts.shape != (36,):
            raise DomainError("temporal motif census must have 36 entries")

    @property
    def total(self):
        return int(self.counts.sum())

    def as_dict(self):
        return dict(zip(MOTIF_LABELS, self.counts.tolist()))


def _pair_code(u, v, a, b, c):
    """0-based code of ordered pair (u, v) against roles, or -1 if outside."""
    if u == a:
        if v == b:
            return 0
        if v == c:
            return 2
    elif u == b:
        if v == a:
            return 1
        if v == c:
            return 4
    elif u == c:
        if v == a:
            return 3
        if v == b:
            return 5
    return -1


def classify_triple(e1, e2, e3):
    """Motif code of three events already in the (t, input order) total order.

    Events are (u, v, t) tuples; only the endpoints matter here.  Returns
    None when the union of endpoints spans 4 or more nodes.
    """
    a, b = e1[0], e1[1]
    c = None
    codes = []
    for u, v in ((e2[0], e2[1]), (e3[0], e3[1])):
        if c is None:
            if u != a and u != b:
                c = u
            elif v != a and v != b:
                c = v
        code = _pair_code(u, v, a, b, c)
        if code < 0:
            return None
        codes.append(code)
    return MotifCode(codes[0] + 1, codes[1] + 1)


def temporal_motif_census(g: TemporalGraph, delta) -> TemporalMotifCensus:
    """Count every in-window time-ordered triple of events.

    Window-pruned double scan over the sorted event list; runs on the
    compiled kernel when available.
    """
    delta = int(delta)
    if delta <= 0:
        raise DomainError("delta must be positive")
    counts = _kernels.temporal_motif_counts(g.src, g.dst, g.t, delta)
    return TemporalMotifCensus(counts, delta)


def temporal_motif_oracle(g: TemporalGraph, delta) -> TemporalMotifCensus:
    """Ground truth by checking all C(N, 3) event triples (small N only)."""
    delta = int(delta)
    if delta <= 0:
        raise DomainError("delta must be positive")
    counts = np.zeros(36, dtype=np.int64)
    events = g.events
    for i, j, k in itertools.combinations(range(len(events)), 3):
        if events[k][2] - events[i][2] > delta:
            continue
        code = classify_triple(events[i], events[j], events[k])
        if code is not None:
            counts[code.index] += 1
    return TemporalMotifCensus(counts, delta)
