"""Census of the 16 directed 3-node isomorphism classes.

The classes carry the standard sociometric M-A-N codes (counts of Mutual,
Asymmetric and Null dyads plus an orientation suffix), indexed in census
order 003 .. 300.  The 64-entry labeled-triad lookup table, the per-class
labeled-configuration counts ``w`` and edge counts ``e`` are all generated
at import time by canonicalizing the 64 labeled 3-node digraphs over the 6
node permutations; nothing is hand-entered.

Edge bits for a labeled triad on nodes (a, b, c) follow PAIR_ORDER:
bit i set means the i-th ordered pair is an edge.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

import numpy as np

from . import _kernels
from .errors import DomainError
from .graphs import DirectedGraph

#: Ordered node pairs of a labeled triad, in bit order.
PAIR_ORDER = ((0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1))

#: Standard census order of the M-A-N codes.
CENSUS_ORDER = (
    "003", "012", "102", "021D", "021U", "021C", "111D", "111U",
    "030T", "030C", "201", "120D", "120U", "120C", "210", "300",
)


@dataclass(frozen=True)
class TriadClass:
    """One isomorphism class: census index, M-A-N code, e edges, w labeled configs."""

    index: int
    code: str
    edge_count: int
    labeled_count: int


@dataclass(frozen=True)
class TriadCensus:
    """Counts over the 16 classes for one graph, in census order."""

    counts: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "counts", np.asarray(self.counts, dtype=np.int64))
        if self.counts.shape != (16,):
            raise DomainError("triad census must have 16 entries")

    @property
    def total(self):
        return int(self.counts.sum())

    def as_dict(self):
        return dict(zip(CENSUS_ORDER, self.counts.tolist()))


def _permute_bits(bits: int, perm) -> int:
    """Edge bits after renaming node i to perm[i]."""
    out = 0
    for i, (u, v) in enumerate(PAIR_ORDER):
        if bits >> i & 1:
            out |= 1 << PAIR_ORDER.index((perm[u], perm[v]))
    return out


def _canonical(bits: int) -> int:
    return min(_permute_bits(bits, p) for p in itertools.permutations(range(3)))


def _man_code(rep: int) -> str:
    """M-A-N code of a class representative, suffix by orientation rules.

    Suffixes follow the usual catalog: 021D A<-B->C, 021U A->B<-C,
    021C A->B->C, 111D A<->B<-C, 111U A<->B->C, 030T transitive,
    030C cyclic, 120D A<-B->C plus A<->C, 120U A->B<-C plus A<->C,
    120C A->B->C plus A<->C.
    """
    has = [bool(rep >> i & 1) for i in range(6)]
    dyads = [(0, 1), (0, 2), (1, 2)]  # bit pairs (2k, 2k+1) in PAIR_ORDER
    kinds = []
    for k in range(3):
        fwd, rev = has[2 * k], has[2 * k + 1]
        kinds.append("M" if fwd and rev else ("A" if fwd or rev else "N"))
    m = kinds.count("M")
    a = kinds.count("A")
    base = f"{m}{a}{3 - m - a}"

    outdeg = [0, 0, 0]
    indeg = [0, 0, 0]
    for i, (u, v) in enumerate(PAIR_ORDER):
        if has[i]:
            outdeg[u] += 1
            indeg[v] += 1

    if base == "021":
        if 2 in outdeg:
            return "021D"
        if 2 in indeg:
            return "021U"
        return "021C"
    if base == "030":
        return "030C" if outdeg == [1, 1, 1] else "030T"
    if base in ("111", "120"):
        mutual = dyads[kinds.index("M")]
        z = ({0, 1, 2} - set(mutual)).pop()
        n_asym = 1 if base == "111" else 2
        if outdeg[z] == n_asym:
            return base + "D"
        if indeg[z] == n_asym:
            return base + "U"
        return base + "C"
    return base


def _build_tables():
    groups = {}
    for bits in range(64):
        groups.setdefault(_canonical(bits), []).append(bits)
    assert len(groups) == 16
    named = {}
    for rep, members in groups.items():
        code = _man_code(rep)
        assert code not in named, f"duplicate code {code}"
        named[code] = members
    assert set(named) == set(CENSUS_ORDER)

    classes = []
    class_of_mask = np.empty(64, dtype=np.uint8)
    for index, code in enumerate(CENSUS_ORDER):
        members = named[code]
        edge_counts = {bin(b).count("1") for b in members}
        assert len(edge_counts) == 1
        classes.append(TriadClass(index, code, edge_counts.pop(), len(members)))
        for b in members:
            class_of_mask[b] = index
    return tuple(classes), class_of_mask


#: The 16 classes in census order, and the 64-entry labeled-triad lookup.
TRIAD_CLASSES, CLASS_OF_MASK = _build_tables()

#: Per-class labeled-configuration counts and edge counts, census order.
LABELED_COUNTS = np.array([c.labeled_count for c in TRIAD_CLASSES], dtype=np.int64)
EDGE_COUNTS = np.array([c.edge_count for c in TRIAD_CLASSES], dtype=np.int64)


def classify_labeled_triad(bits: int) -> TriadClass:
    """Isomorphism class of a labeled triad given its 6 edge bits."""
    if not 0 <= bits < 64:
        raise DomainError("bits must be in 0..63")
    return TRIAD_CLASSES[CLASS_OF_MASK[bits]]


def triad_bits(g: DirectedGraph, x, y, z) -> int:
    """Edge bits of the induced labeled triad on (x, y, z)."""
    bits = 0
    for i, (u, v) in enumerate(PAIR_ORDER):
        nodes = (x, y, z)
        if g.has_edge(nodes[u], nodes[v]):
            bits |= 1 << i
    return bits


def triad_census(g: DirectedGraph) -> TriadCensus:
    """Count all node triples per class; disconnected classes included.

    Connected triples are enumerated from their lexicographically smallest
    non-null dyad; single-dyad and empty triples are counted in closed form,
    so sparse graphs avoid the O(n^3) scan.  Runs on the compiled kernel
    when available, else the pure-Python fallback.
    """
    if g.n < 3:
        raise DomainError("triad census needs n >= 3")
    counts = _kernels.triad_counts(g, CLASS_OF_MASK)
    counts[0] = comb(g.n, 3) - int(counts[1:].sum())
    return TriadCensus(counts)


def triad_census_oracle(g: DirectedGraph) -> TriadCensus:
    """Ground truth by classifying every one of the C(n, 3) triples."""
    if g.n < 3:
        raise DomainError("triad census needs n >= 3")
    counts = np.zeros(16, dtype=np.int64)
    for x, y, z in itertools.combinations(range(g.n), 3):
        counts[CLASS_OF_MASK[triad_bits(g, x, y, z)]] += 1
    return TriadCensus(counts)
