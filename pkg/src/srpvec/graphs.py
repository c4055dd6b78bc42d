"""Directed graph data types and edge-list ingestion.

Two containers: :class:`DirectedGraph` (simple digraph, no self-loops) and
:class:`TemporalGraph` (timestamped directed event list).  Both are immutable
after construction and map arbitrary string node labels to dense integer ids
through a symbol table.

Edge-list format: whitespace-separated ``u v`` (static) or ``u v t`` lines,
``#`` starts a comment line, UTF-8.  Self-loops are dropped and counted;
duplicate static edges collapse; temporal events sort by ``(t, input order)``.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, EdgeListParseError


@dataclass(frozen=True)
class IngestionStats:
    """What was discarded or rewritten while reading an edge list."""

    dropped_self_loops: int = 0
    duplicate_edges: int = 0


class DirectedGraph:
    """Simple directed graph: node ids 0..n-1, no self-loops, no duplicates.

    Parameters
    ----------
    n : int
        Node count.  Nodes without incident edges are allowed.
    edges : iterable of (int, int)
        Ordered pairs (u, v), u != v.  Duplicates are rejected here (use
        the parsers for raw data that may contain them).
    labels : list of str, optional
        Symbol table mapping id -> original label.  Defaults to decimal ids.
    """

    def __init__(self, n, edges, labels=None, stats=IngestionStats()):
        edges = sorted(edges)
        self.n = int(n)
        self.m = len(edges)
        src = np.fromiter((e[0] for e in edges), dtype=np.int64, count=self.m)
        dst = np.fromiter((e[1] for e in edges), dtype=np.int64, count=self.m)
        if self.m:
            if src.min() < 0 or max(src.max(), dst.max()) >= self.n:
                raise DomainError("edge endpoint out of range 0..n-1")
            if np.any(src == dst):
                raise DomainError("self-loops are not allowed")
            if len(set(edges)) != self.m:
                raise DomainError("duplicate edges are not allowed")
        self.src = src
        self.dst = dst
        self.labels = list(labels) if labels is not None else [str(i) for i in range(self.n)]
        if len(self.labels) != self.n:
            raise DomainError("symbol table length must equal n")
        self.stats = stats
        self._edge_set = frozenset(zip(src.tolist(), dst.tolist()))

    @property
    def edges(self):
        return sorted(self._edge_set)

    def has_edge(self, u, v):
        return (u, v) in self._edge_set

    def out_neighbors(self):
        """Per-node sorted out-neighbor lists."""
        out = [[] for _ in range(self.n)]
        for u, v in zip(self.src.tolist(), self.dst.tolist()):
            out[u].append(v)
        return [sorted(x) for x in out]

    def undirected_neighbors(self):
        """Per-node sorted union of in- and out-neighbors."""
        nbrs = [set() for _ in range(self.n)]
        for u, v in zip(self.src.tolist(), self.dst.tolist()):
            nbrs[u].add(v)
            nbrs[v].add(u)
        return [sorted(s) for s in nbrs]

    def relabeled(self, perm):
        """Graph with node i renamed perm[i]; labels follow the nodes."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise DomainError("perm must be a permutation of 0..n-1")
        edges = [(perm[u], perm[v]) for u, v in self._edge_set]
        labels = [None] * self.n
        for i, p in enumerate(perm):
            labels[p] = self.labels[i]
        return DirectedGraph(self.n, edges, labels=labels, stats=self.stats)

    def sidecar(self):
        """Ingestion record emitted next to CLI outputs."""
        return {
            "n": self.n,
            "edge_count": self.m,
            "dropped_self_loops": self.stats.dropped_self_loops,
            "symbol_table": list(self.labels),
        }

    def __eq__(self, other):
        return (
            isinstance(other, DirectedGraph)
            and self.n == other.n
            and self._edge_set == other._edge_set
        )

    def __repr__(self):
        return f"DirectedGraph(n={self.n}, m={self.m})"


class TemporalGraph:
    """Timestamped directed event list, sorted by (t, input order).

    Events are tuples (u, v, t) with u != v and t a 64-bit integer.  The
    post-sort index order is the total order used by the motif counters;
    equal timestamps keep their input order.
    """

    def __init__(self, n, events, labels=None, stats=IngestionStats()):
        self.n = int(n)
        events = list(events)
        order = sorted(range(len(events)), key=lambda i: events[i][2])
        self.src = np.fromiter((events[i][0] for i in order), dtype=np.int64, count=len(events))
        self.dst = np.fromiter((events[i][1] for i in order), dtype=np.int64, count=len(events))
        self.t = np.fromiter((events[i][2] for i in order), dtype=np.int64, count=len(events))
        if len(events):
            if self.src.min() < 0 or max(self.src.max(), self.dst.max()) >= self.n:
                raise DomainError("event endpoint out of range 0..n-1")
            if np.any(self.src == self.dst):
                raise DomainError("self-loops are not allowed")
        self.labels = list(labels) if labels is not None else [str(i) for i in range(self.n)]
        if len(self.labels) != self.n:
            raise DomainError("symbol table length must equal n")
        self.stats = stats

    @property
    def num_events(self):
        return len(self.t)

    @property
    def events(self):
        return list(zip(self.src.tolist(), self.dst.tolist(), self.t.tolist()))

    def shifted(self, offset):
        """Same events with a constant added to every timestamp."""
        return TemporalGraph(
            self.n,
            [(u, v, t + offset) for u, v, t in self.events],
            labels=self.labels,
            stats=self.stats,
        )

    def relabeled(self, perm):
        """Events with node i renamed perm[i], timestamps untouched."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise DomainError("perm must be a permutation of 0..n-1")
        events = [(perm[u], perm[v], t) for u, v, t in self.events]
        labels = [None] * self.n
        for i, p in enumerate(perm):
            labels[p] = self.labels[i]
        return TemporalGraph(self.n, events, labels=labels, stats=self.stats)

    def sidecar(self):
        return {
            "n": self.n,
            "edge_count": self.num_events,
            "dropped_self_loops": self.stats.dropped_self_loops,
            "symbol_table": list(self.labels),
        }

    def __repr__(self):
        return f"TemporalGraph(n={self.n}, events={self.num_events})"


def static_projection(g: TemporalGraph) -> DirectedGraph:
    """Drop timestamps; distinct (u, v) pairs become the edge set."""
    edges = set(zip(g.src.tolist(), g.dst.tolist()))
    return DirectedGraph(g.n, edges, labels=g.labels, stats=g.stats)


def _iter_lines(text):
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    if isinstance(text, str):
        return io.StringIO(text)
    return text


def _tokens(text):
    """Yield (line_number, token list) for data lines."""
    for lineno, raw in enumerate(_iter_lines(text), start=1):
        if isinstance(raw, bytes):
            raw = raw.decode("utf-8")
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


class _SymbolTable:
    """First-appearance mapping from string labels to dense ids."""

    def __init__(self):
        self.ids = {}
        self.labels = []

    def intern(self, token):
        idx = self.ids.get(token)
        if idx is None:
            idx = len(self.labels)
            self.ids[token] = idx
            self.labels.append(token)
        return idx


def parse_static_edgelist(text) -> DirectedGraph:
    """Parse ``u v`` lines into a simple digraph.

    Accepts a str, bytes, or line iterable.  Node labels are arbitrary
    whitespace-free strings interned in first-appearance order.  Self-loops
    are dropped (counted), duplicate edges collapse (counted).
    """
    table = _SymbolTable()
    edges = set()
    loops = 0
    dups = 0
    for lineno, toks in _tokens(text):
        if len(toks) != 2:
            raise EdgeListParseError(f"expected 'u v', got {len(toks)} tokens", lineno)
        u = table.intern(toks[0])
        v = table.intern(toks[1])
        if u == v:
            loops += 1
            continue
        if (u, v) in edges:
            dups += 1
            continue
        edges.add((u, v))
    return DirectedGraph(
        len(table.labels),
        edges,
        labels=table.labels,
        stats=IngestionStats(dropped_self_loops=loops, duplicate_edges=dups),
    )


def parse_temporal_edgelist(text) -> TemporalGraph:
    """Parse ``u v t`` lines into a temporal graph.

    Timestamps must be integers (fractional input is rejected: every target
    dataset uses integer epochs).  Events are sorted by (t, input order).
    """
    table = _SymbolTable()
    events = []
    loops = 0
    for lineno, toks in _tokens(text):
        if len(toks) != 3:
            raise EdgeListParseError(f"expected 'u v t', got {len(toks)} tokens", lineno)
        try:
            t = int(toks[2])
        except ValueError:
            raise EdgeListParseError(f"malformed timestamp {toks[2]!r}", lineno) from None
        u = table.intern(toks[0])
        v = table.intern(toks[1])
        if u == v:
            loops += 1
            continue
        events.append((u, v, t))
    return TemporalGraph(
        len(table.labels),
        events,
        labels=table.labels,
        stats=IngestionStats(dropped_self_loops=loops),
    )


def serialize_static_edgelist(g: DirectedGraph) -> str:
    """Edge list using the original labels; re-parsing round-trips."""
    lines = [f"{g.labels[u]} {g.labels[v]}" for u, v in zip(g.src.tolist(), g.dst.tolist())]
    return "\n".join(lines) + ("\n" if lines else "")


def serialize_temporal_edgelist(g: TemporalGraph) -> str:
    lines = [f"{g.labels[u]} {g.labels[v]} {t}" for u, v, t in g.events]
    return "\n".join(lines) + ("\n" if lines else "")
