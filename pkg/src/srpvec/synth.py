"""Synthetic labeled-graph generators and manifest I/O.

A manifest is a directory of edge-list files plus ``labels.csv``
(``graph_id,label``); the graph_id is the filename stem.  Two generator
families are provided so end-to-end experiments are self-contained:

* ``reciprocity``: directed ER graphs with exactly ``edges`` directed edges,
  of which a fraction ``r`` sit in mutual dyads.  With r = 0 all chosen
  dyads carry a single arc in a random direction; with r = 0.8 forty
  percent of the distinct dyads are mutual.  Classes share n and the edge
  count, so only the dyad mix separates them.

* ``burst``: temporal graphs built from 3-event episodes of two shapes,
  ``repeat`` (the same arc three times, on a random pair) and ``cycle``
  (a directed 3-cycle on a random triple).  Every graph emits ``episodes``
  of each shape, so the static projections of all classes are identically
  distributed; classes differ only in time.  ``pattern`` names the shape
  whose episodes are emitted tight (internal gaps 1..2 ticks, inside any
  window delta >= 4) and ``burst`` is the fraction of them actually
  tightened; everything else spreads with gaps of 3*delta..8*delta, which
  also separate episodes, so in-window triples come (almost) only from
  tight episodes.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from math import isqrt
from pathlib import Path

import numpy as np

from .errors import ConfigError
from .graphs import (
    DirectedGraph,
    TemporalGraph,
    parse_static_edgelist,
    parse_temporal_edgelist,
    serialize_static_edgelist,
    serialize_temporal_edgelist,
)
from .util import derive_seed


@dataclass(frozen=True)
class ReciprocityClass:
    """One class of static graphs: reciprocity r at fixed n and edge count."""

    r: float
    n: int = 100
    edges: int = 600

    def label_token(self):
        return f"r{self.r:g}"


@dataclass(frozen=True)
class BurstClass:
    """One class of temporal graphs: which episode shape bursts, how often."""

    pattern: str  # "repeat" | "cycle": the shape emitted tight
    burst: float = 1.0
    n: int = 30
    episodes: int = 40  # per shape; total events = 6 * episodes
    delta: int = 8

    def label_token(self):
        return f"{self.pattern}{self.burst:g}"


def reciprocity_graph(spec: ReciprocityClass, seed) -> DirectedGraph:
    """Exact-edge-count digraph with round(r * edges / 2) mutual dyads."""
    n, m, r = spec.n, spec.edges, spec.r
    if not 0.0 <= r <= 1.0:
        raise ConfigError("reciprocity r must be in [0, 1]")
    mutual = round(r * m / 2)
    single = m - 2 * mutual
    if single < 0:
        raise ConfigError("edge count too small for requested reciprocity")
    if mutual + single > n * (n - 1) // 2:
        raise ConfigError("edge count exceeds available dyads")
    rng = np.random.default_rng(seed)
    dyads = rng.choice(n * (n - 1) // 2, size=mutual + single, replace=False)
    edges = []
    for i, d in enumerate(dyads.tolist()):
        # dyad rank -> unordered pair (b, a), b < a, via triangular numbers
        a = (isqrt(8 * d + 1) - 1) // 2 + 1
        b = d - a * (a - 1) // 2
        if i < mutual:
            edges.append((b, a))
            edges.append((a, b))
        elif rng.random() < 0.5:
            edges.append((b, a))
        else:
            edges.append((a, b))
    return DirectedGraph(n, edges)


_PATTERNS = dict(
    repeat=((0, 1), (0, 1), (0, 1)),
    cycle=((0, 1), (1, 2), (2, 0)),
)


def burst_graph(spec: BurstClass, seed) -> TemporalGraph:
    """Episode-structured temporal graph; see the module docstring."""
    if spec.pattern not in _PATTERNS:
        raise ConfigError(f"unknown burst pattern {spec.pattern!r}")
    if not 0.0 <= spec.burst <= 1.0:
        raise ConfigError("burst fraction must be in [0, 1]")
    if spec.n < 3 or spec.episodes < 1 or spec.delta < 4:
        raise ConfigError("burst generator needs n >= 3, episodes >= 1, delta >= 4")
    rng = np.random.default_rng(seed)
    shapes = ["repeat", "cycle"] * spec.episodes
    rng.shuffle(shapes)
    events = []
    t = 0
    for shape in shapes:
        t += int(rng.integers(3 * spec.delta, 8 * spec.delta + 1))
        roles = _PATTERNS[shape]
        n_roles = max(max(p) for p in roles) + 1
        nodes = rng.choice(spec.n, size=n_roles, replace=False).tolist()
        tight = shape == spec.pattern and rng.random() < spec.burst
        for step, (su, sv) in enumerate(roles):
            if step > 0:
                if tight:
                    t += int(rng.integers(1, 3))
                else:
                    t += int(rng.integers(3 * spec.delta, 8 * spec.delta + 1))
            events.append((nodes[su], nodes[sv], t))
    return TemporalGraph(spec.n, events)


@dataclass
class Manifest:
    """Labeled graphs loaded from (or about to be written to) a directory."""

    graph_ids: list
    graphs: list
    labels: list  # raw label strings aligned with graph_ids

    def __len__(self):
        return len(self.graph_ids)


def generate_manifest(classes, per_class: int, out_dir, seed: int) -> Manifest:
    """Write ``per_class`` graphs for each class spec plus labels.csv.

    Class labels are 1..D in the order the specs are given; file names are
    ``c{label}_{token}_{index}``.  Every graph's RNG seed derives from the
    run seed, the class index and the graph index, so manifests are
    byte-reproducible.
    """
    if per_class < 1:
        raise ConfigError("per_class must be >= 1")
    if not classes:
        raise ConfigError("at least one class spec is required")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    graph_ids, graphs, labels = [], [], []
    for ci, spec in enumerate(classes, start=1):
        for gi in range(per_class):
            gseed = derive_seed(seed, f"class{ci}", f"graph{gi}")
            if isinstance(spec, ReciprocityClass):
                g = reciprocity_graph(spec, gseed)
                text = serialize_static_edgelist(g)
            elif isinstance(spec, BurstClass):
                g = burst_graph(spec, gseed)
                text = serialize_temporal_edgelist(g)
            else:
                raise ConfigError(f"unknown class spec {spec!r}")
            gid = f"c{ci}_{spec.label_token()}_{gi:03d}"
            (out_dir / f"{gid}.txt").write_text(text, encoding="utf-8")
            graph_ids.append(gid)
            graphs.append(g)
            labels.append(str(ci))
    with open(out_dir / "labels.csv", "w", encoding="utf-8", newline="\n") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["graph_id", "label"])
        writer.writerows(zip(graph_ids, labels))
    return Manifest(graph_ids, graphs, labels)


def load_manifest(directory) -> Manifest:
    """Read every *.txt edge list in a manifest directory.

    Files whose first data line has three columns parse as temporal graphs,
    two columns as static.  labels.csv is optional; missing labels load as
    None.
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise ConfigError(f"not a manifest directory: {directory}")
    label_of = {}
    labels_file = directory / "labels.csv"
    if labels_file.exists():
        with open(labels_file, encoding="utf-8") as fh:
            for row in csv.DictReader(fh):
                label_of[row["graph_id"]] = row["label"]
    graph_ids, graphs, labels = [], [], []
    for path in sorted(directory.glob("*.txt")):
        graphs.append(load_edgelist(path))
        graph_ids.append(path.stem)
        labels.append(label_of.get(path.stem))
    if not graphs:
        raise ConfigError(f"no *.txt edge lists in {directory}")
    return Manifest(graph_ids, graphs, labels)


def load_edgelist(path):
    """Parse one edge-list file, sniffing static vs temporal by column count."""
    text = Path(path).read_text(encoding="utf-8")
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if len(stripped.split()) == 3:
            return parse_temporal_edgelist(text)
        return parse_static_edgelist(text)
    return parse_static_edgelist(text)
