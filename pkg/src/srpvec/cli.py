"""Command-line pipeline: ingest -> census -> null model -> embed -> classify.

Inputs are edge-list files (``u v`` or ``u v t`` lines) or one manifest
directory (edge lists plus labels.csv).  Static subcommands accept temporal
inputs by projecting timestamps away.  Every command writes its artifact
plus a deterministic ``*.meta.json`` provenance sidecar, and reruns with
identical flags and seed produce byte-identical files.

Exit codes: 0 success, 2 config error, 3 I/O error, 4 domain or data error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .classify import ClassifierConfig, Dataset, cross_validate
from .embedding import concat, static_embedding, temporal_embedding
from .errors import ConfigError, DomainError, EdgeListParseError
from .graphs import DirectedGraph, TemporalGraph, static_projection
from .nullmodels import (
    NE_ANALYTIC,
    NE_SIMULATED,
    TIME_SHUFFLE,
    ne_expected_triads,
    ne_simulated_triads,
    shuffle_expected_motifs,
)
from .synth import (
    BurstClass,
    Manifest,
    ReciprocityClass,
    generate_manifest,
    load_edgelist,
    load_manifest,
)
from .temporal import MOTIF_LABELS, temporal_motif_census
from .triads import CENSUS_ORDER, triad_census
from .util import derive_seed, format_float


def _collect(inputs) -> Manifest:
    paths = [Path(p) for p in inputs]
    if len(paths) == 1 and paths[0].is_dir():
        return load_manifest(paths[0])
    graph_ids, graphs = [], []
    for p in paths:
        if not p.exists():
            raise FileNotFoundError(f"input not found: {p}")
        graphs.append(load_edgelist(p))
        graph_ids.append(p.stem)
    if not graphs:
        raise ConfigError("no inputs given")
    return Manifest(graph_ids, graphs, [None] * len(graphs))


def _as_static(graph):
    return static_projection(graph) if isinstance(graph, TemporalGraph) else graph


def _require_temporal(graph, gid):
    if not isinstance(graph, TemporalGraph):
        raise DomainError(f"{gid}: temporal input (u v t) required")
    return graph


def _write_csv(path, header, rows):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def _write_meta(out_path, command, config, manifest: Manifest):
    meta = {
        "tool": "srpvec",
        "version": __version__,
        "command": command,
        "config": config,
        "graphs": {
            gid: g.sidecar() for gid, g in zip(manifest.graph_ids, manifest.graphs)
        },
    }
    path = Path(out_path).with_suffix(Path(out_path).suffix + ".meta.json")
    path.write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def _cmd_census(args):
    manifest = _collect(args.inputs)
    rows = []
    for gid, g in zip(manifest.graph_ids, manifest.graphs):
        counts = triad_census(_as_static(g)).counts
        rows.append([gid] + counts.tolist())
    _write_csv(args.out, ["graph_id"] + list(CENSUS_ORDER), rows)
    _write_meta(args.out, "census", {"inputs": list(args.inputs)}, manifest)


def _cmd_motifs(args):
    manifest = _collect(args.inputs)
    rows = []
    for gid, g in zip(manifest.graph_ids, manifest.graphs):
        counts = temporal_motif_census(_require_temporal(g, gid), args.delta).counts
        rows.append([gid] + counts.tolist())
    _write_csv(args.out, ["graph_id"] + list(MOTIF_LABELS), rows)
    _write_meta(
        args.out, "motifs", {"inputs": list(args.inputs), "delta": args.delta}, manifest
    )


def _cmd_nullmodel(args):
    manifest = _collect(args.inputs)
    rows = []
    if args.model in (NE_ANALYTIC, NE_SIMULATED):
        header = ["graph_id"] + list(CENSUS_ORDER)
        for gid, g in zip(manifest.graph_ids, manifest.graphs):
            g = _as_static(g)
            if args.model == NE_ANALYTIC:
                exp = ne_expected_triads(g.n, g.m)
            else:
                exp = ne_simulated_triads(
                    g.n, g.m, args.samples, derive_seed(args.seed, gid)
                )
            rows.append([gid] + [format_float(x) for x in exp.means])
    elif args.model == TIME_SHUFFLE:
        if args.delta is None:
            raise ConfigError("--delta is required for the shuffle model")
        header = ["graph_id"] + list(MOTIF_LABELS)
        for gid, g in zip(manifest.graph_ids, manifest.graphs):
            exp = shuffle_expected_motifs(
                _require_temporal(g, gid),
                args.delta,
                args.samples,
                derive_seed(args.seed, gid),
            )
            rows.append([gid] + [format_float(x) for x in exp.means])
    else:
        raise ConfigError(f"unknown null model {args.model!r}")
    _write_csv(args.out, header, rows)
    _write_meta(
        args.out,
        "nullmodel",
        {
            "inputs": list(args.inputs),
            "model": args.model,
            "samples": args.samples,
            "seed": args.seed,
            "delta": args.delta,
            "seed_derivation": "blake2b(seed, graph_id)",
        },
        manifest,
    )


def _embedding_for(gid, graph, args):
    if args.mode == "static":
        return static_embedding(_as_static(graph), epsilon=args.epsilon, graph_id=gid)
    tg = _require_temporal(graph, gid)
    seed = derive_seed(args.seed, gid)
    temporal = temporal_embedding(
        tg, args.delta, args.samples, seed, epsilon=args.epsilon, graph_id=gid
    )
    if args.mode == "temporal":
        return temporal
    static = static_embedding(static_projection(tg), epsilon=args.epsilon, graph_id=gid)
    return concat(static, temporal)


def _cmd_embed(args):
    if args.mode in ("temporal", "both") and args.delta is None:
        raise ConfigError(f"--delta is required for --mode {args.mode}")
    manifest = _collect(args.inputs)
    vectors = [
        _embedding_for(gid, g, args)
        for gid, g in zip(manifest.graph_ids, manifest.graphs)
    ]
    dim = len(vectors[0].values)
    with_labels = all(lbl is not None for lbl in manifest.labels)
    header = ["graph_id"] + (["label"] if with_labels else [])
    header += [f"f{i}" for i in range(1, dim + 1)]
    rows = []
    for vec, lbl in zip(vectors, manifest.labels):
        row = [vec.graph_id] + ([lbl] if with_labels else [])
        rows.append(row + [format_float(x) for x in vec.values])
    _write_csv(args.out, header, rows)
    meta_cfg = {
        "inputs": list(args.inputs),
        "mode": args.mode,
        "epsilon": args.epsilon,
        "delta": args.delta,
        "samples": args.samples,
        "seed": args.seed,
        "seed_derivation": "blake2b(seed, graph_id)",
        "embeddings": {
            v.graph_id: {k: val for k, val in v.metadata.items() if k != "graph_id"}
            for v in vectors
        },
    }
    _write_meta(args.out, "embed", meta_cfg, manifest)


def load_feature_csv(path) -> Dataset:
    """Read an embed CSV (graph_id,label,f1..fm) back into a Dataset."""
    with open(path, encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or header[0] != "graph_id":
            raise ConfigError(f"{path}: not a feature CSV")
        if len(header) < 2 or header[1] != "label":
            raise ConfigError(f"{path}: label column required for classification")
        gids, raw_labels, feats = [], [], []
        width = len(header)
        for lineno, row in enumerate(reader, start=2):
            if len(row) != width:
                raise ConfigError(f"{path}:{lineno}: expected {width} columns")
            try:
                feats.append([float(x) for x in row[2:]])
            except ValueError:
                raise ConfigError(f"{path}:{lineno}: non-numeric feature value") from None
            gids.append(row[0])
            raw_labels.append(row[1])
    if not gids:
        raise ConfigError(f"{path}: no feature rows")
    classes = sorted(set(raw_labels))
    y = [classes.index(lbl) + 1 for lbl in raw_labels]
    return Dataset(gids, np.array(feats), np.array(y), class_names=classes)


def _cmd_classify(args):
    data = load_feature_csv(args.features)
    config = ClassifierConfig(
        model=args.model,
        k=args.k,
        metric=args.metric,
        l2=args.l2,
        steps=args.steps,
        lr=args.lr,
    )
    report = cross_validate(data, config, folds=args.folds, seed=args.seed)
    payload = {
        "tool": "srpvec",
        "version": __version__,
        "config": {
            "features": str(args.features),
            "model": args.model,
            "k": args.k,
            "metric": args.metric,
            "l2": args.l2,
            "steps": args.steps,
            "lr": args.lr,
            "folds": args.folds,
            "seed": args.seed,
        },
        "report": report.as_dict(),
    }
    Path(args.out).write_text(
        json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    print(f"model: {args.model}   folds: {args.folds}   rows: {data.n}")
    print(
        f"accuracy: {report.mean_accuracy:.4f} +/- {report.std_accuracy:.4f}"
        f"   cross-entropy/row: {report.mean_cross_entropy:.4f}"
    )
    print("confusion (rows = true):")
    width = max(len(c) for c in report.class_names) + 2
    print(" " * width + "".join(f"{c:>{width}}" for c in report.class_names))
    for name, row in zip(report.class_names, report.confusion):
        print(f"{name:>{width}}" + "".join(f"{int(x):>{width}}" for x in row))


def _parse_class_token(family, token):
    if family == "reciprocity":
        try:
            return float(token)
        except ValueError:
            raise ConfigError(f"reciprocity class must be a number, got {token!r}") from None
    parts = token.split(":")
    pattern = parts[0]
    burst = 1.0
    if len(parts) == 2:
        try:
            burst = float(parts[1])
        except ValueError:
            raise ConfigError(f"bad burst fraction in {token!r}") from None
    elif len(parts) > 2:
        raise ConfigError(f"burst class token must be pattern[:burst], got {token!r}")
    return pattern, burst


def _cmd_synth(args):
    tokens = [_parse_class_token(args.family, tok) for tok in args.classes]
    if args.family == "reciprocity":
        specs = [
            ReciprocityClass(r=r, n=args.nodes, edges=args.edges) for r in tokens
        ]
    elif args.family == "burst":
        specs = [
            BurstClass(
                pattern=p, burst=b, n=args.nodes, episodes=args.episodes, delta=args.delta
            )
            for p, b in tokens
        ]
    else:
        raise ConfigError(f"unknown family {args.family!r}")
    manifest = generate_manifest(specs, args.per_class, args.out, args.seed)
    provenance = {
        "tool": "srpvec",
        "version": __version__,
        "command": "synth",
        "config": {
            "family": args.family,
            "classes": list(args.classes),
            "per_class": args.per_class,
            "nodes": args.nodes,
            "edges": args.edges,
            "episodes": args.episodes,
            "delta": args.delta,
            "seed": args.seed,
            "seed_derivation": "blake2b(seed, class index, graph index)",
        },
        "graph_count": len(manifest),
    }
    (Path(args.out) / "provenance.json").write_text(
        json.dumps(provenance, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    print(f"wrote {len(manifest)} graphs to {args.out}")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="srpvec",
        description="Graphlet significance-profile embeddings for directed networks.",
    )
    parser.add_argument("--version", action="version", version=f"srpvec {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_inputs(p):
        p.add_argument("inputs", nargs="+", help="edge-list files or one manifest dir")
        p.add_argument("-o", "--out", required=True, help="output CSV path")

    p = sub.add_parser("census", help="16-class triad census")
    add_inputs(p)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("motifs", help="36-class windowed temporal motif census")
    add_inputs(p)
    p.add_argument("--delta", type=int, required=True, help="window length (time units)")
    p.set_defaults(func=_cmd_motifs)

    p = sub.add_parser("nullmodel", help="expected counts under a null model")
    add_inputs(p)
    p.add_argument("--model", choices=[NE_ANALYTIC, NE_SIMULATED, TIME_SHUFFLE], required=True)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--delta", type=int, default=None)
    p.set_defaults(func=_cmd_nullmodel)

    p = sub.add_parser("embed", help="significance-profile feature vectors")
    add_inputs(p)
    p.add_argument("--mode", choices=["static", "temporal", "both"], default="static")
    p.add_argument("--epsilon", type=float, default=4.0)
    p.add_argument("--delta", type=int, default=None)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("classify", help="cross-validated classification report")
    p.add_argument("--features", required=True, help="feature CSV from `embed`")
    p.add_argument("--model", choices=["knn", "logreg"], default="knn")
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--metric", choices=["euclidean", "cosine"], default="euclidean")
    p.add_argument("--l2", type=float, default=0.0)
    p.add_argument("--steps", type=int, default=500)
    p.add_argument("--lr", type=float, default=0.5)
    p.add_argument("--folds", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--out", required=True, help="JSON report path")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("synth", help="write a synthetic labeled manifest")
    p.add_argument("--family", choices=["reciprocity", "burst"], required=True)
    p.add_argument(
        "--class",
        dest="classes",
        action="append",
        required=True,
        help="class spec: reciprocity r, or burst pattern[:fraction]; repeatable",
    )
    p.add_argument("--per-class", type=int, default=50)
    p.add_argument("--nodes", type=int, default=100)
    p.add_argument("--edges", type=int, default=600, help="reciprocity family only")
    p.add_argument("--episodes", type=int, default=50, help="burst family only")
    p.add_argument("--delta", type=int, default=8, help="burst family only")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="manifest directory")
    p.set_defaults(func=_cmd_synth)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except ConfigError as exc:
        print(f"srpvec: config error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"srpvec: i/o error: {exc}", file=sys.stderr)
        return 3
    except (DomainError, EdgeListParseError) as exc:
        print(f"srpvec: {exc}", file=sys.stderr)
        return 4
    return 0


if __name__ == "__main__":
    sys.exit(main())
