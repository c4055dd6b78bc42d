import numpy as np
import pytest

from srpvec.embedding import delta
from srpvec.errors import ConfigError
from srpvec.graphs import TemporalGraph
from srpvec.nullmodels import ne_expected_triads
from srpvec.synth import (
    BurstClass,
    ReciprocityClass,
    burst_graph,
    generate_manifest,
    load_manifest,
    reciprocity_graph,
)
from srpvec.temporal import temporal_motif_census
from srpvec.triads import CENSUS_ORDER, triad_census


class TestReciprocityGenerator:
    def test_exact_edge_count(self):
        for r in (0.0, 0.4, 0.8, 1.0):
            g = reciprocity_graph(ReciprocityClass(r=r, n=50, edges=300), seed=1)
            assert g.m == 300

    def test_reciprocity_fraction(self):
        g0 = reciprocity_graph(ReciprocityClass(r=0.0, n=80, edges=400), seed=2)
        g8 = reciprocity_graph(ReciprocityClass(r=0.8, n=80, edges=400), seed=2)

        def mutual_edges(g):
            edges = set(g.edges)
            return sum(1 for u, v in edges if (v, u) in edges)

        assert mutual_edges(g0) == 0
        assert mutual_edges(g8) == 2 * round(0.8 * 400 / 2)

    def test_dyad_heavy_classes_separate(self):
        # class-mean damped ratio for mutual-dyad triads is strictly larger
        # under strong reciprocity
        def class_mean_delta(r):
            acc = np.zeros(16)
            for seed in range(10):
                g = reciprocity_graph(ReciprocityClass(r=r, n=60, edges=360), seed=seed)
                acc += delta(triad_census(g).counts, ne_expected_triads(g.n, g.m).means)
            return acc / 10

        low, high = class_mean_delta(0.0), class_mean_delta(0.8)
        for code in ("102", "201", "300"):
            i = CENSUS_ORDER.index(code)
            assert high[i] > low[i]

    def test_invalid_parameters(self):
        with pytest.raises(ConfigError):
            reciprocity_graph(ReciprocityClass(r=1.5, n=10, edges=20), seed=0)
        with pytest.raises(ConfigError):
            reciprocity_graph(ReciprocityClass(r=0.0, n=5, edges=100), seed=0)


class TestBurstGenerator:
    def test_event_count_and_sorting(self):
        g = burst_graph(BurstClass(pattern="cycle", n=20, episodes=30, delta=8), seed=0)
        assert g.num_events == 6 * 30
        assert np.all(np.diff(g.t) >= 0)

    def test_tight_pattern_dominates_census(self):
        spec = BurstClass(pattern="repeat", burst=1.0, n=25, episodes=30, delta=8)
        g = burst_graph(spec, seed=3)
        census = temporal_motif_census(g, spec.delta).as_dict()
        assert census["M11"] >= 0.9 * spec.episodes
        spec2 = BurstClass(pattern="cycle", burst=1.0, n=25, episodes=30, delta=8)
        census2 = temporal_motif_census(burst_graph(spec2, seed=3), spec2.delta).as_dict()
        assert census2["M54"] >= 0.9 * spec2.episodes

    def test_no_burst_means_almost_no_windows(self):
        spec = BurstClass(pattern="cycle", burst=0.0, n=25, episodes=30, delta=8)
        g = burst_graph(spec, seed=4)
        assert temporal_motif_census(g, spec.delta).total == 0

    def test_invalid_parameters(self):
        with pytest.raises(ConfigError):
            burst_graph(BurstClass(pattern="chain"), seed=0)
        with pytest.raises(ConfigError):
            burst_graph(BurstClass(pattern="cycle", burst=2.0), seed=0)
        with pytest.raises(ConfigError):
            burst_graph(BurstClass(pattern="cycle", delta=2), seed=0)


class TestManifest:
    def test_counts_and_labels(self, tmp_path):
        classes = [
            ReciprocityClass(r=0.0, n=20, edges=60),
            ReciprocityClass(r=0.8, n=20, edges=60),
        ]
        manifest = generate_manifest(classes, per_class=4, out_dir=tmp_path, seed=0)
        assert len(manifest) == 8
        assert sorted(set(manifest.labels)) == ["1", "2"]
        assert (tmp_path / "labels.csv").exists()
        assert len(list(tmp_path.glob("*.txt"))) == 8

    def test_fixed_seed_reproduces_files(self, tmp_path):
        classes = [BurstClass(pattern="repeat", n=10, episodes=5, delta=8)]
        a, b = tmp_path / "a", tmp_path / "b"
        generate_manifest(classes, per_class=3, out_dir=a, seed=9)
        generate_manifest(classes, per_class=3, out_dir=b, seed=9)
        for fa in sorted(a.iterdir()):
            assert fa.read_bytes() == (b / fa.name).read_bytes()

    def test_roundtrip_through_loader(self, tmp_path):
        classes = [
            ReciprocityClass(r=0.5, n=15, edges=40),
            BurstClass(pattern="cycle", n=10, episodes=5, delta=8),
        ]
        written = generate_manifest(classes, per_class=2, out_dir=tmp_path, seed=5)
        loaded = load_manifest(tmp_path)
        assert loaded.graph_ids == sorted(written.graph_ids)
        by_id = dict(zip(written.graph_ids, written.graphs))
        for gid, g in zip(loaded.graph_ids, loaded.graphs):
            orig = by_id[gid]
            if isinstance(orig, TemporalGraph):
                assert [(g.labels[u], g.labels[v], t) for u, v, t in g.events] == [
                    (orig.labels[u], orig.labels[v], t) for u, v, t in orig.events
                ]
            else:
                assert {(g.labels[u], g.labels[v]) for u, v in g.edges} == {
                    (orig.labels[u], orig.labels[v]) for u, v in orig.edges
                }

    def test_missing_directory(self, tmp_path):
        with pytest.raises(ConfigError):
            load_manifest(tmp_path / "nope")
        empty = tmp_path / "empty"
        empty.mkdir()
        with pytest.raises(ConfigError):
            load_manifest(empty)
