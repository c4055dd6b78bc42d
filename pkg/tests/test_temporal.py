import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from srpvec.errors import DomainError
from srpvec.graphs import TemporalGraph
from srpvec.temporal import (
    MOTIF_LABELS,
    MotifCode,
    classify_triple,
    temporal_motif_census,
    temporal_motif_oracle,
)

from conftest import random_temporal


def _small_triple_count(events, delta):
    # independent count of in-window triples spanning <= 3 nodes
    total = 0
    for i, j, k in itertools.combinations(range(len(events)), 3):
        if events[k][2] - events[i][2] > delta:
            continue
        nodes = {events[x][0] for x in (i, j, k)} | {events[x][1] for x in (i, j, k)}
        if len(nodes) <= 3:
            total += 1
    return total


class TestClassifyTriple:
    def test_repeated_pair(self):
        code = classify_triple((0, 1, 1), (0, 1, 2), (0, 1, 3))
        assert code == MotifCode(1, 1)
        assert code.label == "M11"

    def test_cycle_labeling(self):
        # e2 = b->c (row 5), e3 = c->a (col 4)
        code = classify_triple((7, 3, 1), (3, 9, 2), (9, 7, 3))
        assert code == MotifCode(5, 4)

    def test_four_nodes_rejected(self):
        assert classify_triple((0, 1, 1), (2, 3, 2), (0, 1, 3)) is None

    def test_third_node_from_last_edge(self):
        # e2 stays on {a, b}; e3 brings c as its source -> col = code(c->a) = 4
        assert classify_triple((0, 1, 1), (1, 0, 2), (2, 0, 3)) == MotifCode(2, 4)
        # ... or as its target -> col = code(b->c) = 5
        assert classify_triple((0, 1, 1), (1, 0, 2), (1, 2, 3)) == MotifCode(2, 5)

    def test_all_codes_reachable(self):
        seen = set()
        nodes = (0, 1, 2)
        for e2 in itertools.permutations(nodes, 2):
            for e3 in itertools.permutations(nodes, 2):
                code = classify_triple((0, 1, 1), (*e2, 2), (*e3, 3))
                if code is not None:
                    seen.add((code.row, code.col))
        assert len(seen) == 36


class TestCensus:
    def test_single_pair_burst(self, backend):
        g = TemporalGraph(2, [(0, 1, 1), (0, 1, 2), (0, 1, 3)])
        census = temporal_motif_census(g, 10)
        assert census.total == 1
        assert census.as_dict()["M11"] == 1

    def test_window_excludes(self, backend):
        g = TemporalGraph(2, [(0, 1, 1), (0, 1, 2), (0, 1, 3)])
        assert temporal_motif_census(g, 1).total == 0

    def test_window_boundary_inclusive(self, backend):
        g = TemporalGraph(2, [(0, 1, 0), (0, 1, 3), (0, 1, 5)])
        assert temporal_motif_census(g, 5).total == 1

    def test_matches_oracle_on_random_graphs(self, backend):
        for seed in range(12):
            g = random_temporal(3 + seed % 6, 10 * (seed % 5) + 5, seed)
            span = int(g.t[-1] - g.t[0]) if g.num_events else 1
            for delta in (1, 4, max(span // 3, 1), span + 1):
                fast = temporal_motif_census(g, delta)
                slow = temporal_motif_oracle(g, delta)
                assert np.array_equal(fast.counts, slow.counts), (seed, delta)

    def test_monotone_in_delta(self):
        for seed in range(6):
            g = random_temporal(5, 40, seed)
            prev = temporal_motif_census(g, 1).counts
            for delta in (3, 9, 27, 200):
                cur = temporal_motif_census(g, delta).counts
                assert np.all(prev <= cur)
                prev = cur

    def test_time_translation_invariance(self):
        for seed in range(6):
            g = random_temporal(5, 30, seed)
            shifted = g.shifted(10**9)
            assert np.array_equal(
                temporal_motif_census(g, 7).counts,
                temporal_motif_census(shifted, 7).counts,
            )

    def test_node_relabeling_invariance(self):
        rng = np.random.default_rng(0)
        for seed in range(6):
            g = random_temporal(7, 30, seed)
            perm = rng.permutation(7).tolist()
            assert np.array_equal(
                temporal_motif_census(g, 9).counts,
                temporal_motif_census(g.relabeled(perm), 9).counts,
            )

    def test_full_window_counts_all_small_triples(self):
        for seed in range(6):
            g = random_temporal(4, 25, seed)
            span = int(g.t[-1] - g.t[0])
            census = temporal_motif_census(g, span + 1)
            assert census.total == _small_triple_count(g.events, span + 1)

    def test_bad_delta(self):
        g = random_temporal(4, 10, 0)
        with pytest.raises(DomainError):
            temporal_motif_census(g, 0)
        with pytest.raises(DomainError):
            temporal_motif_oracle(g, -3)

    def test_too_few_events(self, backend):
        g = TemporalGraph(3, [(0, 1, 1), (1, 2, 2)])
        assert temporal_motif_census(g, 10).total == 0
        assert temporal_motif_census(TemporalGraph(0, []), 10).total == 0

    def test_labels_row_major(self):
        assert MOTIF_LABELS[0] == "M11"
        assert MOTIF_LABELS[5] == "M16"
        assert MOTIF_LABELS[6] == "M21"
        assert MOTIF_LABELS[35] == "M66"

    @given(
        events=st.lists(
            st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(0, 40)),
            max_size=25,
        ),
        delta=st.integers(1, 50),
    )
    @settings(max_examples=120, deadline=None)
    def test_census_equals_oracle_fuzz(self, events, delta):
        # heavy timestamp ties are the point: the (t, input order) total
        # order must agree between the windowed scan and the brute force
        events = [(u, v, t) for u, v, t in events if u != v]
        g = TemporalGraph(6, events)
        assert np.array_equal(
            temporal_motif_census(g, delta).counts,
            temporal_motif_oracle(g, delta).counts,
        )
