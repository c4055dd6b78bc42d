#!/usr/bin/env python3
"""Benchmark the compiled census kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--quick]

Times the triad census on directed ER graphs and the windowed temporal
motif census on random event streams, at sizes where the inner loops
dominate.  Both backends produce identical counts; the table reports the
per-call wall time and the speedup of the compiled extension.
"""

import argparse
import time

import numpy as np

from srpvec import _kernels
from srpvec.graphs import DirectedGraph, TemporalGraph
from srpvec.temporal import temporal_motif_census
from srpvec.triads import triad_census


def er_digraph(n, mean_degree, seed):
    rng = np.random.default_rng(seed)
    m = n * mean_degree
    idx = rng.choice(n * (n - 1), size=m, replace=False)
    src = idx // (n - 1)
    rem = idx % (n - 1)
    dst = rem + (rem >= src)
    return DirectedGraph(n, list(zip(src.tolist(), dst.tolist())))


def event_stream(n, num_events, mean_gap, seed):
    rng = np.random.default_rng(seed)
    gaps = rng.integers(1, 2 * mean_gap, size=num_events)
    times = np.cumsum(gaps)
    src = rng.integers(0, n, size=num_events)
    shift = rng.integers(1, n, size=num_events)
    dst = (src + shift) % n
    return TemporalGraph(n, list(zip(src.tolist(), dst.tolist(), times.tolist())))


def timed(fn, min_repeat=1):
    best = float("inf")
    result = None
    for _ in range(min_repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def bench_case(label, fn, repeats):
    row = {"label": label}
    counts = {}
    for backend in _kernels.available_backends():
        _kernels.set_backend(backend)
        elapsed, result = timed(fn, repeats)
        row[backend] = elapsed
        counts[backend] = result
    if len(counts) == 2:
        assert np.array_equal(counts["compiled"], counts["pure-python"]), label
        row["speedup"] = row["pure-python"] / row["compiled"]
    return row


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller sizes")
    args = parser.parse_args()

    if "compiled" not in _kernels.available_backends():
        print("compiled extension not built; timing the pure backend only")

    triad_sizes = [(200, 8), (500, 10), (1000, 12)] if args.quick else [
        (500, 10), (1000, 12), (2000, 15), (4000, 15)]
    temporal_sizes = [(2000, 20), (5000, 20)] if args.quick else [
        (5000, 20), (20000, 25), (50000, 25)]
    repeats = 2

    rows = []
    for n, deg in triad_sizes:
        g = er_digraph(n, deg, seed=0)
        rows.append(bench_case(
            f"triads   n={n:<6} m={g.m:<7}",
            lambda g=g: triad_census(g).counts,
            repeats,
        ))
    for num_events, gap in temporal_sizes:
        g = event_stream(200, num_events, gap, seed=0)
        delta = 40 * gap  # windows of ~40 events
        rows.append(bench_case(
            f"temporal N={num_events:<6} delta={delta:<5}",
            lambda g=g, d=delta: temporal_motif_census(g, d).counts,
            repeats,
        ))

    print(f"\n{'case':34} {'pure-python':>12} {'compiled':>12} {'speedup':>9}")
    for row in rows:
        pure = f"{row['pure-python'] * 1e3:9.1f} ms" if "pure-python" in row else "-"
        comp = f"{row['compiled'] * 1e3:9.1f} ms" if "compiled" in row else "-"
        speed = f"{row['speedup']:8.1f}x" if "speedup" in row else "-"
        print(f"{row['label']:34} {pure:>12} {comp:>12} {speed:>9}")


if __name__ == "__main__":
    main()
