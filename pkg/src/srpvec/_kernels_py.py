"""Pure-Python census kernels.

Fallback used when the compiled extension is unavailable.  Must produce
bit-identical counts to ``_kernels_cy``; the test suite checks equivalence
whenever both backends are importable.
"""

import numpy as np


def triad_counts(n, nbrs, edge_keys, class_of_mask):
    """Counts over the 16 triad classes, index 0 (empty triple) left at 0.

    Connected triples (>= 2 non-null dyads) are classified from their
    lexicographically smallest non-null dyad; triples with exactly one
    non-null dyad are added in bulk to 012 or 102.

    Parameters: union adjacency `nbrs` (per-node sorted lists), `edge_keys`
    a set of u*n+v keys, and the 64-entry labeled-triad lookup table.
    """
    counts = [0] * 16
    mask = class_of_mask.tolist()
    for v in range(n):
        nv = nbrs[v]
        for u in nv:
            if u <= v:
                continue
            third = set(nv)
            third.update(nbrs[u])
            third.discard(v)
            third.discard(u)
            vu = v * n + u in edge_keys
            uv = u * n + v in edge_keys
            counts[2 if vu and uv else 1] += n - len(third) - 2
            for w in third:
                if not (u < w or (v < w and w * n + v not in edge_keys and v * n + w not in edge_keys)):
                    continue
                bits = vu | (uv << 1)
                if v * n + w in edge_keys:
                    bits |= 4
                if w * n + v in edge_keys:
                    bits |= 8
                if u * n + w in edge_keys:
                    bits |= 16
                if w * n + u in edge_keys:
                    bits |= 32
                counts[mask[bits]] += 1
    return np.array(counts, dtype=np.int64)


def temporal_motif_counts(src, dst, t, delta):
    """Counts over the 36 motif codes, row-major (second edge, third edge).

    Scans time-ordered event triples i < j < k with t[k] - t[i] <= delta,
    skipping triples that span 4 or more nodes.  `src`/`dst`/`t` must be
    plain lists sorted by the (t, input order) total order.
    """
    counts = [0] * 36
    n_ev = len(src)
    end = 0
    for i in range(n_ev):
        tmax = t[i] + delta
        while end < n_ev and t[end] <= tmax:
            end += 1
        a = src[i]
        b = dst[i]
        for j in range(i + 1, end):
            u2 = src[j]
            v2 = dst[j]
            c = -1
            if u2 == a:
                if v2 == b:
                    row = 0
                else:
                    c = v2
                    row = 2
            elif u2 == b:
                if v2 == a:
                    row = 1
                else:
                    c = v2
                    row = 4
            elif v2 == a:
                c = u2
                row = 3
            elif v2 == b:
                c = u2
                row = 5
            else:
                continue  # e2 shares no node with e1: >= 4 nodes for any e3
            base = row * 6
            if c < 0:
                # both earlier edges on {a, b}; e3 may introduce the third node
                for k in range(j + 1, end):
                    u3 = src[k]
                    v3 = dst[k]
                    if u3 == a:
                        counts[base if v3 == b else base + 2] += 1
                    elif u3 == b:
                        counts[base + 1 if v3 == a else base + 4] += 1
                    elif v3 == a:
                        counts[base + 3] += 1
                    elif v3 == b:
                        counts[base + 5] += 1
            else:
                for k in range(j + 1, end):
                    u3 = src[k]
                    v3 = dst[k]
                    if u3 == a:
                        if v3 == b:
                            counts[base] += 1
                        elif v3 == c:
                            counts[base + 2] += 1
                    elif u3 == b:
                        if v3 == a:
                            counts[base + 1] += 1
                        elif v3 == c:
                            counts[base + 4] += 1
                    elif u3 == c:
                        if v3 == a:
                            counts[base + 3] += 1
                        elif v3 == b:
                            counts[base + 5] += 1
    return np.array(counts, dtype=np.int64)
