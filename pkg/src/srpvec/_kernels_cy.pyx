"""Compiled census kernels; mirrors _kernels_py exactly."""

import numpy as np

cimport numpy as cnp


def triad_counts(Py_ssize_t n,
                 cnp.int64_t[::1] indptr,
                 cnp.int64_t[::1] indices,
                 cnp.uint8_t[::1] codes,
                 cnp.uint8_t[::1] class_of_mask):
    """Counts over the 16 triad classes, index 0 left at 0.

    `indptr`/`indices`: union (in+out) adjacency, sorted per node;
    `codes[i]`: direction bits of the dyad (node, indices[i]),
    bit 0 = outgoing arc, bit 1 = incoming arc.  Merging two coded
    neighbor lists yields every labeled triad without edge lookups.
    """
    out = np.zeros(16, dtype=np.int64)
    cdef cnp.int64_t[::1] counts = out
    cdef Py_ssize_t iv, p, q, pe, qe
    cdef cnp.int64_t v, u, w, wa, wb, size_s, nn = n
    cdef int bits, base, cvu, cv, cu

    for v in range(nn):
        for iv in range(indptr[v], indptr[v + 1]):
            u = indices[iv]
            if u <= v:
                continue
            cvu = codes[iv]
            base = (cvu & 1) | ((cvu >> 1) << 1)
            size_s = 0
            p = indptr[v]
            pe = indptr[v + 1]
            q = indptr[u]
            qe = indptr[u + 1]
            while p < pe or q < qe:
                if p < pe and q < qe:
                    wa = indices[p]
                    wb = indices[q]
                    if wa < wb:
                        w = wa
                        cv = codes[p]
                        cu = 0
                        p += 1
                    elif wb < wa:
                        w = wb
                        cv = 0
                        cu = codes[q]
                        q += 1
                    else:
                        w = wa
                        cv = codes[p]
                        cu = codes[q]
                        p += 1
                        q += 1
                elif p < pe:
                    w = indices[p]
                    cv = codes[p]
                    cu = 0
                    p += 1
                else:
                    w = indices[q]
                    cv = 0
                    cu = codes[q]
                    q += 1
                if w == v or w == u:
                    continue
                size_s += 1
                if u < w or (v < w and cv == 0):
                    bits = (base
                            | ((cv & 1) << 2) | ((cv >> 1) << 3)
                            | ((cu & 1) << 4) | ((cu >> 1) << 5))
                    counts[class_of_mask[bits]] += 1
            counts[2 if cvu == 3 else 1] += nn - size_s - 2
    return out


def temporal_motif_counts(cnp.int64_t[::1] src,
                          cnp.int64_t[::1] dst,
                          cnp.int64_t[::1] t,
                          cnp.int64_t delta):
    """Counts over the 36 motif codes, row-major (second edge, third edge)."""
    out = np.zeros(36, dtype=np.int64)
    cdef cnp.int64_t[::1] counts = out
    cdef Py_ssize_t n_ev = src.shape[0], i, j, k, end = 0
    cdef cnp.int64_t tmax, a, b, c, u2, v2, u3, v3
    cdef int row, base

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
                continue
            base = row * 6
            if c < 0:
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
    return out
