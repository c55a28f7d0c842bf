"""Compiled kernels for the per-path labeling sweeps.

Each kernel walks every decomposition path (flattened into one array with
offsets), fires the newly covered incident edges into the dynamic forest,
runs its queries, and rolls the forest back before the next path, so one
call per tree replaces millions of interpreter round-trips.

The forest argument is the raw node array of a DynForest; all kernels
restore it (values exactly, structure up to splay shape) before returning.
"""

from __future__ import annotations

import numpy as np

from .dynforest import (njit, _access, _add_path, _cut_child, _link, _min_path,
                        _min_tree, _VC, _VF)


@njit(cache=True)
def _fire(a, stk, pre, p2v, sz, adj_ip, adj_it, adj_ot, item_w,
          v, vprev, sign, jv, jc, jf, jn):
    """Add sign*2*w along other->root for items newly covered at v; journal
    the inverses into (jv, jc, jf) from position jn; returns new length."""
    lo = pre[v]
    hi = lo + sz[v]
    if vprev >= 0:
        lo2 = pre[vprev] + sz[vprev]
    else:
        lo2 = lo  # single range [lo, hi)
    pos = lo
    while pos < hi:
        if vprev >= 0 and pos == lo + 1:
            pos = lo2  # skip the heavy child's preorder block
            continue
        u = p2v[pos]
        for k in range(adj_ip[u], adj_ip[u + 1]):
            w = item_w[adj_it[k]]
            if w != 0:
                o = adj_ot[k]
                _add_path(a, o, 0, 2 * sign * w, stk)
                jv[jn] = o
                jc[jn] = 0
                jf[jn] = -2 * sign * w
                jn += 1
        pos += 1
    return jn


@njit(cache=True)
def _unwind(a, stk, jv, jc, jf, jn):
    for i in range(jn - 1, -1, -1):
        _add_path(a, jv[i], jc[i], jf[i], stk)


@njit(cache=True)
def k_comparable(a, stk, flat, off, pre, p2v, sz, parent,
                 adj_ip, adj_it, adj_ot, item_w, K, lam, out_h):
    """Highest partners when lam >= 0 (into out_h); otherwise return the
    minimum comparable strictly-2-respecting cut value (or 2^62)."""
    best = np.int64(1) << np.int64(62)
    jv = np.empty(len(adj_it) + len(flat) + 4, dtype=np.int64)
    jc = np.empty_like(jv)
    jf = np.empty_like(jv)
    for p in range(len(off) - 1):
        jn = 0
        vprev = -1
        for i in range(off[p], off[p + 1]):
            v = flat[i]
            jn = _fire(a, stk, pre, p2v, sz, adj_ip, adj_it, adj_ot, item_w,
                       v, vprev, 1, jv, jc, jf, jn)
            pv = parent[v]
            if pv >= 0:
                wv = _min_path(a, pv, False, stk)
                c = a[wv, _VC]
                f = a[wv, _VF]
                if c == 0:
                    cand = f - K[v]
                    if lam >= 0:
                        if cand == lam:
                            out_h[v] = wv
                    elif cand < best:
                        best = cand
            vprev = v
        _unwind(a, stk, jv, jc, jf, jn)
    return best


@njit(cache=True)
def k_upper(a, stk, flat, off, pre, p2v, sz,
            adj_ip, adj_it, adj_ot, item_w, K, lam,
            q_ip, q_items, q_start, out_u):
    """Upper vertices: q_ip/q_items bucket items by lower vertex; q_start
    holds each item's precomputed query start (or -1 to skip)."""
    jv = np.empty(len(adj_it) + len(flat) + 4, dtype=np.int64)
    jc = np.empty_like(jv)
    jf = np.empty_like(jv)
    for p in range(len(off) - 1):
        jn = 0
        vprev = -1
        for i in range(off[p], off[p + 1]):
            v = flat[i]
            jn = _fire(a, stk, pre, p2v, sz, adj_ip, adj_it, adj_ot, item_w,
                       v, vprev, 1, jv, jc, jf, jn)
            for k in range(q_ip[v], q_ip[v + 1]):
                item = q_items[k]
                s = q_start[item]
                if s < 0:
                    continue
                uv = _min_path(a, s, True, stk)
                if a[uv, _VC] == 0 and a[uv, _VF] - K[v] == lam:
                    out_u[item] = uv
            vprev = v
        _unwind(a, stk, jv, jc, jf, jn)


@njit(cache=True)
def k_incomparable_vertices(a, stk, flat, off, pre, p2v, sz, parent,
                            adj_ip, adj_it, adj_ot, item_w, c1, lam, out_r):
    """Minimal incomparable partners r_v when lam >= 0; otherwise the
    minimum incomparable strictly-2-respecting cut value (or 2^62)."""
    best = np.int64(1) << np.int64(62)
    jv = np.empty(len(adj_it) + 2 * len(flat) + 4, dtype=np.int64)
    jc = np.empty_like(jv)
    jf = np.empty_like(jv)
    for p in range(len(off) - 1):
        jn = 0
        vprev = -1
        for i in range(off[p], off[p + 1]):
            v = flat[i]
            _add_path(a, v, 1, 0, stk)
            jv[jn] = v
            jc[jn] = -1
            jf[jn] = 0
            jn += 1
            jn = _fire(a, stk, pre, p2v, sz, adj_ip, adj_it, adj_ot, item_w,
                       v, vprev, -1, jv, jc, jf, jn)
            pv = parent[v]
            if pv >= 0:
                _cut_child(a, v, stk)
                q, c, f = _min_tree(a, pv, True, stk)
                if c == 0:
                    cand = c1[v] + f
                    if lam >= 0:
                        if cand == lam:
                            out_r[v] = q
                    elif cand < best:
                        best = cand
                _link(a, v, pv, stk)
            vprev = v
        _unwind(a, stk, jv, jc, jf, jn)
    return best


@njit(cache=True)
def k_process_paths(a, stk, flat, off, pre, p2v, sz, parent,
                    adj_ip, adj_it, adj_ot, item_w,
                    c1, lam, out_gv, out_gw, out_gsize):
    """Witness-set sweep for incomparable edge candidates, all paths."""
    n = len(pre)
    jv = np.empty(len(adj_it) + 2 * len(flat) + 8, dtype=np.int64)
    jc = np.empty_like(jv)
    jf = np.empty_like(jv)
    # pending-edge buckets keyed by pre[other]: segment tree of counts over
    # a padded power of two, plus per-key entry chains
    size = 1
    while size < max(n, 1):
        size *= 2
    seg = np.zeros(2 * size, dtype=np.int64)
    head = np.full(size, -1, dtype=np.int64)
    cap = len(adj_it) + 4
    ent_item = np.empty(cap, dtype=np.int64)
    ent_other = np.empty(cap, dtype=np.int64)
    ent_next = np.empty(cap, dtype=np.int64)
    # witness bookkeeping: epoch-stamped membership plus an append list
    wmark = np.full(n, -1, dtype=np.int64)
    wlist = np.empty(n + 1, dtype=np.int64)
    epoch = 0
    # explicit stack for the segment-tree descent during extraction
    # (3 ints per frame, at most two frames per level, depth <= 63)
    dstack = np.empty(512, dtype=np.int64)

    for p in range(len(off) - 1):
        top = flat[off[p + 1] - 1]
        ptop = parent[top]
        if ptop < 0:
            continue
        jn = 0
        pool = 0
        _cut_child(a, top, stk)
        _add_path(a, ptop, 1, 0, stk)
        jv[jn] = ptop
        jc[jn] = -1
        jf[jn] = 0
        jn += 1
        _q0, valc, valf = _min_tree(a, ptop, False, stk)
        _link(a, top, ptop, stk)
        epoch += 1
        wn = 0
        lo_p = pre[top]
        hi_p = lo_p + sz[top]
        vprev = -1
        for i in range(off[p], off[p + 1]):
            v = flat[i]
            _add_path(a, v, 1, 0, stk)
            jv[jn] = v
            jc[jn] = -1
            jf[jn] = 0
            jn += 1
            # fire only edges with a path-outer endpoint; insert them as
            # pending, keyed by the outer endpoint's preorder index
            lo = pre[v]
            hi = lo + sz[v]
            lo2 = lo if vprev < 0 else pre[vprev] + sz[vprev]
            pos = lo
            while pos < hi:
                if vprev >= 0 and pos == lo + 1:
                    pos = lo2
                    continue
                u = p2v[pos]
                for k in range(adj_ip[u], adj_ip[u + 1]):
                    o = adj_ot[k]
                    po = pre[o]
                    if lo_p <= po < hi_p:
                        continue
                    it = adj_it[k]
                    w = item_w[it]
                    ent_item[pool] = it
                    ent_other[pool] = o
                    ent_next[pool] = head[po]
                    head[po] = pool
                    pool += 1
                    node = po + size
                    while node:
                        seg[node] += 1
                        node >>= 1
                    if w != 0:
                        _add_path(a, o, 0, -2 * w, stk)
                        jv[jn] = o
                        jc[jn] = 0
                        jf[jn] = 2 * w
                        jn += 1
                    cand = _min_path(a, o, False, stk)
                    cc = a[cand, _VC]
                    cf = a[cand, _VF]
                    if cc < valc or (cc == valc and cf < valf):
                        valc = cc
                        valf = cf
                        epoch += 1
                        wn = 0
                    if cc == valc and cf == valf and wmark[cand] != epoch:
                        wmark[cand] = epoch
                        wlist[wn] = cand
                        wn += 1
                pos += 1
            if valc == 0 and c1[v] + valf == lam:
                for wi in range(wn):
                    wit = wlist[wi]
                    qlo = pre[wit]
                    qhi = qlo + sz[wit]
                    # extract every pending entry with key in [qlo, qhi)
                    dn = 0
                    dstack[dn] = 1
                    dstack[dn + 1] = 0
                    dstack[dn + 2] = size
                    dn += 3
                    while dn > 0:
                        dn -= 3
                        node = dstack[dn]
                        na = dstack[dn + 1]
                        nb = dstack[dn + 2]
                        if seg[node] == 0 or nb <= qlo or qhi <= na:
                            continue
                        if nb - na == 1:
                            cnt = seg[node]
                            e = head[na]
                            while e >= 0:
                                it = ent_item[e]
                                o = ent_other[e]
                                wp = _min_path(a, o, True, stk)
                                nsz = sz[v] + sz[wp]
                                if nsz < out_gsize[it]:
                                    out_gsize[it] = nsz
                                    out_gv[it] = v
                                    out_gw[it] = wp
                                e = ent_next[e]
                            head[na] = -1
                            node2 = na + size
                            while node2:
                                seg[node2] -= cnt
                                node2 >>= 1
                            continue
                        mid = (na + nb) // 2
                        dstack[dn] = 2 * node
                        dstack[dn + 1] = na
                        dstack[dn + 2] = mid
                        dn += 3
                        dstack[dn] = 2 * node + 1
                        dstack[dn + 1] = mid
                        dstack[dn + 2] = nb
                        dn += 3
                epoch += 1
                wn = 0
            vprev = v
        # clear leftover pending entries and restore values
        if seg[1] != 0:
            dn = 0
            dstack[dn] = 1
            dstack[dn + 1] = 0
            dstack[dn + 2] = size
            dn += 3
            while dn > 0:
                dn -= 3
                node = dstack[dn]
                na = dstack[dn + 1]
                nb = dstack[dn + 2]
                if seg[node] == 0:
                    continue
                if nb - na == 1:
                    head[na] = -1
                    cnt = seg[node]
                    node2 = na + size
                    while node2:
                        seg[node2] -= cnt
                        node2 >>= 1
                    continue
                mid = (na + nb) // 2
                dstack[dn] = 2 * node
                dstack[dn + 1] = na
                dstack[dn + 2] = mid
                dn += 3
                dstack[dn] = 2 * node + 1
                dstack[dn + 1] = mid
                dstack[dn + 2] = nb
                dn += 3
        _unwind(a, stk, jv, jc, jf, jn)
