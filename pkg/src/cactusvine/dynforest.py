"""Dynamic rooted forest with path additions and min queries.

Supports, in O(log n) amortized per operation:

  link / cut            — attach a tree root below a vertex / detach an edge
  add_path(u, x)        — add x to every vertex on the u -> root path
  min_path(u, tie)      — argmin value on the u -> root path
  min_tree(u, tie)      — argmin value over u's whole tree
  min_non_path(v, w)    — argmin value over the tree minus the v..w path

Values are exact integer pairs (inf_count, finite).  Adding the INF
sentinel increments inf_count, so saturation is sticky (INF + x = INF for
any finite x) yet still invertible, which lets the labeling sweeps roll
back to a clean state by replaying negated additions.  A value is
"infinite" whenever inf_count > 0.

Tie-breaking is exact and deterministic:

  min_path      lowest  -> deepest vertex on the path, highest -> closest
                to the root (structural, no keys needed);
  min_tree      smallest_subtree -> (value, |v_down|, id) lexicographic,
                largest_subtree  -> (value, -|v_down|, id);
  min_non_path  same key as min_tree(smallest_subtree).

|v_down| is a static per-vertex weight fixed at construction (the subtree
size in the reference spanning tree), not the current dynamic subtree.

Two interchangeable backends live here: ``DynForest`` (splay-based
link-cut tree with virtual-subtree aggregates, numba-compiled when
available) and ``NaiveForest`` (array walks, the executable reference).
The minimum over a vertex's virtual children is rebuilt by rescanning the
child list when the current argmin detaches, so adversarial access
patterns on high-degree hubs can degrade min_tree below the amortized
bound; none of the sweeps nor the stated workloads hit that regime.

``link(v, w)`` requires v to be the root of its tree (w becomes its
parent).  That is the only shape of link the sweeps ever perform and it
keeps path-to-root semantics of existing vertices stable.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def deco(f):
            return f

        if args and callable(args[0]):
            return args[0]
        return deco


class ForestError(Exception):
    pass


class SameTree(ForestError):
    pass


class NotForestEdge(ForestError):
    pass


class DifferentTrees(ForestError):
    pass


class NotTreeRoot(ForestError):
    pass


class _InfSentinel:
    __slots__ = ()

    def __repr__(self):
        return "INF"


INF = _InfSentinel()

_INFK = np.int64(1) << np.int64(62)
_SATURATE = 1 << 40  # internal count offset for min_non_path masking

# column layout of the node array
_P, _L, _R = 0, 1, 2
_VC, _VF = 3, 4
_ZC, _ZF = 5, 6
_SZ = 7
_PAC, _PAF, _PAS, _PAV = 8, 9, 10, 11
_PBC, _PBF, _PBS, _PBV = 12, 13, 14, 15
_HAC, _HAF, _HAS, _HAV = 16, 17, 18, 19
_HBC, _HBF, _HBS, _HBV = 20, 21, 22, 23
_VAC, _VAF, _VAS, _VAV = 24, 25, 26, 27
_VBC, _VBF, _VBS, _VBV = 28, 29, 30, 31
_VNXT, _VPRV, _VHEAD = 32, 33, 34
_TAC, _TAF, _TAS, _TAV = 35, 36, 37, 38
_TBC, _TBF, _TBS, _TBV = 39, 40, 41, 42
_NF = 43


@njit(cache=True)
def _less4(c1, f1, s1, v1, c2, f2, s2, v2):
    if c1 != c2:
        return c1 < c2
    if f1 != f2:
        return f1 < f2
    if s1 != s2:
        return s1 < s2
    return v1 < v2


@njit(cache=True)
def _is_sroot(a, x):
    p = a[x, _P]
    if p < 0:
        return True
    return a[p, _L] != x and a[p, _R] != x


@njit(cache=True)
def _push(a, x):
    zc = a[x, _ZC]
    zf = a[x, _ZF]
    if zc == 0 and zf == 0:
        return
    for side in range(1, 3):
        c = a[x, side]
        if c >= 0:
            a[c, _VC] += zc
            a[c, _VF] += zf
            a[c, _PAC] += zc
            a[c, _PAF] += zf
            a[c, _PBC] += zc
            a[c, _PBF] += zf
            a[c, _ZC] += zc
            a[c, _ZF] += zf
    a[x, _ZC] = 0
    a[x, _ZF] = 0


@njit(cache=True)
def _pull(a, x):
    # path aggregate, both tie directions
    c1 = a[x, _VC]
    f1 = a[x, _VF]
    s1 = a[x, _SZ]
    v1 = x
    c2, f2, s2, v2 = c1, f1, -s1, v1
    hc1, hf1, hs1, hv1 = a[x, _VAC], a[x, _VAF], a[x, _VAS], a[x, _VAV]
    hc2, hf2, hs2, hv2 = a[x, _VBC], a[x, _VBF], a[x, _VBS], a[x, _VBV]
    for side in range(1, 3):
        ch = a[x, side]
        if ch >= 0:
            if _less4(a[ch, _PAC], a[ch, _PAF], a[ch, _PAS], a[ch, _PAV], c1, f1, s1, v1):
                c1, f1, s1, v1 = a[ch, _PAC], a[ch, _PAF], a[ch, _PAS], a[ch, _PAV]
            if _less4(a[ch, _PBC], a[ch, _PBF], a[ch, _PBS], a[ch, _PBV], c2, f2, s2, v2):
                c2, f2, s2, v2 = a[ch, _PBC], a[ch, _PBF], a[ch, _PBS], a[ch, _PBV]
            if _less4(a[ch, _HAC], a[ch, _HAF], a[ch, _HAS], a[ch, _HAV], hc1, hf1, hs1, hv1):
                hc1, hf1, hs1, hv1 = a[ch, _HAC], a[ch, _HAF], a[ch, _HAS], a[ch, _HAV]
            if _less4(a[ch, _HBC], a[ch, _HBF], a[ch, _HBS], a[ch, _HBV], hc2, hf2, hs2, hv2):
                hc2, hf2, hs2, hv2 = a[ch, _HBC], a[ch, _HBF], a[ch, _HBS], a[ch, _HBV]
    a[x, _PAC], a[x, _PAF], a[x, _PAS], a[x, _PAV] = c1, f1, s1, v1
    a[x, _PBC], a[x, _PBF], a[x, _PBS], a[x, _PBV] = c2, f2, s2, v2
    a[x, _HAC], a[x, _HAF], a[x, _HAS], a[x, _HAV] = hc1, hf1, hs1, hv1
    a[x, _HBC], a[x, _HBF], a[x, _HBS], a[x, _HBV] = hc2, hf2, hs2, hv2


@njit(cache=True)
def _freeze_tmin(a, c):
    # whole-subtree min of the (detached) splay tree rooted at c
    c1, f1, s1, v1 = a[c, _PAC], a[c, _PAF], a[c, _PAS], a[c, _PAV]
    if _less4(a[c, _HAC], a[c, _HAF], a[c, _HAS], a[c, _HAV], c1, f1, s1, v1):
        c1, f1, s1, v1 = a[c, _HAC], a[c, _HAF], a[c, _HAS], a[c, _HAV]
    a[c, _TAC], a[c, _TAF], a[c, _TAS], a[c, _TAV] = c1, f1, s1, v1
    c2, f2, s2, v2 = a[c, _PBC], a[c, _PBF], a[c, _PBS], a[c, _PBV]
    if _less4(a[c, _HBC], a[c, _HBF], a[c, _HBS], a[c, _HBV], c2, f2, s2, v2):
        c2, f2, s2, v2 = a[c, _HBC], a[c, _HBF], a[c, _HBS], a[c, _HBV]
    a[c, _TBC], a[c, _TBF], a[c, _TBS], a[c, _TBV] = c2, f2, s2, v2


@njit(cache=True)
def _vattach(a, y, c):
    a[c, _P] = y
    _freeze_tmin(a, c)
    h = a[y, _VHEAD]
    a[c, _VNXT] = h
    a[c, _VPRV] = -1
    if h >= 0:
        a[h, _VPRV] = c
    a[y, _VHEAD] = c
    if _less4(a[c, _TAC], a[c, _TAF], a[c, _TAS], a[c, _TAV],
              a[y, _VAC], a[y, _VAF], a[y, _VAS], a[y, _VAV]):
        a[y, _VAC], a[y, _VAF], a[y, _VAS], a[y, _VAV] = a[c, _TAC], a[c, _TAF], a[c, _TAS], a[c, _TAV]
    if _less4(a[c, _TBC], a[c, _TBF], a[c, _TBS], a[c, _TBV],
              a[y, _VBC], a[y, _VBF], a[y, _VBS], a[y, _VBV]):
        a[y, _VBC], a[y, _VBF], a[y, _VBS], a[y, _VBV] = a[c, _TBC], a[c, _TBF], a[c, _TBS], a[c, _TBV]


@njit(cache=True)
def _vrescan(a, y):
    a[y, _VAC] = _INFK
    a[y, _VAF] = _INFK
    a[y, _VAS] = _INFK
    a[y, _VAV] = -1
    a[y, _VBC] = _INFK
    a[y, _VBF] = _INFK
    a[y, _VBS] = _INFK
    a[y, _VBV] = -1
    t = a[y, _VHEAD]
    while t >= 0:
        if _less4(a[t, _TAC], a[t, _TAF], a[t, _TAS], a[t, _TAV],
                  a[y, _VAC], a[y, _VAF], a[y, _VAS], a[y, _VAV]):
            a[y, _VAC], a[y, _VAF], a[y, _VAS], a[y, _VAV] = a[t, _TAC], a[t, _TAF], a[t, _TAS], a[t, _TAV]
        if _less4(a[t, _TBC], a[t, _TBF], a[t, _TBS], a[t, _TBV],
                  a[y, _VBC], a[y, _VBF], a[y, _VBS], a[y, _VBV]):
            a[y, _VBC], a[y, _VBF], a[y, _VBS], a[y, _VBV] = a[t, _TBC], a[t, _TBF], a[t, _TBS], a[t, _TBV]
        t = a[t, _VNXT]


@njit(cache=True)
def _vdetach(a, y, c):
    prv = a[c, _VPRV]
    nxt = a[c, _VNXT]
    if prv >= 0:
        a[prv, _VNXT] = nxt
    else:
        a[y, _VHEAD] = nxt
    if nxt >= 0:
        a[nxt, _VPRV] = prv
    # rescan only when the detached child held the minimum
    if a[c, _TAV] == a[y, _VAV] or a[c, _TBV] == a[y, _VBV]:
        _vrescan(a, y)


@njit(cache=True)
def _rot(a, x):
    p = a[x, _P]
    g = a[p, _P]
    p_root = g < 0 or (a[g, _L] != p and a[g, _R] != p)
    if a[p, _L] == x:
        b = a[x, _R]
        a[p, _L] = b
        a[x, _R] = p
    else:
        b = a[x, _L]
        a[p, _R] = b
        a[x, _L] = p
    if b >= 0:
        a[b, _P] = p
    a[x, _P] = g
    a[p, _P] = x
    if not p_root:
        if a[g, _L] == p:
            a[g, _L] = x
        elif a[g, _R] == p:
            a[g, _R] = x
    elif g >= 0:
        # p was the splay root of a virtual subtree hanging from g: the new
        # root x inherits p's slot in g's virtual-child list (the subtree,
        # hence its frozen min summary, is unchanged).
        prv = a[p, _VPRV]
        nxt = a[p, _VNXT]
        a[x, _VPRV] = prv
        a[x, _VNXT] = nxt
        if prv >= 0:
            a[prv, _VNXT] = x
        elif a[g, _VHEAD] == p:
            a[g, _VHEAD] = x
        if nxt >= 0:
            a[nxt, _VPRV] = x
        a[x, _TAC], a[x, _TAF], a[x, _TAS], a[x, _TAV] = a[p, _TAC], a[p, _TAF], a[p, _TAS], a[p, _TAV]
        a[x, _TBC], a[x, _TBF], a[x, _TBS], a[x, _TBV] = a[p, _TBC], a[p, _TBF], a[p, _TBS], a[p, _TBV]
    _pull(a, p)
    _pull(a, x)


@njit(cache=True)
def _splay(a, x, stk):
    top = 0
    t = x
    while True:
        stk[top] = t
        top += 1
        if _is_sroot(a, t):
            break
        t = a[t, _P]
    while top > 0:
        top -= 1
        _push(a, stk[top])
    while not _is_sroot(a, x):
        p = a[x, _P]
        if _is_sroot(a, p):
            _rot(a, x)
        else:
            g = a[p, _P]
            if (a[g, _L] == p) == (a[p, _L] == x):
                _rot(a, p)
                _rot(a, x)
            else:
                _rot(a, x)
                _rot(a, x)


@njit(cache=True)
def _access(a, x, stk):
    _splay(a, x, stk)
    r = a[x, _R]
    if r >= 0:
        a[x, _R] = -1
        _vattach(a, x, r)
        _pull(a, x)
    last = x
    while a[x, _P] >= 0:
        y = a[x, _P]
        last = y
        _splay(a, y, stk)
        ry = a[y, _R]
        if ry >= 0:
            a[y, _R] = -1
            _vattach(a, y, ry)
        _vdetach(a, y, x)
        a[y, _R] = x
        _pull(a, y)
        _splay(a, x, stk)
    return last


@njit(cache=True)
def _find_root(a, u, stk):
    _access(a, u, stk)
    t = u
    _push(a, t)
    while a[t, _L] >= 0:
        t = a[t, _L]
        _push(a, t)
    _splay(a, t, stk)
    return t


@njit(cache=True)
def _parent_of(a, u, stk):
    _access(a, u, stk)
    t = a[u, _L]
    if t < 0:
        return -1
    _push(a, t)
    while a[t, _R] >= 0:
        t = a[t, _R]
        _push(a, t)
    _splay(a, t, stk)
    return t


@njit(cache=True)
def _add_path(a, u, dc, df, stk):
    _access(a, u, stk)
    a[u, _VC] += dc
    a[u, _VF] += df
    a[u, _PAC] += dc
    a[u, _PAF] += df
    a[u, _PBC] += dc
    a[u, _PBF] += df
    a[u, _ZC] += dc
    a[u, _ZF] += df


@njit(cache=True)
def _point_add(a, u, dc, df, stk):
    _access(a, u, stk)
    _push(a, u)
    a[u, _VC] += dc
    a[u, _VF] += df
    _pull(a, u)


@njit(cache=True)
def _value(a, u, stk):
    _access(a, u, stk)
    return a[u, _VC], a[u, _VF]


@njit(cache=True)
def _min_path(a, u, deepest, stk):
    _access(a, u, stk)
    mc = a[u, _PAC]
    mf = a[u, _PAF]
    t = u
    while True:
        _push(a, t)
        if deepest:
            r = a[t, _R]
            if r >= 0 and a[r, _PAC] == mc and a[r, _PAF] == mf:
                t = r
                continue
            if a[t, _VC] == mc and a[t, _VF] == mf:
                break
            t = a[t, _L]
        else:
            l = a[t, _L]
            if l >= 0 and a[l, _PAC] == mc and a[l, _PAF] == mf:
                t = l
                continue
            if a[t, _VC] == mc and a[t, _VF] == mf:
                break
            t = a[t, _R]
    _splay(a, t, stk)
    return t


@njit(cache=True)
def _min_tree(a, u, smallest, stk):
    _access(a, u, stk)
    if smallest:
        c1, f1, s1, v1 = a[u, _PAC], a[u, _PAF], a[u, _PAS], a[u, _PAV]
        if _less4(a[u, _HAC], a[u, _HAF], a[u, _HAS], a[u, _HAV], c1, f1, s1, v1):
            c1, f1, v1 = a[u, _HAC], a[u, _HAF], a[u, _HAV]
        return v1, c1, f1
    c2, f2, s2, v2 = a[u, _PBC], a[u, _PBF], a[u, _PBS], a[u, _PBV]
    if _less4(a[u, _HBC], a[u, _HBF], a[u, _HBS], a[u, _HBV], c2, f2, s2, v2):
        c2, f2, v2 = a[u, _HBC], a[u, _HBF], a[u, _HBV]
    return v2, c2, f2


@njit(cache=True)
def _link(a, v, w, stk):
    _access(a, v, stk)
    _access(a, w, stk)
    _vattach(a, w, v)
    _pull(a, w)


@njit(cache=True)
def _cut_child(a, c, stk):
    _access(a, c, stk)
    l = a[c, _L]
    a[c, _L] = -1
    a[l, _P] = -1
    _pull(a, c)


@njit(cache=True)
def _lca(a, u, v, stk):
    _access(a, u, stk)
    return _access(a, v, stk)


@njit(cache=True)
def _min_non_path_in(a, v, w, stk):
    """Argmin over the tree minus the v..w path (same tree assumed);
    returns (vertex, inf_count, finite).  A count >= the saturation offset
    means the whole tree was the path."""
    _access(a, v, stk)
    l = _access(a, w, stk)
    big = 1 << 40
    _add_path(a, v, big, 0, stk)
    _add_path(a, w, big, 0, stk)
    _add_path(a, l, -2 * big, 0, stk)
    _point_add(a, l, big, 0, stk)
    vtx, c, f = _min_tree(a, v, True, stk)
    _point_add(a, l, -big, 0, stk)
    _add_path(a, l, 2 * big, 0, stk)
    _add_path(a, w, -big, 0, stk)
    _add_path(a, v, -big, 0, stk)
    return vtx, c, f


@njit(cache=True)
def _point_set(a, v, pv, c, f, stk):
    """Set val[v] to the pair (c, f) exactly (pv = v's current parent)."""
    _access(a, v, stk)
    dc = c - a[v, _VC]
    df = f - a[v, _VF]
    if dc == 0 and df == 0:
        return
    _add_path(a, v, dc, df, stk)
    if pv >= 0:
        _add_path(a, pv, -dc, -df, stk)


@njit(cache=True)
def _build(a, parents, order, stk):
    # Start from all-singleton preferred paths: every child is a virtual
    # child of its parent.  ``order`` is a leaves-last ordering reversed,
    # so each vertex is attached after its whole subtree is summarized.
    n = parents.shape[0]
    for i in range(n):
        x = order[i]
        p = parents[x]
        if p >= 0:
            a[x, _P] = p
            _freeze_tmin(a, x)
            h = a[p, _VHEAD]
            a[x, _VNXT] = h
            a[x, _VPRV] = -1
            if h >= 0:
                a[h, _VPRV] = x
            a[p, _VHEAD] = x
            if _less4(a[x, _TAC], a[x, _TAF], a[x, _TAS], a[x, _TAV],
                      a[p, _VAC], a[p, _VAF], a[p, _VAS], a[p, _VAV]):
                a[p, _VAC], a[p, _VAF], a[p, _VAS], a[p, _VAV] = a[x, _TAC], a[x, _TAF], a[x, _TAS], a[x, _TAV]
            if _less4(a[x, _TBC], a[x, _TBF], a[x, _TBS], a[x, _TBV],
                      a[p, _VBC], a[p, _VBF], a[p, _VBS], a[p, _VBV]):
                a[p, _VBC], a[p, _VBF], a[p, _VBS], a[p, _VBV] = a[x, _TBC], a[x, _TBF], a[x, _TBS], a[x, _TBV]
            _pull(a, p)


def _as_pair(x):
    if x is INF:
        return 1, 0
    if isinstance(x, tuple):
        return int(x[0]), int(x[1])
    return 0, int(x)


class DynForest:
    """Splay-based link-cut forest (fast backend).

    ``order``, when given with ``parents``, must list every vertex after
    all of its descendants (e.g. a reversed preorder); otherwise a valid
    order is derived internally.
    """

    def __init__(self, values, sizes, parents=None, order=None):
        if isinstance(values, tuple) and len(values) == 2 and isinstance(values[0], np.ndarray):
            vc, vf = values
        else:
            pairs = [_as_pair(x) for x in values]
            vc = np.fromiter((p[0] for p in pairs), dtype=np.int64, count=len(pairs))
            vf = np.fromiter((p[1] for p in pairs), dtype=np.int64, count=len(pairs))
        n = len(vc)
        self.n = n
        a = np.zeros((n + 1, _NF), dtype=np.int64)
        self._a = a
        self._stk = np.zeros(n + 4, dtype=np.int64)
        a[:, _P] = -1
        a[:, _L] = -1
        a[:, _R] = -1
        a[:, _VNXT] = -1
        a[:, _VPRV] = -1
        a[:, _VHEAD] = -1
        for col in (_VAC, _VAF, _VAS, _HAC, _HAF, _HAS, _VBC, _VBF, _VBS, _HBC, _HBF, _HBS):
            a[:, col] = _INFK
        for col in (_VAV, _VBV, _HAV, _HBV):
            a[:, col] = -1
        szs = np.asarray(sizes, dtype=np.int64)
        ids = np.arange(n, dtype=np.int64)
        a[:n, _VC] = vc
        a[:n, _VF] = vf
        a[:n, _SZ] = szs
        a[:n, _PAC] = vc
        a[:n, _PAF] = vf
        a[:n, _PAS] = szs
        a[:n, _PAV] = ids
        a[:n, _PBC] = vc
        a[:n, _PBF] = vf
        a[:n, _PBS] = -szs
        a[:n, _PBV] = ids
        # sentinel row keeps neutral aggregates
        a[n, _PAC] = a[n, _PAF] = a[n, _PAS] = _INFK
        a[n, _PBC] = a[n, _PBF] = a[n, _PBS] = _INFK
        a[n, _PAV] = a[n, _PBV] = -1
        if parents is not None:
            par = np.asarray(parents, dtype=np.int64)
            if order is None:
                children: list[list[int]] = [[] for _ in range(n)]
                roots = []
                for v in range(n):
                    p = int(par[v])
                    if p >= 0:
                        children[p].append(v)
                    else:
                        roots.append(v)
                stack = list(roots)
                topo = []
                while stack:
                    u = stack.pop()
                    topo.append(u)
                    stack.extend(children[u])
                order = np.array(topo[::-1], dtype=np.int64)
            else:
                order = np.asarray(order, dtype=np.int64)
            _build(a, par, order, self._stk)

    def root_of(self, u: int) -> int:
        return int(_find_root(self._a, u, self._stk))

    def parent_of(self, u: int) -> int | None:
        p = int(_parent_of(self._a, u, self._stk))
        return None if p < 0 else p

    def link(self, v: int, w: int) -> None:
        rv = self.root_of(v)
        if rv != v:
            raise NotTreeRoot(f"link: {v} is not the root of its tree")
        if self.root_of(w) == v:
            raise SameTree(f"link: {v} and {w} already share a tree")
        _link(self._a, v, w, self._stk)

    def cut(self, u: int, v: int) -> None:
        if self.parent_of(u) == v:
            child = u
        elif self.parent_of(v) == u:
            child = v
        else:
            raise NotForestEdge(f"cut: ({u}, {v}) is not a forest edge")
        _cut_child(self._a, child, self._stk)

    def add_path(self, u: int, x) -> None:
        dc, df = _as_pair(x)
        _add_path(self._a, u, dc, df, self._stk)

    def value_pair(self, u: int) -> tuple[int, int]:
        c, f = _value(self._a, u, self._stk)
        return int(c), int(f)

    def value(self, u: int):
        c, f = self.value_pair(u)
        return INF if c > 0 else f

    def min_path(self, u: int, tie: str = "lowest") -> int:
        return int(_min_path(self._a, u, tie == "lowest", self._stk))

    def min_tree(self, u: int, tie: str = "smallest_subtree") -> int:
        v, _, _ = _min_tree(self._a, u, tie == "smallest_subtree", self._stk)
        return int(v)

    def min_tree_value(self, u: int, tie: str = "smallest_subtree"):
        v, c, f = _min_tree(self._a, u, tie == "smallest_subtree", self._stk)
        return int(v), (int(c), int(f))

    def lca(self, u: int, v: int) -> int:
        if self.root_of(u) != self.root_of(v):
            raise DifferentTrees(f"lca: {u} and {v} are in different trees")
        return int(_lca(self._a, u, v, self._stk))

    def min_non_path(self, v: int, w: int) -> int | None:
        if self.root_of(v) != self.root_of(w):
            raise DifferentTrees(f"min_non_path: {v} and {w} are in different trees")
        vtx, c, _ = _min_non_path_in(self._a, v, w, self._stk)
        return None if c >= _SATURATE else int(vtx)

    def min_non_path_value(self, v: int, w: int):
        """Same-tree assumed; (vertex, value pair) or (None, None)."""
        vtx, c, f = _min_non_path_in(self._a, v, w, self._stk)
        if c >= _SATURATE:
            return None, None
        return int(vtx), (int(c), int(f))

    def point_set(self, v: int, parent: int, pair: tuple[int, int]) -> None:
        """Overwrite val[v]; ``parent`` is v's current parent or -1."""
        _point_set(self._a, v, parent, pair[0], pair[1], self._stk)


class NaiveForest:
    """Reference implementation: parent array plus explicit walks."""

    def __init__(self, values, sizes, parents=None):
        n = len(values)
        self.n = n
        self.vals = [list(_as_pair(x)) for x in values]
        self.sizes = list(sizes)
        self.parent: list[int | None] = [None] * n
        self.children: list[set[int]] = [set() for _ in range(n)]
        if parents is not None:
            for v, p in enumerate(parents):
                if p is not None and p >= 0:
                    self.parent[v] = int(p)
                    self.children[int(p)].add(v)

    def root_of(self, u: int) -> int:
        while self.parent[u] is not None:
            u = self.parent[u]
        return u

    def parent_of(self, u: int) -> int | None:
        return self.parent[u]

    def _path_to_root(self, u: int) -> list[int]:
        out = [u]
        while self.parent[out[-1]] is not None:
            out.append(self.parent[out[-1]])
        return out

    def link(self, v: int, w: int) -> None:
        if self.parent[v] is not None:
            raise NotTreeRoot(f"link: {v} is not the root of its tree")
        if self.root_of(w) == v:
            raise SameTree(f"link: {v} and {w} already share a tree")
        self.parent[v] = w
        self.children[w].add(v)

    def cut(self, u: int, v: int) -> None:
        if self.parent[u] == v:
            child = u
        elif self.parent[v] == u:
            child = v
        else:
            raise NotForestEdge(f"cut: ({u}, {v}) is not a forest edge")
        p = self.parent[child]
        self.parent[child] = None
        self.children[p].discard(child)

    def add_path(self, u: int, x) -> None:
        dc, df = _as_pair(x)
        for t in self._path_to_root(u):
            self.vals[t][0] += dc
            self.vals[t][1] += df

    def value_pair(self, u: int) -> tuple[int, int]:
        return tuple(self.vals[u])

    def value(self, u: int):
        c, f = self.vals[u]
        return INF if c > 0 else f

    def min_path(self, u: int, tie: str = "lowest") -> int:
        best = u
        bc, bf = self.vals[u]
        for t in self._path_to_root(u)[1:]:
            c, f = self.vals[t]
            if (c, f) < (bc, bf) or (tie == "highest" and (c, f) == (bc, bf)):
                best, bc, bf = t, c, f
        return best

    def _tree_members(self, u: int) -> list[int]:
        root = self.root_of(u)
        out = [root]
        stack = [root]
        while stack:
            t = stack.pop()
            for c in self.children[t]:
                out.append(c)
                stack.append(c)
        return out

    def _argmin(self, members, smallest: bool) -> int:
        if smallest:
            key = lambda t: (self.vals[t][0], self.vals[t][1], self.sizes[t], t)
        else:
            key = lambda t: (self.vals[t][0], self.vals[t][1], -self.sizes[t], t)
        return min(members, key=key)

    def min_tree(self, u: int, tie: str = "smallest_subtree") -> int:
        return self._argmin(self._tree_members(u), tie == "smallest_subtree")

    def min_tree_value(self, u: int, tie: str = "smallest_subtree"):
        v = self.min_tree(u, tie)
        return v, tuple(self.vals[v])

    def lca(self, u: int, v: int) -> int:
        pu = self._path_to_root(u)
        pv = set(self._path_to_root(v))
        for t in pu:
            if t in pv:
                return t
        raise DifferentTrees(f"lca: {u} and {v} are in different trees")

    def min_non_path(self, v: int, w: int) -> int | None:
        if self.root_of(v) != self.root_of(w):
            raise DifferentTrees(f"min_non_path: {v} and {w} are in different trees")
        l = self.lca(v, w)
        path = set()
        t = v
        while t != l:
            path.add(t)
            t = self.parent[t]
        t = w
        while t != l:
            path.add(t)
            t = self.parent[t]
        path.add(l)
        members = [t for t in self._tree_members(v) if t not in path]
        if not members:
            return None
        return self._argmin(members, True)
