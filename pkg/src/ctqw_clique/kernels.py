"""Hot numerical kernels, compiled with numba when available.

Two kernels have both a compiled implementation and a plain fallback:

* symmetric eigendecomposition (Householder tridiagonalization + implicit
  QL, accumulating eigenvectors) vs. ``numpy.linalg.eigh``;
* bitset branch-and-bound maximum-clique search with a greedy-colouring
  bound vs. the same algorithm on Python integers.

The active backend is fixed once at import time by the environment
variable ``CTQW_CLIQUE_NUMBA``: ``"0"`` forces the fallbacks, ``"1"``
requires numba, anything else (the default) uses numba when it imports.
Both twins of each kernel stay importable so they can be cross-checked
and benchmarked against each other (see ``benchmarks/bench_backends.py``).
"""

from __future__ import annotations

import math
import os

import numpy as np

_EPS = float(np.finfo(np.float64).eps)
_MAX_QL_SWEEPS = 50

# Above this size the LAPACK call beats the compiled kernel even when
# numba is active; measured crossover is around n = 32 on x86-64.
EIGH_COMPILED_MAX_N = 32

_FLAG = os.environ.get("CTQW_CLIQUE_NUMBA", "auto").strip().lower()

if _FLAG in ("0", "false", "no", "off"):
    NUMBA_ENABLED = False
elif _FLAG in ("1", "true", "yes", "on"):
    from numba import njit

    NUMBA_ENABLED = True
else:
    try:
        from numba import njit

        NUMBA_ENABLED = True
    except ImportError:
        NUMBA_ENABLED = False

BACKEND = "numba" if NUMBA_ENABLED else "numpy"


def _eigh_tridiag_ql(a):
    """Full eigensystem of a real symmetric matrix.

    Householder reduction to tridiagonal form followed by QL iteration
    with implicit shifts (the classic tred2/tql2 pair).  Returns
    ``(d, z)`` with unsorted eigenvalues ``d`` and eigenvectors in the
    columns of ``z``.  ``a`` must be a contiguous float64 square array;
    it is not modified.
    """
    n = a.shape[0]
    z = a.copy()
    d = np.zeros(n, np.float64)
    e = np.zeros(n, np.float64)
    for i in range(n - 1, 0, -1):
        l = i - 1
        h = 0.0
        scale = 0.0
        if l > 0:
            for k in range(i):
                scale += abs(z[i, k])
            if scale == 0.0:
                e[i] = z[i, l]
            else:
                for k in range(i):
                    z[i, k] /= scale
                    h += z[i, k] * z[i, k]
                f = z[i, l]
                g = -math.sqrt(h) if f >= 0.0 else math.sqrt(h)
                e[i] = scale * g
                h -= f * g
                z[i, l] = f - g
                f = 0.0
                for j in range(i):
                    z[j, i] = z[i, j] / h
                    g = 0.0
                    for k in range(j + 1):
                        g += z[j, k] * z[i, k]
                    for k in range(j + 1, i):
                        g += z[k, j] * z[i, k]
                    e[j] = g / h
                    f += e[j] * z[i, j]
                hh = f / (h + h)
                for j in range(i):
                    f = z[i, j]
                    g = e[j] - hh * f
                    e[j] = g
                    for k in range(j + 1):
                        z[j, k] -= f * e[k] + g * z[i, k]
        else:
            e[i] = z[i, l]
        d[i] = h
    d[0] = 0.0
    e[0] = 0.0
    for i in range(n):
        if d[i] != 0.0:
            for j in range(i):
                g = 0.0
                for k in range(i):
                    g += z[i, k] * z[k, j]
                for k in range(i):
                    z[k, j] -= g * z[k, i]
        d[i] = z[i, i]
        z[i, i] = 1.0
        for j in range(i):
            z[j, i] = 0.0
            z[i, j] = 0.0
    for i in range(1, n):
        e[i - 1] = e[i]
    e[n - 1] = 0.0
    for l in range(n):
        sweeps = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= _EPS * dd:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > _MAX_QL_SWEEPS:
                raise RuntimeError("symmetric QL iteration failed to converge")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            sr = r if g >= 0.0 else -r
            g = d[m] - d[l] + e[l] / (g + sr)
            s = 1.0
            c = 1.0
            p = 0.0
            underflow = False
            for i1 in range(m - 1, l - 1, -1):
                f = s * e[i1]
                b = c * e[i1]
                r = math.hypot(f, g)
                e[i1 + 1] = r
                if r == 0.0:
                    d[i1 + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i1 + 1] - p
                r = (d[i1] - g) * s + 2.0 * c * b
                p = s * r
                d[i1 + 1] = g + p
                g = c * r - b
                for k in range(n):
                    f = z[k, i1 + 1]
                    z[k, i1 + 1] = s * z[k, i1] + c * f
                    z[k, i1] = c * z[k, i1] - s * f
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return d, z


def max_clique_python(masks, n, best_size=0, best_mask=0):
    """Exact maximum clique on adjacency bitsets (arbitrary-width ints).

    Branch and bound with a greedy-colouring upper bound.  ``masks[v]``
    holds the neighbour set of vertex ``v`` as a bitmask.  Returns
    ``(size, member_mask, nodes_explored)``; ``best_size``/``best_mask``
    seed the incumbent (they must describe a real clique or be 0/0).
    """
    nodes = 0
    best = [best_size, best_mask]

    def expand(r_size, r_mask, p_mask):
        nonlocal nodes
        nodes += 1
        if p_mask == 0:
            if r_size > best[0]:
                best[0] = r_size
                best[1] = r_mask
            return
        order = []
        colors = []
        color = 0
        un = p_mask
        while un:
            color += 1
            avail = un
            while avail:
                b = avail & -avail
                v = b.bit_length() - 1
                order.append(v)
                colors.append(color)
                un ^= b
                avail ^= b
                avail &= ~masks[v]
        for t in range(len(order) - 1, -1, -1):
            if r_size + colors[t] <= best[0]:
                return
            v = order[t]
            b = 1 << v
            expand(r_size + 1, r_mask | b, p_mask & masks[v])
            p_mask &= ~b

    expand(0, 0, (1 << n) - 1 if n else 0)
    return best[0], best[1], nodes


def greedy_clique_bits(masks, n):
    """Deterministic greedy clique; cheap incumbent for the exact search."""
    cand = (1 << n) - 1 if n else 0
    cur = 0
    size = 0
    while cand:
        pick = -1
        pick_deg = -1
        x = cand
        while x:
            b = x & -x
            v = b.bit_length() - 1
            x ^= b
            deg = (cand & masks[v]).bit_count()
            if deg > pick_deg:
                pick_deg = deg
                pick = v
        cur |= 1 << pick
        size += 1
        cand &= masks[pick]
    return size, cur


if NUMBA_ENABLED:

    eigh_compiled = njit(cache=True)(_eigh_tridiag_ql)

    @njit(cache=True)
    def _ctz64(x):
        c = 0
        if x & np.uint64(0xFFFFFFFF) == np.uint64(0):
            c += 32
            x >>= np.uint64(32)
        if x & np.uint64(0xFFFF) == np.uint64(0):
            c += 16
            x >>= np.uint64(16)
        if x & np.uint64(0xFF) == np.uint64(0):
            c += 8
            x >>= np.uint64(8)
        if x & np.uint64(0xF) == np.uint64(0):
            c += 4
            x >>= np.uint64(4)
        if x & np.uint64(0x3) == np.uint64(0):
            c += 2
            x >>= np.uint64(2)
        if x & np.uint64(0x1) == np.uint64(0):
            c += 1
        return c

    @njit(cache=True)
    def _color_sort(adjbits, p_mask, order_row, color_row):
        # greedy colouring; emits candidates in colour-class order and
        # returns how many there are
        idx = 0
        color = 0
        un = p_mask
        while un != np.uint64(0):
            color += 1
            avail = un
            while avail != np.uint64(0):
                v = _ctz64(avail)
                bit = np.uint64(1) << np.uint64(v)
                order_row[idx] = v
                color_row[idx] = color
                idx += 1
                un ^= bit
                avail ^= bit
                avail &= ~adjbits[v]
        return idx

    @njit(cache=True)
    def _mc_search_compiled(adjbits, n, best0, bmask0):
        # explicit-stack branch and bound; level d holds d clique vertices
        best_size = best0
        best_mask = bmask0
        nodes = 0
        if n == 0:
            return best_size, best_mask, nodes
        levels = n + 1
        ws_order = np.empty((levels, n), np.int64)
        ws_color = np.empty((levels, n), np.int64)
        tpos = np.zeros(levels, np.int64)
        pmask = np.zeros(levels, np.uint64)
        rmask = np.zeros(levels, np.uint64)
        full = np.uint64(0)
        for v in range(n):
            full |= np.uint64(1) << np.uint64(v)
        nodes += 1
        d = 0
        pmask[0] = full
        rmask[0] = np.uint64(0)
        tpos[0] = _color_sort(adjbits, full, ws_order[0], ws_color[0]) - 1
        while d >= 0:
            t = tpos[d]
            if t < 0 or d + ws_color[d, t] <= best_size:
                d -= 1
                continue
            v = ws_order[d, t]
            bit = np.uint64(1) << np.uint64(v)
            child_p = pmask[d] & adjbits[v]
            child_r = rmask[d] | bit
            tpos[d] = t - 1
            pmask[d] = pmask[d] & ~bit
            nodes += 1
            if child_p == np.uint64(0):
                if d + 1 > best_size:
                    best_size = d + 1
                    best_mask = child_r
            else:
                d += 1
                pmask[d] = child_p
                rmask[d] = child_r
                tpos[d] = _color_sort(adjbits, child_p, ws_order[d],
                                      ws_color[d]) - 1
        return best_size, best_mask, nodes

else:
    eigh_compiled = None
    _mc_search_compiled = None


def eigh_numpy(a):
    """LAPACK eigendecomposition, same (d, z) contract as the compiled twin."""
    w, v = np.linalg.eigh(a)
    return w, v


def symmetric_eigh(a):
    """Eigendecomposition of a symmetric float64 matrix via the active backend."""
    if NUMBA_ENABLED and a.shape[0] <= EIGH_COMPILED_MAX_N:
        return eigh_compiled(np.ascontiguousarray(a))
    return eigh_numpy(a)


def max_clique_numba(masks, n, best_size=0, best_mask=0):
    """Compiled twin of :func:`max_clique_python`; requires n <= 64."""
    if _mc_search_compiled is None:
        raise RuntimeError("numba backend is disabled")
    if n > 64:
        raise ValueError("compiled clique search is limited to 64 vertices")
    adjbits = np.zeros(max(n, 1), np.uint64)
    for i in range(n):
        adjbits[i] = np.uint64(masks[i])
    size, mask, nodes = _mc_search_compiled(adjbits, n, best_size,
                                            np.uint64(best_mask))
    return int(size), int(mask), int(nodes)


def max_clique_bits(masks, n, best_size=0, best_mask=0):
    """Exact clique search via the active backend."""
    if NUMBA_ENABLED and n <= 64:
        return max_clique_numba(masks, n, best_size, best_mask)
    return max_clique_python(masks, n, best_size, best_mask)
