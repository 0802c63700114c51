"""Batch kernels over labeled graphs encoded as edge masks.

A graph on ``n <= 11`` vertices is packed into one int64: bit ``j*(j-1)/2 + i``
holds the pair ``(i, j)``, ``i < j`` (the graph6 upper-triangle, column-major
order). Every kernel has a numba implementation and a vectorized numpy one;
``chiforge._accel.USE_NUMBA`` picks the default and each public entry point
takes ``backend="numba" | "numpy"`` for benchmarking.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from chiforge import _accel
from chiforge._accel import njit

MAX_MASK_N = 11


def pair_bit(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def num_pairs(n: int) -> int:
    return n * (n - 1) // 2


@lru_cache(maxsize=None)
def subset_bit_table(n: int, p: int) -> np.ndarray:
    """For every p-subset of range(n), the mask bit of each of its C(p,2) pairs.

    Row ``c`` lists, in pattern pair order, the bit positions that the
    c-th subset (lexicographic) occupies inside an n-vertex edge mask.
    """
    rows = []
    for combo in combinations(range(n), p):
        row = [0] * num_pairs(p)
        for b in range(p):
            for a in range(b):
                row[pair_bit(a, b)] = pair_bit(combo[a], combo[b])
        rows.append(row)
    if not rows:
        return np.zeros((0, num_pairs(p)), dtype=np.int64)
    return np.asarray(rows, dtype=np.int64)


def iso_table(p: int, edges: tuple[tuple[int, int], ...]) -> np.ndarray:
    """Lookup table over all p-vertex edge codes: 1 where the code is a labeled
    copy of the pattern given by ``edges``."""
    table = np.zeros(1 << num_pairs(p), dtype=np.uint8)
    for perm in permutations(range(p)):
        code = 0
        for u, v in edges:
            code |= 1 << pair_bit(perm[u], perm[v])
        table[code] = 1
    return table


@njit
def _contains_nb(masks, bits, table):
    n_graphs = masks.shape[0]
    n_sub, n_pairs = bits.shape
    out = np.zeros(n_graphs, dtype=np.bool_)
    for g in range(n_graphs):
        m = masks[g]
        for c in range(n_sub):
            code = 0
            for q in range(n_pairs):
                code |= ((m >> bits[c, q]) & 1) << q
            if table[code]:
                out[g] = True
                break
    return out


def _contains_np(masks, bits, table):
    out = np.zeros(masks.shape[0], dtype=bool)
    for c in range(bits.shape[0]):
        code = np.zeros(masks.shape[0], dtype=np.int64)
        for q in range(bits.shape[1]):
            code |= ((masks >> bits[c, q]) & 1) << q
        out |= table[code].astype(bool)
    return out


def _use_numba(backend: str | None) -> bool:
    if backend is None:
        return _accel.USE_NUMBA
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    return backend == "numba" and _accel.HAVE_NUMBA


def contains_pattern(masks, n: int, p: int, table, backend: str | None = None) -> np.ndarray:
    """Boolean array: does each masked graph contain the pattern induced?"""
    masks = np.ascontiguousarray(masks, dtype=np.int64)
    if n > MAX_MASK_N:
        raise ValueError(f"edge masks support n <= {MAX_MASK_N}, got {n}")
    if p > n:
        return np.zeros(masks.shape[0], dtype=bool)
    bits = subset_bit_table(n, p)
    if _use_numba(backend):
        return _contains_nb(masks, bits, table)
    return _contains_np(masks, bits, table)


@njit
def _subset_dp_nb(masks, n):
    n_graphs = masks.shape[0]
    full = 1 << n
    chi_out = np.zeros(n_graphs, dtype=np.int64)
    omega_out = np.zeros(n_graphs, dtype=np.int64)
    perfect_out = np.zeros(n_graphs, dtype=np.bool_)
    adj = np.zeros(n, dtype=np.int64)
    indep = np.zeros(full, dtype=np.bool_)
    clique = np.zeros(full, dtype=np.bool_)
    omega = np.zeros(full, dtype=np.int64)
    chi = np.zeros(full, dtype=np.int64)
    for g in range(n_graphs):
        m = masks[g]
        for v in range(n):
            adj[v] = 0
        for j in range(n):
            for i in range(j):
                if (m >> (j * (j - 1) // 2 + i)) & 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        indep[0] = True
        clique[0] = True
        omega[0] = 0
        chi[0] = 0
        perfect = True
        for s in range(1, full):
            low = s & -s
            v = 0
            while (low >> v) != 1:
                v += 1
            rest = s ^ low
            indep[s] = indep[rest] and (adj[v] & rest) == 0
            clique[s] = clique[rest] and (rest & ~adj[v]) == 0
            size = 0
            t = s
            while t:
                t &= t - 1
                size += 1
            if clique[s]:
                omega[s] = size
            else:
                best = 0
                t = s
                while t:
                    b = t & -t
                    t ^= b
                    if omega[s ^ b] > best:
                        best = omega[s ^ b]
                omega[s] = best
            best = size
            sub = rest
            while True:
                part = sub | low
                if indep[part] and chi[s ^ part] + 1 < best:
                    best = chi[s ^ part] + 1
                if sub == 0:
                    break
                sub = (sub - 1) & rest
            chi[s] = best
            if chi[s] != omega[s]:
                perfect = False
        chi_out[g] = chi[full - 1]
        omega_out[g] = omega[full - 1]
        perfect_out[g] = perfect
    return chi_out, omega_out, perfect_out


def _subset_dp_np(masks, n):
    n_graphs = masks.shape[0]
    full = 1 << n
    adj = np.zeros((n_graphs, n), dtype=np.int64)
    for j in range(n):
        for i in range(j):
            e = (masks >> pair_bit(i, j)) & 1
            adj[:, i] |= e << j
            adj[:, j] |= e << i
    indep = np.zeros((n_graphs, full), dtype=bool)
    clique = np.zeros((n_graphs, full), dtype=bool)
    omega = np.zeros((n_graphs, full), dtype=np.int64)
    chi = np.zeros((n_graphs, full), dtype=np.int64)
    indep[:, 0] = True
    clique[:, 0] = True
    perfect = np.ones(n_graphs, dtype=bool)
    for s in range(1, full):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        indep[:, s] = indep[:, rest] & ((adj[:, v] & rest) == 0)
        clique[:, s] = clique[:, rest] & ((rest & ~adj[:, v]) == 0)
        size = s.bit_count()
        best = np.zeros(n_graphs, dtype=np.int64)
        t = s
        while t:
            b = t & -t
            t ^= b
            np.maximum(best, omega[:, s ^ b], out=best)
        omega[:, s] = np.where(clique[:, s], size, best)
        best = np.full(n_graphs, size, dtype=np.int64)
        sub = rest
        while True:
            part = sub | low
            cand = np.where(indep[:, part], chi[:, s ^ part] + 1, size)
            np.minimum(best, cand, out=best)
            if sub == 0:
                break
            sub = (sub - 1) & rest
        chi[:, s] = best
        perfect &= chi[:, s] == omega[:, s]
    return chi[:, full - 1].copy(), omega[:, full - 1].copy(), perfect


def subset_chi_omega(masks, n: int, backend: str | None = None):
    """Exact chi and omega by dynamic programming over all vertex subsets.

    Returns ``(chi, omega, perfect)`` where ``perfect[g]`` is true iff
    chi(H) == omega(H) for every induced subgraph H of graph g. Intended for
    n <= 8; cost is 3^n per graph.
    """
    masks = np.ascontiguousarray(masks, dtype=np.int64)
    if n > MAX_MASK_N:
        raise ValueError(f"edge masks support n <= {MAX_MASK_N}, got {n}")
    if _use_numba(backend):
        return _subset_dp_nb(masks, n)
    return _subset_dp_np(masks, n)


@njit
def _extend_free_nb(masks, n, bits_with_last, table):
    # Candidates are (parent mask, neighbourhood of new vertex n) pairs; only
    # subsets containing the new vertex need checking since parents are free.
    n_parent = masks.shape[0]
    n_nbr = 1 << n
    base = n * (n - 1) // 2
    n_sub, n_pairs = bits_with_last.shape
    count = 0
    out = np.empty(n_parent * n_nbr, dtype=np.int64)
    for g in range(n_parent):
        for nb in range(n_nbr):
            m = masks[g] | (nb << base)
            ok = True
            for c in range(n_sub):
                code = 0
                for q in range(n_pairs):
                    code |= ((m >> bits_with_last[c, q]) & 1) << q
                if table[code]:
                    ok = False
                    break
            if ok:
                out[count] = m
                count += 1
    return out[:count]


def _extend_free_np(masks, n, bits_with_last, table):
    base = num_pairs(n)
    nbrs = np.arange(1 << n, dtype=np.int64) << base
    cand = (masks[:, None] | nbrs[None, :]).ravel()
    bad = _contains_np(cand, bits_with_last, table)
    return cand[~bad]


def extend_free(masks, n: int, p: int, table, backend: str | None = None) -> np.ndarray:
    """Add vertex ``n`` in every possible way to pattern-free n-vertex graphs.

    Returns the (n+1)-vertex masks that remain free of the pattern. Because
    the class is hereditary, this yields every free (n+1)-vertex labeled graph
    exactly once, ordered by (parent, neighbourhood).
    """
    masks = np.ascontiguousarray(masks, dtype=np.int64)
    if n + 1 > MAX_MASK_N:
        raise ValueError(f"edge masks support n <= {MAX_MASK_N}")
    bits = subset_bit_table(n + 1, p)
    combos = list(combinations(range(n + 1), p))
    keep = np.asarray([n in c for c in combos], dtype=bool)
    bits = np.ascontiguousarray(bits[keep]) if len(combos) else bits
    if _use_numba(backend):
        return _extend_free_nb(masks, n, bits, table)
    return _extend_free_np(masks, n, bits, table)
