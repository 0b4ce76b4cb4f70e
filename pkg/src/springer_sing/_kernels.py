"""
Array kernels behind the orbit-graph oracle.

Patterns are handled in bulk as partner arrays: row ``p`` of an ``(N, n)``
int8 array holds the 0-based partner of every point (``p[x] == x`` marks a
fixed point). Two implementations exist for every kernel: a numba one and a
pure numpy/Python one. ``SPRINGER_SING_NUMBA=0`` forces the fallback; the
fallback is also used when numba cannot be imported.
"""

from __future__ import annotations

import os

import numpy as np

_WANT_NUMBA = os.environ.get("SPRINGER_SING_NUMBA", "1").strip().lower() not in ("0", "false", "no", "off")

try:  # pragma: no cover - exercised implicitly
    if not _WANT_NUMBA:
        raise ImportError("numba disabled by SPRINGER_SING_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


MAX_KEY_N = 15  # n**n must fit in int64


def backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"


def triu_pairs(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Row/column indices of the strict upper triangle, the rank-row layout."""
    return np.triu_indices(n, 1)


# ---------------------------------------------------------------------------
# keys

def encode_keys(partners: np.ndarray) -> np.ndarray:
    """Base-n integer key of each partner row."""
    n = partners.shape[1]
    if n > MAX_KEY_N:
        raise ValueError(f"key encoding supports n <= {MAX_KEY_N}, got {n}")
    weights = np.int64(max(n, 2)) ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return partners.astype(np.int64) @ weights


# ---------------------------------------------------------------------------
# rank rows

@njit(cache=True)
def _rank_rows_nb(partners):
    N, n = partners.shape
    m = n * (n - 1) // 2
    out = np.zeros((N, m), dtype=np.uint8)
    # offset of row i in the flattened strict upper triangle
    start = np.zeros(n, dtype=np.int64)
    for i in range(1, n):
        start[i] = start[i - 1] + (n - i)
    for r in range(N):
        p = partners[r]
        for a in range(n):
            b = p[a]
            if b <= a:
                continue
            # arc (a, b) is inside [i, j] for every i <= a, j >= b
            for i in range(a + 1):
                base = start[i] - (i + 1)
                for j in range(b, n):
                    out[r, base + j] += 1
    return out


def _rank_rows_np(partners):
    N, n = partners.shape
    ind = np.zeros((N, n, n), dtype=np.uint8)
    idx = np.arange(n)
    rows, cols = np.nonzero(partners > idx[None, :])
    ind[rows, cols, partners[rows, cols]] = 1
    r = np.cumsum(ind, axis=2, dtype=np.uint8)
    r = np.flip(np.cumsum(np.flip(r, axis=1), axis=1, dtype=np.uint8), axis=1)
    iu, ju = triu_pairs(n)
    return np.ascontiguousarray(r[:, iu, ju])


def rank_rows(partners: np.ndarray) -> np.ndarray:
    """Flattened strict upper triangle of every rank matrix, as uint8."""
    partners = np.ascontiguousarray(partners, dtype=np.int8)
    if partners.shape[1] < 2:
        return np.zeros((partners.shape[0], 0), dtype=np.uint8)
    if HAVE_NUMBA:
        return _rank_rows_nb(partners)
    return _rank_rows_np(partners)


# ---------------------------------------------------------------------------
# b + c per row

@njit(cache=True)
def _bc_nb(partners):
    N, n = partners.shape
    out = np.zeros(N, dtype=np.int64)
    for r in range(N):
        p = partners[r]
        t = 0
        for a in range(n):
            b = p[a]
            if b <= a:
                continue
            for x in range(a + 1, b):
                y = p[x]
                if y == x:
                    t += 1  # bridge
                elif y > b:
                    t += 1  # crossing counted at its left arc
        out[r] = t
    return out


def _bc_np(partners):
    N, n = partners.shape
    out = np.zeros(N, dtype=np.int64)
    for r in range(N):
        p = partners[r]
        t = 0
        for a in range(n):
            b = p[a]
            if b <= a:
                continue
            inner = p[a + 1:b]
            pos = np.arange(a + 1, b)
            t += int(np.count_nonzero(inner == pos) + np.count_nonzero(inner > b))
        out[r] = t
    return out


def bc_counts(partners: np.ndarray) -> np.ndarray:
    partners = np.ascontiguousarray(partners, dtype=np.int8)
    if HAVE_NUMBA:
        return _bc_nb(partners)
    return _bc_np(partners)


# ---------------------------------------------------------------------------
# predecessor CSR

@njit(cache=True)
def _key_of(p, weights):
    k = 0
    for x in range(p.shape[0]):
        k += p[x] * weights[x]
    return k


@njit(cache=True)
def _moves_nb(p, weights, out):
    """Write the keys of all predecessors of partner row p into out; return count."""
    n = p.shape[0]
    base = _key_of(p, weights)
    c = 0
    for i in range(n):
        j = p[i]
        if j <= i:
            continue
        for f in range(i + 1, j):
            g = p[f]
            if g == f:
                # type 1: (i,j) over f -> (i,f) with j fixed, or (f,j) with i fixed
                # key deltas computed from the changed positions only
                k1 = base + (f - j) * weights[i] + (i - f) * weights[f] + (j - i) * weights[j]
                k2 = base + (i - j) * weights[i] + (j - f) * weights[f] + (f - i) * weights[j]
                out[c] = k1
                out[c + 1] = k2
                c += 2
            elif g > j:
                # type 2: (i,j),(f,g) crossing -> (i,f)(j,g) or (i,g)(f,j)
                k1 = base + (f - j) * weights[i] + (i - g) * weights[f] + (g - i) * weights[j] + (j - f) * weights[g]
                k2 = base + (g - j) * weights[i] + (j - g) * weights[f] + (f - i) * weights[j] + (i - f) * weights[g]
                out[c] = k1
                out[c + 1] = k2
                c += 2
    return c


@njit(cache=True)
def _pred_csr_nb(partners, keys_sorted, order, weights):
    N, n = partners.shape
    buf = np.empty(n * n, dtype=np.int64)
    counts = np.zeros(N + 1, dtype=np.int64)
    for r in range(N):
        counts[r + 1] = _moves_nb(partners[r].astype(np.int64), weights, buf)
    indptr = np.cumsum(counts)
    indices = np.empty(indptr[N], dtype=np.int64)
    for r in range(N):
        c = _moves_nb(partners[r].astype(np.int64), weights, buf)
        s = indptr[r]
        for x in range(c):
            pos = np.searchsorted(keys_sorted, buf[x])
            indices[s + x] = order[pos]
    return indptr, indices


def _predecessor_rows(p: list[int]) -> list[list[int]]:
    """Plain-Python predecessor moves on a 0-based partner list."""
    n = len(p)
    out = []
    for i in range(n):
        j = p[i]
        if j <= i:
            continue
        for f in range(i + 1, j):
            g = p[f]
            if g == f:
                q = p.copy(); q[i], q[f], q[j] = f, i, j; out.append(q)
                q = p.copy(); q[i], q[f], q[j] = i, j, f; out.append(q)
            elif g > j:
                q = p.copy(); q[i], q[f], q[j], q[g] = f, i, g, j; out.append(q)
                q = p.copy(); q[i], q[f], q[j], q[g] = g, j, f, i; out.append(q)
    return out


def _pred_csr_py(partners):
    N = partners.shape[0]
    lookup = {row.tobytes(): r for r, row in enumerate(partners)}
    indptr = np.zeros(N + 1, dtype=np.int64)
    chunks = []
    for r in range(N):
        preds = _predecessor_rows(partners[r].tolist())
        idx = [lookup[np.asarray(q, dtype=np.int8).tobytes()] for q in preds]
        chunks.append(idx)
        indptr[r + 1] = indptr[r] + len(idx)
    indices = np.fromiter((x for c in chunks for x in c), dtype=np.int64, count=int(indptr[-1]))
    return indptr, indices


def predecessor_csr(partners: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    For each row, indices (into ``partners``) of all its predecessors.

    ``partners`` must be closed under predecessor moves (a whole I_{n,k}).
    Returns CSR arrays ``(indptr, indices)``.
    """
    partners = np.ascontiguousarray(partners, dtype=np.int8)
    N, n = partners.shape
    if HAVE_NUMBA and n <= MAX_KEY_N and N:
        keys = encode_keys(partners)
        order = np.argsort(keys, kind="stable")
        weights = np.int64(max(n, 2)) ** np.arange(n - 1, -1, -1, dtype=np.int64)
        return _pred_csr_nb(partners, keys[order], order.astype(np.int64), weights)
    return _pred_csr_py(partners)


# ---------------------------------------------------------------------------
# per-sigma queries

def leq_mask(ranks: np.ndarray, row: np.ndarray) -> np.ndarray:
    """Boolean mask of rows whose rank rows are entrywise <= ``row``."""
    return np.all(ranks <= row[None, :], axis=1)


@njit(cache=True)
def _masked_counts_nb(indptr, indices, mask, out):
    for r in range(out.shape[0]):
        c = 0
        for x in range(indptr[r], indptr[r + 1]):
            if mask[indices[x]]:
                c += 1
        out[r] = c


def masked_counts(indptr: np.ndarray, indices: np.ndarray, mask: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """For each row index in ``rows``, how many of its CSR neighbours are in ``mask``."""
    if HAVE_NUMBA:
        sub_ptr = np.empty(len(rows) + 1, dtype=np.int64)
        sub_ptr[0] = 0
        lens = indptr[rows + 1] - indptr[rows]
        np.cumsum(lens, out=sub_ptr[1:])
        gather = np.concatenate([indices[indptr[r]:indptr[r + 1]] for r in rows]) if len(rows) else indices[:0]
        out = np.zeros(len(rows), dtype=np.int64)
        _masked_counts_nb(sub_ptr, gather, mask, out)
        return out
    hits = mask[indices].astype(np.int64)
    csum = np.concatenate(([0], np.cumsum(hits)))
    return csum[indptr[rows + 1]] - csum[indptr[rows]]


def maximal_rows(ranks: np.ndarray, candidates: np.ndarray, dims: np.ndarray) -> np.ndarray:
    """
    Indices among ``candidates`` that are maximal for the rank order.

    Candidates are visited by decreasing dimension; a candidate is kept iff it
    is not below an already kept one. Only larger-dimension elements can lie
    above a given one, so this yields exactly the maximal elements.
    """
    order = candidates[np.argsort(-dims[candidates], kind="stable")]
    kept: list[int] = []
    for c in order:
        if kept:
            if np.any(np.all(ranks[c][None, :] <= ranks[kept], axis=1)):
                continue
        kept.append(int(c))
    return np.asarray(sorted(kept), dtype=np.int64)
