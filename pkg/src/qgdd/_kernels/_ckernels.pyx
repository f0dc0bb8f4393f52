# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels; signatures mirror _pykernels."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t
from libc.stdlib cimport malloc, free

cnp.import_array()

DEF MAXV = 64
DEF MAXK = 64


cdef inline int64_t vadd_scaled(int64_t x, int64_t y, int64_t c, int q, int v) noexcept nogil:
    # x + c*y over GF(q)^v, base-q encoded
    cdef int64_t out = 0, mult = 1
    cdef int j
    if q == 2:
        return x ^ y if c & 1 else x
    for j in range(v):
        out += ((x % q + c * (y % q)) % q) * mult
        x //= q
        y //= q
        mult *= q
    return out


def span_combos(rows, coeffs, int q, int v):
    cdef const int64_t[:, ::1] R = np.ascontiguousarray(rows, dtype=np.int64)
    cdef const int64_t[::1] C = np.ascontiguousarray(coeffs, dtype=np.int64)
    cdef Py_ssize_t n = R.shape[0], k = R.shape[1], m = C.shape[0]
    out_arr = np.empty((n, m), dtype=np.int64)
    cdef int64_t[:, ::1] out = out_arr
    cdef Py_ssize_t i, j, t
    cdef int64_t c, acc, d
    with nogil:
        for i in range(n):
            for j in range(m):
                c = C[j]
                acc = 0
                for t in range(k):
                    d = c % q
                    c = c // q
                    if d:
                        acc = vadd_scaled(acc, R[i, t], d, q, v)
                out[i, j] = acc
    return out_arr


cdef int rref_one(int64_t* rows, int k, int q, int v, int* inv, int64_t* pw) noexcept nogil:
    """In-place RREF of k encoded rows; returns rank. Result rows are rows[0:rank]."""
    cdef int rank = 0, c, r, piv, j
    cdef int64_t tmp, f, pv
    for c in range(v):
        if rank == k:
            break
        piv = -1
        for r in range(rank, k):
            if (rows[r] // pw[c]) % q:
                piv = r
                break
        if piv < 0:
            continue
        tmp = rows[piv]; rows[piv] = rows[rank]; rows[rank] = tmp
        pv = (rows[rank] // pw[c]) % q
        if pv != 1:
            rows[rank] = vadd_scaled(0, rows[rank], inv[pv], q, v)
        for r in range(k):
            if r != rank:
                f = (rows[r] // pw[c]) % q
                if f:
                    rows[r] = vadd_scaled(rows[r], rows[rank], q - f, q, v)
        rank += 1
    return rank


def rref_batch(rows, int q, int v):
    arr = np.array(rows, dtype=np.int64, order="C", copy=True)
    cdef int64_t[:, ::1] R = arr
    cdef Py_ssize_t n = R.shape[0], k = R.shape[1], i
    cdef int inv[256]
    cdef int64_t pw[MAXV]
    cdef int a, b, bad = -1, rk
    if q > 256 or v > MAXV:
        raise ValueError("field or dimension too large for compiled kernel")
    for a in range(1, q):
        for b in range(1, q):
            if (a * b) % q == 1:
                inv[a] = b
    pw[0] = 1
    for a in range(1, v):
        pw[a] = pw[a - 1] * q
    with nogil:
        for i in range(n):
            rk = rref_one(&R[i, 0], <int>k, q, v, inv, pw)
            if rk != k:
                bad = <int>i
                break
    if bad >= 0:
        raise ValueError(f"row set {bad} is rank deficient")
    return arr


def enumerate_pattern(int q, int v, pivots):
    cdef list piv = [int(p) for p in pivots]
    cdef int k = len(piv)
    pset = set(piv)
    free_rows = []
    free_cols = []
    for i, p in enumerate(piv):
        for c in range(p + 1, v):
            if c not in pset:
                free_rows.append(i)
                free_cols.append(c)
    cdef int nfree = len(free_rows)
    cdef int64_t count = q ** nfree
    out_arr = np.empty((count, k), dtype=np.int64)
    cdef int64_t[:, ::1] out = out_arr
    cdef const int64_t[::1] base = np.array([q ** p for p in piv], dtype=np.int64)
    cdef const int64_t[::1] fr = np.array(free_rows, dtype=np.int64)
    cdef const int64_t[::1] fw = np.array([q ** c for c in free_cols], dtype=np.int64)
    cdef int64_t idx, x, d
    cdef int f, t
    with nogil:
        for idx in range(count):
            for t in range(k):
                out[idx, t] = base[t]
            x = idx
            f = nfree - 1
            while f >= 0:
                d = x % q
                x = x // q
                if d:
                    out[idx, fr[f]] += d * fw[f]
                f -= 1
    return out_arr


def ext_rank_batch(rows, int q, int g, int s, add_t, mul_t, inv_t):
    cdef const int64_t[:, ::1] R = np.ascontiguousarray(rows, dtype=np.int64)
    cdef const int64_t[:, ::1] A = np.ascontiguousarray(add_t, dtype=np.int64)
    cdef const int64_t[:, ::1] M = np.ascontiguousarray(mul_t, dtype=np.int64)
    cdef const int64_t[::1] I = np.ascontiguousarray(inv_t, dtype=np.int64)
    cdef const int64_t[::1] neg = np.ascontiguousarray(np.argmax(np.asarray(add_t) == 0, axis=1), dtype=np.int64)
    cdef Py_ssize_t n = R.shape[0], k = R.shape[1], i
    cdef int64_t Q = q ** g
    ranks_arr = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] ranks = ranks_arr
    cdef int64_t mat[MAXK][MAXV]
    cdef int64_t tmp, x, iv, fac, f
    cdef int r, c, j, rank, piv
    if k > MAXK or s > MAXV:
        raise ValueError("dimension too large for compiled kernel")
    with nogil:
        for i in range(n):
            for r in range(k):
                x = R[i, r]
                for c in range(s):
                    mat[r][c] = x % Q
                    x = x // Q
            rank = 0
            for c in range(s):
                if rank == k:
                    break
                piv = -1
                for r in range(rank, k):
                    if mat[r][c]:
                        piv = r
                        break
                if piv < 0:
                    continue
                if piv != rank:
                    for j in range(s):
                        tmp = mat[piv][j]; mat[piv][j] = mat[rank][j]; mat[rank][j] = tmp
                iv = I[mat[rank][c]]
                for r in range(rank + 1, k):
                    f = mat[r][c]
                    if f:
                        fac = neg[M[f, iv]]
                        for j in range(c, s):
                            mat[r][j] = A[mat[r][j], M[fac, mat[rank][j]]]
                rank += 1
            ranks[i] = rank
    return ranks_arr


def scattered_mask(rows, point_coeffs, int q, int v, point_of, elem_of):
    cdef const int64_t[:, ::1] R = np.ascontiguousarray(rows, dtype=np.int64)
    cdef const int64_t[::1] C = np.ascontiguousarray(point_coeffs, dtype=np.int64)
    cdef const int64_t[::1] P = np.ascontiguousarray(point_of, dtype=np.int64)
    cdef const int64_t[::1] E = np.ascontiguousarray(elem_of, dtype=np.int64)
    cdef Py_ssize_t n = R.shape[0], k = R.shape[1], m = C.shape[0], nel = E.shape[0]
    out_arr = np.ones(n, dtype=bool)
    cdef cnp.npy_bool[::1] out = out_arr
    cdef int* seen = <int*>malloc(nel * sizeof(int))
    cdef Py_ssize_t i, j, t, e
    cdef int64_t c, acc, d
    if seen == NULL:
        raise MemoryError()
    try:
        with nogil:
            for e in range(nel):
                seen[e] = -1
            for i in range(n):
                for j in range(m):
                    c = C[j]
                    acc = 0
                    for t in range(k):
                        d = c % q
                        c = c // q
                        if d:
                            acc = vadd_scaled(acc, R[i, t], d, q, v)
                    e = E[P[acc]]
                    if seen[e] == i:
                        out[i] = 0
                        break
                    seen[e] = <int>i
    finally:
        free(seen)
    return out_arr


def accumulate_lines(rows, pair_a, pair_b, int q, int v, point_of, line_of, counts):
    cdef const int64_t[:, ::1] R = np.ascontiguousarray(rows, dtype=np.int64)
    cdef const int64_t[::1] CA = np.ascontiguousarray(pair_a, dtype=np.int64)
    cdef const int64_t[::1] CB = np.ascontiguousarray(pair_b, dtype=np.int64)
    cdef const int64_t[::1] P = np.ascontiguousarray(point_of, dtype=np.int64)
    cdef const int64_t[:, ::1] L = np.ascontiguousarray(line_of, dtype=np.int64)
    cdef int64_t[::1] cnt = counts
    cdef Py_ssize_t n = R.shape[0], k = R.shape[1], m = CA.shape[0]
    cdef Py_ssize_t i, j, t
    cdef int64_t c, a, b, d
    with nogil:
        for i in range(n):
            for j in range(m):
                c = CA[j]
                a = 0
                for t in range(k):
                    d = c % q
                    c = c // q
                    if d:
                        a = vadd_scaled(a, R[i, t], d, q, v)
                c = CB[j]
                b = 0
                for t in range(k):
                    d = c % q
                    c = c // q
                    if d:
                        b = vadd_scaled(b, R[i, t], d, q, v)
                cnt[L[P[a], P[b]]] += 1
    return counts


def block_line_ids(rows, pair_a, pair_b, int q, int v, point_of, line_of):
    a = np.asarray(point_of)[span_combos(rows, pair_a, q, v)]
    b = np.asarray(point_of)[span_combos(rows, pair_b, q, v)]
    return np.asarray(line_of)[a, b]


def ext_det_batch(rows, int q, int g, int s, add_t, mul_t, inv_t):
    cdef const int64_t[:, ::1] R = np.ascontiguousarray(rows, dtype=np.int64)
    cdef const int64_t[:, ::1] A = np.ascontiguousarray(add_t, dtype=np.int64)
    cdef const int64_t[:, ::1] M = np.ascontiguousarray(mul_t, dtype=np.int64)
    cdef const int64_t[::1] I = np.ascontiguousarray(inv_t, dtype=np.int64)
    cdef const int64_t[::1] neg = np.ascontiguousarray(np.argmax(np.asarray(add_t) == 0, axis=1), dtype=np.int64)
    cdef Py_ssize_t n = R.shape[0], k = R.shape[1], i
    cdef int64_t Q = q ** g
    dets_arr = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] dets = dets_arr
    cdef int64_t mat[MAXK][MAXV]
    cdef int64_t tmp, x, iv, fac, f, det
    cdef int r, c, j, piv
    if k != s or s > MAXV:
        raise ValueError("expected square matrices of moderate size")
    with nogil:
        for i in range(n):
            for r in range(k):
                x = R[i, r]
                for c in range(s):
                    mat[r][c] = x % Q
                    x = x // Q
            det = 1
            for c in range(s):
                piv = -1
                for r in range(c, k):
                    if mat[r][c]:
                        piv = r
                        break
                if piv < 0:
                    det = 0
                    break
                if piv != c:
                    for j in range(s):
                        tmp = mat[piv][j]; mat[piv][j] = mat[c][j]; mat[c][j] = tmp
                    det = neg[det]
                det = M[det, mat[c][c]]
                iv = I[mat[c][c]]
                for r in range(c + 1, k):
                    f = mat[r][c]
                    if f:
                        fac = neg[M[f, iv]]
                        for j in range(c, s):
                            mat[r][j] = A[mat[r][j], M[fac, mat[c][j]]]
            dets[i] = det
    return dets_arr
