"""Pure-Python (numpy) implementations of the hot kernels.

Vectors of GF(q)^v are int64 base-q encodings (digit j = coordinate j).  A batch
of subspaces is an ``(n, k)`` int64 array of basis rows.  Every function here
has a twin with the same signature in ``_ckernels.pyx``.
"""

from __future__ import annotations

import numpy as np

CHUNK = 1 << 15


def _digits(arr: np.ndarray, q: int, v: int) -> np.ndarray:
    pw = q ** np.arange(v, dtype=np.int64)
    return (arr[..., None] // pw) % q


def _encode(ds: np.ndarray, q: int) -> np.ndarray:
    v = ds.shape[-1]
    pw = q ** np.arange(v, dtype=np.int64)
    return ds @ pw


def span_combos(rows, coeffs, q, v):
    """out[i, j] = sum_t digit_t(coeffs[j]) * rows[i, t]  (linear combination)."""
    rows = np.ascontiguousarray(rows, dtype=np.int64)
    coeffs = np.ascontiguousarray(coeffs, dtype=np.int64)
    n, k = rows.shape
    m = coeffs.shape[0]
    if q == 2:
        out = np.zeros((n, m), dtype=np.int64)
        for t in range(k):
            bit = (coeffs >> t) & 1
            out ^= rows[:, t, None] * bit[None, :]
        return out
    cd = _digits(coeffs, q, k)  # (m, k)
    out = np.empty((n, m), dtype=np.int64)
    for lo in range(0, n, CHUNK):
        rd = _digits(rows[lo : lo + CHUNK], q, v)  # (c, k, v)
        comb = np.einsum("mk,ckv->cmv", cd, rd) % q
        out[lo : lo + CHUNK] = _encode(comb, q)
    return out


def rref_rows(rows, q, v):
    """Canonical RREF of one list of row encodings; zero rows are dropped.

    Pivots are the lowest nonzero column of each row, rows sorted by pivot.
    """
    if q == 2:
        work = [int(r) for r in rows if r]
        out: list[int] = []
        for c in range(v):
            bit = 1 << c
            piv = None
            for idx, r in enumerate(work):
                if r & bit:
                    piv = work.pop(idx)
                    break
            if piv is None:
                continue
            work = [r ^ piv if r & bit else r for r in work]
            out = [r ^ piv if r & bit else r for r in out]
            out.append(piv)
            if not work:
                break
        return out
    pw = [q**j for j in range(v)]
    work = []
    for r in rows:
        r = int(r)
        ds = []
        for _ in range(v):
            r, d = divmod(r, q)
            ds.append(d)
        if any(ds):
            work.append(ds)
    out_d: list[list[int]] = []
    for c in range(v):
        piv = None
        for idx, r in enumerate(work):
            if r[c]:
                piv = work.pop(idx)
                break
        if piv is None:
            continue
        inv = pow(piv[c], q - 2, q)
        piv = [(x * inv) % q for x in piv]
        for lst in (work, out_d):
            for r in lst:
                f = r[c]
                if f:
                    for j in range(c, v):
                        r[j] = (r[j] - f * piv[j]) % q
        out_d.append(piv)
        work = [r for r in work if any(r)]
        if not work:
            break
    return [sum(d * p for d, p in zip(r, pw)) for r in out_d]


def rref_batch(rows, q, v):
    rows = np.asarray(rows, dtype=np.int64)
    n, k = rows.shape
    out = np.empty((n, k), dtype=np.int64)
    for i in range(n):
        r = rref_rows(rows[i], q, v)
        if len(r) != k:
            raise ValueError(f"row set {i} is rank deficient")
        out[i] = r
    return out


def enumerate_pattern(q, v, pivots):
    """All RREF matrices with the given (ascending) pivot columns."""
    pivots = [int(p) for p in pivots]
    k = len(pivots)
    pset = set(pivots)
    base = np.array([q**p for p in pivots], dtype=np.int64)
    free: list[tuple[int, int]] = []
    for i, p in enumerate(pivots):
        for c in range(p + 1, v):
            if c not in pset:
                free.append((i, c))
    nfree = len(free)
    count = q**nfree
    idx = np.arange(count, dtype=np.int64)
    out = np.tile(base, (count, 1))
    for f, (i, c) in enumerate(free):
        # last free position varies fastest
        d = (idx // q ** (nfree - 1 - f)) % q
        out[:, i] += d * q**c
    return out.reshape(count, k)


def ext_rank_batch(rows, q, g, s, add_t, mul_t, inv_t):
    """Rank over GF(q^g) of each basis after splitting rows into s coordinates."""
    rows = np.asarray(rows, dtype=np.int64)
    n, k = rows.shape
    Q = q**g
    ranks = np.empty(n, dtype=np.int64)
    neg = np.argmax(np.asarray(add_t) == 0, axis=1).tolist()
    add_t = add_t.tolist()
    mul_t = mul_t.tolist()
    inv_t = inv_t.tolist()
    for i in range(n):
        mat = []
        for r in rows[i].tolist():
            coords = []
            for _ in range(s):
                r, c = divmod(r, Q)
                coords.append(c)
            mat.append(coords)
        rank = 0
        for c in range(s):
            piv = None
            for ridx in range(rank, k):
                if mat[ridx][c]:
                    piv = ridx
                    break
            if piv is None:
                continue
            mat[rank], mat[piv] = mat[piv], mat[rank]
            pr = mat[rank]
            iv = inv_t[pr[c]]
            for ridx in range(rank + 1, k):
                row = mat[ridx]
                f = row[c]
                if f:
                    fac = neg[mul_t[f][iv]]
                    for j in range(c, s):
                        row[j] = add_t[row[j]][mul_t[fac][pr[j]]]
            rank += 1
            if rank == k:
                break
        ranks[i] = rank
    return ranks


def scattered_mask(rows, point_coeffs, q, v, point_of, elem_of):
    """True where the points of the block fall into pairwise distinct spread elements."""
    rows = np.asarray(rows, dtype=np.int64)
    n = rows.shape[0]
    out = np.empty(n, dtype=bool)
    for lo in range(0, n, CHUNK):
        vecs = span_combos(rows[lo : lo + CHUNK], point_coeffs, q, v)
        el = np.sort(elem_of[point_of[vecs]], axis=1)
        out[lo : lo + CHUNK] = np.all(el[:, 1:] != el[:, :-1], axis=1)
    return out


def accumulate_lines(rows, pair_a, pair_b, q, v, point_of, line_of, counts):
    """counts[line] += number of blocks containing line, for every block line."""
    rows = np.asarray(rows, dtype=np.int64)
    n = rows.shape[0]
    for lo in range(0, n, CHUNK):
        chunk = rows[lo : lo + CHUNK]
        a = point_of[span_combos(chunk, pair_a, q, v)]
        b = point_of[span_combos(chunk, pair_b, q, v)]
        ids = line_of[a, b]
        counts += np.bincount(ids.ravel(), minlength=counts.shape[0]).astype(counts.dtype)
    return counts


def block_line_ids(rows, pair_a, pair_b, q, v, point_of, line_of):
    rows = np.asarray(rows, dtype=np.int64)
    a = point_of[span_combos(rows, pair_a, q, v)]
    b = point_of[span_combos(rows, pair_b, q, v)]
    return line_of[a, b]


def ext_det_batch(rows, q, g, s, add_t, mul_t, inv_t):
    """Determinant over GF(q^g) of each s x s matrix obtained by splitting rows."""
    rows = np.asarray(rows, dtype=np.int64)
    n, k = rows.shape
    Q = q**g
    dets = np.empty(n, dtype=np.int64)
    neg = np.argmax(np.asarray(add_t) == 0, axis=1).tolist()
    add_t = add_t.tolist()
    mul_t = mul_t.tolist()
    inv_t = inv_t.tolist()
    for i in range(n):
        mat = []
        for r in rows[i].tolist():
            coords = []
            for _ in range(s):
                r, c = divmod(r, Q)
                coords.append(c)
            mat.append(coords)
        det = 1
        for c in range(s):
            piv = None
            for ridx in range(c, k):
                if mat[ridx][c]:
                    piv = ridx
                    break
            if piv is None:
                det = 0
                break
            if piv != c:
                mat[c], mat[piv] = mat[piv], mat[c]
                det = neg[det]
            pr = mat[c]
            det = mul_t[det][pr[c]]
            iv = inv_t[pr[c]]
            for ridx in range(c + 1, k):
                row = mat[ridx]
                f = row[c]
                if f:
                    fac = neg[mul_t[f][iv]]
                    for j in range(c, s):
                        row[j] = add_t[row[j]][mul_t[fac][pr[j]]]
        dets[i] = det
    return dets
