"""Subspaces of GF(q)^v in canonical reduced row echelon form.

A vector is the integer ``sum(x_j * q**j)`` (column 0 is the least significant
digit), which is also the on-disk encoding.  The pivot of a row is its lowest
nonzero column; canonical rows are sorted by pivot, pivot entries are 1 and
pivot columns are zero in all other rows.  For q = 2 the encoding is a bitmask
and all arithmetic is XOR on machine words.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from ._kernels import rref_rows
from .errors import DimensionMismatch, NotAPoint
from .field import digits, undigits


def vec_add(x: int, y: int, q: int, v: int) -> int:
    if q == 2:
        return x ^ y
    return undigits([a + b for a, b in zip(digits(x, q, v), digits(y, q, v))], q)


def vec_scale(x: int, c: int, q: int, v: int) -> int:
    c %= q
    if q == 2:
        return x if c else 0
    return undigits([a * c for a in digits(x, q, v)], q)


def vec_axpy(x: int, c: int, y: int, q: int, v: int) -> int:
    """x + c*y."""
    if q == 2:
        return x ^ y if c & 1 else x
    return undigits([a + c * b for a, b in zip(digits(x, q, v), digits(y, q, v))], q)


def pivot(x: int, q: int) -> int:
    """Lowest nonzero coordinate of a nonzero vector."""
    if q == 2:
        return (x & -x).bit_length() - 1
    j = 0
    while x % q == 0:
        x //= q
        j += 1
    return j


def normalize_point(x: int, q: int, v: int) -> int:
    """Scale a nonzero vector so that its pivot entry is 1."""
    if x == 0:
        raise NotAPoint("zero vector")
    if q == 2:
        return x
    p = pivot(x, q)
    lead = (x // q**p) % q
    return vec_scale(x, pow(lead, q - 2, q), q, v)


@dataclass(frozen=True)
class Subspace:
    """Canonical k-subspace of GF(q)^v.  Identity is equality of row encodings."""

    q: int
    v: int
    rows: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.rows)

    dim = k

    @property
    def encoding(self) -> list[int]:
        return list(self.rows)

    def matrix(self) -> list[list[int]]:
        return [digits(r, self.q, self.v) for r in self.rows]

    def vectors(self) -> list[int]:
        """All q^k vectors of the subspace (including 0)."""
        out = [0]
        for r in self.rows:
            out = [vec_axpy(x, c, r, self.q, self.v) for c in range(self.q) for x in out]
        return out

    def points(self) -> list[int]:
        """Normalized encodings of the (q^k - 1)/(q - 1) points, sorted."""
        return sorted({normalize_point(x, self.q, self.v) for x in self.vectors() if x})

    def __repr__(self) -> str:
        return f"Subspace(q={self.q}, v={self.v}, rows={list(self.rows)})"


def _as_encodings(rows: Iterable, q: int, v: int) -> list[int]:
    out = []
    limit = q**v
    for r in rows:
        if isinstance(r, (int, np.integer)):
            r = int(r)
            if not 0 <= r < limit:
                raise DimensionMismatch(f"row encoding {r} out of range for GF({q})^{v}")
            out.append(r)
        else:
            r = list(r)
            if len(r) != v:
                raise DimensionMismatch(f"row of length {len(r)} in ambient dimension {v}")
            out.append(undigits([int(x) for x in r], q))
    return out


def canonicalize(rows: Iterable, v: int, q: int = 2) -> Subspace:
    """Span of ``rows`` (integer encodings or length-v coefficient sequences)."""
    enc = _as_encodings(rows, q, v)
    return Subspace(q, v, tuple(rref_rows(enc, q, v)))


def span(rows: Iterable, v: int, q: int = 2) -> Subspace:
    return canonicalize(rows, v, q)


def point(x, v: int, q: int = 2) -> Subspace:
    s = canonicalize([x], v, q)
    if s.k != 1:
        raise NotAPoint("zero vector does not span a point")
    return s


def zero_subspace(v: int, q: int = 2) -> Subspace:
    return Subspace(q, v, ())


def whole_space(v: int, q: int = 2) -> Subspace:
    return Subspace(q, v, tuple(q**j for j in range(v)))


def _check_same(U: Subspace, W: Subspace):
    if U.q != W.q or U.v != W.v:
        raise DimensionMismatch(f"GF({U.q})^{U.v} vs GF({W.q})^{W.v}")


def reduce_vector(x: int, U: Subspace) -> int:
    """Remainder of x after clearing U's pivot columns."""
    q, v = U.q, U.v
    for r in U.rows:
        p = pivot(r, q)
        c = (x // q**p) % q if q != 2 else (x >> p) & 1
        if c:
            x = vec_axpy(x, q - c, r, q, v)
    return x


def sum_dim(U: Subspace, W: Subspace) -> int:
    _check_same(U, W)
    return len(rref_rows(list(U.rows) + list(W.rows), U.q, U.v))


def join(U: Subspace, W: Subspace) -> Subspace:
    _check_same(U, W)
    return Subspace(U.q, U.v, tuple(rref_rows(list(U.rows) + list(W.rows), U.q, U.v)))


def intersect(U: Subspace, W: Subspace) -> Subspace:
    """Zassenhaus: reduce [[U | U], [W | 0]]; rows with zero left half span U ∩ W."""
    _check_same(U, W)
    q, v = U.q, U.v
    shift = q**v
    stacked = [u + u * shift for u in U.rows] + list(W.rows)
    red = rref_rows(stacked, q, 2 * v)
    return canonicalize([r // shift for r in red if r % shift == 0], v, q)


def contains(U: Subspace, W) -> bool:
    """True if W (a Subspace or a vector encoding) lies in U."""
    if isinstance(W, Subspace):
        _check_same(U, W)
        return all(reduce_vector(r, U) == 0 for r in W.rows)
    return reduce_vector(int(W), U) == 0


def project_through_point(U: Subspace, P: Subspace) -> Subspace:
    """Image of U in V/P, coordinatized by dropping P's pivot column after reduction."""
    _check_same(U, P)
    if P.k != 1:
        raise NotAPoint(f"expected a point, got dimension {P.k}")
    q, v = U.q, U.v
    p = P.rows[0]
    c = pivot(p, q)
    out = []
    for r in U.rows:
        r = reduce_vector(r, P)
        low = r % q**c
        high = r // q ** (c + 1)
        out.append(low + high * q**c)
    return canonicalize(out, v - 1, q)


def apply_matrix(x: int, M: Sequence[int], q: int, v: int) -> int:
    """Row vector times matrix, M given as its row encodings."""
    if q == 2:
        out = 0
        j = 0
        while x:
            if x & 1:
                out ^= M[j]
            x >>= 1
            j += 1
        return out
    out = 0
    for j, c in enumerate(digits(x, q, v)):
        if c:
            out = vec_axpy(out, c, M[j], q, v)
    return out


def matmul(A: Sequence[int], B: Sequence[int], q: int, v: int) -> tuple[int, ...]:
    return tuple(apply_matrix(a, B, q, v) for a in A)


def identity_matrix(v: int, q: int = 2) -> tuple[int, ...]:
    return tuple(q**j for j in range(v))


def matrix_rank(M: Sequence[int], q: int, v: int) -> int:
    return len(rref_rows(list(M), q, v))


def transform(U: Subspace, M: Sequence[int]) -> Subspace:
    return canonicalize([apply_matrix(r, M, U.q, U.v) for r in U.rows], U.v, U.q)


def subspaces_to_array(subs: Sequence[Subspace], k: int | None = None) -> np.ndarray:
    if not subs:
        return np.zeros((0, k or 0), dtype=np.int64)
    return np.array([s.rows for s in subs], dtype=np.int64).reshape(len(subs), -1)


def array_to_subspaces(arr: np.ndarray, q: int, v: int) -> list[Subspace]:
    return [Subspace(q, v, tuple(int(x) for x in row)) for row in np.asarray(arr)]
