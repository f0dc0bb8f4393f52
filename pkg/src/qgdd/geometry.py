"""Index tables for the points and lines of PG(v-1, q).

Verification and the Kramer-Mesner machinery address points and lines by dense
integer ids.  ``Geometry(q, v)`` owns those tables; build it through
:func:`geometry`, which caches one instance per ambient space.
"""

from __future__ import annotations

from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterator

import numpy as np

from . import _kernels as K
from .errors import TooLarge

MATERIALIZE_LIMIT = 2**22
LINE_TABLE_LIMIT = 2**26


def gaussian_binomial(v: int, m: int, q: int) -> int:
    """Number of m-subspaces of GF(q)^v, exact."""
    if m < 0 or m > v:
        return 0
    num = den = 1
    for i in range(m):
        num *= q ** (v - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def pivot_patterns(v: int, k: int) -> Iterator[tuple[int, ...]]:
    return combinations(range(v), k)


def iter_subspace_chunks(q: int, v: int, k: int) -> Iterator[np.ndarray]:
    """All canonical k-subspaces, one ``(n, k)`` array per pivot pattern.

    Chunks are disjoint, so workers may take patterns independently.
    """
    if k == 0:
        yield np.zeros((1, 0), dtype=np.int64)
        return
    for piv in pivot_patterns(v, k):
        yield K.enumerate_pattern(q, v, np.array(piv, dtype=np.int64))


def lex_sort(arr: np.ndarray) -> np.ndarray:
    """Sort rows of a block array lexicographically by (row0, row1, ...)."""
    arr = np.asarray(arr, dtype=np.int64)
    if arr.shape[0] <= 1 or arr.shape[1] == 0:
        return arr
    order = np.lexsort(arr.T[::-1])
    return arr[order]


def subspace_array(q: int, v: int, k: int, allow_large: bool = False) -> np.ndarray:
    """All canonical k-subspaces of GF(q)^v, lexicographically sorted."""
    n = gaussian_binomial(v, k, q)
    if n > MATERIALIZE_LIMIT and not allow_large:
        raise TooLarge(f"[{v} {k}]_{q} = {n} subspaces; pass allow_large=True")
    if k == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return lex_sort(np.concatenate(list(iter_subspace_chunks(q, v, k))))


def row_keys(arr: np.ndarray, base: int) -> np.ndarray:
    """One sortable key per block; int64 when it fits, Python ints otherwise."""
    arr = np.asarray(arr, dtype=np.int64)
    n, k = arr.shape
    if k == 0:
        return np.zeros(n, dtype=np.int64)
    if base**k < 2**63:
        keys = np.zeros(n, dtype=np.int64)
        for t in range(k):
            keys = keys * base + arr[:, t]
        return keys
    keys = np.zeros(n, dtype=object)
    for t in range(k):
        keys = keys * base + arr[:, t].astype(object)
    return keys


class Geometry:
    """Points and lines of GF(q)^v with dense id lookups."""

    def __init__(self, q: int, v: int):
        self.q = q
        self.v = v
        self.size = q**v

    @cached_property
    def points(self) -> np.ndarray:
        """Normalized point vectors, ascending."""
        if self.v == 0:
            return np.zeros(0, dtype=np.int64)
        return subspace_array(self.q, self.v, 1, allow_large=True)[:, 0].copy()

    @property
    def n_points(self) -> int:
        return (self.q**self.v - 1) // (self.q - 1)

    @cached_property
    def point_of(self) -> np.ndarray:
        """Point id of every vector; -1 for the zero vector."""
        table = np.full(self.size, -1, dtype=np.int64)
        ids = np.arange(self.points.shape[0], dtype=np.int64)
        pts = self.points[:, None]
        for c in range(1, self.q):
            scaled = K.span_combos(pts, np.array([c], dtype=np.int64), self.q, self.v)[:, 0]
            table[scaled] = ids
        table.setflags(write=False)
        return table

    @cached_property
    def point_coeffs(self) -> np.ndarray:
        """Alias of points: normalized coefficient vectors, used to list the points of a block."""
        return self.points

    @cached_property
    def line_pairs(self) -> tuple[np.ndarray, np.ndarray]:
        """The lines of GF(q)^v as pairs of RREF rows (a, b)."""
        if self.v < 2:
            z = np.zeros(0, dtype=np.int64)
            return z, z
        arr = subspace_array(self.q, self.v, 2, allow_large=True)
        return arr[:, 0].copy(), arr[:, 1].copy()

    @cached_property
    def lines(self) -> np.ndarray:
        a, b = self.line_pairs
        return np.stack([a, b], axis=1)

    @property
    def n_lines(self) -> int:
        return gaussian_binomial(self.v, 2, self.q)

    @cached_property
    def line_points(self) -> np.ndarray:
        """(n_lines, q+1) point ids of every line."""
        line_coeffs = geometry(self.q, 2).points
        vecs = K.span_combos(self.lines, line_coeffs, self.q, self.v)
        return self.point_of[vecs]

    @cached_property
    def line_of(self) -> np.ndarray:
        """line_of[p, p'] = id of the line through distinct points p, p'."""
        n = self.n_points
        if n * n > LINE_TABLE_LIMIT:
            raise TooLarge(f"line table for GF({self.q})^{self.v} needs {n * n} entries")
        table = np.full((n, n), -1, dtype=np.int64)
        lp = self.line_points
        ids = np.arange(lp.shape[0], dtype=np.int64)
        m = lp.shape[1]
        for i in range(m):
            for j in range(m):
                if i != j:
                    table[lp[:, i], lp[:, j]] = ids
        table.setflags(write=False)
        return table

    def line_id(self, a: int, b: int) -> int:
        """Id of the line spanned by two independent vectors."""
        return int(self.line_of[self.point_of[a], self.point_of[b]])

    def block_points(self, blocks: np.ndarray) -> np.ndarray:
        """(n, [k 1]_q) point ids of each block."""
        blocks = np.asarray(blocks, dtype=np.int64)
        k = blocks.shape[1]
        coeffs = geometry(self.q, k).points
        return self.point_of[K.span_combos(blocks, coeffs, self.q, self.v)]

    def block_lines(self, blocks: np.ndarray) -> np.ndarray:
        """(n, [k 2]_q) line ids of each block."""
        blocks = np.asarray(blocks, dtype=np.int64)
        k = blocks.shape[1]
        a, b = geometry(self.q, k).line_pairs
        return K.block_line_ids(blocks, a, b, self.q, self.v, self.point_of, self.line_of)

    def line_counts(self, blocks: np.ndarray, chunk: int = 1 << 16) -> np.ndarray:
        """Number of blocks through every line."""
        blocks = np.asarray(blocks, dtype=np.int64)
        counts = np.zeros(self.n_lines, dtype=np.int64)
        if blocks.shape[0] == 0 or blocks.shape[1] < 2:
            return counts
        a, b = geometry(self.q, blocks.shape[1]).line_pairs
        for lo in range(0, blocks.shape[0], chunk):
            K.accumulate_lines(
                blocks[lo : lo + chunk], a, b, self.q, self.v, self.point_of, self.line_of, counts
            )
        return counts


@lru_cache(maxsize=32)
def geometry(q: int, v: int) -> Geometry:
    return Geometry(q, v)
