"""Counting and enumerating subspaces; fat and scattered predicates."""

from __future__ import annotations

from typing import TYPE_CHECKING, Iterator

import numpy as np

from . import _kernels as K
from .errors import AmbientMismatch, ConstraintRequiresSpread, TooLarge
from .field import Field, create_field
from .geometry import (
    MATERIALIZE_LIMIT,
    gaussian_binomial,
    geometry,
    iter_subspace_chunks,
    lex_sort,
    subspace_array,
)
from .linalg import Subspace, array_to_subspaces, pivot

if TYPE_CHECKING:
    from .spread import Spread

__all__ = [
    "gaussian_binomial",
    "GrassmannIter",
    "enumerate_k_subspaces",
    "subspace_array",
    "is_fat",
    "is_scattered",
    "fat_mask",
    "scattered_mask",
    "fat_subspace_array",
    "scattered_subspace_array",
]


def _ext_tables(ext: Field):
    inv = np.zeros(ext.order, dtype=np.int64)
    for x in range(1, ext.order):
        inv[x] = ext.inv(x)
    return ext.add_table, ext.mul_table, inv


def fat_mask(blocks: np.ndarray, ext: Field, s: int) -> np.ndarray:
    """True where the rows of a block are GF(q^g)-independent."""
    blocks = np.asarray(blocks, dtype=np.int64)
    if blocks.shape[0] == 0:
        return np.zeros(0, dtype=bool)
    add_t, mul_t, inv_t = _ext_tables(ext)
    ranks = K.ext_rank_batch(blocks, ext.q, ext.g, s, add_t, mul_t, inv_t)
    return ranks == blocks.shape[1]


def is_fat(U: Subspace, ext: Field) -> bool:
    if U.q != ext.q or U.v % ext.g:
        raise AmbientMismatch(f"GF({U.q})^{U.v} is not GF({ext.q}^{ext.g})^s")
    s = U.v // ext.g
    if U.k > s:
        return False
    if U.k == 0:
        return True
    return bool(fat_mask(np.array([U.rows], dtype=np.int64), ext, s)[0])


def scattered_mask(blocks: np.ndarray, spread: "Spread") -> np.ndarray:
    """True where a block meets every spread element in dimension <= 1."""
    blocks = np.asarray(blocks, dtype=np.int64)
    if blocks.shape[0] == 0:
        return np.zeros(0, dtype=bool)
    k = blocks.shape[1]
    geo = geometry(spread.q, spread.v)
    coeffs = geometry(spread.q, k).points
    return K.scattered_mask(blocks, coeffs, spread.q, spread.v, geo.point_of, spread.elem_of)


def is_scattered(U: Subspace, spread: "Spread") -> bool:
    if U.q != spread.q or U.v != spread.v:
        raise AmbientMismatch("subspace and spread live in different spaces")
    if U.k <= 1:
        return True
    return bool(scattered_mask(np.array([U.rows], dtype=np.int64), spread)[0])


def _through_chunks(W: Subspace, k: int) -> Iterator[np.ndarray]:
    """k-subspaces containing W, via (k - dim W)-subspaces of a complement."""
    q, v, w = W.q, W.v, W.k
    if k < w:
        return
    pivots = {pivot(r, q) for r in W.rows}
    free_cols = [c for c in range(v) if c not in pivots]
    wrows = np.array(W.rows, dtype=np.int64)
    for chunk in iter_subspace_chunks(q, v - w, k - w):
        lifted = np.zeros_like(chunk)
        for t, c in enumerate(free_cols):
            lifted += ((chunk // q**t) % q) * q**c
        full = np.concatenate([np.tile(wrows, (chunk.shape[0], 1)), lifted], axis=1)
        yield K.rref_batch(full, q, v)


class GrassmannIter:
    """Stream of canonical k-subspaces of GF(q)^v under an optional constraint.

    ``constraint`` is one of ``None``, ``"fat"`` (needs ``ext``), ``"scattered"``
    (needs ``spread``) or ``"through"`` (needs ``through``).  Iterating yields
    :class:`Subspace` objects; :meth:`chunks` yields ``(n, k)`` arrays for bulk work.
    """

    def __init__(
        self,
        v: int,
        k: int,
        q: int = 2,
        constraint: str | None = None,
        *,
        spread: "Spread | None" = None,
        ext: Field | None = None,
        g: int | None = None,
        through: Subspace | None = None,
    ):
        if not 0 <= k <= v:
            raise ValueError(f"need 0 <= k <= v, got k={k}, v={v}")
        if constraint == "scattered" and spread is None:
            raise ConstraintRequiresSpread("scattered enumeration needs a spread")
        if constraint == "fat" and ext is None:
            if g is None and spread is not None:
                g = spread.g
            if g is None:
                raise ValueError("fat enumeration needs ext or g")
            ext = create_field(q, g)
        if constraint == "through" and through is None:
            raise ValueError("through-constraint needs a subspace")
        if constraint not in (None, "fat", "scattered", "through"):
            raise ValueError(f"unknown constraint {constraint!r}")
        if spread is not None and (spread.q != q or spread.v != v):
            raise AmbientMismatch("spread lives in a different space")
        self.v, self.k, self.q = v, k, q
        self.constraint = constraint
        self.spread = spread
        self.ext = ext
        self.through = through

    def chunks(self) -> Iterator[np.ndarray]:
        if self.constraint == "through":
            yield from _through_chunks(self.through, self.k)
            return
        for chunk in iter_subspace_chunks(self.q, self.v, self.k):
            if self.constraint == "fat":
                if self.k > self.v // self.ext.g:
                    continue
                chunk = chunk[fat_mask(chunk, self.ext, self.v // self.ext.g)]
            elif self.constraint == "scattered":
                chunk = chunk[scattered_mask(chunk, self.spread)]
            if chunk.shape[0]:
                yield chunk

    def __iter__(self) -> Iterator[Subspace]:
        for chunk in self.chunks():
            yield from array_to_subspaces(chunk, self.q, self.v)

    def count(self) -> int:
        return sum(c.shape[0] for c in self.chunks())

    def to_array(self, allow_large: bool = False) -> np.ndarray:
        """All matches, lexicographically sorted."""
        if not allow_large and gaussian_binomial(self.v, self.k, self.q) > MATERIALIZE_LIMIT:
            raise TooLarge("enumeration exceeds the materialization limit")
        parts = list(self.chunks())
        if not parts:
            return np.zeros((0, self.k), dtype=np.int64)
        return lex_sort(np.concatenate(parts))


def enumerate_k_subspaces(v, k, field=2, constraint=None, **kw) -> GrassmannIter:
    q = field.q if isinstance(field, Field) else int(field)
    return GrassmannIter(v, k, q, constraint, **kw)


def fat_subspace_array(ext: Field, s: int, k: int, allow_large: bool = False) -> np.ndarray:
    return GrassmannIter(ext.g * s, k, ext.q, "fat", ext=ext).to_array(allow_large)


def scattered_subspace_array(spread: "Spread", k: int, allow_large: bool = False) -> np.ndarray:
    return GrassmannIter(spread.v, k, spread.q, "scattered", spread=spread).to_array(allow_large)
