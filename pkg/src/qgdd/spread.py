"""(g-1)-spreads: Desarguesian construction, orbit closure and partition checks."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

import numpy as np

from . import _kernels as K
from .errors import AmbientMismatch, NotAPartition, NotAPoint, TooLarge
from .field import Field, create_field, flatten_int
from .geometry import gaussian_binomial, geometry, lex_sort
from .linalg import Subspace, apply_matrix, array_to_subspaces, canonicalize, normalize_point

SPREAD_LIMIT = 2**24


class Spread:
    """A vector space partition of GF(q)^v into g-dimensional subspaces.

    ``elements`` is an ``(n, g)`` array of canonical rows sorted lexicographically;
    ``elem_of[point_id]`` gives the element containing a point.
    """

    def __init__(self, elements: np.ndarray, q: int, v: int, elem_of: np.ndarray):
        self.elements = elements
        self.q = q
        self.v = v
        self.g = elements.shape[1]
        self.elem_of = elem_of
        elements.setflags(write=False)
        elem_of.setflags(write=False)

    @classmethod
    def from_elements(cls, elements, q: int, v: int) -> "Spread":
        """Validate that ``elements`` partition the points and build the lookup."""
        if isinstance(elements, np.ndarray):
            arr = np.asarray(elements, dtype=np.int64)
        else:
            subs = [e if isinstance(e, Subspace) else canonicalize(e, v, q) for e in elements]
            dims = {s.k for s in subs}
            if len(dims) > 1:
                raise NotAPartition(f"elements of mixed dimensions {sorted(dims)}")
            arr = np.array([s.rows for s in subs], dtype=np.int64).reshape(len(subs), -1)
        if arr.shape[0] == 0:
            raise NotAPartition("empty spread")
        arr = lex_sort(K.rref_batch(arr, q, v))
        if np.unique(arr, axis=0).shape[0] != arr.shape[0]:
            raise NotAPartition("repeated spread element")
        geo = geometry(q, v)
        pts = geo.block_points(arr)
        counts = np.bincount(pts.ravel(), minlength=geo.n_points)
        if counts.shape[0] != geo.n_points or np.any(counts != 1):
            raise NotAPartition(
                f"{int(np.sum(counts == 0))} uncovered and {int(np.sum(counts > 1))} "
                "multiply covered points"
            )
        elem_of = np.empty(geo.n_points, dtype=np.int64)
        elem_of[pts.ravel()] = np.repeat(np.arange(arr.shape[0]), pts.shape[1])
        return cls(arr, q, v, elem_of)

    def __len__(self) -> int:
        return self.elements.shape[0]

    def __iter__(self):
        return iter(array_to_subspaces(self.elements, self.q, self.v))

    def __eq__(self, other):
        return (
            isinstance(other, Spread)
            and (self.q, self.v) == (other.q, other.v)
            and np.array_equal(self.elements, other.elements)
        )

    def __repr__(self):
        return f"Spread(q={self.q}, v={self.v}, g={self.g}, n={len(self)})"

    def element(self, i: int) -> Subspace:
        return Subspace(self.q, self.v, tuple(int(x) for x in self.elements[i]))

    def to_json(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.elements]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[int]], q: int, v: int) -> "Spread":
        return cls.from_elements(np.array(data, dtype=np.int64), q, v)

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.q, self.v, self.g)

    def covered_lines(self) -> np.ndarray:
        """Boolean mask over line ids: lines inside some spread element."""
        geo = geometry(self.q, self.v)
        lp = geo.line_points
        e = self.elem_of[lp]
        return np.all(e == e[:, :1], axis=1)


def element_of(spread: Spread, point) -> int:
    """Index of the spread element containing ``point`` (Subspace of dim 1 or a vector)."""
    if isinstance(point, Subspace):
        if point.q != spread.q or point.v != spread.v:
            raise AmbientMismatch("point lives in a different space")
        if point.k != 1:
            raise NotAPoint(f"expected a point, got dimension {point.k}")
        x = point.rows[0]
    else:
        x = int(point)
        if not 0 < x < spread.q**spread.v:
            raise AmbientMismatch(f"vector {x} is not a nonzero vector of GF({spread.q})^{spread.v}")
    pid = geometry(spread.q, spread.v).point_of[x]
    return int(spread.elem_of[pid])


def desarguesian_spread(field_q: Field | int, g: int, s: int, ext: Field | None = None) -> Spread:
    """Flattened 1-dimensional GF(q^g)-subspaces of GF(q^g)^s."""
    q = field_q.q if isinstance(field_q, Field) else int(field_q)
    if g < 1 or s < 2:
        raise ValueError("need g >= 1 and s >= 2")
    v = g * s
    if q**v > SPREAD_LIMIT:
        raise TooLarge(f"GF({q})^{v} exceeds 2^24 vectors")
    if ext is None:
        ext = create_field(q, g)
    Q = ext.order
    basis_mult = [ext.exp(i) for i in range(g)]  # 1, a, ..., a^(g-1)
    elements = []
    for lead in range(s):
        tail = s - lead - 1
        for idx in range(Q**tail):
            coords = [0] * lead + [1]
            t = idx
            for _ in range(tail):
                t, c = divmod(t, Q)
                coords.append(c)
            rows = [flatten_int([ext.mul(m, c) for c in coords], ext) for m in basis_mult]
            elements.append(rows)
    arr = np.array(elements, dtype=np.int64)
    return Spread.from_elements(arr, q, v)


def orbit_closure(seed: Subspace, generator: Sequence[int], limit: int | None = None) -> list[Subspace]:
    """Distinct images of ``seed`` under powers of ``generator`` (row-vector action)."""
    out = [seed]
    seen = {seed.rows}
    cur = seed
    while True:
        cur = canonicalize([apply_matrix(r, generator, seed.q, seed.v) for r in cur.rows], seed.v, seed.q)
        if cur.rows in seen:
            break
        seen.add(cur.rows)
        out.append(cur)
        if limit is not None and len(out) > limit:
            break
    return out


def spread_from_orbit(seed: Subspace, generator: Sequence[int], expected_size: int) -> Spread:
    """Close ``seed`` under ``generator``; the result must be a spread of the given size."""
    from .linalg import matrix_rank

    if matrix_rank(generator, seed.q, seed.v) != seed.v:
        raise ValueError("generator is singular")
    orbit = orbit_closure(seed, generator, limit=expected_size)
    if len(orbit) != expected_size:
        raise NotAPartition(f"orbit has {len(orbit)} elements, expected {expected_size}")
    return Spread.from_elements(orbit, seed.q, seed.v)


def spread_size(q: int, v: int, g: int) -> int:
    return gaussian_binomial(v, 1, q) // gaussian_binomial(g, 1, q)


def is_normal(spread: Spread) -> bool:
    """Every element is inside or disjoint from the span of any two elements."""
    geo = geometry(spread.q, spread.v)
    per_elem = gaussian_binomial(spread.g, 1, spread.q)
    els = spread.elements
    for i, j in combinations(range(len(spread)), 2):
        joined = canonicalize(list(els[i]) + list(els[j]), spread.v, spread.q)
        pts = geo.block_points(np.array([joined.rows], dtype=np.int64))[0]
        counts = np.bincount(spread.elem_of[pts], minlength=len(spread))
        if np.any((counts != 0) & (counts != per_elem)):
            return False
    return True


def points_of_element(spread: Spread, i: int) -> list[int]:
    """Normalized point vectors of element ``i``."""
    return sorted(normalize_point(int(x), spread.q, spread.v) for x in geometry(spread.q, spread.v).points[spread.elem_of == i])
