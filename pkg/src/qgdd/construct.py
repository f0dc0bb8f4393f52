"""Fat subspaces, their determinant invariant, and the GDDs they assemble into.

For V = GF(q^g)^s flattened to GF(q)^{gs}, a k-subspace is fat when its basis
stays independent over GF(q^g).  Fat s-subspaces split into classes by the
determinant of the unflattened basis, taken modulo GF(q)^*.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

import numpy as np

from . import _kernels as K
from .errors import (
    AmbientMismatch,
    NotAPoint,
    NotFat,
    NotSteinerSampled,
    SelectionOutOfRange,
    SelectionRequired,
    TooLarge,
    WrongDimension,
)
from .field import Field, create_field
from .gdd import GddInstance
from .geometry import MATERIALIZE_LIMIT, gaussian_binomial, geometry, lex_sort
from .grassmann import _ext_tables, fat_subspace_array
from .linalg import Subspace, canonicalize, project_through_point
from .spread import Spread, desarguesian_spread

__all__ = [
    "OrbitSelection",
    "fat_count",
    "fat_gdd_lambda",
    "det_invariant",
    "det_labels",
    "class_labels",
    "coset_label",
    "build_fat_gdd",
    "build_theorem5_gdd",
    "gdd_from_steiner",
]


def fat_count(q: int, g: int, s: int, k: int) -> int:
    """Number of fat k-subspaces of GF(q^g)^s viewed over GF(q)."""
    if not 1 <= k <= s:
        raise ValueError(f"need 1 <= k <= s, got k={k}, s={s}")
    val = Fraction(q ** ((g - 1) * comb(k, 2)))
    for i in range(k):
        val *= Fraction(q ** (g * (s - i)) - 1, q ** (k - i) - 1)
    assert val.denominator == 1
    return int(val)


def fat_gdd_lambda(q: int, g: int, s: int, k: int, alpha: int = 1) -> int:
    """λ of the GDD formed by all fat k-subspaces (k < s) or α det classes (k = s)."""
    if not 3 <= k <= s:
        raise ValueError(f"need 3 <= k <= s, got k={k}, s={s}")
    if k < s:
        val = Fraction(q ** ((g - 1) * (comb(k, 2) - 1)))
        for i in range(2, k):
            val *= Fraction(q ** (g * (s - i)) - 1, q ** (k - i) - 1)
    else:
        val = Fraction(alpha * q ** ((g - 1) * (comb(s, 2) - 1)))
        for i in range(2, s - 1):
            val *= Fraction(q ** (g * i) - 1, q**i - 1)
    assert val.denominator == 1
    return int(val)


def coset_label(x: int, ext: Field) -> int:
    """Smallest encoding among c·x for c in GF(q)^*."""
    if x == 0:
        raise ValueError("zero has no coset in GF(q^g)^*")
    return min(ext.mul(c, x) for c in range(1, ext.q))


def class_labels(ext: Field) -> list[int]:
    """Sorted labels of GF(q^g)^*/GF(q)^*."""
    return sorted({coset_label(x, ext) for x in range(1, ext.order)})


def _label_lookup(ext: Field) -> np.ndarray:
    out = np.zeros(ext.order, dtype=np.int64)
    for x in range(1, ext.order):
        out[x] = coset_label(x, ext)
    return out


def det_labels(blocks: np.ndarray, ext: Field) -> np.ndarray:
    """Coset label of the determinant for each s-row block; 0 marks a non-fat block."""
    blocks = np.asarray(blocks, dtype=np.int64)
    if blocks.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    s = blocks.shape[1]
    dets = K.ext_det_batch(blocks, ext.q, ext.g, s, *_ext_tables(ext))
    return _label_lookup(ext)[dets]


def det_invariant(U: Subspace, ext: Field) -> int:
    """Label of det(A)·GF(q)^* where A is any GF(q^g)-basis matrix of U."""
    if U.q != ext.q or U.v % ext.g:
        raise AmbientMismatch(f"GF({U.q})^{U.v} is not GF({ext.q}^{ext.g})^s")
    s = U.v // ext.g
    if U.k != s:
        raise WrongDimension(f"expected dimension {s}, got {U.k}")
    lab = int(det_labels(np.array([U.rows], dtype=np.int64), ext)[0])
    if lab == 0:
        raise NotFat("subspace is not fat")
    return lab


@dataclass(frozen=True)
class OrbitSelection:
    """A set of determinant classes; ``alpha`` is how many were chosen."""

    chosen_classes: tuple[int, ...]

    @property
    def alpha(self) -> int:
        return len(self.chosen_classes)

    @classmethod
    def parse(cls, items: Iterable, ext: Field) -> "OrbitSelection":
        """Accept encodings or element strings such as ``"a+1"``; normalize to labels."""
        labels = []
        for it in items:
            x = ext.parse_element(it) if isinstance(it, str) else int(it)
            if not 0 < x < ext.order:
                raise SelectionOutOfRange(f"{it!r} is not a nonzero element of GF({ext.order})")
            labels.append(coset_label(x, ext))
        if len(set(labels)) != len(labels):
            raise SelectionOutOfRange("a class was selected twice")
        return cls(tuple(sorted(labels)))

    @classmethod
    def first(cls, alpha: int, ext: Field) -> "OrbitSelection":
        labels = class_labels(ext)
        if not 1 <= alpha <= len(labels):
            raise SelectionOutOfRange(f"alpha must lie in 1..{len(labels)}")
        return cls(tuple(labels[:alpha]))

    def validate(self, ext: Field) -> None:
        labels = class_labels(ext)
        if not 1 <= self.alpha <= len(labels):
            raise SelectionOutOfRange(f"alpha must lie in 1..{len(labels)}")
        bad = [c for c in self.chosen_classes if c not in labels]
        if bad or len(set(self.chosen_classes)) != self.alpha:
            raise SelectionOutOfRange(f"invalid class labels {self.chosen_classes}")


def build_fat_gdd(
    q: int,
    g: int,
    s: int,
    k: int,
    selection: OrbitSelection | Sequence | None = None,
    ext: Field | None = None,
) -> GddInstance:
    """Fat k-subspaces (k < s) or selected determinant classes (k = s) as a GDD."""
    if g < 2 or s < 3 or not 3 <= k <= s:
        raise ValueError(f"need g >= 2, s >= 3 and 3 <= k <= s; got g={g}, s={s}, k={k}")
    if gaussian_binomial(g * s, k, q) > MATERIALIZE_LIMIT:
        raise TooLarge(f"[{g * s} {k}]_{q} subspaces exceed the enumeration limit")
    if ext is None:
        ext = create_field(q, g)
    if k == s and selection is None:
        raise SelectionRequired("k = s needs a choice of determinant classes")
    if selection is not None and not isinstance(selection, OrbitSelection):
        selection = OrbitSelection.parse(selection, ext)
    spread = desarguesian_spread(q, g, s, ext)
    fat = fat_subspace_array(ext, s, k)
    if k < s:
        return GddInstance(spread, k, fat, fat_gdd_lambda(q, g, s, k))
    selection.validate(ext)
    labels = det_labels(fat, ext)
    blocks = fat[np.isin(labels, selection.chosen_classes)]
    return GddInstance(spread, k, blocks, fat_gdd_lambda(q, g, s, k, selection.alpha))


def _random_line(q: int, v: int, rng: random.Random) -> tuple[int, int]:
    while True:
        a = rng.randrange(1, q**v)
        b = rng.randrange(1, q**v)
        L = canonicalize([a, b], v, q)
        if L.k == 2:
            return L.rows


def gdd_from_steiner(
    design_blocks: Sequence[Subspace],
    P: Subspace,
    samples: int = 1000,
    seed: int = 0,
) -> GddInstance:
    """Project a 2-(v+1, k, 1)_q design through the point P.

    Blocks through P become the groups, the rest become the blocks; the target
    λ is q^2.  The Steiner property is only spot-checked on random lines.
    """
    if not design_blocks:
        raise NotSteinerSampled("empty design")
    q, n = P.q, P.v
    if P.k != 1:
        raise NotAPoint(f"expected a point, got dimension {P.k}")
    k = design_blocks[0].k
    for B in design_blocks:
        if B.q != q or B.v != n:
            raise AmbientMismatch("design block and P live in different spaces")
        if B.k != k:
            raise WrongDimension(f"blocks of dimensions {k} and {B.k}")
    arr = np.array([B.rows for B in design_blocks], dtype=np.int64)
    geo = geometry(q, n)
    bpts = geo.block_points(arr)
    rng = random.Random(seed)
    for _ in range(samples):
        a, b = _random_line(q, n, rng)
        ia, ib = geo.point_of[a], geo.point_of[b]
        hits = int(np.sum(np.any(bpts == ia, axis=1) & np.any(bpts == ib, axis=1)))
        if hits != 1:
            raise NotSteinerSampled(f"line [{a}, {b}] lies in {hits} blocks")
    pid = geo.point_of[P.rows[0]]
    through = np.any(bpts == pid, axis=1)
    groups = [project_through_point(design_blocks[i], P) for i in np.flatnonzero(through)]
    blocks = [project_through_point(design_blocks[i], P) for i in np.flatnonzero(~through)]
    spread = Spread.from_elements(groups, q, n - 1)
    out = lex_sort(np.array([b.rows for b in blocks], dtype=np.int64).reshape(len(blocks), k))
    return GddInstance(spread, k, out, q * q)


# name used by the command-line interface and older callers
build_theorem5_gdd = build_fat_gdd
