"""The (v, g, k, λ)_q-GDD data model and its verifier."""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import _kernels as K
from .errors import (
    BlockDimensionMismatch,
    BlockMeetsGroupBadly,
    DuplicateBlocks,
    NoLambdaMax,
    TooLarge,
)
from .geometry import gaussian_binomial, geometry, lex_sort, row_keys
from .grassmann import GrassmannIter, scattered_mask
from .linalg import Subspace, array_to_subspaces, normalize_point
from .params import (
    block_count,
    lambda_max_g2k4,
    lambda_max_k3,
    replication,
)
from .spread import Spread

BRUTEFORCE_LIMIT = 2**23
MAX_WITNESSES = 16

__all__ = [
    "GddInstance",
    "VerificationReport",
    "PointMultiset",
    "verify",
    "lambda_max_k3",
    "lambda_max_g2k4",
    "lambda_max_bruteforce",
    "supplementary",
    "qr_divisibility",
    "thread_count",
]


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("QGDD_THREADS", "1")))
    except ValueError:
        return 1


def blocks_to_array(blocks, k: int, q: int, v: int) -> np.ndarray:
    """Canonical ``(n, k)`` array from Subspaces, row lists or an array."""
    if isinstance(blocks, np.ndarray):
        arr = np.asarray(blocks, dtype=np.int64)
        if arr.ndim != 2 or (arr.shape[0] and arr.shape[1] != k):
            raise BlockDimensionMismatch(f"block array of shape {arr.shape}, expected (n, {k})")
        arr = arr.reshape(-1, k)
    else:
        rows = []
        for i, b in enumerate(blocks):
            r = b.rows if isinstance(b, Subspace) else tuple(int(x) for x in b)
            if isinstance(b, Subspace) and (b.q != q or b.v != v):
                raise BlockDimensionMismatch(f"block {i} lives in GF({b.q})^{b.v}")
            if len(r) != k:
                raise BlockDimensionMismatch(f"block {i} has {len(r)} rows, expected {k}")
            rows.append(r)
        arr = np.array(rows, dtype=np.int64).reshape(len(rows), k)
    if arr.shape[0] == 0:
        return arr
    try:
        canon = K.rref_batch(arr, q, v)
    except ValueError as exc:
        raise BlockDimensionMismatch(str(exc)) from None
    return canon


@dataclass
class GddInstance:
    """(V, spread, blocks) with parameters (q, v, g, k) and an optional claimed λ."""

    spread: Spread
    k: int
    blocks: np.ndarray
    lam: int | None = None

    def __post_init__(self):
        self.blocks = blocks_to_array(self.blocks, self.k, self.q, self.v)

    @property
    def q(self) -> int:
        return self.spread.q

    @property
    def v(self) -> int:
        return self.spread.v

    @property
    def g(self) -> int:
        return self.spread.g

    @property
    def params(self) -> tuple[int, int, int, int, int | None]:
        return (self.q, self.v, self.g, self.k, self.lam)

    def __len__(self) -> int:
        return self.blocks.shape[0]

    def block_subspaces(self) -> list[Subspace]:
        return array_to_subspaces(self.blocks, self.q, self.v)

    def sorted(self) -> "GddInstance":
        return GddInstance(self.spread, self.k, lex_sort(self.blocks), self.lam)


@dataclass
class VerificationReport:
    is_gdd: bool
    lambda_observed: int | None
    line_histogram: dict[int, int]
    offending_lines: list[list[int]] = field(default_factory=list)
    n_blocks: int = 0
    expected_blocks: int | None = None
    replication_expected: int | None = None
    replication_ok: bool | None = None
    covered_line_hits: int = 0
    double_count_ok: bool = True
    messages: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "is_gdd": self.is_gdd,
            "lambda_observed": self.lambda_observed,
            "line_histogram": {str(c): n for c, n in sorted(self.line_histogram.items())},
            "offending_lines": self.offending_lines,
            "n_blocks": self.n_blocks,
            "expected_blocks": self.expected_blocks,
            "replication_expected": self.replication_expected,
            "replication_ok": self.replication_ok,
            "messages": self.messages,
        }


def _line_counts(geo, blocks: np.ndarray) -> np.ndarray:
    workers = thread_count()
    n = blocks.shape[0]
    if workers == 1 or n < 4096:
        return geo.line_counts(blocks)
    parts = np.array_split(blocks, workers)
    with ThreadPoolExecutor(workers) as ex:
        results = list(ex.map(geo.line_counts, parts))
    return np.sum(results, axis=0)


def verify(instance: GddInstance) -> VerificationReport:
    """Check the GDD condition on every line and the counting identities."""
    q, v, g, k = instance.q, instance.v, instance.g, instance.k
    spread = instance.spread
    blocks = instance.blocks
    n = blocks.shape[0]
    msgs: list[str] = []
    if n:
        keys = row_keys(blocks, q**v)
        uniq = np.unique(keys)
        if uniq.shape[0] != n:
            raise DuplicateBlocks(f"{n - uniq.shape[0]} repeated blocks")
        if k >= 2:
            bad = np.flatnonzero(~scattered_mask(blocks, spread))
            if bad.shape[0]:
                raise BlockMeetsGroupBadly(
                    f"{bad.shape[0]} blocks contain a spread line, first: "
                    f"{[int(x) for x in blocks[bad[0]]]}"
                )
    geo = geometry(q, v)
    counts = _line_counts(geo, blocks) if n else np.zeros(geo.n_lines, dtype=np.int64)
    covered = spread.covered_lines()
    covered_hits = int(counts[covered].sum())
    free = counts[~covered]
    hist = dict(sorted(Counter(free.tolist()).items()))
    values = list(hist)
    observed = values[0] if len(values) == 1 else None
    target = instance.lam if instance.lam is not None else observed
    if target is None:
        target = max(hist, key=lambda c: hist[c])
    bad_lines = np.flatnonzero((counts != target) & ~covered)
    witnesses = [[int(x) for x in geo.lines[i]] for i in bad_lines[:MAX_WITNESSES]]
    is_gdd = bad_lines.shape[0] == 0 and covered_hits == 0 and len(spread) > 1
    if len(spread) <= 1:
        msgs.append("spread has a single element")
    if instance.lam is not None and observed is not None and observed != instance.lam:
        msgs.append(f"claimed λ = {instance.lam}, observed {observed}")
    double_count_ok = int(counts.sum()) == n * gaussian_binomial(k, 2, q)
    if not double_count_ok:
        msgs.append("line incidences do not add up to |blocks| * [k 2]_q")
    rep = VerificationReport(
        is_gdd=is_gdd,
        lambda_observed=observed,
        line_histogram=hist,
        offending_lines=witnesses,
        n_blocks=n,
        covered_line_hits=covered_hits,
        double_count_ok=double_count_ok,
        messages=msgs,
    )
    if observed is not None and k >= 2:
        expected = block_count(q, v, g, k, observed)
        r = replication(q, v, g, k, observed)
        rep.expected_blocks = int(expected) if expected.denominator == 1 else None
        if rep.expected_blocks != n:
            msgs.append(f"block count {n} differs from the forced {expected}")
            rep.is_gdd = False
        if r.denominator == 1:
            rep.replication_expected = int(r)
            pts = geo.block_points(blocks) if n else np.zeros((0, 1), dtype=np.int64)
            per_point = np.bincount(pts.ravel(), minlength=geo.n_points)
            rep.replication_ok = bool(np.all(per_point == int(r)))
        else:
            rep.replication_ok = False
        if not rep.replication_ok:
            msgs.append("replication numbers differ between points")
            rep.is_gdd = False
    return rep


def lambda_max_bruteforce(spread: Spread, k: int, limit: int = BRUTEFORCE_LIMIT) -> int | None:
    """Coverage of uncovered lines by all scattered k-subspaces, if constant."""
    q, v = spread.q, spread.v
    total = gaussian_binomial(v, k, q)
    if total > limit:
        raise TooLarge(f"[{v} {k}]_{q} = {total} exceeds the limit {limit}")
    geo = geometry(q, v)
    counts = np.zeros(geo.n_lines, dtype=np.int64)
    for chunk in GrassmannIter(v, k, q, "scattered", spread=spread).chunks():
        counts += geo.line_counts(chunk)
    free = counts[~spread.covered_lines()]
    if free.shape[0] == 0:
        return None
    return int(free[0]) if np.all(free == free[0]) else None


def supplementary(instance: GddInstance, lam_max: int | None = None, limit: int = BRUTEFORCE_LIMIT) -> GddInstance:
    """Scattered k-subspaces not in the instance; a GDD with index λ_max - λ."""
    spread, k = instance.spread, instance.k
    if lam_max is None:
        lam_max = lambda_max_bruteforce(spread, k, limit)
        if lam_max is None:
            raise NoLambdaMax("scattered k-subspaces do not cover lines uniformly")
    everything = GrassmannIter(spread.v, k, spread.q, "scattered", spread=spread).to_array(
        allow_large=True
    )
    base = spread.q**spread.v
    mine = row_keys(instance.blocks, base)
    keep = ~np.isin(row_keys(everything, base), mine)
    lam = instance.lam
    if lam is None:
        lam = verify(instance).lambda_observed if len(instance) else 0
    return GddInstance(spread, k, everything[keep], None if lam is None else lam_max - lam)


class PointMultiset:
    """Multiset of points of GF(q)^v given by a weight per normalized point vector."""

    def __init__(self, weights: dict[int, int], q: int, v: int):
        self.q = q
        self.v = v
        self.weights = {
            normalize_point(int(p), q, v): 0 for p in weights
        }
        for p, w in weights.items():
            if w < 0:
                raise ValueError("negative multiplicity")
            self.weights[normalize_point(int(p), q, v)] += int(w)
        self.weights = {p: w for p, w in self.weights.items() if w}

    @classmethod
    def from_subspaces(cls, subspaces: Iterable, q: int, v: int) -> "PointMultiset":
        """Replace each subspace by its points (with multiplicity)."""
        geo = geometry(q, v)
        w: Counter = Counter()
        for s in subspaces:
            rows = s.rows if isinstance(s, Subspace) else tuple(int(x) for x in s)
            if not rows:
                continue
            ids = geo.block_points(np.array([rows], dtype=np.int64))[0]
            for pid in ids.tolist():
                w[int(geo.points[pid])] += 1
        return cls(dict(w), q, v)

    def __len__(self) -> int:
        return sum(self.weights.values())

    @property
    def size(self) -> int:
        return len(self)

    def max_weight(self) -> int:
        return max(self.weights.values(), default=0)

    def complement(self, lam: int) -> "PointMultiset":
        if self.max_weight() > lam:
            raise ValueError(f"weight exceeds λ = {lam}")
        pts = geometry(self.q, self.v).points.tolist()
        return PointMultiset({p: lam - self.weights.get(p, 0) for p in pts}, self.q, self.v)

    def weight_vector(self) -> np.ndarray:
        geo = geometry(self.q, self.v)
        w = np.zeros(geo.n_points, dtype=np.int64)
        for p, m in self.weights.items():
            w[geo.point_of[p]] += m
        return w

    def hyperplane_counts(self) -> np.ndarray:
        """#(P ∩ H) for every hyperplane H = ker(x ↦ c·x), indexed by the point id of c."""
        geo = geometry(self.q, self.v)
        pw = self.q ** np.arange(self.v, dtype=np.int64)
        d = (geo.points[:, None] // pw) % self.q
        dots = (d @ d.T) % self.q
        return (dots == 0).astype(np.int64) @ self.weight_vector()


def _valuation(n: int, q: int) -> int:
    r = 0
    while n % q == 0:
        n //= q
        r += 1
    return r


def qr_divisibility(points: PointMultiset, v: int | None = None, q: int | None = None) -> int:
    """Largest r < v with #P ≡ #(P ∩ H) mod q^r for all hyperplanes H."""
    v = points.v if v is None else v
    q = points.q if q is None else q
    cap = v - 1
    total = len(points)
    diffs = total - points.hyperplane_counts()
    r = cap
    for d in np.unique(np.abs(diffs)).tolist():
        if d:
            r = min(r, _valuation(int(d), q))
    return r
