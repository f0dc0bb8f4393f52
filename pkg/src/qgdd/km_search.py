"""Kramer–Mesner search with subgroups of the Singer normalizer.

Matrices are tuples of row encodings and act on row vectors from the right,
x -> xM; a subspace maps to the span of its transformed basis rows.
"""

from __future__ import annotations

import random
import re
import sys
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from . import _kernels as K
from .errors import (
    DecodeError,
    DuplicateBlocks,
    GroupDoesNotStabilizeSpread,
    NonPrimitivePolynomial,
    TooLarge,
)
from .field import Field, create_field, digits
from .gdd import GddInstance
from .geometry import gaussian_binomial, geometry, lex_sort, row_keys
from .grassmann import scattered_subspace_array
from .linalg import Subspace, apply_matrix, canonicalize, identity_matrix, matrix_rank
from .spread import Spread, spread_from_orbit, spread_size

MAX_GROUP_ORDER = 10**6
DEFAULT_NODE_CAP = 10**8

# Block-orbit representatives of a (6,2,3,2)_2-GDD under <σ^7>, published with
# the spread seed [1, 14] and σ = [2, 4, 8, 16, 32, 27].
EXAMPLE_SIGMA = (2, 4, 8, 16, 32, 27)
EXAMPLE_SIGMA7 = (54, 55, 53, 49, 57, 41)
EXAMPLE_SPREAD_SEED = (1, 14)
EXAMPLE_GENERATORS = (
    (3, 16, 32), (15, 16, 32), (4, 8, 32), (5, 8, 32), (19, 24, 32), (7, 24, 32),
    (10, 4, 32), (18, 28, 32), (17, 20, 32), (1, 28, 32), (17, 10, 32), (25, 2, 32),
    (13, 6, 32), (29, 30, 32), (33, 12, 16), (38, 40, 16), (2, 36, 16), (1, 36, 16),
    (11, 12, 16), (19, 20, 8),
)  # fmt: skip

__all__ = [
    "MatrixGroup",
    "Orbit",
    "KmSystem",
    "singer_generator",
    "frobenius_generator",
    "singer_group",
    "subfield_seed",
    "singer_spread",
    "stabilizes",
    "orbits",
    "build_km_system",
    "solve_lambda_cover",
    "reconstruct_from_generators",
    "matrix_power",
]


def _vector_digits(q: int, v: int) -> np.ndarray:
    x = np.arange(q**v, dtype=np.int64)
    return np.stack([(x // q**j) % q for j in range(v)], axis=1)


def matrix_power(M: Sequence[int], e: int, q: int, v: int) -> tuple[int, ...]:
    out = identity_matrix(v, q)
    base = tuple(M)
    while e:
        if e & 1:
            out = tuple(apply_matrix(r, base, q, v) for r in out)
        base = tuple(apply_matrix(r, base, q, v) for r in base)
        e >>= 1
    return out


class MatrixGroup:
    """Group generated by invertible v x v matrices over GF(q)."""

    def __init__(self, generators: Sequence[Sequence[int]], q: int, v: int):
        gens = [tuple(int(x) for x in M) for M in generators]
        for M in gens:
            if len(M) != v or matrix_rank(M, q, v) != v:
                raise ValueError(f"generator {M} is not an invertible {v}x{v} matrix")
        self.generators = gens
        self.q = q
        self.v = v
        self._elements = None
        self._perms = None

    @property
    def perms(self) -> list[np.ndarray]:
        """Each generator as a permutation of the q^v vector encodings."""
        if self._perms is None:
            if self.q**self.v > 2**24:
                raise TooLarge("vector permutations exceed 2^24 entries")
            X = _vector_digits(self.q, self.v)
            weights = self.q ** np.arange(self.v, dtype=np.int64)
            self._perms = []
            for M in self.generators:
                Md = np.array([digits(r, self.q, self.v) for r in M], dtype=np.int64)
                self._perms.append(((X @ Md) % self.q) @ weights)
        return self._perms

    @property
    def elements(self) -> list[tuple[int, ...]]:
        """All group elements, found by closure from the identity."""
        if self._elements is None:
            ident = identity_matrix(self.v, self.q)
            seen = {ident}
            frontier = [ident]
            perms = self.perms
            while frontier:
                nxt = []
                for M in frontier:
                    rows = np.array(M, dtype=np.int64)
                    for p in perms:
                        N = tuple(int(x) for x in p[rows])
                        if N not in seen:
                            seen.add(N)
                            nxt.append(N)
                            if len(seen) > MAX_GROUP_ORDER:
                                raise TooLarge(f"group order exceeds {MAX_GROUP_ORDER}")
                frontier = nxt
            self._elements = sorted(seen)
        return self._elements

    @property
    def order(self) -> int:
        return len(self.elements)

    def apply(self, M: Sequence[int], U: Subspace) -> Subspace:
        return canonicalize([apply_matrix(r, M, self.q, self.v) for r in U.rows], self.v, self.q)

    def orbit_of(self, U: Subspace) -> list[Subspace]:
        """Orbit of a single subspace, sorted by encoding."""
        seen = {U.rows}
        frontier = [U.rows]
        while frontier:
            nxt = []
            for rows in frontier:
                arr = np.array(rows, dtype=np.int64)
                for p in self.perms:
                    img = canonicalize([int(x) for x in p[arr]], self.v, self.q).rows
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
            frontier = nxt
        return [Subspace(self.q, self.v, r) for r in sorted(seen)]

    def __repr__(self):
        return f"MatrixGroup(q={self.q}, v={self.v}, generators={self.generators})"


def singer_generator(field_or_q: Field | int, v: int | None = None, poly=None) -> tuple[int, ...]:
    """Companion matrix of the primitive polynomial: row i is a^(i+1)."""
    F = _big_field(field_or_q, v, poly)
    return tuple(F.exp(i + 1) for i in range(F.g))


def frobenius_generator(field_or_q: Field | int, v: int | None = None, poly=None) -> tuple[int, ...]:
    """Matrix of x -> x^q in the basis 1, a, ..., a^(v-1): row i is a^(iq)."""
    F = _big_field(field_or_q, v, poly)
    return tuple(F.exp(i * F.q) for i in range(F.g))


def _big_field(field_or_q, v, poly) -> Field:
    if isinstance(field_or_q, Field):
        return field_or_q
    if v is None:
        raise ValueError("v is required when a field is not given")
    try:
        return create_field(int(field_or_q), v, poly)
    except NonPrimitivePolynomial:
        raise
    except ValueError as exc:
        raise NonPrimitivePolynomial(str(exc)) from None


def singer_group(F: Field, text: str = "sigma") -> MatrixGroup:
    """Subgroup of <σ, φ> from text like ``"sigma^7"`` or ``"sigma,phi^4"``."""
    sigma = singer_generator(F)
    phi = frobenius_generator(F)
    gens = []
    for part in filter(None, (p.strip() for p in text.replace(" ", "").split(","))):
        m = re.fullmatch(r"(sigma|phi|id)(?:\^(\d+))?", part)
        if not m:
            raise ValueError(f"cannot parse group generator {part!r}")
        name, e = m.group(1), int(m.group(2) or 1)
        base = {"sigma": sigma, "phi": phi, "id": identity_matrix(F.g, F.q)}[name]
        gens.append(matrix_power(base, e, F.q, F.g))
    if not gens:
        gens = [identity_matrix(F.g, F.q)]
    return MatrixGroup(gens, F.q, F.g)


def subfield_seed(F: Field, g: int) -> Subspace:
    """GF(q^g) inside GF(q^v) as a g-dimensional GF(q)-subspace."""
    if F.g % g:
        raise ValueError(f"g={g} does not divide v={F.g}")
    step = (F.order - 1) // (F.q**g - 1)
    return canonicalize([F.exp(i * step) for i in range(g)], F.g, F.q)


def singer_spread(F: Field, g: int, seed: Subspace | None = None) -> Spread:
    """Orbit of the seed (default: the subfield GF(q^g)) under the Singer cycle."""
    if seed is None:
        seed = subfield_seed(F, g)
    return spread_from_orbit(seed, singer_generator(F), spread_size(F.q, F.g, g))


@dataclass
class Orbit:
    representative: tuple[int, ...]
    length: int
    members: np.ndarray = field(repr=False)


def _index_of(objects_sorted: np.ndarray, keys: np.ndarray, images: np.ndarray, base: int) -> np.ndarray:
    ik = row_keys(images, base)
    pos = np.searchsorted(keys, ik)
    pos = np.minimum(pos, len(keys) - 1)
    pos[keys[pos] != ik] = -1
    return pos


def stabilizes(group: MatrixGroup, spread: Spread) -> bool:
    els = spread.elements
    keys = row_keys(els, spread.q**spread.v)
    for p in group.perms:
        img = K.rref_batch(p[els], spread.q, spread.v)
        if np.any(_index_of(els, keys, img, spread.q**spread.v) < 0):
            return False
    return True


def orbits(group: MatrixGroup, objects, spread: Spread | None = None) -> list[Orbit]:
    """Partition canonical subspaces into G-orbits, ordered by representative.

    ``objects`` is an ``(n, k)`` array or a sequence of Subspaces; the set must be
    G-invariant.  When a spread is given, the group is first checked to fix it.
    """
    q, v = group.q, group.v
    if spread is not None and not stabilizes(group, spread):
        raise GroupDoesNotStabilizeSpread("a generator moves a spread element outside the spread")
    if not isinstance(objects, np.ndarray):
        objects = np.array([o.rows for o in objects], dtype=np.int64)
    objs = lex_sort(np.asarray(objects, dtype=np.int64))
    n = objs.shape[0]
    if n == 0:
        return []
    base = q**v
    keys = row_keys(objs, base)
    src, dst = [], []
    for p in group.perms:
        img = K.rref_batch(p[objs], q, v)
        idx = _index_of(objs, keys, img, base)
        if np.any(idx < 0):
            raise GroupDoesNotStabilizeSpread("object set is not invariant under the group")
        src.append(np.arange(n))
        dst.append(idx)
    src = np.concatenate(src)
    dst = np.concatenate(dst)
    graph = coo_matrix((np.ones(src.shape[0], dtype=np.int8), (src, dst)), shape=(n, n))
    ncomp, labels = connected_components(graph, directed=True, connection="weak")
    order = np.argsort(labels, kind="stable")
    bounds = np.flatnonzero(np.diff(labels[order])) + 1
    out = []
    for members in np.split(order, bounds):
        # members are ascending indices into the lex-sorted array, so the first is minimal
        out.append(Orbit(tuple(int(x) for x in objs[members[0]]), len(members), objs[members]))
    out.sort(key=lambda o: o.representative)
    return out


@dataclass
class KmSystem:
    """A[i, j] = blocks of orbit j through the representative of line orbit i."""

    A: np.ndarray
    line_orbits: list[Orbit]
    block_orbits: list[Orbit]
    spread: Spread
    k: int
    group: MatrixGroup | None = None

    @property
    def orbit_lengths(self) -> np.ndarray:
        return np.array([o.length for o in self.block_orbits], dtype=np.int64)

    @property
    def shape(self) -> tuple[int, int]:
        return self.A.shape

    def drop_columns(self, cols: Sequence[int]) -> "KmSystem":
        keep = [j for j in range(self.A.shape[1]) if j not in set(cols)]
        return KmSystem(self.A[:, keep], self.line_orbits, [self.block_orbits[j] for j in keep], self.spread, self.k, self.group)

    def expand(self, selection: Sequence[int], lam: int | None = None) -> GddInstance:
        """Union of the chosen block orbits; ``selection`` is a 0/1 vector."""
        parts = [o.members for o, x in zip(self.block_orbits, selection) if x]
        if parts:
            blocks = lex_sort(np.concatenate(parts))
        else:
            blocks = np.zeros((0, self.k), dtype=np.int64)
        return GddInstance(self.spread, self.k, blocks, lam)


def build_km_system(group: MatrixGroup, spread: Spread, k: int) -> KmSystem:
    if (group.q, group.v) != (spread.q, spread.v):
        raise ValueError("group and spread act on different spaces")
    if not stabilizes(group, spread):
        raise GroupDoesNotStabilizeSpread("a generator moves a spread element outside the spread")
    q, v = spread.q, spread.v
    geo = geometry(q, v)
    blocks = scattered_subspace_array(spread, k)
    uncovered = ~spread.covered_lines()
    line_orbits = orbits(group, lex_sort(geo.lines[uncovered]))
    block_orbits = orbits(group, blocks)
    rep_row = np.full(geo.n_lines, -1, dtype=np.int64)
    for i, o in enumerate(line_orbits):
        rep_row[geo.line_id(*o.representative)] = i
    A = np.zeros((len(line_orbits), len(block_orbits)), dtype=np.int64)
    for j, o in enumerate(block_orbits):
        rows = rep_row[geo.block_lines(o.members).ravel()]
        rows = rows[rows >= 0]
        A[:, j] = np.bincount(rows, minlength=len(line_orbits))
    return KmSystem(A, line_orbits, block_orbits, spread, k, group)


class _Search:
    """Depth-first λ-cover search over the columns of A.

    With ``rng`` set, ties in the branching rule are broken randomly, which is
    used for short restarts; with ``rng=None`` the order is fixed.
    """

    def __init__(self, A: np.ndarray, lam: int, limit: int, node_cap: int, rng: random.Random | None = None):
        self.A = A
        self.limit = limit
        self.node_cap = node_cap
        self.rng = rng
        self.nodes = 0
        self.exhausted = False
        self.solutions: list[np.ndarray] = []
        self.status = np.zeros(A.shape[1], dtype=np.int8)  # 0 open, 1 in, -1 out
        self.r = np.full(A.shape[0], lam, dtype=np.int64)

    def run(self) -> "_Search":
        sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * self.A.shape[1] + 1000))
        self._dfs()
        return self

    def _noise(self, n: int, scale: float) -> np.ndarray:
        if self.rng is None:
            return np.zeros(n)
        return np.array([self.rng.random() * scale for _ in range(n)])

    def _propagate(self, trail: list[int]):
        """Take columns forced by rows whose capacity equals their demand.

        Returns (admissible mask, capacity), or None on a contradiction.
        """
        A = self.A
        while True:
            r = self.r
            if np.any(r < 0):
                return None
            adm = (self.status == 0) & np.all(A <= r[:, None], axis=0)
            cap = A[:, adm].sum(axis=1)
            if np.any(cap < r):
                return None
            tight = np.flatnonzero((r > 0) & (cap == r))
            if tight.shape[0] == 0:
                return adm, cap
            forced = np.flatnonzero(adm & (A[tight].sum(axis=0) > 0))
            for j in forced:
                self.status[j] = 1
                self.r -= A[:, j]
                trail.append(int(j))

    def _dfs(self) -> bool:
        """Returns True to stop the whole search."""
        if self.nodes >= self.node_cap:
            self.exhausted = True
            return True
        self.nodes += 1
        A = self.A
        trail: list[int] = []
        res = self._propagate(trail)
        stop = False
        if res is None:
            pass
        elif not self.r.any():
            self.solutions.append((self.status == 1).astype(np.int8))
            stop = len(self.solutions) >= self.limit
        else:
            adm, cap = res
            r = self.r
            need = np.flatnonzero(r)
            slack = cap[need] - r[need] + self._noise(need.shape[0], 0.5)
            counts = (A[need][:, adm] > 0).sum(axis=1)
            row = int(need[np.lexsort((need, counts, slack))[0]])
            cols = np.flatnonzero(adm & (A[row] > 0))
            # prefer columns serving rows with the least spare capacity
            pressure = np.where(cap > 0, r / np.maximum(cap, 1), 0.0)
            score = pressure @ A[:, cols] + self._noise(cols.shape[0], 1e-3)
            cols = cols[np.argsort(-score, kind="stable")]
            closed = []
            for j in cols:
                self.status[j] = 1
                self.r -= A[:, j]
                stop = self._dfs()
                self.r += A[:, j]
                self.status[j] = -1
                closed.append(j)
                if stop:
                    break
            self.status[closed] = 0
        for j in trail:
            self.status[j] = 0
            self.r += A[:, j]
        return stop


def solve_lambda_cover(
    system: KmSystem,
    lam: int,
    limit: int = 1,
    node_cap: int = DEFAULT_NODE_CAP,
    use_complement: bool = True,
    restarts: int = 64,
    stats: dict | None = None,
) -> list[np.ndarray]:
    """0/1 vectors x with A x = λ·1, found by exact backtracking.

    A column is admissible while it fits the residual demand of every row.  Rows
    whose admissible capacity equals their demand force their columns in; otherwise
    the search branches on the unsatisfied row with the least slack.  When all row
    sums equal some λ_max and λ > λ_max/2, the complementary problem is solved.

    For ``limit == 1`` a fixed-order pass is followed by up to ``restarts`` short
    passes with seeded tie-breaking (seeds 0, 1, ...) and a doubling node budget,
    then by a complete fixed-order pass on what is left of ``node_cap``.  Results
    are reproducible run to run.
    """
    if lam < 1:
        raise ValueError("λ must be positive")
    A = system.A
    sums = A.sum(axis=1)
    flip = False
    target = lam
    if use_complement and A.shape[0] and np.all(sums == sums[0]) and 2 * lam > sums[0]:
        flip = True
        target = int(sums[0]) - lam
    nodes = 0
    exhausted = False
    if target < 0:
        sols = []
    elif target == 0:
        sols = [np.zeros(A.shape[1], dtype=np.int8)]
    else:
        sols = []
        passes = []
        if limit == 1:
            budget = 256
            for attempt in range(restarts + 1):
                rng = None if attempt == 0 else random.Random(attempt - 1)
                passes.append((rng, budget))
                if attempt % 4 == 3:
                    budget = min(2 * budget, 1 << 16)
        passes.append((None, node_cap))
        for rng, budget in passes:
            run = _Search(A, target, limit, min(budget, node_cap - nodes), rng).run()
            nodes += run.nodes
            sols = run.solutions
            # a pass that finishes under budget has explored everything
            if sols or not run.exhausted or nodes >= node_cap:
                break
        exhausted = run.exhausted and len(sols) < limit
    if flip:
        sols = [(1 - x).astype(np.int8) for x in sols]
    if stats is not None:
        stats["nodes"] = nodes
        stats["exhausted"] = exhausted
        stats["complement"] = flip
    return sols[:limit]


def reconstruct_from_generators(
    group: MatrixGroup,
    spread: Spread,
    generator_encodings: Sequence[Sequence[int]],
    lam: int | None = None,
) -> GddInstance:
    """Union of the G-orbits of the given block representatives."""
    q, v = spread.q, spread.v
    parts = []
    k = None
    for enc in generator_encodings:
        rows = [int(x) for x in enc]
        if any(not 0 <= x < q**v for x in rows):
            raise DecodeError(f"row encoding out of range in {enc}")
        U = canonicalize(rows, v, q)
        if U.k != len(rows):
            raise DecodeError(f"{enc} does not have full rank")
        if k is None:
            k = U.k
        elif U.k != k:
            raise DecodeError(f"generators of dimensions {k} and {U.k}")
        parts.extend(o.rows for o in group.orbit_of(U))
    if k is None:
        raise DecodeError("no generators given")
    arr = np.array(parts, dtype=np.int64).reshape(len(parts), k)
    if np.unique(arr, axis=0).shape[0] != arr.shape[0]:
        raise DuplicateBlocks("two generators lie in the same orbit")
    return GddInstance(spread, k, lex_sort(arr), lam)


def lines_count_check(system: KmSystem) -> bool:
    """Column identity: Σ_i A[i, j]·|line orbit i| = |block orbit j|·[k 2]_q."""
    lens = np.array([o.length for o in system.line_orbits], dtype=np.int64)
    lhs = lens @ system.A
    rhs = system.orbit_lengths * gaussian_binomial(system.k, 2, system.spread.q)
    return bool(np.array_equal(lhs, rhs))
