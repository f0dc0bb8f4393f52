import itertools
import random

import numpy as np
import pytest

from qgdd.construct import (
    OrbitSelection,
    build_fat_gdd,
    class_labels,
    coset_label,
    det_invariant,
    det_labels,
    fat_count,
    fat_gdd_lambda,
    gdd_from_steiner,
)
from qgdd.errors import NotFat, NotSteinerSampled, SelectionOutOfRange, SelectionRequired, WrongDimension
from qgdd.field import create_field, flatten_int, unflatten_int
from qgdd.gdd import verify
from qgdd.geometry import gaussian_binomial
from qgdd.grassmann import fat_subspace_array
from qgdd.linalg import canonicalize, point
from qgdd.spread import Spread


def _leibniz_det(M, F):
    """Permutation-expansion determinant (independent of the elimination kernel)."""
    n = len(M)
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = 1
        for i in range(n):
            term = F.mul(term, M[i][perm[i]])
        total = F.add(total, F.neg(term) if inv % 2 else term)
    return total


@pytest.mark.parametrize("q,g,s,k", [(2, 2, 3, 1), (2, 2, 3, 2), (2, 2, 3, 3), (3, 2, 3, 3), (2, 3, 3, 3), (2, 2, 4, 4), (2, 4, 2, 2), (3, 2, 3, 2)])
def test_fat_count_matches_enumeration(q, g, s, k):
    ext = create_field(q, g)
    assert fat_subspace_array(ext, s, k).shape[0] == fat_count(q, g, s, k)


def test_fat_count_values():
    assert fat_count(3, 2, 3, 3) == 30240
    assert fat_count(2, 2, 3, 3) == 1080
    assert fat_count(2, 3, 4, 1) == gaussian_binomial(12, 1, 2)


@pytest.mark.parametrize("q,g", [(2, 2), (3, 2), (2, 3)])
def test_det_kernel_matches_leibniz(q, g):
    ext = create_field(q, g)
    s = 3
    blocks = fat_subspace_array(ext, s, s)
    rng = np.random.default_rng(7)
    pick = blocks[rng.choice(blocks.shape[0], 150, replace=False)]
    labels = det_labels(pick, ext)
    for row, lab in zip(pick.tolist(), labels.tolist()):
        M = [list(unflatten_int(r, ext, s)) for r in row]
        assert coset_label(_leibniz_det(M, ext), ext) == lab


def test_det_invariant_is_basis_independent():
    ext = create_field(3, 2)
    blocks = fat_subspace_array(ext, 3, 3)
    rng = random.Random(3)
    for row in blocks[:: 1511].tolist():
        U = canonicalize(row, 6, 3)
        lab = det_invariant(U, ext)
        for _ in range(50):
            # random invertible GF(3) recombination of the basis
            while True:
                C = [[rng.randrange(3) for _ in range(3)] for _ in range(3)]
                mixed = [sum_rows(row, c) for c in C]
                if canonicalize(mixed, 6, 3) == U:
                    break
            M = [list(unflatten_int(r, ext, 3)) for r in mixed]
            assert coset_label(_leibniz_det(M, ext), ext) == lab


def sum_rows(rows, coeffs):
    out = [0] * 6
    for c, r in zip(coeffs, rows):
        for j in range(6):
            out[j] = (out[j] + c * ((r // 3**j) % 3)) % 3
    return sum(d * 3**j for j, d in enumerate(out))


def test_gf9_example_lands_in_class_a_plus_1():
    ext = create_field(3, 2)
    U = canonicalize([[0, 1, 0, 0, 1, 1], [0, 0, 1, 0, 0, 0], [0, 0, 1, 2, 0, 1]], 6, 3)
    assert ext.element_str(det_invariant(U, ext)) == "a+1"


def test_det_invariant_errors_and_identity():
    ext = create_field(2, 2)
    e = [flatten_int([1, 0, 0], ext), flatten_int([0, 1, 0], ext), flatten_int([0, 0, 1], ext)]
    assert det_invariant(canonicalize(e, 6, 2), ext) == 1
    with pytest.raises(WrongDimension):
        det_invariant(canonicalize(e[:2], 6, 2), ext)
    with pytest.raises(NotFat):
        det_invariant(canonicalize([1, 2, 4], 6, 2), ext)


def test_class_sizes_are_equal():
    for q, g, s in [(3, 2, 3), (2, 2, 3), (2, 3, 3), (2, 2, 4)]:
        ext = create_field(q, g)
        labels = det_labels(fat_subspace_array(ext, s, s), ext)
        n_classes = (q**g - 1) // (q - 1)
        counts = np.bincount(labels)[class_labels(ext)]
        assert len(counts) == n_classes
        assert np.all(counts == fat_count(q, g, s, s) // n_classes)


@pytest.mark.parametrize(
    "q,g,s,k,alpha,lam",
    [(2, 2, 3, 3, 1, 4), (3, 2, 3, 3, 1, 9), (2, 2, 4, 3, None, 60), (2, 3, 3, 3, 1, 16), (2, 2, 4, 4, 2, 320)],
)
def test_fat_gdd_verifies(q, g, s, k, alpha, lam):
    ext = create_field(q, g)
    sel = OrbitSelection.first(alpha, ext) if alpha else None
    inst = build_fat_gdd(q, g, s, k, sel)
    assert inst.lam == lam == fat_gdd_lambda(q, g, s, k, alpha or 1)
    rep = verify(inst)
    assert rep.is_gdd and rep.lambda_observed == lam


@pytest.mark.parametrize("q,g,s,k", [(2, 2, 4, 3), (2, 3, 4, 3), (3, 2, 4, 3), (2, 2, 5, 4)])
def test_fat_lambda_double_count(q, g, s, k):
    # every uncovered line sits in λ fat k-subspaces
    assert fat_count(q, g, s, 2) * fat_gdd_lambda(q, g, s, k) == fat_count(q, g, s, k) * gaussian_binomial(k, 2, q)


def test_selection_errors():
    ext = create_field(2, 2)
    with pytest.raises(SelectionRequired):
        build_fat_gdd(2, 2, 3, 3)
    with pytest.raises(SelectionOutOfRange):
        OrbitSelection.first(4, ext)
    with pytest.raises(SelectionOutOfRange):
        OrbitSelection.parse(["0"], ext)
    with pytest.raises(SelectionOutOfRange):
        OrbitSelection.parse(["1", "1"], ext)
    with pytest.raises(SelectionOutOfRange):
        OrbitSelection((5,)).validate(ext)
    assert OrbitSelection.parse(["a+1"], ext).chosen_classes == (3,)


def test_steiner_sampling_rejects_non_designs():
    B = canonicalize([1, 2, 4], 5, 2)
    with pytest.raises(NotSteinerSampled):
        gdd_from_steiner([B], point(1, 5, 2))


def test_steiner_projection_of_synthetic_design():
    # All 3-subspaces of GF(2)^4 through a point P, plus nothing else, covers
    # lines through P thrice; instead use the planes through a line spread lift:
    # the 2-(3,2,1) design of all lines of GF(2)^3 is Steiner (every 2-space is itself a block).
    q, n = 2, 3
    lines = [canonicalize([a, b], n, q) for a in range(1, 8) for b in range(a + 1, 8)]
    uniq = sorted({L.rows for L in lines if L.k == 2})
    design = [canonicalize(list(r), n, q) for r in uniq]
    P = point(1, n, q)
    inst = gdd_from_steiner(design, P, samples=50)
    # blocks through P project to points: a 1-spread of GF(2)^2, i.e. all 3 points
    assert isinstance(inst.spread, Spread) and len(inst.spread) == 3 and inst.spread.g == 1
    assert inst.lam == 4
    assert all(b.k == 2 for b in inst.block_subspaces())
