import itertools

import pytest
from hypothesis import given, strategies as st

from qgdd.errors import DimensionMismatch, NotAPoint
from qgdd.field import digits
from qgdd.linalg import (
    Subspace,
    apply_matrix,
    canonicalize,
    contains,
    identity_matrix,
    intersect,
    join,
    matmul,
    point,
    project_through_point,
    sum_dim,
    transform,
)

SPACES = [(2, 4), (2, 6), (3, 3), (3, 4), (5, 3)]


def _span_set(rows, q, v):
    """Every vector in the span, by brute force over coefficient tuples."""
    out = set()
    for cs in itertools.product(range(q), repeat=len(rows)):
        acc = [0] * v
        for c, r in zip(cs, rows):
            for j, d in enumerate(digits(r, q, v)):
                acc[j] = (acc[j] + c * d) % q
        out.add(sum(d * q**j for j, d in enumerate(acc)))
    return out


def rows_strategy():
    return st.sampled_from(SPACES).flatmap(
        lambda qv: st.tuples(
            st.just(qv), st.lists(st.integers(0, qv[0] ** qv[1] - 1), min_size=0, max_size=4)
        )
    )


@given(rows_strategy())
def test_canonical_form_is_idempotent_and_span_preserving(data):
    (q, v), rows = data
    U = canonicalize(rows, v, q)
    assert canonicalize(list(U.rows), v, q) == U
    assert set(U.vectors()) == _span_set(rows, q, v)


@given(rows_strategy(), st.integers(0, 2**32 - 1))
def test_canonical_form_ignores_basis(data, seed):
    import random

    (q, v), rows = data
    U = canonicalize(rows, v, q)
    rng = random.Random(seed)
    basis = list(U.rows)
    # unitriangular recombination keeps the span
    mixed = []
    for i, x in enumerate(basis):
        for y in basis[i + 1 :]:
            x = _add(x, y, rng.randrange(q), q, v)
        mixed.append(x)
    rng.shuffle(mixed)
    assert canonicalize(mixed, v, q) == U


def _add(x, y, c, q, v):
    dx, dy = digits(x, q, v), digits(y, q, v)
    return sum(((a + c * b) % q) * q**j for j, (a, b) in enumerate(zip(dx, dy)))


def test_rref_shape():
    U = canonicalize([[1, 1, 0, 0], [0, 1, 1, 0]], 4, 2)
    assert U.k == 2
    assert U.rows == (5, 6)
    assert U.encoding == [5, 6]


def test_bad_input():
    with pytest.raises(DimensionMismatch):
        canonicalize([16], 4, 2)
    with pytest.raises(DimensionMismatch):
        canonicalize([[1, 0, 0]], 4, 2)


@given(rows_strategy(), rows_strategy())
def test_dimension_formula(a, b):
    (q, v), ra = a
    U = canonicalize(ra, v, q)
    W = canonicalize([x % q**v for x in b[1]], v, q)
    inter = intersect(U, W)
    assert sum_dim(U, W) == join(U, W).k
    assert join(U, W).k + inter.k == U.k + W.k
    assert set(inter.vectors()) == set(U.vectors()) & set(W.vectors())
    assert contains(U, inter) and contains(W, inter)


def test_projection_through_point():
    q, v = 2, 5
    P = point(1, v, q)
    U = canonicalize([1, 2, 4], v, q)
    W = canonicalize([2, 4, 8], v, q)
    assert project_through_point(U, P).k == 2
    assert project_through_point(W, P).k == 3
    with pytest.raises(NotAPoint):
        project_through_point(U, canonicalize([1, 2], v, q))


@given(st.sampled_from(SPACES), st.data())
def test_matrix_action_is_a_right_action(qv, data):
    q, v = qv
    vec = st.integers(0, q**v - 1)
    A = tuple(data.draw(st.lists(vec, min_size=v, max_size=v)))
    B = tuple(data.draw(st.lists(vec, min_size=v, max_size=v)))
    x = data.draw(vec)
    # (xA)B == x(AB)
    assert apply_matrix(apply_matrix(x, A, q, v), B, q, v) == apply_matrix(x, matmul(A, B, q, v), q, v)
    assert apply_matrix(x, identity_matrix(v, q), q, v) == x


def test_transform_identity():
    U = canonicalize([3, 12], 4, 2)
    assert transform(U, identity_matrix(4, 2)) == U
    assert isinstance(U, Subspace)
