import itertools

import pytest
from hypothesis import given, strategies as st

from qgdd.errors import NonPrimeModulus, NonPrimitivePolynomial, TooLarge
from qgdd.field import (
    ExtVector,
    create_field,
    digits,
    flatten,
    flatten_int,
    unflatten,
    unflatten_int,
    undigits,
)

SMALL = [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (7, 2), (3, 3)]


def _poly_mul_mod(x, y, F):
    """Schoolbook product of two elements reduced by the field's polynomial."""
    q, g = F.q, F.g
    a, b = digits(x, q, g), digits(y, q, g)
    prod = [0] * (2 * g - 1)
    for i, j in itertools.product(range(g), range(g)):
        prod[i + j] = (prod[i + j] + a[i] * b[j]) % q
    poly = F.primitive_poly
    for d in range(2 * g - 2, g - 1, -1):
        c = prod[d]
        if c:
            for t in range(g + 1):
                prod[d - g + t] = (prod[d - g + t] - c * poly[t]) % q
    return undigits(prod[:g], q)


@pytest.mark.parametrize("q,g", SMALL)
def test_multiplication_matches_schoolbook(q, g):
    F = create_field(q, g)
    for x in range(F.order):
        for y in range(0, F.order, max(1, F.order // 13)):
            assert F.mul(x, y) == _poly_mul_mod(x, y, F)


@pytest.mark.parametrize("q,g", SMALL)
def test_field_axioms(q, g):
    F = create_field(q, g)
    for x in range(1, F.order):
        assert F.mul(x, F.inv(x)) == 1
        assert F.add(x, F.neg(x)) == 0
        assert F.exp(F.log(x)) == x
    assert len({F.exp(i) for i in range(F.order - 1)}) == F.order - 1


def test_gf4_tables():
    F = create_field(2, 2)
    # a^2 = a + 1
    assert F.mul(2, 2) == 3
    assert [F.exp(i) for i in range(3)] == [1, 2, 3]


def test_pinned_gf64_polynomial():
    F = create_field(2, 6)
    assert F.primitive_poly == (1, 1, 0, 1, 1, 0, 1)
    assert F.exp(6) == 27


def test_gf9_representation():
    F = create_field(3, 2)
    a = F.exp(1)
    # a^2 = a + 1
    assert F.mul(a, a) == F.add(a, 1)
    assert F.element_str(F.mul(a, a)) == "a+1"
    assert F.parse_element("-a+1") == undigits([1, 2], 3)


def test_errors():
    with pytest.raises(NonPrimeModulus):
        create_field(4)
    with pytest.raises(NonPrimitivePolynomial):
        create_field(2, 2, poly=[1, 0, 1])
    with pytest.raises(TooLarge):
        create_field(2, 21)


@given(st.sampled_from(SMALL), st.data())
def test_element_str_round_trip(qg, data):
    F = create_field(*qg)
    x = data.draw(st.integers(0, F.order - 1))
    assert F.parse_element(F.element_str(x)) == x


@given(st.lists(st.integers(0, 8), min_size=1, max_size=4))
def test_flatten_round_trip(coords):
    F = create_field(3, 2)
    vec = ExtVector(tuple(coords), F)
    flat = flatten(vec)
    assert unflatten(flat, F).coords == tuple(coords)
    x = flatten_int(coords, F)
    assert unflatten_int(x, F, len(coords)) == tuple(coords)
    assert undigits(flat, 3) == x
