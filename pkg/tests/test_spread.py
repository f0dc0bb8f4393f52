import numpy as np
import pytest

from qgdd.errors import AmbientMismatch, NotAPartition, NotAPoint
from qgdd.field import create_field
from qgdd.geometry import gaussian_binomial, geometry
from qgdd.linalg import canonicalize, point
from qgdd.spread import (
    Spread,
    desarguesian_spread,
    element_of,
    is_normal,
    orbit_closure,
    spread_from_orbit,
    spread_size,
)


@pytest.mark.parametrize("q,g,s,n", [(2, 2, 3, 21), (2, 3, 3, 73), (3, 2, 3, 91), (2, 4, 2, 17), (2, 2, 4, 85)])
def test_desarguesian_sizes(q, g, s, n):
    sp = desarguesian_spread(q, g, s)
    assert len(sp) == n == spread_size(q, g * s, g)
    assert sp.g == g
    # partition: every point in exactly one element
    counts = np.bincount(sp.elem_of, minlength=len(sp))
    assert np.all(counts == gaussian_binomial(g, 1, q))


@pytest.mark.parametrize("q,g,s", [(2, 2, 3), (2, 3, 2), (3, 2, 3)])
def test_desarguesian_is_normal(q, g, s):
    assert is_normal(desarguesian_spread(q, g, s))


def test_element_lookup():
    sp = desarguesian_spread(2, 2, 3)
    i = element_of(sp, point(1, 6, 2))
    # GF(4)·(1,0,0) flattened is spanned by (1,0,...) and (0,1,0,...)
    assert sp.element(i).rows == (1, 2)
    assert element_of(sp, 2) == i
    with pytest.raises(NotAPoint):
        element_of(sp, canonicalize([1, 2], 6, 2))
    with pytest.raises(AmbientMismatch):
        element_of(sp, 64)


def test_not_a_partition():
    with pytest.raises(NotAPartition):
        Spread.from_elements([canonicalize([1, 2], 4, 2), canonicalize([2, 4], 4, 2)], 2, 4)
    with pytest.raises(NotAPartition):
        Spread.from_elements([canonicalize([1, 2], 4, 2)], 2, 4)


def test_json_round_trip():
    sp = desarguesian_spread(3, 2, 3)
    assert Spread.from_json(sp.to_json(), 3, 6) == sp


def test_singer_orbit_of_seed():
    F = create_field(2, 6)
    sigma = [F.exp(i + 1) for i in range(6)]
    seed = canonicalize([1, 14], 6, 2)
    sp = spread_from_orbit(seed, sigma, 21)
    assert len(sp) == 21
    assert is_normal(sp)
    assert len(orbit_closure(seed, sigma)) == 21
    with pytest.raises(NotAPartition):
        spread_from_orbit(canonicalize([1, 2], 6, 2), sigma, 21)


def test_covered_lines_count():
    sp = desarguesian_spread(2, 2, 3)
    assert int(sp.covered_lines().sum()) == 21
    assert geometry(2, 6).n_lines == 651
