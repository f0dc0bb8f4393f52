"""The compiled kernels and the numpy fallback must agree exactly."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from qgdd import _kernels as K
from qgdd.field import create_field
from qgdd.geometry import geometry
from qgdd.grassmann import _ext_tables

PY = K.python_backend
CY = K.cython_backend

pytestmark = pytest.mark.skipif(CY is None, reason="compiled extension not built")

SPACES = [(2, 4), (2, 6), (3, 4), (5, 3), (2, 8), (3, 5)]


def _random_rows(rng, q, v, n, k):
    return rng.integers(0, q**v, size=(n, k), dtype=np.int64)


@given(st.sampled_from(SPACES), st.integers(1, 4), st.integers(0, 2**32 - 1))
def test_rref_batch_parity(space, k, seed):
    q, v = space
    k = min(k, v)
    rng = np.random.default_rng(seed)
    rows = _random_rows(rng, q, v, 40, k)
    try:
        expected = PY.rref_batch(rows, q, v)
    except ValueError:
        with pytest.raises(ValueError):
            CY.rref_batch(rows, q, v)
        return
    assert np.array_equal(CY.rref_batch(rows, q, v), expected)


@given(st.sampled_from(SPACES), st.integers(0, 2**32 - 1))
def test_span_and_line_kernels_parity(space, seed):
    q, v = space
    rng = np.random.default_rng(seed)
    geo = geometry(q, v)
    k = 3
    raw = [r for r in _random_rows(rng, q, v, 60, k).tolist() if len(K.rref_rows(r, q, v)) == k]
    rows = PY.rref_batch(np.array(raw[:25], dtype=np.int64).reshape(-1, k), q, v)
    coeffs = geometry(q, k).points
    assert np.array_equal(CY.span_combos(rows, coeffs, q, v), PY.span_combos(rows, coeffs, q, v))
    a, b = geometry(q, k).line_pairs
    ids_c = CY.block_line_ids(rows, a, b, q, v, geo.point_of, geo.line_of)
    ids_p = PY.block_line_ids(rows, a, b, q, v, geo.point_of, geo.line_of)
    assert np.array_equal(ids_c, ids_p)
    cnt_c = np.zeros(geo.n_lines, dtype=np.int64)
    cnt_p = np.zeros(geo.n_lines, dtype=np.int64)
    CY.accumulate_lines(rows, a, b, q, v, geo.point_of, geo.line_of, cnt_c)
    PY.accumulate_lines(rows, a, b, q, v, geo.point_of, geo.line_of, cnt_p)
    assert np.array_equal(cnt_c, cnt_p)


@pytest.mark.parametrize("q,v", [(2, 4), (3, 4), (2, 6)])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_enumerate_pattern_parity(q, v, k):
    from qgdd.geometry import pivot_patterns

    for pat in pivot_patterns(v, k):
        assert np.array_equal(CY.enumerate_pattern(q, v, pat), PY.enumerate_pattern(q, v, pat))


@pytest.mark.parametrize("q,g,s", [(2, 2, 3), (3, 2, 3), (2, 3, 3), (2, 2, 4)])
def test_extension_field_kernels_parity(q, g, s):
    ext = create_field(q, g)
    rng = np.random.default_rng(q * 100 + g * 10 + s)
    rows = rng.integers(0, q ** (g * s), size=(300, s), dtype=np.int64)
    tables = _ext_tables(ext)
    assert np.array_equal(CY.ext_rank_batch(rows, q, g, s, *tables), PY.ext_rank_batch(rows, q, g, s, *tables))
    assert np.array_equal(CY.ext_det_batch(rows, q, g, s, *tables), PY.ext_det_batch(rows, q, g, s, *tables))


def test_scattered_kernel_parity():
    from qgdd.geometry import subspace_array
    from qgdd.spread import desarguesian_spread

    sp = desarguesian_spread(2, 2, 3)
    geo = geometry(2, 6)
    blocks = subspace_array(2, 6, 3)
    coeffs = geometry(2, 3).points
    a = CY.scattered_mask(blocks, coeffs, 2, 6, geo.point_of, sp.elem_of)
    b = PY.scattered_mask(blocks, coeffs, 2, 6, geo.point_of, sp.elem_of)
    assert np.array_equal(a, b)
    assert int(a.sum()) == 1080


def test_backend_selected():
    assert K.BACKEND in ("cython", "python")
