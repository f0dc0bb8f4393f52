from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qgdd.geometry import gaussian_binomial as gb
from qgdd.params import (
    admissible_table,
    block_count,
    check_conditions,
    lambda_delta,
    lambda_max_g2k4,
    lambda_max_k3,
    replication,
    uncovered_lines,
)

# (v, g, k, λ_Δ, λ_max or None, #blocks, #groups) for q = 2, v <= 14
TABLE_Q2 = [
    (6, 2, 3, 2, 12, 180, 21), (6, 3, 3, 3, 6, 252, 9), (8, 2, 3, 2, 60, 3060, 85),
    (8, 2, 4, 4, 480, 1224, 85), (8, 4, 3, 7, 42, 10200, 17), (8, 4, 4, 7, 14, 2040, 17),
    (9, 3, 3, 1, 118, 6132, 73), (9, 3, 4, 10, 1680, 12264, 73), (10, 2, 3, 14, 252, 347820, 341),
    (10, 2, 4, 28, 10080, 139128, 341), (10, 2, 5, 8, None, 8976, 341), (10, 5, 3, 21, 210, 507408, 33),
    (10, 5, 4, 35, None, 169136, 33), (10, 5, 5, 15, None, 16368, 33), (12, 2, 3, 2, 1020, 797940, 1365),
    (12, 2, 4, 28, 171360, 2234232, 1365), (12, 2, 5, 40, None, 720720, 1365), (12, 2, 6, 16, None, 68640, 1365),
    (12, 3, 3, 3, 1014, 1195740, 585), (12, 3, 4, 2, None, 159432, 585), (12, 3, 5, 1860, None, 33480720, 585),
    (12, 3, 6, 248, None, 1062880, 585), (12, 4, 3, 1, 1002, 397800, 273), (12, 4, 4, 7, None, 556920, 273),
    (12, 4, 5, 62, None, 1113840, 273), (12, 4, 6, 124, None, 530400, 273), (12, 6, 3, 1, 930, 393120, 65),
    (12, 6, 4, 1, None, 78624, 65), (12, 6, 5, 155, None, 2751840, 65), (12, 6, 6, 31, None, 131040, 65),
    (14, 2, 3, 2, 4092, 12778740, 5461), (14, 2, 4, 4, 2782560, 5111496, 5461), (14, 2, 5, 248, None, 71560944, 5461),
    (14, 2, 6, 496, None, 34076640, 5461), (14, 2, 7, 32, None, 536640, 5461), (14, 7, 3, 21, 3906, 133161024, 129),
    (14, 7, 4, 35, None, 44387008, 129), (14, 7, 5, 465, None, 133161024, 129), (14, 7, 6, 651, None, 44387008, 129),
    (14, 7, 7, 63, None, 1048512, 129),
]  # fmt: skip


def test_admissible_table_q2():
    rows = admissible_table(2, 14)
    got = [(r.v, r.g, r.k, r.lambda_delta, r.lambda_max, r.block_count, r.group_count) for r in rows]
    assert got == TABLE_Q2


def test_first_rows():
    assert len(admissible_table(2, 6)) == 2


def test_table_q5_small_is_empty():
    assert admissible_table(5, 4) == []


@pytest.mark.parametrize(
    "v,g,q,expected", [(6, 2, 2, 12), (6, 3, 2, 6), (9, 3, 2, 118), (12, 4, 2, 1002), (8, 2, 2, 60), (8, 4, 2, 42)]
)
def test_lambda_max_k3(v, g, q, expected):
    assert lambda_max_k3(v, g, q) == expected


@pytest.mark.parametrize("v,expected", [(8, 480), (10, 10080), (12, 171360), (14, 2782560)])
def test_lambda_max_g2k4(v, expected):
    assert lambda_max_g2k4(v, 2) == expected


def test_conditions():
    assert check_conditions(2, 6, 2, 3, 2).admissible
    rep = check_conditions(2, 6, 2, 3, 1)
    assert not rep.admissible
    assert any("does not divide" in f for f in rep.failed_conditions)
    assert not check_conditions(2, 7, 2, 3).admissible
    assert not check_conditions(2, 6, 2, 5).admissible
    assert "k > v/2" in " ".join(check_conditions(2, 8, 2, 5).notes)


@given(st.sampled_from([(2, 6, 2), (2, 8, 2), (2, 9, 3), (3, 6, 2), (3, 6, 3), (2, 12, 4)]), st.integers(3, 6), st.integers(1, 40))
def test_lambda_delta_is_minimal(vg, k, mult):
    q, v, g = vg
    if k > v - g:
        return
    ld = lambda_delta(q, v, g, k)
    lam = ld * mult
    assert check_conditions(q, v, g, k, lam).admissible
    for smaller in range(1, ld):
        assert not check_conditions(q, v, g, k, smaller).admissible


@given(st.sampled_from([(2, 6, 2, 3), (2, 8, 2, 4), (3, 6, 2, 3), (2, 9, 3, 3)]), st.integers(1, 50))
def test_double_count_identity(params, lam):
    q, v, g, k = params
    b = block_count(q, v, g, k, lam)
    r = replication(q, v, g, k, lam)
    # each block has [k 1] points; each point lies in r blocks
    assert b * gb(k, 1, q) == r * gb(v, 1, q)
    assert b * gb(k, 2, q) == lam * uncovered_lines(q, v, g)
    assert isinstance(b, Fraction)
