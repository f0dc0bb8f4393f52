"""Acceptance gate: one test per criterion, each reporting a single pass/fail line.

Run with ``pytest tests/test_acceptance.py -s``; the summary lines are also
printed at the end of every pytest session that collects this file.
"""

import csv
import io
import time
from contextlib import contextmanager, redirect_stdout

import numpy as np
import pytest

from qgdd.cli import main
from qgdd.construct import (
    OrbitSelection,
    build_theorem5_gdd,
    class_labels,
    det_invariant,
    det_labels,
    fat_count,
    fat_gdd_lambda,
)
from qgdd.field import create_field
from qgdd.gdd import PointMultiset, lambda_max_bruteforce, qr_divisibility, supplementary, verify
from qgdd.geometry import gaussian_binomial, geometry
from qgdd.grassmann import fat_subspace_array, scattered_subspace_array, subspace_array
from qgdd.km_search import (
    EXAMPLE_GENERATORS,
    EXAMPLE_SIGMA,
    EXAMPLE_SIGMA7,
    EXAMPLE_SPREAD_SEED,
    build_km_system,
    lines_count_check,
    orbits,
    reconstruct_from_generators,
    singer_generator,
    singer_group,
    singer_spread,
    solve_lambda_cover,
)
from qgdd.linalg import canonicalize
from qgdd.params import lambda_max_g2k4, lambda_max_k3
from qgdd.spread import desarguesian_spread
from test_params import TABLE_Q2

RESULTS: dict[str, bool] = {}


@contextmanager
def criterion(name: str, budget: float | None = None):
    t = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        RESULTS[name] = False
        print(f"\nFAIL {name}: {type(exc).__name__}: {str(exc)[:80]}")
        raise
    dt = time.perf_counter() - t
    if budget is not None and dt > budget:
        RESULTS[name] = False
        print(f"\nFAIL {name}: {dt:.2f}s > {budget}s")
        pytest.fail(f"{name} took {dt:.2f}s, budget {budget}s")
    RESULTS[name] = True
    print(f"\nPASS {name} ({dt:.2f}s)")


def _table_rows():
    """Rows (v, g, k, λ_Δ, #B, #G) of the frozen admissible-parameter table."""
    return [(v, g, k, ld, nb, ng) for v, g, k, ld, _, nb, ng in TABLE_Q2]


def test_criterion_1_table_reproduction():
    with criterion("1 admissible table for q=2, v <= 14", budget=1.0):
        buf = io.StringIO()
        with redirect_stdout(buf):
            assert main(["admissible", "--q", "2", "--vmax", "14", "--format", "csv"]) == 0
        got = [
            (int(r["v"]), int(r["g"]), int(r["k"]), int(r["lambda_delta"]), int(r["blocks"]), int(r["groups"]))
            for r in csv.DictReader(io.StringIO(buf.getvalue()))
        ]
        expected = _table_rows()
        assert len(expected) == 40
        assert got == expected
        assert (6, 2, 3, 2, 180, 21) in got
        assert (9, 3, 3, 1, 6132, 73) in got
        assert (14, 7, 7, 63, 1048512, 129) in got


def test_criterion_2_lambda_max_closed_forms():
    with criterion("2 closed forms for λ_max", budget=1.0):
        k3 = [(6, 2), (6, 3), (9, 3), (12, 4), (12, 6), (14, 7)]
        assert [lambda_max_k3(v, g, 2) for v, g in k3] == [12, 6, 118, 1002, 930, 3906]
        assert [lambda_max_g2k4(v, 2) for v in (8, 10, 12, 14)] == [480, 10080, 171360, 2782560]


def _bruteforce(v, g, k, q=2):
    return lambda_max_bruteforce(desarguesian_spread(q, g, v // g), k)


def test_criterion_3_bruteforce_agreement():
    with criterion("3 enumeration agrees with closed forms", budget=180.0):
        for v, g in [(6, 2), (8, 2), (6, 3), (9, 3)]:
            assert _bruteforce(v, g, 3) == lambda_max_k3(v, g, 2)
        assert _bruteforce(8, 2, 4) == 480


@pytest.mark.parametrize("v,g,k,lam", [(8, 4, 4, 14), (9, 3, 4, 1680)])
def test_criterion_3_extended(v, g, k, lam):
    with criterion(f"3x extended enumeration ({v},{g},{k})_2 gives {lam}", budget=600.0):
        assert _bruteforce(v, g, k) == lam


def test_criterion_4_gf9_example():
    with criterion("4 fat 3-subspaces of GF(9)^3 and their classes", budget=60.0):
        ext = create_field(3, 2)
        assert fat_count(3, 2, 3, 3) == 30240
        fat = fat_subspace_array(ext, 3, 3)
        assert fat.shape[0] == 30240
        labels = det_labels(fat, ext)
        classes = class_labels(ext)
        assert np.bincount(labels, minlength=ext.order)[classes].tolist() == [7560] * 4
        U = canonicalize([[0, 1, 0, 0, 1, 1], [0, 0, 1, 0, 0, 0], [0, 0, 1, 2, 0, 1]], 6, 3)
        assert ext.element_str(det_invariant(U, ext)) == "a+1"
        for c in classes:
            inst = build_theorem5_gdd(3, 2, 3, 3, OrbitSelection((c,)), ext)
            assert len(inst) == 7560
            rep = verify(inst)
            assert rep.is_gdd and rep.lambda_observed == 9 == inst.lam


FAT_CASES = [(2, 2, 3, 3, 1), (3, 2, 3, 3, 1), (2, 2, 4, 3, None), (2, 3, 3, 3, 1), (2, 2, 4, 4, 1), (2, 2, 4, 4, 2), (2, 2, 4, 4, 3)]


@pytest.mark.parametrize("q,g,s,k,alpha", FAT_CASES)
def test_criterion_5_fat_gdds(q, g, s, k, alpha):
    tag = f"5 fat GDD (q,g,s,k)=({q},{g},{s},{k})" + (f" α={alpha}" if alpha else "")
    with criterion(tag, budget=300.0):
        ext = create_field(q, g)
        sel = OrbitSelection.first(alpha, ext) if alpha else None
        inst = build_theorem5_gdd(q, g, s, k, sel)
        lam = fat_gdd_lambda(q, g, s, k, alpha or 1)
        assert inst.lam == lam
        rep = verify(inst)
        assert rep.is_gdd and rep.lambda_observed == lam
        n_lines = fat_count(q, g, s, 2)
        n_blocks = fat_count(q, g, s, k) if k < s else len(inst)
        assert n_lines * lam == n_blocks * gaussian_binomial(k, 2, q)


def test_criterion_6_published_example():
    with criterion("6 published (6,2,3,2)_2 example, bit exact", budget=1.0):
        F = create_field(2, 6)
        assert singer_generator(F) == EXAMPLE_SIGMA
        G = singer_group(F, "sigma^7")
        assert G.order == 9 and G.generators == [EXAMPLE_SIGMA7]
        spread = singer_spread(F, 2, canonicalize(list(EXAMPLE_SPREAD_SEED), 6, 2))
        assert len(spread) == 21
        assert len(orbits(G, spread.elements, spread)) == 7
        inst = reconstruct_from_generators(G, spread, EXAMPLE_GENERATORS, lam=2)
        assert len(inst) == 180 == np.unique(inst.blocks, axis=0).shape[0]
        rep = verify(inst)
        assert rep.is_gdd and rep.lambda_observed == 2


def test_criterion_7_km_search():
    with criterion("7 λ-cover search under <σ^7> and <σ^21>", budget=300.0):
        F = create_field(2, 6)
        cases = [("sigma^7", 2, [2, 4, 6, 8, 10, 12]), ("sigma^21", 3, [3, 6])]
        for group_text, g, lams in cases:
            G = singer_group(F, group_text)
            system = build_km_system(G, singer_spread(F, g), 3)
            assert lines_count_check(system)
            for lam in lams:
                sols = solve_lambda_cover(system, lam)
                assert sols, f"no solution for λ={lam} under {group_text}"
                inst = system.expand(sols[0], lam)
                rep = verify(inst)
                assert rep.is_gdd and rep.lambda_observed == lam


def test_criterion_8_property_suites():
    with criterion("8 structural properties on small cases", budget=120.0):
        rng = np.random.default_rng(8)
        # double count: every block covers [k 2] lines
        spread = desarguesian_spread(2, 2, 3)
        blocks = scattered_subspace_array(spread, 3)
        geo = geometry(2, 6)
        assert int(geo.line_counts(blocks).sum()) == blocks.shape[0] * gaussian_binomial(3, 2, 2)
        # canonical form is idempotent
        for _ in range(200):
            U = canonicalize([int(x) for x in rng.integers(0, 64, size=int(rng.integers(1, 7)))], 6, 2)
            assert canonicalize(list(U.rows), 6, 2) == U
        # fat implies scattered, with equality at g = 2
        for q, g, s, k in [(2, 2, 3, 2), (2, 2, 3, 3), (2, 3, 3, 3), (3, 2, 3, 3)]:
            ext = create_field(q, g)
            fat = {tuple(r) for r in fat_subspace_array(ext, s, k).tolist()}
            sc = {tuple(r) for r in scattered_subspace_array(desarguesian_spread(q, g, s, ext), k).tolist()}
            assert fat <= sc
            if g == 2:
                assert fat == sc
        # q^{k-1}-divisibility of block point multisets and of their complements
        pools = {k: subspace_array(2, 6, k) for k in (2, 3, 4)}
        for _ in range(20):
            k = int(rng.integers(2, 5))
            pool = pools[k]
            picks = pool[rng.choice(pool.shape[0], size=int(rng.integers(1, 30)), replace=False)]
            M = PointMultiset.from_subspaces(picks, 2, 6)
            assert qr_divisibility(M, 6, 2) >= k - 1
            comp = M.complement(M.max_weight() + int(rng.integers(0, 3)))
            assert qr_divisibility(comp, 6, 2) >= k - 1
        # supplementary design of the published example
        F = create_field(2, 6)
        G = singer_group(F, "sigma^7")
        sp = singer_spread(F, 2, canonicalize(list(EXAMPLE_SPREAD_SEED), 6, 2))
        inst = reconstruct_from_generators(G, sp, EXAMPLE_GENERATORS, lam=2)
        sup = supplementary(inst)
        assert len(sup) == 900 and sup.lam == 10
        rep = verify(sup)
        assert rep.is_gdd and rep.lambda_observed == 10
