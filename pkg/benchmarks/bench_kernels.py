"""Time the compiled kernels against the numpy fallback on the same inputs.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from qgdd import _kernels as K
from qgdd.field import create_field
from qgdd.geometry import geometry
from qgdd.grassmann import _ext_tables, subspace_array
from qgdd.spread import desarguesian_spread


def _cases():
    rng = np.random.default_rng(0)
    geo = geometry(2, 8)
    blocks = subspace_array(2, 8, 3)[:40000]
    # same spaces with rows mixed, so the reduction has work to do
    c = rng.integers(0, 2, size=blocks.shape[0])
    raw = np.stack([blocks[:, 2] ^ c * blocks[:, 1], blocks[:, 1] ^ c * blocks[:, 0], blocks[:, 0]], axis=1)
    coeffs = geometry(2, 3).points
    a, b = geometry(2, 3).line_pairs
    spread = desarguesian_spread(2, 2, 4)
    ext4 = create_field(2, 2)
    t4 = _ext_tables(ext4)
    ext9 = create_field(3, 2)
    t9 = _ext_tables(ext9)
    fat9 = subspace_array(3, 6, 3)[:20000]

    def counts(mod):
        out = np.zeros(geo.n_lines, dtype=np.int64)
        mod.accumulate_lines(blocks, a, b, 2, 8, geo.point_of, geo.line_of, out)
        return out

    return [
        ("rref_batch 40k x 3 in GF(2)^8", lambda m: m.rref_batch(raw, 2, 8)),
        ("span_combos 40k 3-spaces", lambda m: m.span_combos(blocks, coeffs, 2, 8)),
        ("block_line_ids 40k 3-spaces", lambda m: m.block_line_ids(blocks, a, b, 2, 8, geo.point_of, geo.line_of)),
        ("accumulate_lines 40k 3-spaces", counts),
        ("scattered_mask 40k 3-spaces", lambda m: m.scattered_mask(blocks, coeffs, 2, 8, geo.point_of, spread.elem_of)),
        ("ext_rank_batch 40k, GF(4)^4", lambda m: m.ext_rank_batch(blocks, 2, 2, 4, *t4)),
        ("ext_det_batch 20k, GF(9)^3", lambda m: m.ext_det_batch(fat9, 3, 2, 3, *t9)),
        ("enumerate_pattern GF(2)^12, pivots 3,7,9", lambda m: m.enumerate_pattern(2, 12, (3, 7, 9))),
    ]


def _best(fn, mod, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn(mod)
        best = min(best, time.perf_counter() - t)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if K.cython_backend is None:
        raise SystemExit("compiled extension not built; run `pip install -e . --no-build-isolation`")
    print(f"{'kernel':36} {'python':>10} {'cython':>10} {'speedup':>8}")
    for name, fn in _cases():
        ref = fn(K.python_backend)
        got = fn(K.cython_backend)
        assert np.array_equal(np.asarray(ref), np.asarray(got)), name
        tp = _best(fn, K.python_backend, args.repeat)
        tc = _best(fn, K.cython_backend, args.repeat)
        print(f"{name:36} {tp * 1e3:9.1f}ms {tc * 1e3:9.1f}ms {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
