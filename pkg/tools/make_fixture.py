"""Regenerate the shipped (6,2,3,2)_2 design from its 20 published orbit generators."""

import sys
from pathlib import Path

from qgdd.designfile import DesignFile, dumps
from qgdd.field import create_field
from qgdd.gdd import verify
from qgdd.km_search import (
    EXAMPLE_GENERATORS,
    EXAMPLE_SPREAD_SEED,
    reconstruct_from_generators,
    singer_group,
    singer_spread,
)
from qgdd.linalg import canonicalize


def build() -> str:
    F = create_field(2, 6)
    spread = singer_spread(F, 2, canonicalize(list(EXAMPLE_SPREAD_SEED), 6, 2))
    group = singer_group(F, "sigma^7")
    inst = reconstruct_from_generators(group, spread, EXAMPLE_GENERATORS, lam=2)
    assert verify(inst).is_gdd
    return dumps(DesignFile.from_instance(inst, group, [list(g) for g in EXAMPLE_GENERATORS]))


if __name__ == "__main__":
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "src/qgdd/data/gdd_6_2_3_2_q2.json")
    out.write_text(build())
    print(f"wrote {out}")
