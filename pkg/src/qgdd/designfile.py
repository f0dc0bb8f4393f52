"""JSON interchange for designs: one file holds one GDD.

Keys are written in a fixed order and every row of integers on its own line,
so write -> read -> write is byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import DecodeError, QgddError
from .gdd import GddInstance
from .geometry import lex_sort
from .spread import Spread

SCHEMA_VERSION = 1

__all__ = ["DesignFile", "dumps", "loads", "read_design", "write_design", "SCHEMA_VERSION"]


@dataclass
class DesignFile:
    instance: GddInstance
    group: dict | None = None
    orbit_generators: list[list[int]] | None = None
    extra: dict = field(default_factory=dict)

    @classmethod
    def from_instance(cls, instance: GddInstance, group=None, orbit_generators=None) -> "DesignFile":
        grp = None
        if group is not None:
            grp = {"generators": [list(M) for M in group.generators], "order": group.order}
        gens = None
        if orbit_generators is not None:
            gens = [[int(x) for x in row] for row in orbit_generators]
        return cls(instance, grp, gens)

    def to_dict(self) -> dict:
        inst = self.instance
        out = {
            "schema_version": SCHEMA_VERSION,
            "q": inst.q,
            "v": inst.v,
            "g": inst.g,
            "k": inst.k,
            "lambda": inst.lam,
            "flattened": True,
            "spread": inst.spread.to_json(),
            "blocks": [[int(x) for x in row] for row in lex_sort(inst.blocks)],
        }
        if self.group is not None:
            out["group"] = self.group
        if self.orbit_generators is not None:
            out["orbit_generators"] = self.orbit_generators
        return out


def _rows(rows) -> str:
    if not rows:
        return "[]"
    return "[\n" + ",\n".join("    " + json.dumps(r, separators=(", ", ": ")) for r in rows) + "\n  ]"


def dumps(design: DesignFile) -> str:
    d = design.to_dict()
    parts = []
    for key, val in d.items():
        if key in ("spread", "blocks", "orbit_generators"):
            body = _rows(val)
        elif key == "group":
            body = (
                "{\n    \"generators\": "
                + json.dumps(val["generators"])
                + ",\n    \"order\": "
                + json.dumps(val["order"])
                + "\n  }"
            )
        else:
            body = json.dumps(val)
        parts.append(f"  {json.dumps(key)}: {body}")
    return "{\n" + ",\n".join(parts) + "\n}\n"


def _int_rows(data, name: str, width: int, bound: int) -> list[list[int]]:
    if not isinstance(data, list):
        raise DecodeError(f"{name} must be a list")
    out = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != width or not all(isinstance(x, int) for x in row):
            raise DecodeError(f"{name}[{i}] must be a list of {width} integers")
        if any(not 0 <= x < bound for x in row):
            raise DecodeError(f"{name}[{i}] has an entry outside [0, {bound})")
        out.append(row)
    return out


def loads(text: str) -> DesignFile:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DecodeError(f"malformed JSON: {exc}") from None
    if not isinstance(d, dict):
        raise DecodeError("top level must be an object")
    for key in ("q", "v", "g", "k", "spread", "blocks"):
        if key not in d:
            raise DecodeError(f"missing key {key!r}")
    if d.get("schema_version", SCHEMA_VERSION) != SCHEMA_VERSION:
        raise DecodeError(f"unsupported schema_version {d.get('schema_version')}")
    try:
        q, v, g, k = (int(d[x]) for x in ("q", "v", "g", "k"))
    except (TypeError, ValueError):
        raise DecodeError("q, v, g, k must be integers") from None
    lam = d.get("lambda")
    if lam is not None and not isinstance(lam, int):
        raise DecodeError("lambda must be an integer or null")
    spread_rows = _int_rows(d["spread"], "spread", g, q**v)
    block_rows = _int_rows(d["blocks"], "blocks", k, q**v)
    try:
        spread = Spread.from_json(spread_rows, q, v)
        if spread.g != g:
            raise DecodeError(f"spread elements have dimension {spread.g}, header says {g}")
        blocks = np.array(block_rows, dtype=np.int64).reshape(len(block_rows), k)
        inst = GddInstance(spread, k, blocks, lam)
    except DecodeError:
        raise
    except (QgddError, ValueError) as exc:
        raise DecodeError(str(exc)) from None
    known = {"schema_version", "q", "v", "g", "k", "lambda", "flattened", "spread", "blocks", "group", "orbit_generators"}
    extra = {key: val for key, val in d.items() if key not in known}
    return DesignFile(inst, d.get("group"), d.get("orbit_generators"), extra)


def read_design(path) -> DesignFile:
    return loads(Path(path).read_text())


def write_design(path, design: DesignFile) -> None:
    Path(path).write_text(dumps(design))
