"""Command-line entry point: ``qgdd <command> ...``.

Exit codes: 0 success, 1 domain failure (not a GDD, inadmissible, no solution),
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import __version__
from .construct import OrbitSelection, build_fat_gdd, class_labels
from .designfile import DesignFile, dumps, read_design
from .errors import DecodeError, QgddError
from .field import create_field
from .gdd import BRUTEFORCE_LIMIT, lambda_max_bruteforce, supplementary, verify
from .km_search import build_km_system, singer_group, singer_spread, solve_lambda_cover
from .linalg import canonicalize
from .params import admissible_table, check_conditions, known_lambda_max
from .spread import desarguesian_spread

OK, FAIL, USAGE = 0, 1, 2


def _log(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def _emit(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)
        _log(f"wrote {path}")


def _report_lines(rep) -> list[str]:
    hist = ", ".join(f"{c}: {n}" for c, n in rep.line_histogram.items())
    lines = [
        f"is_gdd: {rep.is_gdd}",
        f"lambda_observed: {rep.lambda_observed}",
        f"line histogram (coverage: lines): {hist}",
        f"blocks: {rep.n_blocks} (forced by λ: {rep.expected_blocks})",
        f"replication: expected {rep.replication_expected}, uniform {rep.replication_ok}",
    ]
    if rep.offending_lines:
        lines.append(f"offending lines (first {len(rep.offending_lines)}): {rep.offending_lines}")
    lines.extend(f"note: {m}" for m in rep.messages)
    return lines


def cmd_admissible(args) -> int:
    rows = admissible_table(args.q, args.vmax)
    cols = ["v", "g", "k", "lambda_delta", "lambda_max", "blocks", "groups"]
    recs = []
    for r in rows:
        lm = "" if r.lambda_max is None else (f"{r.lambda_max}*" if r.desarguesian_only else str(r.lambda_max))
        recs.append([r.v, r.g, r.k, r.lambda_delta, lm, r.block_count, r.group_count])
    if args.format == "json":
        print(json.dumps([r.as_dict() for r in rows], indent=1))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        w.writerows(recs)
        sys.stdout.write(buf.getvalue())
    else:
        widths = [max(len(str(x)) for x in [c] + [rec[i] for rec in recs]) for i, c in enumerate(cols)]
        print("  ".join(c.rjust(w) for c, w in zip(cols, widths)))
        for rec in recs:
            print("  ".join(str(x).rjust(w) for x, w in zip(rec, widths)))
        print("* λ_max known for the Desarguesian spread only", file=sys.stderr)
    return OK


def _self_check(instance) -> int:
    rep = verify(instance)
    _log(f"predicted λ: {instance.lam}, observed λ: {rep.lambda_observed}")
    if not rep.is_gdd or rep.lambda_observed != instance.lam:
        _log("internal error: constructed design failed verification")
        for line in _report_lines(rep):
            _log(line)
        return FAIL
    return OK


def cmd_construct(args) -> int:
    ext = create_field(args.q, args.g)
    s = args.s
    if args.k == s:
        if args.classes:
            selection = OrbitSelection.parse(args.classes.split(","), ext)
        else:
            selection = OrbitSelection.first(args.alpha or 1, ext)
        names = [ext.element_str(c) for c in selection.chosen_classes]
        _log(f"classes: {', '.join(names)} of {len(class_labels(ext))}")
    else:
        selection = None
    t = time.time()
    inst = build_fat_gdd(args.q, args.g, s, args.k, selection, ext)
    _log(f"{len(inst)} blocks in {time.time() - t:.2f}s")
    status = _self_check(inst)
    if status == OK:
        _emit(dumps(DesignFile.from_instance(inst)), args.output)
    return status


def cmd_verify(args) -> int:
    try:
        design = read_design(args.file)
    except OSError as exc:
        _log(f"cannot read {args.file}: {exc}")
        return USAGE
    except DecodeError as exc:
        _log(f"parse error: {exc}")
        return USAGE
    try:
        rep = verify(design.instance)
    except QgddError as exc:
        print(f"is_gdd: False\nerror: {exc}")
        return FAIL
    if args.json:
        print(json.dumps(rep.as_dict(), indent=1))
    else:
        print("\n".join(_report_lines(rep)))
    ok = rep.is_gdd and (design.instance.lam is None or rep.lambda_observed == design.instance.lam)
    return OK if ok else FAIL


def cmd_search(args) -> int:
    q, v, g, k, lam = args.q, args.v, args.g, args.k, args.lam
    rep = check_conditions(q, v, g, k, lam)
    if not rep.admissible:
        for f in rep.failed_conditions:
            print(f)
        if not args.force:
            return FAIL
    F = create_field(q, v)
    seed = None
    if args.seed:
        seed = canonicalize([int(x) for x in args.seed.split(",")], v, q)
    spread = singer_spread(F, g, seed)
    group = singer_group(F, args.group)
    _log(f"group {args.group}: order {group.order}")
    t = time.time()
    system = build_km_system(group, spread, k)
    _log(f"Kramer-Mesner system {system.shape[0]}x{system.shape[1]} in {time.time() - t:.2f}s")
    stats: dict = {}
    sols = solve_lambda_cover(system, lam, node_cap=args.node_cap, stats=stats)
    _log(f"search: {stats['nodes']} nodes, complement={stats['complement']}")
    if not sols:
        print("no solution found" + (" (node budget exhausted)" if stats["exhausted"] else ""))
        return FAIL
    x = sols[0]
    inst = system.expand(x, lam)
    status = _self_check(inst)
    if status == OK:
        reps = [list(o.representative) for o, sel in zip(system.block_orbits, x) if sel]
        _emit(dumps(DesignFile.from_instance(inst, group, reps)), args.output)
    return status


def cmd_lambda_max(args) -> int:
    q, v, g, k = args.q, args.v, args.g, args.k
    value, desarg = known_lambda_max(q, v, g, k)
    if value is not None:
        print(f"formula/table: {value}" + (" (Desarguesian spread)" if desarg else ""))
    if args.bruteforce or value is None:
        spread = desarguesian_spread(q, g, v // g)
        bf = lambda_max_bruteforce(spread, k, args.limit)
        print(f"enumeration (Desarguesian spread): {bf}")
        if value is not None and bf != value:
            return FAIL
    return OK


def cmd_supplementary(args) -> int:
    try:
        design = read_design(args.file)
    except (OSError, DecodeError) as exc:
        _log(f"parse error: {exc}")
        return USAGE
    inst = design.instance
    if inst.lam is None:
        inst.lam = verify(inst).lambda_observed
    sup = supplementary(inst, args.lambda_max, args.limit)
    rep = verify(sup)
    _log(f"supplementary: {len(sup)} blocks, λ = {sup.lam}, observed {rep.lambda_observed}")
    if not rep.is_gdd or rep.lambda_observed != sup.lam:
        return FAIL
    _emit(dumps(DesignFile.from_instance(sup)), args.output)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qgdd", description="q-analogs of group divisible designs")
    p.add_argument("--version", action="version", version=f"qgdd {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("admissible", help="table of admissible (v, g, k) with λ_Δ")
    a.add_argument("--q", type=int, default=2)
    a.add_argument("--vmax", type=int, required=True)
    a.add_argument("--format", choices=["table", "json", "csv"], default="table")
    a.set_defaults(func=cmd_admissible)

    c = sub.add_parser("construct", help="GDD from fat subspaces of GF(q^g)^s")
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--g", type=int, required=True)
    c.add_argument("--s", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--classes", help="determinant classes for k = s, e.g. 1,a,a+1")
    c.add_argument("--alpha", type=int, help="take the first α classes (k = s)")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check a design file")
    v.add_argument("file")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="Kramer-Mesner search under a Singer-normalizer subgroup")
    s.add_argument("--q", type=int, default=2)
    s.add_argument("--v", type=int, required=True)
    s.add_argument("--g", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--lambda", dest="lam", type=int, required=True)
    s.add_argument("--group", default="sigma", help="e.g. sigma^7 or sigma,phi^2")
    s.add_argument("--seed", help="spread seed rows, e.g. 1,14 (default: the subfield)")
    s.add_argument("--node-cap", type=int, default=10**8)
    s.add_argument("--force", action="store_true", help="search even if λ is inadmissible")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_search)

    m = sub.add_parser("lambda-max", help="largest λ of the complete scattered design")
    m.add_argument("--q", type=int, default=2)
    m.add_argument("--v", type=int, required=True)
    m.add_argument("--g", type=int, required=True)
    m.add_argument("--k", type=int, required=True)
    m.add_argument("--bruteforce", action="store_true")
    m.add_argument("--limit", type=int, default=BRUTEFORCE_LIMIT, help="largest subspace count to enumerate")
    m.set_defaults(func=cmd_lambda_max)

    u = sub.add_parser("supplementary", help="complement within all scattered k-subspaces")
    u.add_argument("file")
    u.add_argument("--lambda-max", type=int)
    u.add_argument("--limit", type=int, default=BRUTEFORCE_LIMIT, help="largest subspace count to enumerate")
    u.add_argument("-o", "--output")
    u.set_defaults(func=cmd_supplementary)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DecodeError as exc:
        _log(f"parse error: {exc}")
        return USAGE
    except (QgddError, ValueError) as exc:
        _log(f"error: {exc}")
        return FAIL


if __name__ == "__main__":
    sys.exit(main())
