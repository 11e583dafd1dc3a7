"""Command-line front end: ``rootclosed classify|verify|topo|stabilizer``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
import time
from typing import Iterable, TextIO

from .enumeration import (
    KINDS,
    ClassificationResult,
    ClassRecord,
    ClosedSet,
    brute_force_classify,
    classify_all,
    closure_violation,
    same_classes,
)
from .rootsys import RootSystem, RootSystemType, bits, build
from .topo import DEFAULT_TOPO_CAP, class_counts
from .weylinv import WeylAction, invariant_key, stabilizer_of_closed_set, weyl_group

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_IO = 3

# (special, mixed, symmetric, total), empty set excluded
GOLDEN = {
    "A3": (15, 13, 4, 32),
    "B3": (46, 33, 9, 88),
    "C3": (44, 34, 9, 87),
    "A4": (62, 70, 6, 138),
    "B4": (429, 311, 19, 759),
    "C4": (401, 334, 19, 754),
    "D4": (110, 102, 11, 223),
    "F4": (3579, 1242, 23, 4844),
    "A5": (317, 390, 10, 717),
    "B5": (6267, 3592, 35, 9894),
    "C5": (5744, 4074, 35, 9853),
    "D5": (1145, 877, 15, 2037),
}
LEVELS = {
    "fast": ("A3", "B3", "C3"),
    "full": ("A3", "B3", "C3", "A4", "B4", "C4", "D4", "F4"),
    "extended": tuple(GOLDEN),
}
ORACLE_MAX_ROOTS = 18


class UsageError(Exception):
    pass


# -- set specs ---------------------------------------------------------------

_TERM = re.compile(r"([+-]?)(\d*)a(\d+)")


def parse_root(rs: RootSystem, text: str) -> int:
    """Index of a root written like ``a1+2a2`` or ``-a3``."""
    s = text.replace(" ", "")
    coords = [0] * rs.rank
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or (pos > 0 and not m.group(1)):
            raise UsageError(f"cannot parse root {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = int(m.group(2)) if m.group(2) else 1
        k = int(m.group(3))
        if not 1 <= k <= rs.rank:
            raise UsageError(f"a{k} is not a simple root of {rs.name}")
        coords[k - 1] += sign * coef
        pos = m.end()
    if pos == 0:
        raise UsageError(f"cannot parse root {text!r}")
    i = rs.find(coords)
    if i is None:
        raise UsageError(f"{text!r} is not a root of {rs.name}")
    return i


def parse_set(rs: RootSystem, spec: str) -> int:
    """Mask for a comma-separated root list; ``positive`` and ``all`` are shorthands."""
    spec = spec.strip()
    if spec == "positive":
        return rs.positive_mask
    if spec == "all":
        return rs.full_mask
    mask = 0
    for part in spec.split(","):
        if part.strip():
            mask |= 1 << parse_root(rs, part)
    return mask


# -- export ------------------------------------------------------------------


def _coords(rs: RootSystem, mask: int) -> list:
    return [list(rs.roots[i]) for i in bits(mask)]


def record_to_dict(wa: WeylAction, rec: ClassRecord, ident: int) -> dict:
    rs = wa.rs
    key = invariant_key(wa, rec.rep.mask)
    return {
        "type": rs.name,
        "id": ident,
        "kind": rec.kind,
        "roots": _coords(rs, rec.rep.mask),
        "sym_part": _coords(rs, rec.sym_part.mask),
        "spec_part": _coords(rs, rec.spec_part.mask),
        "stabilizer_gens": [list(g) for g in rec.stab_gens],
        "stabilizer_order": str(rec.stab_order),
        "invariant_key": {
            "sigma": list(key.sigma),
            "delta": list(key.delta),
            "gram": [list(row) for row in key.gram],
        },
    }


def _mask_from(rs: RootSystem, coords: Iterable) -> int:
    m = 0
    for c in coords:
        m |= 1 << rs.index(c)
    return m


def dict_to_record(rs: RootSystem, d: dict) -> ClassRecord:
    return ClassRecord(
        rep=ClosedSet(_mask_from(rs, d["roots"])),
        kind=d["kind"],
        sym_part=ClosedSet(_mask_from(rs, d["sym_part"])),
        spec_part=ClosedSet(_mask_from(rs, d["spec_part"])),
        stab_gens=tuple(tuple(g) for g in d["stabilizer_gens"]),
        stab_order=int(d["stabilizer_order"]),
    )


def write_jsonl(wa: WeylAction, result: ClassificationResult, out: TextIO) -> None:
    for ident, rec in enumerate(result.records(), start=1):
        out.write(json.dumps(record_to_dict(wa, rec, ident), separators=(",", ":")) + "\n")


def read_jsonl(src: TextIO) -> ClassificationResult:
    result: ClassificationResult | None = None
    rs = None
    for line in src:
        if not line.strip():
            continue
        d = json.loads(line)
        if result is None:
            rs = build(d["type"])
            result = ClassificationResult(rs.name)
        result.by_kind(d["kind"]).append(dict_to_record(rs, d))
    if result is None:
        raise ValueError("no records")
    return result


def write_csv(result: ClassificationResult, out: TextIO) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["type", "special", "mixed", "symmetric", "total"])
    w.writerow([result.rtype, *result.counts])


def summary_line(result: ClassificationResult) -> str:
    s, m, y, t = result.counts
    return f"special={s} mixed={m} symmetric={y} total={t} elapsed_ms={round(result.elapsed * 1000)}"


# -- commands ------------------------------------------------------------------


def _rtype(args) -> RootSystemType:
    try:
        return RootSystemType(args.type.upper(), args.rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _kinds(text: str) -> tuple:
    kinds = tuple(k.strip() for k in text.split(",") if k.strip())
    bad = [k for k in kinds if k not in KINDS]
    if bad or not kinds:
        raise UsageError(f"--kinds takes a comma list from {','.join(KINDS)}")
    return kinds


def cmd_classify(args) -> int:
    rtype = _rtype(args)
    kinds = _kinds(args.kinds)
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    wa = weyl_group(build(rtype))
    result = classify_all(wa, jobs=args.jobs, kinds=kinds)
    if args.out:
        buf = io.StringIO()
        if args.format == "jsonl":
            write_jsonl(wa, result, buf)
        else:
            write_csv(result, buf)
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(buf.getvalue())
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_IO
    print(summary_line(result))
    return EXIT_OK


def cmd_verify(args) -> int:
    failures = 0
    for name in LEVELS[args.level]:
        start = time.perf_counter()
        wa = weyl_group(build(name))
        result = classify_all(wa, jobs=args.jobs)
        got, want = result.counts, GOLDEN[name]
        status = "ok" if got == want else "MISMATCH"
        notes = ""
        if wa.rs.n_roots <= ORACLE_MAX_ROOTS:
            oracle = brute_force_classify(wa)
            agree = all(
                same_classes(
                    wa,
                    [r.rep.mask for r in result.by_kind(k)],
                    [r.rep.mask for r in oracle.by_kind(k)],
                )
                for k in KINDS
            )
            notes = " oracle=agree" if agree else " oracle=DISAGREE"
            if not agree:
                status = "MISMATCH"
        if status != "ok":
            failures += 1
            notes += f" expected={want}"
        ms = round((time.perf_counter() - start) * 1000)
        print(f"{name} {status} counts={got}{notes} elapsed_ms={ms}")
    print("verify: all rows match" if not failures else f"verify: {failures} row(s) differ")
    return EXIT_OK if not failures else EXIT_MISMATCH


def cmd_topo(args) -> int:
    try:
        labeled, classes = class_counts(args.n, args.t0, cap=DEFAULT_TOPO_CAP)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(f"labeled={labeled} classes={classes}")
    return EXIT_OK


def cmd_stabilizer(args) -> int:
    rtype = _rtype(args)
    wa = weyl_group(build(rtype))
    rs = wa.rs
    mask = parse_set(rs, args.set)
    bad = closure_violation(rs, mask)
    if bad is not None:
        i, j = bad
        raise UsageError(
            f"set is not closed: {rs.format_root(i)} + {rs.format_root(j)}"
            f" = {rs.format_root(rs.add(i, j))} is missing"
        )
    stab = stabilizer_of_closed_set(wa, mask)
    print(f"order={stab.order()}")
    for g in stab.gens:
        word = "".join(f"s{k}" for k in wa.word(g)) or "1"
        print(f"gen {word} images={list(g)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rootclosed", description="Closed subsets of root systems up to Weyl conjugacy.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_type(sp) -> None:
        sp.add_argument("--type", required=True, help="family letter A..G")
        sp.add_argument("--rank", required=True, type=int)

    c = sub.add_parser("classify", help="classify closed subsets")
    add_type(c)
    c.add_argument("--kinds", default=",".join(KINDS))
    c.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    c.add_argument("--out")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--seed", type=int, default=0, help="accepted for symmetry; results do not depend on it")
    c.set_defaults(func=cmd_classify)

    v = sub.add_parser("verify", help="compare counts with the golden table")
    v.add_argument("--level", choices=tuple(LEVELS), default="fast")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("topo", help="count topologies on n points")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--t0", action="store_true", help="count T0 topologies only")
    t.set_defaults(func=cmd_topo)

    s = sub.add_parser("stabilizer", help="stabilizer of a closed set")
    add_type(s)
    s.add_argument("--set", required=True, help='e.g. "a1+2a2+2a3,-a3", or "positive" / "all"')
    s.set_defaults(func=cmd_stabilizer)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
