"""Classification of closed subsets up to Weyl-group conjugacy.

Special sets come from the successor recursion: starting at the positive
roots, delete one element of T not in T+T, one per W_T-orbit, and keep the
result only when T has the least sigma among all one-root extensions inside
the positive roots.  Closed root subsystems come from a Borel-de Siebenthal
style walk over simple systems.  A mixed set is a special part T together
with a closed subsystem of its hull, taken up to W_T.
"""
from __future__ import annotations

import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .permgrp import PermGroup, image_mask
from .rootsys import RootSystem, bits, build, mask_of
from .weylinv import (
    InvariantKey,
    WeylAction,
    dominant,
    invariant_key,
    stabilizer_of_closed_set,
    sum_vector,
    weyl_group,
)

SPECIAL = "special"
MIXED = "mixed"
SYMMETRIC = "symmetric"
KINDS = (SPECIAL, MIXED, SYMMETRIC)

# above this order, mixed-set dedupe uses a backtrack search instead of a scan
SCAN_ORDER_LIMIT = 4096
BRUTE_FORCE_MAX_ROOTS = 18


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lex_key(mask: int) -> tuple:
    return tuple(bits(mask))


@dataclass(frozen=True)
class ClosedSet:
    """A set of root indices stored as a bitmask."""

    mask: int

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> ClosedSet:
        return cls(mask_of(indices))

    @property
    def indices(self) -> tuple[int, ...]:
        return lex_key(self.mask)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __contains__(self, i: int) -> bool:
        return bool((self.mask >> i) & 1)


@dataclass
class ClassRecord:
    rep: ClosedSet
    kind: str
    sym_part: ClosedSet
    spec_part: ClosedSet
    stab_gens: tuple = ()
    stab_order: int = 1


@dataclass
class ClassificationResult:
    rtype: str
    special: list = field(default_factory=list)
    mixed: list = field(default_factory=list)
    symmetric: list = field(default_factory=list)
    elapsed: float = field(default=0.0, compare=False)

    @property
    def counts(self) -> tuple[int, int, int, int]:
        s, m, y = len(self.special), len(self.mixed), len(self.symmetric)
        return s, m, y, s + m + y

    def records(self) -> list[ClassRecord]:
        return [*self.special, *self.mixed, *self.symmetric]

    def by_kind(self, kind: str) -> list[ClassRecord]:
        return {SPECIAL: self.special, MIXED: self.mixed, SYMMETRIC: self.symmetric}[kind]


# -- set primitives ---------------------------------------------------------


def _mask(s) -> int:
    if isinstance(s, ClosedSet):
        return s.mask
    if isinstance(s, int):
        return s
    return mask_of(s)


def closure_violation(rs: RootSystem, s) -> tuple[int, int] | None:
    """A pair (i, j) in s whose sum is a root outside s, if any."""
    m = _mask(s)
    add = rs.add_list
    for i in bits(m):
        for j in bits(rs.partner_masks[i] & m):
            if not (m >> add[i][j]) & 1:
                return i, j
    return None


def is_closed(rs: RootSystem, s) -> bool:
    return closure_violation(rs, s) is None


def closure(rs: RootSystem, s) -> int:
    """Smallest closed set containing s."""
    m = _mask(s)
    add = rs.add_list
    stack = list(bits(m))
    while stack:
        i = stack.pop()
        for j in bits(rs.partner_masks[i] & m):
            k = add[i][j]
            if not (m >> k) & 1:
                m |= 1 << k
                stack.append(k)
    return m


def extends_closed(rs: RootSystem, s: int, beta: int) -> bool:
    """Whether s | {beta} is closed, given that s is closed and beta not in s."""
    row = rs.add_list[beta]
    t = s | (1 << beta)
    for j in bits(rs.partner_masks[beta] & s):
        if not (t >> row[j]) & 1:
            return False
    return True


def symmetric_part(rs: RootSystem, s: int) -> int:
    half = rs.n_positive
    low = (1 << half) - 1
    pos, neg = s & low, s >> half
    both = pos & neg
    return both | (both << half)


def split_parts(rs: RootSystem, s) -> tuple[ClosedSet, ClosedSet]:
    m = _mask(s)
    bad = closure_violation(rs, m)
    if bad is not None:
        i, j = bad
        raise ValueError(
            f"not closed: {rs.format_root(i)} + {rs.format_root(j)} is a root outside the set"
        )
    sym = symmetric_part(rs, m)
    return ClosedSet(sym), ClosedSet(m & ~sym)


def kind_of(rs: RootSystem, s) -> str:
    m = _mask(s)
    sym = symmetric_part(rs, m)
    if sym == 0:
        return SPECIAL
    return SYMMETRIC if sym == m else MIXED


def sum_set(rs: RootSystem, t) -> int:
    """Elements of t that are a sum of two elements of t."""
    m = _mask(t)
    add = rs.add_list
    out = 0
    for i in bits(m):
        for j in bits(rs.partner_masks[i] & m):
            k = add[i][j]
            if (m >> k) & 1:
                out |= 1 << k
    return out


def positive_normalizer(rs: RootSystem, s) -> int:
    """Positive roots beta outside s with s | {beta} closed."""
    m = _mask(s)
    out = 0
    for beta in bits(rs.positive_mask & ~m):
        if extends_closed(rs, m, beta):
            out |= 1 << beta
    return out


# -- special sets -----------------------------------------------------------


def _weight_add(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def _weight_sub(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def special_successors(
    wa: WeylAction, t, w_t: PermGroup | None = None, *, filtered: bool = False
) -> list[ClosedSet]:
    """One candidate T minus {alpha} per W_T-orbit on T minus (T+T).

    With ``filtered`` the sigma-minimality test is applied and candidates
    failing it are dropped.
    """
    rs = wa.rs
    m = _mask(t)
    if w_t is None:
        w_t = stabilizer_of_closed_set(wa, m)
    removable = m & ~sum_set(rs, m)
    xi = sum_vector(rs, m)
    sig = dominant(wa, xi)
    wts = rs.weight_list
    out = []
    for orbit in w_t.orbits(bits(removable)):
        alpha = orbit[0]
        s = m & ~(1 << alpha)
        if filtered and not _sigma_minimal(wa, s, _weight_sub(xi, wts[alpha]), sig):
            continue
        out.append(ClosedSet(s))
    return out


def _sigma_minimal(wa: WeylAction, s: int, xi_s: tuple, sig_t: tuple) -> bool:
    """True iff no one-root positive extension of s has sigma below sig_t."""
    rs = wa.rs
    wts = rs.weight_list
    for beta in bits(rs.positive_mask & ~s):
        if extends_closed(rs, s, beta) and dominant(wa, _weight_add(xi_s, wts[beta])) < sig_t:
            return False
    return True


def _expand_parent(wa: WeylAction, t: int) -> tuple:
    w_t = stabilizer_of_closed_set(wa, t)
    cands = special_successors(wa, t, w_t, filtered=True)
    keyed = [(c.mask, invariant_key(wa, c.mask)) for c in cands if c.mask]
    return t, w_t.gens, w_t.order(), keyed


class _Classes:
    """Class list with invariant buckets; conjugacy tested inside a bucket."""

    def __init__(self, group: PermGroup, scan: bool = False) -> None:
        self.group = group
        self.reps: list[int] = []
        self.buckets: dict = {}
        self.scan_elems = list(group.elements()) if scan else None

    def _conjugate(self, a: int, b: int) -> bool:
        if self.scan_elems is not None:
            return any(image_mask(g, a) == b for g in self.scan_elems)
        return self.group.transporter(a, b) is not None

    def add(self, mask: int, key) -> bool:
        """Insert unless conjugate to a known class; keeps the lex-least rep."""
        bucket = self.buckets.setdefault(key, [])
        for pos in bucket:
            rep = self.reps[pos]
            if rep == mask:
                return False
            if self._conjugate(mask, rep):
                if lex_key(mask) < lex_key(rep):
                    self.reps[pos] = mask
                return False
        bucket.append(len(self.reps))
        self.reps.append(mask)
        return True


def _sorted_masks(masks: Iterable[int]) -> list[int]:
    return sorted(masks, key=lambda m: (-popcount(m), lex_key(m)))


_WORKER: dict = {}


def _worker_init(name: str) -> None:
    _WORKER["wa"] = weyl_group(build(name))


def _worker_expand(t: int) -> tuple:
    return _expand_parent(_WORKER["wa"], t)


def _worker_mixed(args: tuple) -> list:
    t, gens = args
    wa = _WORKER["wa"]
    return _mixed_masks(wa, t, PermGroup.from_generators(wa.degree, gens))


class _Pool:
    """Ordered map, inline for one job, worker processes otherwise."""

    def __init__(self, wa: WeylAction, jobs: int) -> None:
        self.wa = wa
        self.jobs = max(1, int(jobs))
        self.executor = None
        if self.jobs > 1:
            self.executor = ProcessPoolExecutor(
                max_workers=self.jobs, initializer=_worker_init, initargs=(wa.rs.name,)
            )

    def map(self, inline, remote, items: Sequence) -> list:
        if self.executor is None or len(items) < 2:
            return [inline(x) for x in items]
        chunk = max(1, len(items) // (4 * self.jobs))
        return list(self.executor.map(remote, items, chunksize=chunk))

    def close(self) -> None:
        if self.executor is not None:
            self.executor.shutdown()

    def __enter__(self) -> _Pool:
        return self

    def __exit__(self, *exc) -> None:
        self.close()


def _special_records(wa: WeylAction, pool: _Pool) -> list[ClassRecord]:
    rs = wa.rs
    records = []
    level = [rs.positive_mask]
    while level:
        expanded = pool.map(lambda t: _expand_parent(wa, t), _worker_expand, level)
        classes = _Classes(wa.group)
        for t, gens, order, keyed in expanded:
            records.append(ClassRecord(ClosedSet(t), SPECIAL, ClosedSet(0), ClosedSet(t), tuple(gens), order))
            for mask, key in keyed:
                classes.add(mask, key)
        level = _sorted_masks(classes.reps)
    return records


def enumerate_special(wa: WeylAction, jobs: int = 1) -> list[ClassRecord]:
    """One record per W-class of nonempty special closed sets, each inside the positive roots."""
    with _Pool(wa, jobs) as pool:
        return _special_records(wa, pool)


# -- closed subsystems ------------------------------------------------------


def simple_system(rs: RootSystem, sub: int) -> list[int]:
    """Simple roots of a closed subsystem: its positive roots that are not sums of two."""
    pos = sub & rs.positive_mask
    return [a for a in bits(pos & ~sum_set(rs, pos))]


def reflection_closure(wa: WeylAction, gens: Iterable[int]) -> int:
    """Root subsystem generated by ``gens``: their orbit under their reflections."""
    gens = list(gens)
    refls = [wa.reflection(g) for g in gens]
    seen = mask_of(gens)
    stack = list(gens)
    while stack:
        x = stack.pop()
        for r in refls:
            y = r[x]
            if not (seen >> y) & 1:
                seen |= 1 << y
                stack.append(y)
    return seen


def _components(rs: RootSystem, simple: list[int]) -> list[list[int]]:
    comps: list[list[int]] = []
    left = list(simple)
    while left:
        comp = [left.pop(0)]
        grew = True
        while grew:
            grew = False
            for x in list(left):
                if any(int(rs.form[x, y]) != 0 for y in comp):
                    comp.append(x)
                    left.remove(x)
                    grew = True
        comps.append(sorted(comp))
    return comps


def _highest_root(wa: WeylAction, comp: list[int]) -> int:
    rs = wa.rs
    sub = reflection_closure(wa, comp)
    return max(bits(sub & rs.positive_mask), key=lambda i: (rs.height(i), lex_key(1 << i)))


def subsystem_children(wa: WeylAction, sub: int) -> list[int]:
    """Closed subsystems one Borel-de Siebenthal move below ``sub``."""
    rs = wa.rs
    simple = simple_system(rs, sub)
    kids = set()
    for pi in simple:
        kids.add(reflection_closure(wa, [x for x in simple if x != pi]))
    for comp in _components(rs, simple):
        if len(comp) == 1:
            continue
        low = rs.neg(_highest_root(wa, comp))
        rest = [x for x in simple if x not in comp]
        for pi in comp:
            kids.add(reflection_closure(wa, rest + [low] + [x for x in comp if x != pi]))
    kids.discard(0)
    kids.discard(sub)
    return sorted((k for k in kids if is_closed(rs, k)), key=lex_key)


def closed_subsystems(wa: WeylAction, top: int, group: PermGroup) -> list[int]:
    """Nonempty closed subsystems of ``top`` up to ``group``, found by descent."""
    classes = _Classes(group)
    if not top:
        return []
    classes.add(top, invariant_key(wa, top))
    queue = deque([top])
    while queue:
        sub = queue.popleft()
        for kid in subsystem_children(wa, sub):
            if classes.add(kid, invariant_key(wa, kid)):
                queue.append(kid)
    return classes.reps


def enumerate_symmetric(wa: WeylAction) -> list[ClassRecord]:
    rs = wa.rs
    records = []
    for sub in _sorted_masks(closed_subsystems(wa, rs.full_mask, wa.group)):
        stab = stabilizer_of_closed_set(wa, sub)
        records.append(
            ClassRecord(ClosedSet(sub), SYMMETRIC, ClosedSet(sub), ClosedSet(0), stab.gens, stab.order())
        )
    return records


# -- mixed sets ----------------------------------------------------------------


def symmetric_hull(rs: RootSystem, t) -> int:
    """Roots alpha outside T and -T such that T | {alpha, -alpha} is closed."""
    m = _mask(t)
    minus = 0
    for i in bits(m):
        minus |= 1 << rs.neg(i)
    out = 0
    for a in bits(rs.full_mask & ~(m | minus)):
        if (out >> a) & 1:
            continue
        b = rs.neg(a)
        if extends_closed(rs, m, a) and extends_closed(rs, m | (1 << a), b):
            out |= (1 << a) | (1 << b)
    return out


def hull_group(wa: WeylAction, hull: int) -> PermGroup:
    gens = [wa.reflection(a) for a in bits(hull & wa.rs.positive_mask)]
    return PermGroup.from_generators(wa.degree, gens)


def _mixed_masks(wa: WeylAction, t: int, w_t: PermGroup) -> list:
    hull = symmetric_hull(wa.rs, t)
    if not hull:
        return []
    subs = closed_subsystems(wa, hull, hull_group(wa, hull))
    classes = _Classes(w_t, scan=w_t.order() <= SCAN_ORDER_LIMIT)
    for p in _sorted_masks(subs):
        r = p | t
        classes.add(r, invariant_key(wa, r))
    out = []
    for r in _sorted_masks(classes.reps):
        stab = w_t.set_stabilizer(r)
        out.append((r, stab.gens, stab.order()))
    return out


def enumerate_mixed_for(wa: WeylAction, t, w_t: PermGroup | None = None) -> list[ClassRecord]:
    m = _mask(t)
    if w_t is None:
        w_t = stabilizer_of_closed_set(wa, m)
    return [_mixed_record(wa.rs, r, gens, order) for r, gens, order in _mixed_masks(wa, m, w_t)]


def _mixed_record(rs: RootSystem, r: int, gens, order: int) -> ClassRecord:
    sym = symmetric_part(rs, r)
    return ClassRecord(ClosedSet(r), MIXED, ClosedSet(sym), ClosedSet(r & ~sym), tuple(gens), order)


# -- driver ---------------------------------------------------------------------


def classify_all(
    wa: WeylAction | RootSystem | str, jobs: int = 1, kinds: Iterable[str] = KINDS
) -> ClassificationResult:
    """Every nonempty closed set up to conjugacy, split by kind."""
    start = time.perf_counter()
    if not isinstance(wa, WeylAction):
        wa = weyl_group(wa)
    kinds = set(kinds)
    unknown = kinds - set(KINDS)
    if unknown:
        raise ValueError(f"unknown kinds: {sorted(unknown)}")
    result = ClassificationResult(wa.rs.name)
    with _Pool(wa, jobs) as pool:
        special = []
        if SPECIAL in kinds or MIXED in kinds:
            special = _special_records(wa, pool)
        if SPECIAL in kinds:
            result.special = special
        if MIXED in kinds:
            items = [(rec.rep.mask, rec.stab_gens) for rec in special]
            inline = lambda it: _mixed_masks(  # noqa: E731
                wa, it[0], PermGroup.from_generators(wa.degree, it[1])
            )
            for chunk in pool.map(inline, _worker_mixed, items):
                result.mixed.extend(_mixed_record(wa.rs, *x) for x in chunk)
    if SYMMETRIC in kinds:
        result.symmetric = enumerate_symmetric(wa)
    result.elapsed = time.perf_counter() - start
    return result


# -- brute-force oracle --------------------------------------------------------


def all_closed_masks(rs: RootSystem) -> np.ndarray:
    """Every closed subset (the empty set included) as an array of masks."""
    n = rs.n_roots
    if n > BRUTE_FORCE_MAX_ROOTS:
        raise ValueError(f"brute force needs at most {BRUTE_FORCE_MAX_ROOTS} roots, {rs.name} has {n}")
    masks = np.arange(1 << n, dtype=np.int64)
    bad = np.zeros(1 << n, dtype=bool)
    add = rs.add_list
    for i in range(n):
        for j in range(i + 1, n):
            k = add[i][j]
            if k < 0:
                continue
            hit = ((masks >> i) & (masks >> j) & ~(masks >> k) & 1).astype(bool)
            bad |= hit
    return masks[~bad]


def brute_force_classify(wa: WeylAction | RootSystem | str) -> ClassificationResult:
    """Orbits of W on all closed subsets, by exhaustive search."""
    start = time.perf_counter()
    if not isinstance(wa, WeylAction):
        wa = weyl_group(wa)
    rs = wa.rs
    order = wa.group.order()
    closed = [int(m) for m in all_closed_masks(rs)]
    seen: set = set()
    result = ClassificationResult(rs.name)
    for m in closed:
        if m == 0 or m in seen:
            continue
        orbit = {m}
        stack = [m]
        while stack:
            x = stack.pop()
            for s in wa.simple_refls:
                y = image_mask(s, x)
                if y not in orbit:
                    orbit.add(y)
                    stack.append(y)
        seen |= orbit
        rep = min(orbit, key=lex_key)
        sym = symmetric_part(rs, rep)
        kind = kind_of(rs, rep)
        rec = ClassRecord(ClosedSet(rep), kind, ClosedSet(sym), ClosedSet(rep & ~sym), (), order // len(orbit))
        result.by_kind(kind).append(rec)
    for kind in KINDS:
        result.by_kind(kind).sort(key=lambda r: (-len(r.rep), r.rep.indices))
    result.elapsed = time.perf_counter() - start
    return result


def same_classes(wa: WeylAction, a: Sequence[int], b: Sequence[int]) -> bool:
    """Whether two lists of representatives describe the same W-orbits."""
    if len(a) != len(b):
        return False
    pending: dict = {}
    for m in b:
        pending.setdefault(invariant_key(wa, m), []).append(m)
    for m in a:
        bucket = pending.get(invariant_key(wa, m), [])
        for pos, other in enumerate(bucket):
            if wa.group.transporter(m, other) is not None:
                del bucket[pos]
                break
        else:
            return False
    return True


__all__ = [
    "ClassRecord",
    "ClassificationResult",
    "ClosedSet",
    "InvariantKey",
    "KINDS",
    "MIXED",
    "SPECIAL",
    "SYMMETRIC",
    "all_closed_masks",
    "brute_force_classify",
    "classify_all",
    "closed_subsystems",
    "closure",
    "closure_violation",
    "enumerate_mixed_for",
    "enumerate_special",
    "enumerate_symmetric",
    "is_closed",
    "kind_of",
    "symmetric_hull",
    "positive_normalizer",
    "same_classes",
    "special_successors",
    "split_parts",
    "sum_set",
]
