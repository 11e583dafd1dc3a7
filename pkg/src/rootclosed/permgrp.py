"""Permutation groups with a deterministic stabilizer chain.

Permutations are tuples of images on ``0..degree-1``.  The product
``compose(p, q)`` applies ``q`` first, so groups act on the left.

Set stabilizers and transporters are found by depth-first backtrack over
the chain, pruning on base images and on points the remaining subgroup
fixes.  No partition refinement: the groups met here are small Weyl groups.
"""
from __future__ import annotations

import os
import random
import threading
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

Perm = tuple

DEFAULT_ELEMENT_CAP = 10**6


def element_cap() -> int:
    value = os.environ.get("ROOTCLOSED_ELEMENT_CAP")
    return int(value) if value else DEFAULT_ELEMENT_CAP


class ElementCapExceeded(RuntimeError):
    pass


def check_perm(images: Sequence[int], degree: int | None = None) -> Perm:
    p = tuple(int(x) for x in images)
    if degree is not None and len(p) != degree:
        raise ValueError(f"permutation has degree {len(p)}, expected {degree}")
    if sorted(p) != list(range(len(p))):
        raise ValueError("not a permutation")
    return p


def identity(degree: int) -> Perm:
    return tuple(range(degree))


def compose(p: Perm, q: Perm) -> Perm:
    """``p*q``: first ``q``, then ``p``."""
    return tuple([p[x] for x in q])


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def is_identity(p: Perm) -> bool:
    return all(i == x for i, x in enumerate(p))


def image_mask(p: Perm, mask: int) -> int:
    """Image of a point set given as a bitmask."""
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << p[low.bit_length() - 1]
        mask ^= low
    return out


def image_set(p: Perm, points: Iterable[int]) -> frozenset:
    return frozenset(p[x] for x in points)


def _as_mask(points) -> int:
    if isinstance(points, int):
        return points
    m = 0
    for x in points:
        m |= 1 << x
    return m


@dataclass
class _Level:
    base: int
    transversal: dict  # orbit point -> coset representative u with u(base) = point
    # points fixed by every element of this level's subgroup, as a mask
    fixed: int = 0


@dataclass(eq=False)
class PermGroup:
    degree: int
    gens: tuple
    _levels: list | None = field(default=None, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @classmethod
    def from_generators(cls, degree: int, gens: Iterable[Sequence[int]] = ()) -> PermGroup:
        checked = tuple(check_perm(g, degree) for g in gens)
        return cls(degree, tuple(g for g in checked if not is_identity(g)))

    # -- stabilizer chain ------------------------------------------------

    @property
    def chain(self) -> list:
        if self._levels is None:
            with self._lock:
                if self._levels is None:
                    self._levels = _schreier_sims(self.degree, list(self.gens))
        return self._levels

    @property
    def base(self) -> list[int]:
        return [lv.base for lv in self.chain]

    def order(self) -> int:
        n = 1
        for lv in self.chain:
            n *= len(lv.transversal)
        return n

    def is_trivial(self) -> bool:
        return not self.gens

    def sift(self, g: Perm) -> tuple[Perm, int]:
        return _sift(self.chain, g, 0)

    def __contains__(self, g: Perm) -> bool:
        if len(g) != self.degree:
            return False
        residue, _ = self.sift(tuple(g))
        return is_identity(residue)

    def elements(self, cap: int | None = None) -> Iterator[Perm]:
        """Every element exactly once, as products of transversal reps."""
        cap = element_cap() if cap is None else cap
        if self.order() > cap:
            raise ElementCapExceeded(f"group order {self.order()} exceeds cap {cap}")
        levels = self.chain

        def walk(depth: int, prefix: Perm) -> Iterator[Perm]:
            if depth == len(levels):
                yield prefix
                return
            for u in levels[depth].transversal.values():
                yield from walk(depth + 1, compose(prefix, u))

        yield from walk(0, identity(self.degree))

    def random_element(self, rng: random.Random) -> Perm:
        g = identity(self.degree)
        for lv in self.chain:
            reps = list(lv.transversal.values())
            g = compose(g, reps[rng.randrange(len(reps))])
        return g

    # -- orbits ----------------------------------------------------------

    def orbit(self, point: int) -> list[int]:
        seen = {point}
        stack = [point]
        while stack:
            x = stack.pop()
            for g in self.gens:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return sorted(seen)

    def orbits(self, points: Iterable[int]) -> list[list[int]]:
        """Orbits meeting ``points``, each sorted, ordered by minimum."""
        out = []
        done: set = set()
        for x in sorted(set(points)):
            if x in done:
                continue
            orb = self.orbit(x)
            done.update(orb)
            out.append(orb)
        # an orbit may reach below the point that seeded it
        out.sort(key=lambda o: o[0])
        return out

    # -- backtrack searches ----------------------------------------------

    def _search(self, src: int, dst: int) -> Iterator[Perm]:
        """Elements g with g(src) = dst, for point sets given as masks."""
        if bin(src).count("1") != bin(dst).count("1"):
            return
        levels = self.chain
        depth_max = len(levels)
        src_lists = []
        for lv in levels:
            inside = [x for x in _iter_bits(lv.fixed & src)]
            outside = [x for x in _iter_bits(lv.fixed & ~src & ((1 << self.degree) - 1))]
            src_lists.append((inside, outside))
        leaf_in = list(_iter_bits(src))

        def consistent(prefix: Perm, inside, outside) -> bool:
            for x in inside:
                if not (dst >> prefix[x]) & 1:
                    return False
            for x in outside:
                if (dst >> prefix[x]) & 1:
                    return False
            return True

        def walk(depth: int, prefix: Perm) -> Iterator[Perm]:
            if depth == depth_max:
                if all((dst >> prefix[x]) & 1 for x in leaf_in):
                    yield prefix
                return
            inside, outside = src_lists[depth]
            if not consistent(prefix, inside, outside):
                return
            lv = levels[depth]
            want = (src >> lv.base) & 1
            for point, u in lv.transversal.items():
                if ((dst >> prefix[point]) & 1) != want:
                    continue
                yield from walk(depth + 1, compose(prefix, u))

        yield from walk(0, identity(self.degree))

    def transporter(self, s1, s2) -> Perm | None:
        """Some g with g(s1) = s2, or None."""
        src, dst = _as_mask(s1), _as_mask(s2)
        for g in self._search(src, dst):
            return g
        return None

    def stabilizer_elements(self, s) -> list[Perm]:
        mask = _as_mask(s)
        return list(self._search(mask, mask))

    def set_stabilizer(self, s) -> PermGroup:
        """The setwise stabilizer of ``s`` (a mask or an iterable of points)."""
        elems = self.stabilizer_elements(s)
        return group_from_elements(self.degree, elems)


def group_from_elements(degree: int, elems: Sequence[Perm]) -> PermGroup:
    """Group with a small generating set for a known complete element list."""
    closure = {identity(degree)}
    gens: list = []
    for g in elems:
        if g in closure:
            continue
        gens.append(g)
        closure = _close(closure, gens)
    return PermGroup(degree, tuple(gens))


def _close(current: set, gens: list) -> set:
    found = set(current)
    stack = list(found)
    while stack:
        x = stack.pop()
        for g in gens:
            y = compose(g, x)
            if y not in found:
                found.add(y)
                stack.append(y)
    return found


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _sift(levels: list, g: Perm, start: int) -> tuple[Perm, int]:
    for i in range(start, len(levels)):
        lv = levels[i]
        x = g[lv.base]
        u = lv.transversal.get(x)
        if u is None:
            return g, i
        g = compose(inverse(u), g)
    return g, len(levels)


def _first_moved(g: Perm) -> int:
    for i, x in enumerate(g):
        if i != x:
            return i
    raise ValueError("identity has no moved point")


def _schreier_sims(degree: int, gens: list) -> list:
    """Deterministic Schreier-Sims; base points chosen as smallest moved points."""
    strong = [g for g in gens if not is_identity(g)]
    base: list[int] = []
    for g in strong:
        if all(g[b] == b for b in base):
            base.append(_first_moved(g))

    levels: list = [None] * len(base)

    def level_gens(i: int) -> list:
        return [g for g in strong if all(g[b] == b for b in base[:i])]

    def rebuild(i: int) -> None:
        gs = level_gens(i)
        b = base[i]
        trans = {b: identity(degree)}
        queue = [b]
        for x in queue:
            ux = trans[x]
            for g in gs:
                y = g[x]
                if y not in trans:
                    trans[y] = compose(g, ux)
                    queue.append(y)
        fixed = 0
        for p in range(degree):
            if all(g[p] == p for g in gs):
                fixed |= 1 << p
        levels[i] = _Level(b, trans, fixed)

    i = len(base) - 1
    for k in range(len(base)):
        rebuild(k)
    while i >= 0:
        rebuild(i)
        lv = levels[i]
        restart = None
        for x, ux in list(lv.transversal.items()):
            for g in level_gens(i):
                y = g[x]
                h = compose(inverse(lv.transversal[y]), compose(g, ux))
                residue, j = _sift(levels, h, i + 1)
                if not is_identity(residue):
                    strong.append(residue)
                    if j == len(base):
                        base.append(_first_moved(residue))
                        levels.append(None)
                    for k in range(i + 1, j + 1):
                        rebuild(k)
                    restart = j
                    break
            if restart is not None:
                break
        i = i - 1 if restart is None else restart

    return levels
