"""Weyl group acting on root indices, and conjugacy invariants of root sets.

Three invariants separate most classes before any group search: the
dominant conjugate of the sum vector, the same for the set of roots having
inner product >= r with every member (r = -1 by default), and the Gram
matrix with sorted rows in lexicographic order.
"""
from __future__ import annotations

import weakref
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

import numpy as np

from .permgrp import Perm, PermGroup, compose, identity, image_mask, inverse
from .rootsys import RootSystem, bits, build

Weight = tuple


class InvariantKey(NamedTuple):
    size: int
    sigma: Weight
    delta: Weight
    gram: tuple


@dataclass(eq=False)
class WeylAction:
    rs: RootSystem
    simple_refls: tuple
    group: PermGroup
    _refl_cache: dict = field(default_factory=dict, repr=False)

    @property
    def degree(self) -> int:
        return self.rs.n_roots

    def reflection(self, root: int) -> Perm:
        """Permutation of root indices induced by the reflection in ``root``."""
        rs = self.rs
        if root >= rs.n_positive:
            root = rs.neg(root)
        perm = self._refl_cache.get(root)
        if perm is None:
            gamma = rs.roots[root]
            norm = rs.norm(root)
            images = []
            for i, beta in enumerate(rs.roots):
                pairing = 2 * int(rs.form[i, root]) // norm
                images.append(rs.index(tuple(b - pairing * g for b, g in zip(beta, gamma))))
            perm = tuple(images)
            self._refl_cache[root] = perm
        return perm

    @cached_property
    def _simple_columns(self) -> list:
        # weight coordinates of each simple root
        c = self.rs.cartan
        return [tuple(int(x) for x in c[:, j]) for j in range(self.rs.rank)]

    def reflect_weight(self, j: int, v: Weight) -> Weight:
        m = v[j]
        if m == 0:
            return tuple(v)
        col = self._simple_columns[j]
        return tuple(a - m * b for a, b in zip(v, col))

    def act_on_weight(self, w: Perm, v: Weight) -> Weight:
        """Linear action of ``w`` on a weight: m_j(w v) = <v, w^-1(alpha_j)^vee>."""
        rs = self.rs
        winv = inverse(w)
        simple_norms = [rs.norm(i) for i in self._simple_indices]
        out = []
        for j in range(rs.rank):
            k = winv[self._simple_indices[j]]
            num = sum(c * n * x for c, n, x in zip(rs.roots[k], simple_norms, v))
            out.append(num // rs.norm(k))
        return tuple(out)

    @cached_property
    def _simple_indices(self) -> list:
        return [self.rs.simple_root(k + 1) for k in range(self.rs.rank)]

    def element_from_word(self, word) -> Perm:
        """Product s_{i1} s_{i2} ... for a word of 1-based simple indices."""
        g = identity(self.degree)
        for i in word:
            g = compose(g, self.simple_refls[i - 1])
        return g

    def word(self, w: Perm) -> list[int]:
        """Reduced word (1-based simple indices) with product equal to ``w``."""
        rs = self.rs
        out: list[int] = []
        g = w
        while True:
            for j, s in enumerate(self.simple_refls):
                if not rs.is_positive(g[self._simple_indices[j]]):
                    g = compose(g, s)
                    out.append(j + 1)
                    break
            else:
                break
        return out[::-1]


def weyl_group(rs: RootSystem | str) -> WeylAction:
    if isinstance(rs, str):
        rs = build(rs)
    refls = []
    for k in range(1, rs.rank + 1):
        images = []
        for beta in rs.roots:
            pairing = sum(b * int(rs.cartan[k - 1, t]) for t, b in enumerate(beta))
            img = list(beta)
            img[k - 1] -= pairing
            images.append(rs.index(img))
        refls.append(tuple(images))
    group = PermGroup.from_generators(rs.n_roots, refls)
    return WeylAction(rs, tuple(refls), group)


def sum_vector(rs: RootSystem, s: int) -> Weight:
    """Sum of the roots in ``s`` (a mask), in fundamental-weight coordinates."""
    if not s:
        return (0,) * rs.rank
    idx = list(bits(s))
    return tuple(int(x) for x in rs.weights[idx].sum(axis=0))


def dominant_conjugate(wa: WeylAction, v: Weight) -> tuple[Weight, Perm]:
    """Dominant weight in the W-orbit of ``v`` and some w with w(v) dominant.

    Repeatedly reflects in the smallest simple index with a negative
    coordinate.
    """
    v = tuple(int(x) for x in v)
    w = identity(wa.degree)
    while True:
        for j, m in enumerate(v):
            if m < 0:
                v = wa.reflect_weight(j, v)
                w = compose(wa.simple_refls[j], w)
                break
        else:
            return v, w


def dominant(wa: WeylAction, v: Weight) -> Weight:
    v = tuple(v)
    while True:
        for j, m in enumerate(v):
            if m < 0:
                v = wa.reflect_weight(j, v)
                break
        else:
            return v


def sigma(wa: WeylAction, s: int) -> Weight:
    return dominant(wa, sum_vector(wa.rs, s))


def _geq_masks(rs: RootSystem, r) -> list:
    cache = _GEQ_CACHE.setdefault(rs, {})
    masks = cache.get(r)
    if masks is None:
        masks = []
        for j in range(rs.n_roots):
            col = rs.form[:, j]
            m = 0
            for i in np.nonzero(col >= r)[0]:
                m |= 1 << int(i)
            masks.append(m)
        cache[r] = masks
    return masks


_GEQ_CACHE: weakref.WeakKeyDictionary = weakref.WeakKeyDictionary()


def level_set(rs: RootSystem, s: int, r=-1) -> int:
    """Roots whose inner product with every member of ``s`` is at least r."""
    masks = _geq_masks(rs, r)
    out = rs.full_mask
    for j in bits(s):
        out &= masks[j]
    return out


def delta(wa: WeylAction, s: int, r=-1) -> Weight:
    return sigma(wa, level_set(wa.rs, s, r))


def gram_key(rs: RootSystem, s: int) -> tuple:
    """Gram matrix of ``s``, rows sorted, then rows in lexicographic order."""
    idx = list(bits(s))
    if not idx:
        return ()
    sub = np.sort(rs.form[np.ix_(idx, idx)], axis=1)
    return tuple(sorted(tuple(int(x) for x in row) for row in sub))


def invariant_key(wa: WeylAction, s: int) -> InvariantKey:
    return InvariantKey(
        bin(s).count("1"),
        sigma(wa, s),
        delta(wa, s),
        gram_key(wa.rs, s),
    )


def weight_stabilizer(wa: WeylAction, v: Weight) -> PermGroup:
    """Stabilizer of ``v``: a conjugate of the parabolic subgroup at its dominant form."""
    dom, w = dominant_conjugate(wa, v)
    winv = inverse(w)
    gens = [
        compose(winv, compose(wa.simple_refls[j], w))
        for j, m in enumerate(dom)
        if m == 0
    ]
    return PermGroup.from_generators(wa.degree, gens)


def stabilizer_of_closed_set(wa: WeylAction, t: int) -> PermGroup:
    """Setwise stabilizer of ``t`` in W, searched inside the sum-vector stabilizer."""
    seed = weight_stabilizer(wa, sum_vector(wa.rs, t))
    if all(image_mask(g, t) == t for g in seed.gens):
        return seed
    return seed.set_stabilizer(t)
