"""Irreducible crystallographic root systems as integer tables.

Roots are stored over the simple-root basis (Bourbaki numbering).  The
invariant form is scaled so that short roots have squared length 2, which
keeps every inner product an integer.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator

import numpy as np

FAMILIES = "ABCDEFG"
NOT_A_ROOT = -1


@dataclass(frozen=True, order=True)
class RootSystemType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        family, rank = self.family, self.rank
        if family not in FAMILIES or len(family) != 1:
            raise ValueError(f"unknown root system family {family!r}")
        if not isinstance(rank, int) or rank < 1:
            raise ValueError(f"rank must be a positive integer, got {rank!r}")
        ok = {
            "A": rank >= 1,
            "B": rank >= 2,
            "C": rank >= 2,
            "D": rank >= 4,
            "E": 6 <= rank <= 8,
            "F": rank == 4,
            "G": rank == 2,
        }[family]
        if not ok:
            hint = " (use A3 instead of D3)" if (family, rank) == ("D", 3) else ""
            raise ValueError(f"no irreducible root system of type {family}{rank}{hint}")

    @classmethod
    def parse(cls, name: str) -> RootSystemType:
        """Parse names like ``"B3"`` or ``"e6"``."""
        name = name.strip()
        if len(name) < 2 or not name[1:].isdigit():
            raise ValueError(f"cannot parse root system type {name!r}")
        return cls(name[0].upper(), int(name[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def simple_gram(rtype: RootSystemType) -> np.ndarray:
    """Gram matrix of the simple roots, short roots of squared length 2."""
    fam, n = rtype.family, rtype.rank
    g = np.zeros((n, n), dtype=np.int64)

    def link(i: int, j: int, value: int) -> None:
        g[i, j] = g[j, i] = value

    if fam in "ADE":
        np.fill_diagonal(g, 2)
        if fam == "A":
            for i in range(n - 1):
                link(i, i + 1, -1)
        elif fam == "D":
            for i in range(n - 2):
                link(i, i + 1, -1)
            link(n - 3, n - 1, -1)
        else:
            # 1-3-4-5-6(-7-8) with 2 attached to 4
            link(0, 2, -1)
            link(1, 3, -1)
            for i in range(2, n - 1):
                link(i, i + 1, -1)
    elif fam == "B":
        np.fill_diagonal(g, 4)
        g[n - 1, n - 1] = 2
        for i in range(n - 2):
            link(i, i + 1, -2)
        link(n - 2, n - 1, -2)
    elif fam == "C":
        np.fill_diagonal(g, 2)
        g[n - 1, n - 1] = 4
        for i in range(n - 2):
            link(i, i + 1, -1)
        link(n - 2, n - 1, -2)
    elif fam == "F":
        g[:] = np.diag([4, 4, 2, 2])
        link(0, 1, -2)
        link(1, 2, -2)
        link(2, 3, -1)
    else:  # G2: alpha1 short, alpha2 long
        g[:] = np.diag([2, 6])
        link(0, 1, -3)
    return g


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable table of roots; indices ``0..N/2-1`` are the positive roots.

    ``cartan[i][j]`` is the Cartan integer <alpha_j, alpha_i^vee>.
    """

    rtype: RootSystemType
    roots: tuple[tuple[int, ...], ...]
    cartan: np.ndarray
    form: np.ndarray
    addtab: np.ndarray
    weights: np.ndarray
    _index: dict = field(repr=False)
    # per-root list of (j, k) with root_i + root_j = root_k
    partners: tuple = field(repr=False)
    partner_masks: tuple = field(repr=False)

    @property
    def rank(self) -> int:
        return self.rtype.rank

    @property
    def n_roots(self) -> int:
        return len(self.roots)

    @property
    def n_positive(self) -> int:
        return len(self.roots) // 2

    @property
    def name(self) -> str:
        return str(self.rtype)

    @property
    def positive_mask(self) -> int:
        return (1 << self.n_positive) - 1

    @property
    def full_mask(self) -> int:
        return (1 << self.n_roots) - 1

    def neg(self, i: int) -> int:
        half = self.n_positive
        return i + half if i < half else i - half

    def is_positive(self, i: int) -> bool:
        return i < self.n_positive

    def height(self, i: int) -> int:
        return sum(self.roots[i])

    @property
    def heights(self) -> tuple[int, ...]:
        return tuple(sum(c) for c in self.roots)

    @cached_property
    def add_list(self) -> tuple:
        """``addtab`` as nested tuples, for fast scalar lookups."""
        return tuple(tuple(int(x) for x in row) for row in self.addtab)

    @cached_property
    def weight_list(self) -> tuple:
        return tuple(tuple(int(x) for x in row) for row in self.weights)

    def add(self, i: int, j: int) -> int | None:
        k = int(self.addtab[i, j])
        return None if k == NOT_A_ROOT else k

    def index(self, coords) -> int:
        """Index of the root with the given simple-root coordinates."""
        try:
            return self._index[tuple(int(c) for c in coords)]
        except KeyError:
            raise ValueError(f"{tuple(coords)} is not a root of {self.name}") from None

    def find(self, coords) -> int | None:
        return self._index.get(tuple(int(c) for c in coords))

    def root_to_weight(self, i: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self.weights[i])

    def norm(self, i: int) -> int:
        return int(self.form[i, i])

    def simple_root(self, k: int) -> int:
        """Index of alpha_k (1-based, as in the usual notation)."""
        return self.index(tuple(int(j == k - 1) for j in range(self.rank)))

    def format_root(self, i: int) -> str:
        terms = []
        for k, c in enumerate(self.roots[i], start=1):
            if c == 0:
                continue
            coef = "" if abs(c) == 1 else str(abs(c))
            sign = "-" if c < 0 else "+"
            terms.append((sign, f"{coef}a{k}"))
        text = "".join(s + t for s, t in terms)
        return text[1:] if text.startswith("+") else text


def add_roots(rs: RootSystem, i: int, j: int) -> int | None:
    return rs.add(i, j)


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def build(rtype: RootSystemType | str) -> RootSystem:
    """Construct the root system of the given type."""
    if isinstance(rtype, str):
        rtype = RootSystemType.parse(rtype)
    gram = simple_gram(rtype)
    n = rtype.rank
    diag = np.diag(gram)
    cartan = (2 * gram) // diag[:, None]

    # all roots are W-conjugate to simple roots
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for c in frontier:
            for j in range(n):
                pairing = sum(c[k] * int(cartan[j, k]) for k in range(n))
                if pairing == 0:
                    continue
                img = list(c)
                img[j] -= pairing
                img = tuple(img)
                if img not in found:
                    found.add(img)
                    nxt.append(img)
        frontier = nxt

    positive = [c for c in found if all(x >= 0 for x in c)]
    positive.sort(key=lambda c: (sum(c), tuple(-x for x in c)))
    roots = tuple(positive) + tuple(tuple(-x for x in c) for c in positive)
    if len(roots) != len(found):
        raise AssertionError("mixed-sign root generated")
    index = {c: i for i, c in enumerate(roots)}

    coords = np.array(roots, dtype=np.int64)
    form = coords @ gram @ coords.T
    weights = coords @ cartan.T
    big_n = len(roots)
    addtab = np.full((big_n, big_n), NOT_A_ROOT, dtype=np.int64)
    partners = []
    partner_masks = []
    for i in range(big_n):
        row = []
        m = 0
        for j in range(big_n):
            k = index.get(tuple(a + b for a, b in zip(roots[i], roots[j])))
            if k is not None:
                addtab[i, j] = k
                row.append((j, k))
                m |= 1 << j
        partners.append(tuple(row))
        partner_masks.append(m)

    for arr in (cartan, form, addtab, weights):
        arr.setflags(write=False)
    return RootSystem(
        rtype=rtype,
        roots=roots,
        cartan=cartan,
        form=form,
        addtab=addtab,
        weights=weights,
        _index=index,
        partners=tuple(partners),
        partner_masks=tuple(partner_masks),
    )


def expected_root_count(rtype: RootSystemType) -> int:
    n = rtype.rank
    return {
        "A": n * (n + 1),
        "B": 2 * n * n,
        "C": 2 * n * n,
        "D": 2 * n * (n - 1),
        "E": {6: 72, 7: 126, 8: 240}.get(n, 0),
        "F": 48,
        "G": 12,
    }[rtype.family]
