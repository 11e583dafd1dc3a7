"""Finite topologies on n points as closed subsets of A_{n-1}.

Points are numbered ``0..n-1``.  The root a_ij (i != j) is e_i - e_j; for
i < j it is the sum of the simple roots i .. j-1.  A topology is recorded
by its closure matrix m with m[i][j] = 1 iff i lies in the closure of {j},
and a_ij belongs to the matching closed set iff m[i][j] = 1.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .enumeration import classify_all, closure_violation, symmetric_part
from .rootsys import RootSystem, build

DEFAULT_TOPO_CAP = 6


@dataclass(frozen=True)
class TopologyMatrix:
    n: int
    m: tuple  # n rows of n bools

    def __post_init__(self) -> None:
        if len(self.m) != self.n or any(len(row) != self.n for row in self.m):
            raise ValueError("matrix shape does not match n")

    @classmethod
    def from_rows(cls, rows) -> TopologyMatrix:
        m = tuple(tuple(bool(x) for x in row) for row in rows)
        return cls(len(m), m)

    def violation(self) -> str | None:
        n, m = self.n, self.m
        for i in range(n):
            if not m[i][i]:
                return f"diagonal entry {i} is 0"
        for i, j, k in itertools.product(range(n), repeat=3):
            if m[i][j] and m[j][k] and not m[i][k]:
                return f"entries ({i},{j}) and ({j},{k}) set but ({i},{k}) not"
        return None

    def is_valid(self) -> bool:
        return self.violation() is None


def root_system(n: int) -> RootSystem:
    if n < 2:
        raise ValueError("need at least two points")
    return build(f"A{n - 1}")


def root_index(rs: RootSystem, i: int, j: int) -> int:
    """Index of a_ij in the A_{n-1} table."""
    if i == j:
        raise ValueError("a_ii is not a root")
    lo, hi = min(i, j), max(i, j)
    coords = [int(lo <= k < hi) for k in range(rs.rank)]
    k = rs.index(coords)
    return k if i < j else rs.neg(k)


def matrix_from_closed(n: int, s) -> TopologyMatrix:
    if n == 1:
        if s:
            raise ValueError("A0 has no roots")
        return TopologyMatrix(1, ((True,),))
    rs = root_system(n)
    mask = s if isinstance(s, int) else getattr(s, "mask", None)
    if mask is None:
        mask = sum(1 << i for i in s)
    bad = closure_violation(rs, mask)
    if bad is not None:
        raise ValueError("set is not closed")
    rows = [[i == j or bool((mask >> root_index(rs, i, j)) & 1) for j in range(n)] for i in range(n)]
    return TopologyMatrix.from_rows(rows)


def closed_from_matrix(mat: TopologyMatrix) -> int:
    problem = mat.violation()
    if problem is not None:
        raise ValueError(f"not a closure matrix: {problem}")
    if mat.n == 1:
        return 0
    rs = root_system(mat.n)
    mask = 0
    for i in range(mat.n):
        for j in range(mat.n):
            if i != j and mat.m[i][j]:
                mask |= 1 << root_index(rs, i, j)
    return mask


def is_t0(mat: TopologyMatrix) -> bool:
    n, m = mat.n, mat.m
    return not any(m[i][j] and m[j][i] for i in range(n) for j in range(i + 1, n))


def permute_matrix(mat: TopologyMatrix, pi) -> TopologyMatrix:
    """Relabel points by ``pi``: entry (pi(i), pi(j)) takes entry (i, j)."""
    n = mat.n
    rows = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            rows[pi[i]][pi[j]] = mat.m[i][j]
    return TopologyMatrix.from_rows(rows)


def _check_cap(n: int, cap: int) -> None:
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise ValueError(f"n={n} exceeds the cap {cap}")


def class_counts(n: int, t0_only: bool = False, cap: int = DEFAULT_TOPO_CAP) -> tuple[int, int]:
    """(labeled topologies, topologies up to homeomorphism), the discrete one included."""
    _check_cap(n, cap)
    if n == 1:
        return 1, 1
    res = classify_all(f"A{n - 1}", kinds=("special",) if t0_only else ("special", "mixed", "symmetric"))
    records = res.records()
    order = 1
    for k in range(2, n + 1):
        order *= k
    labeled = 1 + sum(order // rec.stab_order for rec in records)
    return labeled, len(records) + 1


def count_labeled(n: int, t0_only: bool = False, cap: int = DEFAULT_TOPO_CAP) -> int:
    return class_counts(n, t0_only, cap)[0]


def brute_force_counts(n: int, t0_only: bool = False) -> int:
    """Labeled count by scanning every reflexive boolean matrix (small n only)."""
    if n > 4:
        raise ValueError("brute force limited to n <= 4")
    cells = [(i, j) for i in range(n) for j in range(n) if i != j]
    total = 0
    for choice in itertools.product((False, True), repeat=len(cells)):
        rows = [[i == j for j in range(n)] for i in range(n)]
        for (i, j), v in zip(cells, choice):
            rows[i][j] = v
        mat = TopologyMatrix.from_rows(rows)
        if mat.is_valid() and (not t0_only or is_t0(mat)):
            total += 1
    return total


def is_special_via_roots(n: int, mat: TopologyMatrix) -> bool:
    if n == 1:
        return True
    return symmetric_part(root_system(n), closed_from_matrix(mat)) == 0
