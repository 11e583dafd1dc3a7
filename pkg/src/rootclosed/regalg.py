"""Toral parts of regular subalgebras and their conjugacy under W_T.

Cartan elements are written over the simple coroots h_1..h_l.  Subspaces
are kept as exact rational row spaces in reduced row-echelon form.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import sympy

from .enumeration import symmetric_part
from .permgrp import Perm
from .rootsys import RootSystem, bits
from .weylinv import WeylAction, stabilizer_of_closed_set


def _matrix(rows: Iterable[Sequence], ncols: int) -> sympy.Matrix:
    rows = [[sympy.Rational(str(Fraction(x))) for x in row] for row in rows]
    return sympy.Matrix(len(rows), ncols, [x for row in rows for x in row])


def _rref_rows(rows: Iterable[Sequence], ncols: int) -> tuple:
    m = _matrix(rows, ncols)
    if m.rows == 0:
        return ()
    reduced, pivots = m.rref()
    return tuple(tuple(Fraction(int(x.p), int(x.q)) for x in reduced.row(i)) for i in range(len(pivots)))


@dataclass(frozen=True)
class ToralSubspace:
    """Row space of ``basis`` in coroot coordinates, stored in canonical form."""

    basis: tuple
    rank: int

    @classmethod
    def span(cls, vectors: Iterable[Sequence], rank: int) -> ToralSubspace:
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != rank:
                raise ValueError(f"vector {v} does not have length {rank}")
        return cls(_rref_rows(vectors, rank), rank)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        return ToralSubspace.span([*self.basis, tuple(v)], self.rank).dim == self.dim


def coroot(rs: RootSystem, i: int) -> tuple:
    """Coordinates of the coroot of root ``i`` over the simple coroots."""
    norm = rs.norm(i)
    simple_norms = [rs.norm(rs.simple_root(k + 1)) for k in range(rs.rank)]
    return tuple(Fraction(c * simple_norms[k], norm) for k, c in enumerate(rs.roots[i]))


def required_coroots(rs: RootSystem, t) -> list[tuple]:
    """Coroots of the positive roots whose negatives are also in T."""
    mask = t if isinstance(t, int) else t.mask
    sym = symmetric_part(rs, mask)
    return [coroot(rs, i) for i in bits(sym & rs.positive_mask)]


def is_valid_toral(rs: RootSystem, t, space: ToralSubspace) -> bool:
    return all(space.contains(v) for v in required_coroots(rs, t))


def weyl_cartan_matrix(wa: WeylAction, w: Perm) -> tuple:
    """Matrix of ``w`` on coroot coordinates (columns are images of h_1..h_l)."""
    rs = wa.rs
    n = rs.rank
    simple = [rs.simple_root(k + 1) for k in range(n)]
    norms = [rs.norm(i) for i in simple]
    cols = [rs.roots[w[i]] for i in simple]
    return tuple(
        tuple(Fraction(cols[i][k] * norms[k], norms[i]) for i in range(n)) for k in range(n)
    )


def mat_vec(mat: tuple, v: Sequence) -> tuple:
    return tuple(sum(a * b for a, b in zip(row, v)) for row in mat)


def mat_mul(a: tuple, b: tuple) -> tuple:
    n = len(b[0])
    return tuple(tuple(sum(row[k] * b[k][j] for k in range(len(b))) for j in range(n)) for row in a)


def act(wa: WeylAction, w: Perm, space: ToralSubspace) -> ToralSubspace:
    mat = weyl_cartan_matrix(wa, w)
    return ToralSubspace.span([mat_vec(mat, v) for v in space.basis], space.rank)


def coroot_form(rs: RootSystem) -> tuple:
    """W-invariant form on the simple coroots."""
    simple = [rs.simple_root(k + 1) for k in range(rs.rank)]
    return tuple(
        tuple(Fraction(4 * int(rs.form[i, j]), rs.norm(i) * rs.norm(j)) for j in simple) for i in simple
    )


def orthogonal_complement(rs: RootSystem, vectors: Iterable[Sequence]) -> ToralSubspace:
    form = coroot_form(rs)
    rows = [mat_vec(form, v) for v in vectors]
    if not rows:
        return ToralSubspace.span([tuple(int(i == j) for j in range(rs.rank)) for i in range(rs.rank)], rs.rank)
    null = _matrix(rows, rs.rank).nullspace()
    return ToralSubspace.span([[Fraction(int(x.p), int(x.q)) for x in v] for v in null], rs.rank)


def toral_conjugate(
    wa: WeylAction, t, t1: ToralSubspace, t2: ToralSubspace, cap: int | None = None
) -> Perm | None:
    """Some w in W_T with w(t1) = t2, or None; W_T is scanned element by element."""
    mask = t if isinstance(t, int) else t.mask
    if t1.dim != t2.dim:
        return None
    w_t = stabilizer_of_closed_set(wa, mask)
    for w in w_t.elements(cap):
        if act(wa, w, t1) == t2:
            return w
    return None


def coroot_from_standard(rs: RootSystem, vec: Sequence) -> tuple:
    """Coroot coordinates of a Cartan element in the usual matrix model.

    A_l: the diagonal entries a_1..a_{l+1} (trace zero).  B_l and C_l: the
    entries lambda_1..lambda_l of diag(.., lambda, .., -lambda).
    """
    fam, n = rs.rtype.family, rs.rank
    vec = [Fraction(x) for x in vec]
    partial = [sum(vec[: k + 1], Fraction(0)) for k in range(len(vec))]
    if fam == "A":
        if len(vec) != n + 1 or partial[-1] != 0:
            raise ValueError("type A needs l+1 diagonal entries summing to zero")
        return tuple(partial[:n])
    if fam in "BC":
        if len(vec) != n:
            raise ValueError(f"type {fam} needs {n} entries")
        last = partial[n - 1] / 2 if fam == "B" else partial[n - 1]
        return (*partial[: n - 1], last)
    raise ValueError(f"no standard model for type {fam}")
