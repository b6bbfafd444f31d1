"""Exact linear algebra over the fields in :mod:`multalg.fields`.

Matrices are plain lists of rows.  A linear map ``V -> W`` is a matrix with
``dim W`` rows and ``dim V`` columns acting on column vectors.  Subspaces are
stored by their reduced row-echelon basis, which makes equality of subspaces
equality of canonical bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels
from .errors import DimensionMismatch, NoSolution
from .fields import Field, PrimeField

Vector = tuple
Matrix = list


# ----------------------------------------------------------------------------
# small dense helpers


def zeros(field: Field, n: int) -> list:
    return [field.zero] * n


def zero_matrix(field: Field, rows: int, cols: int) -> Matrix:
    return [[field.zero] * cols for _ in range(rows)]


def identity(field: Field, n: int) -> Matrix:
    m = zero_matrix(field, n, n)
    for i in range(n):
        m[i][i] = field.one
    return m


def unit_vector(field: Field, n: int, i: int) -> tuple:
    v = [field.zero] * n
    v[i] = field.one
    return tuple(v)


def transpose(m: Matrix, ncols: int | None = None) -> Matrix:
    if not m:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*m)]


def mat_vec(field: Field, m: Matrix, v: Sequence) -> tuple:
    add, mul = field.add, field.mul
    out = []
    for row in m:
        acc = field.zero
        for a, b in zip(row, v):
            if a and b:
                acc = add(acc, mul(a, b))
        out.append(acc)
    return tuple(out)


def mat_mul(field: Field, a: Matrix, b: Matrix) -> Matrix:
    """Product ``a b``, skipping zero entries of both factors."""
    if not a:
        return []
    ncols = len(b[0]) if b else 0
    add, mul = field.add, field.mul
    b_nz = [[(j, y) for j, y in enumerate(row) if y] for row in b]
    out = []
    for row in a:
        new = [field.zero] * ncols
        for k, x in enumerate(row):
            if x:
                for j, y in b_nz[k]:
                    new[j] = add(new[j], mul(x, y))
        out.append(new)
    return out


def vec_add(field: Field, u: Sequence, v: Sequence) -> tuple:
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths {len(u)} and {len(v)}")
    return tuple(field.add(a, b) for a, b in zip(u, v))


def vec_sub(field: Field, u: Sequence, v: Sequence) -> tuple:
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths {len(u)} and {len(v)}")
    return tuple(field.sub(a, b) for a, b in zip(u, v))


def vec_scale(field: Field, c, v: Sequence) -> tuple:
    return tuple(field.mul(c, a) for a in v)


def lin_comb(field: Field, coeffs: Sequence, vectors: Sequence[Sequence], n: int) -> tuple:
    acc = [field.zero] * n
    add, mul = field.add, field.mul
    for c, v in zip(coeffs, vectors):
        if not c:
            continue
        for k, x in enumerate(v):
            if x:
                acc[k] = add(acc[k], mul(c, x))
    return tuple(acc)


def is_zero_vector(v: Sequence) -> bool:
    return not any(v)


# ----------------------------------------------------------------------------
# row reduction


def _rref_generic(field: Field, rows: Iterable[Sequence], ncols: int):
    sub, mul, inv = field.sub, field.mul, field.inv
    echelon: dict[int, dict] = {}
    for row in rows:
        if len(row) != ncols:
            raise DimensionMismatch(f"row of length {len(row)} in a {ncols}-column matrix")
        vec = {j: v for j, v in enumerate(row) if v}
        while vec:
            lead = min(vec)
            piv = echelon.get(lead)
            if piv is None:
                s = inv(vec[lead])
                echelon[lead] = {j: mul(v, s) for j, v in vec.items()}
                break
            f = vec[lead]
            for j, v in piv.items():
                nv = sub(vec.get(j, field.zero), mul(f, v))
                if nv:
                    vec[j] = nv
                else:
                    vec.pop(j, None)
    pivots = sorted(echelon)
    for idx in range(len(pivots) - 1, -1, -1):
        pc = pivots[idx]
        prow = echelon[pc]
        for other in pivots[:idx]:
            orow = echelon[other]
            f = orow.get(pc)
            if f:
                for j, v in prow.items():
                    nv = sub(orow.get(j, field.zero), mul(f, v))
                    if nv:
                        orow[j] = nv
                    else:
                        orow.pop(j, None)
    out = []
    for pc in pivots:
        dense = [field.zero] * ncols
        for j, v in echelon[pc].items():
            dense[j] = v
        out.append(dense)
    return out, pivots


def rref_with_pivots(field: Field, rows: Sequence[Sequence], ncols: int | None = None):
    """Return ``(nonzero rref rows, pivot columns)``."""
    rows = list(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if isinstance(field, PrimeField):
        for row in rows:
            if len(row) != ncols:
                raise DimensionMismatch(f"row of length {len(row)} in a {ncols}-column matrix")
        return kernels.rref_modp(rows, ncols, field.p)
    return _rref_generic(field, rows, ncols)


def rref(field: Field, m: Matrix, ncols: int | None = None) -> Matrix:
    """Reduced row-echelon form with the same shape as ``m`` (zero rows at the bottom)."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    red, _ = rref_with_pivots(field, m, ncols)
    red = [list(r) for r in red]
    while len(red) < len(m):
        red.append([field.zero] * ncols)
    return red


def rank(field: Field, m: Matrix, ncols: int | None = None) -> int:
    return len(rref_with_pivots(field, m, ncols)[1])


def nullspace(field: Field, m: Matrix, ncols: int | None = None) -> "Subspace":
    """Solution space of ``m x = 0``."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    red, pivots = rref_with_pivots(field, m, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [field.zero] * ncols
        v[free] = field.one
        for row, pc in zip(red, pivots):
            if row[free]:
                v[pc] = field.neg(row[free])
        basis.append(v)
    return Subspace.span(field, basis, ncols)


def solve(field: Field, m: Matrix, b: Sequence, ncols: int | None = None) -> tuple:
    """One solution of ``m x = b``, free variables set to zero.

    Raises :class:`NoSolution` when ``b`` is not in the column space.
    """
    if len(b) != len(m):
        raise DimensionMismatch(f"right-hand side of length {len(b)} for {len(m)} equations")
    if ncols is None:
        ncols = len(m[0]) if m else 0
    aug = [list(row) + [bi] for row, bi in zip(m, b)]
    red, pivots = rref_with_pivots(field, aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        raise NoSolution("right-hand side is not in the column space")
    x = [field.zero] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[ncols]
    return tuple(x)


# ----------------------------------------------------------------------------
# subspaces


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``field ** ambient_dim`` in canonical (rref) form."""

    field: Field
    ambient_dim: int
    basis: tuple
    pivots: tuple

    @classmethod
    def span(cls, field: Field, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        red, pivots = rref_with_pivots(field, list(vectors), ambient_dim)
        return cls(field, ambient_dim, tuple(tuple(r) for r in red), tuple(pivots))

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, (), ())

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(
            field,
            ambient_dim,
            tuple(unit_vector(field, ambient_dim, i) for i in range(ambient_dim)),
            tuple(range(ambient_dim)),
        )

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def _check(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim or self.field != other.field:
            raise DimensionMismatch(
                f"subspaces of {self.field.name}^{self.ambient_dim} and "
                f"{other.field.name}^{other.ambient_dim}"
            )

    def coordinates(self, v: Sequence):
        """Coefficients of ``v`` in the canonical basis, or None if ``v`` is outside."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        coeffs = [v[pc] for pc in self.pivots]
        if tuple(v) != lin_comb(self.field, coeffs, self.basis, self.ambient_dim):
            return None
        return tuple(coeffs)

    def __contains__(self, v) -> bool:
        return self.coordinates(v) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check(other)
        return all(v in self for v in other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.field, list(self.basis) + list(other.basis), self.ambient_dim)

    def annihilator(self) -> "Subspace":
        """All ``c`` with ``sum(c_k v_k) = 0`` for every ``v`` here (bilinear, no conjugation)."""
        return nullspace(self.field, [list(b) for b in self.basis], self.ambient_dim)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        constraints = list(self.annihilator().basis) + list(other.annihilator().basis)
        return nullspace(self.field, [list(c) for c in constraints], self.ambient_dim)

    def complement_basis(self, vectors: Sequence[Sequence]) -> list:
        """Greedy pick of those ``vectors`` that extend this subspace, in order."""
        chosen = []
        current = self
        for v in vectors:
            if v not in current:
                chosen.append(tuple(v))
                current = current + Subspace.span(self.field, [v], self.ambient_dim)
        return chosen

    def __repr__(self):
        return f"Subspace({self.field.name}^{self.ambient_dim}, dim={self.dim})"


def subspace_sum(*spaces: Subspace) -> Subspace:
    first = spaces[0]
    vectors = [b for s in spaces for b in s.basis]
    for s in spaces[1:]:
        first._check(s)
    return Subspace.span(first.field, vectors, first.ambient_dim)


def intersection(a: Subspace, b: Subspace) -> Subspace:
    return a.intersect(b)


def image(field: Field, m: Matrix, s: Subspace) -> Subspace:
    """``m(S)`` for a matrix ``m`` with ``s.ambient_dim`` columns."""
    if m and len(m[0]) != s.ambient_dim:
        raise DimensionMismatch(f"map with {len(m[0])} columns applied to a subspace of dim {s.ambient_dim}")
    return Subspace.span(field, [mat_vec(field, m, b) for b in s.basis], len(m))


def preimage(field: Field, m: Matrix, s: Subspace, ncols: int | None = None) -> Subspace:
    """``{x : m x in S}``."""
    if len(m) != s.ambient_dim:
        raise DimensionMismatch(f"map into dim {len(m)} against a subspace of dim {s.ambient_dim}")
    if ncols is None:
        ncols = len(m[0]) if m else 0
    ann = s.annihilator()
    constraints = mat_mul(field, [list(c) for c in ann.basis], m) if ann.basis else []
    return nullspace(field, constraints, ncols)
