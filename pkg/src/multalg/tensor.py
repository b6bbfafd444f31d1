"""Balanced tensor products ``X ⊗_A M`` as explicit quotient spaces.

``X`` is a right A-module of dimension ``p`` and ``M`` a left A-module of
dimension ``q``; both are given by one action matrix per basis element of A.
The tensor ``x_s ⊗ m_t`` sits at coordinate ``s*q + t``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import Field
from .linalg import Subspace, rank


@dataclass(frozen=True)
class BalancedTensor:
    field: Field
    p: int
    q: int
    relations: Subspace
    free: tuple  # coordinates of X⊗M spanning a complement of the relations

    @property
    def dim(self) -> int:
        return len(self.free)

    def reduce(self, v) -> tuple:
        """Quotient coordinates of a vector of ``X ⊗ M``."""
        f = self.field
        v = list(v)
        for row, pc in zip(self.relations.basis, self.relations.pivots):
            c = v[pc]
            if c:
                for j, r in enumerate(row):
                    if r:
                        v[j] = f.sub(v[j], f.mul(c, r))
        return tuple(v[j] for j in self.free)

    def lift(self, coords) -> tuple:
        v = [self.field.zero] * (self.p * self.q)
        for j, c in zip(self.free, coords):
            v[j] = c
        return tuple(v)

    def pure(self, x, m) -> tuple:
        """Coordinates of the class of ``x ⊗ m``."""
        f = self.field
        v = [f.zero] * (self.p * self.q)
        for s, xs in enumerate(x):
            if xs:
                for t, mt in enumerate(m):
                    if mt:
                        v[s * self.q + t] = f.mul(xs, mt)
        return self.reduce(v)

    def basis_pair(self, k: int) -> tuple:
        """``(s, t)`` with the k-th quotient basis vector the class of ``x_s ⊗ m_t``."""
        return divmod(self.free[k], self.q)


def balanced_tensor(field: Field, p: int, q: int, right_actions, left_actions) -> BalancedTensor:
    """``(X ⊗ M) / span{ x·b ⊗ m - x ⊗ b·m }``.

    ``right_actions[k]`` is the ``p x p`` matrix of ``x -> x b_k`` and
    ``left_actions[k]`` the ``q x q`` matrix of ``m -> b_k m``.
    """
    if len(right_actions) != len(left_actions):
        raise ValueError("actions indexed by algebras of different dimension")
    rows = []
    for ra, la in zip(right_actions, left_actions):
        for s in range(p):
            for t in range(q):
                row = [field.zero] * (p * q)
                for s2 in range(p):
                    c = ra[s2][s]
                    if c:
                        row[s2 * q + t] = field.add(row[s2 * q + t], c)
                for t2 in range(q):
                    c = la[t2][t]
                    if c:
                        row[s * q + t2] = field.sub(row[s * q + t2], c)
                if any(row):
                    rows.append(row)
    rel = Subspace.span(field, rows, p * q)
    pivots = set(rel.pivots)
    free = tuple(j for j in range(p * q) if j not in pivots)
    return BalancedTensor(field, p, q, rel, free)


def induced_map(t: BalancedTensor, pairing, target_dim: int) -> list:
    """Matrix of the map induced on ``X ⊗_A M`` by ``pairing(s, t) -> vector``."""
    cols = []
    for k in range(t.dim):
        s, u = t.basis_pair(k)
        cols.append(pairing(s, u))
    return [[cols[k][r] for k in range(t.dim)] for r in range(target_dim)]


def is_bijective(field: Field, matrix: list, ncols: int, nrows: int) -> bool:
    if ncols != nrows:
        return False
    if ncols == 0:
        return True
    return rank(field, matrix, ncols) == ncols
