"""Exhaustive finite-field oracles.

Everything here enumerates candidates literally and tests the defining
identities with integer arithmetic mod p; nothing goes through the linear
systems used by the main code.  Only usable for tiny algebras.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import kernels
from .algebra import FiniteAlgebra
from .fields import PrimeField
from .linalg import Subspace


def _table(A: FiniteAlgebra):
    n = A.dim
    return [[list(A.basis_product(i, j)) for j in range(n)] for i in range(n)]


def _require_prime(A: FiniteAlgebra) -> int:
    if not isinstance(A.field, PrimeField):
        raise ValueError("oracles need a prime field")
    return A.field.p


def _endomorphisms(n: int, p: int):
    """All ``n x n`` matrices over GF(p) as flat tuples (index ``k*n + j``)."""
    return itertools.product(range(p), repeat=n * n)


def _apply(Y, n, v, p):
    """``Y v`` with ``Y`` flat row-major."""
    return [sum(Y[k * n + j] * v[j] for j in range(n)) % p for k in range(n)]


def _mul(c, x, y, n, p):
    out = [0] * n
    for i in range(n):
        if x[i]:
            for j in range(n):
                if y[j]:
                    row = c[i][j]
                    for k in range(n):
                        if row[k]:
                            out[k] = (out[k] + x[i] * y[j] * row[k]) % p
    return out


def _basis(n):
    return [[1 if k == i else 0 for k in range(n)] for i in range(n)]


def brute_left_multipliers(A: FiniteAlgebra) -> list:
    """Every ``y`` with ``y(ab) = y(a) b`` on basis pairs."""
    p = _require_prime(A)
    n = A.dim
    c = _table(A)
    basis = _basis(n)
    out = []
    for Y in _endomorphisms(n, p):
        imgs = [_apply(Y, n, b, p) for b in basis]
        if all(_apply(Y, n, c[i][j], p) == _mul(c, imgs[i], basis[j], n, p)
               for i in range(n) for j in range(n)):
            out.append(Y)
    return out


def brute_right_multipliers(A: FiniteAlgebra) -> list:
    """Every ``z`` (as ``a -> a z``) with ``(ab) z = a (b z)``."""
    p = _require_prime(A)
    n = A.dim
    c = _table(A)
    basis = _basis(n)
    out = []
    for Z in _endomorphisms(n, p):
        imgs = [_apply(Z, n, b, p) for b in basis]
        if all(_apply(Z, n, c[i][j], p) == _mul(c, basis[i], imgs[j], n, p)
               for i in range(n) for j in range(n)):
            out.append(Z)
    return out


def _key(vectors, p) -> int:
    """Pack a list of GF(p) vectors into one integer."""
    k = 0
    for v in vectors:
        for x in v:
            k = k * p + x
    return k


def brute_multipliers(A: FiniteAlgebra) -> list:
    """Every pair ``(lambda, rho)`` with ``rho(a) b = a lambda(b)`` on basis pairs.

    Each lambda is keyed by the table ``(b_i lambda(b_j))_{ij}`` and each rho by
    ``(rho(b_i) b_j)_{ij}``; a pair is a multiplier exactly when the keys
    coincide, and all pairs are compared.
    """
    p = _require_prime(A)
    n = A.dim
    c = _table(A)
    basis = _basis(n)
    ends = list(_endomorphisms(n, p))
    lkeys, rkeys = [], []
    for Y in ends:
        imgs = [_apply(Y, n, b, p) for b in basis]
        lkeys.append(_key([_mul(c, basis[i], imgs[j], n, p) for i in range(n) for j in range(n)], p))
        rkeys.append(_key([_mul(c, imgs[i], basis[j], n, p) for i in range(n) for j in range(n)], p))
    pairs = kernels.match_pairs(lkeys, rkeys)
    return [tuple(ends[i]) + tuple(ends[j]) for i, j in pairs]


def brute_unit(A: FiniteAlgebra):
    """Search all ``p^n`` elements for a two-sided unit."""
    p = _require_prime(A)
    n = A.dim
    c = _table(A)
    basis = _basis(n)
    for e in itertools.product(range(p), repeat=n):
        e = list(e)
        if all(_mul(c, e, b, n, p) == b and _mul(c, b, e, n, p) == b for b in basis):
            return tuple(e)
    return None


def as_subspace(A: FiniteAlgebra, vectors: list, ambient: int) -> Subspace:
    return Subspace.span(A.field, [list(v) for v in vectors], ambient)


def agrees(A: FiniteAlgebra, enumerated: list, computed: Subspace) -> bool:
    """The enumerated set is exactly the computed subspace."""
    p = A.field.p
    if len(enumerated) != p ** computed.dim:
        return False
    return all(tuple(v) in computed for v in enumerated)


def tensor_relations_closure_dim(generators: list, ambient: int) -> int:
    """GF(2) dimension of the span of ``generators`` by closing the set under sums."""
    masks = set()
    for g in generators:
        m = 0
        for x in g:
            m = (m << 1) | (x % 2)
        masks.add(m)
    span = {0}
    for g in masks:
        if g not in span:
            span |= {s ^ g for s in span}
    return len(span).bit_length() - 1


@dataclass
class OracleRow:
    name: str
    dim: int
    dim_L: int
    dim_R: int
    dim_M: int | None
    left_ok: bool
    right_ok: bool
    multiplier_ok: bool | None
    unit_ok: bool

    @property
    def ok(self) -> bool:
        return self.left_ok and self.right_ok and self.multiplier_ok is not False and self.unit_ok


def compare(name: str, A: FiniteAlgebra) -> OracleRow:
    """Nullspace results against enumeration for one algebra."""
    from .algebra import check_nondegenerate
    from .local_units import find_unit
    from .multipliers import compute_left_multipliers, compute_right_multipliers, multiplier_space

    L = compute_left_multipliers(A)
    R = compute_right_multipliers(A)
    left_ok = agrees(A, brute_left_multipliers(A), L)
    right_ok = agrees(A, brute_right_multipliers(A), R)
    # the multiplier space is defined for any algebra; M(A) proper needs non-degeneracy
    M = multiplier_space(A)
    mult_ok = agrees(A, brute_multipliers(A), M)
    dim_M = M.dim if check_nondegenerate(A).ok else None
    u1, u2 = find_unit(A), brute_unit(A)
    unit_ok = (u1 is None) == (u2 is None) and (u1 is None or tuple(u1) == u2)
    return OracleRow(name, A.dim, L.dim, R.dim, dim_M, left_ok, right_ok, mult_ok, unit_ok)


def run_oracle(field=None, max_dim: int = 3) -> list:
    """Compare every closed matrix-unit subalgebra of M_3 of dimension <= max_dim."""
    from .fixtures import oracle_fixtures

    rows = []
    for name, A in oracle_fixtures(field):
        if A.dim <= max_dim:
            rows.append(compare(name, A))
    return rows
