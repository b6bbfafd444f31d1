"""Finite-dimensional one-sided modules and the extension of scalars to M(A).

A module is stored by one action matrix per basis element of A: for a left
module ``act[i]`` is the matrix of ``m -> b_i m``.  A right module over A is
the same data read as a left module over the opposite algebra, which is how
every right-sided computation is carried out.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .algebra import FiniteAlgebra
from .errors import DimensionMismatch, NoLocalUnits, PropertyMismatch, ValidationError
from .linalg import (
    Subspace,
    identity,
    mat_mul,
    mat_vec,
    nullspace,
    solve,
    zero_matrix,
)
from .errors import NoSolution
from .local_units import find_unit, has_local_units
from .multipliers import MultiplierAlgebra, compute_multiplier_algebra
from .tensor import BalancedTensor, balanced_tensor, induced_map, is_bijective


class FiniteModule:
    """A left (or right) module over a finite algebra, validated on construction."""

    def __init__(self, algebra: FiniteAlgebra, dim: int, action, side: str = "left",
                 labels=None, name: str | None = None, validate: bool = True):
        if side not in ("left", "right"):
            raise ValueError("side must be left or right")
        f = algebra.field
        if len(action) != algebra.dim:
            raise DimensionMismatch(f"{len(action)} action matrices for an algebra of dim {algebra.dim}")
        self.algebra = algebra
        self.field = f
        self.dim = dim
        self.side = side
        self.action = [[[f(c) for c in row] for row in m] for m in action]
        for m in self.action:
            if len(m) != dim or any(len(r) != dim for r in m):
                raise DimensionMismatch(f"action matrix is not {dim} x {dim}")
        self.labels = tuple(labels) if labels else tuple(f"m{j}" for j in range(dim))
        self.name = name or f"module(dim {dim})"
        if validate:
            bad = self.associativity_failure()
            if bad is not None:
                raise ValidationError(f"action is not associative at basis pair {bad}")

    @classmethod
    def from_tensor(cls, algebra, dim, triples, side="left", **kw):
        """From sparse ``(i, j, k, c)`` meaning ``b_i . m_j`` has ``c`` at ``m_k``."""
        f = algebra.field
        act = [zero_matrix(f, dim, dim) for _ in range(algebra.dim)]
        for i, j, k, c in triples:
            act[i][k][j] = f.add(act[i][k][j], f(c))
        return cls(algebra, dim, act, side=side, **kw)

    def __repr__(self):
        return f"<FiniteModule {self.name} ({self.side}) dim={self.dim}>"

    @property
    def left_algebra(self) -> FiniteAlgebra:
        """The algebra acting on the left in the left-module reading."""
        return self.algebra if self.side == "left" else self.algebra.opposite()

    def associativity_failure(self):
        A = self.left_algebra
        f = self.field
        for i in range(A.dim):
            for j in range(A.dim):
                lhs = mat_mul(f, self.action[i], self.action[j]) if self.dim else []
                rhs = zero_matrix(f, self.dim, self.dim)
                for k, c in enumerate(A.basis_product(i, j)):
                    if c:
                        for r in range(self.dim):
                            for s in range(self.dim):
                                if self.action[k][r][s]:
                                    rhs[r][s] = f.add(rhs[r][s], f.mul(c, self.action[k][r][s]))
                if [list(r) for r in lhs] != rhs:
                    return (i, j)
        return None

    def act(self, a, m) -> tuple:
        """``a . m`` (or ``m . a`` for a right module)."""
        f = self.field
        mat = zero_matrix(f, self.dim, self.dim)
        for i, c in enumerate(a):
            if c:
                for r in range(self.dim):
                    for s in range(self.dim):
                        if self.action[i][r][s]:
                            mat[r][s] = f.add(mat[r][s], f.mul(c, self.action[i][r][s]))
        return mat_vec(f, mat, m)

    def basis(self) -> list:
        return [tuple(self.field.one if k == j else self.field.zero for k in range(self.dim)) for j in range(self.dim)]

    def image_of_action(self) -> Subspace:
        """``A M``"""
        vecs = [tuple(row[j] for row in m) for m in self.action for j in range(self.dim)]
        return Subspace.span(self.field, vecs, self.dim)


# ----------------------------------------------------------------------------
# constructors


def regular_module(A: FiniteAlgebra, side: str = "left") -> FiniteModule:
    mats = [A.left_mult_matrix(b) if side == "left" else A.right_mult_matrix(b) for b in A.basis()]
    return FiniteModule(A, A.dim, mats, side=side, labels=A.labels, name=f"{A.name} ({side} regular)")


def zero_action_module(A: FiniteAlgebra, dim: int) -> FiniteModule:
    return FiniteModule(A, dim, [zero_matrix(A.field, dim, dim) for _ in range(A.dim)], name=f"zero-action({dim})")


_UNIT = re.compile(r"^e(\d)(\d)$")


def _matrix_unit_indices(A: FiniteAlgebra) -> list:
    out = []
    for lab in A.labels:
        m = _UNIT.match(lab)
        if not m:
            raise ValidationError(f"label {lab!r} is not a matrix unit")
        out.append((int(m.group(1)), int(m.group(2))))
    return out


def column_module(A: FiniteAlgebra, n: int, rows=None) -> FiniteModule:
    """Column vectors ``k^n`` under a matrix-unit algebra, or the coordinate
    submodule spanned by ``v_r`` for ``r`` in ``rows`` (1-based), which must be
    invariant."""
    units = _matrix_unit_indices(A)
    rows = sorted(set(rows)) if rows is not None else list(range(1, n + 1))
    pos = {r: t for t, r in enumerate(rows)}
    f = A.field
    q = len(rows)
    mats = []
    for (i, j) in units:
        m = zero_matrix(f, q, q)
        if j in pos:
            if i not in pos:
                raise ValidationError(f"rows {rows} not invariant: e{i}{j} v{j} = v{i}")
            m[pos[i]][pos[j]] = f.one
        mats.append(m)
    return FiniteModule(A, q, mats, labels=[f"v{r}" for r in rows], name=f"col{rows}")


def invariant_row_sets(A: FiniteAlgebra, n: int) -> list:
    """Every nonempty set of rows whose coordinate span is a submodule of ``k^n``."""
    units = _matrix_unit_indices(A)
    out = []
    for mask in range(1, 1 << n):
        rows = {r + 1 for r in range(n) if mask >> r & 1}
        if all(i in rows for (i, j) in units if j in rows):
            out.append(sorted(rows))
    return out


def module_direct_sum(M: FiniteModule, N: FiniteModule) -> FiniteModule:
    if M.algebra != N.algebra or M.side != N.side:
        raise ValidationError("direct sum of modules over different algebras or sides")
    f = M.field
    d = M.dim + N.dim
    mats = []
    for a, b in zip(M.action, N.action):
        m = zero_matrix(f, d, d)
        for r in range(M.dim):
            m[r][:M.dim] = a[r]
        for r in range(N.dim):
            m[M.dim + r][M.dim:] = b[r]
        mats.append(m)
    return FiniteModule(M.algebra, d, mats, side=M.side, name=f"{M.name}+{N.name}", validate=False)


# ----------------------------------------------------------------------------
# the balanced tensor A ⊗_A M


@dataclass
class TensorReport:
    dim: int
    matrix: list  # induced map to M, dim M x dim
    firm: bool
    tensor: BalancedTensor


def tensor_over_A(A: FiniteAlgebra, M: FiniteModule) -> TensorReport:
    """``A ⊗_A M`` for a left module (``M ⊗_A A`` for a right one) and the map to M."""
    if M.algebra != A:
        raise ValidationError("module is over a different algebra")
    B = M.left_algebra
    right = [B.right_mult_matrix(b) for b in B.basis()]
    t = balanced_tensor(B.field, B.dim, M.dim, right, M.action)
    mu = induced_map(t, lambda s, u: tuple(r[u] for r in M.action[s]), M.dim)
    return TensorReport(t.dim, mu, is_bijective(B.field, mu, t.dim, M.dim), t)


# ----------------------------------------------------------------------------
# the four equivalent conditions


@dataclass
class ModuleEquivalences:
    firm: bool
    idempotent: bool
    local_unit_action: bool
    dense: bool

    @property
    def agree(self) -> bool:
        return len({self.firm, self.idempotent, self.local_unit_action, self.dense}) == 1


def _acts_as_identity_system(M: FiniteModule):
    """Rows/rhs for ``e . m_j = m_j`` in the unknown ``e`` in A."""
    rows, rhs = [], []
    for j, m in enumerate(M.basis()):
        for r in range(M.dim):
            rows.append([M.action[i][r][j] for i in range(len(M.action))])
            rhs.append(m[r])
    return rows, rhs


def _solvable(field, rows, rhs, n) -> bool:
    try:
        solve(field, rows, rhs, n)
        return True
    except NoSolution:
        return False


def module_equivalences(A: FiniteAlgebra, M: FiniteModule, check: bool = True) -> ModuleEquivalences:
    """Firm, idempotent, local-unit action and M-adic density, each computed directly.

    M(A) acts on M through its unital hull: a multiplier ``x`` acts as
    ``x(1_A)``, which is in A once A has local units, and the adjoined formal
    unit acts as the identity of M.
    """
    lu = has_local_units(A) if M.side == "left" else has_local_units(A.opposite())
    if not lu:
        raise NoLocalUnits(f"{A!r} has no local units")
    f = A.field
    B = M.left_algebra
    firm = tensor_over_A(A, M).firm
    idem = M.image_of_action().is_full()
    rows, rhs = _acts_as_identity_system(M)
    lua = M.dim == 0 or _solvable(f, rows, rhs, B.dim)
    # density: every hull element agrees on the M-basis with some a in A
    MA = compute_multiplier_algebra(B)
    one = find_unit(B)
    hull_actions = [_act_matrix(M, x.left(B, one)) for x in MA.basis]
    hull_actions.append(identity(f, M.dim))
    dense = True
    for X in hull_actions:
        target = [X[r][j] for j in range(M.dim) for r in range(M.dim)]
        if not _solvable(f, rows, target, B.dim):
            dense = False
            break
    out = ModuleEquivalences(firm, idem, lua, dense)
    if check and not out.agree:
        raise PropertyMismatch(f"module conditions disagree: {out}")
    return out


def _act_matrix(M: FiniteModule, a) -> list:
    f = M.field
    mat = zero_matrix(f, M.dim, M.dim)
    for i, c in enumerate(a):
        if c:
            for r in range(M.dim):
                for s in range(M.dim):
                    if M.action[i][r][s]:
                        mat[r][s] = f.add(mat[r][s], f.mul(c, M.action[i][r][s]))
    return mat


# ----------------------------------------------------------------------------
# extension of scalars


@dataclass
class ScalarExtension:
    multiplier_algebra: MultiplierAlgebra
    module: FiniteModule
    tensor: BalancedTensor
    actions: list  # M(A)-action on the tensor, one matrix per M(A) basis element
    eta: list  # dim tensor x dim M
    unital: bool

    @property
    def dim(self) -> int:
        return self.tensor.dim

    def eta_bijective(self) -> bool:
        return is_bijective(self.module.field, self.eta, self.module.dim, self.tensor.dim)

    def restricted(self) -> FiniteModule:
        """The tensor as an A-module through the embedding A -> M(A)."""
        MA = self.multiplier_algebra
        A = MA.base
        mats = [_combine(A.field, MA.embed(b), self.actions, self.dim) for b in A.basis()]
        return FiniteModule(A, self.dim, mats, name=f"M(A)⊗{self.module.name}", validate=False)


def _combine(field, coords, mats, d) -> list:
    out = zero_matrix(field, d, d)
    for c, m in zip(coords, mats):
        if c:
            for r in range(d):
                for s in range(d):
                    if m[r][s]:
                        out[r][s] = field.add(out[r][s], field.mul(c, m[r][s]))
    return out


def _extend(MA: MultiplierAlgebra, M: FiniteModule) -> tuple:
    f = MA.field
    A = MA.base
    # M(A) as a right A-module: x -> x b_k
    right = []
    for b in A.basis():
        eb = MA.embed(b)
        cols = [MA.multiply(x, eb) for x in MA.algebra.basis()]
        right.append([[cols[s][r] for s in range(MA.dim)] for r in range(MA.dim)])
    t = balanced_tensor(f, MA.dim, M.dim, right, M.action)
    actions = []
    for y in MA.algebra.basis():
        actions.append(induced_map(t, lambda s, u, y=y: t.pure(MA.multiply(y, MA.algebra.basis_element(s)), M.basis()[u]), t.dim))
    return t, actions


def extension_of_scalars(A: FiniteAlgebra | MultiplierAlgebra, M: FiniteModule) -> ScalarExtension:
    """``M(A) ⊗_A M`` with its unital M(A)-action and ``eta_M(m) = 1 ⊗ m``."""
    MA = A if isinstance(A, MultiplierAlgebra) else compute_multiplier_algebra(A)
    if M.side != "left" or M.algebra != MA.base:
        raise ValidationError("extension of scalars needs a left module over the base algebra")
    f = MA.field
    t, actions = _extend(MA, M)
    unit_action = _combine(f, MA.unit, actions, t.dim)
    unital = unit_action == [list(r) for r in identity(f, t.dim)]
    eta_cols = [t.pure(MA.unit, m) for m in M.basis()]
    eta = [[eta_cols[j][r] for j in range(M.dim)] for r in range(t.dim)]
    return ScalarExtension(MA, M, t, actions, eta, unital)


def counit(MA: MultiplierAlgebra, N_actions: list, N_dim: int):
    """``epsilon_N(x ⊗ n) = x n`` for a unital M(A)-module given by its action matrices.

    Returns ``(ScalarExtension of N restricted to A, matrix of epsilon_N)``.
    """
    f = MA.field
    A = MA.base
    restricted = FiniteModule(A, N_dim, [_combine(f, MA.embed(b), N_actions, N_dim) for b in A.basis()],
                              name="N|A", validate=False)
    ext = extension_of_scalars(MA, restricted)
    t = ext.tensor
    eps = induced_map(t, lambda s, u: tuple(r[u] for r in N_actions[s]), N_dim)
    return ext, eps


def is_unital_module(MA: MultiplierAlgebra, N_actions: list, N_dim: int) -> bool:
    return _combine(MA.field, MA.unit, N_actions, N_dim) == [list(r) for r in identity(MA.field, N_dim)]


@dataclass
class TriangleReport:
    first: bool  # eps_{FM} o F(eta_M) = id
    second: bool  # eps_N o eta_N = id on N


def triangle_identities(MA: MultiplierAlgebra, M: FiniteModule, N_actions: list, N_dim: int) -> TriangleReport:
    f = MA.field
    ext = extension_of_scalars(MA, M)
    # first: FM is a unital M(A)-module; compare the composite with the identity
    ext2, eps_fm = counit(MA, ext.actions, ext.dim)
    t2 = ext2.tensor
    cols = []
    for k in range(ext.dim):
        s, u = ext.tensor.basis_pair(k)
        eta_m = tuple(row[u] for row in ext.eta)
        img = t2.pure(MA.algebra.basis_element(s), eta_m)
        cols.append(mat_vec(f, eps_fm, img))
    first = all(cols[k] == tuple(f.one if r == k else f.zero for r in range(ext.dim)) for k in range(ext.dim))
    # second
    ext_n, eps_n = counit(MA, N_actions, N_dim)
    comp = mat_mul(f, eps_n, ext_n.eta) if ext_n.dim else zero_matrix(f, N_dim, N_dim)
    second = [list(r) for r in comp] == [list(r) for r in identity(f, N_dim)]
    return TriangleReport(first, second)


def eta_inverse_regular(MA: MultiplierAlgebra) -> dict:
    """For ``M = A``: the map ``x ⊗ a -> x a`` and whether it inverts ``eta_A``."""
    A = MA.base
    f = A.field
    ext = extension_of_scalars(MA, regular_module(A))
    inv = induced_map(ext.tensor, lambda s, u: MA.act_left(MA.algebra.basis_element(s), A.basis_element(u)), A.dim)
    n, d = A.dim, ext.dim
    left = mat_mul(f, inv, ext.eta) if d else zero_matrix(f, n, n)
    right = mat_mul(f, ext.eta, inv) if n else zero_matrix(f, d, d)
    return {
        "tensor_dim": d,
        "eta_bijective": ext.eta_bijective(),
        "inverse_left": [list(r) for r in left] == [list(r) for r in identity(f, n)],
        "inverse_right": [list(r) for r in right] == [list(r) for r in identity(f, d)],
    }


def _hom_space(field, src_actions, src_dim, tgt_actions, tgt_dim) -> Subspace:
    """Linear ``g`` (flattened row-major, ``tgt x src``) intertwining the actions."""
    w = tgt_dim * src_dim
    rows = []
    for S, T in zip(src_actions, tgt_actions):
        # (g S - T g)[r][c] = 0
        for r in range(tgt_dim):
            for c in range(src_dim):
                row = [field.zero] * w
                for k in range(src_dim):
                    if S[k][c]:
                        row[r * src_dim + k] = field.add(row[r * src_dim + k], S[k][c])
                for k in range(tgt_dim):
                    if T[r][k]:
                        row[k * src_dim + c] = field.sub(row[k * src_dim + c], T[r][k])
                if any(row):
                    rows.append(row)
    return nullspace(field, rows, w)


@dataclass
class AdjunctionReport:
    dim_extended_hom: int
    dim_base_hom: int
    mutually_inverse: bool

    @property
    def ok(self) -> bool:
        return self.dim_extended_hom == self.dim_base_hom and self.mutually_inverse


def hom_adjunction_check(MA: MultiplierAlgebra, M: FiniteModule, N_actions: list, N_dim: int) -> AdjunctionReport:
    """Compare ``Hom_{M(A)}(M(A)⊗_A M, N)`` with ``Hom_A(M, N)`` for a unital M(A)-module N.

    ``g -> g o eta_M`` and ``f -> (x ⊗ m -> x f(m))`` are checked to be
    mutually inverse on bases.
    """
    f = MA.field
    A = MA.base
    ext = extension_of_scalars(MA, M)
    N_A = [_combine(f, MA.embed(b), N_actions, N_dim) for b in A.basis()]
    H1 = _hom_space(f, ext.actions, ext.dim, N_actions, N_dim)
    H0 = _hom_space(f, M.action, M.dim, N_A, N_dim)

    def restrict(gv):
        g = [list(gv[r * ext.dim:(r + 1) * ext.dim]) for r in range(N_dim)]
        return tuple(c for row in mat_mul(f, g, ext.eta) for c in row) if ext.dim and M.dim else (f.zero,) * (N_dim * M.dim)

    def extend(fv):
        fm = [list(fv[r * M.dim:(r + 1) * M.dim]) for r in range(N_dim)]

        def pairing(s, u):
            n = tuple(row[u] for row in fm)
            return mat_vec(f, N_actions[s], n)

        g = induced_map(ext.tensor, pairing, N_dim)
        return tuple(c for row in g for c in row)

    ok = True
    for gv in H1.basis:
        r = restrict(gv)
        if r not in H0 or extend(r) != tuple(gv):
            ok = False
    for fv in H0.basis:
        e = extend(fv)
        if e not in H1 or restrict(e) != tuple(fv):
            ok = False
    return AdjunctionReport(H1.dim, H0.dim, ok)


def multiplier_regular_actions(MA: MultiplierAlgebra) -> list:
    """M(A) as a unital left module over itself."""
    return [MA.algebra.left_mult_matrix(x) for x in MA.algebra.basis()]
