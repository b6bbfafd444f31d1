"""Left, right and two-sided multipliers of a finite-dimensional algebra.

An endomorphism ``y`` of ``A`` is stored as an ``n x n`` matrix ``Y`` with
``y(b_j) = sum_k Y[k][j] b_k``; flattened, coordinate ``k*n + j`` holds
``Y[k][j]``.  A multiplier ``(lambda, rho)`` flattens to ``2 n^2``
coordinates, lambda first.  All multiplier spaces are nullspaces of the
defining linear systems.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import FiniteAlgebra, Verdict, check_idempotent, check_nondegenerate, is_ideal, subspace_product
from .errors import (
    DegenerateProduct,
    DimensionMismatch,
    FirmnessConditionFails,
    NoInvolution,
    NondegeneracyConditionFails,
    NotAnIdeal,
    NoUnit,
    PropertyMismatch,
    ValidationError,
)
from .linalg import (
    Subspace,
    identity,
    image,
    lin_comb,
    mat_mul,
    mat_vec,
    nullspace,
    preimage,
    rank,
    rref_with_pivots,
    transpose,
)


def flatten(m) -> tuple:
    return tuple(c for row in m for c in row)


def unflatten(v, n: int) -> tuple:
    return tuple(tuple(v[k * n:(k + 1) * n]) for k in range(n))


@dataclass(frozen=True)
class Multiplier:
    """A pair of endomorphisms with ``rho(a) b = a lambda(b)``.

    ``lam`` is ``a -> x a`` and ``rho`` is ``a -> a x``, both as matrices.
    """

    lam: tuple
    rho: tuple

    def vector(self) -> tuple:
        return flatten(self.lam) + flatten(self.rho)

    @classmethod
    def from_vector(cls, v, n: int) -> "Multiplier":
        return cls(unflatten(v[: n * n], n), unflatten(v[n * n:], n))

    def left(self, A: FiniteAlgebra, a) -> tuple:
        """``x a``"""
        return mat_vec(A.field, self.lam, a)

    def right(self, A: FiniteAlgebra, a) -> tuple:
        """``a x``"""
        return mat_vec(A.field, self.rho, a)

    def compose(self, A: FiniteAlgebra, other: "Multiplier") -> "Multiplier":
        """The product ``self * other`` in M(A)."""
        f = A.field
        lam = mat_mul(f, [list(r) for r in self.lam], [list(r) for r in other.lam])
        rho = mat_mul(f, [list(r) for r in other.rho], [list(r) for r in self.rho])
        return Multiplier(tuple(map(tuple, lam)), tuple(map(tuple, rho)))


def element_multiplier(A: FiniteAlgebra, a) -> Multiplier:
    return Multiplier(
        tuple(map(tuple, A.left_mult_matrix(a))),
        tuple(map(tuple, A.right_mult_matrix(a))),
    )


def identity_multiplier(A: FiniteAlgebra) -> Multiplier:
    idm = tuple(map(tuple, identity(A.field, A.dim)))
    return Multiplier(idm, idm)


# ----------------------------------------------------------------------------
# the defining linear systems


def _structure(A: FiniteAlgebra):
    n = A.dim
    return [[A.basis_product(i, j) for j in range(n)] for i in range(n)]


def _left_system(A: FiniteAlgebra, offset: int, width: int) -> list:
    """Rows for ``y(b_i b_j) - y(b_i) b_j = 0`` on coordinates ``offset..``."""
    n, f = A.dim, A.field
    c = _structure(A)
    rows = []
    for i in range(n):
        for j in range(n):
            for m in range(n):
                row = [f.zero] * width
                for k in range(n):
                    if c[i][j][k]:
                        idx = offset + m * n + k
                        row[idx] = f.add(row[idx], c[i][j][k])
                for l in range(n):
                    if c[l][j][m]:
                        idx = offset + l * n + i
                        row[idx] = f.sub(row[idx], c[l][j][m])
                if any(row):
                    rows.append(row)
    return rows


def _right_system(A: FiniteAlgebra, offset: int, width: int) -> list:
    """Rows for ``z(b_i b_j) - b_i z(b_j) = 0``."""
    n, f = A.dim, A.field
    c = _structure(A)
    rows = []
    for i in range(n):
        for j in range(n):
            for m in range(n):
                row = [f.zero] * width
                for k in range(n):
                    if c[i][j][k]:
                        idx = offset + m * n + k
                        row[idx] = f.add(row[idx], c[i][j][k])
                for l in range(n):
                    if c[i][l][m]:
                        idx = offset + l * n + j
                        row[idx] = f.sub(row[idx], c[i][l][m])
                if any(row):
                    rows.append(row)
    return rows


def _multiplier_system(A: FiniteAlgebra) -> list:
    """Rows for ``rho(b_i) b_j - b_i lambda(b_j) = 0``; lambda at 0, rho at n^2."""
    n, f = A.dim, A.field
    c = _structure(A)
    nn = n * n
    rows = []
    for i in range(n):
        for j in range(n):
            for m in range(n):
                row = [f.zero] * (2 * nn)
                for l in range(n):
                    if c[l][j][m]:
                        idx = nn + l * n + i
                        row[idx] = f.add(row[idx], c[l][j][m])
                    if c[i][l][m]:
                        idx = l * n + j
                        row[idx] = f.sub(row[idx], c[i][l][m])
                if any(row):
                    rows.append(row)
    return rows


def compute_left_multipliers(A: FiniteAlgebra) -> Subspace:
    """L(A): all ``y`` with ``y(ab) = (ya)b``, as a subspace of ``n^2`` coordinates."""
    nn = A.dim * A.dim
    return nullspace(A.field, _left_system(A, 0, nn), nn)


def compute_right_multipliers(A: FiniteAlgebra) -> Subspace:
    """R(A): all ``z`` with ``(ab)z = a(bz)``; ``z`` stored as the map ``a -> az``."""
    nn = A.dim * A.dim
    return nullspace(A.field, _right_system(A, 0, nn), nn)


def multiplier_space(A: FiniteAlgebra) -> Subspace:
    """All pairs ``(lambda, rho)`` with ``rho(a) b = a lambda(b)``; no non-degeneracy needed."""
    nn = A.dim * A.dim
    return nullspace(A.field, _multiplier_system(A), 2 * nn)


def endomorphism_matrix(v, n: int) -> list:
    return [list(r) for r in unflatten(v, n)]


def _compose_flat(A: FiniteAlgebra, u, v) -> tuple:
    n = A.dim
    return flatten(mat_mul(A.field, endomorphism_matrix(u, n), endomorphism_matrix(v, n)))


def is_closed_under_composition(A: FiniteAlgebra, space: Subspace) -> bool:
    return all(_compose_flat(A, u, v) in space for u in space.basis for v in space.basis)


def require_nondegenerate(A: FiniteAlgebra):
    verdict = check_nondegenerate(A)
    if not verdict.ok:
        raise DegenerateProduct(
            f"{A!r} is {verdict.detail.get('failed_side')}-degenerate: "
            f"{A.format_element(verdict.witness)} annihilates A",
            witness=verdict.witness,
        )


# ----------------------------------------------------------------------------
# the multiplier algebra


class _Coordinates:
    """Coordinates with respect to a fixed (not necessarily echelon) basis."""

    def __init__(self, field, basis, ambient_dim):
        self.field = field
        self.basis = [tuple(b) for b in basis]
        self.ambient_dim = ambient_dim
        d = len(self.basis)
        aug = [list(b) + [field.one if k == i else field.zero for k in range(d)] for i, b in enumerate(self.basis)]
        red, pivots = rref_with_pivots(field, aug, ambient_dim + d)
        if any(p >= ambient_dim for p in pivots):
            raise ValidationError("basis vectors are linearly dependent")
        self._pivots = pivots
        self._transform = [row[ambient_dim:] for row in red]

    def __call__(self, v):
        f = self.field
        d = len(self.basis)
        coeffs = [f.zero] * d
        for p, t in zip(self._pivots, self._transform):
            c = v[p]
            if c:
                for k in range(d):
                    if t[k]:
                        coeffs[k] = f.add(coeffs[k], f.mul(c, t[k]))
        if lin_comb(f, coeffs, self.basis, self.ambient_dim) != tuple(v):
            return None
        return tuple(coeffs)


class MultiplierAlgebra:
    """M(A) for a non-degenerate algebra A, with the canonical embedding.

    The basis lists the images of the basis of A first, then the unit when it
    is not in A, then further multipliers in echelon order.  ``algebra`` is M(A)
    as a :class:`FiniteAlgebra` in that basis.
    """

    def __init__(self, base: FiniteAlgebra, space: Subspace):
        self.base = base
        self.field = base.field
        self.space = space
        n = base.dim
        self.n = n
        f = base.field
        embedded = [element_multiplier(base, base.basis_element(i)).vector() for i in range(n)]
        a_span = Subspace.span(f, embedded, 2 * n * n)
        if a_span.dim != n:
            raise DegenerateProduct("embedding of A into M(A) is not injective")
        unit = identity_multiplier(base).vector()
        if unit not in space:
            raise PropertyMismatch("identity pair is not a multiplier")
        extra = a_span.complement_basis([unit] + list(space.basis))
        vectors = embedded + extra
        if len(vectors) != space.dim:
            raise PropertyMismatch("basis of M(A) does not span the multiplier space")
        self.vectors = vectors
        self.basis = [Multiplier.from_vector(v, n) for v in vectors]
        self.dim = len(vectors)
        self._coords = _Coordinates(f, vectors, 2 * n * n)
        self.unit = self._coords(unit)
        self.unit_index = n if (extra and extra[0] == unit) else None
        labels = list(base.labels)
        if self.unit_index is not None:
            labels.append("1")
        while len(labels) < self.dim:
            labels.append(f"m{len(labels) - n}")
        prod = []
        for i, x in enumerate(self.basis):
            for j, y in enumerate(self.basis):
                c = self._coords(x.compose(base, y).vector())
                if c is None:
                    raise PropertyMismatch("M(A) is not closed under composition")
                for k, ck in enumerate(c):
                    if ck:
                        prod.append((i, j, k, ck))
        self.algebra = FiniteAlgebra(f, self.dim, prod, labels=labels, name=f"M({base.name})", validate=False)
        self.embedding = [[f.one if (k == i) else f.zero for i in range(n)] for k in range(self.dim)]

    def __repr__(self):
        return f"<MultiplierAlgebra of {self.base!r}: dim {self.dim}>"

    def coordinates(self, m: Multiplier | tuple):
        """M(A)-coordinates of a multiplier (or its flat vector); None if not a multiplier."""
        v = m.vector() if isinstance(m, Multiplier) else tuple(m)
        if len(v) != 2 * self.n * self.n:
            raise DimensionMismatch("vector is not a pair of endomorphisms of A")
        return self._coords(v)

    def multiplier(self, coords) -> Multiplier:
        if len(coords) != self.dim:
            raise DimensionMismatch(f"coordinates of length {len(coords)} in M(A) of dim {self.dim}")
        v = lin_comb(self.field, coords, self.vectors, 2 * self.n * self.n)
        return Multiplier.from_vector(v, self.n)

    def embed(self, a) -> tuple:
        """Coordinates of the image of ``a`` in M(A)."""
        return tuple(a) + (self.field.zero,) * (self.dim - self.n)

    def embedded_subspace(self) -> Subspace:
        return Subspace.span(self.field, [self.embed(self.base.basis_element(i)) for i in range(self.n)], self.dim)

    def multiply(self, x, y) -> tuple:
        return self.algebra.multiply(x, y)

    def act_left(self, x, a) -> tuple:
        """``x a`` for ``x`` in M(A) coordinates and ``a`` in A."""
        return self.multiplier(x).left(self.base, a)

    def act_right(self, a, x) -> tuple:
        """``a x``"""
        return self.multiplier(x).right(self.base, a)


def compute_multiplier_algebra(A: FiniteAlgebra) -> MultiplierAlgebra:
    """M(A); raises DegenerateProduct when A is degenerate."""
    require_nondegenerate(A)
    return MultiplierAlgebra(A, multiplier_space(A))


def lemma_identities_hold(MA: MultiplierAlgebra) -> Verdict:
    """``x(bb') = (xb)b'`` and ``(aa')x = a(a'x)`` for every basis multiplier and basis pair."""
    A = MA.base
    basis = A.basis()
    for idx, x in enumerate(MA.basis):
        for a in basis:
            for b in basis:
                ab = A.multiply(a, b)
                if x.left(A, ab) != A.multiply(x.left(A, a), b):
                    return Verdict(False, (idx, "x(ab) != (xa)b"))
                if x.right(A, ab) != A.multiply(a, x.right(A, b)):
                    return Verdict(False, (idx, "(ab)x != a(bx)"))
    return Verdict(True)


def embedding_is_homomorphism(MA: MultiplierAlgebra) -> bool:
    A = MA.base
    for a in A.basis():
        for b in A.basis():
            if MA.embed(A.multiply(a, b)) != MA.multiply(MA.embed(a), MA.embed(b)):
                return False
    return True


def ideal_law_holds(MA: MultiplierAlgebra) -> bool:
    """``x a`` and ``a x`` computed inside M(A) lie in the embedded copy of A."""
    emb = MA.embedded_subspace()
    A = MA.base
    for k in range(MA.dim):
        x = tuple(MA.field.one if i == k else MA.field.zero for i in range(MA.dim))
        for a in A.basis():
            xa = MA.multiply(x, MA.embed(a))
            ax = MA.multiply(MA.embed(a), x)
            if xa not in emb or ax not in emb:
                return False
            # the M(A) product must agree with the action on A
            if xa != MA.embed(MA.act_left(x, a)) or ax != MA.embed(MA.act_right(a, x)):
                return False
    return True


# ----------------------------------------------------------------------------
# pullback description


@dataclass
class PullbackReport:
    dim_left: int
    dim_right: int
    dim_pullback: int
    left_injective: bool
    right_injective: bool
    equals_multiplier_space: bool
    bilinear_images: Subspace = dc_field(repr=False)


def _bilinear_from_left(A: FiniteAlgebra) -> list:
    """Matrix of ``y -> ((a, b) -> a (y b))`` from n^2 to n^3 coordinates (i, j, m)."""
    n, f = A.dim, A.field
    c = _structure(A)
    mat = [[f.zero] * (n * n) for _ in range(n ** 3)]
    for i in range(n):
        for j in range(n):
            for m in range(n):
                r = (i * n + j) * n + m
                # a_i * (sum_l Y[l][j] b_l)  -> coefficient m: sum_l Y[l][j] c[i][l][m]
                for l in range(n):
                    if c[i][l][m]:
                        mat[r][l * n + j] = f.add(mat[r][l * n + j], c[i][l][m])
    return mat


def _bilinear_from_right(A: FiniteAlgebra) -> list:
    """Matrix of ``z -> ((a, b) -> (a z) b)``."""
    n, f = A.dim, A.field
    c = _structure(A)
    mat = [[f.zero] * (n * n) for _ in range(n ** 3)]
    for i in range(n):
        for j in range(n):
            for m in range(n):
                r = (i * n + j) * n + m
                for l in range(n):
                    if c[l][j][m]:
                        mat[r][l * n + i] = f.add(mat[r][l * n + i], c[l][j][m])
    return mat


def pullback_check(A: FiniteAlgebra) -> PullbackReport:
    """M(A) as the pullback of L(A) and R(A) over bilinear maps ``A x A -> A``."""
    require_nondegenerate(A)
    f, n = A.field, A.dim
    nn = n * n
    L = compute_left_multipliers(A)
    R = compute_right_multipliers(A)
    phi_l = _bilinear_from_left(A)
    phi_r = _bilinear_from_right(A)
    img_l = [mat_vec(f, phi_l, y) for y in L.basis]
    img_r = [mat_vec(f, phi_r, z) for z in R.basis]
    left_inj = rank(f, img_l, n ** 3) == L.dim if img_l else L.dim == 0
    right_inj = rank(f, img_r, n ** 3) == R.dim if img_r else R.dim == 0
    # sum alpha_k phi_l(y_k) - sum beta_l phi_r(z_l) = 0
    p, q = L.dim, R.dim
    cols = img_l + [tuple(f.neg(c) for c in v) for v in img_r]
    system = transpose([list(v) for v in cols]) if cols else []
    sols = nullspace(f, system, p + q) if cols else Subspace.zero(f, 0)
    pairs = []
    images = []
    for s in sols.basis:
        y = lin_comb(f, s[:p], L.basis, nn)
        z = lin_comb(f, s[p:], R.basis, nn)
        pairs.append(y + z)
        images.append(lin_comb(f, s[:p], img_l, n ** 3))
    pullback = Subspace.span(f, pairs, 2 * nn)
    return PullbackReport(
        dim_left=L.dim,
        dim_right=R.dim,
        dim_pullback=pullback.dim,
        left_injective=left_inj,
        right_injective=right_inj,
        equals_multiplier_space=pullback == multiplier_space(A),
        bilinear_images=Subspace.span(f, images, n ** 3),
    )


# ----------------------------------------------------------------------------
# involution


def star_on_multipliers(MA: MultiplierAlgebra) -> FiniteAlgebra:
    """M(A) as a star-algebra: ``x* a = (a* x)*`` and ``a x* = (x a*)*``.

    Returns a copy of ``MA.algebra`` carrying the involution (validated).
    """
    A = MA.base
    if not A.has_star:
        raise NoInvolution(f"{A!r} carries no involution")
    n = A.dim
    rows = []
    for x in MA.basis:
        lam_cols = [A.star(x.right(A, A.star(A.basis_element(j)))) for j in range(n)]
        rho_cols = [A.star(x.left(A, A.star(A.basis_element(j)))) for j in range(n)]
        lam = tuple(tuple(lam_cols[j][k] for j in range(n)) for k in range(n))
        rho = tuple(tuple(rho_cols[j][k] for j in range(n)) for k in range(n))
        coords = MA.coordinates(Multiplier(lam, rho))
        if coords is None:
            raise PropertyMismatch("adjoint of a multiplier is not a multiplier")
        rows.append(coords)
    alg = MA.algebra
    return FiniteAlgebra(alg.field, alg.dim, alg.product, labels=alg.labels, star=rows, name=alg.name)


# ----------------------------------------------------------------------------
# essential ideals and the universal property


def _annihilators(alg: FiniteAlgebra, S: Subspace):
    """``({x : x S = 0}, {x : S x = 0})``"""
    left_rows, right_rows = [], []
    for s in S.basis:
        left_rows.extend(alg.right_mult_matrix(s))
        right_rows.extend(alg.left_mult_matrix(s))
    return nullspace(alg.field, left_rows, alg.dim), nullspace(alg.field, right_rows, alg.dim)


def essential_ideal_check(MA: MultiplierAlgebra, S: Subspace) -> Verdict:
    """Whether the ideal ``S`` of M(A) is essential (no nonzero x kills it on a side)."""
    alg = MA.algebra
    if S.ambient_dim != alg.dim:
        raise DimensionMismatch("subspace is not in M(A)")
    if not is_ideal(alg, S):
        raise NotAnIdeal("subspace is not a two-sided ideal of M(A)")
    left, right = _annihilators(alg, S)
    detail = {"left_annihilator_dim": left.dim, "right_annihilator_dim": right.dim}
    for ann in (left, right):
        if ann.dim:
            witness = MA.unit if MA.unit in ann else ann.basis[0]
            return Verdict(False, witness, detail)
    return Verdict(True, None, detail)


@dataclass
class UniversalMap:
    ideal: FiniteAlgebra
    multiplier_algebra: MultiplierAlgebra
    matrix: list  # dim M(A) x dim B
    kernel: Subspace
    injective: bool
    essential: bool
    unital: bool
    multiplicative: bool
    restricts_to_embedding: bool


def _find_unit(B: FiniteAlgebra):
    from .local_units import find_unit

    return find_unit(B)


def _ideal_multiplier(B, S, ideal, b):
    """The multiplier ``(a -> b a, a -> a b)`` of the ideal S determined by ``b`` in ``B``."""
    n = ideal.dim
    lam_cols, rho_cols = [], []
    for a in S.basis:
        ba = S.coordinates(B.multiply(b, a))
        ab = S.coordinates(B.multiply(a, b))
        if ba is None or ab is None:
            return None
        lam_cols.append(ba)
        rho_cols.append(ab)
    lam = tuple(tuple(lam_cols[j][k] for j in range(n)) for k in range(n))
    rho = tuple(tuple(rho_cols[j][k] for j in range(n)) for k in range(n))
    return Multiplier(lam, rho)


def universal_map(B: FiniteAlgebra, A_in_B: Subspace) -> UniversalMap:
    """The unital map ``j: B -> M(A)`` for an ideal ``A`` of a unital algebra ``B``."""
    unit = _find_unit(B)
    if unit is None:
        raise NoUnit(f"{B!r} has no unit")
    if not is_ideal(B, A_in_B):
        raise NotAnIdeal("subspace is not a two-sided ideal of B")
    ideal, _ = B.subalgebra(A_in_B)
    MA = compute_multiplier_algebra(ideal)
    f = B.field
    cols = []
    for i in range(B.dim):
        m = _ideal_multiplier(B, A_in_B, ideal, B.basis_element(i))
        coords = MA.coordinates(m)
        if coords is None:
            raise PropertyMismatch("j(b) is not a multiplier")
        cols.append(coords)
    matrix = [[cols[i][k] for i in range(B.dim)] for k in range(MA.dim)]

    def j(b):
        return mat_vec(f, matrix, b)

    unital = j(unit) == MA.unit
    multiplicative = all(
        j(B.multiply(B.basis_element(p), B.basis_element(q))) == MA.multiply(j(B.basis_element(p)), j(B.basis_element(q)))
        for p in range(B.dim) for q in range(B.dim)
    )
    restricts = all(j(A_in_B.basis[k]) == MA.embed(ideal.basis_element(k)) for k in range(ideal.dim))
    kernel = nullspace(f, matrix, B.dim)
    left, right = _annihilators(B, A_in_B)
    essential = left.dim == 0 and right.dim == 0
    if (kernel.dim == 0) != essential or kernel != left.intersect(right):
        raise PropertyMismatch("kernel of j disagrees with the annihilator of the ideal")
    return UniversalMap(ideal, MA, matrix, kernel, kernel.dim == 0, essential, unital, multiplicative, restricts)


# ----------------------------------------------------------------------------
# realization inside a unital overalgebra


@dataclass
class Realization:
    subspace: Subspace  # inside B
    target_dim: int
    matrix: list  # target coordinates x subspace coordinates
    bijective: bool
    multiplicative: bool
    unital: bool
    sub_algebra: FiniteAlgebra = dc_field(repr=False)


def _stabilizer(B: FiniteAlgebra, S: Subspace, left: bool, right: bool) -> Subspace:
    """``{b : b S ⊆ S}`` (left) and/or ``{b : S b ⊆ S}`` (right)."""
    space = Subspace.full(B.field, B.dim)
    for a in S.basis:
        if left:
            space = space.intersect(preimage(B.field, B.right_mult_matrix(a), S, B.dim))
        if right:
            space = space.intersect(preimage(B.field, B.left_mult_matrix(a), S, B.dim))
    return space


def _check_subalgebra(B: FiniteAlgebra, S: Subspace):
    if not S.contains_subspace(subspace_product(B, S, S)):
        raise ValidationError("subspace is not closed under multiplication")


def realize_in_unital(B: FiniteAlgebra, A_sub: Subspace) -> Realization:
    """``{b in B : bA ⊆ A, Ab ⊆ A}`` and its isomorphism onto M(A).

    Requires ``AB = B = BA``.
    """
    _check_subalgebra(B, A_sub)
    if _find_unit(B) is None:
        raise NoUnit(f"{B!r} has no unit")
    full = Subspace.full(B.field, B.dim)
    if not subspace_product(B, A_sub, full).is_full():
        raise NondegeneracyConditionFails("AB != B")
    if not subspace_product(B, full, A_sub).is_full():
        raise NondegeneracyConditionFails("BA != B")
    A, _ = B.subalgebra(A_sub)
    MA = compute_multiplier_algebra(A)
    R = _stabilizer(B, A_sub, left=True, right=True)
    cols = []
    for r in R.basis:
        coords = MA.coordinates(_ideal_multiplier(B, A_sub, A, r))
        if coords is None:
            raise PropertyMismatch("element of the realization does not give a multiplier")
        cols.append(coords)
    matrix = [[cols[i][k] for i in range(R.dim)] for k in range(MA.dim)]
    sub, _ = B.subalgebra(R)
    return _finish_realization(B, R, sub, MA.dim, matrix, MA.multiply, MA.unit)


def _finish_realization(B, R, sub, target_dim, matrix, target_mul, target_unit) -> Realization:
    f = B.field
    bij = R.dim == target_dim and (rank(f, matrix, R.dim) == target_dim if R.dim else True)
    phi = lambda c: mat_vec(f, matrix, c)  # noqa: E731
    mult = all(
        phi(sub.multiply(sub.basis_element(p), sub.basis_element(q)))
        == target_mul(phi(sub.basis_element(p)), phi(sub.basis_element(q)))
        for p in range(sub.dim) for q in range(sub.dim)
    )
    unit = _find_unit(B)
    unit_coords = R.coordinates(unit) if unit is not None else None
    unital = unit_coords is not None and phi(unit_coords) == tuple(target_unit)
    return Realization(R, target_dim, matrix, bij, mult, unital, sub)


def left_realize(B: FiniteAlgebra, A_sub: Subspace) -> Realization:
    """``B^L = {b : bA ⊆ A}`` and its isomorphism onto L(A); requires ``A B^L = B^L``.

    Target coordinates are those of the canonical basis of L(A).
    """
    _check_subalgebra(B, A_sub)
    if _find_unit(B) is None:
        raise NoUnit(f"{B!r} has no unit")
    BL = _stabilizer(B, A_sub, left=True, right=False)
    if subspace_product(B, A_sub, BL) != BL:
        raise FirmnessConditionFails("A B^L != B^L")
    A, _ = B.subalgebra(A_sub)
    L = compute_left_multipliers(A)
    n = A.dim
    cols = []
    for b in BL.basis:
        m = _ideal_multiplier_left(B, A_sub, n, b)
        coords = L.coordinates(flatten(m))
        if coords is None:
            raise PropertyMismatch("element of B^L does not give a left multiplier")
        cols.append(coords)
    matrix = [[cols[i][k] for i in range(BL.dim)] for k in range(L.dim)]
    sub, _ = B.subalgebra(BL)

    def l_mul(x, y):
        u = lin_comb(A.field, x, L.basis, n * n)
        v = lin_comb(A.field, y, L.basis, n * n)
        return L.coordinates(_compose_flat(A, u, v))

    unit = L.coordinates(flatten(identity(A.field, n)))
    return _finish_realization(B, BL, sub, L.dim, matrix, l_mul, unit)


def _ideal_multiplier_left(B, S, n, b):
    cols = [S.coordinates(B.multiply(b, a)) for a in S.basis]
    return [[cols[j][k] for j in range(n)] for k in range(n)]


# ----------------------------------------------------------------------------
# strict topology


def _agreement_matrix(MA: MultiplierAlgebra, side: str) -> list:
    """Matrix of ``x -> (x b_i)_i`` and/or ``(b_i x)_i`` on M(A) coordinates."""
    A = MA.base
    cols = []
    for k in range(MA.dim):
        x = MA.basis[k]
        parts = []
        for i in range(A.dim):
            b = A.basis_element(i)
            if side in ("left", "both"):
                parts.extend(x.left(A, b))
            if side in ("right", "both"):
                parts.extend(x.right(A, b))
        cols.append(parts)
    return [[cols[k][r] for k in range(MA.dim)] for r in range(len(cols[0]))] if cols else []


def strict_closure(A: FiniteAlgebra | MultiplierAlgebra, side: str = "both") -> Subspace:
    """Closure of A in M(A) for the (left/right/two-sided) strict topology.

    At finite dimension, agreement on every finite set is agreement on a basis:
    the closure is ``{x : exists a in A, x b_i = a b_i and b_i x = b_i a for all i}``.
    """
    if side not in ("left", "right", "both"):
        raise ValueError(f"side must be left, right or both, not {side!r}")
    MA = A if isinstance(A, MultiplierAlgebra) else compute_multiplier_algebra(A)
    f = MA.field
    agree = _agreement_matrix(MA, side)
    target = image(f, agree, MA.embedded_subspace())
    closure = preimage(f, agree, target, MA.dim)
    if side == "both":
        emb = MA.embedded_subspace()
        if not closure.contains_subspace(emb) or not is_ideal(MA.algebra, closure):
            raise PropertyMismatch("strict closure is not an ideal of M(A) containing A")
    return closure


def density_test(A: FiniteAlgebra, side: str = "both", cross_check: bool = True) -> Verdict:
    """A is dense in M(A) iff its strict closure is everything.

    With ``cross_check`` the verdict is compared with the existence of
    (one-sided) local units and a mismatch raises PropertyMismatch.
    """
    MA = compute_multiplier_algebra(A)
    closure = strict_closure(MA, side)
    dense = closure.is_full()
    detail = {"closure_dim": closure.dim, "multiplier_dim": MA.dim}
    if cross_check:
        from .local_units import has_local_units

        lu = has_local_units(A, side="two_sided" if side == "both" else side)
        detail["has_local_units"] = bool(lu)
        if bool(lu) != dense:
            raise PropertyMismatch(f"density ({dense}) disagrees with local units ({bool(lu)})")
    return Verdict(dense, None if dense else closure, detail)


def completion_sanity(MA: MultiplierAlgebra) -> bool:
    """Every multiplier agrees with some multiplier on all of A: M(A) is closed in itself."""
    f = MA.field
    agree = _agreement_matrix(MA, "both")
    full = Subspace.full(f, MA.dim)
    return preimage(f, agree, image(f, agree, full), MA.dim) == full


def is_idempotent(A: FiniteAlgebra) -> bool:
    return check_idempotent(A).ok
