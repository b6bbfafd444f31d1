"""Non-degenerate homomorphisms ``A -> M(B)`` and their unique unital extensions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .algebra import FiniteAlgebra, Verdict
from .errors import (
    BimoduleAxiomFails,
    DimensionMismatch,
    NondegeneracyFails,
    NoSolution,
    PropertyMismatch,
    ValidationError,
)
from .fixtures import finite_functions
from .linalg import Subspace, lin_comb, mat_mul, mat_vec, nullspace, solve, vec_add
from .multipliers import Multiplier, MultiplierAlgebra, compute_multiplier_algebra


class NonDegenerateHom:
    """A linear map ``gamma: A -> M(B)`` stored as a ``dim M(B) x dim A`` matrix.

    Multiplicativity is validated on construction; non-degeneracy is a
    separate check (see :func:`check_nondegenerate_hom`) so that degenerate
    maps can still be represented and reported on.
    """

    def __init__(self, source: FiniteAlgebra, target: MultiplierAlgebra, matrix, validate: bool = True):
        if source.field != target.field:
            raise ValidationError("source and target over different fields")
        if len(matrix) != target.dim or any(len(r) != source.dim for r in matrix):
            raise DimensionMismatch(f"hom matrix must be {target.dim} x {source.dim}")
        self.source = source
        self.target = target
        self.field = source.field
        self.matrix = [[source.field(c) for c in row] for row in matrix]
        if validate:
            bad = self.multiplicativity_failure()
            if bad is not None:
                raise ValidationError(f"map is not multiplicative on basis pair {bad}")

    @classmethod
    def from_images(cls, source, target: MultiplierAlgebra, images: Sequence, validate=True):
        """From the M(B)-coordinates (or :class:`Multiplier` values) of ``gamma(a_i)``."""
        cols = []
        for img in images:
            c = target.coordinates(img) if isinstance(img, Multiplier) else tuple(img)
            if c is None:
                raise ValidationError("image is not a multiplier of the target")
            cols.append(c)
        matrix = [[cols[i][k] for i in range(source.dim)] for k in range(target.dim)]
        return cls(source, target, matrix, validate)

    @classmethod
    def into_algebra(cls, source, B: FiniteAlgebra, matrix, validate=True):
        """From a linear map ``A -> B`` (``dim B x dim A``) composed with ``B -> M(B)``."""
        MB = compute_multiplier_algebra(B)
        images = [MB.embed(tuple(row[i] for row in matrix)) for i in range(source.dim)]
        return cls.from_images(source, MB, images, validate)

    def __call__(self, a) -> tuple:
        return mat_vec(self.field, self.matrix, a)

    def image_multiplier(self, a) -> Multiplier:
        return self.target.multiplier(self(a))

    def multiplicativity_failure(self):
        A = self.source
        for i in range(A.dim):
            for j in range(A.dim):
                lhs = self(A.basis_product(i, j))
                rhs = self.target.multiply(self(A.basis_element(i)), self(A.basis_element(j)))
                if lhs != rhs:
                    return (A.labels[i], A.labels[j])
        return None


def check_nondegenerate_hom(gamma: NonDegenerateHom) -> Verdict:
    """Whether ``gamma(A) B = B`` and ``B gamma(A) = B``."""
    B = gamma.target.base
    left, right = [], []
    for a in gamma.source.basis():
        x = gamma.image_multiplier(a)
        for b in B.basis():
            left.append(x.left(B, b))
            right.append(x.right(B, b))
    gB = Subspace.span(B.field, left, B.dim)
    Bg = Subspace.span(B.field, right, B.dim)
    ok = gB.is_full() and Bg.is_full()
    witness = None if ok else (gB if not gB.is_full() else Bg)
    return Verdict(ok, witness, {"gamma_A_B": gB, "B_gamma_A": Bg})


def _require_nondegenerate(gamma: NonDegenerateHom):
    v = check_nondegenerate_hom(gamma)
    if not v.ok:
        d = v.detail
        raise NondegeneracyFails(
            f"gamma(A)B has dim {d['gamma_A_B'].dim}, B gamma(A) has dim {d['B_gamma_A'].dim}, "
            f"B has dim {gamma.target.base.dim}"
        )


# ----------------------------------------------------------------------------
# bimodules


@dataclass
class Bimodule:
    """A-bimodule structure on the underlying space of B: ``a.b`` and ``b.a``."""

    algebra: FiniteAlgebra
    base: FiniteAlgebra
    left: list  # left[i]: matrix of b -> a_i . b
    right: list  # right[i]: matrix of b -> b . a_i


def hom_to_bimodule(gamma: NonDegenerateHom) -> Bimodule:
    B = gamma.target.base
    left, right = [], []
    for a in gamma.source.basis():
        x = gamma.image_multiplier(a)
        left.append([list(r) for r in x.lam])
        right.append([list(r) for r in x.rho])
    return Bimodule(gamma.source, B, left, right)


def _lin(field, coeffs, mats, d):
    out = [[field.zero] * d for _ in range(d)]
    for c, m in zip(coeffs, mats):
        if c:
            for r in range(d):
                for s in range(d):
                    if m[r][s]:
                        out[r][s] = field.add(out[r][s], field.mul(c, m[r][s]))
    return out


def bimodule_axiom_failure(bm: Bimodule):
    """Name of the first violated identity, or None."""
    A, B = bm.algebra, bm.base
    f = A.field
    d = B.dim
    for i in range(A.dim):
        for j in range(A.dim):
            c = A.basis_product(i, j)
            if mat_mul(f, bm.left[i], bm.left[j]) != _lin(f, c, bm.left, d):
                return "(aa').b = a.(a'.b)"
            if mat_mul(f, bm.right[j], bm.right[i]) != _lin(f, c, bm.right, d):
                return "b.(aa') = (b.a).a'"
            if mat_mul(f, bm.left[i], bm.right[j]) != mat_mul(f, bm.right[j], bm.left[i]):
                return "(a.b).a' = a.(b.a')"
    for i in range(A.dim):
        for b in B.basis():
            for b2 in B.basis():
                ab = mat_vec(f, bm.left[i], b)
                ba = mat_vec(f, bm.right[i], b)
                if mat_vec(f, bm.left[i], B.multiply(b, b2)) != B.multiply(ab, b2):
                    return "a.(bb') = (a.b)b'"
                if mat_vec(f, bm.right[i], B.multiply(b2, b)) != B.multiply(b2, ba):
                    return "(b'b).a = b'(b.a)"
                if B.multiply(ba, b2) != B.multiply(b, mat_vec(f, bm.left[i], b2)):
                    return "(b.a)b' = b(a.b')"
    vecs_l = [mat_vec(f, m, b) for m in bm.left for b in B.basis()]
    vecs_r = [mat_vec(f, m, b) for m in bm.right for b in B.basis()]
    if not Subspace.span(f, vecs_l, d).is_full():
        return "A.B = B"
    if not Subspace.span(f, vecs_r, d).is_full():
        return "B.A = B"
    return None


def bimodule_to_hom(bm: Bimodule, MB: MultiplierAlgebra | None = None) -> NonDegenerateHom:
    """``gamma(a) = (b -> a.b, b -> b.a)`` for an idempotent balanced bimodule."""
    bad = bimodule_axiom_failure(bm)
    if bad is not None:
        raise BimoduleAxiomFails(bad, f"bimodule identity fails: {bad}")
    MB = MB or compute_multiplier_algebra(bm.base)
    images = [
        Multiplier(tuple(map(tuple, L)), tuple(map(tuple, R))) for L, R in zip(bm.left, bm.right)
    ]
    return NonDegenerateHom.from_images(bm.algebra, MB, images)


# ----------------------------------------------------------------------------
# extension to M(A)


@dataclass
class ExtendedHom:
    source: MultiplierAlgebra
    target: MultiplierAlgebra
    matrix: list  # dim M(B) x dim M(A)
    unital: bool
    multiplicative: bool
    restricts: bool
    second_solution_used: bool

    def __call__(self, x) -> tuple:
        return mat_vec(self.source.field, self.matrix, x)


def _factorizations(gamma: NonDegenerateHom, side: str):
    """For each basis b_j of B two factorizations ``b_j = sum gamma(a_i) c_i``
    (left) or ``sum c_i gamma(a_i)`` (right), as lists of ``c_i``."""
    A, B = gamma.source, gamma.target.base
    f = B.field
    n, m = A.dim, B.dim
    blocks = []
    for a in A.basis():
        x = gamma.image_multiplier(a)
        blocks.append(x.lam if side == "left" else x.rho)
    # unknown vector: c_0 .. c_{n-1}, each of length m
    system = [[blocks[i][r][s] for i in range(n) for s in range(m)] for r in range(m)]
    kernel = nullspace(f, system, n * m)
    shift = lin_comb(f, [f.one] * kernel.dim, kernel.basis, n * m) if kernel.dim else None
    out = []
    for b in B.basis():
        try:
            sol = solve(f, system, b, n * m)
        except NoSolution:
            raise NondegeneracyFails(f"{B.format_element(b)} does not factor through gamma(A)")
        second = tuple(f.add(u, v) for u, v in zip(sol, shift)) if shift else sol
        out.append([tuple(tuple(s[i * m:(i + 1) * m]) for i in range(n)) for s in (sol, second)])
    return out, shift is not None


def _factor_images(gamma, facts, side) -> list:
    """``table[j][t][i][k] = gamma(a_k) c`` (left) or ``c gamma(a_k)`` (right), where
    ``c`` is entry i of factorization t of ``b_j``; reused for every x in M(A)."""
    A, B = gamma.source, gamma.target.base
    basis_images = [gamma.image_multiplier(a) for a in A.basis()]
    apply = (lambda y, c: y.left(B, c)) if side == "left" else (lambda y, c: y.right(B, c))
    return [[[[apply(y, c) for y in basis_images] for c in cs] for cs in pair] for pair in facts]


def _extended_side(gamma, MA, x, table, side) -> list:
    """Columns ``gamma_1(x) b_j`` (left) or ``b_j gamma_1(x)`` (right) for both factorizations.

    By linearity ``gamma(x a_i) c_i = sum_k (x a_i)_k gamma(a_k) c_i``.
    """
    A, B = gamma.source, gamma.target.base
    f = B.field
    mx = MA.multiplier(x)
    moved = [mx.left(A, a) if side == "left" else mx.right(A, a) for a in A.basis()]
    cols = []
    for pair in table:
        results = []
        for per_i in pair:
            acc = B.zero()
            for i, images in enumerate(per_i):
                acc = vec_add(f, acc, lin_comb(f, moved[i], images, B.dim))
            results.append(acc)
        if results[0] != results[1]:
            raise PropertyMismatch("extension depends on the chosen factorization")
        cols.append(results[0])
    return cols


def extend_hom(gamma: NonDegenerateHom, MA: MultiplierAlgebra | None = None) -> ExtendedHom:
    """The unique unital ``gamma_1: M(A) -> M(B)`` with ``gamma_1(a) = gamma(a)``.

    ``gamma_1(x) b`` is computed from a factorization ``b = sum gamma(a_i) b_i``
    as ``sum gamma(x a_i) b_i`` and the result is re-checked on a second
    factorization.
    """
    _require_nondegenerate(gamma)
    A = gamma.source
    MA = MA or compute_multiplier_algebra(A)
    MB = gamma.target
    B = MB.base
    f = B.field
    left_f, l2 = _factorizations(gamma, "left")
    right_f, r2 = _factorizations(gamma, "right")
    left_t = _factor_images(gamma, left_f, "left")
    right_t = _factor_images(gamma, right_f, "right")
    images = []
    for x in MA.algebra.basis():
        lcols = _extended_side(gamma, MA, x, left_t, "left")
        rcols = _extended_side(gamma, MA, x, right_t, "right")
        lam = tuple(tuple(lcols[j][k] for j in range(B.dim)) for k in range(B.dim))
        rho = tuple(tuple(rcols[j][k] for j in range(B.dim)) for k in range(B.dim))
        c = MB.coordinates(Multiplier(lam, rho))
        if c is None:
            raise PropertyMismatch("extended image is not a multiplier of B")
        images.append(c)
    matrix = [[images[i][k] for i in range(MA.dim)] for k in range(MB.dim)]

    def g1(v):
        return mat_vec(f, matrix, v)

    unital = g1(MA.unit) == MB.unit
    basis = MA.algebra.basis()
    multiplicative = all(g1(MA.multiply(p, q)) == MB.multiply(g1(p), g1(q)) for p in basis for q in basis)
    restricts = all(g1(MA.embed(a)) == gamma(a) for a in A.basis())
    return ExtendedHom(MA, MB, matrix, unital, multiplicative, restricts, l2 or r2)


def functoriality_check(gamma: NonDegenerateHom, delta: NonDegenerateHom) -> Verdict:
    """``(delta_1 o gamma)_1 = delta_1 o gamma_1`` on the basis of M(A)."""
    if gamma.target.base != delta.source:
        raise ValidationError("gamma lands in M(B) but delta starts from a different algebra")
    _require_nondegenerate(gamma)
    _require_nondegenerate(delta)
    f = gamma.field
    d1 = extend_hom(delta, gamma.target)
    comp_matrix = mat_mul(f, d1.matrix, gamma.matrix)
    composite = NonDegenerateHom(gamma.source, delta.target, comp_matrix)
    _require_nondegenerate(composite)
    lhs = extend_hom(composite)
    g1 = extend_hom(gamma, lhs.source)
    rhs = mat_mul(f, d1.matrix, g1.matrix)
    ok = [list(r) for r in lhs.matrix] == [list(r) for r in rhs]
    witness = None
    if not ok:
        for k, x in enumerate(lhs.source.algebra.basis()):
            if lhs(x) != mat_vec(f, rhs, x):
                witness = lhs.source.algebra.labels[k]
                break
    return Verdict(ok, witness, {"composite_extension": lhs.matrix})


# ----------------------------------------------------------------------------
# fixtures


def pullback_hom(alpha: Callable | dict, X: Sequence, Y: Sequence, field=None) -> NonDegenerateHom:
    """``gamma(f) = f o alpha`` from functions on ``Y`` to functions on ``X``.

    On the delta bases ``gamma(delta_y) = sum of delta_x over alpha(x) = y``.
    """
    from .fields import QQ

    field = field or QQ
    amap = alpha if callable(alpha) else alpha.__getitem__
    X, Y = list(X), list(Y)
    KY = finite_functions(Y, field)
    KX = finite_functions(X, field)
    matrix = [[field.one if amap(x) == y else field.zero for y in Y] for x in X]
    for x in X:
        if amap(x) not in Y:
            raise ValidationError(f"alpha({x}) is not in Y")
    return NonDegenerateHom.into_algebra(KY, KX, matrix)


def inclusion_hom(A: FiniteAlgebra, B: FiniteAlgebra, S: Subspace) -> NonDegenerateHom:
    """``A -> B -> M(B)`` for a subalgebra with basis ``S.basis`` identified with A's basis.

    A is expected to be ``B.subalgebra(S)[0]`` (same basis order).
    """
    if S.dim != A.dim:
        raise DimensionMismatch("subspace and algebra dimensions differ")
    matrix = [[S.basis[i][k] for i in range(A.dim)] for k in range(B.dim)]
    return NonDegenerateHom.into_algebra(A, B, matrix)


def identity_hom(A: FiniteAlgebra, MA: MultiplierAlgebra | None = None) -> NonDegenerateHom:
    """The embedding ``A -> M(A)``."""
    MA = MA or compute_multiplier_algebra(A)
    return NonDegenerateHom.from_images(A, MA, [MA.embed(a) for a in A.basis()])


def diagonal_hom(A: FiniteAlgebra, AA: FiniteAlgebra) -> NonDegenerateHom:
    """``a -> (a, a)`` into the direct sum ``AA = A x A``."""
    n = A.dim
    matrix = [[A.field.one if (k == i or k == i + n) else A.field.zero for i in range(n)] for k in range(2 * n)]
    return NonDegenerateHom.into_algebra(A, AA, matrix)
