"""Finite-dimensional algebras given by structure constants.

An algebra has basis ``b_0 .. b_{n-1}`` and product
``b_i b_j = sum_k c[i][j][k] b_k``.  It need not have a unit and its product
may be degenerate.  Elements are coefficient tuples of length ``dim``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NoInvolution, ValidationError
from .fields import Field
from .linalg import Subspace, lin_comb, mat_vec, nullspace, unit_vector


class FiniteAlgebra:
    """A finite-dimensional algebra over an exact field.

    ``product`` is an iterable of ``(i, j, k, c)`` meaning ``b_i b_j`` has
    coefficient ``c`` at ``b_k``.  ``star``, when given, is an ``n x n`` matrix
    whose row ``i`` is the image of ``b_i``; the involution extends
    conjugate-linearly.  Associativity and the involution laws are checked at
    construction unless ``validate=False``.
    """

    def __init__(
        self,
        field: Field,
        dim: int,
        product: Iterable[tuple],
        labels: Sequence[str] | None = None,
        star: Sequence[Sequence] | None = None,
        name: str | None = None,
        validate: bool = True,
    ):
        self.field = field
        self.dim = int(dim)
        self.labels = tuple(labels) if labels is not None else tuple(f"b{i}" for i in range(self.dim))
        if len(self.labels) != self.dim:
            raise ValidationError(f"{len(self.labels)} labels for dimension {self.dim}")
        if len(set(self.labels)) != self.dim:
            raise ValidationError("basis labels must be distinct")
        self.name = name
        n = self.dim
        table = [[[field.zero] * n for _ in range(n)] for _ in range(n)]
        for entry in product:
            i, j, k, c = entry
            if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
                raise ValidationError(f"product index ({i}, {j}, {k}) out of range for dimension {n}")
            table[i][j][k] = field.add(table[i][j][k], field(c))
        self._table = tuple(tuple(tuple(v) for v in row) for row in table)
        if star is not None:
            if len(star) != n or any(len(r) != n for r in star):
                raise ValidationError("star matrix must be dim x dim")
            star = tuple(tuple(field(c) for c in r) for r in star)
        self.star_matrix = star
        if validate:
            bad = self.associativity_failure()
            if bad is not None:
                i, j, k = bad
                raise ValidationError(
                    "product is not associative on basis triple "
                    f"({self.labels[i]}, {self.labels[j]}, {self.labels[k]})"
                )
            if star is not None:
                self._validate_star()

    # -- structure ---------------------------------------------------------

    def basis_product(self, i: int, j: int) -> tuple:
        return self._table[i][j]

    @property
    def product(self) -> list:
        """Sparse structure constants as ``(i, j, k, c)`` with ``c != 0``."""
        out = []
        for i, row in enumerate(self._table):
            for j, vec in enumerate(row):
                for k, c in enumerate(vec):
                    if c:
                        out.append((i, j, k, c))
        return out

    @property
    def has_star(self) -> bool:
        return self.star_matrix is not None

    def __eq__(self, other):
        return (
            isinstance(other, FiniteAlgebra)
            and self.field == other.field
            and self.dim == other.dim
            and self.labels == other.labels
            and self._table == other._table
            and self.star_matrix == other.star_matrix
        )

    def __hash__(self):
        return hash((self.field, self.dim, self.labels, self._table))

    def __repr__(self):
        tag = f" {self.name}" if self.name else ""
        return f"<FiniteAlgebra{tag} dim={self.dim} over {self.field.name}>"

    # -- elements ----------------------------------------------------------

    def zero(self) -> tuple:
        return (self.field.zero,) * self.dim

    def basis_element(self, i: int) -> tuple:
        return unit_vector(self.field, self.dim, i)

    def element(self, *terms) -> tuple:
        """Build an element from labels, e.g. ``A.element("e11", (2, "e13"))``."""
        v = [self.field.zero] * self.dim
        for t in terms:
            coeff, label = (self.field.one, t) if isinstance(t, str) else (self.field(t[0]), t[1])
            k = self.labels.index(label)
            v[k] = self.field.add(v[k], coeff)
        return tuple(v)

    def basis(self) -> list:
        return [self.basis_element(i) for i in range(self.dim)]

    def _check_element(self, x):
        if len(x) != self.dim:
            raise DimensionMismatch(f"element of length {len(x)} in an algebra of dimension {self.dim}")

    def multiply(self, x: Sequence, y: Sequence) -> tuple:
        self._check_element(x)
        self._check_element(y)
        f = self.field
        acc = [f.zero] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self._table[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = f.mul(xi, yj)
                for k, t in enumerate(row[j]):
                    if t:
                        acc[k] = f.add(acc[k], f.mul(c, t))
        return tuple(acc)

    def add(self, x, y) -> tuple:
        return tuple(self.field.add(a, b) for a, b in zip(x, y))

    def sub(self, x, y) -> tuple:
        return tuple(self.field.sub(a, b) for a, b in zip(x, y))

    def scale(self, c, x) -> tuple:
        return tuple(self.field.mul(c, a) for a in x)

    def left_mult_matrix(self, x: Sequence) -> list:
        """Matrix of ``b -> x b``."""
        cols = [self.multiply(x, self.basis_element(j)) for j in range(self.dim)]
        return [[cols[j][k] for j in range(self.dim)] for k in range(self.dim)]

    def right_mult_matrix(self, x: Sequence) -> list:
        """Matrix of ``b -> b x``."""
        cols = [self.multiply(self.basis_element(j), x) for j in range(self.dim)]
        return [[cols[j][k] for j in range(self.dim)] for k in range(self.dim)]

    def star(self, x: Sequence) -> tuple:
        if self.star_matrix is None:
            raise NoInvolution(f"{self!r} carries no involution")
        self._check_element(x)
        f = self.field
        return lin_comb(f, [f.conj(c) for c in x], self.star_matrix, self.dim)

    def format_element(self, x: Sequence) -> str:
        terms = []
        for c, lab in zip(x, self.labels):
            if not c:
                continue
            s = self.field.format(c)
            if s == "1":
                terms.append(lab)
            elif s == "-1":
                terms.append(f"-{lab}")
            else:
                terms.append(f"({s}){lab}" if any(ch in s[1:] for ch in "+-") else f"{s}*{lab}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    # -- validation --------------------------------------------------------

    def associativity_failure(self):
        """First basis triple violating associativity, or None."""
        n = self.dim
        basis = self.basis()
        for i in range(n):
            for j in range(n):
                bij = self._table[i][j]
                for k in range(n):
                    left = self.multiply(bij, basis[k])
                    right = self.multiply(basis[i], self._table[j][k])
                    if left != right:
                        return (i, j, k)
        return None

    def is_associative(self) -> bool:
        return self.associativity_failure() is None

    def _validate_star(self):
        n = self.dim
        for i in range(n):
            b = self.basis_element(i)
            if self.star(self.star(b)) != b:
                raise ValidationError(f"star is not involutive on {self.labels[i]}")
        for i in range(n):
            for j in range(n):
                bi, bj = self.basis_element(i), self.basis_element(j)
                if self.star(self.multiply(bi, bj)) != self.multiply(self.star(bj), self.star(bi)):
                    raise ValidationError(
                        f"star is not anti-multiplicative on ({self.labels[i]}, {self.labels[j]})"
                    )

    # -- derived algebras --------------------------------------------------

    def opposite(self) -> "FiniteAlgebra":
        prod = [(j, i, k, c) for (i, j, k, c) in self.product]
        return FiniteAlgebra(
            self.field, self.dim, prod, labels=self.labels, star=self.star_matrix,
            name=f"{self.name}^op" if self.name else None, validate=False,
        )

    def subalgebra(self, space: Subspace, labels: Sequence[str] | None = None, name: str | None = None):
        """The subspace ``space`` as an algebra in its canonical basis.

        Returns ``(algebra, inclusion)`` where ``inclusion`` is the
        ``dim x space.dim`` matrix of the embedding.
        """
        if space.ambient_dim != self.dim:
            raise DimensionMismatch("subspace lives in a different ambient space")
        basis = space.basis
        prod = []
        for i, u in enumerate(basis):
            for j, v in enumerate(basis):
                coords = space.coordinates(self.multiply(u, v))
                if coords is None:
                    raise ValidationError("subspace is not closed under multiplication")
                for k, c in enumerate(coords):
                    if c:
                        prod.append((i, j, k, c))
        star = None
        if self.star_matrix is not None:
            rows = []
            for u in basis:
                coords = space.coordinates(self.star(u))
                if coords is None:
                    break
                rows.append(coords)
            else:
                star = rows
        if labels is None:
            labels = []
            for u in basis:
                nz = [k for k, c in enumerate(u) if c]
                if len(nz) == 1 and u[nz[0]] == self.field.one:
                    labels.append(self.labels[nz[0]])
                else:
                    labels.append(f"s{len(labels)}")
            if len(set(labels)) != len(labels):
                labels = [f"s{i}" for i in range(len(basis))]
        sub = FiniteAlgebra(self.field, len(basis), prod, labels=labels, star=star, name=name, validate=False)
        inclusion = [[basis[j][k] for j in range(len(basis))] for k in range(self.dim)]
        return sub, inclusion


@dataclass(frozen=True)
class Verdict:
    """A yes/no answer with the evidence behind it."""

    ok: bool
    witness: object = None
    detail: dict = dc_field(default_factory=dict)

    def __bool__(self):
        return self.ok


def _check_same(A: FiniteAlgebra, *spaces: Subspace):
    for s in spaces:
        if s.ambient_dim != A.dim or s.field != A.field:
            raise DimensionMismatch("subspace does not live in this algebra")


def subspace_product(A: FiniteAlgebra, P: Subspace, Q: Subspace) -> Subspace:
    """Span of all products ``p q`` with ``p`` in ``P`` and ``q`` in ``Q``."""
    _check_same(A, P, Q)
    prods = [A.multiply(p, q) for p in P.basis for q in Q.basis]
    return Subspace.span(A.field, prods, A.dim)


def full_space(A: FiniteAlgebra) -> Subspace:
    return Subspace.full(A.field, A.dim)


def left_annihilator_free(A: FiniteAlgebra) -> Subspace:
    """``{a : a b = 0 for all b}`` (nullspace of stacked right multiplications)."""
    rows = []
    for j in range(A.dim):
        rows.extend(A.right_mult_matrix(A.basis_element(j)))
    return nullspace(A.field, rows, A.dim)


def right_annihilator_free(A: FiniteAlgebra) -> Subspace:
    """``{a : b a = 0 for all b}``."""
    rows = []
    for j in range(A.dim):
        rows.extend(A.left_mult_matrix(A.basis_element(j)))
    return nullspace(A.field, rows, A.dim)


def check_nondegenerate(A: FiniteAlgebra, side: str = "both") -> Verdict:
    """Non-degeneracy of the product.

    ``left``: ``a A = 0`` forces ``a = 0``; ``right``: ``A a = 0`` forces
    ``a = 0``.  A failing verdict carries a nonzero annihilated element and the
    side on which it fails.
    """
    if side not in ("left", "right", "both"):
        raise ValueError(f"side must be left, right or both, not {side!r}")
    detail = {}
    witness = None
    if side in ("left", "both"):
        ann = left_annihilator_free(A)
        detail["left"] = ann.dim == 0
        if ann.dim:
            witness = ann.basis[0]
            detail["failed_side"] = "left"
    if side in ("right", "both"):
        ann = right_annihilator_free(A)
        detail["right"] = ann.dim == 0
        if ann.dim and witness is None:
            witness = ann.basis[0]
            detail["failed_side"] = "right"
    return Verdict(witness is None, witness, detail)


def check_idempotent(A: FiniteAlgebra) -> Verdict:
    full = full_space(A)
    sq = subspace_product(A, full, full)
    return Verdict(sq.is_full(), None if sq.is_full() else sq, {"dim_A2": sq.dim})


def check_associativity(A: FiniteAlgebra) -> Verdict:
    bad = A.associativity_failure()
    return Verdict(bad is None, bad)


def is_ideal(A: FiniteAlgebra, S: Subspace, side: str = "both") -> bool:
    _check_same(A, S)
    full = full_space(A)
    if side in ("left", "both") and not S.contains_subspace(subspace_product(A, full, S)):
        return False
    if side in ("right", "both") and not S.contains_subspace(subspace_product(A, S, full)):
        return False
    return True


def apply_matrix(A: FiniteAlgebra, m, x) -> tuple:
    return mat_vec(A.field, m, x)
