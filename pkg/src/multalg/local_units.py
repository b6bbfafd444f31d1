"""Units, local units, the booster constructions and ring-level firmness.

Side convention: a *left* local unit for ``F`` satisfies ``e a = a`` and a
*right* local unit ``a e = a``, for every ``a`` in ``F``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import FiniteAlgebra, Verdict, check_idempotent
from .errors import NoInvolution, NoSolution, PreconditionViolated, ValidationError
from .linalg import solve
from .tensor import balanced_tensor, induced_map, is_bijective

SIDES = ("left", "right", "two_sided")


def _side(side: str) -> str:
    if side == "both":
        return "two_sided"
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, not {side!r}")
    return side


@dataclass(frozen=True)
class LocalUnitCertificate:
    elements: tuple
    unit: tuple
    side: str

    def verify(self, A: FiniteAlgebra) -> bool:
        for a in self.elements:
            if self.side in ("left", "two_sided") and A.multiply(self.unit, a) != tuple(a):
                return False
            if self.side in ("right", "two_sided") and A.multiply(a, self.unit) != tuple(a):
                return False
        return True


def local_unit_for(A: FiniteAlgebra, F: Sequence, side: str = "two_sided"):
    """A certificate ``e`` for the finite set ``F``, or None when none exists.

    One linear system: ``e a = a`` (left) and/or ``a e = a`` (right) for a in F.
    """
    side = _side(side)
    F = [tuple(a) for a in F]
    if not F:
        raise ValidationError("F must be nonempty")
    rows, rhs = [], []
    for a in F:
        if len(a) != A.dim:
            raise ValidationError(f"element of length {len(a)} in an algebra of dim {A.dim}")
        if side in ("left", "two_sided"):
            rows.extend(A.right_mult_matrix(a))  # e -> e a
            rhs.extend(a)
        if side in ("right", "two_sided"):
            rows.extend(A.left_mult_matrix(a))  # e -> a e
            rhs.extend(a)
    try:
        e = solve(A.field, rows, rhs, A.dim)
    except NoSolution:
        return None
    cert = LocalUnitCertificate(tuple(F), e, side)
    if not cert.verify(A):
        raise AssertionError("local unit failed verification")
    return cert


def find_unit(A: FiniteAlgebra):
    """The unit of A, or None."""
    if A.dim == 0:
        return ()
    cert = local_unit_for(A, A.basis(), "two_sided")
    return None if cert is None else cert.unit


def has_local_units(A: FiniteAlgebra, side: str = "two_sided") -> Verdict:
    """Local units on the given side.

    A certificate for a basis is one for every finite set, by linearity, so at
    finite dimension this is one solve on the basis.
    """
    side = _side(side)
    if A.dim == 0:
        return Verdict(True, LocalUnitCertificate((), (), side))
    cert = local_unit_for(A, A.basis(), side)
    return Verdict(cert is not None, cert, {"side": side})


# ----------------------------------------------------------------------------
# boosters


def _booster(A: FiniteAlgebra, e1, e2) -> tuple:
    """``e' + e'' - e' e''``"""
    return A.sub(A.add(e1, e2), A.multiply(e1, e2))


def join_one_sided(A: FiniteAlgebra, pairs: Sequence, side: str = "right") -> tuple:
    """Combine per-element units into a single one by the inductive booster.

    ``pairs`` holds ``(a_i, e_i)`` with ``a_i e_i = a_i`` (right) or
    ``e_i a_i = a_i`` (left).  The recursion needs units for the derived
    elements ``a_i - a_i e'``; the supplied unit is reused when the element is
    unchanged and a fresh one is solved for otherwise.
    """
    if side == "left":
        return join_one_sided(A.opposite(), pairs, "right")
    if side != "right":
        raise ValueError("side must be left or right")
    pairs = [(tuple(a), tuple(e)) for a, e in pairs]
    if not pairs:
        raise ValidationError("need at least one element")
    for a, e in pairs:
        if A.multiply(a, e) != a:
            raise PreconditionViolated(f"{A.format_element(e)} is not a right unit for {A.format_element(a)}")
    e = _join(A, pairs)
    for a, _ in pairs:
        if A.multiply(a, e) != a:
            raise AssertionError("booster output failed verification")
    return e


def _join(A: FiniteAlgebra, pairs: list) -> tuple:
    a1, e1 = pairs[0]
    if len(pairs) == 1:
        return e1
    rest = []
    for a, e in pairs[1:]:
        d = A.sub(a, A.multiply(a, e1))
        if d == a:
            rest.append((d, e))
        elif not any(d):
            rest.append((d, A.zero()))
        else:
            cert = local_unit_for(A, [d], "right")
            if cert is None:
                raise PreconditionViolated(
                    f"{A.format_element(d)} has no right unit, so A lacks per-element units"
                )
            rest.append((d, cert.unit))
    e2 = _join(A, rest)
    return _booster(A, e1, e2)


def join_two_sided(A: FiniteAlgebra, e_right, e_left, F: Sequence) -> tuple:
    """``e = e_right + e_left - e_right e_left``, a two-sided local unit for F."""
    e_right, e_left = tuple(e_right), tuple(e_left)
    for a in F:
        a = tuple(a)
        if A.multiply(a, e_right) != a:
            raise PreconditionViolated(f"a e_right != a for a = {A.format_element(a)}")
        if A.multiply(e_left, a) != a:
            raise PreconditionViolated(f"e_left a != a for a = {A.format_element(a)}")
    e = _booster(A, e_right, e_left)
    if not LocalUnitCertificate(tuple(map(tuple, F)), e, "two_sided").verify(A):
        raise AssertionError("two-sided booster failed verification")
    return e


@dataclass(frozen=True)
class StarLocalUnit:
    unit: tuple
    squared: tuple


def star_local_unit(A: FiniteAlgebra, f, F: Sequence) -> StarLocalUnit:
    """Self-adjoint local unit ``e = f + f* - f f*`` from a right unit ``f``.

    ``f`` must satisfy ``a f = a`` and ``a* f = a*`` on F.  The square ``e^2``
    is returned as well; positivity is not certified since an abstract
    star-algebra carries no order.
    """
    if not A.has_star:
        raise NoInvolution(f"{A!r} carries no involution")
    f = tuple(f)
    for a in F:
        a = tuple(a)
        if A.multiply(a, f) != a or A.multiply(A.star(a), f) != A.star(a):
            raise PreconditionViolated(f"f is not a right unit for {A.format_element(a)} and its adjoint")
    fs = A.star(f)
    e = A.sub(A.add(f, fs), A.multiply(f, fs))
    if A.star(e) != e:
        raise AssertionError("star booster is not self-adjoint")
    if not LocalUnitCertificate(tuple(map(tuple, F)), e, "two_sided").verify(A):
        raise AssertionError("star booster failed verification")
    return StarLocalUnit(e, A.multiply(e, e))


# ----------------------------------------------------------------------------
# firmness of the ring itself


@dataclass
class FirmReport:
    tensor_dim: int
    firm: bool
    idempotent: bool
    tensor_square_firm: bool | None  # only computed for idempotent A
    tensor_square: FiniteAlgebra | None = None


def _regular_tensor(A: FiniteAlgebra):
    n = A.dim
    right = [A.right_mult_matrix(b) for b in A.basis()]
    left = [A.left_mult_matrix(b) for b in A.basis()]
    t = balanced_tensor(A.field, n, n, right, left)
    mu = induced_map(t, lambda s, u: A.basis_product(s, u), n)
    return t, mu


def is_firm_ring(A: FiniteAlgebra) -> tuple:
    """``(dim A⊗_A A, multiplication A⊗_A A -> A bijective)``"""
    t, mu = _regular_tensor(A)
    return t.dim, is_bijective(A.field, mu, t.dim, A.dim)


def tensor_square_algebra(A: FiniteAlgebra) -> FiniteAlgebra:
    """``A⊗_A A`` with ``(a⊗a')(b⊗b') = a a' b ⊗ b'``."""
    t, _ = _regular_tensor(A)
    prod = []
    for i in range(t.dim):
        s1, u1 = t.basis_pair(i)
        left = A.basis_product(s1, u1)
        for j in range(t.dim):
            s2, u2 = t.basis_pair(j)
            c = t.pure(A.multiply(left, A.basis_element(s2)), A.basis_element(u2))
            for k, ck in enumerate(c):
                if ck:
                    prod.append((i, j, k, ck))
    labels = [f"{A.labels[s]}⊗{A.labels[u]}" for s, u in (t.basis_pair(k) for k in range(t.dim))]
    return FiniteAlgebra(A.field, t.dim, prod, labels=labels, name=f"{A.name}⊗{A.name}")


def firm_ring_check(A: FiniteAlgebra) -> FirmReport:
    dim, firm = is_firm_ring(A)
    idem = bool(check_idempotent(A))
    sq_firm, T = None, None
    if idem:
        T = tensor_square_algebra(A)
        sq_firm = is_firm_ring(T)[1]
    return FirmReport(dim, firm, idem, sq_firm, T)
