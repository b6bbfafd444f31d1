"""Locally finite infinite algebras with lazily evaluated multipliers.

Two families live here, both indexed by the naturals:

* ``"functions"``: finitely supported functions on N with pointwise product,
  basis ``delta_n``;
* ``"matrices"``: finitely supported N x N matrices, basis ``e_ij``.

Neither has a unit, both have local units.  A multiplier is never stored in
full; it is a pure rule that returns its restriction to any finite probe set
of indices, together with a declared finite support for each row and column.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from .errors import ContractViolation, ValidationError
from .fields import QQ, Field

FAMILIES = ("functions", "matrices")


@dataclass(frozen=True)
class FinSuppElement:
    """A finitely supported element; ``coeffs`` holds only nonzero entries.

    Keys are naturals for functions and ``(row, col)`` pairs for matrices.
    """

    family: str
    coeffs: tuple  # sorted (key, value) pairs
    field: Field = QQ

    @classmethod
    def make(cls, family: str, mapping: Mapping, field: Field = QQ) -> "FinSuppElement":
        if family not in FAMILIES:
            raise ValidationError(f"unknown family {family!r}")
        items = []
        for k, v in mapping.items():
            v = field(v)
            if v:
                if family == "functions":
                    if not (isinstance(k, int) and k >= 0):
                        raise ValidationError(f"index {k!r} is not a natural")
                else:
                    if not (isinstance(k, tuple) and len(k) == 2 and all(isinstance(t, int) and t >= 0 for t in k)):
                        raise ValidationError(f"index {k!r} is not a pair of naturals")
                items.append((k, v))
        return cls(family, tuple(sorted(items)), field)

    @classmethod
    def _trusted(cls, family: str, mapping: Mapping, field: Field) -> "FinSuppElement":
        """Internal constructor: keys already valid, values already field elements."""
        return cls(family, tuple(sorted((k, v) for k, v in mapping.items() if v)), field)

    @classmethod
    def delta(cls, n: int, field: Field = QQ) -> "FinSuppElement":
        return cls.make("functions", {n: 1}, field)

    @classmethod
    def unit(cls, i: int, j: int, field: Field = QQ) -> "FinSuppElement":
        return cls.make("matrices", {(i, j): 1}, field)

    @classmethod
    def zero(cls, family: str, field: Field = QQ) -> "FinSuppElement":
        return cls(family, (), field)

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    @property
    def support(self) -> frozenset:
        return frozenset(k for k, _ in self.coeffs)

    def indices(self) -> frozenset:
        """Naturals touched: the support, or every row and column index."""
        if self.family == "functions":
            return self.support
        return frozenset(t for k in self.support for t in k)

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        _same(self, other)
        d = self.as_dict()
        for k, v in other.coeffs:
            d[k] = self.field.add(d.get(k, self.field.zero), v)
        return FinSuppElement._trusted(self.family, d, self.field)

    def __sub__(self, other):
        _same(self, other)
        d = self.as_dict()
        for k, v in other.coeffs:
            d[k] = self.field.sub(d.get(k, self.field.zero), v)
        return FinSuppElement._trusted(self.family, d, self.field)

    def scale(self, c):
        return FinSuppElement.make(self.family, {k: self.field.mul(c, v) for k, v in self.coeffs}, self.field)

    def restrict(self, indices: Iterable) -> "FinSuppElement":
        keep = set(indices)
        if self.family == "functions":
            d = {k: v for k, v in self.coeffs if k in keep}
        else:
            d = {k: v for k, v in self.coeffs if k[0] in keep and k[1] in keep}
        return FinSuppElement._trusted(self.family, d, self.field)

    def __str__(self):
        if not self.coeffs:
            return "0"
        if self.family == "functions":
            return " + ".join(f"{v}*d{k}" for k, v in self.coeffs)
        return " + ".join(f"{v}*e({i},{j})" for (i, j), v in self.coeffs)


def _same(x: FinSuppElement, y: FinSuppElement):
    if x.family != y.family:
        raise ValidationError(f"cannot combine {x.family} with {y.family}")
    if x.field != y.field:
        raise ValidationError("elements over different fields")


def multiply(x: FinSuppElement, y: FinSuppElement) -> FinSuppElement:
    _same(x, y)
    f = x.field
    if x.family == "functions":
        yd = y.as_dict()
        return FinSuppElement._trusted("functions", {k: f.mul(v, yd[k]) for k, v in x.coeffs if k in yd}, f)
    by_row: dict = {}
    for (j, k), v in y.coeffs:
        by_row.setdefault(j, []).append((k, v))
    out: dict = {}
    for (i, j), u in x.coeffs:
        for k, v in by_row.get(j, ()):
            out[(i, k)] = f.add(out.get((i, k), f.zero), f.mul(u, v))
    return FinSuppElement._trusted("matrices", out, f)


def local_unit_for(F: Iterable[FinSuppElement]) -> FinSuppElement:
    """Indicator of all touched indices: ``e a = a = a e`` for every a in F."""
    F = list(F)
    if not F:
        raise ValidationError("F must be nonempty")
    fam, field = F[0].family, F[0].field
    for a in F:
        _same(F[0], a)
    idx = set()
    for a in F:
        idx |= a.indices()
    if fam == "functions":
        e = FinSuppElement._trusted(fam, {n: field.one for n in idx}, field)
    else:
        e = FinSuppElement._trusted(fam, {(n, n): field.one for n in idx}, field)
    for a in F:
        if multiply(e, a) != a or multiply(a, e) != a:
            raise AssertionError("local unit failed verification")
    return e


def refute_unit(u: FinSuppElement):
    """An element ``w`` with ``u w = 0 != w``: no finitely supported element is a unit."""
    m = max(u.indices(), default=-1) + 1
    w = FinSuppElement.delta(m, u.field) if u.family == "functions" else FinSuppElement.unit(m, m, u.field)
    uw = multiply(u, w)
    if uw or not w:
        raise AssertionError("refutation witness does not refute")
    return w


def nondegeneracy_witness(a: FinSuppElement) -> FinSuppElement:
    """A ``b`` with ``a b != 0`` for nonzero ``a`` (its local unit)."""
    if not a:
        raise ValidationError("zero element has no witness")
    return local_unit_for([a])


# ----------------------------------------------------------------------------
# lazy multipliers


class LazyMultiplier:
    """A multiplier given by its corners.

    ``evaluator(probe)`` receives a finite frozenset of naturals and returns a
    mapping: ``n -> value`` (functions) or ``(i, j) -> value`` with both
    indices in the probe (matrices).  ``row_support(i)`` and
    ``col_support(j)`` declare finite supersets of the nonzero columns of row
    i and the nonzero rows of column j (the finiteness contract).
    """

    def __init__(self, family: str, evaluator: Callable, row_support: Callable | None = None,
                 col_support: Callable | None = None, field: Field = QQ, name: str = "multiplier"):
        if family not in FAMILIES:
            raise ValidationError(f"unknown family {family!r}")
        if family == "matrices" and (row_support is None or col_support is None):
            raise ContractViolation("matrix multipliers must declare row and column supports")
        self.family = family
        self.evaluator = evaluator
        self.row_support = row_support
        self.col_support = col_support
        self.field = field
        self.name = name

    def __repr__(self):
        return f"<LazyMultiplier {self.name} ({self.family})>"

    def corner(self, probe: Iterable[int]) -> dict:
        probe = frozenset(probe)
        raw = self.evaluator(probe)
        out = {}
        for k, v in raw.items():
            v = self.field(v)
            if not v:
                continue
            if self.family == "functions":
                if k not in probe:
                    raise ContractViolation(f"evaluation returned index {k} outside the probe")
            else:
                i, j = k
                if i not in probe or j not in probe:
                    raise ContractViolation(f"evaluation returned entry {k} outside the probe corner")
                if j not in self.row_support(i) or i not in self.col_support(j):
                    raise ContractViolation(f"entry {k} breaks the declared finiteness contract")
            out[k] = v
        return out

    def check_coherence(self, probe: Iterable[int], extra: int = 2) -> bool:
        """The corner on a larger probe restricts to the corner on ``probe``."""
        probe = frozenset(probe)
        top = max(probe, default=-1)
        bigger = probe | {top + 1 + k for k in range(extra)}
        small = self.corner(probe)
        big = self.corner(bigger)
        if self.family == "functions":
            restricted = {k: v for k, v in big.items() if k in probe}
        else:
            restricted = {k: v for k, v in big.items() if k[0] in probe and k[1] in probe}
        if restricted != small:
            raise ContractViolation(f"{self.name}: corner evaluations are not coherent")
        return True


def _probe_for(x: LazyMultiplier, a: FinSuppElement, side: str) -> frozenset:
    idx = set(a.indices())
    if x.family == "matrices":
        for (i, j) in a.support:
            if side == "left":
                idx |= set(x.col_support(i))  # (x a)_{r j} needs x_{r i}
            else:
                idx |= set(x.row_support(j))  # (a x)_{i c} needs x_{j c}
    return frozenset(idx)


def multiplier_apply(x: LazyMultiplier, a: FinSuppElement, side: str = "left", verify: bool = True) -> FinSuppElement:
    """``x a`` (side="left") or ``a x`` (side="right") as a finitely supported element."""
    if a.family != x.family:
        raise ValidationError(f"{x.family} multiplier applied to a {a.family} element")
    if side not in ("left", "right"):
        raise ValueError("side must be left or right")
    f = x.field
    probe = _probe_for(x, a, side)
    corner = x.corner(probe)
    if x.family == "functions":
        out = {n: f.mul(corner[n], v) for n, v in a.coeffs if n in corner}
        result = FinSuppElement._trusted("functions", out, f)
    else:
        xm = FinSuppElement._trusted("matrices", corner, f)
        result = multiply(xm, a) if side == "left" else multiply(a, xm)
    if verify:
        x.check_coherence(probe)
        _verify_commutation(x, a, result, side, probe)
    return result


def _verify_commutation(x, a, result, side, probe):
    """``(b x) a = b (x a)`` (or ``a (x b) = (a x) b``) for every basis b on the probe.

    With ``E`` the indicator of the probe and ``X`` the corner of x on the
    probe enlarged by the declared supports, this is the single identity
    ``E (x a) = (E X) a`` (respectively ``(a x) E = a (X E)``).
    """
    f = x.field
    if x.family == "functions":
        E = FinSuppElement._trusted("functions", {n: f.one for n in probe}, f)
        X = FinSuppElement._trusted("functions", x.corner(probe), f)
    else:
        E = FinSuppElement._trusted("matrices", {(n, n): f.one for n in probe}, f)
        big = set(probe)
        for n in probe:
            big |= set(x.row_support(n)) | set(x.col_support(n))
        X = FinSuppElement._trusted("matrices", x.corner(big), f)
    if side == "left":
        ok = multiply(E, result) == multiply(multiply(E, X), a)
    else:
        ok = multiply(result, E) == multiply(a, multiply(X, E))
    if not ok:
        raise ContractViolation(f"{x.name}: commutation law fails on the probe corner")


def density_probe(x: LazyMultiplier, F: Iterable[FinSuppElement]) -> FinSuppElement:
    """An element of the algebra agreeing with ``x`` on F from both sides.

    Functions: ``x e`` for the local unit e of F.  Matrices: ``e' x e'`` for a
    local unit e' of ``F ∪ xF ∪ Fx``, since ``x e`` alone agrees only on one side.
    """
    F = list(F)
    if not F:
        raise ValidationError("F must be nonempty")
    if x.family == "functions":
        e = local_unit_for(F)
        y = multiplier_apply(x, e, "left")
    else:
        xs = [multiplier_apply(x, a, "left") for a in F] + [multiplier_apply(x, a, "right") for a in F]
        e = local_unit_for(F + [v for v in xs if v] or F)
        xe = multiplier_apply(x, e, "left")
        y = multiply(e, xe)
    for a in F:
        if multiply(y, a) != multiplier_apply(x, a, "left", verify=False):
            raise ContractViolation("density probe disagrees with x on the left")
        if multiply(a, y) != multiplier_apply(x, a, "right", verify=False):
            raise ContractViolation("density probe disagrees with x on the right")
    return y


def probe_coherence(x: LazyMultiplier, F: list, F2: list) -> bool:
    """For ``F ⊆ F2`` the two probes act identically on F."""
    keys = {a for a in F}
    if not keys.issubset(set(F2)):
        raise ValidationError("F must be contained in F2")
    y, y2 = density_probe(x, F), density_probe(x, F2)
    return all(multiply(y, a) == multiply(y2, a) and multiply(a, y) == multiply(a, y2) for a in F)


def probe_equal(x: LazyMultiplier, z: LazyMultiplier, F: Iterable[FinSuppElement]) -> bool:
    """Equality of multipliers as seen from the finite probe set F."""
    return all(
        multiplier_apply(x, a, s, verify=False) == multiplier_apply(z, a, s, verify=False)
        for a in F for s in ("left", "right")
    )


# ----------------------------------------------------------------------------
# built-in multipliers


def indicator(family: str = "functions", S: Iterable[int] | None = None, field: Field = QQ) -> LazyMultiplier:
    """``1_S`` (all of N when S is None); for matrices the diagonal projection onto S."""
    members = None if S is None else frozenset(S)

    def inside(n):
        return members is None or n in members

    if family == "functions":
        return LazyMultiplier("functions", lambda P: {n: 1 for n in P if inside(n)}, field=field,
                              name="indicator" if members is None else f"indicator{sorted(members)}")
    return LazyMultiplier(
        "matrices",
        lambda P: {(n, n): 1 for n in P if inside(n)},
        row_support=lambda i: {i}, col_support=lambda j: {j}, field=field,
        name="identity" if members is None else f"projection{sorted(members)}",
    )


def polynomial_diagonal(coeffs, family: str = "functions", field: Field = QQ) -> LazyMultiplier:
    """``n -> c0 + c1 n + c2 n^2 + ...``, unbounded in general."""
    cs = [field(c) for c in coeffs]

    def p(n):
        acc = field.zero
        for c in reversed(cs):
            acc = field.add(field.mul(acc, field(n)), c)
        return acc

    if family == "functions":
        return LazyMultiplier("functions", lambda P: {n: p(n) for n in P}, field=field, name=f"poly{coeffs}")
    return LazyMultiplier("matrices", lambda P: {(n, n): p(n) for n in P},
                          row_support=lambda i: {i}, col_support=lambda j: {j}, field=field, name=f"poly{coeffs}")


def banded(entry: Callable[[int, int], object], width: int, field: Field = QQ) -> LazyMultiplier:
    """Matrix with ``x_ij = entry(i, j)`` when ``|i - j| <= width`` and 0 otherwise."""
    if width < 0:
        raise ValidationError("width must be nonnegative")

    def band(i):
        return set(range(max(0, i - width), i + width + 1))

    def ev(P):
        return {(i, j): entry(i, j) for i in P for j in P if abs(i - j) <= width}

    return LazyMultiplier("matrices", ev, row_support=band, col_support=band, field=field, name=f"banded{width}")


# ----------------------------------------------------------------------------
# random probe sets


def random_element(rng: random.Random, family: str, max_index: int = 30, max_terms: int = 4,
                   field: Field = QQ) -> FinSuppElement:
    d = {}
    for _ in range(rng.randint(1, max_terms)):
        key = rng.randrange(max_index) if family == "functions" else (rng.randrange(max_index), rng.randrange(max_index))
        d[key] = rng.choice([1, 2, -1, 3])
    return FinSuppElement.make(family, d, field)


def random_finite_set(rng: random.Random, family: str, size: int | None = None, **kw) -> list:
    size = size or rng.randint(1, 5)
    out = []
    while len(out) < size:
        a = random_element(rng, family, **kw)
        if a:
            out.append(a)
    return out
