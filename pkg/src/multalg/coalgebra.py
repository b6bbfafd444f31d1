"""Finite-dimensional coalgebras, their convolution duals and co-Frobenius maps.

Elements of ``C*`` are written in the dual basis ``phi_i`` of the coalgebra
basis ``c_i``.  The comultiplication is stored densely as
``delta[i][j][k]``: ``Delta(c_i) = sum delta[i][j][k] c_j ⊗ c_k``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .algebra import FiniteAlgebra, Verdict, is_ideal
from .errors import CoalgebraAxiomFails, ComoduleAxiomFails, InvalidWitness
from .fields import Field, PrimeField, QQ
from .linalg import Subspace, lin_comb, nullspace, rank, zero_matrix
from .local_units import has_local_units
from .modules import FiniteModule, regular_module
from .multipliers import compute_multiplier_algebra, strict_closure


class FiniteCoalgebra:
    def __init__(self, field: Field, dim: int, delta, counit, labels=None, name=None, validate=True):
        self.field = field
        self.dim = dim
        d = [[[field.zero] * dim for _ in range(dim)] for _ in range(dim)]
        for i, j, k, c in delta:
            d[i][j][k] = field.add(d[i][j][k], field(c))
        self.delta = d
        self.counit = tuple(field(c) for c in counit)
        if len(self.counit) != dim:
            raise CoalgebraAxiomFails(f"counit has length {len(self.counit)}, expected {dim}")
        self.labels = tuple(labels) if labels else tuple(f"c{i}" for i in range(dim))
        self.name = name or f"coalgebra(dim {dim})"
        if validate:
            self.validate()

    def __repr__(self):
        return f"<FiniteCoalgebra {self.name} dim={self.dim} over {self.field.name}>"

    @property
    def delta_triples(self) -> list:
        return [(i, j, k, c) for i in range(self.dim) for j in range(self.dim) for k in range(self.dim)
                if (c := self.delta[i][j][k])]

    def validate(self):
        f, n, d = self.field, self.dim, self.delta
        for i in range(n):
            # (Delta ⊗ id) Delta = (id ⊗ Delta) Delta, compared on c_a ⊗ c_b ⊗ c_c
            for a in range(n):
                for b in range(n):
                    for c in range(n):
                        lhs = f.zero
                        rhs = f.zero
                        for m in range(n):
                            if d[i][m][c] and d[m][a][b]:
                                lhs = f.add(lhs, f.mul(d[i][m][c], d[m][a][b]))
                            if d[i][a][m] and d[m][b][c]:
                                rhs = f.add(rhs, f.mul(d[i][a][m], d[m][b][c]))
                        if lhs != rhs:
                            raise CoalgebraAxiomFails(f"coassociativity fails at {self.labels[i]}")
            for k in range(n):
                left = f.zero
                right = f.zero
                for j in range(n):
                    if self.counit[j]:
                        left = f.add(left, f.mul(self.counit[j], d[i][j][k]))
                        right = f.add(right, f.mul(self.counit[j], d[i][k][j]))
                target = f.one if k == i else f.zero
                if left != target or right != target:
                    raise CoalgebraAxiomFails(f"counit law fails at {self.labels[i]}")

    def right_action_matrix(self, phi) -> list:
        """Matrix of ``c -> c.f = sum f(c_(1)) c_(2)``."""
        f, n = self.field, self.dim
        m = zero_matrix(f, n, n)
        for t in range(n):
            for i in range(n):
                if phi[i]:
                    for k in range(n):
                        if self.delta[t][i][k]:
                            m[k][t] = f.add(m[k][t], f.mul(phi[i], self.delta[t][i][k]))
        return m

    def left_action_matrix(self, phi) -> list:
        """Matrix of ``c -> f.c = sum f(c_(2)) c_(1)``."""
        f, n = self.field, self.dim
        m = zero_matrix(f, n, n)
        for t in range(n):
            for i in range(n):
                if phi[i]:
                    for k in range(n):
                        if self.delta[t][k][i]:
                            m[k][t] = f.add(m[k][t], f.mul(phi[i], self.delta[t][k][i]))
        return m


def grouplike(X, field: Field = QQ) -> FiniteCoalgebra:
    """``kX`` with every point grouplike."""
    pts = [str(x) for x in (range(X) if isinstance(X, int) else X)]
    n = len(pts)
    return FiniteCoalgebra(field, n, [(i, i, i, 1) for i in range(n)], [1] * n, labels=pts, name=f"k{n}")


def comatrix(n: int, field: Field = QQ) -> FiniteCoalgebra:
    """``Delta(c_ij) = sum_k c_ik ⊗ c_kj`` and ``epsilon(c_ij) = delta_ij``."""
    idx = {(i, j): p for p, (i, j) in enumerate(itertools.product(range(1, n + 1), repeat=2))}
    delta = [(idx[(i, j)], idx[(i, k)], idx[(k, j)], 1) for (i, j) in idx for k in range(1, n + 1)]
    counit = [1 if i == j else 0 for (i, j) in idx]
    labels = [f"c{i}{j}" for (i, j) in idx]
    return FiniteCoalgebra(field, n * n, delta, counit, labels=labels, name=f"comatrix{n}")


def one_dim(field: Field = QQ) -> FiniteCoalgebra:
    return FiniteCoalgebra(field, 1, [(0, 0, 0, 1)], [1], labels=["c"], name="k")


def dual_algebra(C: FiniteCoalgebra) -> FiniteAlgebra:
    """``C*`` with convolution ``phi_j * phi_k = sum_i delta[i][j][k] phi_i``; unit epsilon."""
    prod = [(j, k, i, c) for (i, j, k, c) in C.delta_triples]
    A = FiniteAlgebra(C.field, C.dim, prod, labels=[f"f{lab}" for lab in C.labels], name=f"{C.name}*")
    unit = C.counit
    for b in A.basis():
        if A.multiply(unit, b) != b or A.multiply(b, unit) != b:
            raise CoalgebraAxiomFails("counit is not the unit of the dual algebra")
    return A


# ----------------------------------------------------------------------------
# comodules


@dataclass
class Comodule:
    """Right comodule: ``rho(m_t) = sum coaction[t][s][i] m_s ⊗ c_i``."""

    coalgebra: FiniteCoalgebra
    dim: int
    coaction: list

    @classmethod
    def from_triples(cls, C: FiniteCoalgebra, dim: int, triples):
        f = C.field
        r = [[[f.zero] * C.dim for _ in range(dim)] for _ in range(dim)]
        for t, s, i, c in triples:
            r[t][s][i] = f.add(r[t][s][i], f(c))
        return cls(C, dim, r)

    def coassociativity_failure(self):
        """``(rho ⊗ id) rho = (id ⊗ Delta) rho``, compared on ``m_s ⊗ c_a ⊗ c_b``."""
        C, f, r, q = self.coalgebra, self.coalgebra.field, self.coaction, self.dim
        n = C.dim
        for t in range(q):
            for s in range(q):
                for a in range(n):
                    for b in range(n):
                        lhs = f.zero
                        rhs = f.zero
                        for u in range(q):
                            if r[t][u][b] and r[u][s][a]:
                                lhs = f.add(lhs, f.mul(r[t][u][b], r[u][s][a]))
                        for i in range(n):
                            if r[t][s][i] and C.delta[i][a][b]:
                                rhs = f.add(rhs, f.mul(r[t][s][i], C.delta[i][a][b]))
                        if lhs != rhs:
                            return f"coassociativity at m{t}"
        return None

    def counit_failure(self):
        C, f, r, q = self.coalgebra, self.coalgebra.field, self.coaction, self.dim
        for t in range(q):
            for s in range(q):
                eps = f.zero
                for i in range(C.dim):
                    if r[t][s][i] and C.counit[i]:
                        eps = f.add(eps, f.mul(r[t][s][i], C.counit[i]))
                if eps != (f.one if s == t else f.zero):
                    return f"counit law at m{t}"
        return None

    def axiom_failure(self):
        return self.coassociativity_failure() or self.counit_failure()


def regular_comodule(C: FiniteCoalgebra) -> Comodule:
    """C coacting on itself by Delta."""
    r = [[[C.delta[t][s][i] for i in range(C.dim)] for s in range(C.dim)] for t in range(C.dim)]
    return Comodule(C, C.dim, r)


def comodule_to_module(C: FiniteCoalgebra, M: Comodule, dual: FiniteAlgebra | None = None) -> FiniteModule:
    """Left ``C*``-module with ``f.m = sum f(m_[1]) m_[0]``."""
    bad = M.axiom_failure()
    if bad is not None:
        raise ComoduleAxiomFails(bad)
    Cs = dual or dual_algebra(C)
    f = C.field
    mats = []
    for i in range(C.dim):
        m = zero_matrix(f, M.dim, M.dim)
        for t in range(M.dim):
            for s in range(M.dim):
                m[s][t] = M.coaction[t][s][i]
        mats.append(m)
    return FiniteModule(Cs, M.dim, mats, name="comodule")


@dataclass
class RationalReport:
    rational: bool  # every element has a finite coaction expansion
    rat_dim: int
    coaction: Comodule = dc_field(repr=False)
    coassociative: bool = True
    counital: bool = True
    round_trip: bool = True


def rational_check(C: FiniteCoalgebra, M: FiniteModule) -> RationalReport:
    """Reconstruct ``rho(m) = sum_i (phi_i . m) ⊗ c_i`` and test the comodule laws.

    ``f.m = sum_i f(c_i) (phi_i . m)`` is a finite expansion of the required
    shape for every m, so Rat(M) = M; coassociativity always holds, and the
    counit law holds exactly when the unit epsilon acts as the identity.
    """
    f = C.field
    q = M.dim
    r = [[[M.action[i][s][t] for i in range(C.dim)] for s in range(q)] for t in range(q)]
    com = Comodule(C, q, r)
    # membership in Rat, verified on the basis: f.m_t == sum_i f(c_i) m_[0]
    rational = True
    for i in range(C.dim):
        phi = tuple(f.one if k == i else f.zero for k in range(C.dim))
        for t, m in enumerate(M.basis()):
            expansion = lin_comb(f, [phi[k] for k in range(C.dim)],
                                 [tuple(r[t][s][k] for s in range(q)) for k in range(C.dim)], q)
            if M.act(phi, m) != expansion:
                rational = False
    coassoc = com.coassociativity_failure() is None
    counital = com.counit_failure() is None
    trip = True
    if coassoc and counital:
        back = comodule_to_module(C, com, M.algebra)
        trip = [[list(r) for r in m] for m in back.action] == [[list(r) for r in m] for m in M.action]
    return RationalReport(rational, q if rational else 0, com, coassoc, counital, trip)


# ----------------------------------------------------------------------------
# co-Frobenius


@dataclass
class CoFrobeniusWitness:
    """``j(c_t) = sum_s matrix[s][t] phi_s``."""

    matrix: list
    rank: int

    def image(self, t: int) -> tuple:
        return tuple(row[t] for row in self.matrix)


def _linearity_system(C: FiniteCoalgebra, Cs: FiniteAlgebra) -> list:
    """Rows for ``j(c_t . phi_i) = j(c_t) * phi_i``; unknown ``J[s][t]`` at ``s*n + t``."""
    f, n = C.field, C.dim
    rows = []
    for t in range(n):
        for i in range(n):
            phi = Cs.basis_element(i)
            act = C.right_action_matrix(phi)
            for r in range(n):
                row = [f.zero] * (n * n)
                # j(c_t . phi_i)[r] = sum_k act[k][t] J[r][k]
                for k in range(n):
                    if act[k][t]:
                        row[r * n + k] = f.add(row[r * n + k], act[k][t])
                # (j(c_t) * phi_i)[r] = sum_s J[s][t] (phi_s * phi_i)[r]
                for s in range(n):
                    c = Cs.basis_product(s, i)[r]
                    if c:
                        row[s * n + t] = f.sub(row[s * n + t], c)
                if any(row):
                    rows.append(row)
    return rows


def right_linear_maps(C: FiniteCoalgebra, Cs: FiniteAlgebra | None = None) -> Subspace:
    Cs = Cs or dual_algebra(C)
    n = C.dim
    return nullspace(C.field, _linearity_system(C, Cs), n * n)


def verify_witness(C: FiniteCoalgebra, w: CoFrobeniusWitness, Cs: FiniteAlgebra | None = None) -> bool:
    Cs = Cs or dual_algebra(C)
    n = C.dim
    flat = tuple(c for row in w.matrix for c in row)
    if flat not in right_linear_maps(C, Cs):
        return False
    return rank(C.field, w.matrix, n) == n == w.rank


@dataclass
class CoFrobeniusSearch:
    witness: CoFrobeniusWitness | None
    best_rank: int
    candidates_tried: int
    exhaustive: bool  # True when the whole space (finite field) was searched
    linear_maps_dim: int


def _schedule(W: Subspace, field: Field, grid_limit: int):
    d = W.dim
    one = field.one
    for k in range(d):
        yield tuple(one if i == k else field.zero for i in range(d))
    yield tuple(one for _ in range(d))
    yield tuple(field(i + 1) for i in range(d))
    coeffs = [field(c) for c in (1, -1, 2, -2)] + [field.zero]
    count = 0
    for combo in itertools.product(coeffs, repeat=d):
        if count >= grid_limit:
            return
        count += 1
        yield combo


def co_frobenius_find(C: FiniteCoalgebra, grid_limit: int = 4096, exhaustive_limit: int = 20000) -> CoFrobeniusSearch:
    """Search the right C*-linear maps ``C -> C*`` for an injective one.

    Deterministic schedule: each basis map, the sum of all, an increasing
    weighting, then a bounded grid of small coefficients.  Over a prime field
    with at most ``exhaustive_limit`` maps the whole space is enumerated
    instead, so a None result is then a proof of non-existence.
    """
    f = C.field
    n = C.dim
    Cs = dual_algebra(C)
    W = right_linear_maps(C, Cs)
    exhaustive = isinstance(f, PrimeField) and f.p ** W.dim <= exhaustive_limit
    if exhaustive:
        candidates = itertools.product(range(f.p), repeat=W.dim)
    else:
        candidates = _schedule(W, f, grid_limit)
    best, tried = 0, 0
    for coeffs in candidates:
        tried += 1
        v = lin_comb(f, coeffs, W.basis, n * n)
        J = [list(v[s * n:(s + 1) * n]) for s in range(n)]
        rk = rank(f, J, n) if W.dim else 0
        best = max(best, rk)
        if rk == n:
            w = CoFrobeniusWitness(J, rk)
            if not verify_witness(C, w, Cs):
                raise AssertionError("co-Frobenius candidate failed verification")
            return CoFrobeniusSearch(w, rk, tried, exhaustive, W.dim)
    return CoFrobeniusSearch(None, best, tried, exhaustive, W.dim)


@dataclass
class CoFrobeniusConsequences:
    jhat_left_linear: bool
    jhat_dense: bool  # the orthogonal of Im jhat is zero
    image_right_ideal: bool
    image_essential: bool
    rat_is_everything: bool
    multiplier_is_dual: bool
    rat_has_local_units: bool
    semiperfect_dense: bool


def cofrobenius_consequences(C: FiniteCoalgebra, w: CoFrobeniusWitness) -> CoFrobeniusConsequences:
    """Finite-dimensional shadow of the consequences of a co-Frobenius map."""
    Cs = dual_algebra(C)
    if not verify_witness(C, w, Cs):
        raise InvalidWitness("witness is not an injective right C*-linear map")
    f, n = C.field, C.dim
    J = w.matrix
    # jhat(c)(d) = j(d)(c): jhat(c_t) = sum_s J[t][s] phi_s
    jhat = [[J[t][s] for t in range(n)] for s in range(n)]
    left_linear = True
    for i in range(n):
        phi = Cs.basis_element(i)
        act = C.left_action_matrix(phi)
        for t in range(n):
            lhs = tuple(_compose_column(f, jhat, act, t))
            rhs = Cs.multiply(phi, tuple(jhat[s][t] for s in range(n)))
            if lhs != rhs:
                left_linear = False
    dense = rank(f, jhat, n) == n
    image = Subspace.span(f, [w.image(t) for t in range(n)], n)
    right_ideal = is_ideal(Cs, image, "right")
    # {g : g * Im j = 0} must vanish
    rows = []
    for v in image.basis:
        rows.extend(Cs.right_mult_matrix(v))
    essential = nullspace(f, rows, n).dim == 0
    rat = rational_check(C, regular_module(Cs))
    MA = compute_multiplier_algebra(Cs)
    multiplier_is_dual = MA.dim == Cs.dim and MA.unit_index is None
    return CoFrobeniusConsequences(
        jhat_left_linear=left_linear,
        jhat_dense=dense,
        image_right_ideal=right_ideal,
        image_essential=essential,
        rat_is_everything=rat.rational and rat.rat_dim == n,
        multiplier_is_dual=multiplier_is_dual,
        rat_has_local_units=bool(has_local_units(Cs)),
        semiperfect_dense=strict_closure(MA).is_full(),
    )


def _compose_column(f, jhat, act, t):
    """Column ``t`` of ``jhat o act``."""
    n = len(jhat)
    out = [f.zero] * n
    for k in range(n):
        if act[k][t]:
            for s in range(n):
                if jhat[s][k]:
                    out[s] = f.add(out[s], f.mul(jhat[s][k], act[k][t]))
    return out


def semiperfect_verdict(C: FiniteCoalgebra) -> Verdict:
    """At finite dimension the rational dual is all of C*, which is unital."""
    Cs = dual_algebra(C)
    rat = rational_check(C, regular_module(Cs))
    return Verdict(rat.rat_dim == C.dim and bool(has_local_units(Cs)))
