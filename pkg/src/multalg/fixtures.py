"""Built-in algebras.

Random or "generic" algebras are always subsets of matrix units closed under
the partial product ``e_ij e_kl = delta_jk e_il``, which makes them
associative by construction.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterable, Sequence

from .algebra import FiniteAlgebra
from .errors import ValidationError
from .fields import GF, QI, QQ, Field


def unit_label(i: int, j: int, n: int) -> str:
    return f"e{i}{j}" if n <= 9 else f"e{i}_{j}"


def _closure_failure(units: Sequence[tuple]):
    s = set(units)
    for (i, j) in units:
        for (k, l) in units:
            if j == k and (i, l) not in s:
                return (i, j), (k, l)
    return None


def subalgebra_of_matrix_units(
    n: int,
    units: Iterable[tuple],
    field: Field = QQ,
    star: bool = False,
    name: str | None = None,
) -> FiniteAlgebra:
    """Span of the chosen matrix units ``(i, j)`` (1-based) inside ``M_n``.

    With ``star=True`` the involution is the conjugate transpose, which needs
    the unit set to be closed under transposition.
    """
    if n < 1:
        raise ValidationError("n must be at least 1")
    units = sorted(set((int(i), int(j)) for i, j in units))
    for i, j in units:
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValidationError(f"matrix unit e{i}{j} outside M_{n}")
    bad = _closure_failure(units)
    if bad is not None:
        (i, j), (k, l) = bad
        raise ValidationError(
            f"unit set not multiplicatively closed: e{i}{j} e{k}{l} = e{i}{l} is missing"
        )
    index = {u: pos for pos, u in enumerate(units)}
    prod = []
    for (i, j), a in index.items():
        for (k, l), b in index.items():
            if j == k:
                prod.append((a, b, index[(i, l)], field.one))
    star_matrix = None
    if star:
        m = len(units)
        star_matrix = [[field.zero] * m for _ in range(m)]
        for (i, j), a in index.items():
            if (j, i) not in index:
                raise ValidationError(f"unit set not closed under transpose (e{j}{i} missing)")
            star_matrix[a][index[(j, i)]] = field.one
    labels = [unit_label(i, j, n) for i, j in units]
    return FiniteAlgebra(field, len(units), prod, labels=labels, star=star_matrix, name=name)


def matrix_units(n: int, field: Field = QQ, star: bool = False) -> FiniteAlgebra:
    """The full matrix algebra ``M_n`` in the matrix-unit basis."""
    units = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    return subalgebra_of_matrix_units(n, units, field, star=star, name=f"M{n}")


def upper_triangular(n: int, field: Field = QQ) -> FiniteAlgebra:
    units = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    return subalgebra_of_matrix_units(n, units, field, name=f"UT{n}")


WORKED_EXAMPLE_UNITS = ((1, 1), (1, 2), (1, 3), (2, 3), (3, 3))


def worked_example(field: Field = QQ) -> FiniteAlgebra:
    """Upper-triangular 3x3 matrices with zero middle diagonal entry.

    Basis ``e11, e12, e13, e23, e33``: idempotent and non-degenerate, but
    without a unit.
    """
    return subalgebra_of_matrix_units(3, WORKED_EXAMPLE_UNITS, field, name="worked_example")


def corner_algebra(n: int, field: Field = QQ) -> FiniteAlgebra:
    """First row, last column and ``e_nn`` of ``M_n``; ``worked_example`` is ``n = 3``."""
    if n < 2:
        raise ValidationError("corner_algebra needs n >= 2")
    units = {(1, j) for j in range(1, n + 1)} | {(i, n) for i in range(1, n + 1)}
    return subalgebra_of_matrix_units(n, units, field, name=f"corner{n}")


def finite_functions(X, field: Field = QQ, star: bool = False) -> FiniteAlgebra:
    """Functions on a finite set with pointwise product, basis ``delta_x``.

    ``X`` is either a size or an iterable of point names.
    """
    points = [str(x) for x in (range(X) if isinstance(X, int) else X)]
    if not points:
        raise ValidationError("X must be nonempty")
    n = len(points)
    prod = [(i, i, i, field.one) for i in range(n)]
    star_matrix = None
    if star:
        star_matrix = [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
    return FiniteAlgebra(
        field, n, prod, labels=[f"d{p}" for p in points], star=star_matrix, name=f"K({n})"
    )


def zero_algebra(n: int, field: Field = QQ) -> FiniteAlgebra:
    """``n``-dimensional algebra with identically zero product."""
    return FiniteAlgebra(field, n, [], labels=[f"z{i}" for i in range(n)], name=f"zero{n}")


def direct_sum(A: FiniteAlgebra, B: FiniteAlgebra, name: str | None = None) -> FiniteAlgebra:
    """Product algebra ``A x B``; labels get ``L.``/``R.`` prefixes on clashes."""
    if A.field != B.field:
        raise ValidationError("direct sum of algebras over different fields")
    n = A.dim
    prod = list(A.product) + [(i + n, j + n, k + n, c) for (i, j, k, c) in B.product]
    labels = list(A.labels) + list(B.labels)
    if len(set(labels)) != len(labels):
        labels = [f"L.{x}" for x in A.labels] + [f"R.{x}" for x in B.labels]
    star = None
    if A.has_star and B.has_star:
        m = A.dim + B.dim
        star = [[A.field.zero] * m for _ in range(m)]
        for i, row in enumerate(A.star_matrix):
            for j, c in enumerate(row):
                star[i][j] = c
        for i, row in enumerate(B.star_matrix):
            for j, c in enumerate(row):
                star[i + n][j + n] = c
    return FiniteAlgebra(A.field, A.dim + B.dim, prod, labels=labels, star=star,
                         name=name or f"{A.name}+{B.name}")


# ----------------------------------------------------------------------------
# closed matrix-unit subsets used by the exhaustive GF(2) oracle


def closed_unit_sets(n: int, max_size: int) -> list:
    """Multiplicatively closed sets of matrix units of ``M_n`` of size <= max_size,
    one representative per orbit under simultaneous index permutation."""
    all_units = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    seen = set()
    reps = []
    for size in range(1, max_size + 1):
        for subset in combinations(all_units, size):
            if _closure_failure(subset) is not None:
                continue
            canon = min(
                tuple(sorted((perm[i - 1], perm[j - 1]) for i, j in subset))
                for perm in permutations(range(1, n + 1))
            )
            if canon in seen:
                continue
            seen.add(canon)
            reps.append(canon)
    return reps


# Published list: closed matrix-unit subsets of M_3 of size <= 3, up to index
# permutation (generated by closed_unit_sets(3, 3) and frozen here).
ORACLE_UNIT_SETS = (
    ((1, 1),),
    ((1, 2),),
    ((1, 1), (1, 2)),
    ((1, 1), (2, 1)),
    ((1, 1), (2, 2)),
    ((1, 1), (2, 3)),
    ((1, 2), (1, 3)),
    ((1, 2), (3, 2)),
    ((1, 1), (1, 2), (1, 3)),
    ((1, 1), (1, 2), (2, 2)),
    ((1, 1), (1, 2), (3, 2)),
    ((1, 1), (1, 2), (3, 3)),
    ((1, 1), (2, 1), (2, 3)),
    ((1, 1), (2, 1), (3, 1)),
    ((1, 1), (2, 1), (3, 3)),
    ((1, 1), (2, 2), (3, 3)),
    ((1, 2), (1, 3), (2, 3)),
)


def oracle_fixtures(field: Field = None) -> list:
    """``(name, algebra)`` for every entry of ``ORACLE_UNIT_SETS`` over GF(2)."""
    field = field or GF(2)
    out = []
    for units in ORACLE_UNIT_SETS:
        name = "{" + ",".join(f"e{i}{j}" for i, j in units) + "}"
        out.append((name, subalgebra_of_matrix_units(3, units, field, name=name)))
    return out


# ----------------------------------------------------------------------------
# the battery of non-degenerate fixtures


def battery() -> list:
    """``(name, algebra)`` pairs: non-degenerate fixtures over mixed fields."""
    items = [
        ("worked_example/Q", worked_example(QQ)),
        ("worked_example/GF2", worked_example(GF(2))),
        ("worked_example/Qi", worked_example(QI)),
        ("worked_example^op/Q", worked_example(QQ).opposite()),
        ("corner4/Q", corner_algebra(4, QQ)),
        ("corner4/GF2", corner_algebra(4, GF(2))),
        ("M1/Q", matrix_units(1, QQ)),
        ("M2/Q", matrix_units(2, QQ)),
        ("M2/GF3", matrix_units(2, GF(3))),
        ("M2*/Qi", matrix_units(2, QI, star=True)),
        ("M3/Q", matrix_units(3, QQ)),
        ("M3/GF2", matrix_units(3, GF(2))),
        ("UT2/Q", upper_triangular(2, QQ)),
        ("UT3/GF5", upper_triangular(3, GF(5))),
        ("UT3/Qi", upper_triangular(3, QI)),
        ("K1/Q", finite_functions(1, QQ)),
        ("K3/Q", finite_functions(3, QQ)),
        ("K4/GF2", finite_functions(4, GF(2))),
        ("K2*/Qi", finite_functions(2, QI, star=True)),
        ("{e11,e13,e33}/Q", subalgebra_of_matrix_units(3, [(1, 1), (1, 3), (3, 3)], QQ)),
        ("worked_example+M1/Q", direct_sum(worked_example(QQ), matrix_units(1, QQ))),
        ("K2+M2/GF3", direct_sum(finite_functions(2, GF(3)), matrix_units(2, GF(3)))),
        ("P(2,1)/GF3",
         subalgebra_of_matrix_units(3, [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (2, 3), (3, 3)], GF(3))),
    ]
    return items


FIXTURES = {
    "worked_example": worked_example,
    "matrix_units2": lambda field=QQ: matrix_units(2, field),
    "matrix_units3": lambda field=QQ: matrix_units(3, field),
    "upper_triangular3": lambda field=QQ: upper_triangular(3, field),
    "finite_functions3": lambda field=QQ: finite_functions(3, field),
    "corner4": lambda field=QQ: corner_algebra(4, field),
    "zero1": lambda field=QQ: zero_algebra(1, field),
}


def module_battery() -> list:
    """``(name, A, M)`` left modules over unital algebras, with and without the
    firm / idempotent / local-unit / density properties."""
    from .modules import column_module, invariant_row_sets, module_direct_sum, regular_module, zero_action_module

    out = []
    for aname, A, n in [("M2", matrix_units(2), 2), ("M3", matrix_units(3), 3),
                        ("UT3", upper_triangular(3), 3), ("M2/GF3", matrix_units(2, GF(3)), 2)]:
        for rows in invariant_row_sets(A, n):
            out.append((f"{aname}:col{rows}", A, column_module(A, n, rows)))
        out.append((f"{aname}:regular", A, regular_module(A)))
        out.append((f"{aname}:col+zero", A, module_direct_sum(column_module(A, n), zero_action_module(A, 1))))
    K = finite_functions(3)
    out.append(("K3:regular", K, regular_module(K)))
    out.append(("K3:zero", K, zero_action_module(K, 2)))
    return out
