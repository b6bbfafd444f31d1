from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from multalg.errors import DimensionMismatch, NoSolution
from multalg.fields import GF, QI, QQ, field_from_name
from multalg.linalg import (
    Subspace,
    _rref_generic,
    image,
    mat_vec,
    nullspace,
    preimage,
    rank,
    rref_with_pivots,
    solve,
)

FIELDS = [QQ, GF(2), GF(7), QI]


@pytest.mark.parametrize("name", ["Q", "Qi", "GF:2", "GF:101"])
def test_field_names_round_trip(name):
    assert field_from_name(name).name == name


@pytest.mark.parametrize("bad", ["GF:4", "GF:1", "R", "GF:x"])
def test_bad_field_names(bad):
    with pytest.raises(ValueError):
        field_from_name(bad)


@pytest.mark.parametrize(
    "field, text, expected",
    [(QQ, "3/4", Fraction(3, 4)), (GF(5), "1/2", 3), (GF(5), "-1", 4), (QI, "2+5i", QI.parse("5i+2"))],
)
def test_parse(field, text, expected):
    assert field.parse(text) == expected


@pytest.mark.parametrize("field", FIELDS)
def test_parse_format_round_trip(field):
    for x in list(field.elements())[:20] if hasattr(field, "p") else [field.parse(t) for t in ("0", "1", "-3/7")]:
        assert field.parse(field.format(x)) == x


def test_gaussian_conjugation():
    z = QI.parse("2+5i")
    assert QI.conj(z) == QI.parse("2-5i")
    assert QI.mul(z, QI.inv(z)) == QI.one


def test_gf_rejects_zero_inverse():
    with pytest.raises(ZeroDivisionError):
        GF(3).inv(0)


small_q = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@given(st.lists(st.lists(small_q, min_size=4, max_size=4), min_size=1, max_size=5))
def test_rank_nullity_over_q(rows):
    ker = nullspace(QQ, rows, 4)
    assert rank(QQ, rows, 4) + ker.dim == 4
    for v in ker.basis:
        assert not any(mat_vec(QQ, rows, v))


@given(st.sampled_from([2, 3, 5]),
       st.lists(st.lists(st.integers(0, 20), min_size=5, max_size=5), min_size=1, max_size=6))
def test_modp_rref_matches_generic(p, rows):
    """The GF(p) kernel route and the field-generic route give the same rref."""
    F = GF(p)
    rows = [[x % p for x in r] for r in rows]
    assert rref_with_pivots(F, rows, 5) == _rref_generic(F, rows, 5)


@given(st.lists(st.lists(small_q, min_size=3, max_size=3), min_size=3, max_size=3),
       st.lists(small_q, min_size=3, max_size=3))
def test_solve_or_refuse(m, x):
    b = mat_vec(QQ, m, x)
    sol = solve(QQ, m, b, 3)
    assert mat_vec(QQ, m, sol) == b


def test_solve_inconsistent():
    with pytest.raises(NoSolution):
        solve(QQ, [[1, 0], [1, 0]], [1, 2], 2)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        rref_with_pivots(QQ, [[1, 2], [1]], 2)


def test_subspace_canonical_and_membership():
    a = Subspace.span(QQ, [[1, 1, 0], [0, 1, 1]], 3)
    b = Subspace.span(QQ, [[1, 2, 1], [1, 0, -1]], 3)
    assert a == b and a.dim == 2
    assert (2, 3, 1) in a and (1, 0, 0) not in a
    assert a.coordinates((1, 2, 1)) is not None
    assert a.intersect(Subspace.span(QQ, [[1, 0, 0], [0, 1, 0]], 3)).dim == 1


def test_image_and_preimage():
    m = [[1, 0, 0], [0, 0, 0]]  # project to first coordinate
    full = Subspace.full(QQ, 3)
    assert image(QQ, m, full).dim == 1
    assert preimage(QQ, m, Subspace.zero(QQ, 2), 3).dim == 2
