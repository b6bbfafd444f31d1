import pytest
from hypothesis import given
from hypothesis import strategies as st

from multalg.algebra import FiniteAlgebra, check_idempotent, check_nondegenerate, is_ideal
from multalg.errors import ValidationError
from multalg.fields import GF, QI, QQ
from multalg.fixtures import (
    battery,
    closed_unit_sets,
    direct_sum,
    worked_example,
    finite_functions,
    matrix_units,
    subalgebra_of_matrix_units,
    zero_algebra,
)
from multalg.linalg import Subspace


def test_non_associative_rejected_with_triple():
    with pytest.raises(ValidationError, match=r"\(b0, b0, b0\)"):
        FiniteAlgebra(QQ, 2, [(0, 0, 1, 1), (1, 0, 1, 1)])


def test_unclosed_unit_set_rejected():
    with pytest.raises(ValidationError, match="not multiplicatively closed"):
        subalgebra_of_matrix_units(3, [(1, 2), (2, 3)])


def test_star_must_be_involutive():
    with pytest.raises(ValidationError):
        FiniteAlgebra(QQ, 1, [(0, 0, 0, 1)], star=[[2]])


def test_multiplication_example():
    A = worked_example()
    e12, e23 = A.basis_element(1), A.basis_element(3)
    assert A.format_element(A.multiply(e12, e23)) == "e13"
    assert not any(A.multiply(e23, e12))


def test_opposite_reverses_products():
    A = worked_example()
    Aop = A.opposite()
    for i in range(A.dim):
        for j in range(A.dim):
            assert Aop.basis_product(i, j) == A.basis_product(j, i)


def test_left_degenerate_example():
    """span{e11, e12}: e12 kills everything from the left side of the definition."""
    A = subalgebra_of_matrix_units(2, [(1, 1), (1, 2)])
    v = check_nondegenerate(A)
    assert not v.ok
    assert v.detail["failed_side"] == "left"
    assert A.format_element(v.witness) == "e12"
    assert v.detail["right"]


def test_zero_algebra_degenerate_and_not_idempotent():
    A = zero_algebra(2)
    assert not check_nondegenerate(A).ok
    assert not check_idempotent(A).ok


def test_battery_is_nondegenerate_and_large():
    items = battery()
    assert len(items) >= 20
    assert len({A.field.name for _, A in items}) >= 3
    for name, A in items:
        assert check_nondegenerate(A).ok, name


def test_ideal_detection():
    M3 = matrix_units(3)
    A = worked_example()
    first_row = Subspace.span(QQ, [M3.basis_element(i) for i in range(3)], 9)
    assert is_ideal(M3, first_row, "right")
    assert not is_ideal(M3, first_row, "left")
    assert not is_ideal(A, Subspace.span(QQ, [A.basis_element(0)], 5))


def test_direct_sum_labels_and_unit_block():
    S = direct_sum(finite_functions(2), matrix_units(1))
    assert S.dim == 3


def test_subalgebra_inclusion_is_multiplicative():
    M3 = matrix_units(3, GF(3))
    S = Subspace.span(GF(3), [M3.basis_element(i) for i in (0, 1, 4)], 9)  # e11 e12 e22
    sub, inc = M3.subalgebra(S)
    assert sub.dim == 3


@given(st.sampled_from(closed_unit_sets(3, 4)), st.sampled_from([QQ, GF(2), QI]))
def test_random_matrix_unit_algebras_associative(units, field):
    A = subalgebra_of_matrix_units(3, units, field)
    assert A.associativity_failure() is None


@given(st.sampled_from([m for _, m in battery() if m.has_star]))
def test_star_is_antimultiplicative(A):
    for x in A.basis():
        for y in A.basis():
            assert A.star(A.multiply(x, y)) == A.multiply(A.star(y), A.star(x))
