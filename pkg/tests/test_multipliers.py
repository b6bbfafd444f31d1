import pytest
from hypothesis import given
from hypothesis import strategies as st

from multalg.errors import DegenerateProduct, NondegeneracyConditionFails, NoUnit, NotAnIdeal
from multalg.fields import GF, QQ
from multalg.fixtures import (
    battery,
    direct_sum,
    worked_example,
    finite_functions,
    matrix_units,
    subalgebra_of_matrix_units,
    upper_triangular,
    zero_algebra,
)
from multalg.linalg import Subspace
from multalg.multipliers import (
    Multiplier,
    compute_left_multipliers,
    compute_multiplier_algebra,
    compute_right_multipliers,
    completion_sanity,
    element_multiplier,
    embedding_is_homomorphism,
    essential_ideal_check,
    flatten,
    ideal_law_holds,
    identity_multiplier,
    lemma_identities_hold,
    multiplier_space,
    pullback_check,
    realize_in_unital,
    star_on_multipliers,
    strict_closure,
    universal_map,
    unflatten,
)

BATTERY = battery()


def _span(B, labels):
    return Subspace.span(B.field, [B.basis_element(B.labels.index(l)) for l in labels], B.dim)


def test_flatten_round_trip():
    m = ((1, 2), (3, 4))
    assert unflatten(flatten(m), 2) == m


def test_element_multipliers_lie_in_M():
    A = worked_example()
    MA = compute_multiplier_algebra(A)
    for a in A.basis():
        assert MA.coordinates(element_multiplier(A, a)) == MA.embed(a)


def test_unit_is_identity_pair():
    MA = compute_multiplier_algebra(worked_example())
    assert MA.multiplier(MA.unit) == identity_multiplier(MA.base)


# frozen values for a few fixtures: (dim A, dim L, dim R, dim M)
FROZEN = {
    "worked_example": (worked_example, 5, 7, 7, 6),
    "M2": (lambda: matrix_units(2), 4, 4, 4, 4),
    "UT3": (lambda: upper_triangular(3), 6, 6, 6, 6),
    "K3": (lambda: finite_functions(3), 3, 3, 3, 3),
}


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_frozen_dimensions(name):
    make, n, l, r, m = FROZEN[name]
    A = make()
    assert (A.dim, compute_left_multipliers(A).dim, compute_right_multipliers(A).dim,
            compute_multiplier_algebra(A).dim) == (n, l, r, m)


def test_multiplier_space_even_when_degenerate():
    A = zero_algebra(1)
    assert multiplier_space(A).dim == 2  # any (lambda, rho) works when all products vanish
    with pytest.raises(DegenerateProduct):
        compute_multiplier_algebra(A)


def test_product_convention():
    """lambda composes forwards and rho backwards."""
    A = worked_example()
    MA = compute_multiplier_algebra(A)
    x, y = A.basis_element(1), A.basis_element(3)  # e12, e23
    prod = MA.multiply(MA.embed(x), MA.embed(y))
    assert prod == MA.embed(A.multiply(x, y))


@pytest.mark.parametrize("name, A", BATTERY, ids=[n for n, _ in BATTERY])
def test_multiplier_ring_axioms(name, A):
    MA = compute_multiplier_algebra(A)
    assert MA.multiplier(MA.unit) == identity_multiplier(A)
    assert lemma_identities_hold(MA).ok
    assert embedding_is_homomorphism(MA)
    assert ideal_law_holds(MA)
    assert essential_ideal_check(MA, MA.embedded_subspace()).ok
    pb = pullback_check(A)
    assert pb.equals_multiplier_space and pb.dim_pullback == MA.dim
    assert completion_sanity(MA)


def test_star_on_multipliers():
    MA = compute_multiplier_algebra(matrix_units(2, star=True))
    S = star_on_multipliers(MA)
    assert S.has_star and S.dim == 4


def test_universal_map_essential_ideal():
    B = upper_triangular(3)
    u = universal_map(B, _span(B, ["e11", "e12", "e13", "e23", "e33"]))
    assert u.injective and u.essential and u.unital and u.multiplicative and u.restricts_to_embedding
    assert u.multiplier_algebra.dim == B.dim


def test_universal_map_kernel_is_annihilator():
    B = direct_sum(matrix_units(2), matrix_units(1))
    u = universal_map(B, Subspace.span(QQ, [B.basis_element(i) for i in range(4)], 5))
    assert not u.injective and not u.essential and u.kernel.dim == 1
    assert u.unital and u.multiplicative


def test_universal_map_rejects_non_ideal_and_non_unital():
    M3 = matrix_units(3)
    with pytest.raises(NotAnIdeal):
        universal_map(M3, _span(M3, ["e11"]))
    A = worked_example()
    with pytest.raises(NoUnit):
        universal_map(A, _span(A, ["e13"]))


def test_realize_needs_nondegenerate_position():
    M3 = matrix_units(3)
    with pytest.raises(NondegeneracyConditionFails):
        realize_in_unital(M3, _span(M3, ["e11"]))


def test_strict_closure_sides_on_example():
    MA = compute_multiplier_algebra(worked_example())
    emb = MA.embedded_subspace()
    assert strict_closure(MA, "both") == emb
    with pytest.raises(ValueError):
        strict_closure(MA, "up")


@given(st.sampled_from(BATTERY))
def test_multipliers_closed_under_product(item):
    name, A = item
    MA = compute_multiplier_algebra(A)
    for x in MA.algebra.basis():
        for y in MA.algebra.basis():
            m = MA.multiplier(x).compose(A, MA.multiplier(y))
            assert MA.coordinates(m) == MA.multiply(x, y)


def test_multiplier_dataclass_vector():
    m = Multiplier(((1,),), ((2,),))
    assert Multiplier.from_vector(m.vector(), 1) == m


def test_gf2_example_matches_q():
    assert compute_multiplier_algebra(worked_example(GF(2))).dim == 6


def test_unital_algebra_is_its_own_multiplier_algebra():
    A = subalgebra_of_matrix_units(3, [(1, 1), (1, 3), (3, 3)])  # a copy of UT2, unit e11 + e33
    MA = compute_multiplier_algebra(A)
    assert MA.dim == 3 and MA.unit_index is None
