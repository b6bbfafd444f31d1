"""Algebraic laws over random associative algebras.

Random algebras are spans of multiplicatively closed sets of matrix units,
so they are associative by construction.
"""

from hypothesis import assume, given
from hypothesis import strategies as st

from multalg.algebra import check_nondegenerate
from multalg.fields import GF, QI, QQ
from multalg.fixtures import closed_unit_sets, direct_sum, subalgebra_of_matrix_units
from multalg.local_units import find_unit, firm_ring_check, has_local_units
from multalg.multipliers import (
    compute_left_multipliers,
    compute_multiplier_algebra,
    compute_right_multipliers,
    density_test,
    embedding_is_homomorphism,
    ideal_law_holds,
    lemma_identities_hold,
    multiplier_space,
    pullback_check,
    strict_closure,
)

UNIT_SETS = closed_unit_sets(3, 5)
# for matrix-unit spans non-degeneracy is combinatorial, hence field independent
NONDEGENERATE_SETS = [u for u in UNIT_SETS if check_nondegenerate(subalgebra_of_matrix_units(3, u)).ok]
FIELDS = st.sampled_from([QQ, GF(2), GF(3), QI])


@st.composite
def algebras(draw, nondegenerate=False, field=None):
    units = draw(st.sampled_from(NONDEGENERATE_SETS if nondegenerate else UNIT_SETS))
    return subalgebra_of_matrix_units(3, units, field or draw(FIELDS))


@given(st.sampled_from(UNIT_SETS), FIELDS)
def test_nondegeneracy_is_field_independent(units, field):
    A = subalgebra_of_matrix_units(3, units, field)
    assert check_nondegenerate(A).ok == (units in NONDEGENERATE_SETS)


@given(algebras())
def test_opposite_swaps_left_and_right(A):
    Aop = A.opposite()
    assert compute_left_multipliers(Aop).dim == compute_right_multipliers(A).dim
    assert multiplier_space(Aop).dim == multiplier_space(A).dim


@given(algebras(nondegenerate=True))
def test_multiplier_algebra_laws(A):
    MA = compute_multiplier_algebra(A)
    assert MA.dim >= A.dim
    assert lemma_identities_hold(MA).ok
    assert embedding_is_homomorphism(MA) and ideal_law_holds(MA)
    pb = pullback_check(A)
    assert pb.equals_multiplier_space and pb.dim_pullback == MA.dim
    # M(A) is unital and its own multiplier algebra
    MM = compute_multiplier_algebra(MA.algebra)
    assert MM.dim == MA.dim


@given(algebras(nondegenerate=True))
def test_unital_iff_multiplier_algebra_is_A(A):
    MA = compute_multiplier_algebra(A)
    assert (find_unit(A) is not None) == (MA.dim == A.dim)


@given(st.data(), FIELDS)
def test_multiplier_algebra_of_direct_sum(data, field):
    A = data.draw(algebras(nondegenerate=True, field=field))
    B = data.draw(algebras(nondegenerate=True, field=field))
    S = direct_sum(A, B)
    assert compute_multiplier_algebra(S).dim == compute_multiplier_algebra(A).dim + compute_multiplier_algebra(B).dim


@given(algebras(nondegenerate=True))
def test_density_matches_local_units(A):
    for side in ("both", "left", "right"):
        assert density_test(A, side, cross_check=False).ok == has_local_units(A, side).ok


@given(algebras(nondegenerate=True))
def test_strict_closure_contains_A(A):
    MA = compute_multiplier_algebra(A)
    assert strict_closure(MA).contains_subspace(MA.embedded_subspace())


@given(algebras())
def test_unital_algebras_are_firm(A):
    assume(find_unit(A) is not None)
    rep = firm_ring_check(A)
    assert rep.firm and rep.tensor_dim == A.dim
