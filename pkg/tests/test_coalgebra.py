import pytest

from multalg.coalgebra import (
    CoFrobeniusWitness,
    Comodule,
    FiniteCoalgebra,
    co_frobenius_find,
    cofrobenius_consequences,
    comatrix,
    comodule_to_module,
    dual_algebra,
    grouplike,
    one_dim,
    rational_check,
    regular_comodule,
    right_linear_maps,
    semiperfect_verdict,
    verify_witness,
)
from multalg.errors import CoalgebraAxiomFails, ComoduleAxiomFails, InvalidWitness
from multalg.fields import GF, QQ
from multalg.fixtures import finite_functions, matrix_units
from multalg.modules import regular_module, zero_action_module


def _identity(n, f=QQ):
    return [[f.one if i == j else f.zero for j in range(n)] for i in range(n)]


@pytest.mark.parametrize("n", range(1, 7))
def test_grouplike_dual_is_pointwise_functions(n):
    assert dual_algebra(grouplike(n)).product == finite_functions(n).product


def test_comatrix_dual_is_matrix_algebra():
    assert dual_algebra(comatrix(2)).product == matrix_units(2).product


def test_bad_coalgebras_rejected():
    with pytest.raises(CoalgebraAxiomFails, match="counit"):
        FiniteCoalgebra(QQ, 1, [(0, 0, 0, 1)], [2])
    with pytest.raises(CoalgebraAxiomFails):
        FiniteCoalgebra(QQ, 2, [(0, 0, 0, 1), (1, 1, 1, 1)], [1])


@pytest.mark.parametrize("n", range(1, 7))
def test_grouplike_delta_witness(n):
    s = co_frobenius_find(grouplike(n))
    assert s.witness is not None
    assert [list(r) for r in s.witness.matrix] == _identity(n)
    assert s.witness.rank == n and verify_witness(grouplike(n), s.witness)


@pytest.mark.parametrize("field", [QQ, GF(2), GF(3)])
def test_comatrix_witness(field):
    C = comatrix(2, field)
    s = co_frobenius_find(C)
    assert s.witness is not None and s.witness.rank == 4
    assert verify_witness(C, s.witness)
    cons = cofrobenius_consequences(C, s.witness)
    assert all(vars(cons).values())


def test_linear_maps_dimension():
    assert right_linear_maps(grouplike(3)).dim == 3
    assert right_linear_maps(comatrix(2)).dim == 4


def test_invalid_witness_rejected():
    C = grouplike(2)
    with pytest.raises(InvalidWitness):
        cofrobenius_consequences(C, CoFrobeniusWitness([[QQ.one, QQ.one], [QQ.zero, QQ.zero]], 1))


def test_regular_comodule_round_trip():
    C = comatrix(2)
    com = regular_comodule(C)
    assert com.axiom_failure() is None
    M = comodule_to_module(C, com)
    rep = rational_check(C, M)
    assert rep.rational and rep.coassociative and rep.counital and rep.round_trip


def test_bad_comodule_rejected():
    C = one_dim()
    bad = Comodule.from_triples(C, 1, [(0, 0, 0, 2)])
    with pytest.raises(ComoduleAxiomFails):
        comodule_to_module(C, bad)


def test_rational_check_zero_action_not_counital():
    C = grouplike(2)
    rep = rational_check(C, zero_action_module(dual_algebra(C), 1))
    assert rep.rational and rep.coassociative and not rep.counital


def test_rational_dual_regular():
    C = comatrix(2)
    rep = rational_check(C, regular_module(dual_algebra(C)))
    assert rep.rat_dim == 4 and rep.counital


@pytest.mark.parametrize("C", [grouplike(3), comatrix(2), one_dim()], ids=["k3", "comatrix2", "k"])
def test_semiperfect(C):
    assert semiperfect_verdict(C).ok
