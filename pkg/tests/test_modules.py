import pytest

from multalg.errors import NoLocalUnits, ValidationError
from multalg.fields import QQ
from multalg.fixtures import battery, worked_example, matrix_units, module_battery
from multalg.local_units import firm_ring_check
from multalg.modules import (
    FiniteModule,
    column_module,
    counit,
    eta_inverse_regular,
    extension_of_scalars,
    hom_adjunction_check,
    invariant_row_sets,
    is_unital_module,
    module_equivalences,
    multiplier_regular_actions,
    regular_module,
    tensor_over_A,
    triangle_identities,
)
from multalg.multipliers import compute_multiplier_algebra, is_idempotent

BATTERY = battery()


MODULES = module_battery()


def test_enough_module_fixtures():
    assert len(MODULES) >= 10
    verdicts = {module_equivalences(A, M).firm for _, A, M in MODULES}
    assert verdicts == {True, False}


@pytest.mark.parametrize("name, A, M", MODULES, ids=[m[0] for m in MODULES])
def test_four_conditions_coincide(name, A, M):
    assert module_equivalences(A, M).agree


def test_equivalences_need_local_units():
    A = worked_example()
    with pytest.raises(NoLocalUnits):
        module_equivalences(A, regular_module(A))


def test_non_associative_action_rejected():
    A = matrix_units(2)
    bad = [[[QQ.one, QQ.zero], [QQ.zero, QQ.zero]] for _ in range(4)]
    with pytest.raises(ValidationError):
        FiniteModule(A, 2, bad)


def test_example_column_modules():
    """Frozen tensor dimensions for A ⊗_A M over the worked example."""
    A = worked_example()
    assert invariant_row_sets(A, 3) == [[1], [1, 2], [1, 2, 3]]
    got = []
    for rows in invariant_row_sets(A, 3):
        t = tensor_over_A(A, column_module(A, 3, rows))
        got.append((t.dim, t.firm))
    assert got == [(1, True), (1, False), (3, True)]


def test_extension_triangles_and_adjunction():
    A = worked_example()
    MA = compute_multiplier_algebra(A)
    N = multiplier_regular_actions(MA)
    assert is_unital_module(MA, N, MA.dim)
    for rows in invariant_row_sets(A, 3):
        M = column_module(A, 3, rows)
        ext = extension_of_scalars(MA, M)
        assert ext.unital
        tri = triangle_identities(MA, M, N, MA.dim)
        assert tri.first and tri.second
        assert hom_adjunction_check(MA, M, N, MA.dim).ok


def test_counit_is_surjective_on_unital_module():
    MA = compute_multiplier_algebra(worked_example())
    ext, eps = counit(MA, multiplier_regular_actions(MA), MA.dim)
    assert len(eps) == MA.dim


@pytest.mark.parametrize("name, A", BATTERY, ids=[n for n, _ in BATTERY])
def test_eta_iso_and_tensor_square_firm(name, A):
    if not is_idempotent(A):
        pytest.skip("not idempotent")
    rep = eta_inverse_regular(compute_multiplier_algebra(A))
    assert rep["eta_bijective"] and rep["inverse_left"] and rep["inverse_right"]
    assert firm_ring_check(A).tensor_square_firm


def test_extension_rejects_foreign_module():
    with pytest.raises(ValidationError):
        extension_of_scalars(matrix_units(2), regular_module(matrix_units(3)))
