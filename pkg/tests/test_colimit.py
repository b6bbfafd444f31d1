import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from multalg.colimit import (
    FinSuppElement,
    LazyMultiplier,
    banded,
    density_probe,
    indicator,
    local_unit_for,
    multiplier_apply,
    multiply,
    nondegeneracy_witness,
    polynomial_diagonal,
    probe_coherence,
    probe_equal,
    random_finite_set,
    refute_unit,
)
from multalg.errors import ContractViolation, ValidationError
from multalg.fields import GF


def test_make_validates_indices():
    with pytest.raises(ValidationError):
        FinSuppElement.make("functions", {-1: 1})
    with pytest.raises(ValidationError):
        FinSuppElement.make("matrices", {3: 1})
    with pytest.raises(ValidationError):
        FinSuppElement.make("sequences", {1: 1})


def test_zero_coefficients_dropped():
    a = FinSuppElement.make("functions", {1: 0, 2: 3})
    assert a.support == frozenset({2})


def test_matrix_product():
    e12, e23 = FinSuppElement.unit(1, 2), FinSuppElement.unit(2, 3)
    assert multiply(e12, e23) == FinSuppElement.unit(1, 3)
    assert not multiply(e23, e12)


def test_mixed_families_rejected():
    with pytest.raises(ValidationError):
        multiply(FinSuppElement.delta(1), FinSuppElement.unit(1, 1))


def test_refute_unit_and_nondegeneracy():
    u = FinSuppElement.make("functions", {0: 1, 1: 1})
    w = refute_unit(u)
    assert w and not multiply(u, w)
    a = FinSuppElement.unit(2, 5)
    b = nondegeneracy_witness(a)
    assert multiply(a, b) and multiply(b, a)


def test_polynomial_multiplier_is_unbounded_but_local():
    x = polynomial_diagonal([0, 0, 1])  # n -> n^2
    a = FinSuppElement.make("functions", {3: 1, 10: 2})
    assert multiplier_apply(x, a).as_dict() == {3: 9, 10: 200}


def test_banded_left_and_right():
    x = banded(lambda i, j: 1 + i + 2 * j, 1)
    a = FinSuppElement.unit(4, 4)
    left = multiplier_apply(x, a, "left")
    right = multiplier_apply(x, a, "right")
    assert left.support == frozenset({(3, 4), (4, 4), (5, 4)})
    assert right.support == frozenset({(4, 3), (4, 4), (4, 5)})


def test_contract_violation_outside_probe():
    x = LazyMultiplier("functions", lambda P: {max(P) + 1: 1}, name="leaky")
    with pytest.raises(ContractViolation):
        multiplier_apply(x, FinSuppElement.delta(2))


def test_contract_violation_support():
    x = LazyMultiplier("matrices", lambda P: {(i, j): 1 for i in P for j in P},
                       row_support=lambda i: {i}, col_support=lambda j: {j}, name="full")
    with pytest.raises(ContractViolation):
        multiplier_apply(x, FinSuppElement.unit(1, 2))


def test_incoherent_evaluator_detected():
    x = LazyMultiplier("functions", lambda P: {n: len(P) for n in P}, name="size-dependent")
    with pytest.raises(ContractViolation):
        multiplier_apply(x, FinSuppElement.delta(0))


def test_matrices_need_supports():
    with pytest.raises(ContractViolation):
        LazyMultiplier("matrices", lambda P: {})


def test_indicator_subset_probe():
    x = indicator("functions", {1, 2})
    F = [FinSuppElement.make("functions", {0: 1, 1: 2, 2: 3})]
    y = density_probe(x, F)
    assert y.as_dict() == {1: 1, 2: 1}  # the restriction of 1_S to the touched indices


def test_probe_equal_distinguishes():
    F = [FinSuppElement.delta(5)]
    assert probe_equal(indicator("functions"), polynomial_diagonal([1]), F)
    assert not probe_equal(indicator("functions"), polynomial_diagonal([0, 1]), F)


@pytest.mark.parametrize("family", ["functions", "matrices"])
@given(seed=st.integers(0, 10_000))
def test_local_units_on_random_sets(family, seed):
    rng = random.Random(seed)
    F = random_finite_set(rng, family, field=GF(5))
    e = local_unit_for(F)
    for a in F:
        assert multiply(e, a) == a == multiply(a, e)
    w = refute_unit(e)
    assert w and not multiply(e, w)


@pytest.mark.parametrize("family", ["functions", "matrices"])
def test_density_probe_coherence(family):
    rng = random.Random(42)
    mults = [indicator(family), polynomial_diagonal([1, 2], family)]
    if family == "matrices":
        mults.append(banded(lambda i, j: i - j + 3, 2))
    for _ in range(10):
        F = random_finite_set(rng, family)
        F2 = F + random_finite_set(rng, family)
        for x in mults:
            assert probe_coherence(x, F, F2)
