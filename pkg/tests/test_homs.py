import itertools
import random

import pytest

from multalg.errors import BimoduleAxiomFails, NondegeneracyFails, ValidationError
from multalg.fields import QQ
from multalg.fixtures import direct_sum, worked_example, finite_functions, matrix_units, upper_triangular
from multalg.homs import (
    NonDegenerateHom,
    bimodule_axiom_failure,
    bimodule_to_hom,
    check_nondegenerate_hom,
    diagonal_hom,
    extend_hom,
    functoriality_check,
    hom_to_bimodule,
    identity_hom,
    inclusion_hom,
    pullback_hom,
)
from multalg.linalg import Subspace
from multalg.multipliers import compute_multiplier_algebra, realize_in_unital


def _span(B, labels):
    return Subspace.span(B.field, [B.basis_element(B.labels.index(l)) for l in labels], B.dim)


def _sub(B, labels):
    S = _span(B, labels)
    A, _ = B.subalgebra(S)
    return A, S


def _assert_good_extension(gamma):
    ext = extend_hom(gamma)
    assert ext.unital and ext.multiplicative and ext.restricts
    return ext


def test_example_into_m3():
    M3 = matrix_units(3)
    A, S = _sub(M3, ["e11", "e12", "e13", "e23", "e33"])
    gamma = inclusion_hom(A, M3, S)
    assert check_nondegenerate_hom(gamma).ok
    ext = _assert_good_extension(gamma)
    # the image of M(A) is the realization inside M3 (upper triangular matrices)
    R = realize_in_unital(M3, S).subspace
    MB = ext.target
    images = Subspace.span(QQ, [ext(x) for x in ext.source.algebra.basis()], MB.dim)
    assert images == Subspace.span(QQ, [MB.embed(r) for r in R.basis], MB.dim)


def test_example_into_ut3_is_degenerate():
    UT3 = upper_triangular(3)
    A, S = _sub(UT3, ["e11", "e12", "e13", "e23", "e33"])
    gamma = inclusion_hom(A, UT3, S)
    v = check_nondegenerate_hom(gamma)
    assert not v.ok and v.detail["gamma_A_B"].dim == 5
    with pytest.raises(NondegeneracyFails):
        extend_hom(gamma)


def test_identity_extends_to_identity():
    A = worked_example()
    MA = compute_multiplier_algebra(A)
    ext = extend_hom(identity_hom(A, MA), MA)
    n = MA.dim
    assert [list(r) for r in ext.matrix] == [[QQ.one if i == j else QQ.zero for j in range(n)] for i in range(n)]


def test_bimodule_round_trip():
    M3 = matrix_units(3)
    A, S = _sub(M3, ["e11", "e12", "e13", "e23", "e33"])
    gamma = inclusion_hom(A, M3, S)
    bm = hom_to_bimodule(gamma)
    assert bimodule_axiom_failure(bm) is None
    back = bimodule_to_hom(bm)
    assert [list(r) for r in back.matrix] == [list(r) for r in gamma.matrix]


def test_bimodule_axiom_failure_detected():
    M2 = matrix_units(2)
    gamma = identity_hom(M2)
    bm = hom_to_bimodule(gamma)
    swapped = type(bm)(bm.algebra, bm.base, bm.right, bm.left)
    if bimodule_axiom_failure(swapped) is not None:
        with pytest.raises(BimoduleAxiomFails):
            bimodule_to_hom(swapped)


def test_non_multiplicative_map_rejected():
    M2 = matrix_units(2)
    m = [[QQ.one if i == j else QQ.zero for j in range(4)] for i in range(4)]
    m[0][0] = QQ(2)
    with pytest.raises(ValidationError):
        NonDegenerateHom.into_algebra(M2, M2, m)


def _maps(X, Y):
    for values in itertools.product(Y, repeat=len(X)):
        yield dict(zip(X, values))


def test_pullback_family_extensions():
    rng = random.Random(5)
    checked = 0
    for nx in range(1, 7):
        for ny in range(1, 7):
            X, Y = list(range(nx)), list(range(ny))
            alpha = {x: rng.choice(Y) for x in X}
            gamma = pullback_hom(alpha, X, Y)
            _assert_good_extension(gamma)
            checked += 1
    assert checked == 36


def test_pullback_functoriality_on_composable_pairs():
    rng = random.Random(11)
    pairs = 0
    for _ in range(25):
        X, Y, Z = (list(range(rng.randint(1, 6))) for _ in range(3))
        alpha = {x: rng.choice(Y) for x in X}
        beta = {y: rng.choice(Z) for y in Y}
        g = pullback_hom(beta, Y, Z)  # K(Z) -> K(Y)
        d = pullback_hom(alpha, X, Y)  # K(Y) -> K(X)
        assert functoriality_check(g, d).ok
        pairs += 1
    assert pairs == 25


def test_all_maps_between_small_sets_functorial():
    X, Y, Z = [0, 1], [0, 1, 2], [0, 1]
    for alpha in _maps(X, Y):
        for beta in _maps(Y, Z):
            assert functoriality_check(pullback_hom(beta, Y, Z), pullback_hom(alpha, X, Y)).ok


def test_inclusion_chain_k3_ut3_m3():
    M3 = matrix_units(3)
    UT3, S_ut = _sub(M3, ["e11", "e12", "e13", "e22", "e23", "e33"])
    K3, S_d = _sub(UT3, ["e11", "e22", "e33"])
    g = inclusion_hom(K3, UT3, S_d)
    d = inclusion_hom(UT3, M3, S_ut)
    for h in (g, d):
        _assert_good_extension(h)
    assert functoriality_check(g, d).ok


def test_chain_example_m3_diagonal():
    M3 = matrix_units(3)
    A, S = _sub(M3, ["e11", "e12", "e13", "e23", "e33"])
    g = inclusion_hom(A, M3, S)
    d = diagonal_hom(M3, direct_sum(M3, M3))
    _assert_good_extension(d)
    assert functoriality_check(g, d).ok


def test_functoriality_rejects_mismatched_pair():
    g = pullback_hom({0: 0}, [0], [0])
    d = identity_hom(finite_functions(2))
    with pytest.raises(ValidationError):
        functoriality_check(g, d)
