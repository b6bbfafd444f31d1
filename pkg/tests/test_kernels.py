import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from multalg import _pykernels, kernels
from multalg.oracles import run_oracle


def test_backends_listed():
    assert "python" in kernels.BACKENDS


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")


@pytest.mark.skipif("cython" not in kernels.BACKENDS, reason="extension not built")
@given(st.sampled_from([2, 3, 7, 101]),
       st.lists(st.lists(st.integers(-50, 50), min_size=6, max_size=6), max_size=8))
def test_rref_parity(p, rows):
    c = kernels.BACKENDS["cython"]
    assert c.rref_modp(rows, 6, p) == _pykernels.rref_modp(rows, 6, p)


@pytest.mark.skipif("cython" not in kernels.BACKENDS, reason="extension not built")
@given(st.lists(st.integers(0, 9), max_size=40), st.lists(st.integers(0, 9), max_size=40))
def test_match_pairs_parity(a, b):
    c = kernels.BACKENDS["cython"]
    assert c.match_pairs(a, b) == _pykernels.match_pairs(a, b)


def test_rref_result_is_reduced():
    rng = random.Random(3)
    rows = [[rng.randrange(5) for _ in range(7)] for _ in range(6)]
    red, piv = _pykernels.rref_modp(rows, 7, 5)
    for r, pc in zip(red, piv):
        assert r[pc] == 1
        assert all(other[pc] == 0 for other in red if other is not r)


def test_oracle_same_on_both_backends(backend):
    rows = run_oracle(max_dim=2)
    assert rows and all(r.ok for r in rows)
