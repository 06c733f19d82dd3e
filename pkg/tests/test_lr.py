import pytest
from hypothesis import given, settings, strategies as st

from artifact.lr import gl_tensor, lr_product

from oracles import gl_dim_by_tableaux, schur_product

partitions = st.lists(st.integers(0, 3), min_size=0, max_size=3).map(lambda p: tuple(sorted(p, reverse=True)))


def test_s21_squared():
    got = lr_product((2, 1), (2, 1), 6)
    assert got[(3, 2, 1)] == 2
    assert got == schur_product((2, 1), (2, 1), 6)


def test_row_truncation():
    assert lr_product((1,), (1,), 1) == {(2,): 1}


@settings(max_examples=60, deadline=None)
@given(partitions, partitions)
def test_matches_character_oracle(lam, mu):
    assert lr_product(lam, mu, 3) == schur_product(lam, mu, 3)


@settings(max_examples=60, deadline=None)
@given(st.tuples(*[st.integers(-3, 3)] * 3), st.tuples(*[st.integers(-3, 3)] * 3))
def test_gl_tensor_dimensions(a, b):
    lam, mu = tuple(sorted(a, reverse=True)), tuple(sorted(b, reverse=True))
    total = sum(c * gl_dim_by_tableaux(nu) for nu, c in gl_tensor(lam, mu).items())
    assert total == gl_dim_by_tableaux(lam) * gl_dim_by_tableaux(mu)


def test_gl_tensor_rank_mismatch():
    with pytest.raises(ValueError):
        gl_tensor((1, 0), (1, 0, 0))
