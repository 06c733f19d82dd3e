import pytest
from hypothesis import given, strategies as st

from artifact.weyl import GL, SINGULAR, SP4, Regular, Weight, dual_weight, is_dominant, tilde_dominantize, weyl_dim

from oracles import gl_bbw, gl_dim_by_tableaux, sp4_bbw, sp4_dim

gl_weights = st.integers(1, 4).flatmap(lambda n: st.tuples(*[st.integers(-4, 4)] * n))


def _dominant(v):
    return tuple(sorted(v, reverse=True))


def test_rho():
    assert GL(4).rho == (3, 2, 1, 0)
    assert SP4.rho == (2, 1)


def test_bad_group_and_length():
    with pytest.raises(ValueError):
        GL(0)
    with pytest.raises(ValueError):
        Weight(GL(3), (1, 0))


@given(gl_weights)
def test_gl_dim_matches_tableaux(v):
    lam = _dominant(v)
    assert weyl_dim(Weight(GL(len(lam)), lam)) == gl_dim_by_tableaux(lam)


@given(st.integers(0, 8), st.integers(0, 8))
def test_sp4_dim_matches_root_product(a, b):
    a, b = max(a, b), min(a, b)
    assert weyl_dim(Weight(SP4, (a, b))) == sp4_dim(a, b)


def test_sp4_small_dims():
    assert [weyl_dim(Weight(SP4, w)) for w in [(0, 0), (1, 0), (1, 1), (2, 0)]] == [1, 4, 5, 10]


def test_weyl_dim_rejects_non_dominant():
    with pytest.raises(ValueError):
        weyl_dim(Weight(GL(2), (0, 1)))


@given(gl_weights)
def test_gl_dominantize_brute_force(v):
    r = tilde_dominantize(Weight(GL(len(v)), v))
    want = gl_bbw(v)
    if want is None:
        assert r is SINGULAR
    else:
        assert isinstance(r, Regular)
        assert (r.length, r.dominant.coords) == want


@given(st.integers(-7, 7), st.integers(-7, 7))
def test_sp4_dominantize_brute_force(a, b):
    r = tilde_dominantize(Weight(SP4, (a, b)))
    want = sp4_bbw((a, b))
    if want is None:
        assert r is SINGULAR
    else:
        assert (r.length, r.dominant.coords) == want
        assert is_dominant(r.dominant)


@given(gl_weights)
def test_dual_is_involution_and_keeps_dimension(v):
    lam = Weight(GL(len(v)), _dominant(v))
    assert dual_weight(dual_weight(lam)) == lam
    assert weyl_dim(dual_weight(lam)) == weyl_dim(lam)
