import pytest
from hypothesis import given, settings, strategies as st

from artifact.bundles import LGR, kclass_of
from artifact.expr import parse_bundle_expr
from artifact.homalg import euler_pairing
from artifact.mutation import (LAMBDA_S, LAMBDA_T, LAMBDA_U, Collection, M, S, cyclic_twist_orbit,
                               derive_resolution, identify, kvector, mutate_left, mutate_right, parse_chain_spec,
                               same_k, tilt_labels, twist_composite, verify_iw_chain)
from artifact.report import k_conservation_ok, _pair_pool


def P(text):
    return parse_bundle_expr(text)


def lgr(*names):
    return Collection.certify([P(f"{x} @LGr") for x in names], "quadric")


@pytest.fixture(scope="module")
def kuznetsov():
    c = lgr("O", "S(1)", "O(1)", "O(2)")
    assert c.certified
    return c


def test_kvector_of_basis_is_unitriangular(kuznetsov):
    vecs = [kvector(o) for o in kuznetsov.objects]
    for i, v in enumerate(vecs):
        assert v[i] == 1
        assert all(x == 0 for x in v[i + 1:])


def test_identify_by_k_class():
    assert identify(P("Omega1P4(1) @LGr")) == P("Omega1P4(1) @LGr")
    assert identify(P("coker[O; O(1)] @LGr")) == P("TP4(0) @LGr")
    # no irreducible candidate of rank 7
    assert identify(P("ker[S(1); O(1)] @LGr")) is None
    assert same_k(P("Omega1P4(0) @LGr"), P("ker[O(-1); O] @LGr"))
    assert not same_k(P("O @LGr"), P("O(1) @LGr"))


def test_left_then_right_is_identity(kuznetsov):
    s = mutate_left(kuznetsov, 1)
    assert s.triangle[1] and s.result.certified
    back = mutate_right(s.result, 1)
    assert all(same_k(a, b) for a, b in zip(back.result.objects, kuznetsov.objects))


def test_left_mutation_k_identity(kuznetsov):
    s = mutate_left(kuznetsov, 1)
    e, f = kuznetsov.objects[1], kuznetsov.objects[2]
    # the mutated object sits in degree -1, so its class enters with a sign
    assert s.shift == 1
    assert kclass_of(s.mutated).scale(-1) == kclass_of(f) - kclass_of(e).scale(euler_pairing(e, f))
    assert s.triangle[1]


def test_right_mutation_k_identity(kuznetsov):
    s = mutate_right(kuznetsov, 0)
    e, f = kuznetsov.objects[0], kuznetsov.objects[1]
    assert s.shift == -1
    assert kclass_of(s.mutated).scale(-1) == kclass_of(e) - kclass_of(f).scale(euler_pairing(e, f))


def test_mutation_on_projective_space():
    p = Collection.certify([P(f"O({d}) @P") for d in range(4)], "quadric")
    s = mutate_left(p, 2)
    assert s.result.certified
    assert s.triangle[1]


def test_uncertified_collection_is_rejected():
    with pytest.raises(ValueError):
        mutate_left(lgr("O(1)", "O"), 0)


def test_index_out_of_range(kuznetsov):
    with pytest.raises(IndexError):
        mutate_left(kuznetsov, 3)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_k_conservation_on_random_pairs(data):
    pool = _pair_pool()
    e, f = data.draw(st.sampled_from(pool))
    ok, detail = k_conservation_ok(e, f)
    assert ok, detail


@pytest.mark.parametrize("target,against,mult", [
    ("O(-3)", "S(-2),O(-2),O(-1),O", (1, 4, 11, 5, 1)),
    ("O(-1)", "O,S(1),O(1),O(2)", (1, 5, 4, 5, 1)),
])
def test_derive_resolution(target, against, mult):
    ch = derive_resolution(P(f"{target} @LGr"), [P(f"{x} @LGr") for x in against.split(",")])
    assert ch.multiplicities == mult
    assert ch.k_exact


def test_chain_spec_grammar():
    assert parse_chain_spec("W1*2,W4") == ["W1", "W1", "W4"]
    assert parse_chain_spec("cyclic(3,1)") == ["Wk(3,1)"] * 2
    assert len(parse_chain_spec("abuaf9")) == 9
    assert len(parse_chain_spec("abuaf10")) == 10
    for bad in ["", "X", "W1*", "W5", "cyclic(1,1)", "Wk(1,0)"]:
        with pytest.raises(ValueError):
            parse_chain_spec(bad)


def test_named_chain_labels():
    assert verify_iw_chain("abuaf9").end == LAMBDA_S
    assert verify_iw_chain("abuaf10").end == LAMBDA_U
    assert verify_iw_chain("abuaf9").start == LAMBDA_T


def test_wprime_cycle_returns():
    r = verify_iw_chain("wprime4")
    assert r.end == r.start
    assert r.certificates_ok


@pytest.mark.parametrize("n", range(2, 7))
def test_cyclic_chains(n):
    for k in range(1, n):
        r = verify_iw_chain(f"cyclic({n},{k})")
        assert r.labels_ok and r.certificates_ok


def test_module_labels():
    assert M(0) == M(0)
    assert M(1) != S(1)
    assert str(S(-2))


def test_twist_orbit_window():
    assert cyclic_twist_orbit(4, 1, -3).after == 1
    assert cyclic_twist_orbit(4, 1, -1).after == -1
    with pytest.raises(ValueError):
        cyclic_twist_orbit(4, 1, 3)


@pytest.mark.parametrize("n", range(2, 7))
def test_twist_composite_is_tensor_shift(n):
    labels = tilt_labels(n, 0)
    out, _ = twist_composite(n, labels, range(1, n + 1))
    assert sorted(out) == [j + n for j in labels]


def test_displayed_order_needs_shifted_start():
    # twists at k = 0..n-1 stall on Tilt_0 but act on Tilt_{-1}
    n = 4
    with pytest.raises(ValueError):
        twist_composite(n, tilt_labels(n, 0), range(0, n))
    out, _ = twist_composite(n, tilt_labels(n, -1), range(0, n))
    assert sorted(out) == [j + n for j in tilt_labels(n, -1)]
