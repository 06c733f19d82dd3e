import random

import pytest
from hypothesis import given, settings, strategies as st

from artifact.bundles import LGR, P3SP, Y, BundleClass
from artifact.expr import parse_bundle_expr
from artifact.homalg import (check_collection, check_exceptional, check_spherical_zero_section, check_tilting,
                             euler_pairing, ext_table, hom_dim, quadric_h0, quadric_mult_rank, restrict_to_zero_section)
from artifact.report import random_irred

from oracles import quadric_sections

seeds = st.integers(0, 2**32 - 1)


def P(text):
    return parse_bundle_expr(text)


@pytest.mark.parametrize("d", range(0, 7))
def test_quadric_sections(d):
    assert quadric_h0(d) == quadric_sections(d)


@pytest.mark.parametrize("a,b", [(1, 1), (1, 2), (2, 2), (1, 3)])
def test_quadric_multiplication_is_surjective(a, b):
    # the coordinate ring of a quadric is generated in degree one
    assert quadric_mult_rank(a, b) == quadric_sections(a + b)


@settings(max_examples=150)
@given(seeds, seeds)
def test_ext_between_irreducibles_is_certified_and_matches_euler(s1, s2):
    a = BundleClass.of(random_irred(LGR, random.Random(s1), 3))
    b = BundleClass.of(random_irred(LGR, random.Random(s2), 3))
    t = ext_table(a, b)
    assert t.certified
    assert sum((-1) ** i * d for i, d in t.dims.items()) == euler_pairing(a, b)


@settings(max_examples=100)
@given(seeds, seeds)
def test_serre_duality_for_ext_on_lgr(s1, s2):
    a = BundleClass.of(random_irred(LGR, random.Random(s1), 3))
    b = BundleClass.of(random_irred(LGR, random.Random(s2), 3))
    left = ext_table(a, b).dims
    right = ext_table(b, a.twist(-3)).dims
    assert {i: d for i, d in left.items() if d} == {3 - i: d for i, d in right.items() if d}


@pytest.mark.parametrize("a,b,want", [
    ("O(-3)", "S(-2)", {0: 4}),
    ("O(-1)", "O", {0: 5}),
    ("O(-2)", "Omega1P4(0)", {0: 11}),
    ("Omega1P4(0)", "Omega1P4(0)", {0: 1}),
    ("S", "O", {0: 4}),
    ("O", "S", {}),
])
def test_known_homs_on_lgr(a, b, want):
    t = ext_table(P(f"{a} @LGr"), P(f"{b} @LGr"))
    assert t.certified
    assert {i: d for i, d in t.dims.items() if d} == want


def test_no_oracle_falls_back_to_euler_bounds():
    t = ext_table(P("O(-2) @LGr"), P("Omega1P4(0) @LGr"), oracle="none")
    assert not t.certified
    assert t.status == "EulerOnly"
    assert t.euler == 11


def test_hom_dim():
    assert hom_dim(P("O @LGr"), P("O(1) @LGr")) == 5


def test_exceptional_collections():
    assert check_collection([P(f"{x} @LGr") for x in ("O", "S(1)", "O(1)", "O(2)")]).passed
    assert check_collection([P(f"O({d}) @P") for d in range(4)]).passed
    assert check_exceptional(P("Omega1P4(0) @LGr")).passed
    wrong_order = check_collection([P(f"{x} @LGr") for x in ("O(1)", "O")])
    assert wrong_order.verdict == "Fail"


def test_tilting_on_y():
    assert check_tilting(P("O+O(-1)+O(-2)+S(-1) @Y")).passed
    c = check_tilting(P("O+O(-1)+O(-2)+S(-2) @Y"))
    assert c.verdict == "Fail"
    assert c.witness[2] == 1


def test_ext_on_total_space():
    t = ext_table(P("O @Y"), P("S(-2) @Y"))
    assert t.certified
    assert t.dims[1] == 1


def test_spherical_zero_sections():
    for f in ("O", "S", "O(1)"):
        st_, c = check_spherical_zero_section(P(f"{f} @LGr"), Y)
        assert c.passed
        assert st_.totals == {0: 1, 5: 1}


def test_zero_section_ext():
    t = ext_table(P("zero[O(-1)] @Y"), P("O(-1) @Y"))
    assert {i: d for i, d in t.dims.items() if d} == {5: 1}
    t = ext_table(P("zero[O(-3)] @Y'"), P("Sigma(-1) @Y'"))
    assert {i: d for i, d in t.dims.items() if d} == {2: 1}


def test_sigma_splits_on_zero_section():
    assert restrict_to_zero_section(P("Sigma(-1) @Y'")) == P("O(-2)+O(1) @P")
    assert ext_table(P("Sigma(-1) @Y'"), P("Sigma(-1) @Y'")).certified


def test_space_mismatch():
    with pytest.raises(ValueError):
        ext_table(P("O @LGr"), P("O @P"))
