import random

import pytest
from hypothesis import given, settings, strategies as st

from artifact.bundles import (GR24, LGR, P3GL, P3SP, Y, YP, BundleClass, IrredClass, PlethysmError, cyclic, dual_class,
                              format_object, kclass_of, proj, space_from_name, sym_power, tensor_decompose,
                              wedge_power)
from artifact.cohomology import bbw_cohomology
from artifact.expr import ParseError, parse_bundle_expr, parse_in_space
from artifact.report import random_irred

BASES = [GR24, P3GL, LGR, P3SP, proj(2)]
seeds = st.integers(0, 2**32 - 1)


def P(text):
    return parse_bundle_expr(text)


@pytest.mark.parametrize("name,space", [
    ("Gr24", GR24), ("gr(2,4)", GR24), ("LGr", LGR), ("P", P3SP), ("P3GL", P3GL),
    ("Y", Y), ("Y'", YP), ("yprime", YP), ("Cyc(3)", cyclic(3)), ("P^2", proj(2)),
])
def test_space_names(name, space):
    assert space_from_name(name) == space


def test_unknown_space():
    with pytest.raises(ValueError):
        space_from_name("Mars")


@pytest.mark.parametrize("text,rank", [
    ("O(-1)+S(2)*3 @LGr", 7), ("Sym^2 S(1) @LGr", 3), ("Q(1) @Gr24", 2), ("wedge^2 Q @P3GL", 3),
    ("L^3 @Cyc(4)", 1), ("ext[O; S(1)] @LGr", 3), ("Omega1P4(0) @LGr", 4), ("TP4(1) @LGr", 4),
    ("Sigma(-1) @Y'", 2), ("ker[S(1); O(1)] @LGr", 7), ("coker[O(-3); S(-2)] @LGr", 7),
    ("(O+S)*2 @LGr", 6), ("0 @LGr", 0),
])
def test_parse_format_round_trip(text, rank):
    obj = P(text)
    assert P(format_object(obj)) == obj
    assert kclass_of(obj).rank == rank


def test_dual_syntax():
    assert P("S^* @LGr") == P("S(1) @LGr")
    assert P("O(2)^* @Gr24") == P("O(-2) @Gr24")


@pytest.mark.parametrize("bad", [
    "O(", "O @Mars", "Sym^x S @LGr", "O(1) O @LGr", "O", "S(1) @Cyc(1)", "Q @LGr",
    "W(1,2) @LGr", "O(1)^ @LGr", "", "Sigma(-1) @P", "ext[O @LGr", "O+ @LGr",
])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        P(bad)


def test_parse_in_space_mismatch():
    with pytest.raises(ParseError):
        parse_in_space("O @Gr24", LGR)
    assert parse_in_space("O(1)", LGR) == P("O(1) @LGr")


@settings(max_examples=200)
@given(seeds, st.sampled_from(BASES))
def test_random_round_trip(seed, sp):
    rng = random.Random(seed)
    parts = [BundleClass.of(random_irred(sp, rng), rng.randint(1, 3)) for _ in range(rng.randint(1, 3))]
    e = parts[0]
    for p in parts[1:]:
        e = e + p
    assert P(format_object(e)) == e


@settings(max_examples=100)
@given(seeds, st.sampled_from(BASES))
def test_tensor_rank_and_dual(seed, sp):
    rng = random.Random(seed)
    a, b = (BundleClass.of(random_irred(sp, rng, 3)) for _ in range(2))
    assert tensor_decompose(a, b).rank == a.rank * b.rank
    assert dual_class(dual_class(a)) == a
    assert dual_class(a).rank == a.rank


def test_irred_validation():
    with pytest.raises(ValueError):
        IrredClass(LGR, (0, 1))
    with pytest.raises(ValueError):
        IrredClass(LGR, (0, 0, 0))


def test_plethysm_on_tautological():
    s = P("S @LGr")
    assert sym_power(3, s) == P("Sym^3 S @LGr")
    assert wedge_power(2, s) == P("O(-1) @LGr")
    # det Q agrees with O(1) up to the GL4 determinant character
    assert bbw_cohomology(wedge_power(2, P("Q @Gr24"))).dims == bbw_cohomology(P("O(1) @Gr24")).dims
    with pytest.raises(PlethysmError):
        wedge_power(2, P("Q @P3GL"))


def test_space_mismatch_in_sum():
    with pytest.raises(ValueError):
        P("O @LGr") + P("O @Gr24")
