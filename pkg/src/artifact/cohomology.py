"""Borel-Bott-Weil cohomology on the registered spaces.

Compact spaces are handled directly.  On a total space ``Tot(F) -> Z`` the
pushforward of a pulled-back bundle ``e`` is ``(+)_l Sym^l(F^*) (x) e``; its
irreducible summands come in families whose weights are affine in ``l``, and
each family is certified for every ``l`` at once by locating the point after
which the Weyl chamber of ``w0 + l*w1 + rho`` no longer changes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Dict, List, Optional, Tuple, Union

from .bundles import (GR24, LGR, BundleClass, IrredClass, KClass, Space, _split,
                      tensor_decompose)
from .weyl import SINGULAR, Regular, Weight, dual_weight, tilde_dominantize, weyl_dim


class _Infinite:
    """Dimension of an infinite-dimensional (graded) space."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ArithmeticError("inf - inf")
        return self

    def __mul__(self, other):
        if other == 0:
            return 0
        return self

    __rmul__ = __mul__

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("inf")

    def __repr__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinite, ())


INF = _Infinite()
Dim = Union[int, _Infinite]


def dmin(a: Dim, b: Dim) -> Dim:
    if a is INF:
        return b
    if b is INF:
        return a
    return min(a, b)


# ------------------------------------------------------------------ tables

@dataclass(frozen=True)
class CohomologyTable:
    """Degree -> representations (dual dominant weights) and dimensions.

    ``entries`` is empty when only dimensions are known (restriction route).
    """

    space: Space
    entries: Dict[int, Tuple[Tuple[Weight, int], ...]]
    dims: Dict[int, int]

    def dim(self, i: int) -> int:
        return self.dims.get(i, 0)

    @property
    def euler(self) -> int:
        return sum((-1) ** i * d for i, d in self.dims.items())

    @property
    def is_zero(self) -> bool:
        return not any(self.dims.values())

    def nonzero(self) -> Dict[int, int]:
        return {i: d for i, d in sorted(self.dims.items()) if d}


def _table(space: Space, acc: Dict[int, Counter]) -> CohomologyTable:
    entries = {i: tuple(sorted(c.items())) for i, c in sorted(acc.items()) if c}
    dims = {i: sum(m * weyl_dim(dual_weight(w)) for w, m in e) for i, e in entries.items()}
    return CohomologyTable(space, entries, dims)


def irred_cohomology(irr: IrredClass) -> Optional[Tuple[int, Weight]]:
    """``(degree, representation)`` of the single nonzero cohomology group, or None."""
    res = tilde_dominantize(irr.ambient_weight())
    if res is SINGULAR:
        return None
    return res.length, dual_weight(res.dominant)


def bbw_cohomology(e: BundleClass) -> CohomologyTable:
    if e.space.is_total:
        raise ValueError("total spaces need total_space_cohomology")
    acc: Dict[int, Counter] = {}
    for irr, m in e.terms:
        r = irred_cohomology(irr)
        if r is not None:
            acc.setdefault(r[0], Counter())[r[1]] += m
    return _table(e.space, acc)


def euler_char(e: Union[BundleClass, KClass]) -> int:
    """Euler characteristic on a compact space; accepts virtual classes."""
    total = 0
    for irr, m in e.terms:
        r = irred_cohomology(irr)
        if r is not None:
            total += m * (-1) ** r[0] * weyl_dim(r[1])
    return total


# ---------------------------------------------------------- restriction

@dataclass(frozen=True)
class RestrictionVerdict:
    table: CohomologyTable
    status: str
    euler: int
    bounds: Dict[int, Tuple[int, int]]

    @property
    def determined(self) -> bool:
        return self.status == "Determined"


def restrict_lgr(e: BundleClass) -> RestrictionVerdict:
    """Cohomology of ``e|_LGr`` from ``0 -> e(-1) -> e -> e|_LGr -> 0`` on Gr(2,4).

    The maps ``f_i : H^i(e(-1)) -> H^i(e)`` are multiplication by the symplectic
    form.  Their ranks are pinned when a side vanishes, and at the two ends
    (``f_0`` injective, ``f_4`` surjective since LGr has dimension 3).  Only
    dimensions are reported: the maps are not GL4-equivariant.
    """
    if e.space != GR24:
        raise ValueError("restrict_lgr takes a class on Gr24")
    a = bbw_cohomology(e.twist(-1))
    b = bbw_cohomology(e)
    rank: Dict[int, Tuple[int, int]] = {}
    for i in range(5):
        hi = min(a.dim(i), b.dim(i))
        rank[i] = (0, hi)
    rank[0] = (a.dim(0), a.dim(0))
    rank[4] = (b.dim(4), b.dim(4))
    bounds: Dict[int, Tuple[int, int]] = {}
    for i in range(4):
        lo = (b.dim(i) - rank[i][1]) + (a.dim(i + 1) - rank[i + 1][1])
        hi = (b.dim(i) - rank[i][0]) + (a.dim(i + 1) - rank[i + 1][0])
        bounds[i] = (lo, hi)
    forced = all(lo == hi for lo, hi in bounds.values())
    euler = b.euler - a.euler
    dims = {i: lo for i, (lo, hi) in bounds.items() if lo == hi and lo}
    return RestrictionVerdict(CohomologyTable(LGR, {}, dims), "Determined" if forced else "EulerOnly", euler, bounds)


def gr24_to_lgr(irr: IrredClass) -> Optional[IrredClass]:
    """``Sym^k S(l)`` on Gr24 restricts to ``Sym^k S(l)`` on LGr."""
    a1, a2, b1, b2 = irr.levi
    if (b1, b2) != (0, 0):
        return None
    return IrredClass(LGR, (a1, a2))


# ------------------------------------------------------- affine families

@dataclass(frozen=True, order=True)
class AffineWeightFamily:
    """Weights ``w0 + l*w1`` for ``l >= start``."""

    w0: Weight
    w1: Weight
    start: int = 0

    def __post_init__(self) -> None:
        if self.w0.group != self.w1.group:
            raise ValueError("family endpoints in different groups")

    def at(self, l: int) -> Weight:
        return self.w0 + self.w1.scale(l)


def _root_functionals(w: Weight) -> List[Tuple[int, ...]]:
    n = w.group.rank
    if w.group.kind == "GL":
        out = []
        for i in range(n):
            for j in range(i + 1, n):
                v = [0] * n
                v[i], v[j] = 1, -1
                out.append(tuple(v))
        return out
    return [(1, -1), (1, 1), (1, 0), (0, 1)]


@dataclass(frozen=True)
class StablePattern:
    """``None`` length means singular for every large ``l``."""

    length: Optional[int]
    d0: Optional[Weight] = None
    d1: Optional[Weight] = None

    @property
    def singular(self) -> bool:
        return self.length is None

    def at(self, l: int) -> Optional[Tuple[int, Weight]]:
        if self.length is None:
            return None
        return self.length, self.d0 + self.d1.scale(l)


@dataclass(frozen=True)
class FamilyCohomology:
    family: AffineWeightFamily
    exceptional: Tuple[Tuple[int, Optional[Tuple[int, Weight]]], ...]
    stable_from: int
    pattern: StablePattern
    degenerate: bool = False

    def at(self, l: int) -> Optional[Tuple[int, Weight]]:
        """``(degree, dual dominant weight)`` of the ``l``-th member."""
        if l < self.family.start:
            return None
        if l >= self.stable_from:
            p = self.pattern.at(l)
            return None if p is None else (p[0], dual_weight(p[1]))
        return dict(self.exceptional)[l]


def _direct(w: Weight) -> Optional[Tuple[int, Weight]]:
    r = tilde_dominantize(w)
    if r is SINGULAR:
        return None
    return r.length, dual_weight(r.dominant)


def affine_family_cohomology(f: AffineWeightFamily) -> FamilyCohomology:
    rho = f.w0.group.rho
    v0 = tuple(a + r for a, r in zip(f.w0.coords, rho))
    v1 = f.w1.coords
    funcs = _root_functionals(f.w0)
    threshold = f.start
    always_singular = False
    for a in funcs:
        c = sum(x * y for x, y in zip(a, v0))
        s = sum(x * y for x, y in zip(a, v1))
        if s == 0:
            if c == 0:
                always_singular = True
            continue
        threshold = max(threshold, floor(Fraction(-c, s)) + 1)
    if always_singular:
        return FamilyCohomology(f, (), f.start, StablePattern(None), degenerate=not any(v1))
    if not any(v1):
        threshold = f.start
    exceptional = tuple((l, _direct(f.at(l))) for l in range(f.start, threshold))
    r0 = tilde_dominantize(f.at(threshold))
    r1 = tilde_dominantize(f.at(threshold + 1))
    if r0 is SINGULAR or r1 is SINGULAR:
        raise AssertionError("stable regime must be regular")
    assert isinstance(r0, Regular) and isinstance(r1, Regular) and r0.length == r1.length
    d1 = Weight(f.w0.group, tuple(b - a for a, b in zip(r0.dominant.coords, r1.dominant.coords)))
    d0 = r0.dominant + d1.scale(-threshold)
    return FamilyCohomology(f, exceptional, threshold, StablePattern(r0.length, d0, d1), degenerate=not any(v1))


def spot_check(fc: FamilyCohomology, count: int = 20) -> bool:
    """Direct BBW evaluation at ``count`` values past the threshold matches the pattern."""
    for l in range(fc.stable_from, fc.stable_from + count):
        if _direct(fc.family.at(l)) != fc.at(l):
            return False
    return True


# ---------------------------------------------------- pushforward families

def sym_tensor_families(u: IrredClass, x: IrredClass, shift: Tuple[int, ...] = ()) -> List[Tuple[AffineWeightFamily, int]]:
    """Families for ``Sym^l(U) (x) X`` with ``U`` of rank <= 2, as ``l`` varies.

    On LGr the rank-2 factor is a GL2 block and Clebsch-Gordan gives
    ``Sym^l (x) Sym^k = (+)_t Sym^{l+k-2t} (x) det^t`` for ``t <= min(l, k)``;
    on P it is an Sp2 block with ``Sym^l (x) Sym^m = (+)_t Sym^{l+m-2t}``.
    """
    sp = x.space
    g = sp.group
    w1 = Weight(g, u.levi)
    base = tuple(a + b for a, b in zip(x.levi, shift)) if shift else x.levi
    if u.rank == 1:
        return [(AffineWeightFamily(Weight(g, base), w1, 0), 1)]
    if u.rank != 2:
        raise ValueError("fiber of rank > 2")
    h = sp.homogeneous
    out = []
    if h.kind == "LGr":
        a, b = base
        for t in range(a - b + 1):
            out.append((AffineWeightFamily(Weight(g, (a - t, b + t)), w1, t), 1))
        return out
    if h.kind == "P3Sp":
        d, m = base
        for t in range(m + 1):
            out.append((AffineWeightFamily(Weight(g, (d, m - 2 * t)), w1, t), 1))
        return out
    raise ValueError(f"rank-2 fibers are not supported on {sp}")


@dataclass(frozen=True)
class GradedCohomology:
    """Cohomology of a bundle on a total space, graded by fiber degree ``l``."""

    space: Space
    families: Tuple[Tuple[FamilyCohomology, int], ...]

    def piece(self, l: int) -> Dict[int, int]:
        """Dimensions contributed by fiber degree ``l``."""
        acc: Counter = Counter()
        for fc, m in self.families:
            r = fc.at(l)
            if r is not None:
                acc[r[0]] += m * weyl_dim(r[1])
        return {i: d for i, d in sorted(acc.items()) if d}

    def piece_entries(self, l: int) -> Dict[int, Tuple[Tuple[Weight, int], ...]]:
        acc: Dict[int, Counter] = {}
        for fc, m in self.families:
            r = fc.at(l)
            if r is not None:
                acc.setdefault(r[0], Counter())[r[1]] += m
        return {i: tuple(sorted(c.items())) for i, c in sorted(acc.items())}

    @property
    def stable_from(self) -> int:
        return max([fc.stable_from for fc, _ in self.families], default=0)

    def dim(self, i: int) -> Dim:
        total: Dim = 0
        for fc, m in self.families:
            p = fc.pattern
            if not p.singular and p.length == i:
                return INF
            for l, r in fc.exceptional:
                if r is not None and r[0] == i:
                    total += m * weyl_dim(r[1])
        return total

    def table(self, i: int) -> Dict[int, Tuple[Tuple[Weight, int], ...]]:
        """Fiber degree -> representation content of ``H^i`` (finite degrees only)."""
        out = {}
        for l in self.exceptional_degrees():
            e = self.piece_entries(l).get(i)
            if e:
                out[l] = e
        return out

    def exceptional_degrees(self) -> List[int]:
        ls = set()
        for fc, _ in self.families:
            ls.update(l for l, _ in fc.exceptional)
        return sorted(ls)

    @property
    def dims(self) -> Dict[int, Dim]:
        return {i: self.dim(i) for i in range(self.space.dimension + 1) if self.dim(i) != 0}

    def higher_vanishes(self) -> bool:
        return all(self.dim(i) == 0 for i in range(1, self.space.dimension + 1))

    def all_spot_checks(self, count: int = 20) -> bool:
        return all(spot_check(fc, count) for fc, _ in self.families)


def pushforward_families(sp: Space, e: BundleClass) -> List[Tuple[AffineWeightFamily, int]]:
    if not sp.is_total:
        raise ValueError(f"{sp} is not a total space")
    base = sp.base
    e = e.moved(base)
    dual_fiber = sp.fiber_bundle.terms[0][0].dual()
    fams: Counter = Counter()
    for x, m in e.terms:
        for fam, c in sym_tensor_families(dual_fiber, x):
            fams[fam] += m * c
    return sorted(fams.items())


def total_space_cohomology(sp: Space, e: BundleClass) -> GradedCohomology:
    fams = pushforward_families(sp, e)
    return GradedCohomology(sp, tuple((affine_family_cohomology(f), m) for f, m in fams))


def pushforward_piece(sp: Space, e: BundleClass, l: int) -> BundleClass:
    """The ``l``-th summand ``Sym^l(F^*) (x) e`` computed by the tensor calculus (oracle)."""
    from .bundles import dual_class, sym_power
    base = sp.base
    f_dual = dual_class(sp.fiber_bundle)
    return tensor_decompose(sym_power(l, f_dual), e.moved(base))


# ------------------------------------------------------ punctured pushforward

@dataclass(frozen=True)
class PuncturedPushforward:
    space: Space
    families: Tuple[Tuple[FamilyCohomology, int], ...]
    cutoff: int
    pieces: Dict[int, BundleClass]
    sections: Dict[int, int]

    def no_sections_anywhere(self) -> bool:
        """``H^0`` of every summand ``d >= 1`` vanishes (all ``d``, not only up to the cutoff)."""
        for fc, _ in self.families:
            if not fc.pattern.singular and fc.pattern.length == 0:
                return False
            for l, r in fc.exceptional:
                if r is not None and r[0] == 0:
                    return False
        return True


def punctured_pushforward(sp: Space, e: BundleClass, degree_cutoff: int = 10) -> PuncturedPushforward:
    """Graded pieces ``e (x) Sym^{d-2}(F) (x) det F`` for ``d >= 1`` and their sections.

    The ``d = 1`` piece is zero (``Sym^{-1} = 0``); families are indexed by ``l = d - 2``.
    """
    from .bundles import determinant, sym_power
    if sp.kind not in ("Y", "Yp"):
        raise ValueError("punctured pushforward needs a rank-2 fiber")
    base = sp.base
    fiber = sp.fiber_bundle
    f_irr = fiber.terms[0][0]
    det = determinant(fiber)
    e = e.moved(base)
    fams: Counter = Counter()
    for x, m in e.terms:
        for y, c in tensor_decompose(BundleClass.of(x), BundleClass.of(det)).terms:
            for fam, k in sym_tensor_families(f_irr, y):
                fams[fam] += m * c * k
    families = tuple((affine_family_cohomology(f), m) for f, m in sorted(fams.items()))
    pieces, sections = {}, {}
    for d in range(1, degree_cutoff + 1):
        if d == 1:
            piece = BundleClass.zero(base)
        else:
            piece = tensor_decompose(tensor_decompose(e, sym_power(d - 2, fiber)), BundleClass.of(det))
        pieces[d] = piece
        sections[d] = bbw_cohomology(piece).dim(0)
    return PuncturedPushforward(sp, families, degree_cutoff, pieces, sections)
