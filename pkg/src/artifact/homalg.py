"""Ext tables, long exact sequences, and certificates.

``Ext^i(a, b) = H^i(a^* (x) b)`` for bundles.  Objects known through a
presentation are handled by the long exact sequence of that presentation; the
connecting and composition maps have rank intervals that are narrowed only by
rules that hold for a reason we can name:

* a map into or out of zero has rank 0;
* the connecting map of a non-split extension sends ``id`` to the class;
* ``Hom(x, -)`` is left exact (injectivity at degree 0);
* composition with an identity is surjective;
* with the quadric oracle: exact multiplication ranks on Q_3, and surjectivity
  of composition maps onto an irreducible target (Schur's lemma).

When every rank is pinned the table is ``Certified``; otherwise ``EulerOnly``
with interval bounds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .bundles import (BundleClass, DirectSum, ExtensionObject, KClass, Space,
                      ZeroSectionObject, dual_class, dual_k, format_object, kclass_of,
                      summands, tensor_decompose, tensor_k, wedge_power)
from .cohomology import (INF, Dim, bbw_cohomology, dmin, euler_char,
                         total_space_cohomology)

ORACLES = ("quadric", "none")


# ------------------------------------------------------------------ tables

@dataclass(frozen=True)
class ExtTable:
    """Dimensions of ``Ext^i``; ``bounds`` holds ``(lo, hi)`` per degree."""

    bounds: Tuple[Tuple[int, Dim, Dim], ...]
    euler: Optional[int] = None
    provenance: Tuple[str, ...] = ()

    @staticmethod
    def exact(dims: Dict[int, Dim], euler: Optional[int] = None, provenance: Sequence[str] = ()) -> "ExtTable":
        return ExtTable(tuple((i, d, d) for i, d in sorted(dims.items()) if d != 0), euler, tuple(provenance))

    def bound(self, i: int) -> Tuple[Dim, Dim]:
        for j, lo, hi in self.bounds:
            if j == i:
                return lo, hi
        return 0, 0

    @property
    def certified(self) -> bool:
        return all(lo == hi for _, lo, hi in self.bounds)

    @property
    def status(self) -> str:
        return "Certified" if self.certified else "EulerOnly"

    @property
    def dims(self) -> Dict[int, Dim]:
        if not self.certified:
            raise ValueError("table is not certified")
        return {i: lo for i, lo, _ in self.bounds}

    def dim(self, i: int) -> Dim:
        lo, hi = self.bound(i)
        if lo != hi:
            raise ValueError(f"Ext^{i} is only known to lie in [{lo}, {hi}]")
        return lo

    def degrees(self) -> List[int]:
        return [i for i, _, hi in self.bounds if hi != 0]

    def higher_vanishes(self) -> bool:
        return all(hi == 0 for i, _, hi in self.bounds if i >= 1)

    def higher_lower_bound(self) -> Optional[Tuple[int, Dim]]:
        """First degree ``>= 1`` forced nonzero, with its lower bound."""
        for i, lo, _ in self.bounds:
            if i >= 1 and lo != 0:
                return i, lo
        return None

    def __add__(self, other: "ExtTable") -> "ExtTable":
        degs = sorted({i for i, _, _ in self.bounds} | {i for i, _, _ in other.bounds})
        out = []
        for i in degs:
            a, b = self.bound(i), other.bound(i)
            out.append((i, a[0] + b[0], a[1] + b[1]))
        eu = None if self.euler is None or other.euler is None else self.euler + other.euler
        return ExtTable(tuple(x for x in out if x[2] != 0), eu, _merge(self.provenance, other.provenance))


def _merge(a: Sequence[str], b: Sequence[str]) -> Tuple[str, ...]:
    return tuple(sorted(set(a) | set(b)))


ZERO_TABLE = ExtTable((), 0)


# ------------------------------------------------------------ quadric oracle

def _monomials(d: int, nvars: int = 5) -> List[Tuple[int, ...]]:
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return out


def quadric_normal_basis(d: int) -> List[Tuple[int, ...]]:
    """Monomials of degree ``d`` with ``x2``-degree at most 1: a basis of ``H^0(Q_3, O(d))``."""
    if d < 0:
        return []
    return [m for m in _monomials(d) if m[2] <= 1]


@lru_cache(maxsize=None)
def _reduce(m: Tuple[int, ...]) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    # x2^2 = -x0*x4 - x1*x3 on the quadric x0*x4 + x1*x3 + x2^2 = 0
    if m[2] <= 1:
        return ((m, 1),)
    out: Dict[Tuple[int, ...], int] = {}
    for (i, j) in ((0, 4), (1, 3)):
        e = list(m)
        e[2] -= 2
        e[i] += 1
        e[j] += 1
        for mm, c in _reduce(tuple(e)):
            out[mm] = out.get(mm, 0) - c
    return tuple((k, v) for k, v in sorted(out.items()) if v)


@lru_cache(maxsize=None)
def quadric_mult_rank(a: int, b: int) -> int:
    """Rank of ``H^0(O(a)) (x) H^0(O(b)) -> H^0(O(a+b))`` on the quadric threefold."""
    import sympy

    if a < 0 or b < 0:
        return 0
    target = quadric_normal_basis(a + b)
    index = {m: i for i, m in enumerate(target)}
    rows = []
    for m1 in quadric_normal_basis(a):
        for m2 in quadric_normal_basis(b):
            prod_m = tuple(x + y for x, y in zip(m1, m2))
            row = [0] * len(target)
            for mm, c in _reduce(prod_m):
                row[index[mm]] += c
            rows.append(row)
    if not rows:
        return 0
    return sympy.Matrix(rows).rank()


def quadric_h0(d: int) -> int:
    return comb(d + 4, 4) - comb(d + 2, 4) if d >= 0 else 0


# ---------------------------------------------------------------- ext core

def _base_ext(a: BundleClass, b: BundleClass) -> ExtTable:
    sp = a.space
    e = tensor_decompose(dual_class(a), b)
    if sp.is_total:
        g = total_space_cohomology(sp, e)
        return ExtTable.exact(g.dims)
    t = bbw_cohomology(e)
    return ExtTable.exact(t.dims, t.euler)


def euler_pairing(a, b) -> int:
    """``chi(a, b)`` on a compact space, computed from classes alone."""
    ka, kb = kclass_of(a), kclass_of(b)
    if ka.space.is_total:
        raise ValueError("Euler pairing needs a compact space")
    return euler_char(tensor_k(dual_k(ka), kb))


def _same(x, y) -> bool:
    return _canon(x) == _canon(y)


def _canon(x):
    if isinstance(x, DirectSum) and len(x.parts) == 1:
        return _canon(x.parts[0])
    return x


class _Ctx:
    def __init__(self, oracle: str):
        if oracle not in ORACLES:
            raise ValueError(f"unknown oracle {oracle!r}")
        self.oracle = oracle


def ext_table(a, b, sp: Optional[Space] = None, oracle: str = "quadric") -> ExtTable:
    if sp is not None and (a.space != sp or b.space != sp):
        raise ValueError("objects are not on the requested space")
    if a.space != b.space:
        raise ValueError(f"space mismatch: {a.space} vs {b.space}")
    return _ext(_canon(a), _canon(b), oracle)


@lru_cache(maxsize=None)
def _ext(a, b, oracle: str) -> ExtTable:
    if isinstance(a, DirectSum) or isinstance(b, DirectSum):
        return _split_sum(a, b, oracle)
    if isinstance(a, ZeroSectionObject) or isinstance(b, ZeroSectionObject):
        return _ext_zero(a, b, oracle)
    if isinstance(a, BundleClass) and isinstance(b, BundleClass):
        return _base_ext(a, b)
    if _multi(a) or _multi(b):
        return _split_sum(a, b, oracle)
    if isinstance(b, ExtensionObject):
        t = _les_second(a, b, oracle)
        if isinstance(a, ExtensionObject) and not t.certified:
            t = _intersect(t, _les_first(a, b, oracle))
        return t
    return _les_first(a, b, oracle)


def _intersect(s: ExtTable, t: ExtTable) -> ExtTable:
    """Both tables bound the same groups; keep the tighter bound in each degree."""
    degs = sorted({i for i, _, _ in s.bounds} | {i for i, _, _ in t.bounds})
    out = []
    for i in degs:
        (a0, a1), (b0, b1) = s.bound(i), t.bound(i)
        lo, hi = max(a0, b0), dmin(a1, b1)
        if hi != 0:
            out.append((i, lo, hi))
    euler = s.euler if s.euler is not None else t.euler
    return ExtTable(tuple(out), euler, _merge(s.provenance, t.provenance))


def _split_sum(a, b, oracle: str) -> ExtTable:
    total = ZERO_TABLE
    for x in summands(a):
        for y in summands(b):
            total = total + _ext(x, y, oracle)
    return total


def _multi(x) -> bool:
    return isinstance(x, BundleClass) and x.irreducible() is None and not x.is_zero


def hom_dim(a, b, oracle: str = "quadric") -> Dim:
    return ext_table(a, b, oracle=oracle).dim(0)


# ------------------------------------------------------------- LES solver

Interval = Tuple[Dim, Dim]


def _sub(x: Dim, y: Dim) -> Optional[Dim]:
    if x is INF:
        return None if y is INF else INF
    if y is INF:
        return None
    return x - y


def _term(dim: Interval, rank: Interval) -> Tuple[Optional[Dim], Optional[Dim]]:
    # dim - rank as an interval
    return _sub(dim[0], rank[1]), _sub(dim[1], rank[0])


def _add(x: Optional[Dim], y: Optional[Dim]) -> Optional[Dim]:
    if x is None or y is None:
        return None
    return x + y


def _exact(t: ExtTable, i: int) -> Interval:
    return t.bound(i)


def _rank_bounds(src: Interval, dst: Interval) -> Interval:
    return 0, dmin(src[1], dst[1])


@dataclass
class _Les:
    top: int
    p: ExtTable
    q: ExtTable
    r: ExtTable
    ranks: Dict[int, Interval] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)


def _finish(bounds: Dict[int, Tuple[Optional[Dim], Optional[Dim]]], sp: Space, euler: Optional[int],
            notes: Sequence[str], parts: Sequence[ExtTable]) -> ExtTable:
    out = []
    for i, (lo, hi) in sorted(bounds.items()):
        if sp.is_total and i == 0:
            lo = hi = INF  # Hom of nonzero sheaves on a total space is a nonzero module over R
        if lo is None:
            lo = 0
        if hi is None:
            hi = INF
        if hi != 0:
            out.append((i, max(lo, 0) if lo is not INF else lo, hi))
    prov = list(notes)
    for t in parts:
        prov.extend(t.provenance)
    return ExtTable(tuple(out), euler, tuple(sorted(set(prov))))


def _solve_middle(p: ExtTable, r: ExtTable, delta: Dict[int, Interval], top: int):
    """``... P_i -> Q_i -> R_i --delta_i--> P_{i+1}``; Q unknown."""
    out = {}
    for i in range(top + 1):
        dm = delta.get(i - 1, (0, 0))
        d0 = delta.get(i, (0, 0))
        a = _term(p.bound(i), dm)
        b = _term(r.bound(i), d0)
        out[i] = (_add(a[0], b[0]), _add(a[1], b[1]))
    return out


def _solve_left(q: ExtTable, r: ExtTable, phi: Dict[int, Interval], top: int):
    """``P_i -> Q_i --phi_i--> R_i -> P_{i+1}``; P unknown: ``coker phi_{i-1} + ker phi_i``."""
    out = {}
    for i in range(top + 1):
        a = _term(r.bound(i - 1), phi.get(i - 1, (0, 0))) if i > 0 else (0, 0)
        b = _term(q.bound(i), phi.get(i, (0, 0)))
        out[i] = (_add(a[0], b[0]), _add(a[1], b[1]))
    return out


def _solve_right(p: ExtTable, q: ExtTable, psi: Dict[int, Interval], top: int):
    """``P_i --psi_i--> Q_i -> R_i -> P_{i+1}``; R unknown: ``coker psi_i + ker psi_{i+1}``."""
    out = {}
    for i in range(top + 1):
        a = _term(q.bound(i), psi.get(i, (0, 0)))
        b = _term(p.bound(i + 1), psi.get(i + 1, (0, 0)))
        out[i] = (_add(a[0], b[0]), _add(a[1], b[1]))
    return out


def _composition_rank(u, v, w, mult_uv: Dim, mult_vw: Dim, target: Dim, ctx: _Ctx,
                      notes: List[str]) -> Optional[Interval]:
    """Rank of ``Hom(u, v) (x) Hom(v, w) -> Hom(u, w)`` if a rule pins it."""
    if target == 0 or mult_uv == 0 or mult_vw == 0:
        return (0, 0)
    if _same(u, v) or _same(v, w):
        return (target, target)
    if ctx.oracle != "quadric" or u.space.is_total:
        return None
    lines = [_line_degree(x) for x in (u, v, w)]
    if u.space.kind == "LGr" and None not in lines:
        rk = quadric_mult_rank(lines[1] - lines[0], lines[2] - lines[1])
        notes.append(f"quadric oracle: multiplication rank H0(O({lines[1] - lines[0]})) x H0(O({lines[2] - lines[1]})) -> H0(O({lines[2] - lines[0]})) = {rk}")
        return (rk, rk)
    uv = tensor_decompose(dual_class(u), v).irreducible() if isinstance(u, BundleClass) and isinstance(v, BundleClass) else None
    uw = tensor_decompose(dual_class(u), w).irreducible() if isinstance(u, BundleClass) and isinstance(w, BundleClass) else None
    if uv is not None and uw is not None and mult_uv != 0:
        notes.append(f"quadric oracle (equivariant): Hom({_short(u)},{_short(w)}) is irreducible, composition onto it is surjective")
        return (target, target)
    return None


def _short(x) -> str:
    return format_object(x).split(" @")[0]


def _line_degree(x) -> Optional[int]:
    if not isinstance(x, BundleClass):
        return None
    irr = x.irreducible()
    if irr is None:
        return None
    k = irr.levi[0]
    return k if irr == irr.space.line(k) else None


def _les_second(x, e: ExtensionObject, oracle: str) -> ExtTable:
    """``Ext(x, e)`` for a presentation object ``e`` in the second slot."""
    ctx = _Ctx(oracle)
    sp = e.space
    top = sp.dimension + 1
    a, b = e.sub, e.quot
    notes: List[str] = []
    euler = None if sp.is_total else euler_pairing(x, e)
    if e.kind == "extension":
        p, r = _ext(x, a, oracle), _ext(x, b, oracle)
        delta = {}
        for i in range(top + 1):
            lo, hi = _rank_bounds(r.bound(i), p.bound(i + 1))
            if i == 0 and hi != 0 and _same(x, b):
                lo = 1
                notes.append(f"connecting map sends id to the extension class of {_short(e)}")
            delta[i] = (lo, hi)
        return _finish(_solve_middle(p, r, delta, top), sp, euler, notes, (p, r))
    if e.kind == "kernel":
        # 0 -> e -> a^h -> b -> 0 ; Ext(x, e) -> Ext(x, a)^h -> Ext(x, b)
        qa = _ext(x, a, oracle)
        q = _scale(qa, e.h)
        r = _ext(x, b, oracle)
        phi = {}
        for i in range(top + 1):
            lo, hi = _rank_bounds(q.bound(i), r.bound(i))
            if i == 0 and hi != 0:
                pinned = _composition_rank(x, a, b, qa.bound(0)[1], e.h, r.bound(0)[1], ctx, notes)
                if pinned is not None:
                    lo, hi = pinned
            phi[i] = (lo, hi)
        return _finish(_solve_left(q, r, phi, top), sp, euler, notes, (q, r))
    # cokernel: 0 -> a -> b^h -> e -> 0 ; Ext(x, a) -> Ext(x, b)^h -> Ext(x, e)
    p = _ext(x, a, oracle)
    q = _scale(_ext(x, b, oracle), e.h)
    psi = {}
    for i in range(top + 1):
        lo, hi = _rank_bounds(p.bound(i), q.bound(i))
        if i == 0 and hi != 0:
            lo = hi = p.bound(0)[1]
            if lo is not INF:
                notes.append("Hom(x, -) is left exact")
        psi[i] = (lo, hi)
    return _finish(_solve_right(p, q, psi, top), sp, euler, notes, (p, q))


def _les_first(e: ExtensionObject, x, oracle: str) -> ExtTable:
    """``Ext(e, x)`` for a presentation object ``e`` in the first slot."""
    ctx = _Ctx(oracle)
    sp = e.space
    top = sp.dimension + 1
    a, b = e.sub, e.quot
    notes: List[str] = []
    euler = None if sp.is_total else euler_pairing(e, x)
    if e.kind == "extension":
        # Ext(b, x) -> Ext(e, x) -> Ext(a, x) --delta--> Ext^{+1}(b, x)
        p, r = _ext(b, x, oracle), _ext(a, x, oracle)
        delta = {}
        for i in range(top + 1):
            lo, hi = _rank_bounds(r.bound(i), p.bound(i + 1))
            if i == 0 and hi != 0 and _same(x, a):
                lo = 1
                notes.append(f"connecting map sends id to the extension class of {_short(e)}")
            delta[i] = (lo, hi)
        return _finish(_solve_middle(p, r, delta, top), sp, euler, notes, (p, r))
    if e.kind == "kernel":
        # 0 -> e -> a^h -> b -> 0 ; Ext(b, x) -> Ext(a, x)^h -> Ext(e, x) -> Ext^{+1}(b, x)
        p = _ext(b, x, oracle)
        q = _scale(_ext(a, x, oracle), e.h)
        psi = {}
        for i in range(top + 1):
            lo, hi = _rank_bounds(p.bound(i), q.bound(i))
            if i == 0 and hi != 0:
                lo = hi = p.bound(0)[1]
                if lo is not INF:
                    notes.append("Hom(-, x) is left exact")
            psi[i] = (lo, hi)
        return _finish(_solve_right(p, q, psi, top), sp, euler, notes, (p, q))
    # cokernel: 0 -> a -> b^h -> e -> 0 ; Ext(e, x) -> Ext(b, x)^h -> Ext(a, x)
    qb = _ext(b, x, oracle)
    q = _scale(qb, e.h)
    r = _ext(a, x, oracle)
    phi = {}
    for i in range(top + 1):
        lo, hi = _rank_bounds(q.bound(i), r.bound(i))
        if i == 0 and hi != 0:
            pinned = _composition_rank(a, b, x, e.h, qb.bound(0)[1], r.bound(0)[1], ctx, notes)
            if pinned is not None:
                lo, hi = pinned
        phi[i] = (lo, hi)
    return _finish(_solve_left(q, r, phi, top), sp, euler, notes, (q, r))


def _scale(t: ExtTable, h: int) -> ExtTable:
    return ExtTable(tuple((i, lo * h, hi * h) for i, lo, hi in t.bounds if h), None if t.euler is None else t.euler * h, t.provenance)


# ------------------------------------------------------ zero-section objects

def restrict_to_zero_section(e, oracle: str = "quadric") -> BundleClass:
    """``e|_Z`` for a bundle or extension object on a total space."""
    sp = e.space
    base = sp.base
    if isinstance(e, BundleClass):
        return e.moved(base)
    if isinstance(e, ExtensionObject) and e.kind == "extension":
        a, b = e.sub.moved(base), e.quot.moved(base)
        t = ext_table(b, a, oracle=oracle)
        if t.certified and t.bound(1)[1] == 0:
            return a + b  # the restricted extension class lies in Ext^1_Z(b, a) = 0
        raise ValueError(f"restriction of {e} to the zero section need not split")
    if isinstance(e, DirectSum):
        out = BundleClass.zero(base)
        for p in e.parts:
            out = out + restrict_to_zero_section(p, oracle)
        return out
    raise ValueError(f"cannot restrict {e} to the zero section")


def normal_data(sp: Space) -> Tuple[BundleClass, BundleClass, int]:
    """``(N, det N, codim)`` for the zero section of a total space."""
    from .bundles import determinant
    n = sp.fiber_bundle
    return n, BundleClass.of(determinant(n)), n.rank


def ext_zero_section(f: BundleClass, e, oracle: str = "quadric") -> ExtTable:
    """``Ext^i(iota_* f, e) = Ext^{i-c}_Z(f, e|_Z (x) det N)``."""
    if isinstance(f, ZeroSectionObject):
        f = f.base_class
    sp = e.space
    _, det, c = normal_data(sp)
    restricted = restrict_to_zero_section(e, oracle)
    t = ext_table(f, tensor_decompose(restricted, det), oracle=oracle)
    return ExtTable(tuple((i + c, lo, hi) for i, lo, hi in t.bounds), None,
                    t.provenance + (f"Grothendieck duality for the zero section (codim {c})",))


@dataclass(frozen=True)
class SpectralTable:
    e2: Dict[Tuple[int, int], int]
    degenerate: bool
    totals: Optional[Dict[int, int]]
    columns: Dict[int, BundleClass]


def local_to_global(f: BundleClass, g: BundleClass, sp: Space) -> SpectralTable:
    """``E_2^{p,q} = H^p(Z, wedge^q N (x) f^* (x) g) => Ext^{p+q}(iota_* f, iota_* g)``."""
    n, _, c = normal_data(sp)
    hom = tensor_decompose(dual_class(f), g)
    e2: Dict[Tuple[int, int], int] = {}
    cols: Dict[int, BundleClass] = {}
    for q in range(c + 1):
        col = tensor_decompose(wedge_power(q, n), hom)
        cols[q] = col
        for p, d in bbw_cohomology(col).nonzero().items():
            e2[(p, q)] = d
    degenerate = True
    for (p, q) in e2:
        for r in range(2, c + 2):
            if (p + r, q - r + 1) in e2:
                degenerate = False
    totals = None
    if degenerate:
        totals = {}
        for (p, q), d in e2.items():
            totals[p + q] = totals.get(p + q, 0) + d
        totals = dict(sorted(totals.items()))
    return SpectralTable(dict(sorted(e2.items())), degenerate, totals, cols)


def _ext_zero(a, b, oracle: str) -> ExtTable:
    if isinstance(a, ZeroSectionObject) and isinstance(b, ZeroSectionObject):
        st = local_to_global(a.base_class, b.base_class, a.space)
        if st.degenerate:
            return ExtTable.exact(st.totals, None, ("local-to-global spectral sequence degenerates positionally",))
        lo: Dict[int, int] = {}
        hi: Dict[int, int] = {}
        for (p, q), d in st.e2.items():
            hi[p + q] = hi.get(p + q, 0) + d
        return ExtTable(tuple((i, 0, hi[i]) for i in sorted(hi)), None, ("local-to-global spectral sequence",))
    if isinstance(a, ZeroSectionObject):
        return ext_zero_section(a.base_class, b, oracle)
    # Ext(e, iota_* g) = Ext_Z(e|_Z, g)
    restricted = restrict_to_zero_section(a, oracle)
    return ext_table(restricted, b.base_class, oracle=oracle)


# ------------------------------------------------------------ certificates

@dataclass(frozen=True)
class Certificate:
    verdict: str  # Pass | Fail | Inconclusive
    witness: Optional[Tuple[str, str, int, Dim]] = None
    obstruction: Optional[str] = None
    table: Tuple[Tuple[str, str, ExtTable], ...] = ()

    @property
    def passed(self) -> bool:
        return self.verdict == "Pass"

    def provenance(self) -> Tuple[str, ...]:
        out = set()
        for _, _, t in self.table:
            out.update(t.provenance)
        return tuple(sorted(out))


def _pieces(obj) -> List[object]:
    if isinstance(obj, (list, tuple)):
        out = []
        for o in obj:
            out.extend(_pieces(o))
        return out
    return summands(obj)


def _unique(objs: Sequence[object]) -> List[object]:
    seen, out = set(), []
    for o in objs:
        if o not in seen:
            seen.add(o)
            out.append(o)
    return out


def check_tilting(t, sp: Optional[Space] = None, oracle: str = "quadric") -> Certificate:
    """Pairwise ``Ext^{>0}`` vanishing over all ordered pairs of summands (generation is not checked)."""
    parts = _unique(_pieces(t))
    rows = []
    fail = None
    inconclusive = None
    for x in parts:
        for y in parts:
            tab = ext_table(x, y, sp, oracle)
            rows.append((_short(x), _short(y), tab))
            for i, lo, hi in tab.bounds:
                if i < 1 or hi == 0:
                    continue
                if lo != 0 and fail is None:
                    fail = (_short(x), _short(y), i, lo)
                elif lo == 0 and inconclusive is None:
                    inconclusive = f"Ext^{i}({_short(x)}, {_short(y)}) in [0, {hi}]"
    if fail:
        return Certificate("Fail", witness=fail, table=tuple(rows))
    if inconclusive:
        return Certificate("Inconclusive", obstruction=inconclusive, table=tuple(rows))
    return Certificate("Pass", table=tuple(rows))


def check_exceptional(e, oracle: str = "quadric") -> Certificate:
    tab = ext_table(e, e, oracle=oracle)
    rows = ((_short(e), _short(e), tab),)
    if not tab.certified:
        return Certificate("Inconclusive", obstruction=f"RHom({_short(e)}, {_short(e)}) not certified", table=rows)
    dims = tab.dims
    if dims == {0: 1}:
        return Certificate("Pass", table=rows)
    bad = next(((i, d) for i, d in sorted(dims.items()) if (i, d) != (0, 1)), (0, dims.get(0, 0)))
    return Certificate("Fail", witness=(_short(e), _short(e), bad[0], bad[1]), table=rows)


def check_collection(objs: Sequence[object], oracle: str = "quadric") -> Certificate:
    """Each object exceptional and ``RHom(E_l, E_k) = 0`` for ``l > k``."""
    rows = []
    for e in objs:
        c = check_exceptional(e, oracle)
        rows.extend(c.table)
        if not c.passed:
            return Certificate(c.verdict, c.witness, c.obstruction, tuple(rows))
    for k in range(len(objs)):
        for l in range(k + 1, len(objs)):
            tab = ext_table(objs[l], objs[k], oracle=oracle)
            rows.append((_short(objs[l]), _short(objs[k]), tab))
            for i, lo, hi in tab.bounds:
                if lo != 0:
                    return Certificate("Fail", witness=(_short(objs[l]), _short(objs[k]), i, lo), table=tuple(rows))
                if hi != 0:
                    return Certificate("Inconclusive", obstruction=f"Ext^{i}({_short(objs[l])}, {_short(objs[k])}) in [0, {hi}]", table=tuple(rows))
    return Certificate("Pass", table=tuple(rows))


def check_spherical_zero_section(f: BundleClass, sp: Space) -> Tuple[SpectralTable, Certificate]:
    if sp.kind not in ("Y", "Yp"):
        raise ValueError("spherical checks are set up on Y and Y'")
    f = f.moved(sp.base)
    st = local_to_global(f, f, sp)
    if not st.degenerate:
        return st, Certificate("Inconclusive", obstruction="spectral sequence may have differentials")
    want = {0: 1, sp.dimension: 1}
    if st.totals == want:
        return st, Certificate("Pass")
    bad = next((i, d) for i, d in sorted(st.totals.items()) if want.get(i) != d) if st.totals else (0, 0)
    return st, Certificate("Fail", witness=(_short(f), _short(f), bad[0], bad[1]))
