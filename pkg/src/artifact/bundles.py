"""Registered spaces and formal classes of homogeneous bundles on them.

Every irreducible homogeneous bundle is recorded by its Levi weight, an integer
tuple whose meaning is fixed per space:

=============  ====================  =====================================
space          Levi weight           examples
=============  ====================  =====================================
Gr24           (a1, a2 | b1, b2)     Sym^k S(l) = (l, l-k, 0, 0), Q = (0, 0, 0, -1)
P^m            (d | c1 .. cm)        O(d) = (d, 0, .., 0), Q = (0 | 0, .., -1)
LGr            (a, b), a >= b        Sym^k S(l) = (l, l-k)
P              (d, m), m >= 0        O(d) = (d, 0), L^perp/L = (0, 1)
=============  ====================  =====================================

The Grassmannian and projective spaces carry GL(n)-weights read directly as
ambient weights; LGr and P carry Sp4-weights.  Total spaces (Y, Y', Cyc(n))
reuse the Levi weights of their base for pulled-back bundles.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple, Union

from .lr import gl_tensor
from .weyl import GL, SP4, GroupTag, Weight, weyl_dim

Levi = Tuple[int, ...]


# ---------------------------------------------------------------- spaces

@dataclass(frozen=True, order=True)
class Space:
    kind: str
    n: int = 0

    @property
    def name(self) -> str:
        if self.kind == "Proj":
            return "P3GL" if self.n == 3 else f"P^{self.n}"
        if self.kind == "Cyc":
            return f"Cyc({self.n})"
        return {"Gr24": "Gr24", "LGr": "LGr", "P3Sp": "P", "Y": "Y", "Yp": "Y'"}[self.kind]

    def __str__(self) -> str:
        return self.name

    @property
    def is_total(self) -> bool:
        return self.kind in ("Y", "Yp", "Cyc")

    @property
    def base(self) -> Optional["Space"]:
        if self.kind == "Y":
            return LGR
        if self.kind == "Yp":
            return P3SP
        if self.kind == "Cyc":
            return proj(self.n - 1)
        return None

    @property
    def homogeneous(self) -> "Space":
        """The space whose Levi weights label bundles here."""
        return self.base if self.is_total else self

    @property
    def dimension(self) -> int:
        if self.kind == "Gr24":
            return 4
        if self.kind in ("LGr", "P3Sp"):
            return 3
        if self.kind == "Proj":
            return self.n
        if self.kind in ("Y", "Yp"):
            return 5
        return self.n

    @property
    def group(self) -> GroupTag:
        h = self.homogeneous
        if h.kind == "Gr24":
            return GL(4)
        if h.kind == "Proj":
            return GL(h.n + 1)
        return SP4

    @property
    def blocks(self) -> Tuple[Tuple[str, int], ...]:
        """Levi factors as ``(kind, size)``; kind is ``GL`` or ``Sp2``."""
        h = self.homogeneous
        if h.kind == "Gr24":
            return (("GL", 2), ("GL", 2))
        if h.kind == "Proj":
            return (("GL", 1), ("GL", h.n))
        if h.kind == "LGr":
            return (("GL", 2),)
        return (("GL", 1), ("Sp2", 1))

    @property
    def levi_len(self) -> int:
        return sum(s for _, s in self.blocks)

    def line(self, k: int) -> "IrredClass":
        """The line bundle O(k)."""
        h = self.homogeneous
        if h.kind == "Gr24":
            w = (k, k, 0, 0)
        elif h.kind == "Proj":
            w = (k,) + (0,) * h.n
        elif h.kind == "LGr":
            w = (k, k)
        else:
            w = (k, 0)
        return IrredClass(self, w)

    @property
    def canonical_class(self) -> "BundleClass":
        if self.is_total:
            return BundleClass.of(self.line(0))
        idx = {"Gr24": 4, "LGr": 3, "P3Sp": 4}.get(self.kind, self.n + 1)
        return BundleClass.of(self.line(-idx))

    @property
    def fiber_bundle(self) -> Optional["BundleClass"]:
        """The bundle on the base whose total space this is."""
        b = self.base
        if b is None:
            return None
        if self.kind == "Y":
            return BundleClass.of(IrredClass(b, (-1, -2)))
        if self.kind == "Yp":
            return BundleClass.of(IrredClass(b, (-2, 1)))
        return BundleClass.of(b.line(-self.n))

    def on_base(self, e: "BundleClass") -> "BundleClass":
        return e.moved(self.base)

    def pullback(self, e: "BundleClass") -> "BundleClass":
        return e.moved(self)


def proj(m: int) -> Space:
    if m < 1:
        raise ValueError("P^m needs m >= 1")
    return Space("Proj", m)


def cyclic(n: int) -> Space:
    if n < 2:
        raise ValueError("Cyc(n) needs n >= 2")
    return Space("Cyc", n)


GR24 = Space("Gr24")
P3GL = proj(3)
LGR = Space("LGr")
P3SP = Space("P3Sp")
Y = Space("Y")
YP = Space("Yp")

_ALIASES = {
    "gr24": GR24, "gr(2,4)": GR24,
    "p3gl": P3GL, "p3_gl": P3GL,
    "lgr": LGR, "lgr_sp": LGR,
    "p": P3SP, "p3sp": P3SP, "p3_sp": P3SP,
    "y": Y, "tot_y": Y,
    "y'": YP, "yp": YP, "yprime": YP, "tot_yprime": YP,
}


def space_from_name(text: str) -> Space:
    t = text.strip()
    low = t.lower().replace(" ", "")
    if low in _ALIASES:
        return _ALIASES[low]
    for prefix, make in (("cyc(", cyclic), ("tot_cyclic(", cyclic)):
        if low.startswith(prefix) and low.endswith(")"):
            return make(int(low[len(prefix):-1]))
    if low.startswith("p^"):
        return proj(int(low[2:]))
    raise ValueError(f"unknown space {text!r}")


# ------------------------------------------------------------- irreducibles

def _split(space: Space, w: Levi) -> List[Levi]:
    out, i = [], 0
    for _, s in space.blocks:
        out.append(tuple(w[i:i + s]))
        i += s
    return out


def _block_dim(kind: str, w: Levi) -> int:
    if kind == "Sp2":
        return w[0] + 1
    return weyl_dim(Weight(GL(len(w)), w))


def _block_dual(kind: str, w: Levi) -> Levi:
    if kind == "Sp2":
        return w
    return tuple(-a for a in reversed(w))


def _block_dominant(kind: str, w: Levi) -> bool:
    if kind == "Sp2":
        return w[0] >= 0
    return all(w[i] >= w[i + 1] for i in range(len(w) - 1))


@dataclass(frozen=True, order=True)
class IrredClass:
    space: Space
    levi: Levi

    def __post_init__(self) -> None:
        w = tuple(int(a) for a in self.levi)
        object.__setattr__(self, "levi", w)
        if len(w) != self.space.levi_len:
            raise ValueError(f"Levi weight {w} has wrong length for {self.space}")
        for (kind, _), b in zip(self.space.blocks, _split(self.space, w)):
            if not _block_dominant(kind, b):
                raise ValueError(f"Levi weight {w} is not Levi-dominant on {self.space}")

    @property
    def rank(self) -> int:
        r = 1
        for (kind, _), b in zip(self.space.blocks, _split(self.space, self.levi)):
            r *= _block_dim(kind, b)
        return r

    def dual(self) -> "IrredClass":
        parts = [_block_dual(k, b) for (k, _), b in zip(self.space.blocks, _split(self.space, self.levi))]
        return IrredClass(self.space, sum(parts, ()))

    def ambient_weight(self) -> Weight:
        return Weight(self.space.group, self.levi)

    def twist(self, k: int) -> "IrredClass":
        return IrredClass(self.space, tuple(a + b for a, b in zip(self.levi, self.space.line(k).levi)))

    def moved(self, space: Space) -> "IrredClass":
        if space.homogeneous != self.space.homogeneous:
            raise ValueError(f"cannot move a bundle from {self.space} to {space}")
        return IrredClass(space, self.levi)

    def __str__(self) -> str:
        return format_irred(self)


# ------------------------------------------------------------------ classes

@dataclass(frozen=True)
class BundleClass:
    """A formal direct sum of irreducibles with positive multiplicities."""

    space: Space
    terms: Tuple[Tuple[IrredClass, int], ...] = ()

    def __post_init__(self) -> None:
        acc: Counter = Counter()
        for irr, m in self.terms:
            if irr.space != self.space:
                raise ValueError(f"term on {irr.space} inside a class on {self.space}")
            if m < 0:
                raise ValueError("negative multiplicity in a bundle class")
            acc[irr] += m
        object.__setattr__(self, "terms", tuple(sorted((i, m) for i, m in acc.items() if m)))

    @staticmethod
    def of(irr: IrredClass, mult: int = 1) -> "BundleClass":
        return BundleClass(irr.space, ((irr, mult),))

    @staticmethod
    def zero(space: Space) -> "BundleClass":
        return BundleClass(space, ())

    @property
    def rank(self) -> int:
        return sum(m * i.rank for i, m in self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def irreducible(self) -> Optional[IrredClass]:
        if len(self.terms) == 1 and self.terms[0][1] == 1:
            return self.terms[0][0]
        return None

    def __add__(self, other: "BundleClass") -> "BundleClass":
        _check_space(self.space, other.space)
        return BundleClass(self.space, self.terms + other.terms)

    def times(self, k: int) -> "BundleClass":
        return BundleClass(self.space, tuple((i, m * k) for i, m in self.terms))

    def twist(self, k: int) -> "BundleClass":
        return BundleClass(self.space, tuple((i.twist(k), m) for i, m in self.terms))

    def moved(self, space: Space) -> "BundleClass":
        return BundleClass(space, tuple((i.moved(space), m) for i, m in self.terms))

    def kclass(self) -> "KClass":
        return KClass(self.space, self.terms)

    def __str__(self) -> str:
        return format_object(self)


def _check_space(a: Space, b: Space) -> None:
    if a != b:
        raise ValueError(f"space mismatch: {a} vs {b}")


@dataclass(frozen=True)
class KClass:
    """A virtual class: integer combination of irreducibles."""

    space: Space
    terms: Tuple[Tuple[IrredClass, int], ...] = ()

    def __post_init__(self) -> None:
        acc: Counter = Counter()
        for irr, m in self.terms:
            acc[irr] += m
        object.__setattr__(self, "terms", tuple(sorted((i, m) for i, m in acc.items() if m)))

    def __add__(self, other: "KClass") -> "KClass":
        _check_space(self.space, other.space)
        return KClass(self.space, self.terms + other.terms)

    def __neg__(self) -> "KClass":
        return KClass(self.space, tuple((i, -m) for i, m in self.terms))

    def __sub__(self, other: "KClass") -> "KClass":
        return self + (-other)

    def scale(self, k: int) -> "KClass":
        return KClass(self.space, tuple((i, k * m) for i, m in self.terms))

    @property
    def rank(self) -> int:
        return sum(m * i.rank for i, m in self.terms)

    def is_effective(self) -> bool:
        return all(m > 0 for _, m in self.terms)

    def as_bundle(self) -> BundleClass:
        if not self.is_effective():
            raise ValueError("virtual class is not effective")
        return BundleClass(self.space, self.terms)


# ----------------------------------------------------- extension objects

@dataclass(frozen=True)
class ExtensionObject:
    """A bundle known through a two-term presentation.

    ``kind`` is one of

    * ``extension``: ``0 -> sub -> E -> quot -> 0`` with a chosen non-split class;
    * ``kernel``:    ``0 -> E -> sub^h -> quot -> 0`` (evaluation map);
    * ``cokernel``:  ``0 -> sub -> quot^h -> E -> 0`` (coevaluation map).
    """

    space: Space
    kind: str
    sub: "Obj"
    quot: "Obj"
    h: int = 1
    name: Optional[str] = None
    label: str = "generator"

    def __post_init__(self) -> None:
        if self.kind not in ("extension", "kernel", "cokernel"):
            raise ValueError(f"unknown extension kind {self.kind!r}")
        _check_space(self.sub.space, self.space)
        _check_space(self.quot.space, self.space)

    @property
    def filtration(self) -> Tuple[BundleClass, ...]:
        if self.kind == "extension":
            return (self.sub, self.quot)
        if self.kind == "kernel":
            return (self.sub.times(self.h), self.quot)
        return (self.sub, self.quot.times(self.h))

    def kclass(self) -> KClass:
        a, b = kclass_of(self.sub), kclass_of(self.quot)
        if self.kind == "extension":
            return a + b
        if self.kind == "kernel":
            return a.scale(self.h) - b
        return b.scale(self.h) - a

    @property
    def rank(self) -> int:
        return self.kclass().rank

    def __str__(self) -> str:
        return format_object(self)


@dataclass(frozen=True)
class ZeroSectionObject:
    """``iota_* F`` for a bundle ``F`` on the zero section of a total space."""

    space: Space
    base_class: BundleClass

    def __post_init__(self) -> None:
        if not self.space.is_total:
            raise ValueError("zero-section objects live on total spaces")
        _check_space(self.base_class.space, self.space.base)

    def __str__(self) -> str:
        return format_object(self)


@dataclass(frozen=True)
class DirectSum:
    space: Space
    parts: Tuple[object, ...] = field(default_factory=tuple)

    def __str__(self) -> str:
        return format_object(self)


Obj = Union[BundleClass, ExtensionObject, ZeroSectionObject, DirectSum]


def summands(obj: Obj) -> List[object]:
    """Indecomposable-ish pieces: irreducibles (as classes) and presentation objects."""
    if isinstance(obj, BundleClass):
        out = []
        for irr, m in obj.terms:
            out.extend([BundleClass.of(irr)] * m)
        return out
    if isinstance(obj, DirectSum):
        out = []
        for p in obj.parts:
            out.extend(summands(p))
        return out
    return [obj]


def kclass_of(obj: Obj) -> KClass:
    if isinstance(obj, (BundleClass, ExtensionObject)):
        return obj.kclass()
    if isinstance(obj, DirectSum):
        acc = KClass(obj.space)
        for p in obj.parts:
            acc = acc + kclass_of(p)
        return acc
    raise ValueError("zero-section objects have no class among bundles")


def sigma(k: int) -> ExtensionObject:
    """The non-split extension ``0 -> O(k-1) -> Sigma(k) -> O(k+2) -> 0`` on Y'."""
    return ExtensionObject(YP, "extension", BundleClass.of(YP.line(k - 1)),
                           BundleClass.of(YP.line(k + 2)), 1, f"Sigma({k})")


def omega1_p4(k: int, space: Space = LGR) -> ExtensionObject:
    """Omega^1 of P^4 restricted to LGr = Q_3, twisted by O(k) (Euler sequence)."""
    if space.homogeneous != LGR:
        raise ValueError("Omega1P4 lives on LGr or Y")
    return ExtensionObject(space, "kernel", BundleClass.of(space.line(k - 1)),
                           BundleClass.of(space.line(k)), 5, f"Omega1P4({k})")


def tangent_p4(k: int, space: Space = LGR) -> ExtensionObject:
    """T_{P^4}(k) restricted to LGr: cokernel of O(k) -> O(k+1)^5."""
    if space.homogeneous != LGR:
        raise ValueError("TP4 lives on LGr or Y")
    return ExtensionObject(space, "cokernel", BundleClass.of(space.line(k)),
                           BundleClass.of(space.line(k + 1)), 5, f"TP4({k})")


# ------------------------------------------------------------ tensor calculus

def _sp2_tensor(p: int, q: int) -> Dict[Levi, int]:
    return {(p + q - 2 * t,): 1 for t in range(min(p, q) + 1)}


@lru_cache(maxsize=None)
def _irred_tensor(space: Space, a: Levi, b: Levi) -> Tuple[Tuple[Levi, int], ...]:
    results: Dict[Levi, int] = {(): 1}
    for (kind, _), x, y in zip(space.blocks, _split(space, a), _split(space, b)):
        piece = _sp2_tensor(x[0], y[0]) if kind == "Sp2" else gl_tensor(x, y)
        nxt: Counter = Counter()
        for w, m in results.items():
            for u, c in piece.items():
                nxt[w + u] += m * c
        results = dict(nxt)
    return tuple(sorted(results.items()))


def tensor_irred(a: IrredClass, b: IrredClass) -> BundleClass:
    _check_space(a.space, b.space)
    return BundleClass(a.space, tuple((IrredClass(a.space, w), m) for w, m in _irred_tensor(a.space, a.levi, b.levi)))


def tensor_decompose(a: BundleClass, b: BundleClass) -> BundleClass:
    _check_space(a.space, b.space)
    out = BundleClass.zero(a.space)
    for x, m in a.terms:
        for y, n in b.terms:
            out = out + tensor_irred(x, y).times(m * n)
    return out


def tensor_k(a: KClass, b: KClass) -> KClass:
    _check_space(a.space, b.space)
    acc: Counter = Counter()
    for x, m in a.terms:
        for y, n in b.terms:
            for irr, c in tensor_irred(x, y).terms:
                acc[irr] += m * n * c
    return KClass(a.space, tuple(acc.items()))


def dual_class(e: BundleClass) -> BundleClass:
    return BundleClass(e.space, tuple((i.dual(), m) for i, m in e.terms))


def dual_k(e: KClass) -> KClass:
    return KClass(e.space, tuple((i.dual(), m) for i, m in e.terms))


class PlethysmError(ValueError):
    pass


def sym_power(l: int, e: BundleClass) -> BundleClass:
    """``Sym^l`` of a line bundle or of (standard rank-2 representation) (x) line."""
    if l < 0:
        return BundleClass.zero(e.space)
    if l == 0:
        return BundleClass.of(e.space.line(0))
    irr = e.irreducible()
    # every rank-2 irreducible here is (standard rep) (x) (line), and Sym^l scales its weight
    if irr is None or irr.rank > 2:
        raise PlethysmError(f"Sym^{l} of {e} is outside the supported plethysm shapes")
    return BundleClass.of(IrredClass(e.space, tuple(l * a for a in irr.levi)))


def _det_levi(irr: IrredClass) -> Levi:
    r = irr.rank
    parts = []
    for (kind, size), b in zip(irr.space.blocks, _split(irr.space, irr.levi)):
        if kind == "Sp2":
            parts.append((0,))
            continue
        s = sum(b) * r // size
        parts.append((s,) * size)
    return sum(parts, ())


def determinant(e: BundleClass) -> IrredClass:
    acc = [0] * e.space.levi_len
    for irr, m in e.terms:
        for i, a in enumerate(_det_levi(irr)):
            acc[i] += m * a
    return IrredClass(e.space, tuple(acc))


def wedge_power(q: int, e: BundleClass) -> BundleClass:
    if q < 0 or q > e.rank:
        return BundleClass.zero(e.space)
    if q == 0:
        return BundleClass.of(e.space.line(0))
    if q == 1:
        return e
    if e.rank > 2:
        raise PlethysmError(f"wedge^{q} of the rank-{e.rank} class {e} is not supported")
    return BundleClass.of(determinant(e))


# ---------------------------------------------------------------- printing

def _fmt_twist(k: int) -> str:
    return "" if k == 0 else f"({k})"


def format_irred(irr: IrredClass) -> str:
    sp = irr.space
    h = sp.homogeneous
    w = irr.levi
    if sp.kind == "Cyc":
        if w[1:] == (0,) * (len(w) - 1):
            return "O" if w[0] == 0 else f"L^{-w[0]}"
    if h.kind == "LGr" or h.kind == "P3Sp":
        if h.kind == "LGr":
            k, twist = w[0] - w[1], w[0]
        else:
            k, twist = w[1], w[0]
        if k == 0:
            return f"O{_fmt_twist(twist)}"
        if k == 1:
            return f"S{_fmt_twist(twist)}"
        return f"Sym^{k} S{_fmt_twist(twist)}"
    if h.kind == "Gr24":
        a1, a2, b1, b2 = w
        if (b1, b2) == (0, 0):
            k = a1 - a2
            if k == 0:
                return f"O{_fmt_twist(a1)}"
            return (f"S{_fmt_twist(a1)}" if k == 1 else f"Sym^{k} S{_fmt_twist(a1)}")
        if (b1, b2) == (0, -1) and a1 == a2:
            return f"Q{_fmt_twist(a1)}"
    if h.kind == "Proj":
        d, rest = w[0], w[1:]
        if all(c == 0 for c in rest):
            return f"O{_fmt_twist(d)}"
        q = sum(1 for c in rest if c == -1)
        if all(c in (0, -1) for c in rest) and q:
            return f"Q{_fmt_twist(d)}" if q == 1 else f"wedge^{q} Q{_fmt_twist(d)}"
    return "W(" + ",".join(str(a) for a in w) + ")"


def _fmt_terms(e: BundleClass) -> List[str]:
    out = []
    for irr, m in e.terms:
        s = format_irred(irr)
        out.append(s if m == 1 else f"{s}*{m}")
    return out


def _fmt_body(obj) -> str:
    if isinstance(obj, BundleClass):
        return "+".join(_fmt_terms(obj)) if obj.terms else "0"
    if isinstance(obj, ExtensionObject):
        if obj.name:
            return obj.name
        tag = {"extension": "ext", "kernel": "ker", "cokernel": "coker"}[obj.kind]
        return f"{tag}[{_fmt_body(obj.sub)}; {_fmt_body(obj.quot)}]"
    if isinstance(obj, ZeroSectionObject):
        return f"zero[{_fmt_body(obj.base_class)}]"
    if isinstance(obj, DirectSum):
        return "+".join(_fmt_body(p) for p in obj.parts) if obj.parts else "0"
    raise TypeError(f"cannot format {obj!r}")


def format_object(obj) -> str:
    """Canonical text form, including the ``@space`` suffix."""
    return f"{_fmt_body(obj)} @{obj.space.name}"


def normalize(parts: Iterable[object], space: Space):
    """Collapse a list of objects into a class, a single object, or a direct sum."""
    parts = list(parts)
    classes = [p for p in parts if isinstance(p, BundleClass)]
    others = [p for p in parts if not isinstance(p, BundleClass)]
    merged = BundleClass.zero(space)
    for c in classes:
        merged = merged + c
    if not others:
        return merged
    flat: List[object] = []
    for o in others:
        flat.extend(o.parts if isinstance(o, DirectSum) else [o])
    if len(flat) == 1 and merged.is_zero:
        return flat[0]
    head = [merged] if not merged.is_zero else []
    return DirectSum(space, tuple(head + sorted(flat, key=_fmt_body)))

