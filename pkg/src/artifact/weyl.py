"""Weyl group combinatorics for GL(n) and Sp4.

Weights are integer tuples.  The tilde action is ``w . lam = w(lam + rho) - rho``;
dominantization returns the dominant representative together with the length
of the Weyl element that produced it, or ``SINGULAR`` when ``lam + rho`` sits
on a wall.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import prod
from typing import Optional, Tuple, Union


@dataclass(frozen=True, order=True)
class GroupTag:
    """Either ``GL(n)`` or ``Sp4``."""

    kind: str
    n: int = 0

    def __post_init__(self) -> None:
        if self.kind == "GL":
            if self.n < 1:
                raise ValueError("GL(n) needs n >= 1")
        elif self.kind == "Sp4":
            object.__setattr__(self, "n", 2)
        else:
            raise ValueError(f"unknown group kind {self.kind!r}")

    @property
    def rank(self) -> int:
        return self.n

    @property
    def rho(self) -> Tuple[int, ...]:
        if self.kind == "GL":
            return tuple(range(self.n - 1, -1, -1))
        return (2, 1)

    @property
    def n_positive_roots(self) -> int:
        if self.kind == "GL":
            return self.n * (self.n - 1) // 2
        return 4

    def __str__(self) -> str:
        return f"GL({self.n})" if self.kind == "GL" else "Sp4"


def GL(n: int) -> GroupTag:
    return GroupTag("GL", n)


SP4 = GroupTag("Sp4")


@dataclass(frozen=True, order=True)
class Weight:
    group: GroupTag
    coords: Tuple[int, ...]

    def __post_init__(self) -> None:
        coords = tuple(int(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) != self.group.rank:
            raise ValueError(f"{self.group} weight needs {self.group.rank} coordinates, got {len(coords)}")

    def __add__(self, other: "Weight") -> "Weight":
        _same_group(self, other)
        return Weight(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def scale(self, k: int) -> "Weight":
        return Weight(self.group, tuple(k * a for a in self.coords))

    def __str__(self) -> str:
        return f"{self.group}{self.coords}"


def _same_group(a: Weight, b: Weight) -> None:
    if a.group != b.group:
        raise ValueError(f"group mismatch: {a.group} vs {b.group}")


class _Singular:
    _inst: Optional["_Singular"] = None

    def __new__(cls) -> "_Singular":
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "SINGULAR"

    def __reduce__(self):
        return (_Singular, ())


SINGULAR = _Singular()


@dataclass(frozen=True)
class Regular:
    dominant: Weight
    length: int


DominantizationResult = Union[_Singular, Regular]


def is_dominant(w: Weight) -> bool:
    c = w.coords
    if w.group.kind == "GL":
        return all(c[i] >= c[i + 1] for i in range(len(c) - 1))
    return c[0] >= c[1] >= 0


# Sp4 Weyl group: signed permutations of two letters.
_SP4_ELEMENTS = tuple(
    (perm, signs) for perm in ((0, 1), (1, 0)) for signs in product((1, -1), repeat=2)
)
_SP4_POSITIVE_ROOTS = ((1, -1), (1, 1), (2, 0), (0, 2))


def _sp4_act(elem, v: Tuple[int, int]) -> Tuple[int, int]:
    perm, signs = elem
    return (signs[0] * v[perm[0]], signs[1] * v[perm[1]])


def sp4_weyl_elements():
    """The eight signed permutations, as ``(perm, signs)`` pairs."""
    return _SP4_ELEMENTS


def sp4_act(elem, v: Tuple[int, int]) -> Tuple[int, int]:
    return _sp4_act(elem, v)


def _sp4_length_of(v: Tuple[int, int]) -> int:
    # number of positive roots made negative; v regular here
    return sum(1 for a in _SP4_POSITIVE_ROOTS if a[0] * v[0] + a[1] * v[1] < 0)


def tilde_dominantize(w: Weight) -> DominantizationResult:
    rho = w.group.rho
    v = tuple(a + r for a, r in zip(w.coords, rho))
    if w.group.kind == "GL":
        return _gl_dominantize(v, w.group)
    if v[0] == 0 or v[1] == 0 or abs(v[0]) == abs(v[1]):
        return SINGULAR
    for elem in _SP4_ELEMENTS:
        u = _sp4_act(elem, v)
        if u[0] > u[1] > 0:
            dom = Weight(w.group, (u[0] - rho[0], u[1] - rho[1]))
            return Regular(dom, _sp4_length_of(v))
    raise AssertionError("unreachable: regular Sp4 weight has a dominant chamber")


@lru_cache(maxsize=65536)
def _gl_dominantize(v: Tuple[int, ...], group: GroupTag) -> DominantizationResult:
    if len(set(v)) != len(v):
        return SINGULAR
    inversions = sum(1 for i in range(len(v)) for j in range(i + 1, len(v)) if v[i] < v[j])
    s = sorted(v, reverse=True)
    rho = group.rho
    return Regular(Weight(group, tuple(a - r for a, r in zip(s, rho))), inversions)


def weyl_dim(lam: Weight) -> int:
    if not is_dominant(lam):
        raise ValueError(f"weyl_dim needs a dominant weight, got {lam}")
    c = lam.coords
    if lam.group.kind == "GL":
        n = len(c)
        num = prod(c[i] - c[j] + j - i for i in range(n) for j in range(i + 1, n))
        den = prod(j - i for i in range(n) for j in range(i + 1, n))
        return num // den
    a, b = c
    return (a - b + 1) * (a + b + 3) * (2 * a + 4) * (2 * b + 2) // 24


def dual_weight(lam: Weight) -> Weight:
    if lam.group.kind == "GL":
        return Weight(lam.group, tuple(-a for a in reversed(lam.coords)))
    return lam

