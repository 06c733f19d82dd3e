"""Independent reference computations used by the tests.

Nothing here imports the package: characters come from enumerating
semistandard tableaux and BBW is done by brute force over the Weyl group.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import permutations, product
from math import comb
from typing import Dict, Optional, Tuple


def ssyt_character(shape: Tuple[int, ...], n: int) -> Counter:
    """Monomial expansion of the Schur polynomial s_shape(x_1..x_n)."""
    shape = tuple(p for p in shape if p)
    cells = [(r, c) for r, row in enumerate(shape) for c in range(row)]
    out: Counter = Counter()
    fill: Dict[Tuple[int, int], int] = {}

    def rec(k: int) -> None:
        if k == len(cells):
            m = [0] * n
            for v in fill.values():
                m[v] += 1
            out[tuple(m)] += 1
            return
        r, c = cells[k]
        lo = 0
        if c > 0:
            lo = max(lo, fill[(r, c - 1)])
        if r > 0:
            lo = max(lo, fill[(r - 1, c)] + 1)
        for v in range(lo, n):
            fill[(r, c)] = v
            rec(k + 1)
        fill.pop((r, c), None)

    rec(0)
    return out


def gl_dim_by_tableaux(lam: Tuple[int, ...]) -> int:
    shift = lam[-1]
    return sum(ssyt_character(tuple(a - shift for a in lam), len(lam)).values())


def schur_product(lam: Tuple[int, ...], mu: Tuple[int, ...], n: int) -> Dict[Tuple[int, ...], int]:
    """Decompose s_lam * s_mu in n variables by peeling off leading monomials."""
    a, b = ssyt_character(lam, n), ssyt_character(mu, n)
    prod_: Counter = Counter()
    for x, u in a.items():
        for y, v in b.items():
            prod_[tuple(i + j for i, j in zip(x, y))] += u * v
    out: Dict[Tuple[int, ...], int] = {}
    while prod_:
        top = max(k for k, v in prod_.items() if v)
        c = prod_[top]
        out[top] = c
        for m, v in ssyt_character(top, n).items():
            prod_[m] -= c * v
        prod_ = Counter({k: v for k, v in prod_.items() if v})
    return {tuple(p for p in k if p): v for k, v in out.items()}


def sp4_dim(a: int, b: int) -> int:
    """Weyl dimension formula over the four positive roots of C2."""
    rho = (2, 1)
    roots = ((1, -1), (1, 1), (2, 0), (0, 2))
    num = den = Fraction(1)
    for r in roots:
        num *= sum((x + p) * y for x, p, y in zip((a, b), rho, r))
        den *= sum(p * y for p, y in zip(rho, r))
    return int(num / den)


def gl_bbw(w: Tuple[int, ...]) -> Optional[Tuple[int, Tuple[int, ...]]]:
    """(degree, dominant weight) or None, by trying every permutation."""
    n = len(w)
    rho = tuple(range(n - 1, -1, -1))
    v = tuple(a + r for a, r in zip(w, rho))
    for p in permutations(range(n)):
        u = tuple(v[i] for i in p)
        if all(u[i] > u[i + 1] for i in range(n - 1)):
            length = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
            return length, tuple(x - r for x, r in zip(u, rho))
    return None


def sp4_bbw(w: Tuple[int, int]) -> Optional[Tuple[int, Tuple[int, int]]]:
    rho = (2, 1)
    v = (w[0] + rho[0], w[1] + rho[1])
    for perm in ((0, 1), (1, 0)):
        for s in product((1, -1), repeat=2):
            u = (s[0] * v[perm[0]], s[1] * v[perm[1]])
            if u[0] > u[1] > 0:
                # length = number of sign changes plus the swap parity in C2 terms
                length = sum(1 for r in ((1, -1), (1, 1), (2, 0), (0, 2)) if r[0] * v[0] + r[1] * v[1] < 0)
                return length, (u[0] - rho[0], u[1] - rho[1])
    return None


def quadric_sections(d: int) -> int:
    """h^0(O(d)) on a smooth quadric threefold in P^4."""
    if d < 0:
        return 0
    return comb(d + 4, 4) - (comb(d + 2, 4) if d >= 2 else 0)
