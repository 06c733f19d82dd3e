"""Littlewood-Richardson coefficients by LR-tableau enumeration.

Tableaux are enumerated row by row: ``a[r][j]`` counts the entries ``j`` in
row ``r`` of the skew shape ``nu / lam``.  Column strictness and the lattice
(Yamanouchi) condition are both linear inequalities in these counts.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Dict, Tuple

Partition = Tuple[int, ...]


def _strip(p) -> Partition:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


@lru_cache(maxsize=None)
def lr_product(lam: Partition, mu: Partition, max_rows: int) -> Dict[Partition, int]:
    """``s_lam * s_mu`` restricted to partitions with at most ``max_rows`` rows."""
    lam, mu = _strip(lam), _strip(mu)
    k = len(mu)
    rows = min(max_rows, len(lam) + k)
    lam_ext = lam + (0,) * (rows - len(lam))
    if len(lam) > rows:
        return {}
    out: Counter = Counter()

    # prev_cols[j]: column reached by labels <= j in the previous row
    def rec(r: int, remaining: Tuple[int, ...], prev_cols: Tuple[int, ...], cum: Tuple[Tuple[int, ...], ...]):
        if r == rows:
            if all(x == 0 for x in remaining):
                nu = tuple(lam_ext[i] + sum(cum[i]) for i in range(rows))
                out[_strip(nu)] += 1
            return
        # label j (0-indexed) may only appear in rows r >= j
        counts = [0] * k
        totals_before = [sum(cum[i][j] for i in range(r)) for j in range(k)]

        def place(j: int):
            if j == k:
                cols = []
                pos = lam_ext[r]
                for jj in range(k):
                    pos += counts[jj]
                    cols.append(pos)
                rec(r + 1, tuple(remaining[jj] - counts[jj] for jj in range(k)), tuple(cols), cum + (tuple(counts),))
                return
            hi = remaining[j] if j <= r else 0
            if j > 0:
                # lattice: labels j in rows <= r at most labels j-1 in rows < r
                hi = min(hi, totals_before[j - 1] - totals_before[j])
            if r > 0:
                # column strictness: boxes with label <= j in row r sit under labels < j in row r-1
                above = prev_cols[j - 1] if j > 0 else lam_ext[r - 1]
                start = lam_ext[r] + sum(counts[:j])
                hi = min(hi, above - start)
            for c in range(max(hi, -1), -1, -1):
                counts[j] = c
                place(j + 1)
            counts[j] = 0

        place(0)

    rec(0, tuple(mu), (), ())
    return dict(out)


def gl_tensor(lam: Tuple[int, ...], mu: Tuple[int, ...]) -> Dict[Tuple[int, ...], int]:
    """Decompose ``V_lam (x) V_mu`` for GL(n) with arbitrary integer dominant weights."""
    n = len(lam)
    if len(mu) != n:
        raise ValueError("weights of different rank")
    if n == 0:
        return {(): 1}
    s1, s2 = lam[-1], mu[-1]
    p1 = tuple(a - s1 for a in lam)
    p2 = tuple(a - s2 for a in mu)
    res = {}
    for nu, c in lr_product(p1, p2, n).items():
        full = nu + (0,) * (n - len(nu))
        res[tuple(a + s1 + s2 for a in full)] = c
    return res
