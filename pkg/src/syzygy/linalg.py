"""Sparse Gaussian elimination over GF(p) (``p > 0``) or QQ (``p == 0``).

Rows are dicts ``{column: value}``.
"""

from __future__ import annotations

from fractions import Fraction


def _inv(a, p):
    return pow(a, p - 2, p) if p else 1 / Fraction(a)


def _axpy(row: dict, pivot_row: dict, factor, p):
    for c, v in pivot_row.items():
        val = row.get(c, 0) - factor * v
        if p:
            val %= p
        if val:
            row[c] = val
        else:
            row.pop(c, None)


class Echelon:
    """Incremental row echelon form; pivot rows are normalized to 1 at their pivot."""

    def __init__(self, p: int):
        self.p = p
        self.pivots: dict = {}

    def reduce(self, row: dict) -> dict:
        row = dict(row)
        while True:
            hits = [c for c in row if c in self.pivots]
            if not hits:
                return row
            c = min(hits)
            _axpy(row, self.pivots[c], row[c], self.p)

    def add(self, row: dict) -> bool:
        row = self.reduce(row)
        if not row:
            return False
        c = min(row)
        inv = _inv(row[c], self.p)
        if self.p:
            row = {k: v * inv % self.p for k, v in row.items()}
        else:
            row = {k: v * inv for k, v in row.items()}
        self.pivots[c] = row
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def fully_reduced(self) -> dict:
        piv = {c: dict(r) for c, r in self.pivots.items()}
        for c in sorted(piv, reverse=True):
            r = piv[c]
            while True:
                hits = [k for k in r if k != c and k in piv]
                if not hits:
                    break
                k = min(hits)
                _axpy(r, piv[k], r[k], self.p)
        return piv


def rank(rows, p: int) -> int:
    e = Echelon(p)
    for r in rows:
        e.add(r)
    return e.rank


def nullspace(rows, ncols: int, p: int) -> list[dict]:
    """Basis of ``{x : row . x = 0 for every row}`` as sparse vectors."""
    e = Echelon(p)
    for r in rows:
        e.add(r)
    piv = e.fully_reduced()
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        x = {f: 1}
        for c, r in piv.items():
            v = r.get(f)
            if v:
                x[c] = (-v) % p if p else -v
        basis.append(x)
    return basis


def dense_rank(matrix, p: int) -> int:
    return rank([{j: v for j, v in enumerate(row) if v} for row in matrix], p)


def dense_mul(a, b, p: int):
    n, m, k = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * k for _ in range(n)]
    for i in range(n):
        ai = a[i]
        for t in range(m):
            if ai[t]:
                bt = b[t]
                for j in range(k):
                    out[i][j] += ai[t] * bt[j]
        if p:
            out[i] = [v % p for v in out[i]]
    return out


def dense_inverse(a, p: int):
    """Inverse of a square matrix, or None if singular."""
    n = len(a)
    rows = [{**{j: v for j, v in enumerate(a[i]) if v}, n + i: 1} for i in range(n)]
    e = Echelon(p)
    for r in rows:
        e.add(r)
    piv = e.fully_reduced()
    if any(c not in piv for c in range(n)):
        return None
    return [[piv[i].get(n + j, 0) for j in range(n)] for i in range(n)]
