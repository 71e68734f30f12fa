"""Minimal free resolutions, syzygy modules and Koszul complexes.

``truncated_linear_resolution`` is an independent check: it rebuilds graded
Betti numbers degree by degree with plain linear algebra over ``k`` and never
touches the module Groebner machinery.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from . import linalg
from .fpmod import (
    FPMap,
    FPModule,
    FreeModule,
    ModuleMap,
    direct_sum,
    homology,
    minimal_presentation,
    monomials_of_degree,
    twist,
)
from .groebner import modulo
from .ring import Polynomial, mono_divides

DEFAULT_LENGTH = 6


@dataclass(frozen=True, eq=False)
class MinimalResolution:
    """``F_L -> ... -> F_1 -> F_0``; ``differentials[i-1]`` is ``d_i: F_i -> F_{i-1}``."""

    module: FPModule
    differentials: tuple
    length: int

    @property
    def ring(self):
        return self.module.ring

    def free_module(self, i: int) -> FreeModule:
        if i == 0:
            return self.module.free_module
        if i - 1 < len(self.differentials):
            return self.differentials[i - 1].source
        return FreeModule(self.ring, ())

    @property
    def betti(self) -> list[int]:
        return [self.free_module(i).rank for i in range(self.length + 1)]

    @property
    def graded_betti(self) -> list[dict]:
        return [dict(sorted(Counter(self.free_module(i).shifts).items())) for i in range(self.length + 1)]

    def differential(self, i: int) -> ModuleMap:
        if i - 1 < len(self.differentials):
            return self.differentials[i - 1]
        return ModuleMap(self.free_module(i), self.free_module(i - 1), ())

    def syzygy(self, i: int) -> FPModule:
        if i + 1 > self.length and self.free_module(i).rank:
            raise ValueError(f"resolution of length {self.length} does not determine the syzygy {i}")
        if i == 0:
            return self.module
        F = self.free_module(i)
        d = self.differential(i + 1)
        return FPModule(self.ring, F.shifts, d.columns, d.source.shifts, True,
                        f"Omega^{i}({self.module.name or 'M'})")

    @property
    def projective_dimension(self):
        """Exact value when the resolution stopped (-1 for the zero module), else None."""
        for i in range(self.length + 1):
            if self.free_module(i).rank == 0:
                return i - 1
        return None

    def check_complex(self) -> bool:
        return all(self.differentials[i].compose(self.differentials[i + 1]).is_zero()
                   for i in range(len(self.differentials) - 1))

    def check_minimal(self) -> bool:
        return all(d.is_minimal() for d in self.differentials)

    def betti_table_rows(self) -> list[list[int]]:
        """Rows ``j - i`` against columns ``i`` (Macaulay-style table)."""
        gb = self.graded_betti
        cells = {(d - i, i): c for i, row in enumerate(gb) for d, c in row.items()}
        if not cells:
            return []
        lo = min(r for r, _ in cells)
        hi = max(r for r, _ in cells)
        return [[cells.get((r, i), 0) for i in range(self.length + 1)] for r in range(lo, hi + 1)]


def _resolution_cache(M: FPModule) -> list:
    return M.__dict__.setdefault("_resolution_diffs", [])


def free_resolution(M: FPModule, length: int = DEFAULT_LENGTH) -> MinimalResolution:
    """Minimal free resolution up to homological degree ``length``.

    Differentials are cached on the minimal presentation and extended on demand.
    """
    if length < 0:
        raise ValueError("length must be non-negative")
    Mmin = minimal_presentation(M)
    diffs = _resolution_cache(Mmin)
    ring = Mmin.ring
    if not diffs and length >= 1:
        diffs.append(Mmin.presentation)
    while len(diffs) < length and diffs[-1].source.rank:
        d = diffs[-1]
        syz, degs = modulo(ring, d.target.shifts, list(d.columns), list(d.source.shifts))
        diffs.append(ModuleMap(FreeModule(ring, tuple(degs)), d.source, tuple(syz)))
    return MinimalResolution(Mmin, tuple(diffs[:length]), length)


def syzygy(M: FPModule, i: int) -> FPModule:
    """``Omega^i M``, minimally presented (``Omega^0 M`` is the minimal presentation)."""
    if i < 0:
        raise ValueError("i must be non-negative")
    return free_resolution(M, i + 1).syzygy(i)


def betti_numbers(M: FPModule, length: int = DEFAULT_LENGTH) -> list[int]:
    return free_resolution(M, length).betti


def graded_betti(M: FPModule, length: int = DEFAULT_LENGTH, max_degree=None) -> list[dict]:
    gb = free_resolution(M, length).graded_betti
    if max_degree is None:
        return gb
    return [{d: c for d, c in row.items() if d <= max_degree} for row in gb]


# --- Koszul complexes ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class KoszulComplex:
    """``K_i = sum over i-subsets S of M(-deg x_S)``; ``maps[i-1]`` is ``d_i: K_i -> K_{i-1}``."""

    elements: tuple
    module: FPModule
    modules: tuple
    maps: tuple
    subsets: tuple

    def homology(self, i: int) -> FPModule:
        n = len(self.elements)
        if i < 0 or i > n:
            return FPModule.zero(self.module.ring)
        d_out = self.maps[i - 1] if i >= 1 else FPMap.zero(self.modules[0], FPModule.zero(self.module.ring))
        if i + 1 <= n:
            d_in = self.maps[i]
        else:
            d_in = FPMap.zero(FPModule.zero(self.module.ring), self.modules[i])
        return homology(d_in, d_out)

    def check_complex(self) -> bool:
        for i in range(1, len(self.maps)):
            comp = self.maps[i - 1].compose(self.maps[i])
            if not comp.is_zero():
                return False
        return True


def koszul_complex(elements, M: FPModule) -> KoszulComplex:
    ring = M.ring
    amb = ring.ambient
    xs = [ring.reduce(amb(x)) for x in elements]
    for x in xs:
        if x and (not x.is_homogeneous() or x.is_constant()):
            raise ValueError("Koszul elements must be homogeneous elements of the maximal ideal")
    degs = [x.degree if x else 0 for x in xs]
    n = len(xs)
    M = minimal_presentation(M)
    g = M.ngens
    subsets = [list(combinations(range(n), i)) for i in range(n + 1)]
    modules = []
    for i in range(n + 1):
        parts = [twist(M, -sum(degs[j] for j in S)) for S in subsets[i]]
        modules.append(direct_sum(*parts) if parts else FPModule.zero(ring))
    maps = []
    p = ring.field.p
    for i in range(1, n + 1):
        index = {S: k for k, S in enumerate(subsets[i - 1])}
        imgs = []
        for S in subsets[i]:
            for gen in range(g):
                v = {}
                for pos, j in enumerate(S):
                    T = S[:pos] + S[pos + 1:]
                    sign = 1 if pos % 2 == 0 else -1
                    comp = index[T] * g + gen
                    for m, c in xs[j].raw.items():
                        key = (comp, m)
                        val = (v.get(key, 0) + sign * c)
                        val = val % p if p else val
                        if val:
                            v[key] = val
                        else:
                            v.pop(key, None)
                imgs.append(v)
        maps.append(FPMap(modules[i], modules[i - 1], tuple(imgs)))
    return KoszulComplex(tuple(xs), M, tuple(modules), tuple(maps), tuple(tuple(s) for s in subsets))


# --- the linear-algebra oracle --------------------------------------------------------

class _GradedRing:
    """Standard-monomial model of ``R`` degree by degree."""

    def __init__(self, ring):
        self.ring = ring
        self.amb = ring.ambient
        self.p = ring.field.p
        self.leads = [max(g, key=self.amb.order.key) for g in ring.gb_raw]
        self._basis = {}
        self._nf = {}

    def basis(self, d):
        b = self._basis.get(d)
        if b is None:
            b = [m for m in monomials_of_degree(self.amb.weights, d)
                 if not any(mono_divides(l, m) for l in self.leads)]
            self._basis[d] = b
        return b

    def nf(self, m):
        r = self._nf.get(m)
        if r is None:
            r = self.ring.reduce(Polynomial(self.amb, {m: 1})).raw
            self._nf[m] = r
        return r


class _Space:
    """``F_d`` for a free module with generator degrees ``shifts``."""

    def __init__(self, R: _GradedRing, shifts):
        self.R = R
        self.shifts = list(shifts)
        self._index = {}

    def index(self, d):
        idx = self._index.get(d)
        if idx is None:
            terms = [(j, m) for j, a in enumerate(self.shifts) for m in self.R.basis(d - a)]
            idx = {t: k for k, t in enumerate(terms)}
            self._index[d] = idx
        return idx

    def mul(self, vec: dict, mono, d_out) -> dict:
        """``mono * vec`` as coordinates of ``F_{d_out}``; ``vec`` is ``{(j, m): c}``."""
        idx = self.index(d_out)
        p = self.R.p
        out = {}
        for (j, m), c in vec.items():
            prod = tuple(a + b for a, b in zip(m, mono))
            for n, e in self.R.nf(prod).items():
                k = idx[(j, n)]
                val = out.get(k, 0) + c * e
                out[k] = val % p if p else val
        return {k: v for k, v in out.items() if v}

    def to_terms(self, coords: dict, d) -> dict:
        inv = {k: t for t, k in self.index(d).items()}
        return {inv[k]: c for k, c in coords.items()}


def truncated_linear_resolution(M: FPModule, length: int, max_degree: int) -> list[dict]:
    """Graded Betti numbers ``beta_{i,j}`` for ``i <= length`` and ``j <= max_degree``."""
    ring = M.ring
    R = _GradedRing(ring)
    p = R.p
    amb = ring.ambient
    weights = amb.weights
    lo = min(M.degrees, default=0)
    degrees = range(lo, max_degree + 1)

    F = _Space(R, M.degrees)
    # S_d: the subspace to generate, Z_d: what we work modulo (only at stage 0)
    S = {d: [{k: 1} for k in range(len(F.index(d)))] for d in degrees}
    Z = {}
    for d in degrees:
        vecs = []
        for r, rd in zip(M.relations, M.relation_degrees):
            for m in R.basis(d - rd):
                vecs.append(F.mul(r, m, d))
        Z[d] = vecs

    table = []
    for _stage in range(length + 1):
        gens = []   # (degree, vector as terms of F)
        for d in degrees:
            ech = linalg.Echelon(p)
            for z in Z.get(d, ()):
                ech.add(z)
            for v, w in enumerate(weights):
                for s in S.get(d - w, ()):
                    ech.add(F.mul(F.to_terms(s, d - w), _unit(len(weights), v), d))
            for s in S[d]:
                if ech.add(s):
                    gens.append((d, F.to_terms(s, d)))
        table.append(dict(sorted(Counter(d for d, _ in gens).items())))
        if not gens:
            table.extend({} for _ in range(length - _stage))
            break
        P = _Space(R, [d for d, _ in gens])
        newS = {}
        for d in degrees:
            pidx = P.index(d)
            cols = []
            for (j, m), _k in sorted(pidx.items(), key=lambda t: t[1]):
                cols.append(F.mul(gens[j][1], m, d))
            zs = Z.get(d, ())
            ncols = len(cols) + len(zs)
            rows = {}
            for c, col in enumerate(list(cols) + list(zs)):
                for k, val in col.items():
                    rows.setdefault(k, {})[c] = val
            null = linalg.nullspace(list(rows.values()), ncols, p)
            ech = linalg.Echelon(p)
            for x in null:
                ech.add({k: v for k, v in x.items() if k < len(cols)})
            newS[d] = list(ech.pivots.values())
        F, S, Z = P, newS, {}
    return table[: length + 1]


def _unit(n, v):
    e = [0] * n
    e[v] = 1
    return tuple(e)


def free_betti_truncated(res: MinimalResolution, max_degree: int) -> list[dict]:
    return [{d: c for d, c in row.items() if d <= max_degree} for row in res.graded_betti]

