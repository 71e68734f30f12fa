"""Buchberger's algorithm for homogeneous submodules of graded free modules.

Internally a vector of a free module ``S^r`` is a dict ``{(component, exps): c}``.
Computation over a quotient ``R = S/I`` is done in the ambient ring by adjoining
``g * e_i`` for every Groebner basis element ``g`` of ``I`` and every component
``i``; those elements are flagged so pairs among them are never formed.

The module order is position-over-term: a smaller component index is larger,
ties broken by the ring's weighted degrevlex order.  For homogeneous vectors
this is also degree compatible, which is what the normal selection strategy
and degree truncation rely on.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Sequence

from .errors import RingMismatchError
from .ring import (
    PolyRing,
    Polynomial,
    QuotientRing,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


# --- raw vector helpers -------------------------------------------------------

def vec_from_polys(polys: Sequence) -> dict:
    out = {}
    for i, f in enumerate(polys):
        raw = f.raw if isinstance(f, Polynomial) else f
        for m, c in raw.items():
            out[(i, m)] = c
    return out


def vec_components(v: dict, rank: int) -> list:
    comps = [dict() for _ in range(rank)]
    for (i, m), c in v.items():
        comps[i][m] = c
    return comps


def vec_add(a: dict, b: dict, p: int, scale=1) -> dict:
    out = dict(a)
    for k, c in b.items():
        val = out.get(k, 0) + scale * c
        if p:
            val %= p
        if val:
            out[k] = val
        else:
            out.pop(k, None)
    return out


def vec_scale(v: dict, c, p: int) -> dict:
    if p:
        c %= p
        return {k: a * c % p for k, a in v.items()} if c else {}
    return {k: a * c for k, a in v.items()} if c else {}


def vec_mul_poly(v: dict, f: dict, p: int) -> dict:
    out = {}
    for (i, m), a in v.items():
        for n, b in f.items():
            k = (i, mono_mul(m, n))
            out[k] = out.get(k, 0) + a * b
    if p:
        return {k: c % p for k, c in out.items() if c % p}
    return {k: c for k, c in out.items() if c}


def vec_shift_components(v: dict, offset: int) -> dict:
    return {(i + offset, m): c for (i, m), c in v.items()}


def vec_degree(v: dict, shifts, amb: PolyRing):
    if not v:
        return None
    (i, m) = next(iter(v))
    return amb.degree(m) + shifts[i]


def vec_is_homogeneous(v: dict, shifts, amb: PolyRing) -> bool:
    return len({amb.degree(m) + shifts[i] for (i, m) in v}) <= 1


def poly_mul(a: dict, b: dict, p: int) -> dict:
    out = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = mono_mul(m1, m2)
            out[m] = out.get(m, 0) + c1 * c2
    if p:
        return {m: c % p for m, c in out.items() if c % p}
    return {m: c for m, c in out.items() if c}


# --- the engine -----------------------------------------------------------------

class Engine:
    """Incremental Buchberger state (normal strategy, Buchberger criteria)."""

    def __init__(self, amb: PolyRing, shifts: Sequence[int]):
        self.amb = amb
        self.shifts = list(shifts)
        self.p = amb.field.p
        self.field = amb.field
        self.basis: list[dict] = []
        self.leads: list[tuple] = []
        self.single: list[bool] = []
        self.from_ideal: list[bool] = []
        self.by_comp: dict[int, list[int]] = {}
        self.heap: list = []
        self.pending: set = set()
        self._seq = 0
        self._keys: dict = {}
        self.reductions = 0

    # term order on (component, exps)
    def tkey(self, t):
        k = self._keys.get(t)
        if k is None:
            i, m = t
            k = (-i, self.amb.order.key(m))
            self._keys[t] = k
        return k

    def lead(self, v: dict):
        return max(v, key=self.tkey)

    def degree_of_term(self, t) -> int:
        return self.amb.degree(t[1]) + self.shifts[t[0]]

    def _find_reducer(self, t):
        i, m = t
        for g in self.by_comp.get(i, ()):
            if mono_divides(self.leads[g][1], m):
                return g
        return None

    def reduce(self, v: dict, full: bool = True) -> dict:
        """Normal form of ``v`` by the current basis (full tail reduction by default)."""
        v = dict(v)
        rem = {}
        p = self.p
        while v:
            t = self.lead(v)
            g = self._find_reducer(t)
            if g is None:
                if not full:
                    v.update(rem)
                    return v
                rem[t] = v.pop(t)
                continue
            c = v[t]
            q = mono_div(t[1], self.leads[g][1])
            self.reductions += 1
            for (j, m), a in self.basis[g].items():
                k = (j, mono_mul(m, q))
                val = v.get(k, 0) - c * a
                if p:
                    val %= p
                if val:
                    v[k] = val
                else:
                    v.pop(k, None)
        return rem

    def _monic(self, v: dict) -> dict:
        t = self.lead(v)
        c = v[t]
        if c == 1:
            return v
        return vec_scale(v, self.field.inv(c), self.p)

    def add(self, v: dict, *, from_ideal: bool = False, reduce: bool = True) -> bool:
        """Insert ``v`` (reduced first); returns False when it reduces to zero."""
        if reduce:
            v = self.reduce(v)
        if not v:
            return False
        v = self._monic(v)
        idx = len(self.basis)
        t = self.lead(v)
        comps = {i for (i, _m) in v}
        self.basis.append(v)
        self.leads.append(t)
        self.single.append(len(comps) == 1)
        self.from_ideal.append(from_ideal)
        for j in self.by_comp.get(t[0], ()):
            if from_ideal and self.from_ideal[j]:
                continue
            if self.single[idx] and self.single[j] and mono_coprime(t[1], self.leads[j][1]):
                continue
            lcm = mono_lcm(t[1], self.leads[j][1])
            deg = self.amb.degree(lcm) + self.shifts[t[0]]
            self._seq += 1
            heapq.heappush(self.heap, (deg, self._seq, j, idx, lcm))
            self.pending.add((j, idx))
        self.by_comp.setdefault(t[0], []).append(idx)
        return True

    def _chain_skip(self, i, j, comp, lcm) -> bool:
        for k in self.by_comp.get(comp, ()):
            if k == i or k == j:
                continue
            if not mono_divides(self.leads[k][1], lcm):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a not in self.pending and b not in self.pending:
                return True
        return False

    def complete(self, max_degree=None):
        """Process pairs (lowest degree first) until none remain up to ``max_degree``."""
        while self.heap:
            if max_degree is not None and self.heap[0][0] > max_degree:
                return
            deg, _s, i, j, lcm = heapq.heappop(self.heap)
            self.pending.discard((i, j))
            comp = self.leads[j][0]
            if self._chain_skip(i, j, comp, lcm):
                continue
            s = vec_add(
                vec_mul_poly(self.basis[i], {mono_div(lcm, self.leads[i][1]): 1}, self.p),
                vec_mul_poly(self.basis[j], {mono_div(lcm, self.leads[j][1]): 1}, self.p),
                self.p,
                scale=-1,
            )
            self.add(s)

    def reduced_basis(self) -> list[dict]:
        """Minimal, interreduced, monic basis (call after :meth:`complete`)."""
        keep = []
        for idx, t in enumerate(self.leads):
            dominated = False
            for jdx, u in enumerate(self.leads):
                if jdx == idx or u[0] != t[0] or not mono_divides(u[1], t[1]):
                    continue
                if u[1] != t[1] or jdx < idx:
                    dominated = True
                    break
            if not dominated:
                keep.append(idx)
        sub = Engine(self.amb, self.shifts)
        elems = [self.basis[i] for i in keep]
        sub.basis = elems
        sub.leads = [self.leads[i] for i in keep]
        sub.single = [self.single[i] for i in keep]
        sub.from_ideal = [self.from_ideal[i] for i in keep]
        for n, t in enumerate(sub.leads):
            sub.by_comp.setdefault(t[0], []).append(n)
        out = []
        for n, v in enumerate(elems):
            t = sub.leads[n]
            tail = dict(v)
            c = tail.pop(t)
            tail = sub.reduce(tail)
            w = vec_scale(tail, 1, self.p)
            w[t] = c
            out.append(sub._monic(w))
        order = sorted(range(len(out)), key=lambda n: (self.degree_of_term(sub.leads[n]), sub.tkey(sub.leads[n])))
        return [out[n] for n in order]

    def s_vectors_reduce_to_zero(self) -> bool:
        """Brute-force Buchberger criterion: every S-vector reduces to zero."""
        n = len(self.basis)
        for i in range(n):
            for j in range(i + 1, n):
                if self.leads[i][0] != self.leads[j][0]:
                    continue
                lcm = mono_lcm(self.leads[i][1], self.leads[j][1])
                s = vec_add(
                    vec_mul_poly(self.basis[i], {mono_div(lcm, self.leads[i][1]): 1}, self.p),
                    vec_mul_poly(self.basis[j], {mono_div(lcm, self.leads[j][1]): 1}, self.p),
                    self.p,
                    scale=-1,
                )
                if self.reduce(s):
                    return False
        return True


def engine_from_basis(amb: PolyRing, shifts, basis: Sequence[dict]) -> Engine:
    """Wrap an already computed Groebner basis for reduction."""
    e = Engine(amb, shifts)
    for v in basis:
        idx = len(e.basis)
        t = e.lead(v)
        e.basis.append(v)
        e.leads.append(t)
        e.single.append(len({i for (i, _m) in v}) == 1)
        e.from_ideal.append(False)
        e.by_comp.setdefault(t[0], []).append(idx)
    return e


def ideal_groebner_basis(amb: PolyRing, gens: Sequence[dict]) -> list[dict]:
    e = Engine(amb, [0])
    for g in sorted(gens, key=lambda g: amb.degree(next(iter(g)))):
        e.add({(0, m): c for m, c in g.items()})
    e.complete()
    return [{m: c for (_i, m), c in v.items()} for v in e.reduced_basis()]


def reduce_poly(f: dict, gb: Sequence[dict], amb: PolyRing) -> dict:
    if not gb or not f:
        return dict(f)
    e = _poly_engine(amb, gb)
    r = e.reduce({(0, m): c for m, c in f.items()})
    return {m: c for (_i, m), c in r.items()}


_POLY_ENGINES: dict = {}


def _poly_engine(amb, gb):
    key = (amb, tuple(frozenset(g.items()) for g in gb))
    e = _POLY_ENGINES.get(key)
    if e is None:
        e = engine_from_basis(amb, [0], [{(0, m): c for m, c in g.items()} for g in gb])
        _POLY_ENGINES[key] = e
    return e


def ring_engine(ring: QuotientRing, shifts, ideal_components=None) -> Engine:
    """Engine for a free ``R``-module: the ideal is adjoined in every component
    (or only in the first ``ideal_components`` ones)."""
    e = Engine(ring.ambient, shifts)
    for i in range(len(shifts) if ideal_components is None else ideal_components):
        for g in ring.gb_raw:
            e.add({(i, m): c for m, c in g.items()}, from_ideal=True, reduce=False)
    return e


def reduce_mod_ideal(v: dict, ring: QuotientRing) -> dict:
    """Reduce every component of ``v`` modulo the defining ideal of ``ring``."""
    if not ring.gb_raw or not v:
        return dict(v)
    pe = _poly_engine(ring.ambient, ring.gb_raw)
    out = {}
    comps: dict[int, dict] = {}
    for (i, m), c in v.items():
        comps.setdefault(i, {})[(0, m)] = c
    for i, f in comps.items():
        for (_z, m), c in pe.reduce(f).items():
            out[(i, m)] = c
    return out


# --- core derived operations -------------------------------------------------

def submodule_engine(ring: QuotientRing, shifts, gens: Sequence[dict], max_degree=None) -> Engine:
    e = ring_engine(ring, shifts)
    for g in sorted(gens, key=lambda g: vec_degree(g, shifts, ring.ambient) if g else 0):
        if g:
            e.add(g)
    e.complete(max_degree)
    return e


def minimalize(ring: QuotientRing, shifts, vectors: Sequence[dict], degrees: Sequence[int]):
    """Greedy minimal generating subset of a homogeneous submodule of ``R^r``.

    Vectors are processed in degree order and kept iff not in the span of the
    ones already kept.  Returns ``(kept_vectors, kept_degrees)``.
    """
    items = []
    for n, (v, d) in enumerate(zip(vectors, degrees)):
        v = reduce_mod_ideal(v, ring)
        if v:
            items.append((d, n, v))
    items.sort(key=lambda x: (x[0], x[1]))
    e = ring_engine(ring, shifts)
    kept, kept_deg = [], []
    for d, _n, v in items:
        e.complete(d)
        if e.add(v):
            kept.append(v)
            kept_deg.append(d)
    return kept, kept_deg


def modulo(ring: QuotientRing, target_shifts, columns: Sequence[dict], column_degrees: Sequence[int],
           relations: Sequence[dict] = ()):
    """Minimal generators of ``{u in R^n : sum u_j a_j in N + I S^r}``.

    ``columns`` are the ``a_j`` (vectors of ``S^r``) and ``relations``
    generate ``N``.  Returns ``(vectors in R^n, degrees)``.
    """
    r = len(target_shifts)
    n = len(columns)
    if n == 0:
        return [], []
    shifts = list(target_shifts) + list(column_degrees)
    e = ring_engine(ring, shifts, ideal_components=r)
    for rel in relations:
        if rel:
            e.add(rel)
    for j, a in enumerate(columns):
        v = dict(a)
        v[(r + j, ring.ambient.one_mono)] = 1
        e.add(v)
    e.complete()
    syz, degs = [], []
    for v, t in zip(e.basis, e.leads):
        if t[0] >= r:
            u = vec_shift_components(v, -r)
            syz.append(u)
            degs.append(vec_degree(u, column_degrees, ring.ambient))
    return minimalize(ring, column_degrees, syz, degs)


def is_member(ring: QuotientRing, shifts, v: dict, gens: Sequence[dict]) -> bool:
    deg = vec_degree(v, shifts, ring.ambient)
    if deg is None:
        return True
    e = submodule_engine(ring, shifts, gens, max_degree=deg)
    return not e.reduce(v)


def contains(ring: QuotientRing, shifts, big: Sequence[dict], small: Sequence[dict]) -> bool:
    small = [s for s in small if s]
    if not small:
        return True
    top = max(vec_degree(s, shifts, ring.ambient) for s in small)
    e = submodule_engine(ring, shifts, big, max_degree=top)
    return all(not e.reduce(s) for s in small)


# --- public surface -------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ModuleVector:
    """A vector of a graded free module: one polynomial per coordinate."""

    components: tuple
    shifts: tuple

    @classmethod
    def from_raw(cls, v: dict, shifts, amb: PolyRing):
        comps = vec_components(v, len(shifts))
        return cls(tuple(Polynomial(amb, c) for c in comps), tuple(shifts))

    @classmethod
    def of(cls, polys, shifts=None):
        polys = tuple(polys)
        if shifts is None:
            shifts = (0,) * len(polys)
        return cls(polys, tuple(shifts))

    @property
    def raw(self) -> dict:
        return vec_from_polys(self.components)

    @property
    def degree(self):
        for f, s in zip(self.components, self.shifts):
            if f:
                return f.degree + s
        return None

    def is_zero(self):
        return all(f.is_zero() for f in self.components)

    def __str__(self):
        return "(" + ", ".join(str(f) for f in self.components) + ")"

    __repr__ = __str__


@dataclass(frozen=True, eq=False)
class GroebnerBasis:
    elements: tuple
    ring: QuotientRing
    shifts: tuple
    _engine: Engine

    def normal_form(self, v) -> ModuleVector:
        return normal_form(v, self)

    def satisfies_buchberger_criterion(self) -> bool:
        return self._engine.s_vectors_reduce_to_zero()

    @property
    def leading_terms(self):
        return [self._engine.lead(v.raw) for v in self.elements]


def _ring_of(ring):
    if isinstance(ring, QuotientRing):
        return ring
    if isinstance(ring, PolyRing):
        return QuotientRing(ring, ())
    raise TypeError(f"expected a ring, got {type(ring).__name__}")


def _as_vector(g, shifts=None) -> ModuleVector:
    if isinstance(g, ModuleVector):
        return g
    if isinstance(g, Polynomial):
        return ModuleVector.of([g], shifts)
    return ModuleVector.of(list(g), shifts)


def buchberger(generators, ring) -> GroebnerBasis:
    """Reduced Groebner basis of the submodule of ``R^r`` spanned by ``generators``.

    The returned basis includes the adjoined ideal elements ``g * e_i`` (they are
    part of the submodule of the ambient free module that represents the
    submodule of ``R^r``).
    """
    ring = _ring_of(ring)
    vecs = [_as_vector(g) for g in generators]
    if not vecs:
        raise ValueError("at least one generator (possibly zero) is needed to fix the rank")
    shifts = vecs[0].shifts
    for v in vecs:
        if v.shifts != shifts:
            raise RingMismatchError("generators live in different free modules")
        for f in v.components:
            if f.ring != ring.ambient:
                raise RingMismatchError("generator outside the ring")
    e = submodule_engine(ring, shifts, [v.raw for v in vecs])
    basis = e.reduced_basis()
    e2 = engine_from_basis(ring.ambient, shifts, basis)
    return GroebnerBasis(tuple(ModuleVector.from_raw(b, shifts, ring.ambient) for b in basis), ring, tuple(shifts), e2)


def normal_form(v, gb: GroebnerBasis) -> ModuleVector:
    v = _as_vector(v, gb.shifts)
    if len(v.components) != len(gb.shifts):
        raise RingMismatchError("vector and basis live in different free modules")
    for f in v.components:
        if f.ring != gb.ring.ambient:
            raise RingMismatchError("vector outside the basis' ring")
    return ModuleVector.from_raw(gb._engine.reduce(v.raw), gb.shifts, gb.ring.ambient)


def syzygy_basis(columns, ring, target_shifts=None, column_degrees=None) -> list[ModuleVector]:
    """Minimal generators of the kernel of the matrix with the given columns over ``ring``."""
    ring = _ring_of(ring)
    cols = [_as_vector(c) for c in columns]
    if not cols:
        return []
    r = len(cols[0].components)
    if target_shifts is None:
        target_shifts = cols[0].shifts if len(cols[0].shifts) == r else (0,) * r
    if column_degrees is None:
        column_degrees = []
        for c in cols:
            d = vec_degree(reduce_mod_ideal(c.raw, ring), target_shifts, ring.ambient)
            column_degrees.append(d if d is not None else 0)
    syz, _d = modulo(ring, target_shifts, [c.raw for c in cols], column_degrees)
    return [ModuleVector.from_raw(s, column_degrees, ring.ambient) for s in syz]


def ideal_quotient_generators(ring: QuotientRing, shifts, relations: Sequence[dict], rank: int) -> list[dict]:
    """Generators of ``(N : R^r) = {f : f e_i in N for all i}`` as polynomial dicts.

    Uses one kernel computation: ``f`` lies in the quotient iff ``f`` times the
    stacked vector ``(e_1 | e_2 | ... | e_r)`` lies in ``N^r``.  Block ``b`` is
    regraded by ``-shifts[b]`` so the stacked vector is homogeneous of degree 0.
    """
    if rank == 0:
        return [{ring.ambient.one_mono: 1}]
    big_shifts = []
    for blk in range(rank):
        big_shifts.extend(s - shifts[blk] for s in shifts)
    column = {(i * rank + i, ring.ambient.one_mono): 1 for i in range(rank)}
    rels = [vec_shift_components(rel, blk * rank) for blk in range(rank) for rel in relations]
    syz, _ = modulo(ring, big_shifts, [column], [0], rels)
    return [{m: c for (_i, m), c in s.items()} for s in syz]


def annihilator(M) -> list[Polynomial]:
    """Generators of ``(0 :_R M)`` for a finitely presented module ``M``."""
    ring = M.ring
    gens = ideal_quotient_generators(ring, list(M.degrees), list(M.relations), len(M.degrees))
    return [Polynomial(ring.ambient, g) for g in gens]
