"""Finitely presented graded modules.

A module is the cokernel of a presentation ``F1 -> F0``.  ``degrees`` are the
degrees of the generators of ``F0`` and ``relations`` are the images of the
basis of ``F1``, stored as raw vectors ``{(component, exps): coeff}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations, product
from typing import Sequence

from . import linalg
from .errors import (
    HomogeneityError,
    NotAComplexError,
    RingMismatchError,
    ShapeError,
    UnsupportedGradingError,
)
from .groebner import (
    Engine,
    minimalize,
    modulo,
    reduce_mod_ideal,
    ring_engine,
    vec_add,
    vec_degree,
    vec_mul_poly,
    vec_scale,
    vec_shift_components,
)
from .ring import PolyRing, Polynomial, QuotientRing, format_poly, mono_divides


# --- free modules and matrices ------------------------------------------------

@dataclass(frozen=True)
class FreeModule:
    ring: QuotientRing
    shifts: tuple

    @property
    def rank(self) -> int:
        return len(self.shifts)


@dataclass(frozen=True, eq=False)
class ModuleMap:
    """Degree-0 map of free modules; ``columns[j]`` is the image of basis vector ``j``."""

    source: FreeModule
    target: FreeModule
    columns: tuple

    @property
    def ring(self):
        return self.target.ring

    @property
    def matrix(self) -> list[list[Polynomial]]:
        amb = self.ring.ambient
        rows = [[dict() for _ in self.columns] for _ in range(self.target.rank)]
        for j, col in enumerate(self.columns):
            for (i, m), c in col.items():
                rows[i][j][m] = c
        return [[Polynomial(amb, e) for e in row] for row in rows]

    def is_minimal(self) -> bool:
        one = self.ring.ambient.one_mono
        return all(m != one for col in self.columns for (_i, m) in reduce_mod_ideal(col, self.ring))

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """``self o other``."""
        if other.target.shifts != self.source.shifts:
            raise ShapeError("maps are not composable")
        p = self.ring.field.p
        cols = []
        for col in other.columns:
            out = {}
            for (j, m), c in col.items():
                out = vec_add(out, vec_mul_poly(self.columns[j], {m: c}, p), p)
            cols.append(reduce_mod_ideal(out, self.ring))
        return ModuleMap(other.source, self.target, tuple(cols))

    def is_zero(self) -> bool:
        return all(not reduce_mod_ideal(c, self.ring) for c in self.columns)

    def to_strings(self) -> list[list[str]]:
        return [[str(e) for e in row] for row in self.matrix]


def infer_shifts(ring: QuotientRing, rows, target_shifts=None):
    """Infer ``(target_shifts, source_shifts)`` making a matrix degree 0.

    Rows without a prescribed shift start at 0 per connected block.
    """
    amb = ring.ambient
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    ent = {}
    for i, row in enumerate(rows):
        if len(row) != ncols:
            raise ShapeError("ragged matrix")
        for j, f in enumerate(row):
            if f:
                if not f.is_homogeneous():
                    raise HomogeneityError(f"matrix entry {f} is not weighted-homogeneous")
                ent[(i, j)] = f.degree
    t = list(target_shifts) if target_shifts is not None else [None] * nrows
    s = [None] * ncols

    def settle(kind, idx, val):
        arr = t if kind == "r" else s
        if arr[idx] is None:
            arr[idx] = val
            return True
        if arr[idx] != val:
            raise HomogeneityError("matrix entries have inconsistent degrees")
        return False

    queue = [("r", i) for i in range(nrows) if t[i] is not None]
    while True:
        while queue:
            kind, idx = queue.pop()
            if kind == "r":
                for j in range(ncols):
                    if (idx, j) in ent and settle("c", j, t[idx] + ent[(idx, j)]):
                        queue.append(("c", j))
            else:
                for i in range(nrows):
                    if (i, idx) in ent and settle("r", i, s[idx] - ent[(i, idx)]):
                        queue.append(("r", i))
        free = [i for i in range(nrows) if t[i] is None]
        if not free:
            break
        t[free[0]] = 0
        queue.append(("r", free[0]))
    s = [x if x is not None else 0 for x in s]
    return t, s


# --- finitely presented modules -------------------------------------------------

@dataclass(frozen=True, eq=False)
class FPModule:
    """Graded module ``coker(relations)`` over ``ring``."""

    ring: QuotientRing
    degrees: tuple
    relations: tuple
    relation_degrees: tuple
    minimal: bool = False
    name: str | None = field(default=None, compare=False)

    # construction -------------------------------------------------------------
    @classmethod
    def free(cls, ring: QuotientRing, degrees=(0,), name=None) -> "FPModule":
        if isinstance(degrees, int):
            degrees = (0,) * degrees
        return cls(ring, tuple(degrees), (), (), True, name)

    @classmethod
    def zero(cls, ring: QuotientRing) -> "FPModule":
        return cls(ring, (), (), (), True, "0")

    @classmethod
    def from_matrix(cls, ring: QuotientRing, rows, degrees=None, name=None) -> "FPModule":
        """Cokernel of a matrix given as rows of polynomials (or strings)."""
        rows = [[ring.ambient(e) for e in row] for row in rows]
        t, s = infer_shifts(ring, rows, degrees)
        cols = []
        for j in range(len(s)):
            col = {}
            for i, row in enumerate(rows):
                for m, c in row[j].raw.items():
                    col[(i, m)] = c
            cols.append(col)
        return cls.from_relations(ring, t, cols, name=name)

    @classmethod
    def from_relations(cls, ring, degrees, relations, name=None) -> "FPModule":
        degrees = tuple(degrees)
        rels, rdeg = [], []
        for r in relations:
            r = reduce_mod_ideal(r, ring)
            if not r:
                continue
            d = vec_degree(r, degrees, ring.ambient)
            if len({ring.ambient.degree(m) + degrees[i] for (i, m) in r}) > 1:
                raise HomogeneityError("relation is not homogeneous")
            rels.append(r)
            rdeg.append(d)
        return cls(ring, degrees, tuple(rels), tuple(rdeg), False, name)

    @classmethod
    def cyclic(cls, ring: QuotientRing, generators=(), name=None) -> "FPModule":
        """``R/J`` for ``J`` generated by ``generators``."""
        gens = [ring.ambient(g) for g in generators]
        return cls.from_relations(ring, (0,), [{(0, m): c for m, c in g.raw.items()} for g in gens], name=name)

    @classmethod
    def residue_field(cls, ring: QuotientRing) -> "FPModule":
        return cls.cyclic(ring, ring.gens(), name="k")

    @classmethod
    def ideal(cls, ring: QuotientRing, generators, name=None) -> "FPModule":
        """The ideal ``J`` as a module, presented on a minimal generating set."""
        amb = ring.ambient
        gens = [ring.reduce(amb(g)) for g in generators]
        vecs = [{(0, m): c for m, c in g.raw.items()} for g in gens if g]
        degs = [g.degree for g in gens if g]
        kept, kdeg = minimalize(ring, [0], vecs, degs)
        syz, sdeg = modulo(ring, [0], kept, kdeg)
        M = cls(ring, tuple(kdeg), tuple(syz), tuple(sdeg), False, name)
        object.__setattr__(M, "_ideal_generators", [Polynomial(amb, {m: c for (_i, m), c in v.items()}) for v in kept])
        return M

    @classmethod
    def maximal_ideal(cls, ring: QuotientRing) -> "FPModule":
        return cls.ideal(ring, ring.gens(), name="m")

    # basic data ----------------------------------------------------------------
    @property
    def ngens(self) -> int:
        return len(self.degrees)

    @property
    def free_module(self) -> FreeModule:
        return FreeModule(self.ring, self.degrees)

    @property
    def presentation(self) -> ModuleMap:
        return ModuleMap(FreeModule(self.ring, self.relation_degrees), self.free_module, self.relations)

    @property
    def ideal_generators(self):
        """Generators of the ideal this module was built from (``FPModule.ideal`` only)."""
        return getattr(self, "_ideal_generators", None)

    @cached_property
    def engine(self) -> Engine:
        e = ring_engine(self.ring, self.degrees)
        for r in sorted(self.relations, key=lambda r: vec_degree(r, self.degrees, self.ring.ambient)):
            e.add(r)
        e.complete()
        return e

    @cached_property
    def leads_by_component(self) -> list[list[tuple]]:
        out = [[] for _ in self.degrees]
        for (i, m) in self.engine.leads:
            out[i].append(m)
        return out

    def reduce(self, v: dict) -> dict:
        return self.engine.reduce(v)

    def is_zero(self) -> bool:
        one = self.ring.ambient.one_mono
        return all(any(m == one for m in ls) for ls in self.leads_by_component)

    @property
    def nu(self) -> int:
        """Minimal number of generators."""
        return minimal_presentation(self).ngens

    def graded_nu(self) -> dict:
        out = {}
        for d in minimal_presentation(self).degrees:
            out[d] = out.get(d, 0) + 1
        return out

    def hilbert_function(self, d: int) -> int:
        return len(standard_basis(self, d))

    def hilbert_values(self, bound: int = 12, start: int | None = None) -> list[int]:
        lo = start if start is not None else min([0, *self.degrees])
        return [self.hilbert_function(d) for d in range(lo, bound + 1)]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "degrees": list(self.degrees),
            "presentation": self.presentation.to_strings(),
        }

    def __repr__(self):
        label = self.name or "M"
        return f"<FPModule {label}: {self.ngens} generators {list(self.degrees)}, {len(self.relations)} relations>"


# --- standard monomials ---------------------------------------------------------

@lru_cache(maxsize=None)
def monomials_of_degree(weights: tuple, d: int) -> tuple:
    """All exponent vectors of weighted degree ``d``."""
    n = len(weights)
    if d < 0:
        return ()
    if n == 0:
        return ((),) if d == 0 else ()
    out = []
    w = weights[0]
    for a in range(d // w + 1):
        for rest in monomials_of_degree(weights[1:], d - a * w):
            out.append((a, *rest))
    return tuple(out)


def standard_basis(M: FPModule, d: int) -> list[tuple]:
    """Terms ``(component, exps)`` of degree ``d`` not in the initial module."""
    out = []
    w = M.ring.weights
    for i, s in enumerate(M.degrees):
        leads = M.leads_by_component[i]
        for m in monomials_of_degree(w, d - s):
            if not any(mono_divides(l, m) for l in leads):
                out.append((i, m))
    return out


# --- maps between presented modules ---------------------------------------------

@dataclass(frozen=True, eq=False)
class FPMap:
    """Homomorphism ``source -> target``: ``images[i]`` is the image of generator ``i``
    as a vector of the target's free module; ``degree`` is the degree shift."""

    source: FPModule
    target: FPModule
    images: tuple
    degree: int = 0

    @classmethod
    def identity(cls, M: FPModule) -> "FPMap":
        one = M.ring.ambient.one_mono
        return cls(M, M, tuple({(i, one): 1} for i in range(M.ngens)))

    @classmethod
    def zero(cls, A: FPModule, B: FPModule) -> "FPMap":
        return cls(A, B, tuple({} for _ in range(A.ngens)))

    def apply(self, v: dict) -> dict:
        p = self.source.ring.field.p
        out = {}
        for (i, m), c in v.items():
            out = vec_add(out, vec_mul_poly(self.images[i], {m: c}, p), p)
        return reduce_mod_ideal(out, self.target.ring)

    def compose(self, other: "FPMap") -> "FPMap":
        """``self o other``."""
        if other.target is not self.source and not same_presentation(other.target, self.source):
            raise ShapeError("maps are not composable")
        return FPMap(other.source, self.target, tuple(self.apply(v) for v in other.images),
                     self.degree + other.degree)

    def is_well_defined(self) -> bool:
        """Every relation of the source maps into the relations of the target."""
        return all(not self.target.reduce(self.apply(r)) for r in self.source.relations)

    def is_zero(self) -> bool:
        return all(not self.target.reduce(v) for v in self.images)

    def is_surjective(self) -> bool:
        """Cokernel-is-zero check by a Groebner basis of ``image + relations``."""
        T = self.target
        e = ring_engine(T.ring, T.degrees)
        gens = [v for v in self.images if v] + list(T.relations)
        for g in sorted(gens, key=lambda g: vec_degree(g, T.degrees, T.ring.ambient)):
            e.add(g)
        top = max(T.degrees, default=0)
        e.complete(top)
        one = T.ring.ambient.one_mono
        return all(not e.reduce({(i, one): 1}) for i in range(T.ngens))

    def matrix(self) -> list[list[Polynomial]]:
        amb = self.source.ring.ambient
        rows = [[dict() for _ in self.images] for _ in range(self.target.ngens)]
        for j, col in enumerate(self.images):
            for (i, m), c in col.items():
                rows[i][j][m] = c
        return [[Polynomial(amb, e) for e in row] for row in rows]

    def to_strings(self) -> list[list[str]]:
        return [[str(e) for e in row] for row in self.matrix()]

    def constant_matrix(self) -> list[list[int]]:
        """Degree-0 part of the matrix (entries that are scalars)."""
        one = self.source.ring.ambient.one_mono
        rows = [[0] * len(self.images) for _ in range(self.target.ngens)]
        for j, col in enumerate(self.images):
            for (i, m), c in col.items():
                if m == one:
                    rows[i][j] = c
        return rows

    def __add__(self, other: "FPMap") -> "FPMap":
        p = self.source.ring.field.p
        return FPMap(self.source, self.target,
                     tuple(vec_add(a, b, p) for a, b in zip(self.images, other.images)), self.degree)

    def scale(self, c) -> "FPMap":
        p = self.source.ring.field.p
        return FPMap(self.source, self.target, tuple(vec_scale(a, c, p) for a in self.images), self.degree)


def same_presentation(A: FPModule, B: FPModule) -> bool:
    return A.ring == B.ring and A.degrees == B.degrees and set(map(_freeze, A.relations)) == set(map(_freeze, B.relations))


def _freeze(v: dict):
    return frozenset(v.items())


def _check_ring(A: FPModule, B: FPModule):
    if A.ring != B.ring:
        raise RingMismatchError("modules over different rings")


# --- minimal presentations ---------------------------------------------------------

@dataclass(frozen=True)
class MinimalPresentation:
    module: FPModule
    to_min: FPMap
    from_min: FPMap


def _eliminate(vectors, i, rel, c, p):
    """Use ``rel`` (constant ``c`` at component ``i``) to clear component ``i``."""
    inv = pow(c, p - 2, p) if p else 1 / c
    out = []
    for w in vectors:
        wi = {m: a for (j, m), a in w.items() if j == i}
        if wi:
            coeff = {m: (-a * inv) % p if p else -a * inv for m, a in wi.items()}
            w = vec_add(w, vec_mul_poly(rel, coeff, p), p)
        out.append(w)
    return out


def _drop_component(v, i):
    return {((j - 1 if j > i else j), m): c for (j, m), c in v.items()}


def minimal_presentation_maps(M: FPModule) -> MinimalPresentation:
    cached = M.__dict__.get("_minpres")
    if cached is not None:
        return cached
    ring = M.ring
    p = ring.field.p
    one = ring.ambient.one_mono
    if M.minimal:
        res = MinimalPresentation(M, FPMap.identity(M), FPMap.identity(M))
        M.__dict__["_minpres"] = res
        return res
    degrees = list(M.degrees)
    rels = [reduce_mod_ideal(r, ring) for r in M.relations]
    rels = [r for r in rels if r]
    images = [{(i, one): 1} for i in range(len(degrees))]
    kept = list(range(len(degrees)))
    while True:
        hit = None
        for n, r in enumerate(rels):
            comps = sorted(j for (j, m) in r if m == one)
            if comps:
                hit = (n, comps[0])
                break
        if hit is None:
            break
        n, i = hit
        rel = rels.pop(n)
        c = rel[(i, one)]
        rels = [_drop_component(reduce_mod_ideal(w, ring), i) for w in _eliminate(rels, i, rel, c, p)]
        rels = [r for r in rels if r]
        images = [_drop_component(w, i) for w in _eliminate(images, i, rel, c, p)]
        degrees.pop(i)
        kept.pop(i)
    rdeg = [vec_degree(r, degrees, ring.ambient) for r in rels]
    rels, rdeg = minimalize(ring, degrees, rels, rdeg)
    Mmin = FPModule(ring, tuple(degrees), tuple(rels), tuple(rdeg), True, M.name)
    to_min = FPMap(M, Mmin, tuple(reduce_mod_ideal(v, ring) for v in images))
    from_min = FPMap(Mmin, M, tuple({(k, one): 1} for k in kept))
    res = MinimalPresentation(Mmin, to_min, from_min)
    M.__dict__["_minpres"] = res
    Mmin.__dict__["_minpres"] = MinimalPresentation(Mmin, FPMap.identity(Mmin), FPMap.identity(Mmin))
    return res


def minimal_presentation(M: FPModule) -> FPModule:
    """An isomorphic module whose presentation has all entries in the maximal ideal."""
    return minimal_presentation_maps(M).module


# --- sums, twists, scalars ------------------------------------------------------------

def direct_sum(*modules: FPModule) -> FPModule:
    if not modules:
        raise ValueError("direct_sum needs at least one module")
    ring = modules[0].ring
    degrees, rels, rdeg = [], [], []
    for A in modules:
        _check_ring(modules[0], A)
        off = len(degrees)
        degrees.extend(A.degrees)
        rels.extend(vec_shift_components(r, off) for r in A.relations)
        rdeg.extend(A.relation_degrees)
    name = " + ".join(A.name or "M" for A in modules)
    return FPModule(ring, tuple(degrees), tuple(rels), tuple(rdeg), all(A.minimal for A in modules), name)


def summand_maps(modules: Sequence[FPModule], total: FPModule):
    """Inclusions and projections for ``total = direct_sum(*modules)``."""
    one = total.ring.ambient.one_mono
    incs, projs = [], []
    off = 0
    for A in modules:
        n = A.ngens
        incs.append(FPMap(A, total, tuple({(off + i, one): 1} for i in range(n))))
        imgs = [{} for _ in range(total.ngens)]
        for i in range(n):
            imgs[off + i] = {(i, one): 1}
        projs.append(FPMap(total, A, tuple(imgs)))
        off += n
    return incs, projs


def twist(M: FPModule, a: int) -> FPModule:
    """``M(a)``, so that ``M(a)_d = M_{a+d}``."""
    return FPModule(M.ring, tuple(d - a for d in M.degrees), M.relations,
                    tuple(d - a for d in M.relation_degrees), M.minimal, M.name)


def change_ring(M: FPModule, ring: QuotientRing) -> FPModule:
    """Same presentation read over another quotient of the same ambient ring.

    Over a quotient ``R/(x)`` this is ``M (x) R/(x)``.
    """
    if ring.ambient != M.ring.ambient:
        raise RingMismatchError("different ambient rings")
    return FPModule.from_relations(ring, M.degrees, M.relations, name=M.name)


def restrict_scalars(M: FPModule, ring: QuotientRing) -> FPModule:
    """View a module over ``M.ring = ring/(x)`` as a ``ring``-module."""
    if ring.ambient != M.ring.ambient:
        raise RingMismatchError("different ambient rings")
    extra = [g for g in M.ring.gb_raw if ring.reduce(Polynomial(ring.ambient, g))]
    rels = list(M.relations)
    for i in range(M.ngens):
        for g in extra:
            rels.append({(i, m): c for m, c in g.items()})
    return FPModule.from_relations(ring, M.degrees, rels, name=M.name)


# --- homology ------------------------------------------------------------------------

@dataclass(frozen=True)
class Homology:
    module: FPModule
    cycles: tuple       # generators of ker(d_out) as vectors of the middle free module
    cycle_degrees: tuple


def homology_with_cycles(d_in: FPMap, d_out: FPMap) -> Homology:
    B = d_out.source
    if d_in.target is not B and not same_presentation(d_in.target, B):
        raise ShapeError("d_in does not land in the source of d_out")
    _check_ring(d_in.source, B)
    _check_ring(B, d_out.target)
    C = d_out.target
    for v in d_in.images:
        if C.reduce(d_out.apply(v)):
            raise NotAComplexError("d_out o d_in is not zero")
    ring = B.ring
    if B.ngens == 0:
        return Homology(FPModule.zero(ring), (), ())
    cyc, cdeg = modulo(ring, C.degrees, list(d_out.images), list(B.degrees), C.relations)
    if not cyc:
        return Homology(FPModule.zero(ring), (), ())
    bounds = list(B.relations) + [v for v in d_in.images if v]
    rels, rdeg = modulo(ring, B.degrees, cyc, cdeg, bounds)
    H = FPModule(ring, tuple(cdeg), tuple(rels), tuple(rdeg), False)
    return Homology(H, tuple(cyc), tuple(cdeg))


def homology(d_in: FPMap, d_out: FPMap) -> FPModule:
    """``ker(d_out) / im(d_in)``, minimally presented."""
    return minimal_presentation(homology_with_cycles(d_in, d_out).module)


def kernel(f: FPMap) -> FPModule:
    return homology(FPMap.zero(FPModule.zero(f.source.ring), f.source), f)


def cokernel(f: FPMap) -> FPModule:
    T = f.target
    return minimal_presentation(FPModule.from_relations(T.ring, T.degrees, list(T.relations) + list(f.images)))


# --- Hom spaces ----------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class HomSpace:
    """Basis of the degree-``degree`` homomorphisms ``source -> target``.

    Each basis map has been checked well defined: the images of all relations
    of the source reduce to zero modulo the target's Groebner basis.
    """

    source: FPModule
    target: FPModule
    degree: int
    basis: tuple
    verified: bool
    unknowns: tuple = ()
    free_columns: tuple = ()

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def coordinates(self, h: "FPMap") -> list:
        """Coordinates of a homogeneous map of this degree in :attr:`basis`."""
        pos = {u: k for k, u in enumerate(self.unknowns)}
        vec = {}
        for i, img in enumerate(h.images):
            for t, c in self.target.reduce(img).items():
                vec[pos[(i, t)]] = c
        return [vec.get(f, 0) for f in self.free_columns]

    def element(self, coeffs) -> FPMap:
        p = self.source.ring.field.p
        imgs = [{} for _ in range(self.source.ngens)]
        for c, h in zip(coeffs, self.basis):
            if c:
                imgs = [vec_add(a, b, p, scale=c) for a, b in zip(imgs, h.images)]
        return FPMap(self.source, self.target, tuple(imgs), self.degree)


def hom_space(M: FPModule, N: FPModule, degree: int = 0) -> HomSpace:
    """All homogeneous homomorphisms ``M -> N`` of the given degree."""
    _check_ring(M, N)
    M = minimal_presentation(M)
    N = minimal_presentation(N)
    p = M.ring.field.p
    unknowns = []   # (generator of M, term of N)
    for i, d in enumerate(M.degrees):
        for t in standard_basis(N, d + degree):
            unknowns.append((i, t))
    rows = {}
    for ridx, rel in enumerate(M.relations):
        by_gen = {}
        for (i, m), c in rel.items():
            by_gen.setdefault(i, {})[m] = c
        for u, (i, (comp, mono)) in enumerate(unknowns):
            f = by_gen.get(i)
            if not f:
                continue
            nf = N.reduce(vec_mul_poly({(comp, mono): 1}, f, p))
            for key, c in nf.items():
                rows.setdefault((ridx, key), {})[u] = c
    null = linalg.nullspace(list(rows.values()), len(unknowns), p)
    basis = []
    for x in null:
        imgs = [{} for _ in range(M.ngens)]
        for u, c in x.items():
            i, t = unknowns[u]
            imgs[i][t] = c
        basis.append(FPMap(M, N, tuple(imgs), degree))
    verified = all(h.is_well_defined() for h in basis)
    free_cols = tuple(next(iter(x)) for x in null)
    return HomSpace(M, N, degree, tuple(basis), verified, tuple(unknowns), free_cols)


# --- Hilbert data -----------------------------------------------------------------------

def _poly_mul_series(a: dict, b: dict) -> dict:
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


def _minimal_monomials(ms):
    ms = sorted(set(ms), key=sum)
    out = []
    for m in ms:
        if not any(mono_divides(o, m) for o in out):
            out.append(m)
    return out


def monomial_numerator(gens, weights) -> dict:
    """Numerator ``N(t)`` with ``HS(S/J) = N(t) / prod(1 - t^w)`` for a monomial ideal ``J``."""
    gens = _minimal_monomials(gens)
    return _numerator(tuple(gens), tuple(weights))


@lru_cache(maxsize=None)
def _numerator(gens, weights):
    if not gens:
        return {0: 1}
    if any(sum(g) == 0 for g in gens):
        return {}
    deg = lambda m: sum(w * e for w, e in zip(weights, m))
    pairwise = all(all(not (a and b) for a, b in zip(g, h)) for k, g in enumerate(gens) for h in gens[k + 1:])
    if pairwise:
        out = {0: 1}
        for g in gens:
            out = _poly_mul_series(out, {0: 1, deg(g): -1})
        return out
    last, rest = gens[-1], gens[:-1]
    quot = _minimal_monomials(tuple(max(a - b, 0) for a, b in zip(g, last)) for g in rest)
    a = _numerator(tuple(rest), weights)
    b = _numerator(tuple(quot), weights)
    out = dict(a)
    for k, v in b.items():
        out[k + deg(last)] = out.get(k + deg(last), 0) - v
    return {k: v for k, v in out.items() if v}


@dataclass(frozen=True)
class HilbertReport:
    mode: str
    bound: int | None = None
    values: tuple | None = None       # HF(start..bound)
    start: int | None = None
    numerator: dict | None = None     # HS = numerator / (1-t)^n
    nvars: int | None = None
    dimension: int | None = None
    multiplicity: int | None = None


def hilbert_series(M: FPModule):
    """``(numerator, n)`` with ``HS_M(t) = numerator(t) / (1-t)^n`` (standard grading)."""
    ring = M.ring
    if not ring.standard_graded:
        raise UnsupportedGradingError("rational Hilbert series need standard grading; use truncated values")
    num = {}
    for i, s in enumerate(M.degrees):
        part = monomial_numerator(M.leads_by_component[i], ring.weights)
        for k, v in part.items():
            num[k + s] = num.get(k + s, 0) + v
    return {k: v for k, v in num.items() if v}, ring.nvars


def _dim_and_mult(num: dict, n: int):
    if not num:
        return -1, 0
    coeffs = dict(num)
    dim = n
    while sum(coeffs.values()) == 0:
        # divide by (1 - t)
        lo, hi = min(coeffs), max(coeffs)
        q, acc = {}, 0
        for k in range(lo, hi):
            acc += coeffs.get(k, 0)
            if acc:
                q[k] = acc
        coeffs = q
        dim -= 1
    return dim, sum(coeffs.values())


def krull_dimension(M: FPModule) -> int:
    """Dimension by the monomial criterion; valid for any positive weights. Zero module: -1."""
    best = -1
    n = M.ring.nvars
    for leads in M.leads_by_component:
        if any(sum(l) == 0 for l in leads):
            continue
        supports = [frozenset(k for k, e in enumerate(l) if e) for l in leads]
        for size in range(n, best, -1):
            if any(not any(s <= frozenset(U) for s in supports) for U in combinations(range(n), size)):
                best = size
                break
    return best


def hilbert(M: FPModule, mode: str = "function", bound: int = 12) -> HilbertReport:
    """``mode`` is one of ``function``, ``series``, ``dimension``, ``multiplicity``."""
    if mode == "function":
        start = min([0, *M.degrees])
        return HilbertReport("function", bound, tuple(M.hilbert_values(bound, start)), start)
    if not M.ring.standard_graded:
        raise UnsupportedGradingError(f"{mode} needs standard grading (weights {list(M.ring.weights)})")
    num, n = hilbert_series(M)
    dim, e = _dim_and_mult(num, n)
    if mode == "series":
        return HilbertReport("series", numerator=num, nvars=n, dimension=dim, multiplicity=e)
    if mode == "dimension":
        return HilbertReport("dimension", dimension=dim)
    if mode == "multiplicity":
        return HilbertReport("multiplicity", dimension=dim, multiplicity=e)
    raise ValueError(f"unknown mode {mode!r}")


def finite_length(M: FPModule):
    """``dim_k M`` if finite, else ``None``."""
    if krull_dimension(M) > 0:
        return None
    total = 0
    n = M.ring.nvars
    for i, leads in enumerate(M.leads_by_component):
        if any(sum(l) == 0 for l in leads):
            continue
        bounds = []
        for k in range(n):
            pure = [l[k] for l in leads if l[k] and all(e == 0 for j, e in enumerate(l) if j != k)]
            bounds.append(min(pure))
        for m in product(*(range(b) for b in bounds)):
            if not any(mono_divides(l, m) for l in leads):
                total += 1
    return total


def format_series(num: dict, n: int) -> str:
    terms = []
    for k in sorted(num):
        c = num[k]
        terms.append(f"{c}*t^{k}" if k else str(c))
    return f"({' + '.join(terms) or '0'}) / (1-t)^{n}"


# --- Auslander transpose ---------------------------------------------------------------

def auslander_transpose(M: FPModule) -> FPModule:
    """Cokernel of the transposed minimal presentation matrix."""
    M = minimal_presentation(M)
    rows_as_vectors = []
    for i in range(M.ngens):
        v = {}
        for j, r in enumerate(M.relations):
            for (k, m), c in r.items():
                if k == i:
                    v[(j, m)] = c
        rows_as_vectors.append(v)
    degrees = tuple(-d for d in M.relation_degrees)
    name = f"Tr({M.name or 'M'})"
    return minimal_presentation(FPModule.from_relations(M.ring, degrees, rows_as_vectors, name=name))


def module_from_polys(ring: QuotientRing, rows, degrees=None, name=None) -> FPModule:
    """Alias of :meth:`FPModule.from_matrix` for string matrices."""
    return FPModule.from_matrix(ring, rows, degrees, name)


def vector_to_strings(v: dict, rank: int, amb: PolyRing) -> list[str]:
    comps = [dict() for _ in range(rank)]
    for (i, m), c in v.items():
        comps[i][m] = c
    return [format_poly(c, amb) for c in comps]
