"""Fiber products, direct-summand and isomorphism certificates, decompositions.

Certificates for "M is a direct summand of N" are pairs ``f: M -> N``,
``g: N -> M``.  The maps may be sums of homogeneous pieces of different
degrees, since the statements of interest hold over the local ring, where
summands only match up to a shift.  Such a certificate is checked by
Nakayama: ``g o f`` is an automorphism of the localization at the maximal
ideal iff its matrix modulo the maximal ideal (the constant matrix on minimal
generators) is invertible.  When every piece has degree 0 the cokernel of
``g o f`` is additionally shown to vanish by a Groebner basis computation.
"""

from __future__ import annotations

import random
from fractions import Fraction
from dataclasses import dataclass

import sympy

from . import linalg
from .errors import HomogeneityError, RingMismatchError, TrivialFactorError, ZeroModuleError
from .fpmod import (
    FPMap,
    FPModule,
    direct_sum,
    hilbert,
    hom_space,
    krull_dimension,
    minimal_presentation,
    minimal_presentation_maps,
    summand_maps,
)
from .groebner import ideal_quotient_generators, vec_add, vec_mul_poly
from .ring import PolyRing, Polynomial, QuotientRing

DEFAULT_TRIALS = 64
DEFAULT_SEED = 20240607


# --- fiber products --------------------------------------------------------------

def _remap(poly: Polynomial, amb: PolyRing, offset: int) -> Polynomial:
    n = amb.nvars
    out = {}
    for m, c in poly.raw.items():
        e = [0] * n
        e[offset:offset + len(m)] = m
        out[tuple(e)] = c
    return Polynomial(amb, out)


def fiber_product(S: QuotientRing, T: QuotientRing, name=None) -> QuotientRing:
    """``S x_k T = k[vars S, vars T] / (I_S + I_T + (x_i y_j))``.

    The result carries ``factors`` and a ``decomposition`` certificate for
    ``m = m_S (+) m_T``.
    """
    if S.field != T.field:
        raise RingMismatchError("factors over different fields")
    if set(S.variables) & set(T.variables):
        raise ValueError("factor variable sets must be disjoint")
    for label, Q in (("first", S), ("second", T)):
        if not Q.maximal_ideal_generators():
            raise TrivialFactorError(f"the {label} factor is the residue field; the fiber product would be trivial")
    amb = PolyRing(S.variables + T.variables, S.weights + T.weights, S.field)
    gens = [_remap(g, amb, 0) for g in S.ideal_generators]
    gens += [_remap(g, amb, S.nvars) for g in T.ideal_generators]
    for a in S.variables:
        for b in T.variables:
            gens.append(amb.var(a) * amb.var(b))
    R = QuotientRing(amb, gens, name=name)
    R.factors = (S, T)
    R.decomposition = maximal_ideal_split(R, S.variables)
    return R


def fiber_product_factors(ring: QuotientRing):
    """Split the surviving variables into two blocks exhibiting ``ring`` as a
    nontrivial fiber product, or return None.

    Two variables are linked when their product is nonzero or when they occur
    together in a non-monomial Groebner basis element.
    """
    amb = ring.ambient
    live = [k for k, v in enumerate(amb.variables) if not ring.is_zero(amb.var(v))]
    if len(live) < 2:
        return None
    parent = {k: k for k in live}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        parent[find(a)] = find(b)

    for i, a in enumerate(live):
        for b in live[i + 1:]:
            if not ring.is_zero(amb.var(amb.variables[a]) * amb.var(amb.variables[b])):
                union(a, b)
    for g in ring.gb_raw:
        if len(g) < 2:
            continue
        support = [k for m in g for k, e in enumerate(m) if e and k in parent]
        for a in support[1:]:
            union(support[0], a)
    blocks = {}
    for k in live:
        blocks.setdefault(find(k), []).append(k)
    if len(blocks) < 2:
        return None
    groups = sorted(blocks.values())
    first = [amb.variables[k] for k in groups[0]]
    rest = [amb.variables[k] for g in groups[1:] for k in g]
    return first, rest


# --- certificates -------------------------------------------------------------------

def _constant_matrix(images, rows: int, one) -> list[list[int]]:
    out = [[0] * len(images) for _ in range(rows)]
    for j, v in enumerate(images):
        for (i, m), c in v.items():
            if m == one:
                out[i][j] = c
    return out


def _compose_images(g: FPMap, f: FPMap) -> tuple:
    return tuple(g.apply(v) for v in f.images)


@dataclass(frozen=True, eq=False)
class SplitCertificate:
    """``g o f`` is an automorphism of ``M``, so ``M`` is a direct summand of ``N``."""

    M: FPModule
    N: FPModule
    f: FPMap
    g: FPMap
    composite: FPMap
    constant_matrix: tuple
    degrees: tuple           # degrees of the homogeneous pieces used
    surjectivity_proof: str
    seed: int | None = None
    trials_used: int | None = None
    status: str = "proved-yes"

    def verify(self) -> bool:
        return verify_split(self.M, self.N, self.f, self.g)

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "f": self.f.to_strings(),
            "g": self.g.to_strings(),
            "composite_constant_matrix": [list(r) for r in self.constant_matrix],
            "piece_degrees": list(self.degrees),
            "surjectivity_proof": self.surjectivity_proof,
            "seed": self.seed,
            "trials_used": self.trials_used,
        }


def verify_split(M, N, f: FPMap, g: FPMap) -> bool:
    """Re-check a split pair from scratch."""
    if f.source.ngens != M.ngens or g.target.ngens != M.ngens:
        return False
    if not (f.is_well_defined() and g.is_well_defined()):
        return False
    comp = _compose_images(g, f)
    one = M.ring.ambient.one_mono
    C = _constant_matrix(comp, M.ngens, one)
    p = M.ring.field.p
    if linalg.dense_rank(C, p) != M.ngens:
        return False
    if f.degree == 0 and g.degree == 0:
        return FPMap(M, M, comp).is_surjective()
    return True


@dataclass(frozen=True)
class NotFoundReport:
    """Three-valued negative: ``proved-no`` when an obstruction fired, else ``not-found``."""

    status: str
    obstructions: tuple
    diagnostics: dict
    seed: int | None
    trials: int

    def __bool__(self):
        return False

    def to_json(self) -> dict:
        return {"status": self.status, "obstructions": list(self.obstructions),
                "diagnostics": self.diagnostics, "seed": self.seed, "trials": self.trials}


def annihilator_ideal(M: FPModule) -> list:
    M = minimal_presentation(M)
    return [Polynomial(M.ring.ambient, g)
            for g in ideal_quotient_generators(M.ring, list(M.degrees), list(M.relations), M.ngens)]


def kills(M: FPModule, r: Polynomial) -> bool:
    p = M.ring.field.p
    one = M.ring.ambient.one_mono
    return all(not M.reduce(vec_mul_poly({(i, one): 1}, r.raw, p)) for i in range(M.ngens))


def summand_obstructions(M: FPModule, N: FPModule, betti_length: int = 3) -> tuple[list, dict]:
    """Necessary conditions for ``M`` to be a direct summand of ``N`` (locally).

    Minimal generator counts and Betti numbers of a summand are bounded by
    those of the whole module, and ``ann N`` must kill ``M``.
    """
    from .resolutions import free_resolution

    M = minimal_presentation(M)
    N = minimal_presentation(N)
    obs = []
    diag = {"nu": [M.ngens, N.ngens]}
    if M.ngens > N.ngens:
        obs.append(f"nu(M) = {M.ngens} > nu(N) = {N.ngens}")
    bm = free_resolution(M, betti_length).betti
    bn = free_resolution(N, betti_length).betti
    diag["betti"] = [bm, bn]
    for i, (a, b) in enumerate(zip(bm, bn)):
        if a > b:
            obs.append(f"beta_{i}(M) = {a} > beta_{i}(N) = {b}")
    annN = annihilator_ideal(N)
    diag["ann_N"] = [str(a) for a in annN]
    bad = [str(a) for a in annN if not kills(M, a)]
    if bad:
        obs.append(f"ann(N) does not kill M: {bad[0]}")
    return obs, diag


class _HomCache:
    def __init__(self):
        self.data = {}

    def get(self, A, B, d):
        key = (id(A), id(B), d)
        h = self.data.get(key)
        if h is None:
            h = hom_space(A, B, d)
            self.data[key] = h
        return h


def _random_mixed_map(spaces, rng, p, A, B) -> tuple[FPMap, list]:
    imgs = [{} for _ in range(A.ngens)]
    used = []
    for H in spaces:
        if not H.basis:
            continue
        coeffs = [rng.randrange(p) if p else rng.randint(-5, 5) for _ in H.basis]
        h = H.element(coeffs)
        imgs = [vec_add(a, b, p) for a, b in zip(imgs, h.images)]
        used.append(H.degree)
    degree = used[0] if len(set(used)) == 1 else (0 if not used else None)
    return FPMap(A, B, tuple(imgs), degree), used


def _shift_candidates(A: FPModule, B: FPModule) -> list[int]:
    return sorted({b - a for a in A.degrees for b in B.degrees})


def _search_pair(M, N, trials, seed, need_both=False):
    """Random search for ``f: M -> N``, ``g: N -> M`` with ``g o f`` (and ``f o g``
    when ``need_both``) invertible modulo the maximal ideal."""
    rng = random.Random(seed)
    p = M.ring.field.p
    cache = _HomCache()
    deltas = _shift_candidates(M, N)
    fsp = [cache.get(M, N, d) for d in deltas]
    gsp = [cache.get(N, M, -d) for d in deltas]
    one = M.ring.ambient.one_mono
    for t in range(1, trials + 1):
        f, fd = _random_mixed_map(fsp, rng, p, M, N)
        g, gd = _random_mixed_map(gsp, rng, p, N, M)
        Ff = _constant_matrix(f.images, N.ngens, one)
        Gg = _constant_matrix(g.images, M.ngens, one)
        if linalg.dense_rank(linalg.dense_mul(Gg, Ff, p), p) != M.ngens:
            continue
        if need_both and linalg.dense_rank(linalg.dense_mul(Ff, Gg, p), p) != N.ngens:
            continue
        return f, g, sorted(set(fd) | {-d for d in gd}), t
    return None


def split_summand(M: FPModule, N: FPModule, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED):
    """``SplitCertificate`` proving ``M | N``, or a ``NotFoundReport``."""
    if M.ring != N.ring:
        raise RingMismatchError("modules over different rings")
    M = minimal_presentation(M)
    N = minimal_presentation(N)
    if M.ngens == 0:
        z = FPMap.zero(M, N)
        return _make_split(M, N, z, FPMap.zero(N, M), [0], seed, 0)
    obs, diag = summand_obstructions(M, N)
    if obs:
        return NotFoundReport("proved-no", tuple(obs), diag, seed, 0)
    found = _search_pair(M, N, trials, seed)
    if found is None:
        return NotFoundReport("not-found", (), diag, seed, trials)
    f, g, degs, t = found
    return _make_split(M, N, f, g, degs, seed, t)


def _make_split(M, N, f, g, degs, seed, t) -> SplitCertificate:
    comp = FPMap(M, M, _compose_images(g, f))
    one = M.ring.ambient.one_mono
    C = _constant_matrix(comp.images, M.ngens, one)
    homogeneous = f.degree == 0 and g.degree == 0
    proof = ("constant matrix of g o f invertible and Groebner cokernel of g o f is zero"
             if homogeneous else
             "constant matrix of g o f invertible (Nakayama over the localization at the maximal ideal)")
    if not verify_split(M, N, f, g):
        raise AssertionError("split certificate failed re-verification")
    return SplitCertificate(M, N, f, g, comp, tuple(tuple(r) for r in C), tuple(degs), proof, seed, t)


# --- isomorphism ----------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class IsoCertificate:
    M: FPModule
    N: FPModule
    f: FPMap
    g: FPMap
    degrees: tuple
    proof: str
    seed: int | None = None
    trials_used: int | None = None
    status: str = "proved-yes"

    def verify(self) -> bool:
        return verify_split(self.M, self.N, self.f, self.g) and verify_split(self.N, self.M, self.g, self.f)

    def to_json(self) -> dict:
        return {"status": self.status, "f": self.f.to_strings(), "g": self.g.to_strings(),
                "piece_degrees": list(self.degrees), "proof": self.proof,
                "seed": self.seed, "trials_used": self.trials_used}


def is_isomorphic(M: FPModule, N: FPModule, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED):
    """Isomorphism of the localizations at the maximal ideal (graded modules up to shifts
    of summands).

    Pre-screen: Betti numbers and annihilators must agree, else proved-no.
    """
    if M.ring != N.ring:
        raise RingMismatchError("modules over different rings")
    M = minimal_presentation(M)
    N = minimal_presentation(N)
    if M.ngens == 0 or N.ngens == 0:
        if M.ngens == N.ngens:
            return IsoCertificate(M, N, FPMap.zero(M, N), FPMap.zero(N, M), (), "both modules are zero", seed, 0)
        return NotFoundReport("proved-no", ("exactly one module is zero",), {}, seed, 0)
    obs1, diag = summand_obstructions(M, N)
    obs2, _ = summand_obstructions(N, M)
    obs = obs1 + obs2
    if obs:
        return NotFoundReport("proved-no", tuple(obs), diag, seed, 0)
    found = _search_pair(M, N, trials, seed, need_both=True)
    if found is None:
        return NotFoundReport("not-found", (), diag, seed, trials)
    f, g, degs, t = found
    cert = IsoCertificate(M, N, f, g, tuple(degs),
                          "g o f and f o g invertible modulo the maximal ideal (Nakayama)", seed, t)
    if not cert.verify():
        raise AssertionError("isomorphism certificate failed re-verification")
    return cert


# --- decompositions ------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class DecompositionCertificate:
    """Mutually inverse degree-0 maps ``M <-> A (+) B``."""

    M: FPModule
    A: FPModule
    B: FPModule
    to_sum: FPMap
    from_sum: FPMap
    method: str
    seed: int | None = None
    status: str = "decomposable"

    def verify(self) -> bool:
        S = self.to_sum.target
        return (self.to_sum.is_well_defined() and self.from_sum.is_well_defined()
                and self.from_sum.compose(self.to_sum).is_surjective()
                and self.to_sum.compose(self.from_sum).is_surjective()
                and S.ngens == self.A.ngens + self.B.ngens)

    def to_json(self) -> dict:
        return {"status": self.status, "method": self.method,
                "A": self.A.to_json(), "B": self.B.to_json(),
                "to_sum": self.to_sum.to_strings(), "from_sum": self.from_sum.to_strings(),
                "seed": self.seed}


@dataclass(frozen=True)
class IndecomposableReport:
    """``status`` is ``proved-indecomposable`` or ``not-found``."""

    status: str
    reason: str
    seed: int | None = None
    trials: int = 0

    def __bool__(self):
        return False

    @property
    def proved(self) -> bool:
        return self.status == "proved-indecomposable"

    def to_json(self) -> dict:
        return {"status": self.status, "reason": self.reason, "seed": self.seed, "trials": self.trials}


def _split_by_idempotent(M: FPModule, e: FPMap, method: str, seed) -> DecompositionCertificate:
    p = M.ring.field.p
    ident = FPMap.identity(M)
    comp = ident + e.scale(-1)
    A0 = FPModule.from_relations(M.ring, M.degrees, list(M.relations) + [v for v in comp.images if v])
    B0 = FPModule.from_relations(M.ring, M.degrees, list(M.relations) + [v for v in e.images if v])
    mpA = minimal_presentation_maps(A0)
    mpB = minimal_presentation_maps(B0)
    A, B = mpA.module, mpB.module
    S = direct_sum(A, B)
    incs, _projs = summand_maps([A, B], S)
    # M -> A (+) B: generator i goes to (class in A, class in B)
    to_imgs = []
    for i in range(M.ngens):
        a = incs[0].apply(mpA.to_min.images[i])
        b = incs[1].apply(mpB.to_min.images[i])
        to_imgs.append(vec_add(a, b, p))
    to_sum = FPMap(M, S, tuple(to_imgs))
    # A (+) B -> M: A generator j goes to e(from_min(j)), B generator to (1 - e)(...)
    from_imgs = [e.apply(v) for v in mpA.from_min.images] + [comp.apply(v) for v in mpB.from_min.images]
    from_sum = FPMap(S, M, tuple(from_imgs))
    cert = DecompositionCertificate(M, A, B, to_sum, from_sum, method, seed)
    if not cert.verify():
        raise AssertionError("decomposition certificate failed re-verification")
    return cert


class EndAlgebra:
    """``End_0(M)`` with structure constants in the basis of :func:`hom_space`."""

    def __init__(self, M: FPModule):
        self.M = M
        self.H = hom_space(M, M, 0)
        self.n = self.H.dimension
        self.field = M.ring.field
        self.p = self.field.p
        self.basis = self.H.basis
        self._table = None

    def mult_table(self):
        if self._table is None:
            tab = {}
            for i, a in enumerate(self.basis):
                for j, b in enumerate(self.basis):
                    tab[(i, j)] = self.H.coordinates(a.compose(b))
            self._table = tab
        return self._table

    def mul(self, x, y):
        tab = self.mult_table()
        norm = self.field.normalize
        out = [0] * self.n
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                for k, c in enumerate(tab[(i, j)]):
                    if c:
                        out[k] = norm(out[k] + a * b * c)
        return out

    def identity(self):
        return self.H.coordinates(FPMap.identity(self.M))

    def to_map(self, x) -> FPMap:
        return self.H.element(x)

    def left_matrix(self, x):
        cols = [self.mul(x, [1 if k == j else 0 for k in range(self.n)]) for j in range(self.n)]
        return [[cols[j][i] for j in range(self.n)] for i in range(self.n)]

    def radical_codimension(self) -> int:
        """``dim End - dim rad`` via the trace form (valid when ``p == 0`` or ``p > dim End``)."""
        mats = [self.left_matrix([1 if k == j else 0 for k in range(self.n)]) for j in range(self.n)]
        p = self.p
        gram = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                prod = linalg.dense_mul(mats[i], mats[j], p)
                row.append(self.field.normalize(sum(prod[k][k] for k in range(self.n))))
            gram.append(row)
        return linalg.dense_rank(gram, p)

    def minimal_polynomial(self, x):
        powers = [self.identity()]
        while True:
            nxt = self.mul(powers[-1], x)
            powers.append(nxt)
            k = len(powers)
            rows = [{j: powers[j][i] for j in range(k) if powers[j][i]} for i in range(self.n)]
            null = linalg.nullspace(rows, k, self.p)
            if null:
                coeffs = null[0]
                top = max(coeffs)
                inv = self.field.inv(coeffs[top])
                return [self.field.normalize(coeffs.get(j, 0) * inv) for j in range(top + 1)]

    def evaluate(self, poly_coeffs, x):
        out = [0] * self.n
        pw = self.identity()
        for c in poly_coeffs:
            if c:
                out = [self.field.normalize(a + c * b) for a, b in zip(out, pw)]
            pw = self.mul(pw, x)
        return out


def _idempotent_from(alg: EndAlgebra, x):
    """A nontrivial idempotent in ``k[x]`` when the minimal polynomial of ``x`` has
    two coprime factors (CRT), else None."""
    p = alg.p
    mp = alg.minimal_polynomial(x)
    t = sympy.symbols("t")
    dom = {"modulus": p} if p else {"domain": sympy.QQ}
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) if not p else c for c in reversed(mp)], t, **dom)
    _lc, factors = poly.factor_list()
    if len(factors) < 2:
        return None
    f1 = factors[0][0] ** factors[0][1]
    g = sympy.Poly(1, t, **dom)
    for fac, e in factors[1:]:
        g = g * fac ** e
    s, _t, h = g.gcdex(f1)
    if h.degree() != 0:
        return None
    u = (s * g).rem(poly)
    if p:
        coeffs = [int(c) % p for c in reversed(u.all_coeffs())]
    else:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(u.all_coeffs())]
    e = alg.evaluate(coeffs, x)
    if alg.mul(e, e) != e or not any(e) or e == alg.identity():
        return None
    return e


def decompose(M: FPModule, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED):
    """Split ``M`` by a nontrivial idempotent of ``End_0(M)``.

    Returns a ``DecompositionCertificate`` or an ``IndecomposableReport``.  A
    cyclic module is proved indecomposable (its endomorphism ring is local).
    """
    M = minimal_presentation(M)
    if M.ngens == 0:
        raise ZeroModuleError("the zero module has no decomposition")
    if M.ngens == 1:
        return IndecomposableReport("proved-indecomposable", "cyclic module: End(R/J) = R/J is local", seed, 0)
    alg = EndAlgebra(M)
    if alg.n <= 1:
        return IndecomposableReport("proved-indecomposable", "End_0(M) = k", seed, 0)
    if alg.radical_codimension() == 1:
        return IndecomposableReport("proved-indecomposable",
                                    "End_0(M) is local (its radical has codimension 1), so M is graded-indecomposable",
                                    seed, 0)
    rng = random.Random(seed)
    for t in range(1, trials + 1):
        x = [alg.field.random_element(rng) for _ in range(alg.n)]
        e = _idempotent_from(alg, x)
        if e is None:
            continue
        return _split_by_idempotent(M, alg.to_map(e), f"idempotent of End_0 found at trial {t}", seed)
    return IndecomposableReport("not-found", "no nontrivial idempotent found in End_0(M)", seed, trials)


def maximal_ideal_split(ring: QuotientRing, first_vars) -> DecompositionCertificate:
    """Certificate ``m = (first_vars) (+) (other variables)`` for a fiber product."""
    amb = ring.ambient
    m = FPModule.maximal_ideal(ring)
    gens = m.ideal_generators
    first = [v for v in first_vars if not ring.is_zero(amb.var(v))]
    rest = [v for v in amb.variables if v not in first_vars and not ring.is_zero(amb.var(v))]
    A = FPModule.ideal(ring, first, name="I")
    B = FPModule.ideal(ring, rest, name="J")
    S = direct_sum(A, B)
    one = amb.one_mono
    # the generators of m, A and B are variables (up to order)
    var_of = lambda poly: amb.variables[[k for k, e in enumerate(poly.leading_monomial()) if e][0]]
    pos_S = {var_of(g): n for n, g in enumerate(A.ideal_generators)}
    pos_S.update({var_of(g): len(A.ideal_generators) + n for n, g in enumerate(B.ideal_generators)})
    pos_M = {var_of(g): n for n, g in enumerate(gens)}
    to_imgs = [{(pos_S[var_of(g)], one): 1} for g in gens]
    from_imgs = [None] * S.ngens
    for v, n in pos_S.items():
        from_imgs[n] = {(pos_M[v], one): 1}
    cert = DecompositionCertificate(m, A, B, FPMap(m, S, tuple(to_imgs)), FPMap(S, m, tuple(from_imgs)),
                                    "fiber product: variable blocks", None)
    if not cert.verify():
        raise AssertionError("fiber product decomposition failed re-verification")
    return cert


def decompose_maximal_ideal(ring: QuotientRing, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED):
    """Decompose ``m``: depth obstruction first, then fiber-product blocks, then idempotents."""
    from .homalg import depth_of_ring

    d = depth_of_ring(ring)
    if d >= 2:
        return IndecomposableReport("proved-indecomposable",
                                    f"depth R = {d} >= 2, while a decomposable maximal ideal forces depth R <= 1",
                                    seed, 0)
    blocks = fiber_product_factors(ring)
    if blocks is not None:
        return maximal_ideal_split(ring, blocks[0])
    m = FPModule.maximal_ideal(ring)
    if m.ngens == 0:
        raise ZeroModuleError("the maximal ideal is zero")
    return decompose(m, trials, seed)


# --- determinantal ideals and ring predicates ------------------------------------------

def determinantal_ideal_2x2(rows) -> list[Polynomial]:
    """All 2x2 minors of a 2 x m matrix."""
    if len(rows) != 2 or len(rows[0]) != len(rows[1]):
        raise ValueError("need a 2 x m matrix")
    a, b = rows
    out = []
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            minor = a[i] * b[j] - a[j] * b[i]
            if not minor.is_homogeneous():
                raise HomogeneityError(f"minor ({i},{j}) = {minor} is not weighted-homogeneous")
            if minor:
                out.append(minor)
    return out


def embedding_dimension(ring: QuotientRing) -> int:
    return FPModule.maximal_ideal(ring).ngens


def ring_dimension(ring: QuotientRing) -> int:
    return krull_dimension(FPModule.free(ring))


def is_dvr(ring: QuotientRing) -> bool:
    """Graded avatar of a DVR: embedding dimension 1 and dimension 1."""
    return embedding_dimension(ring) == 1 and ring_dimension(ring) == 1


@dataclass(frozen=True)
class MultiplicityReport:
    e: int
    edim: int
    dim: int
    holds: bool
    cohen_macaulay: bool
    flag: str = ""


def minimal_multiplicity(ring: QuotientRing) -> MultiplicityReport:
    """``e(R) = edim R - dim R + 1``; the inequality presumes Cohen-Macaulay, flagged otherwise."""
    from .homalg import depth_of_ring

    rep = hilbert(FPModule.free(ring), "multiplicity")
    edim = embedding_dimension(ring)
    cm = depth_of_ring(ring) == rep.dimension
    flag = "" if cm else "ring is not Cohen-Macaulay; the multiplicity bound is not guaranteed"
    return MultiplicityReport(rep.multiplicity, edim, rep.dimension,
                              rep.multiplicity == edim - rep.dimension + 1, cm, flag)


@dataclass(frozen=True, eq=False)
class QuasiDecomposableReport:
    regular: bool
    witness: object
    quotient: QuotientRing | None
    certificate: object
    depth: int
    length_ok: bool

    @property
    def holds(self) -> bool:
        return bool(self.regular and isinstance(self.certificate, DecompositionCertificate) and self.length_ok)


def quasi_decomposable(ring: QuotientRing, elements, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED):
    """Check that ``elements`` is regular on ``R`` and that ``m/(x)`` decomposes."""
    from .homalg import depth_of_ring, is_regular_sequence

    R = FPModule.free(ring)
    reg = is_regular_sequence(elements, R)
    d = depth_of_ring(ring)
    n = len(elements)
    length_ok = n in (d - 1, d)
    if not reg:
        return QuasiDecomposableReport(False, reg, None, None, d, length_ok)
    Q = ring.quotient(elements) if elements else ring
    cert = decompose_maximal_ideal(Q, trials, seed)
    return QuasiDecomposableReport(True, None, Q, cert, d, length_ok)


__all__ = [
    "DecompositionCertificate",
    "IndecomposableReport",
    "IsoCertificate",
    "NotFoundReport",
    "SplitCertificate",
    "decompose",
    "decompose_maximal_ideal",
    "determinantal_ideal_2x2",
    "fiber_product",
    "fiber_product_factors",
    "is_dvr",
    "is_isomorphic",
    "minimal_multiplicity",
    "quasi_decomposable",
    "split_summand",
]
