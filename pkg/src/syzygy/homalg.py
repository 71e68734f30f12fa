"""Ext, Tor, depth, Bass numbers and projective dimension probes.

Ext and Tor are computed from a minimal free resolution of the first argument
only; symmetry of Tor is left to the tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ZeroModuleError
from .fpmod import (
    FPMap,
    FPModule,
    direct_sum,
    finite_length,
    homology,
    homology_with_cycles,
    minimal_presentation,
    twist,
    vector_to_strings,
)
from .groebner import vec_add, vec_mul_poly
from .resolutions import free_resolution

HF_PROBE = 12


@dataclass(frozen=True, eq=False)
class HomologyReport:
    """One Ext or Tor module with its size.

    ``finite_length_dimension`` is set iff the module has Krull dimension <= 0;
    otherwise ``hilbert_values`` holds a truncated Hilbert function.
    """

    functor: str
    index: int
    module: FPModule
    finite_length_dimension: int | None
    hilbert_values: tuple | None = None
    bound: int = HF_PROBE

    @property
    def is_zero(self) -> bool:
        return self.module.ngens == 0

    @property
    def dimension(self):
        """``dim_k`` when finite, else the string ``infinite-length``."""
        if self.finite_length_dimension is not None:
            return self.finite_length_dimension
        return "infinite-length"

    def to_json(self) -> dict:
        out = {"functor": self.functor, "index": self.index, "dimension": self.dimension,
               "module": self.module.to_json()}
        if self.hilbert_values is not None:
            out["hilbert_values"] = list(self.hilbert_values)
            out["degree_bound"] = self.bound
        return out


def _report(functor, i, H: FPModule, bound=HF_PROBE) -> HomologyReport:
    n = finite_length(H)
    if n is not None:
        return HomologyReport(functor, i, H, n)
    return HomologyReport(functor, i, H, None, tuple(H.hilbert_values(bound)), bound)


def _tensor_term(F_shifts, N: FPModule) -> FPModule:
    parts = [twist(N, -a) for a in F_shifts]
    return direct_sum(*parts) if parts else FPModule.zero(N.ring)


def _hom_term(F_shifts, N: FPModule) -> FPModule:
    parts = [twist(N, a) for a in F_shifts]
    return direct_sum(*parts) if parts else FPModule.zero(N.ring)


def _tensor_map(d, src: FPModule, tgt: FPModule, r: int) -> FPMap:
    """``d (x) N`` for a free differential ``d`` (``r`` generators of ``N``)."""
    imgs = []
    for col in d.columns:
        for n in range(r):
            imgs.append({(j * r + n, m): c for (j, m), c in col.items()})
    return FPMap(src, tgt, tuple(imgs))


def _hom_map(d, src: FPModule, tgt: FPModule, r: int) -> FPMap:
    """``Hom(d, N)``: the generator ``(j, n)`` goes to ``sum_l d_{jl} e_{(l, n)}``."""
    rows = [dict() for _ in range(d.target.rank)]
    for l, col in enumerate(d.columns):
        for (j, m), c in col.items():
            rows[j].setdefault(l, {})[m] = c
    imgs = []
    for j in range(d.target.rank):
        for n in range(r):
            v = {}
            for l, poly in rows[j].items():
                for m, c in poly.items():
                    v[(l * r + n, m)] = c
            imgs.append(v)
    return FPMap(src, tgt, tuple(imgs))


def _check_same_ring(M, N):
    if M.ring != N.ring:
        from .errors import RingMismatchError

        raise RingMismatchError("modules over different rings")


def tor(M: FPModule, N: FPModule, i: int, bound: int = HF_PROBE) -> HomologyReport:
    """``Tor_i(M, N)`` as the homology of ``F (x) N`` at spot ``i``."""
    _check_same_ring(M, N)
    if i < 0:
        raise ValueError("i must be non-negative")
    res = free_resolution(M, i + 1)
    N = minimal_presentation(N)
    r = N.ngens
    ring = N.ring
    here = _tensor_term(res.free_module(i).shifts, N)
    if i + 1 <= len(res.differentials):
        up = _tensor_term(res.free_module(i + 1).shifts, N)
        d_in = _tensor_map(res.differential(i + 1), up, here, r)
    else:
        d_in = FPMap.zero(FPModule.zero(ring), here)
    if i >= 1:
        down = _tensor_term(res.free_module(i - 1).shifts, N)
        d_out = _tensor_map(res.differential(i), here, down, r)
    else:
        d_out = FPMap.zero(here, FPModule.zero(ring))
    return _report("tor", i, homology(d_in, d_out), bound)


def ext(M: FPModule, N: FPModule, i: int, bound: int = HF_PROBE) -> HomologyReport:
    """``Ext^i(M, N)`` as the cohomology of ``Hom(F, N)`` at spot ``i``."""
    _check_same_ring(M, N)
    if i < 0:
        raise ValueError("i must be non-negative")
    res = free_resolution(M, i + 1)
    N = minimal_presentation(N)
    r = N.ngens
    ring = N.ring
    here = _hom_term(res.free_module(i).shifts, N)
    if i >= 1:
        prev = _hom_term(res.free_module(i - 1).shifts, N)
        d_in = _hom_map(res.differential(i), prev, here, r)
    else:
        d_in = FPMap.zero(FPModule.zero(ring), here)
    if i + 1 <= len(res.differentials):
        nxt = _hom_term(res.free_module(i + 1).shifts, N)
        d_out = _hom_map(res.differential(i + 1), here, nxt, r)
    else:
        d_out = FPMap.zero(here, FPModule.zero(ring))
    return _report("ext", i, homology(d_in, d_out), bound)


def depth(M: FPModule) -> int:
    """Least ``i`` with ``Ext^i(k, M) != 0``."""
    M = minimal_presentation(M)
    if M.ngens == 0:
        raise ZeroModuleError("depth of the zero module is not defined")
    k = FPModule.residue_field(M.ring)
    for i in range(M.ring.nvars + 1):
        if not ext(k, M, i).is_zero:
            return i
    raise AssertionError("Ext(k, M) vanished up to the number of variables for a nonzero graded module")


@dataclass(frozen=True)
class BassReport:
    values: tuple
    depth: int | None
    finite_injdim_hint: bool
    note: str = ("hint only: some Bass number above the depth vanishes in range; "
                 "finite injective dimension is never asserted")


def bass_numbers(N: FPModule, upto: int) -> BassReport:
    """``mu^i = dim_k Ext^i(k, N)`` for ``i = 0..upto``."""
    k = FPModule.residue_field(N.ring)
    vals = []
    for i in range(upto + 1):
        rep = ext(k, N, i)
        vals.append(rep.finite_length_dimension)
    nz = [i for i, v in enumerate(vals) if v]
    d = nz[0] if nz else None
    hint = d is not None and any(v == 0 for v in vals[d + 1:])
    return BassReport(tuple(vals), d, hint)


@dataclass(frozen=True)
class PDReport:
    value: int | None           # exact value when known
    lower_bound: int | None
    infinite: bool
    reason: str

    def __str__(self):
        if self.value is not None:
            return str(self.value)
        if self.infinite:
            return "infinite"
        return f">= {self.lower_bound}"

    @property
    def finite(self) -> bool:
        return self.value is not None


def projective_dimension(M: FPModule, bound: int = 6) -> PDReport:
    """Exact pd when some syzygy up to ``bound`` is free, else a lower bound.

    Over a recognized nontrivial fiber product a bound of at least 2 is
    upgraded to infinite (pd >= 2 forces pd = infinity there).
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    res = free_resolution(M, bound + 1)
    pd = res.projective_dimension
    if pd is not None:
        return PDReport(pd, None, False, "some syzygy is free")
    from .structure import fiber_product_factors

    if fiber_product_factors(M.ring) is not None:
        return PDReport(None, bound + 1, True,
                        "pd >= 2 over a nontrivial fiber product forces infinite projective dimension")
    return PDReport(None, bound + 1, False, f"no free syzygy up to index {bound}")


@dataclass(frozen=True)
class RegularSequenceReport:
    result: bool
    failed_at: int | None = None
    witness: list | None = None
    reason: str = ""

    def __bool__(self):
        return self.result


def multiplication_map(M: FPModule, x) -> FPMap:
    """``x : M(-deg x) -> M``."""
    p = M.ring.field.p
    src = twist(M, -x.degree)
    imgs = tuple(vec_mul_poly({(i, M.ring.ambient.one_mono): 1}, x.raw, p) for i in range(M.ngens))
    return FPMap(src, M, imgs)


def is_regular_sequence(elements, M: FPModule) -> RegularSequenceReport:
    ring = M.ring
    amb = ring.ambient
    xs = [ring.reduce(amb(x)) for x in elements]
    cur = minimal_presentation(M)
    for j, x in enumerate(xs):
        if not x:
            if cur.ngens:
                w = vector_to_strings({(0, amb.one_mono): 1}, cur.ngens, amb)
                return RegularSequenceReport(False, j, w, f"element {j} is zero in the ring")
            return RegularSequenceReport(False, j, None, "quotient became zero")
        if not x.is_homogeneous() or x.is_constant():
            raise ValueError("sequence elements must be homogeneous elements of the maximal ideal")
        mult = multiplication_map(cur, x)
        h = homology_with_cycles(FPMap.zero(FPModule.zero(ring), mult.source), mult)
        Hmin = minimal_presentation(h.module)
        if Hmin.ngens:
            to_full = _kernel_witness(h)
            return RegularSequenceReport(False, j, vector_to_strings(to_full, cur.ngens, amb),
                                         f"{x} is a zero divisor on the quotient")
        rels = list(cur.relations) + [vec_mul_poly({(i, amb.one_mono): 1}, x.raw, ring.field.p)
                                      for i in range(cur.ngens)]
        cur = minimal_presentation(FPModule.from_relations(ring, cur.degrees, rels))
    if cur.ngens == 0:
        return RegularSequenceReport(False, None, None, "final quotient is zero")
    return RegularSequenceReport(True)


def _kernel_witness(h) -> dict:
    """A kernel element that is nonzero in the homology (a generator of it)."""
    from .fpmod import minimal_presentation_maps

    mp = minimal_presentation_maps(h.module)
    img = mp.from_min.images[0]
    p = h.module.ring.field.p
    out = {}
    for (i, m), c in img.items():
        out = vec_add(out, vec_mul_poly(h.cycles[i], {m: c}, p), p)
    return out


def depth_of_ring(ring) -> int:
    return depth(FPModule.free(ring))


def tor_dimensions(M, N, indices) -> list:
    return [tor(M, N, i).dimension for i in indices]


def ext_dimensions(M, N, indices) -> list:
    return [ext(M, N, i).dimension for i in indices]

