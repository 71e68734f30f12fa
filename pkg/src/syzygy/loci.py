"""Closed loci in Spec R given by defining ideals: singular, non-free and
infinite projective dimension loci.

Radical comparisons use bounded power-membership probes (exponent <= 8).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import ShapeError
from .fpmod import FPModule, minimal_presentation
from .groebner import annihilator, ideal_groebner_basis, reduce_poly
from .ring import Polynomial, QuotientRing

POWER_PROBE = 8


@dataclass(frozen=True, eq=False)
class LocusDescription:
    """The closed set ``V(J)`` of ``Spec R``; ``defining_ideal`` lists generators of ``J``."""

    ring: QuotientRing
    defining_ideal: tuple
    kind: str
    validity_flags: tuple = field(default=())

    @property
    def _gb(self):
        amb = self.ring.ambient
        gens = [g for g in self.ring.gb_raw] + [f.raw for f in self.defining_ideal if f]
        return ideal_groebner_basis(amb, gens)

    def is_empty(self) -> bool:
        one = self.ring.ambient.one_mono
        return any(set(g) == {one} for g in self._gb)

    def contains_power(self, f: Polynomial, bound: int = POWER_PROBE):
        """Least ``k <= bound`` with ``f^k`` in ``I + J``, else None."""
        gb = self._gb
        amb = self.ring.ambient
        pw = amb.one()
        for k in range(1, bound + 1):
            pw = pw * f
            if not reduce_poly(pw.raw, gb, amb):
                return k
        return None

    def contained_in(self, other: "LocusDescription", bound: int = POWER_PROBE) -> bool:
        """``V(self) <= V(other)``: every generator of ``other`` has a power in ``self``'s ideal."""
        return all(self.contains_power(g, bound) is not None for g in other.defining_ideal if g)

    def equals(self, other: "LocusDescription", bound: int = POWER_PROBE) -> bool:
        return self.contained_in(other, bound) and other.contained_in(self, bound)

    def is_maximal_point(self, bound: int = POWER_PROBE) -> bool:
        """``V(J) = {m}``: nonempty and every variable has a power in ``I + J``."""
        if self.is_empty():
            return False
        return all(self.contains_power(v, bound) is not None for v in self.ring.gens())

    def describe(self) -> str:
        if self.is_empty():
            return "empty"
        if self.is_maximal_point():
            return "{m}"
        return "V(" + ", ".join(str(g) for g in self.defining_ideal) + ")"

    def to_json(self) -> dict:
        return {"kind": self.kind, "defining_ideal": [str(g) for g in self.defining_ideal],
                "description": self.describe(), "validity_flags": list(self.validity_flags),
                "radical_probe_bound": POWER_PROBE}


def maximal_point(ring: QuotientRing, kind: str) -> LocusDescription:
    return LocusDescription(ring, tuple(ring.gens()), kind)


def _determinant(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * _determinant(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def _cm_flag(ring) -> tuple:
    from .homalg import depth_of_ring
    from .structure import ring_dimension

    if depth_of_ring(ring) == ring_dimension(ring):
        return ()
    return ("ring not Cohen-Macaulay: equidimensionality unverified, Jacobian criterion may be wrong",)


def singular_locus(ring: QuotientRing, codim: int) -> LocusDescription:
    """``V(I + I_c(Jacobian))`` for the expected codimension ``c``."""
    amb = ring.ambient
    gens = [g for g in ring.ideal_generators if g]
    if not gens:
        return LocusDescription(ring, (amb.one(),), "singular", ())
    jac = [[g.derivative(v) for v in amb.variables] for g in gens]
    if codim < 1 or codim > min(len(gens), amb.nvars):
        raise ShapeError(f"codimension {codim} exceeds the {len(gens)}x{amb.nvars} Jacobian")
    minors = []
    for rows in combinations(range(len(gens)), codim):
        for cols in combinations(range(amb.nvars), codim):
            d = _determinant([[jac[r][c] for c in cols] for r in rows])
            d = ring.reduce(d)
            if d:
                minors.append(d)
    if not minors:
        minors = [amb.zero()]
    return LocusDescription(ring, tuple(minors), "singular", _cm_flag(ring))


def non_free_locus(M: FPModule) -> LocusDescription:
    """``V(ann Ext^1(M, Omega M))``."""
    from .homalg import ext
    from .resolutions import syzygy

    M = minimal_presentation(M)
    om = syzygy(M, 1)
    if om.ngens == 0:
        return LocusDescription(M.ring, (M.ring.ambient.one(),), "non_free")
    E = ext(M, om, 1).module
    ann = annihilator(E)
    return LocusDescription(M.ring, tuple(ann), "non_free")


def ipd_locus(M: FPModule, d: int) -> LocusDescription:
    """``NF(Omega^d M)``; meaningful for Cohen-Macaulay rings of dimension ``d``."""
    from .resolutions import syzygy

    flags = list(_cm_flag(M.ring))
    from .structure import ring_dimension

    if ring_dimension(M.ring) != d:
        flags.append(f"supplied dimension {d} differs from dim R = {ring_dimension(M.ring)}")
    nf = non_free_locus(syzygy(M, d))
    return LocusDescription(M.ring, nf.defining_ideal, "ipd", tuple(flags))
