"""Syzygies over graded quotient rings: Groebner bases, finitely presented
modules, minimal free resolutions, Ext/Tor, decompositions and certificates
for direct-summand relations."""

from .errors import (
    DegenerateRingError,
    HomogeneityError,
    NotAComplexError,
    ParseError,
    PreconditionError,
    RingMismatchError,
    ShapeError,
    SyzygyError,
    TrivialFactorError,
    UnsupportedGradingError,
    ZeroModuleError,
)
from .fpmod import FPMap, FPModule, auslander_transpose, direct_sum, hilbert, minimal_presentation, twist
from .homalg import bass_numbers, depth, ext, is_regular_sequence, projective_dimension, tor
from .resolutions import betti_numbers, free_resolution, graded_betti, koszul_complex, syzygy
from .ring import Field, PolyRing, QuotientRing, make_quotient_ring
from .structure import decompose, decompose_maximal_ideal, fiber_product, is_isomorphic, split_summand

__version__ = "0.1.0"
