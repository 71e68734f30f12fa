import pytest

from syzygy.errors import ShapeError
from syzygy.fpmod import FPModule
from syzygy.loci import ipd_locus, non_free_locus, singular_locus
from syzygy.resolutions import syzygy
from syzygy.ring import make_quotient_ring


def test_singular_locus_of_node(R1):
    L = singular_locus(R1, 1)
    assert L.describe() == "{m}" and L.is_maximal_point()


def test_smooth_ring_has_empty_singular_locus():
    assert singular_locus(make_quotient_ring("xy", generators=["x"]), 1).is_empty()


def test_singular_locus_of_weighted_ring(R5):
    assert singular_locus(R5, 2).is_maximal_point()


def test_codimension_too_large(R1):
    with pytest.raises(ShapeError):
        singular_locus(R1, 2)


def test_non_equidimensional_ring_is_flagged(R2):
    assert singular_locus(R2, 1).validity_flags


def test_non_free_loci(R1):
    assert non_free_locus(FPModule.free(R1, 2)).is_empty()
    assert non_free_locus(FPModule.cyclic(R1, ["x"])).describe() == "{m}"
    assert non_free_locus(FPModule.residue_field(R1)).describe() == "{m}"


def test_ipd_loci(R1, R4):
    assert ipd_locus(FPModule.free(R1), 1).is_empty()
    assert ipd_locus(FPModule.cyclic(R1, ["x"]), 1).describe() == "{m}"
    assert ipd_locus(FPModule.cyclic(R4, ["t"]), 2).is_empty()


def test_non_free_locus_of_non_maximal_prime(R4):
    # R/(x) over k[x,y,t]/(xy) is non-free along V(x, y), a line
    L = non_free_locus(FPModule.cyclic(R4, ["x"]))
    assert not L.is_empty() and not L.is_maximal_point()
    assert L.contains_power(R4.ambient("x")) and L.contains_power(R4.ambient("y"))
    assert L.contains_power(R4.ambient("t")) is None


@pytest.mark.parametrize("gens", [["x"], ["t", "x"], ["x", "y"]])
def test_ipd_inside_union_of_non_free_loci(R4, gens):
    M = FPModule.cyclic(R4, gens)
    ipd = ipd_locus(M, 2)
    # IPD(M) is contained in NF(M): wherever M is free it has finite pd
    assert ipd.contained_in(non_free_locus(M)) or ipd.is_empty()


def test_mcm_module_non_free_equals_ipd(R1):
    # over the 1-dimensional CM ring R1, the first syzygy of R/(x) is MCM
    M = syzygy(FPModule.cyclic(R1, ["x"]), 1)
    assert non_free_locus(M).equals(ipd_locus(M, 1))
