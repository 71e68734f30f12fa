import random

import pytest

from syzygy import fixtures
from syzygy.fpmod import FPModule, direct_sum, minimal_presentation
from syzygy.resolutions import (
    betti_numbers,
    free_resolution,
    koszul_complex,
    syzygy,
    truncated_linear_resolution,
)
from syzygy.ring import make_quotient_ring
from syzygy.structure import is_isomorphic


def test_free_module_resolution(R1):
    res = free_resolution(FPModule.free(R1, 3), 4)
    assert res.betti == [3, 0, 0, 0, 0]
    assert res.projective_dimension == 0


def test_displayed_betti_numbers(R2):
    assert betti_numbers(FPModule.cyclic(R2, ["y"]), 5) == [1, 1, 1, 2, 3, 5]


def test_residue_field_over_node(R1):
    assert betti_numbers(FPModule.residue_field(R1), 6) == [1, 2, 2, 2, 2, 2, 2]


def test_resolution_cache_extends_prefix(R2):
    M = FPModule.cyclic(R2, ["y"])
    short = free_resolution(M, 2)
    long = free_resolution(M, 5)
    assert long.differentials[:2] == short.differentials


def test_first_syzygy_alternates(R1):
    M = FPModule.cyclic(R1, ["x"])
    assert is_isomorphic(syzygy(M, 1), FPModule.cyclic(R1, ["y"])).status == "proved-yes"


def test_third_syzygy_over_R3(R3):
    om = syzygy(FPModule.cyclic(R3, ["y"]), 3)
    assert is_isomorphic(om, FPModule.maximal_ideal(R3)).status == "proved-yes"
    target = direct_sum(FPModule.residue_field(R3), FPModule.cyclic(R3, ["x"]))
    assert is_isomorphic(om, target).status == "proved-yes"


def test_fifth_syzygy_over_R2(R2):
    om = syzygy(FPModule.cyclic(R2, ["y"]), 5)
    assert om.ngens == 5
    I = FPModule.ideal(R2, ["y", "z"])
    J = FPModule.ideal(R2, ["x"])
    assert is_isomorphic(om, direct_sum(I, I, J)).status == "proved-yes"


def test_syzygy_zero_is_minimal_presentation(R1):
    M = FPModule.from_matrix(R1, [["1", "0"], ["0", "x"]], [0, 0])
    assert syzygy(M, 0).ngens == 1


def test_koszul_regular_element(R4):
    K = koszul_complex(["t"], FPModule.free(R4))
    assert K.check_complex()
    assert K.homology(1).ngens == 0
    assert is_isomorphic(K.homology(0), FPModule.cyclic(R4, ["t"])).status == "proved-yes"


def test_koszul_zero_divisor(R1):
    K = koszul_complex(["x"], FPModule.free(R1))
    H1 = K.homology(1)
    assert H1.ngens == 1
    assert is_isomorphic(H1, FPModule.cyclic(R1, ["x"])).status == "proved-yes"  # (y) = R/(x)


def test_koszul_polynomial_ring():
    A = make_quotient_ring("xy")
    K = koszul_complex(["x", "y"], FPModule.free(A))
    assert K.check_complex()
    assert [m.ngens for m in K.modules] == [1, 2, 1]
    assert K.homology(1).ngens == 0 and K.homology(2).ngens == 0
    assert K.homology(0).hilbert_values(4) == [1, 0, 0, 0, 0]


def test_oracle_examples(R1, R2):
    assert truncated_linear_resolution(FPModule.free(R1, 2), 3, 8) == [{0: 2}, {}, {}, {}]
    t = truncated_linear_resolution(FPModule.residue_field(R1), 6, 8)
    assert [sum(r.values()) for r in t] == [1, 2, 2, 2, 2, 2, 2]
    t = truncated_linear_resolution(FPModule.cyclic(R2, ["y"]), 5, 8)
    assert [sum(r.values()) for r in t] == [1, 1, 1, 2, 3, 5]


@pytest.mark.parametrize("seed", range(6))
def test_oracle_agrees_on_random_modules(doc, seed):
    rng = random.Random(seed)
    R = doc.ring(["R1", "R2", "R3"][seed % 3])
    M = fixtures.random_module(R, rng)
    mine = [{d: c for d, c in row.items() if d <= 7} for row in free_resolution(M, 4).graded_betti]
    assert truncated_linear_resolution(M, 4, 7) == mine


@pytest.mark.parametrize("name", ["R1_Rx", "R1_k", "R2_Ry", "R2_TrI", "R3_k", "R4_Rtx", "R5_k"])
def test_complex_and_minimal(doc, name):
    res = free_resolution(doc.module(name), 5)
    assert res.check_complex()
    assert res.check_minimal()


def test_syzygy_additivity(R2):
    A, B = FPModule.cyclic(R2, ["y"]), FPModule.residue_field(R2)
    for i in range(1, 4):
        lhs = free_resolution(syzygy(direct_sum(A, B), i), 3).graded_betti
        rhs = free_resolution(direct_sum(syzygy(A, i), syzygy(B, i)), 3).graded_betti
        assert lhs[1:] == rhs[1:]


def test_betti_equals_nu_of_syzygy(R2):
    M = FPModule.cyclic(R2, ["y"])
    b = betti_numbers(M, 5)
    assert [minimal_presentation(syzygy(M, i)).ngens for i in range(6)] == b


def test_negative_length_rejected(R1):
    with pytest.raises(ValueError):
        free_resolution(FPModule.free(R1), -1)
