import pytest

from syzygy.errors import HomogeneityError, TrivialFactorError, UnsupportedGradingError, ZeroModuleError
from syzygy.fpmod import FPModule, direct_sum, twist
from syzygy.homalg import depth_of_ring
from syzygy.resolutions import syzygy
from syzygy.ring import make_quotient_ring
from syzygy.structure import (
    DecompositionCertificate,
    SplitCertificate,
    decompose,
    decompose_maximal_ideal,
    determinantal_ideal_2x2,
    fiber_product,
    is_dvr,
    is_isomorphic,
    minimal_multiplicity,
    quasi_decomposable,
    split_summand,
)


def _gb(R):
    return sorted(map(str, R.reduced_gb))


@pytest.mark.parametrize("s, t, expected", [
    (("x", []), ("y", []), ["x*y"]),
    (("x", []), ("yz", []), ["x*y", "x*z"]),
    (("x", ["x^2"]), ("y", []), ["x*y", "x^2"]),
])
def test_fiber_products(s, t, expected):
    S = make_quotient_ring(s[0], generators=s[1])
    T = make_quotient_ring(t[0], generators=t[1])
    R = fiber_product(S, T)
    assert _gb(R) == sorted(expected)
    assert R.decomposition.verify()
    assert depth_of_ring(R) == min(depth_of_ring(S), depth_of_ring(T), 1)


def test_fiber_product_with_field_rejected():
    with pytest.raises(TrivialFactorError):
        fiber_product(make_quotient_ring("x", generators=["x"]), make_quotient_ring("y"))


def test_determinantal_ideals():
    from syzygy.ring import PolyRing

    A = PolyRing("xy")
    assert [str(g) for g in determinantal_ideal_2x2([[A("x"), A("y")], [A("y"), A("x")]])] == ["x^2 - y^2"]
    assert [str(g) for g in determinantal_ideal_2x2([[A("x"), A("0")], [A("0"), A("y")]])] == ["x*y"]
    W = PolyRing("xyz", (4, 5, 3))
    minors = determinantal_ideal_2x2([[W("x"), W("y"), W("z")], [W("y"), W("z^2"), W("x")]])
    gens = {str(g) for g in minors} | {str(-g) for g in minors}
    assert {"x*z^2 - y^2", "x^2 - y*z", "x*y - z^3"} <= gens or \
        {"-y^2 + x*z^2", "x^2 - y*z", "x*y - z^3"} <= gens
    with pytest.raises(HomogeneityError):
        determinantal_ideal_2x2([[A("x"), A("y^2")], [A("y"), A("x")]])


def test_split_free_summand(R1):
    M = FPModule.cyclic(R1, ["x"])
    cert = split_summand(FPModule.free(R1), direct_sum(FPModule.free(R1), M))
    assert isinstance(cert, SplitCertificate) and cert.verify()


def test_split_maximal_ideal_off_consecutive_syzygies(R1):
    M = FPModule.cyclic(R1, ["x"])
    cert = split_summand(FPModule.maximal_ideal(R1), direct_sum(syzygy(M, 3), syzygy(M, 4)))
    assert isinstance(cert, SplitCertificate) and cert.verify()
    assert cert.seed is not None and cert.trials_used >= 1


def test_split_disproved_by_generator_count(R2):
    rep = split_summand(FPModule.maximal_ideal(R2), syzygy(FPModule.cyclic(R2, ["y"]), 3))
    assert not rep and rep.status == "proved-no"
    assert any("nu" in o or "generators" in o for o in rep.obstructions)


def test_split_is_deterministic_given_seed(R1):
    M = FPModule.cyclic(R1, ["x"])
    N = direct_sum(syzygy(M, 3), syzygy(M, 4))
    a = split_summand(FPModule.maximal_ideal(R1), N, 16, 99).to_json()
    b = split_summand(FPModule.maximal_ideal(R1), N, 16, 99).to_json()
    assert a == b


def test_decompose_maximal_ideal_of_node(R1):
    cert = decompose(FPModule.maximal_ideal(R1))
    assert isinstance(cert, DecompositionCertificate) and cert.verify()
    assert {cert.A.ngens, cert.B.ngens} == {1}
    # reassembling the summands gives back m
    assert split_summand(FPModule.maximal_ideal(R1), direct_sum(cert.A, cert.B)).status == "proved-yes"


def test_decompose_ring_is_indecomposable(R1):
    rep = decompose(FPModule.free(R1))
    assert not rep and rep.proved


def test_decompose_maximal_ideal_depth_two(R4):
    rep = decompose_maximal_ideal(R4)
    assert rep.proved and "depth" in rep.reason


def test_decompose_zero_module(R1):
    with pytest.raises(ZeroModuleError):
        decompose(FPModule.zero(R1))


def test_decompose_direct_sum_by_idempotent(R3):
    M = direct_sum(FPModule.residue_field(R3), FPModule.cyclic(R3, ["x"]))
    cert = decompose(M)
    assert isinstance(cert, DecompositionCertificate) and cert.verify()


def test_isomorphism_examples(R1):
    M = FPModule.cyclic(R1, ["x"])
    assert is_isomorphic(M, M).status == "proved-yes"
    assert is_isomorphic(syzygy(M, 2), M).status == "proved-yes"
    rep = is_isomorphic(M, FPModule.cyclic(R1, ["y"]))
    assert rep.status == "proved-no"


def test_isomorphism_up_to_shift(R1):
    M = FPModule.cyclic(R1, ["x"])
    assert is_isomorphic(twist(M, 3), M).status == "proved-yes"


def test_dvr_predicate():
    assert is_dvr(make_quotient_ring("x"))
    assert not is_dvr(make_quotient_ring("yz"))
    assert not is_dvr(make_quotient_ring("x", generators=["x^2"]))


def test_minimal_multiplicity(R1, R2, R5):
    r = minimal_multiplicity(R1)
    assert (r.e, r.edim, r.dim, r.holds) == (2, 2, 1, True)
    assert minimal_multiplicity(make_quotient_ring("x")).holds
    r2 = minimal_multiplicity(R2)
    assert r2.dim == 2 and r2.edim == 3 and r2.flag
    with pytest.raises(UnsupportedGradingError):
        minimal_multiplicity(R5)


def test_quasi_decomposable_examples(R1, R4, R5):
    q = quasi_decomposable(R1, [])
    assert q.holds
    q = quasi_decomposable(R4, ["t"])
    assert q.holds and _gb(q.quotient) == ["t", "x*y"]
    q = quasi_decomposable(R5, ["z"])
    assert q.holds
    assert _gb(q.quotient) == sorted(["z", "x^2", "x*y", "y^2"])
    assert {q.certificate.A.ngens, q.certificate.B.ngens} == {1}


def test_quasi_decomposable_rejects_zero_divisor(R1):
    q = quasi_decomposable(R1, ["x"])
    assert not q.holds and not q.regular


@pytest.mark.parametrize("ring, I, J", [("R1", ["x"], ["y"]), ("R2", ["y", "z"], ["x"]), ("R3", ["x"], ["y"])])
def test_dvr_versus_isomorphism(doc, ring, I, J):
    # R/I a DVR => R/I = J; J free over R/I => R/I a DVR
    from syzygy.theorems import is_free_over_quotient

    R = doc.ring(ring)
    RI = R.quotient([R.ambient(g) for g in I])
    Jmod = FPModule.ideal(R, J)
    if is_dvr(RI):
        assert is_isomorphic(FPModule.cyclic(R, I), Jmod).status == "proved-yes"
    if is_free_over_quotient(Jmod, RI, [R.ambient(g) for g in I])["free"]:
        assert is_dvr(RI)


def test_decompose_over_rationals():
    from syzygy import fixtures

    doc = fixtures.document("QQ")
    R = doc.ring("R3")
    cert = decompose(direct_sum(FPModule.residue_field(R), FPModule.cyclic(R, ["x"])))
    assert isinstance(cert, DecompositionCertificate) and cert.verify()
    assert decompose(FPModule.maximal_ideal(doc.ring("R1"))).verify()
