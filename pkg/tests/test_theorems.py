import pytest

from syzygy import fixtures
from syzygy.errors import PreconditionError
from syzygy.fpmod import FPModule, direct_sum
from syzygy.structure import SplitCertificate
from syzygy.theorems import (
    check_maximal_ideal_split,
    check_theorem_A,
    classify_theorem1,
    vanishing_scan,
    verify_lemma6,
    verify_syzygy_shift,
)


@pytest.mark.parametrize("ring, mod, I, J, expected, anchor", fixtures.CLASSIFICATION_CASES)
def test_classification_cases(doc, ring, mod, I, J, expected, anchor):
    R = doc.ring(ring)
    rep = classify_theorem1(R, doc.ideal(I), doc.ideal(J), doc.module(mod))
    assert rep.case_label == expected
    for c in rep.certificates.values():
        if isinstance(c, SplitCertificate):
            assert c.verify()


def test_depth_zero_factor_excludes_later_cases(doc):
    rep = classify_theorem1(doc.ring("R3"), ["x"], ["y"], doc.module("R3_Ry"))
    assert "cannot occur" in rep.ring_depth_note


def test_classification_report_is_reproducible(doc):
    R = doc.ring("R1")
    a = classify_theorem1(R, ["x"], ["y"], doc.module("R1_Rx"), seed=5).to_json()
    b = classify_theorem1(R, ["x"], ["y"], doc.module("R1_Rx"), seed=5).to_json()
    assert a == b


def test_classification_preconditions(doc):
    R1 = doc.ring("R1")
    with pytest.raises(PreconditionError):
        classify_theorem1(R1, ["x"], ["x"], doc.module("R1_Rx"))
    # R/m over k[x,y,t]/(xy) has pd >= 2 but m is not decomposable
    R4 = doc.ring("R4")
    with pytest.raises(PreconditionError):
        classify_theorem1(R4, ["x"], ["y"], doc.module("R4_k"))
    # free module: beta_2 = 0
    with pytest.raises(PreconditionError):
        classify_theorem1(R1, ["x"], ["y"], FPModule.free(R1))


def test_maximal_ideal_split_check(R1, R2):
    assert check_maximal_ideal_split(R1, ["x"], ["y"]).holds
    assert check_maximal_ideal_split(R2, ["y", "z"], ["x"]).holds
    s = check_maximal_ideal_split(R2, ["y"], ["x"])
    assert not s.sum_is_maximal and not s.holds


@pytest.mark.parametrize("ring", sorted(fixtures.INFINITE_PD_MODULES))
def test_maximal_ideal_splits_off_high_syzygies(doc, ring):
    R = doc.ring(ring)
    for name in fixtures.INFINITE_PD_MODULES[ring]:
        cert = check_theorem_A(R, doc.module(name))
        assert isinstance(cert, SplitCertificate) and cert.verify(), name


def test_splitting_needs_infinite_pd(R1, R4):
    with pytest.raises(PreconditionError, match="infinite projective dimension"):
        check_theorem_A(R1, FPModule.free(R1, 2))
    with pytest.raises(PreconditionError):
        check_theorem_A(R4, FPModule.residue_field(R4))


@pytest.mark.parametrize("ring, I", [("R1", ["x"]), ("R2", ["y", "z"]), ("R3", ["x"])])
def test_syzygy_over_quotient_residue_field(doc, ring, I):
    R = doc.ring(ring)
    rep = verify_lemma6(R, I, FPModule.residue_field(R))
    assert rep.betti_match and rep.holds


def test_syzygy_over_quotient_free_module(R1):
    # N = R/I itself: Omega_R N = I and Omega_{R/I} N = 0
    rep = verify_lemma6(R1, ["x"], FPModule.cyclic(R1, ["x"]))
    assert rep.holds and rep.extra["n"] == 1


def test_syzygy_over_quotient_requires_annihilation(R1):
    with pytest.raises(PreconditionError):
        verify_lemma6(R1, ["x"], FPModule.cyclic(R1, ["y"]))


def test_syzygy_shift_trivial_case(R4):
    M = FPModule.cyclic(R4, ["t", "x"])
    rep = verify_syzygy_shift(R4, [], M, 0, 0)
    assert rep.holds and rep.extra["v"] == 0


@pytest.mark.parametrize("t, u", [(1, 1), (2, 1), (1, 2), (0, 1)])
@pytest.mark.parametrize("gens", [["t", "x"], ["x", "y", "t"]])
def test_syzygy_shift(R4, gens, t, u):
    rep = verify_syzygy_shift(R4, ["t"], FPModule.cyclic(R4, gens), t, u)
    assert rep.holds


def test_syzygy_shift_preconditions(R1, R4):
    M = FPModule.cyclic(R4, ["t", "x"])
    with pytest.raises(PreconditionError, match="u >="):
        verify_syzygy_shift(R4, ["t"], M, 1, 0)
    with pytest.raises(PreconditionError):
        verify_syzygy_shift(R1, ["x"], FPModule.cyclic(R1, ["x"]), 1, 1)
    with pytest.raises(PreconditionError, match="annihilate"):
        verify_syzygy_shift(R4, ["t"], FPModule.cyclic(R4, ["x"]), 1, 1)


def test_tor_scan_over_fiber_product(R3):
    k = FPModule.residue_field(R3)
    rep = vanishing_scan(R3, k, k, "tor", range(1, 9))
    assert [rep.table[i] for i in range(5, 9)] == [13, 21, 34, 55]
    assert rep.violations == 0
    assert not any(m.fired for m in rep.monitors)


def test_tor_scan_with_free_argument_fires_consistently(R1):
    F = FPModule.free(R1)
    rep = vanishing_scan(R1, F, FPModule.residue_field(R1), "tor", range(1, 7))
    assert all(rep.table[i] == 0 for i in range(1, 7))
    fired = {m.name: m for m in rep.monitors if m.fired}
    assert fired and all(m.consistent is not False for m in fired.values())
    assert rep.violations == 0


def test_tor_scan_rigidity_monitor(R1):
    # m splits off Omega^0 m, Tor_l(m, F) = 0 and pd F = 0
    m = FPModule.maximal_ideal(R1)
    rep = vanishing_scan(R1, m, FPModule.free(R1), "tor", range(1, 4))
    mon = next(x for x in rep.monitors if x.name == "tor-rigidity")
    assert mon.fired and mon.consistent is True


def test_ext_scan(R1):
    k = FPModule.residue_field(R1)
    rep = vanishing_scan(R1, FPModule.cyclic(R1, ["x"]), k, "ext", range(0, 7))
    assert all(v > 0 for v in rep.table.values())
    assert rep.violations == 0


def test_quasi_decomposable_monitor(R4):
    M = FPModule.cyclic(R4, ["t"])
    N = direct_sum(FPModule.residue_field(R4))
    rep = vanishing_scan(R4, M, N, "tor", range(1, 9), regular_sequence=["t"])
    mon = next(x for x in rep.monitors if x.name == "tor-quasi-decomposable")
    assert mon.fired and mon.consistent is True and rep.violations == 0


def test_scan_rejects_unknown_functor(R1):
    with pytest.raises(ValueError):
        vanishing_scan(R1, FPModule.free(R1), FPModule.free(R1), "hom", range(2))
