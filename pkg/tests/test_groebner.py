import pytest

from oracles import gb_is_complete
from syzygy.errors import RingMismatchError
from syzygy.fpmod import FPModule
from syzygy.groebner import ModuleVector, annihilator, buchberger, normal_form, syzygy_basis
from syzygy.ring import PolyRing


def test_monomial_ideal_is_its_own_basis():
    A = PolyRing("xy")
    gb = buchberger([A("x*y")], A)
    assert [str(v) for v in gb.elements] == ["(x*y)"]
    assert gb.satisfies_buchberger_criterion()


def test_weighted_determinantal_basis_matches_oracle(R5):
    A = R5.ambient
    gens = list(R5.ideal_generators)
    gb = buchberger(gens, A)
    assert gb.satisfies_buchberger_criterion()
    basis = [v.components[0] for v in gb.elements]
    assert gb_is_complete(A, gens, basis, 20)


def test_transpose_columns_basis(R2):
    A = R2.ambient
    cols = [ModuleVector.of([A("x"), A("0"), A("z")]), ModuleVector.of([A("0"), A("x"), A("-y")])]
    gb = buchberger(cols, R2)
    assert gb.satisfies_buchberger_criterion()
    for c in cols:
        assert normal_form(c, gb).is_zero()


def test_normal_form_examples():
    A = PolyRing("xyz")
    assert normal_form(A("x*y"), buchberger([A("x*y")], A)).is_zero()
    assert normal_form(A("x^2*y"), buchberger([A("x*y"), A("x*z")], A)).is_zero()
    assert str(normal_form(A("x^2+x*y"), buchberger([A("x*y")], A))) == "(x^2)"


def test_normal_form_is_projection(R2):
    A = R2.ambient
    gb = buchberger([A("y^2 - x*z"), A("z^3")], A)
    v = A("y^4 + z^2*y^2 + x^3*z")
    r = normal_form(v, gb).components[0]
    assert normal_form(r, gb).components[0] == r
    assert normal_form(v - r, gb).is_zero()


def test_normal_form_ring_mismatch():
    A, B = PolyRing("xy"), PolyRing("xyz")
    with pytest.raises(RingMismatchError):
        normal_form(B("x"), buchberger([A("x")], A))


def _apply(cols, s, ring):
    A = ring.ambient
    out = [A.zero() for _ in cols[0].components]
    for c, coeff in zip(cols, s.components):
        out = [o + coeff * e for o, e in zip(out, c.components)]
    return [ring.reduce(o) for o in out]


def test_syzygies_of_the_variables_over_node(R1):
    A = R1.ambient
    cols = [A("x"), A("y")]
    syz = syzygy_basis(cols, R1)
    assert sorted(str(s) for s in syz) == ["(0, x)", "(y, 0)"]
    cv = [ModuleVector.of([c]) for c in cols]
    assert all(all(f.is_zero() for f in _apply(cv, s, R1)) for s in syz)


def test_regular_element_has_no_syzygies():
    A = PolyRing("x")
    assert syzygy_basis([A("x")], A) == []


def test_annihilator_of_y_is_x(R2):
    syz = syzygy_basis([R2.ambient("y")], R2)
    assert [str(s) for s in syz] == ["(x)"]


def test_syzygy_chain_condition(R2):
    A = R2.ambient
    cols = [ModuleVector.of([A("y"), A("z")]), ModuleVector.of([A("x"), A("0")]),
            ModuleVector.of([A("0"), A("x")])]
    s1 = syzygy_basis(cols, R2)
    assert all(all(f.is_zero() for f in _apply(cols, s, R2)) for s in s1)
    s2 = syzygy_basis(s1, R2)
    assert all(all(f.is_zero() for f in _apply(s1, s, R2)) for s in s2)


def test_annihilators(R1, R2):
    assert [str(g) for g in annihilator(FPModule.cyclic(R1, ["x"]))] == ["x"]
    assert [str(g) for g in annihilator(FPModule.ideal(R2, ["y", "z"]))] == ["x"]
    assert annihilator(FPModule.free(R1)) == []
