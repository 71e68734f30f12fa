import pytest

from syzygy.battery import CHECKS, perturbed_text, run_battery, select


def test_every_criterion_has_a_check():
    assert sorted({c.criterion for c in CHECKS}) == list(range(1, 12))
    assert all(c.anchor for c in CHECKS)


def test_select_by_id_or_number():
    assert [c.id for c in select(["betti-r2", "5"])] == ["betti-r2", "ext-r2"]
    with pytest.raises(ValueError):
        select(["nope"])


def test_subset_run_records_seed_and_timing():
    res = run_battery({"only": ["1", "5"], "seed": 3})
    assert res.passed and res.seed == 3
    assert all(c.seed == 3 and c.elapsed_ms >= 0 for c in res.checks)
    assert res.to_json()["checks"][0]["id"] == "betti-r2"


def test_perturbed_fixture_breaks_only_its_check():
    res = run_battery({"only": ["betti-r2", "ext-r2", "alternation-r1"], "perturb": {"R2_Ry": "[[y, z]]"}})
    status = {c.id: c.status for c in res.checks}
    assert status == {"betti-r2": "fail", "alternation-r1": "pass", "ext-r2": "pass"}
    assert not res.passed


def test_unknown_perturbation_rejected():
    with pytest.raises(ValueError):
        perturbed_text({"NOPE": "[[x]]"})


def test_other_fields():
    assert run_battery({"only": ["1", "2", "5"], "field": "GF(101)"}).passed
    assert run_battery({"field": "QQ"}).passed


def test_parallel_matches_sequential():
    cfg = {"only": ["1", "2", "8"]}
    seq = run_battery(cfg)
    par = run_battery({**cfg, "workers": 2})
    assert [(c.id, c.status) for c in seq.checks] == [(c.id, c.status) for c in par.checks]
