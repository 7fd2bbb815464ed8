import pytest

from shelfhom.errors import CapExceeded
from shelfhom.families import BooleanMultiShelf, construct_family
from shelfhom.scans import (
    is_pointed_map_type,
    pointed_map_shelves,
    scan_boolean,
    scan_example4,
    scan_growth,
    scan_hyperplane,
    torsion_hunt,
)
from shelfhom.tables import (
    BinaryOpTable,
    identity_op,
    right_trivial_op,
    validate_multishelf,
)


def test_growth_small_sizes_consistent():
    for n in (1, 2):
        report = scan_growth(n, maxdeg=3)
        assert report.summary["all_consistent"]
        assert report.summary["inconsistent"] == 0


def test_growth_report_structure():
    report = scan_growth(2, maxdeg=3)
    doc = report.to_doc()
    assert doc["conjecture"] == "growth"
    assert all(
        p["verdict"] in ("consistent", "inconsistent", "not-computed")
        for p in doc["points"]
    )
    # degree window starts at size - 2
    assert min(p["params"]["degree"] for p in doc["points"]) == 0


def test_growth_size_guard():
    with pytest.raises(CapExceeded):
        scan_growth(5)


def test_pointed_map_shelves_include_right_trivial():
    shelves = pointed_map_shelves(3)
    tables = {s.table for s in shelves}
    assert right_trivial_op(3) in tables  # the g = id instance
    for s in shelves:
        assert is_pointed_map_type(s.table)


def test_pointed_map_type_detection():
    assert is_pointed_map_type(right_trivial_op(4))
    assert not is_pointed_map_type(identity_op(4))
    pm = BinaryOpTable.from_rows(
        [[0, 2, 3, 1], [0, 1, 2, 3], [0, 1, 2, 3], [0, 1, 2, 3]]
    )
    assert is_pointed_map_type(pm)


def test_example4_proven_degree_one():
    report = scan_example4(4, maxdeg=1)
    assert report.summary["all_consistent"]
    assert all(p.params["degree"] == 1 for p in report.points)


def test_boolean_grid_verdicts():
    report = scan_boolean(1, radius=1, maxdeg=2)
    assert report.summary["points"] == 27
    by_coeffs = {tuple(p.params["coefficients"]): p for p in report.points}
    zero = by_coeffs[(0, 0, 0)]
    assert zero.observed["ranks"] == [1, 4, 8]
    ray = by_coeffs[(1, -1, -1)]
    assert ray.observed["ranks"][0] == 1
    assert ray.verdict == "consistent"


def test_boolean_cap():
    with pytest.raises(CapExceeded):
        scan_boolean(3)


def test_hyperplane_probe_deterministic():
    ms = validate_multishelf(construct_family(BooleanMultiShelf(1)).ops[:3])
    a = scan_hyperplane(ms, samples=15, bound=2, maxdeg=1, seed=5)
    b = scan_hyperplane(ms, samples=15, bound=2, maxdeg=1, seed=5)
    assert a.to_doc() == b.to_doc()
    assert a.summary["generic_ranks"] is not None
    assert 0.0 <= a.summary["exceptional_fraction"] <= 1.0


def test_hyperplane_sample_cap():
    ms = validate_multishelf((identity_op(2),))
    with pytest.raises(CapExceeded):
        scan_hyperplane(ms, samples=500)


def test_torsion_hunt_small_sizes_empty():
    assert torsion_hunt(1, 1).summary["classes_with_torsion"] == 0
    report = torsion_hunt(2, 2)
    assert report.summary["classes_with_torsion"] == 0
    assert report.summary["classes_scanned"] == 6


def test_torsion_hunt_points_flag_pointed_map():
    report = torsion_hunt(4, 1)
    assert report.summary["classes_with_torsion"] >= 1
    # at least one find has the pointed-map shape, as in the cited examples
    assert any(p.observed["pointed_map_type"] for p in report.points)


def test_jobs_fan_out_matches_sequential():
    seq = scan_growth(2, maxdeg=3, jobs=1)
    par = scan_growth(2, maxdeg=3, jobs=2)
    assert seq.to_doc() == par.to_doc()


def test_growth_records_quotient_h1_comparison():
    # rank H1(X) vs rank H1 of the orbit quotient: the "greater" direction
    # (non-injectivity of the induced map) has witnesses already at n = 3;
    # no class with n <= 4 realizes the "less" direction
    report = scan_growth(3, maxdeg=2)
    cmp = report.summary["quotient_h1_comparison"]
    assert cmp["greater"] >= 1
    assert cmp["less"] == 0
    assert cmp["greater"] + cmp["equal"] + cmp["less"] == 48
    assert "greater" in report.summary["quotient_h1_witnesses"]
