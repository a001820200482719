"""End-to-end checks of the Python module against known small cases."""

import pytest

import assocfold


def test_version_and_seed():
    assert assocfold.__version__ == "1.0.0"
    assert assocfold.DEFAULT_SEED == 9001


def test_build_ambient():
    artifact = assocfold.build("A3")
    assert artifact["type"] == "A3"
    assert len(artifact["vertices"]) == 14
    assert len(artifact["facets"]) == 9
    assert len(artifact["edges"]) == 21
    # The origin vertex is listed with exact and decimal coordinates.
    first = artifact["vertices"][0]["coords"][0]
    assert first["coeffs"] == ["0"]
    assert artifact == assocfold.build("A3")


def test_fold_section():
    artifact = assocfold.fold("C2")
    assert artifact["type"] == "C2"
    assert artifact["source"] == "A3"
    assert len(artifact["vertices"]) == 6
    assert len(artifact["facets"]) == 6
    assert len(artifact["fan"]["rays"]) == 6
    assert len(artifact["fan"]["cones"]) == 6


def test_verify_report():
    report = assocfold.verify("H3")
    assert report["source"] == "D6"
    assert report["target"] == "H3"
    assert report["pass"] is True
    assert len(report["checks"]) == 10
    assert all(check["pass"] for check in report["checks"])


def test_list_types():
    types = assocfold.list_types()
    by_name = {entry["type"]: entry for entry in types}
    assert by_name["A3"]["vertices"] == "14"
    assert by_name["H4"]["folded_from"] == "E8"
    assert by_name["E8"]["coxeter_number"] == 30


def test_off_model():
    assert assocfold.off("A3").startswith("OFF\n14 9 21\n")


def test_knit_grid():
    grid = assocfold.knit_grid("A3")
    assert "t11 + t21 = t12 + c11" in grid


def test_invalid_type():
    with pytest.raises(ValueError):
        assocfold.build("Z9")
    with pytest.raises(ValueError):
        assocfold.fold("A3")  # nothing folds onto a simply-laced type
