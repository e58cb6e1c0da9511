"""Fixture round-trips and validation."""

import json

import pytest

from lscat.spaces import (
    BUILTIN_NAMES,
    FixtureError,
    SpacePresentation,
    builtin,
    validate,
)


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_round_trip(name):
    sp = builtin(name)
    again = SpacePresentation.loads(sp.dumps())
    assert again == sp
    assert again.dumps() == sp.dumps()


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_builtins_validate(name):
    assert validate(builtin(name)).ok


def test_unknown_builtin():
    with pytest.raises(FixtureError):
        builtin("nope")


def test_load_from_file(tmp_path):
    path = tmp_path / "spin9.json"
    path.write_text(builtin("spin9").dumps())
    sp = SpacePresentation.load(path)
    assert sp.name == "spin9"
    assert sp.algebra().total_dimension() == 32


def test_malformed_json():
    with pytest.raises(FixtureError):
        SpacePresentation.loads("{not json")
    with pytest.raises(FixtureError):
        SpacePresentation.loads("{}")
    with pytest.raises(FixtureError):
        SpacePresentation.loads(
            json.dumps({"name": "x", "degree_cap": 5, "cohomology": {}})
        )


def test_bad_height_rejected():
    data = builtin("spin9").to_dict()
    data["cohomology"]["generators"][0]["height"] = "three"
    with pytest.raises(FixtureError):
        SpacePresentation.from_dict(data)


def test_validate_catches_bad_steenrod():
    data = builtin("spin9").to_dict()
    # wrong target degree: Sq^2 x3 must land in degree 5
    data["steenrod"][0]["value"] = ["x7"]
    report = validate(SpacePresentation.from_dict(data))
    assert not report.ok


def test_validate_catches_unknown_permanent_cycle():
    data = builtin("spin9").to_dict()
    data["permanent_cycles"].append("x1_99")
    report = validate(SpacePresentation.from_dict(data))
    assert any("x1_99" in p for p in report.problems)


def test_validate_catches_non_free_loop_algebra():
    data = builtin("spin9").to_dict()
    data["loop_homology"]["generators"][0]["height"] = 3
    report = validate(SpacePresentation.from_dict(data))
    assert any("not free" in p for p in report.problems)


def test_validate_catches_bad_extra_square():
    data = builtin("spin9").to_dict()
    # Sq^4 x11 must land in degree 15
    data["extra_generators"][0]["steenrod"] = [{"k": 4, "value": ["x7"]}]
    report = validate(SpacePresentation.from_dict(data))
    assert any("Sq^4 x11" in p for p in report.problems)


def test_validate_conservation_preflight():
    data = builtin("toy-trunc-poly").to_dict()
    # drop the polynomial loop generator: E2 can no longer cover H^*
    data["loop_homology"]["generators"] = [
        g
        for g in data["loop_homology"]["generators"]
        if g["name"] == "u10"
    ]
    report = validate(SpacePresentation.from_dict(data))
    assert any("conservation" in p for p in report.problems)


def test_spin9_attestations_carry_rule():
    sp = builtin("spin9")
    rules = [a.rule for a in sp.attestations if a.rule]
    assert rules == [{"name": "bundle_upper_bound", "args": [5, 3]}]
