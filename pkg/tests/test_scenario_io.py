from pathlib import Path

import pytest

from radcool.errors import InputError, ScenarioFileError
from radcool.scenario import celsius, slab_heat_capacity
from radcool.scenario_io import apply_overrides, load_scenario, parse_lines, scenario_from_mapping
from radcool.sources import Exponential, Linear

SCENARIOS = Path(__file__).resolve().parent.parent / "scenarios"

BASE = {
    "surface_m2": "0.01",
    "emissivity": "0.94",
    "t_ambient_c": "20",
    "t_initial_c": "45",
    "h_w_per_m2k": "76.939",
    "source.kind": "linear",
    "source.basis": "kelvin",
    "source.eta1": "9.407e-3",
    "source.eta0": "1.318",
}


def test_shipped_cooling_file():
    scn = load_scenario(SCENARIOS / "slab_cooling.scn")
    assert scn.h == pytest.approx(76.939, rel=1e-3)
    assert scn.t_initial == celsius(45.0)
    assert isinstance(scn.source, Linear)
    assert scn.temp_range == (celsius(0.0), celsius(100.0))


def test_shipped_exponential_file():
    scn = load_scenario(SCENARIOS / "soc_full_speed_heating.scn")
    assert isinstance(scn.source, Exponential)


def test_comments_and_blank_lines_ignored():
    out = parse_lines(["# header", "", "a = 1  # trailing", "  b=two "])
    assert out == {"a": "1", "b": "two"}


@pytest.mark.parametrize("lines", [["no equals sign"], ["a=1", "a=2"]])
def test_malformed_lines(lines):
    with pytest.raises(ScenarioFileError):
        parse_lines(lines)


def test_heat_capacity_defaults_to_slab():
    assert scenario_from_mapping(BASE).heat_capacity == slab_heat_capacity(0.01)


def test_equilibrium_key_resolves_h():
    m = dict(BASE)
    del m["h_w_per_m2k"]
    m["t_equilibrium_c"] = "25"
    assert scenario_from_mapping(m).h == pytest.approx(76.939, rel=1e-3)


def test_override_swaps_h_for_equilibrium():
    m = apply_overrides(BASE, ["t_equilibrium_c=45", "t_initial_c=25"])
    assert "h_w_per_m2k" not in m
    assert scenario_from_mapping(m).h == pytest.approx(11.144, rel=1e-3)
    back = apply_overrides(m, ["h_w_per_m2k=10"])
    assert "t_equilibrium_c" not in back


@pytest.mark.parametrize("edit", [
    lambda m: m.pop("emissivity"),
    lambda m: m.update(t_equilibrium_c="25"),
    lambda m: m.pop("h_w_per_m2k"),
    lambda m: m.update(colour="blue"),
    lambda m: m.update(surface_m2="big"),
    lambda m: m.update(range_c="0-100"),
])
def test_invalid_mappings(edit):
    m = dict(BASE)
    edit(m)
    with pytest.raises(ScenarioFileError):
        scenario_from_mapping(m)


def test_bad_override_syntax():
    with pytest.raises(ScenarioFileError):
        apply_overrides(BASE, ["emissivity"])


def test_missing_file(tmp_path):
    with pytest.raises(ScenarioFileError):
        load_scenario(tmp_path / "absent.scn")


def test_domain_errors_name_the_file(tmp_path):
    path = tmp_path / "bad.scn"
    path.write_text("\n".join(f"{k}={v}" for k, v in {**BASE, "emissivity": "1.5"}.items()))
    with pytest.raises(InputError, match="bad.scn"):
        load_scenario(path)


def test_slab_keyword_follows_surface():
    m = apply_overrides(BASE, ["heat_capacity_j_per_k=500", "surface_m2=0.001",
                               "heat_capacity_j_per_k=slab"])
    assert scenario_from_mapping(m).heat_capacity == slab_heat_capacity(0.001)
