"""Flat ``key=value`` scenario files.

Example::

    # silica slab, cooling towards 25 C
    surface_m2 = 0.01
    emissivity = 0.94
    heat_capacity_j_per_k = 30.974
    t_ambient_c = 20
    t_initial_c = 45
    t_equilibrium_c = 25
    source.kind = linear
    source.basis = kelvin
    source.eta1 = 9.407e-3
    source.eta0 = 1.318
    range_c = 0:100

Exactly one of ``h_w_per_m2k`` and ``t_equilibrium_c`` must be present;
``heat_capacity_j_per_k`` may be omitted or set to ``slab`` for a 2 mm silica
slab of the given surface.
"""

from __future__ import annotations

from .errors import InputError, ScenarioFileError
from .scenario import (
    ThermalScenario,
    celsius,
    passive_h,
    slab_heat_capacity,
)
from .sources import source_from_mapping

REQUIRED = ("surface_m2", "emissivity", "t_ambient_c", "t_initial_c",
            "source.kind", "source.basis")
OPTIONAL = ("heat_capacity_j_per_k", "h_w_per_m2k", "t_equilibrium_c", "range_c")


def parse_lines(lines, origin="<scenario>"):
    out = {}
    for n, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ScenarioFileError(f"{origin}:{n}: expected key=value, got {raw.strip()!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if key in out:
            raise ScenarioFileError(f"{origin}:{n}: duplicate key {key!r}")
        out[key] = value
    return out


def apply_overrides(mapping, overrides):
    """Apply ``key=value`` strings on top of ``mapping`` (new dict)."""
    out = dict(mapping)
    for item in overrides or ():
        if "=" not in item:
            raise ScenarioFileError(f"--set expects key=value, got {item!r}")
        key, value = (s.strip() for s in item.split("=", 1))
        if key == "h_w_per_m2k":
            out.pop("t_equilibrium_c", None)
        elif key == "t_equilibrium_c":
            out.pop("h_w_per_m2k", None)
        out[key] = value
    return out


def _number(mapping, key):
    try:
        return float(mapping[key])
    except ValueError:
        raise ScenarioFileError(f"{key} must be a number, got {mapping[key]!r}") from None


def scenario_from_mapping(mapping):
    """Build a :class:`ThermalScenario` (h resolved) from parsed key/values."""
    missing = [k for k in REQUIRED if k not in mapping]
    if missing:
        raise ScenarioFileError(f"missing keys: {', '.join(missing)}")
    has_h, has_te = "h_w_per_m2k" in mapping, "t_equilibrium_c" in mapping
    if has_h == has_te:
        raise ScenarioFileError("give exactly one of h_w_per_m2k and t_equilibrium_c")
    known = set(REQUIRED) | set(OPTIONAL)
    unknown = [k for k in mapping if k not in known and not k.startswith("source.")]
    if unknown:
        raise ScenarioFileError(f"unknown keys: {', '.join(sorted(unknown))}")

    params = {k[len("source."):]: v for k, v in mapping.items()
              if k.startswith("source.") and k not in ("source.kind", "source.basis")}
    source = source_from_mapping(mapping["source.kind"], params, mapping["source.basis"])
    surface = _number(mapping, "surface_m2")
    if mapping.get("heat_capacity_j_per_k", "slab") == "slab":
        heat_capacity = slab_heat_capacity(surface)
    else:
        heat_capacity = _number(mapping, "heat_capacity_j_per_k")
    kwargs = {}
    if "range_c" in mapping:
        try:
            lo, hi = (float(v) for v in mapping["range_c"].split(":"))
        except ValueError:
            raise ScenarioFileError(f"range_c must be lo:hi, got {mapping['range_c']!r}") from None
        kwargs["temp_range"] = (celsius(lo), celsius(hi))
    scn = ThermalScenario(
        surface=surface,
        emissivity=_number(mapping, "emissivity"),
        heat_capacity=heat_capacity,
        t_ambient=celsius(_number(mapping, "t_ambient_c")),
        t_initial=celsius(_number(mapping, "t_initial_c")),
        source=source,
        **kwargs,
    )
    if has_h:
        return scn.with_h(_number(mapping, "h_w_per_m2k"))
    return scn.with_h(passive_h(scn, celsius(_number(mapping, "t_equilibrium_c"))))


def load_scenario(path, overrides=()):
    try:
        with open(path, encoding="utf-8") as fh:
            mapping = parse_lines(fh, origin=str(path))
    except OSError as exc:
        raise ScenarioFileError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return scenario_from_mapping(apply_overrides(mapping, overrides))
    except ScenarioFileError:
        raise
    except InputError as exc:
        raise type(exc)(f"{path}: {exc}") from None
