"""Scenario files: schema validation and construction of Scenario objects.

The on-disk format is one JSON document carrying the entire experiment, with
units spelled out in key names and a mandatory schema_version. Unknown keys
are rejected so a typo cannot silently fall back to a default, and validation
reports every violation it finds rather than stopping at the first.
"""

from __future__ import annotations

import json

from .fronthaul import FronthaulSpec
from .linkbudget import RadioConfig, ThroughputTarget
from .power import ArchitectureKind, PowerModel
from .propagation import AtmosphereSpec, CarrierSpec
from .scenario import DistanceRange, Scenario

SCHEMA_VERSION = 1


class ConfigError(ValueError):
    """A scenario document failed to parse or validate."""

    def __init__(self, diagnostics: list[str]):
        super().__init__("; ".join(diagnostics))
        self.diagnostics = list(diagnostics)


# field name -> (predicate, requirement text, integer?, optional?)
_NUMBER = lambda v: isinstance(v, (int, float)) and not isinstance(v, bool)  # noqa: E731

_RADIO_FIELDS = {
    "bandwidth_hz": (lambda v: v > 0, "must be > 0", False, False),
    "tx_power_per_chain_dbm": (lambda v: True, "", False, False),
    "element_gain_dbi": (lambda v: True, "", False, False),
    "rx_gain_dbi": (lambda v: True, "", False, False),
    "noise_figure_db": (lambda v: v >= 0, "must be >= 0", False, False),
    "implementation_loss_db": (lambda v: v >= 0, "must be >= 0", False, False),
}

_POWER_FIELDS = {
    "fixed_w": (lambda v: v >= 0, "must be >= 0", False, False),
    "per_chain_w": (lambda v: v >= 0, "must be >= 0", False, False),
    "pa_efficiency": (lambda v: 0 < v <= 1, "must be in (0, 1]", False, False),
    "compute_w_per_gbps": (lambda v: v >= 0, "must be >= 0", False, False),
    "payload_mass_kg": (lambda v: v > 0, "must be > 0", False, True),
}

_FRONTHAUL_FIELDS = {
    "sample_width_bits": (lambda v: v >= 1, "must be an integer >= 1", True, False),
    "oversampling": (lambda v: v >= 1, "must be >= 1", False, False),
    "antenna_ports": (lambda v: v >= 1, "must be an integer >= 1", True, False),
    "overhead_factor": (lambda v: v >= 0, "must be >= 0", False, False),
}

_SWEEP_FIELDS = {
    "start": (lambda v: v > 0, "must be > 0", False, False),
    "stop": (lambda v: v > 0, "must be > 0", False, False),
    "step": (lambda v: v > 0, "must be > 0", False, False),
}

_CARRIER_FIELDS = {
    "frequency_ghz": (lambda v: v > 0, "must be > 0", False, False),
}

_ATMOSPHERE_FIELDS = {
    "dry_air_db_per_km": (lambda v: v >= 0, "must be >= 0", False, False),
    "water_vapor_db_per_km": (lambda v: v >= 0, "must be >= 0", False, False),
}

_TOP_SCALAR_FIELDS = {
    "uav_altitude_m": (lambda v: v >= 0, "must be >= 0", False, False),
    "access_target_bps": (lambda v: v > 0, "must be > 0", False, False),
    "access_distance_km": (lambda v: v > 0, "must be > 0", False, False),
    "backhaul_protocol_overhead": (lambda v: v >= 0, "must be >= 0", False, False),
    "max_elements": (lambda v: v >= 1, "must be an integer >= 1", True, False),
    "feasibility_margin_db": (lambda v: v >= 0, "must be >= 0", False, False),
}

_SECTION_FIELDS = {
    "carrier": _CARRIER_FIELDS,
    "atmosphere": _ATMOSPHERE_FIELDS,
    "distance_sweep_km": _SWEEP_FIELDS,
    "access_radio": _RADIO_FIELDS,
    "transport_radio": _RADIO_FIELDS,
    "fronthaul": _FRONTHAUL_FIELDS,
}

_POWER_MODEL_KEYS = ("fly-bs", "fly-rrh")

_TOP_LEVEL_KEYS = (
    {"schema_version", "power_models"}
    | set(_TOP_SCALAR_FIELDS)
    | set(_SECTION_FIELDS)
)


def _check_fields(diags: list[str], obj: dict, path: str, fields: dict) -> None:
    for key, (predicate, requirement, integer, optional) in fields.items():
        full = f"{path}.{key}" if path else key
        if key not in obj:
            if not optional:
                diags.append(f"missing required key: {full}")
            continue
        value = obj[key]
        if not _NUMBER(value):
            diags.append(f"{full}: must be a number")
            continue
        if integer and not isinstance(value, int):
            diags.append(f"{full}: {requirement}")
            continue
        if not predicate(value):
            diags.append(f"{full}: {requirement}")
    for key in obj:
        if key not in fields:
            diags.append(f"unknown key: {path}.{key}" if path else f"unknown key: {key}")


def _check_section(diags: list[str], doc: dict, name: str, fields: dict) -> None:
    if name not in doc:
        diags.append(f"missing required key: {name}")
        return
    section = doc[name]
    if not isinstance(section, dict):
        diags.append(f"{name}: must be an object")
        return
    _check_fields(diags, section, name, fields)


def validate_scenario_dict(doc) -> list[str]:
    """Every schema violation in the document, as human-readable diagnostics."""
    if not isinstance(doc, dict):
        return ["scenario must be a JSON object"]
    diags: list[str] = []

    if "schema_version" not in doc:
        diags.append("missing required key: schema_version")
    elif doc["schema_version"] != SCHEMA_VERSION:
        diags.append(
            f"schema_version: unsupported version {doc['schema_version']!r}"
            f" (expected {SCHEMA_VERSION})"
        )

    for key in doc:
        if key not in _TOP_LEVEL_KEYS:
            diags.append(f"unknown key: {key}")

    for name, fields in _SECTION_FIELDS.items():
        _check_section(diags, doc, name, fields)

    for key, spec in _TOP_SCALAR_FIELDS.items():
        _check_fields(diags, {key: doc[key]} if key in doc else {}, "", {key: spec})

    if "power_models" not in doc:
        diags.append("missing required key: power_models")
    elif not isinstance(doc["power_models"], dict):
        diags.append("power_models: must be an object")
    else:
        models = doc["power_models"]
        for arch_key in _POWER_MODEL_KEYS:
            if arch_key not in models:
                diags.append(f"missing required key: power_models.{arch_key}")
            elif not isinstance(models[arch_key], dict):
                diags.append(f"power_models.{arch_key}: must be an object")
            else:
                _check_fields(
                    diags, models[arch_key], f"power_models.{arch_key}", _POWER_FIELDS
                )
        for arch_key in models:
            if arch_key not in _POWER_MODEL_KEYS:
                diags.append(f"unknown key: power_models.{arch_key}")

    sweep = doc.get("distance_sweep_km")
    if isinstance(sweep, dict):
        start, stop = sweep.get("start"), sweep.get("stop")
        if _NUMBER(start) and _NUMBER(stop) and stop < start:
            diags.append("distance_sweep_km.stop: must be >= start")

    return diags


def scenario_from_dict(doc: dict) -> Scenario:
    """Build a Scenario from an already-validated document."""

    def radio(section: dict) -> RadioConfig:
        return RadioConfig(
            bandwidth_hz=section["bandwidth_hz"],
            tx_power_per_chain_dbm=section["tx_power_per_chain_dbm"],
            element_gain_dbi=section["element_gain_dbi"],
            rx_gain_dbi=section["rx_gain_dbi"],
            noise_figure_db=section["noise_figure_db"],
            implementation_loss_db=section["implementation_loss_db"],
        )

    def power_model(section: dict) -> PowerModel:
        return PowerModel(
            fixed_power_w=section["fixed_w"],
            per_chain_power_w=section["per_chain_w"],
            pa_efficiency=section["pa_efficiency"],
            compute_w_per_gbps=section["compute_w_per_gbps"],
            payload_mass_kg=section.get("payload_mass_kg"),
        )

    sweep = doc["distance_sweep_km"]
    fh = doc["fronthaul"]
    return Scenario(
        carrier=CarrierSpec(frequency_ghz=doc["carrier"]["frequency_ghz"]),
        atmosphere=AtmosphereSpec(
            dry_air_db_per_km=doc["atmosphere"]["dry_air_db_per_km"],
            water_vapor_db_per_km=doc["atmosphere"]["water_vapor_db_per_km"],
        ),
        uav_altitude_m=doc["uav_altitude_m"],
        distance_sweep=DistanceRange(sweep["start"], sweep["stop"], sweep["step"]),
        access_target=ThroughputTarget(doc["access_target_bps"]),
        access_radio=radio(doc["access_radio"]),
        transport_radio=radio(doc["transport_radio"]),
        fronthaul_spec=FronthaulSpec(
            sample_width_bits=fh["sample_width_bits"],
            oversampling=fh["oversampling"],
            antenna_ports=fh["antenna_ports"],
            overhead_factor=fh["overhead_factor"],
        ),
        backhaul_protocol_overhead=doc["backhaul_protocol_overhead"],
        power_models={
            ArchitectureKind.FLY_BS: power_model(doc["power_models"]["fly-bs"]),
            ArchitectureKind.FLY_RRH: power_model(doc["power_models"]["fly-rrh"]),
        },
        max_elements=doc["max_elements"],
        feasibility_margin_db=doc["feasibility_margin_db"],
        access_distance_km=doc["access_distance_km"],
    )


def load_scenario(path: str) -> Scenario:
    """Read, validate, and build a scenario file.

    Raises OSError if the file cannot be read and ConfigError (with one
    diagnostic per violation) if it cannot be parsed or fails the schema.
    """
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(
            [f"malformed JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})"]
        ) from None
    diagnostics = validate_scenario_dict(doc)
    if diagnostics:
        raise ConfigError(diagnostics)
    return scenario_from_dict(doc)
