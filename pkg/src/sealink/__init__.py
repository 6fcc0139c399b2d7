"""sealink: link-budget and power trade-off engine for UAV coverage over the sea.

Compares two ways of flying mmWave coverage out over open water: a UAV
carrying a full base station (packetized backhaul to shore, on-board
computation) against a UAV carrying a remote radio head (constant digitized
I/Q fronthaul to a shore baseband unit, transmission-only power draw).
"""

from .config import ConfigError, load_scenario, scenario_from_dict, validate_scenario_dict
from .fronthaul import (
    FronthaulSpec,
    TransportKind,
    TransportRequirement,
    backhaul_rate_bps,
    fronthaul_rate_bps,
    link_feasible,
    transport_requirement,
)
from .linkbudget import (
    RadioConfig,
    ThroughputTarget,
    achieved_rate_bps,
    elements_for_gain,
    noise_power_dbm,
    required_array_gain_db,
    required_eirp_dbm,
    required_snr_db,
)
from .power import (
    ArchitectureKind,
    PowerModel,
    consumed_power_w,
    pa_power_w,
    power_breakdown,
)
from .propagation import (
    AtmosphereSpec,
    CarrierSpec,
    LinkGeometry,
    fspl_db,
    gaseous_attenuation_db,
    slant_range_km,
    total_path_loss_db,
)
from .scenario import (
    AccessBudget,
    ArchBudget,
    CrossoverReport,
    DistanceRange,
    Scenario,
    SweepRow,
    access_budget,
    budget_point,
    crossover_analysis,
    run_sweep,
)
from .sweepcsv import CSV_HEADER, CsvFormatError, CsvRecord, emit_csv, parse_csv
from .svgplot import first_infeasible_km, render_svg

__version__ = "0.1.0"

__all__ = [
    "AccessBudget",
    "ArchBudget",
    "ArchitectureKind",
    "AtmosphereSpec",
    "CSV_HEADER",
    "CarrierSpec",
    "ConfigError",
    "CrossoverReport",
    "CsvFormatError",
    "CsvRecord",
    "DistanceRange",
    "FronthaulSpec",
    "LinkGeometry",
    "PowerModel",
    "RadioConfig",
    "Scenario",
    "SweepRow",
    "ThroughputTarget",
    "TransportKind",
    "TransportRequirement",
    "access_budget",
    "achieved_rate_bps",
    "backhaul_rate_bps",
    "budget_point",
    "consumed_power_w",
    "crossover_analysis",
    "elements_for_gain",
    "emit_csv",
    "first_infeasible_km",
    "fronthaul_rate_bps",
    "fspl_db",
    "gaseous_attenuation_db",
    "link_feasible",
    "load_scenario",
    "noise_power_dbm",
    "pa_power_w",
    "parse_csv",
    "power_breakdown",
    "render_svg",
    "required_array_gain_db",
    "required_eirp_dbm",
    "required_snr_db",
    "run_sweep",
    "scenario_from_dict",
    "slant_range_km",
    "total_path_loss_db",
    "transport_requirement",
    "validate_scenario_dict",
]
