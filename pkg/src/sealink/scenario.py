"""Full-experiment orchestration: per-distance budgets, sweeps, and crossover analysis.

A scenario fixes the carrier, atmosphere, both radios, the transport
dimensioning, and the power models, then sweeps the horizontal distance
between the UAV and the shore node. Each grid point is budgeted end to end:
path loss, transport requirement, EIRP, array size, consumed power, and a
feasibility verdict. The access link down to the users is budgeted once at a
fixed short distance and reported separately; only the shore hop is swept.

Per-chain transmit power is held fixed throughout: an EIRP deficit is met
purely by adding array elements, never by raising chain power.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .fronthaul import FronthaulSpec, link_feasible, transport_requirement
from .linkbudget import (
    RadioConfig,
    ThroughputTarget,
    achieved_rate_bps,
    elements_for_gain,
    required_array_gain_db,
    required_eirp_dbm,
)
from .power import ArchitectureKind, PowerModel, consumed_power_w
from .propagation import AtmosphereSpec, CarrierSpec, LinkGeometry, total_path_loss_db

# Grid-inclusion slack so that stop = start + k*step keeps its last point
# despite accumulated float error.
GRID_TOLERANCE_KM = 1e-9


@dataclass(frozen=True)
class DistanceRange:
    """Arithmetic distance grid in km, inclusive of start and of the last
    point not overshooting stop."""

    start_km: float
    stop_km: float
    step_km: float

    def __post_init__(self):
        if self.start_km <= 0:
            raise ValueError("start distance must be positive")
        if self.step_km <= 0:
            raise ValueError("step must be positive")

    def points(self) -> list[float]:
        distances = []
        k = 0
        while True:
            d = self.start_km + k * self.step_km
            if d > self.stop_km + GRID_TOLERANCE_KM:
                break
            distances.append(d)
            k += 1
        return distances


@dataclass(frozen=True)
class Scenario:
    """One complete experiment definition."""

    carrier: CarrierSpec
    atmosphere: AtmosphereSpec
    uav_altitude_m: float
    distance_sweep: DistanceRange
    access_target: ThroughputTarget
    access_radio: RadioConfig
    transport_radio: RadioConfig
    fronthaul_spec: FronthaulSpec
    backhaul_protocol_overhead: float
    power_models: Mapping[ArchitectureKind, PowerModel]
    max_elements: int
    feasibility_margin_db: float = 3.0
    access_distance_km: float = 1.0

    def __post_init__(self):
        if self.uav_altitude_m < 0:
            raise ValueError("negative altitude")
        if self.backhaul_protocol_overhead < 0:
            raise ValueError("negative protocol overhead")
        if self.max_elements < 1:
            raise ValueError("max elements must be at least 1")
        if self.feasibility_margin_db < 0:
            raise ValueError("negative feasibility margin")
        if self.access_distance_km <= 0:
            raise ValueError("access distance must be positive")
        for arch in ArchitectureKind:
            if arch not in self.power_models:
                raise ValueError(f"missing power model for {arch.value}")


@dataclass(frozen=True)
class ArchBudget:
    """One architecture's budget at one distance; the fields behind a sweep row."""

    path_loss_db: float
    transport_rate_bps: float
    required_eirp_dbm: float
    array_gain_db: float
    n_elements: int
    consumed_power_w: float
    feasible: bool


@dataclass(frozen=True)
class SweepRow:
    """All architectures' budgets at one grid distance."""

    distance_km: float
    budgets: Mapping[ArchitectureKind, ArchBudget]


@dataclass(frozen=True)
class AccessBudget:
    """The one-shot budget of the UAV-to-users link."""

    distance_km: float
    path_loss_db: float
    required_eirp_dbm: float
    array_gain_db: float
    n_elements: int


@dataclass(frozen=True)
class CrossoverReport:
    """Where feasibility breaks and where the two power curves swap order."""

    first_infeasible_km: Mapping[ArchitectureKind, float | None]
    power_crossover_km: float | None


def budget_point(scenario: Scenario, arch: ArchitectureKind, distance_km: float) -> ArchBudget:
    """Budget the shore transport link for one architecture at one distance.

    The element count is clamped to the scenario's maximum so that infeasible
    points still yield a finite power figure; feasibility records whether the
    unclamped count fit and whether the resulting capacity clears the margin.
    """
    geometry = LinkGeometry(scenario.uav_altitude_m, distance_km)
    loss_db = total_path_loss_db(scenario.carrier, scenario.atmosphere, geometry)

    requirement = transport_requirement(
        arch,
        scenario.access_target.rate_bps,
        scenario.access_radio.bandwidth_hz,
        scenario.fronthaul_spec,
        scenario.backhaul_protocol_overhead,
    )

    radio = scenario.transport_radio
    eirp_dbm = required_eirp_dbm(
        ThroughputTarget(requirement.required_rate_bps), loss_db, radio
    )
    gain_db = required_array_gain_db(eirp_dbm, radio)
    n_required = elements_for_gain(gain_db)
    n = min(n_required, scenario.max_elements)

    total_tx_dbm = radio.tx_power_per_chain_dbm + 10.0 * math.log10(n)
    power_w = consumed_power_w(
        arch,
        scenario.power_models[arch],
        n,
        total_tx_dbm,
        scenario.access_target.rate_bps,
    )

    capacity_bps = achieved_rate_bps(total_tx_dbm + radio.element_gain_dbi, loss_db, radio)
    feasible = n_required <= scenario.max_elements and link_feasible(
        capacity_bps, requirement, scenario.feasibility_margin_db
    )

    return ArchBudget(
        path_loss_db=loss_db,
        transport_rate_bps=requirement.required_rate_bps,
        required_eirp_dbm=eirp_dbm,
        array_gain_db=gain_db,
        n_elements=n,
        consumed_power_w=power_w,
        feasible=feasible,
    )


def access_budget(scenario: Scenario) -> AccessBudget:
    """Budget the UAV-to-users link once, at the scenario's fixed access distance."""
    geometry = LinkGeometry(scenario.uav_altitude_m, scenario.access_distance_km)
    loss_db = total_path_loss_db(scenario.carrier, scenario.atmosphere, geometry)
    radio = scenario.access_radio
    eirp_dbm = required_eirp_dbm(scenario.access_target, loss_db, radio)
    gain_db = required_array_gain_db(eirp_dbm, radio)
    return AccessBudget(
        distance_km=scenario.access_distance_km,
        path_loss_db=loss_db,
        required_eirp_dbm=eirp_dbm,
        array_gain_db=gain_db,
        n_elements=elements_for_gain(gain_db),
    )


def run_sweep(scenario: Scenario) -> list[SweepRow]:
    """Budget every architecture at every grid distance, in distance order."""
    distances = scenario.distance_sweep.points()
    if not distances:
        raise ValueError("empty sweep")
    archs = sorted(ArchitectureKind, key=lambda a: a.value)
    return [
        SweepRow(d, {arch: budget_point(scenario, arch, d) for arch in archs})
        for d in distances
    ]


def _sign(x: float) -> int:
    return (x > 0) - (x < 0)


def crossover_analysis(rows: list[SweepRow]) -> CrossoverReport:
    """Summarise a sweep: first infeasible distance per architecture and the
    first strict sign change of P(BS) - P(RRH) between consecutive rows."""
    if not rows:
        raise ValueError("no rows")

    first_infeasible: dict[ArchitectureKind, float | None] = {}
    for arch in ArchitectureKind:
        first_infeasible[arch] = next(
            (row.distance_km for row in rows if not row.budgets[arch].feasible), None
        )

    crossover_km = None
    prev_sign = None
    for row in rows:
        diff = (
            row.budgets[ArchitectureKind.FLY_BS].consumed_power_w
            - row.budgets[ArchitectureKind.FLY_RRH].consumed_power_w
        )
        sign = _sign(diff)
        if prev_sign is not None and prev_sign * sign < 0:
            crossover_km = row.distance_km
            break
        prev_sign = sign

    return CrossoverReport(first_infeasible_km=first_infeasible, power_crossover_km=crossover_km)
