"""Electrical power drawn by the UAV communication payload.

A UAV carrying a full base station pays for transmission and for on-board
baseband computation that grows with the traffic it processes. A UAV carrying
only a remote radio head pays for transmission alone; its baseband work lives
at the shore unit. Both payloads cool passively, so there is no cooling term,
and hover/propulsion power is out of scope entirely.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class ArchitectureKind(enum.Enum):
    """Which radio payload the UAV carries."""

    FLY_BS = "fly-bs"
    FLY_RRH = "fly-rrh"


@dataclass(frozen=True)
class PowerModel:
    """Coefficients of the payload power decomposition.

    The compute term is a linear watts-per-Gbps coefficient; it applies to the
    flying base station only. ``payload_mass_kg`` is carried as configuration
    metadata for comparing airframe classes and never enters any computation.
    """

    fixed_power_w: float
    per_chain_power_w: float
    pa_efficiency: float
    compute_w_per_gbps: float = 0.0
    payload_mass_kg: float | None = None

    def __post_init__(self):
        if self.fixed_power_w < 0:
            raise ValueError("fixed power must be non-negative")
        if self.per_chain_power_w < 0:
            raise ValueError("per-chain power must be non-negative")
        if not 0.0 < self.pa_efficiency <= 1.0:
            raise ValueError("PA efficiency must be in (0, 1]")
        if self.compute_w_per_gbps < 0:
            raise ValueError("compute power coefficient must be non-negative")


def pa_power_w(total_tx_power_dbm: float, model: PowerModel) -> float:
    """Power-amplifier consumption for a total radiated power in dBm."""
    radiated_w = 10.0 ** ((total_tx_power_dbm - 30.0) / 10.0)
    return radiated_w / model.pa_efficiency


def consumed_power_w(
    arch: ArchitectureKind,
    model: PowerModel,
    n_elements: int,
    total_tx_power_dbm: float,
    traffic_bps: float,
) -> float:
    """Total payload power: fixed overhead, chains, PA, and (BS only) compute."""
    if n_elements < 1:
        raise ValueError("element count must be at least 1")
    if traffic_bps < 0:
        raise ValueError("negative traffic")
    base_w = (
        model.fixed_power_w
        + n_elements * model.per_chain_power_w
        + pa_power_w(total_tx_power_dbm, model)
    )
    if arch is ArchitectureKind.FLY_BS:
        return base_w + model.compute_w_per_gbps * (traffic_bps / 1e9)
    return base_w


def power_breakdown(
    arch: ArchitectureKind,
    model: PowerModel,
    n_elements: int,
    total_tx_power_dbm: float,
    traffic_bps: float,
) -> dict[str, float]:
    """Per-term components of consumed_power_w, in summation order.

    The base-station breakdown carries a ``compute_w`` entry; the remote radio
    head's does not, mirroring the architectures' dissipation split.
    """
    if n_elements < 1:
        raise ValueError("element count must be at least 1")
    if traffic_bps < 0:
        raise ValueError("negative traffic")
    parts = {
        "fixed_w": model.fixed_power_w,
        "chains_w": n_elements * model.per_chain_power_w,
        "pa_w": pa_power_w(total_tx_power_dbm, model),
    }
    if arch is ArchitectureKind.FLY_BS:
        parts["compute_w"] = model.compute_w_per_gbps * (traffic_bps / 1e9)
    return parts
