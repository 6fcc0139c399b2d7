"""Transport-link dimensioning for the UAV-to-shore hop.

The remote radio head ships digitized I/Q samples to the shore baseband unit,
so its fronthaul load is a constant set by the radio bandwidth and the
digitization parameters, independent of how much user traffic flows. The
flying base station ships packetized user traffic instead, so its backhaul
load tracks the traffic plus protocol overhead. That asymmetry is the core
trade-off this module exposes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .power import ArchitectureKind


class TransportKind(enum.Enum):
    """Nature of the UAV-to-shore transport load."""

    FRONTHAUL = "fronthaul"
    BACKHAUL = "backhaul"


@dataclass(frozen=True)
class FronthaulSpec:
    """Digitized-sample transport parameters (constant-bit-rate I/Q stream)."""

    sample_width_bits: int
    oversampling: float = 1.0
    antenna_ports: int = 1
    overhead_factor: float = 0.0

    def __post_init__(self):
        if self.sample_width_bits < 1:
            raise ValueError("sample width must be at least 1 bit")
        if self.oversampling < 1:
            raise ValueError("oversampling must be at least 1")
        if self.antenna_ports < 1:
            raise ValueError("antenna ports must be at least 1")
        if self.overhead_factor < 0:
            raise ValueError("overhead factor must be non-negative")


@dataclass(frozen=True)
class TransportRequirement:
    """Rate the transport link must carry, tagged by its nature."""

    required_rate_bps: float
    kind: TransportKind

    def __post_init__(self):
        if self.required_rate_bps <= 0:
            raise ValueError("required rate must be positive")


def fronthaul_rate_bps(bandwidth_hz: float, spec: FronthaulSpec) -> float:
    """Constant I/Q stream rate for digitizing ``bandwidth_hz`` of radio signal.

    Two samples (I and Q) per complex sample, times oversampling, antenna
    ports, sample width, and fractional control/line-coding overhead. User
    traffic does not appear anywhere in this product.
    """
    if bandwidth_hz <= 0:
        raise ValueError("bandwidth must be positive")
    return (
        2.0
        * bandwidth_hz
        * spec.oversampling
        * spec.antenna_ports
        * spec.sample_width_bits
        * (1.0 + spec.overhead_factor)
    )


def backhaul_rate_bps(user_traffic_bps: float, protocol_overhead: float) -> float:
    """Packetized transport rate for ``user_traffic_bps`` plus protocol overhead."""
    if user_traffic_bps < 0:
        raise ValueError("negative traffic")
    if protocol_overhead < 0:
        raise ValueError("negative overhead")
    return user_traffic_bps * (1.0 + protocol_overhead)


def transport_requirement(
    arch: ArchitectureKind,
    user_traffic_bps: float,
    bandwidth_hz: float,
    spec: FronthaulSpec,
    protocol_overhead: float,
) -> TransportRequirement:
    """Transport load of the given architecture: constant fronthaul or traffic-driven backhaul."""
    if arch is ArchitectureKind.FLY_RRH:
        return TransportRequirement(fronthaul_rate_bps(bandwidth_hz, spec), TransportKind.FRONTHAUL)
    return TransportRequirement(
        backhaul_rate_bps(user_traffic_bps, protocol_overhead), TransportKind.BACKHAUL
    )


def link_feasible(
    capacity_bps: float, requirement: TransportRequirement, margin_db: float
) -> bool:
    """True when capacity covers the requirement with ``margin_db`` of headroom."""
    if capacity_bps < 0:
        raise ValueError("negative capacity")
    if margin_db < 0:
        raise ValueError("negative margin")
    return capacity_bps >= requirement.required_rate_bps * 10.0 ** (margin_db / 10.0)
