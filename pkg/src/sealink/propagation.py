"""Over-sea line-of-sight propagation: link geometry, free-space loss, gas absorption.

UAV altitude gives every link an unobstructed direct path, both down to users
on the water and across to the shore node, so path loss is free-space
attenuation plus a linear dry-air / water-vapor absorption term. Earth
curvature and sea-surface reflections are deliberately not modelled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Friis constant for frequency in GHz and distance in km; fixed so that
# independent implementations agree bit-for-bit.
FSPL_CONSTANT_DB = 92.45


@dataclass(frozen=True)
class CarrierSpec:
    """Carrier frequency of one radio link."""

    frequency_ghz: float = 28.0

    def __post_init__(self):
        if self.frequency_ghz <= 0:
            raise ValueError("frequency must be positive")


@dataclass(frozen=True)
class AtmosphereSpec:
    """Specific gaseous attenuation, split into dry-air and water-vapor terms.

    The defaults are representative of sea-level conditions near 28 GHz; they
    are placeholders meant to be overridden per scenario, not authoritative
    coefficients.
    """

    dry_air_db_per_km: float = 0.06
    water_vapor_db_per_km: float = 0.10

    def __post_init__(self):
        if self.dry_air_db_per_km < 0 or self.water_vapor_db_per_km < 0:
            raise ValueError("specific attenuation must be non-negative")


@dataclass(frozen=True)
class LinkGeometry:
    """UAV altitude and horizontal ground distance of one link."""

    uav_altitude_m: float
    horizontal_distance_km: float

    def __post_init__(self):
        if self.uav_altitude_m < 0:
            raise ValueError("negative altitude")
        if self.horizontal_distance_km < 0:
            raise ValueError("negative horizontal distance")


def slant_range_km(geometry: LinkGeometry) -> float:
    """Straight-line 3D distance between the UAV and the ground node, in km."""
    altitude_km = geometry.uav_altitude_m / 1000.0
    horizontal_km = geometry.horizontal_distance_km
    if altitude_km == 0.0 and horizontal_km == 0.0:
        raise ValueError("zero-length link")
    return math.sqrt(altitude_km * altitude_km + horizontal_km * horizontal_km)


def fspl_db(carrier: CarrierSpec, distance_km: float) -> float:
    """Free-space path loss in dB at the carrier frequency over ``distance_km``."""
    if distance_km <= 0:
        raise ValueError("nonpositive distance")
    return (
        FSPL_CONSTANT_DB
        + 20.0 * math.log10(carrier.frequency_ghz)
        + 20.0 * math.log10(distance_km)
    )


def gaseous_attenuation_db(atmosphere: AtmosphereSpec, distance_km: float) -> float:
    """Dry-air plus water-vapor absorption over ``distance_km``; linear in distance."""
    if distance_km < 0:
        raise ValueError("negative distance")
    return (atmosphere.dry_air_db_per_km + atmosphere.water_vapor_db_per_km) * distance_km


def total_path_loss_db(
    carrier: CarrierSpec, atmosphere: AtmosphereSpec, geometry: LinkGeometry
) -> float:
    """Free-space loss plus gaseous absorption along the slant path."""
    distance_km = slant_range_km(geometry)
    return fspl_db(carrier, distance_km) + gaseous_attenuation_db(atmosphere, distance_km)
