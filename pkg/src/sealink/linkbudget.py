"""Shannon link budgeting: noise floor, required SNR and EIRP, array sizing.

The rate model is plain Shannon capacity over the configured bandwidth, which
keeps the EIRP-to-throughput mapping exactly invertible. Arrays are idealised:
N identical chains add 10*log10(N) dB of radiated power, with no coupling,
scan loss, or beamforming imperfection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Thermal noise density at the 290 K reference temperature.
THERMAL_NOISE_DBM_PER_HZ = -174.0

# Spectral efficiencies past this would push 2**x out of float range.
MAX_SPECTRAL_EFFICIENCY = 1024.0


@dataclass(frozen=True)
class RadioConfig:
    """Transmit/receive chain parameters of one link."""

    bandwidth_hz: float
    tx_power_per_chain_dbm: float
    element_gain_dbi: float
    rx_gain_dbi: float
    noise_figure_db: float
    implementation_loss_db: float

    def __post_init__(self):
        if self.bandwidth_hz <= 0:
            raise ValueError("bandwidth must be positive")
        if self.noise_figure_db < 0:
            raise ValueError("noise figure must be non-negative")
        if self.implementation_loss_db < 0:
            raise ValueError("implementation loss must be non-negative")


@dataclass(frozen=True)
class ThroughputTarget:
    """A throughput goal in bits per second."""

    rate_bps: float

    def __post_init__(self):
        if self.rate_bps <= 0:
            raise ValueError("rate must be positive")


def noise_power_dbm(config: RadioConfig) -> float:
    """Receiver noise floor over the full bandwidth, noise figure included."""
    return (
        THERMAL_NOISE_DBM_PER_HZ
        + 10.0 * math.log10(config.bandwidth_hz)
        + config.noise_figure_db
    )


def required_snr_db(target: ThroughputTarget, bandwidth_hz: float) -> float:
    """SNR needed to carry the target rate on a Shannon channel of ``bandwidth_hz``."""
    if bandwidth_hz <= 0:
        raise ValueError("bandwidth must be positive")
    spectral_efficiency = target.rate_bps / bandwidth_hz
    if spectral_efficiency > MAX_SPECTRAL_EFFICIENCY:
        raise ValueError("spectral efficiency overflow")
    try:
        snr_linear = 2.0**spectral_efficiency - 1.0
    except OverflowError:
        raise ValueError("spectral efficiency overflow") from None
    return 10.0 * math.log10(snr_linear)


def required_eirp_dbm(
    target: ThroughputTarget, path_loss_db: float, config: RadioConfig
) -> float:
    """Radiated power needed to deliver ``target`` through ``path_loss_db``."""
    return (
        noise_power_dbm(config)
        + required_snr_db(target, config.bandwidth_hz)
        + config.implementation_loss_db
        + path_loss_db
        - config.rx_gain_dbi
    )


def required_array_gain_db(eirp_target_dbm: float, config: RadioConfig) -> float:
    """Array gain still missing after one chain's power and its element gain.

    Zero means a single element already meets the EIRP target; a surplus never
    turns into a negative gain requirement.
    """
    deficit_db = eirp_target_dbm - config.tx_power_per_chain_dbm - config.element_gain_dbi
    return max(0.0, deficit_db)


def elements_for_gain(gain_db: float) -> int:
    """Smallest element count whose idealised array gain reaches ``gain_db``."""
    if gain_db < 0:
        raise ValueError("negative gain")
    n = math.ceil(10.0 ** (gain_db / 10.0))
    if n < 1:
        n = 1
    # ceil() overshoots by one when 10**(g/10) lands a few ulps above an
    # integer; step back while the smaller count still meets the gain.
    while n > 1 and 10.0 * math.log10(n - 1) >= gain_db:
        n -= 1
    return n


def achieved_rate_bps(eirp_dbm: float, path_loss_db: float, config: RadioConfig) -> float:
    """Shannon rate delivered at ``eirp_dbm``; exact inverse of required_eirp_dbm."""
    snr_db = (
        eirp_dbm
        - path_loss_db
        + config.rx_gain_dbi
        - config.implementation_loss_db
        - noise_power_dbm(config)
    )
    return config.bandwidth_hz * math.log2(1.0 + 10.0 ** (snr_db / 10.0))
