#!/usr/bin/env python3
"""Straight-line recomputation of a full distance sweep from a raw scenario dict.

This is the independent cross-check for the sweep engine: every formula is
written out inline, element counts come from a linear scan instead of a
closed-form ceiling, and nothing here imports from the sealink package.
Keep it that way.

Standalone usage dumps the recomputed rows for eyeballing:

    python tests/oracle_sweep.py scenarios/reference.json
"""

import json
import math
import sys

ARCHS = ("fly-bs", "fly-rrh")


def brute_force_point(doc, arch, distance_km):
    """Recompute one (architecture, distance) budget entry from scratch."""
    altitude_km = doc["uav_altitude_m"] / 1000.0
    slant_km = math.sqrt(altitude_km * altitude_km + distance_km * distance_km)
    f_ghz = doc["carrier"]["frequency_ghz"]
    atm = doc["atmosphere"]
    loss_db = (
        92.45
        + 20.0 * math.log10(f_ghz)
        + 20.0 * math.log10(slant_km)
        + (atm["dry_air_db_per_km"] + atm["water_vapor_db_per_km"]) * slant_km
    )

    traffic_bps = doc["access_target_bps"]
    if arch == "fly-rrh":
        fh = doc["fronthaul"]
        rate_bps = (
            2.0
            * doc["access_radio"]["bandwidth_hz"]
            * fh["oversampling"]
            * fh["antenna_ports"]
            * fh["sample_width_bits"]
            * (1.0 + fh["overhead_factor"])
        )
    else:
        rate_bps = traffic_bps * (1.0 + doc["backhaul_protocol_overhead"])

    radio = doc["transport_radio"]
    noise_dbm = -174.0 + 10.0 * math.log10(radio["bandwidth_hz"]) + radio["noise_figure_db"]
    snr_db = 10.0 * math.log10(2.0 ** (rate_bps / radio["bandwidth_hz"]) - 1.0)
    eirp_dbm = (
        noise_dbm + snr_db + radio["implementation_loss_db"] + loss_db - radio["rx_gain_dbi"]
    )
    gain_db = eirp_dbm - radio["tx_power_per_chain_dbm"] - radio["element_gain_dbi"]
    if gain_db < 0.0:
        gain_db = 0.0

    # smallest element count whose combined power reaches the deficit,
    # found by scanning instead of inverting the log
    n_required = 1
    while 10.0 * math.log10(n_required) < gain_db:
        n_required += 1
    n = min(n_required, doc["max_elements"])

    total_tx_dbm = radio["tx_power_per_chain_dbm"] + 10.0 * math.log10(n)
    model = doc["power_models"][arch]
    power_w = (
        model["fixed_w"]
        + n * model["per_chain_w"]
        + 10.0 ** ((total_tx_dbm - 30.0) / 10.0) / model["pa_efficiency"]
    )
    if arch == "fly-bs":
        power_w += model["compute_w_per_gbps"] * (traffic_bps / 1e9)

    actual_eirp_dbm = total_tx_dbm + radio["element_gain_dbi"]
    capacity_snr_db = (
        actual_eirp_dbm
        - loss_db
        + radio["rx_gain_dbi"]
        - radio["implementation_loss_db"]
        - noise_dbm
    )
    capacity_bps = radio["bandwidth_hz"] * math.log2(1.0 + 10.0 ** (capacity_snr_db / 10.0))
    feasible = n_required <= doc["max_elements"] and capacity_bps >= rate_bps * 10.0 ** (
        doc["feasibility_margin_db"] / 10.0
    )

    return {
        "path_loss_db": loss_db,
        "transport_rate_bps": rate_bps,
        "required_eirp_dbm": eirp_dbm,
        "array_gain_db": gain_db,
        "n_elements": n,
        "consumed_power_w": power_w,
        "feasible": feasible,
    }


def brute_force_rows(doc):
    """All sweep rows as (distance_km, {arch: entry}) tuples, in grid order."""
    sweep = doc["distance_sweep_km"]
    rows = []
    k = 0
    while sweep["start"] + k * sweep["step"] <= sweep["stop"] + 1e-9:
        d = sweep["start"] + k * sweep["step"]
        rows.append((d, {arch: brute_force_point(doc, arch, d) for arch in ARCHS}))
        k += 1
    return rows


def brute_force_first_infeasible_km(rows, arch):
    """Smallest grid distance whose entry for `arch` is infeasible, else None."""
    for d, per_arch in rows:
        if not per_arch[arch]["feasible"]:
            return d
    return None


def brute_force_crossover_km(rows):
    """First strict sign change of P(fly-bs) - P(fly-rrh) between consecutive rows."""
    prev_sign = None
    for d, per_arch in rows:
        diff = per_arch["fly-bs"]["consumed_power_w"] - per_arch["fly-rrh"]["consumed_power_w"]
        sign = (diff > 0) - (diff < 0)
        if prev_sign is not None and prev_sign * sign < 0:
            return d
        prev_sign = sign
    return None


def main():
    if len(sys.argv) != 2:
        print("usage: oracle_sweep.py <scenario.json>", file=sys.stderr)
        return 2
    with open(sys.argv[1], encoding="utf-8") as fh:
        doc = json.load(fh)
    rows = brute_force_rows(doc)
    for d, per_arch in rows:
        for arch in ARCHS:
            e = per_arch[arch]
            print(
                f"{d:g} {arch} loss={e['path_loss_db']:.3f} dB "
                f"rate={e['transport_rate_bps']:g} bps eirp={e['required_eirp_dbm']:.3f} dBm "
                f"n={e['n_elements']} power={e['consumed_power_w']:.2f} W "
                f"feasible={e['feasible']}"
            )
    print(f"crossover: {brute_force_crossover_km(rows)}")
    for arch in ARCHS:
        print(f"first infeasible {arch}: {brute_force_first_infeasible_km(rows, arch)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
