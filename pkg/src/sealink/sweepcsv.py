"""The sweep CSV wire format: emission and strict parsing.

One data row per (distance, architecture) pair, sorted by distance then by
architecture name. Floats are written with six significant digits and a '.'
decimal separator; booleans as lowercase true/false. Emission is fully
deterministic so repeated runs produce byte-identical files.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .power import ArchitectureKind
from .scenario import SweepRow

CSV_HEADER = (
    "distance_km,arch,path_loss_db,transport_rate_bps,required_eirp_dbm,"
    "array_gain_db,n_elements,consumed_power_w,feasible"
)

_N_FIELDS = 9


class CsvFormatError(ValueError):
    """A sweep CSV document does not follow the emitted format."""


@dataclass(frozen=True)
class CsvRecord:
    """One parsed data row of a sweep CSV."""

    distance_km: float
    arch: str
    path_loss_db: float
    transport_rate_bps: float
    required_eirp_dbm: float
    array_gain_db: float
    n_elements: int
    consumed_power_w: float
    feasible: bool


def _fmt(value: float) -> str:
    return f"{value:.6g}"


def emit_csv(rows: Sequence[SweepRow]) -> str:
    """Render sweep rows as CSV text, trailing newline included."""
    lines = [CSV_HEADER]
    for row in rows:
        for arch in sorted(row.budgets, key=lambda a: a.value):
            b = row.budgets[arch]
            lines.append(
                ",".join(
                    (
                        _fmt(row.distance_km),
                        arch.value,
                        _fmt(b.path_loss_db),
                        _fmt(b.transport_rate_bps),
                        _fmt(b.required_eirp_dbm),
                        _fmt(b.array_gain_db),
                        str(b.n_elements),
                        _fmt(b.consumed_power_w),
                        "true" if b.feasible else "false",
                    )
                )
            )
    return "\n".join(lines) + "\n"


def _parse_float(text: str, line_no: int, column: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise CsvFormatError(f"line {line_no}: invalid number {text!r} in {column}") from None


def parse_csv(text: str) -> list[CsvRecord]:
    """Parse sweep CSV text back into records.

    Raises CsvFormatError naming the first offending line on any deviation
    from the emitted format.
    """
    lines = text.splitlines()
    if not lines:
        raise CsvFormatError("line 1: empty file, expected header")
    if lines[0] != CSV_HEADER:
        raise CsvFormatError(f"line 1: bad header {lines[0]!r}")

    known_archs = {kind.value for kind in ArchitectureKind}
    records = []
    for line_no, line in enumerate(lines[1:], start=2):
        if line == "":
            raise CsvFormatError(f"line {line_no}: blank line")
        fields = line.split(",")
        if len(fields) != _N_FIELDS:
            raise CsvFormatError(
                f"line {line_no}: expected {_N_FIELDS} fields, got {len(fields)}"
            )
        arch = fields[1]
        if arch not in known_archs:
            raise CsvFormatError(f"line {line_no}: unknown architecture {arch!r}")
        if fields[8] not in ("true", "false"):
            raise CsvFormatError(
                f"line {line_no}: feasible must be true or false, got {fields[8]!r}"
            )
        try:
            n_elements = int(fields[6])
        except ValueError:
            raise CsvFormatError(
                f"line {line_no}: invalid number {fields[6]!r} in n_elements"
            ) from None
        records.append(
            CsvRecord(
                distance_km=_parse_float(fields[0], line_no, "distance_km"),
                arch=arch,
                path_loss_db=_parse_float(fields[2], line_no, "path_loss_db"),
                transport_rate_bps=_parse_float(fields[3], line_no, "transport_rate_bps"),
                required_eirp_dbm=_parse_float(fields[4], line_no, "required_eirp_dbm"),
                array_gain_db=_parse_float(fields[5], line_no, "array_gain_db"),
                n_elements=n_elements,
                consumed_power_w=_parse_float(fields[7], line_no, "consumed_power_w"),
                feasible=fields[8] == "true",
            )
        )
    return records
