"""CSV and JSON serialization of scan tables."""
from __future__ import annotations

import csv
import dataclasses
import enum
import io
import json
import math
import sys

from .pipeline import PointReport, ScanTable

CSV_COLUMNS = (
    "sigma", "mu", "c_q", "c_g", "phi0", "m_phi", "m_psi", "z_phi",
    "delta_mA2", "m_A2", "delta_V", "width_ratio", "hessian_residual", "status",
)


def _plain(obj):
    if isinstance(obj, enum.Enum):
        return obj.value
    if dataclasses.is_dataclass(obj):
        return {f.name: _plain(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    return obj


def point_to_dict(row: PointReport) -> dict:
    d = _plain(row)
    inputs = {"params": d.pop("params"), "sigma": d.pop("sigma")}
    return {"inputs": inputs, **d}


def table_to_dict(table: ScanTable) -> dict:
    return {
        "params": _plain(table.params),
        "grid": _plain(table.grid),
        "rows": [point_to_dict(r) for r in table.rows],
        "diagnostics": _plain(table.diagnostics),
    }


def _fmt(x) -> str:
    return "" if x is None else repr(float(x))


def csv_row(row: PointReport) -> list[str]:
    if not row.ok:
        return [_fmt(row.sigma)] + [""] * (len(CSV_COLUMNS) - 2) + [row.status]
    c, v, s = row.condensates, row.vacuum, row.spectrum
    values = (
        row.sigma, row.mu, c.c_q, c.c_g, v.phi0, s.m_phi, s.m_psi, s.z_phi,
        s.delta_mA2, s.m_A2, s.delta_V, s.width_ratio, s.hessian_residual,
    )
    return [_fmt(x) for x in values] + [row.status]


def render(table: ScanTable, fmt: str = "csv") -> str:
    fmt = fmt.lower()
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for row in table.rows:
            w.writerow(csv_row(row))
        return buf.getvalue()
    if fmt == "json":
        return json.dumps(table_to_dict(table), indent=2, allow_nan=False) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def emit_report(table: ScanTable, fmt: str = "csv", destination=None) -> None:
    """Write ``table`` as CSV or JSON to a path, or to stdout when ``destination`` is None."""
    if not table.rows:
        raise ValueError("empty scan table")
    text = render(table, fmt)
    if destination is None or str(destination) == "-":
        sys.stdout.write(text)
        return
    with open(destination, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
