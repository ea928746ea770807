"""Parameter sweeps over the example families, emitted as bound tables."""

from __future__ import annotations

import csv
import io
import math

import numpy as np

from .eof import eof_bounds
from .envelope import EnvelopeTable, build_envelopes, eta_of, segment_rules
from .states import example2_state, werner, werner_concurrence_hint

BOUNDS_HEADER = [
    "param",
    "c_lower_ppt",
    "c_lower_ccnr",
    "c_lower_purityA",
    "c_lower_purityB",
    "c_lower",
    "c_upper",
    "eof_lower",
    "eof_upper",
    "eof_lower_ppt",
    "eof_lower_ccnr",
    "eof_lower_purityA",
    "eof_lower_purityB",
]
WERNER_EXTRA = ["eof_upper_hint", "eof_upper_hint_segmentwise"]


def parse_sweep(spec: str) -> tuple[str, np.ndarray]:
    """``"name=start:stop:step"`` -> ``(name, values)``, stop included within half a step."""
    try:
        name, rng = spec.split("=", 1)
        start, stop, step = (float(v) for v in rng.split(":"))
    except ValueError as exc:
        raise ValueError(f"sweep must look like name=start:stop:step, got {spec!r}") from exc
    if step <= 0 or stop < start:
        raise ValueError(f"sweep needs step > 0 and stop >= start, got {spec!r}")
    count = int(math.floor((stop - start) / step + 0.5)) + 1
    return name.strip(), start + step * np.arange(count)


def bounds_row(param: float, report) -> list[float]:
    c = report.conc
    comp = report.component_lower
    return [
        param,
        c.ppt_lower,
        c.ccnr_lower,
        c.purity_a_lower,
        c.purity_b_lower,
        c.lower,
        c.upper,
        report.eof_lower,
        report.eof_upper,
        comp.get("ppt", float("nan")),
        comp.get("ccnr", float("nan")),
        comp.get("purityA", float("nan")),
        comp.get("purityB", float("nan")),
    ]


def werner_sweep(d: int, fs, table: EnvelopeTable | None = None) -> tuple[list[str], list[list[float]]]:
    table = table or build_envelopes(d)
    rules = segment_rules(d) if d == 3 else None
    header = BOUNDS_HEADER + (WERNER_EXTRA if d == 3 else [])
    rows = []
    for f in fs:
        f = float(np.clip(f, -1.0, 1.0))
        row = bounds_row(f, eof_bounds(werner(d, f), table))
        if d == 3:
            hint = werner_concurrence_hint(d, f)
            row += [eta_of(table, hint), rules.eta(hint)]
        rows.append(row)
    return header, rows


def two_param_sweep(
    sweep_name: str, values, fixed: float, table: EnvelopeTable | None = None
) -> tuple[list[str], list[list[float]]]:
    """Sweep ``a`` at fixed ``x`` or ``x`` at fixed ``a``."""
    if sweep_name not in ("a", "x"):
        raise ValueError(f"two-param sweeps run over 'a' or 'x', got {sweep_name!r}")
    table = table or build_envelopes(3)
    rows = []
    for v in values:
        v = float(np.clip(v, 0.0, 1.0))
        a, x = (v, fixed) if sweep_name == "a" else (fixed, v)
        rows.append(bounds_row(v, eof_bounds(example2_state(a, x), table)))
    return BOUNDS_HEADER, rows


def envelope_rows(table: EnvelopeTable) -> tuple[list[str], list[list[float]]]:
    c = table.grid
    rows = np.column_stack([c, table.x_vals, table.y_vals, table.epsilon(c), table.eta(c)])
    return ["c", "X", "Y", "epsilon", "eta"], rows.tolist()


def format_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([f"{v:.12g}" for v in row])
    return buf.getvalue()
