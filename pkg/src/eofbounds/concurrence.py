"""Closed-form lower and upper bounds on the concurrence of a mixed state."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .densmat import (
    BipartiteDensityMatrix,
    DimensionError,
    partial_transpose_a,
    purity,
    realign,
    reduced_a,
    reduced_b,
    trace_norm,
)


class Component(enum.Flag):
    """Selector for the lower-bound families entering the maximum."""

    PPT = enum.auto()
    CCNR = enum.auto()
    PURITY_A = enum.auto()
    PURITY_B = enum.auto()
    ALL = PPT | CCNR | PURITY_A | PURITY_B


@dataclass(frozen=True)
class ConcurrenceBounds:
    """Lower/upper concurrence bounds and their ingredients.

    ``ppt_lower`` and ``ccnr_lower`` are reported before flooring (they are
    negative for states the corresponding criterion cannot detect).  The
    purity components are clamped at zero when the radicand is negative and
    the clamp is listed in ``flags``.  Components excluded by the selector
    are ``nan``.
    """

    ppt_lower: float
    ccnr_lower: float
    purity_a_lower: float
    purity_b_lower: float
    lower: float
    upper_a: float
    upper_b: float
    upper: float
    m: int
    flags: tuple[str, ...] = field(default=())

    def components(self) -> dict[str, float]:
        return {
            "ppt": self.ppt_lower,
            "ccnr": self.ccnr_lower,
            "purityA": self.purity_a_lower,
            "purityB": self.purity_b_lower,
        }


def _require_canonical(rho: BipartiteDensityMatrix) -> tuple[BipartiteDensityMatrix, int]:
    rho = rho.canonical()
    m = rho.dim_a
    if m < 2:
        raise DimensionError("concurrence bounds need min(dim_a, dim_b) >= 2")
    return rho, m


def _sqrt_clamped(radicand: float, name: str, flags: list[str]) -> float:
    if radicand < 0.0:
        flags.append(f"{name}_clamped")
        return 0.0
    return float(np.sqrt(radicand))


def concurrence_lower(rho: BipartiteDensityMatrix, components: Component = Component.ALL):
    """Lower-bound candidates and their floored maximum.

    Returns ``(values, lower, flags)`` where ``values`` maps component name
    to its value (``nan`` when not selected).
    """
    rho, m = _require_canonical(rho)
    norm = np.sqrt(2.0 / (m * (m - 1)))
    flags: list[str] = []
    nan = float("nan")
    tr_rho2 = purity(rho.mat)

    ppt = norm * (trace_norm(partial_transpose_a(rho)) - 1.0) if Component.PPT in components else nan
    ccnr = norm * (trace_norm(realign(rho)) - 1.0) if Component.CCNR in components else nan
    pa = (
        _sqrt_clamped(2.0 * (tr_rho2 - purity(reduced_a(rho))), "purityA", flags)
        if Component.PURITY_A in components
        else nan
    )
    pb = (
        _sqrt_clamped(2.0 * (tr_rho2 - purity(reduced_b(rho))), "purityB", flags)
        if Component.PURITY_B in components
        else nan
    )
    values = {"ppt": ppt, "ccnr": ccnr, "purityA": pa, "purityB": pb}
    lower = max([0.0] + [v for v in values.values() if not np.isnan(v)])
    return values, lower, flags


def concurrence_upper(rho: BipartiteDensityMatrix) -> tuple[float, float, float]:
    """``(upper_a, upper_b, min)`` from the reduced-state purities."""
    rho, _ = _require_canonical(rho)
    ua = float(np.sqrt(max(2.0 * (1.0 - purity(reduced_a(rho))), 0.0)))
    ub = float(np.sqrt(max(2.0 * (1.0 - purity(reduced_b(rho))), 0.0)))
    return ua, ub, min(ua, ub)


def concurrence_bounds(
    rho: BipartiteDensityMatrix, components: Component = Component.ALL
) -> ConcurrenceBounds:
    canon, m = _require_canonical(rho)
    values, lower, flags = concurrence_lower(canon, components)
    ua, ub, upper = concurrence_upper(canon)
    if canon.swapped:
        flags.append("swapped_AB")
    return ConcurrenceBounds(
        ppt_lower=values["ppt"],
        ccnr_lower=values["ccnr"],
        purity_a_lower=values["purityA"],
        purity_b_lower=values["purityB"],
        lower=lower,
        upper_a=ua,
        upper_b=ub,
        upper=upper,
        m=m,
        flags=tuple(flags),
    )
