"""Entanglement-of-formation bounds from concurrence bounds."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .concurrence import Component, ConcurrenceBounds, concurrence_bounds
from .densmat import BipartiteDensityMatrix, DimensionError, schmidt_vector, shannon_entropy
from .envelope import CLAMP_TOL, DomainError, EnvelopeTable, epsilon_of, eta_of

SIGMA_YY = np.array(
    [[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]], dtype=complex
)


@dataclass(frozen=True)
class EofBoundsReport:
    m: int
    n: int
    conc: ConcurrenceBounds
    eof_lower: float
    eof_upper: float
    component_lower: dict[str, float] = field(default_factory=dict)
    flags: tuple[str, ...] = ()

    def summary(self) -> str:
        c = self.conc
        lines = [
            f"dims            {self.m} x {self.n}",
            f"c_lower_ppt     {c.ppt_lower:.12g}",
            f"c_lower_ccnr    {c.ccnr_lower:.12g}",
            f"c_lower_purityA {c.purity_a_lower:.12g}",
            f"c_lower_purityB {c.purity_b_lower:.12g}",
            f"c_lower         {c.lower:.12g}",
            f"c_upper_A       {c.upper_a:.12g}",
            f"c_upper_B       {c.upper_b:.12g}",
            f"c_upper         {c.upper:.12g}",
        ]
        for name, val in self.component_lower.items():
            lines.append(f"eof_lower[{name}]".ljust(16) + f"{val:.12g}")
        lines += [
            f"eof_lower       {self.eof_lower:.12g}",
            f"eof_upper       {self.eof_upper:.12g}",
            f"flags           {','.join(self.flags) if self.flags else '-'}",
        ]
        return "\n".join(lines)


def pure_eof(mu) -> float:
    """Entropy of the Schmidt vector (nats)."""
    return shannon_entropy(schmidt_vector(mu))


def _clip_to_table(c: float, table: EnvelopeTable) -> float:
    if c > table.c_max + CLAMP_TOL:
        raise DomainError(f"concurrence {c} exceeds c_max = {table.c_max} for m = {table.m}")
    return min(max(c, 0.0), table.c_max)


def eof_bounds(
    rho: BipartiteDensityMatrix,
    table: EnvelopeTable,
    components: Component = Component.ALL,
) -> EofBoundsReport:
    """``epsilon(c_lower) <= E(rho) <= eta(c_upper)`` for a bipartite state.

    The table must have been built for ``m = min(dim_a, dim_b)``.
    """
    m, n = sorted(rho.shape)
    if table.m != m:
        raise DimensionError(f"envelope table is for m = {table.m}, state has m = {m}")
    conc = concurrence_bounds(rho, components)
    per = {
        name: epsilon_of(table, _clip_to_table(max(val, 0.0), table))
        for name, val in conc.components().items()
        if not np.isnan(val)
    }
    lower = epsilon_of(table, _clip_to_table(conc.lower, table))
    upper = eta_of(table, _clip_to_table(conc.upper, table))
    return EofBoundsReport(m, n, conc, lower, upper, per, conc.flags)


def eof_bounds_from_concurrence(
    c_low: float, c_high: float, table: EnvelopeTable
) -> tuple[float, float]:
    """``(epsilon(c_low), eta(c_high))`` for externally supplied concurrence bounds."""
    if c_low < 0.0 or c_high < c_low:
        raise DomainError(f"need 0 <= c_low <= c_high, got ({c_low}, {c_high})")
    return epsilon_of(table, c_low), eta_of(table, c_high)


def wootters_concurrence(rho: BipartiteDensityMatrix) -> float:
    """Exact two-qubit concurrence.

    The ``lambda_i`` are the square roots of the eigenvalues of
    ``rho (s_y x s_y) rho* (s_y x s_y)``, obtained here from the Hermitian
    matrix ``sqrt(rho) rho_tilde sqrt(rho)``, which has the same spectrum.
    """
    if rho.shape != (2, 2):
        raise DimensionError(f"two-qubit formula needs 2 x 2 dims, got {rho.shape}")
    w, v = np.linalg.eigh(rho.mat)
    sq = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T
    tilde = SIGMA_YY @ rho.mat.conj() @ SIGMA_YY
    lam = np.linalg.eigvalsh(sq @ tilde @ sq)
    lam = np.sqrt(np.clip(lam, 0.0, None))[::-1]
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def two_qubit_eof_from_concurrence(c: float) -> float:
    c = min(max(c, 0.0), 1.0)
    gamma = 0.5 * (1.0 + np.sqrt(1.0 - c * c))
    return float(sum(-p * np.log(p) for p in (gamma, 1.0 - gamma) if p > 0.0))


def two_qubit_eof_exact(rho: BipartiteDensityMatrix) -> float:
    return two_qubit_eof_from_concurrence(wootters_concurrence(rho))
