"""Example state families and fixture formulas."""

from __future__ import annotations

import numpy as np

from .densmat import BipartiteDensityMatrix, DimensionError, projector, schmidt_vector
from .envelope import DomainError


def flip_operator(d: int) -> np.ndarray:
    """Swap operator ``F |i>|k> = |k>|i>`` on ``d x d``."""
    f = np.zeros((d * d, d * d))
    for i in range(d):
        for k in range(d):
            f[k * d + i, i * d + k] = 1.0
    return f


def werner(d: int, f: float) -> BipartiteDensityMatrix:
    """``U x U``-invariant state with flip expectation ``Tr(rho F) = f``."""
    if d < 2:
        raise DomainError("Werner states need d >= 2")
    if not -1.0 <= f <= 1.0:
        raise DomainError(f"f must lie in [-1, 1], got {f}")
    mat = ((d - f) * np.eye(d * d) + (d * f - 1.0) * flip_operator(d)) / (d**3 - d)
    return BipartiteDensityMatrix(mat, d, d)


def werner_concurrence_hint(d: int, f: float) -> float:
    """``max(0, -f)`` for ``d = 3``.

    This is the concurrence value that, fed to the m = 3 segment-wise upper
    envelope, yields ``-f log 2``.  It is a hint, not a computed bound.
    """
    if d != 3:
        raise NotImplementedError("the concurrence hint is only provided for d = 3")
    if not -1.0 <= f <= 1.0:
        raise DomainError(f"f must lie in [-1, 1], got {f}")
    return max(0.0, -f)


def example2_vector(a: float) -> np.ndarray:
    psi = np.zeros(9)
    psi[0] = a
    psi[4] = psi[8] = 1.0 / np.sqrt(3.0)
    return psi / np.sqrt(a * a + 2.0 / 3.0)


def example2_state(a: float, x: float) -> BipartiteDensityMatrix:
    """``(x/9) I + (1 - x) |psi><psi|`` on 3 x 3 with
    ``psi ~ (a, 0, 0, 0, 1/sqrt(3), 0, 0, 0, 1/sqrt(3))``."""
    if not (0.0 <= a <= 1.0 and 0.0 <= x <= 1.0):
        raise DomainError(f"need a, x in [0, 1], got a={a}, x={x}")
    mat = (x / 9.0) * np.eye(9) + (1.0 - x) * projector(example2_vector(a))
    return BipartiteDensityMatrix(mat, 3, 3)


def example2_functionals(a: float, x: float) -> dict[str, float]:
    """Closed forms of ``Tr(rho^2) - Tr(rho_A^2)`` and ``1 - Tr(rho_A^2)``.

    Evaluated directly from the polynomial expressions; no matrices are built.
    Both hold for subsystem B as well by symmetry.
    """
    a2, a4 = a * a, a**4
    denom = (2.0 + 3.0 * a2) ** 2
    gap = (
        2.0
        * (9.0 - 26.0 * x + 9.0 * a4 * (-2.0 + x) * x + 13.0 * x * x + 6.0 * a2 * (9.0 - 22.0 * x + 11.0 * x * x))
        / (9.0 * denom)
    )
    one_minus = (
        6.0 + 4.0 * x - 18.0 * a4 * (-2.0 + x) * x - 2.0 * x * x + 12.0 * a2 * (3.0 - 2.0 * x + x * x)
    ) / (3.0 * denom)
    return {"purity_gap": gap, "one_minus_purity_a": one_minus}


def pure_from_schmidt(mu, n: int) -> np.ndarray:
    """Amplitudes of ``sum_i sqrt(mu_i) |ii>`` in ``m x n``, ``m = len(mu)``."""
    mu = schmidt_vector(mu)
    m = mu.size
    if n < m:
        raise DimensionError(f"need n >= len(mu) = {m}, got n = {n}")
    psi = np.zeros(m * n, dtype=complex)
    for i, p in enumerate(mu):
        psi[i * n + i] = np.sqrt(p)
    return psi


def bell_state() -> np.ndarray:
    return pure_from_schmidt([0.5, 0.5], 2)


def maximally_mixed(m: int, n: int) -> BipartiteDensityMatrix:
    return BipartiteDensityMatrix(np.eye(m * n) / (m * n), m, n)
