"""Dense bipartite density matrices and the functionals used by the bounds.

Composite indices are A-major: basis state ``|i>_A |k>_B`` sits at row
``i * n + k``.  Logarithms are natural throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

HERM_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = 1e-10
EIG_FLOOR = 1e-12
SCHMIDT_TOL = 1e-12


class DimensionError(ValueError):
    """Declared subsystem dimensions do not match the data."""


class InvalidStateError(ValueError):
    """Matrix violates a density-matrix invariant.

    ``invariant`` names the violated property (``hermitian``, ``trace``,
    ``psd``, ``finite``, ``normalized``).
    """

    def __init__(self, invariant: str, message: str):
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant


class NumericalFailure(RuntimeError):
    pass


@dataclass(frozen=True)
class BipartiteDensityMatrix:
    """A validated density matrix on an ``m x n`` bipartite space.

    Parameters
    ----------
    mat : array_like
        ``(m*n, m*n)`` complex matrix, A-major composite index.
    dim_a, dim_b : int
        Subsystem dimensions.
    swapped : bool
        Set when the state was relabelled so that ``dim_a <= dim_b``.
    """

    mat: np.ndarray
    dim_a: int
    dim_b: int
    swapped: bool = field(default=False, compare=False)

    def __post_init__(self):
        mat = np.array(self.mat, dtype=complex)
        m, n = int(self.dim_a), int(self.dim_b)
        if m < 1 or n < 1:
            raise DimensionError(f"subsystem dimensions must be positive, got {m}x{n}")
        d = m * n
        if mat.shape != (d, d):
            raise DimensionError(f"expected a {d}x{d} matrix for dims {m}x{n}, got shape {mat.shape}")
        if not np.all(np.isfinite(mat)):
            raise InvalidStateError("finite", "matrix contains NaN or Inf")
        herm_err = np.max(np.abs(mat - mat.conj().T))
        if herm_err > HERM_TOL:
            raise InvalidStateError("hermitian", f"max |rho - rho^dag| = {herm_err:.3e}")
        tr = np.trace(mat).real
        if abs(tr - 1.0) > TRACE_TOL:
            raise InvalidStateError("trace", f"trace = {tr!r}")
        lam_min = np.linalg.eigvalsh(mat)[0]
        if lam_min < -PSD_TOL:
            raise InvalidStateError("psd", f"minimum eigenvalue = {lam_min:.3e}")
        mat.setflags(write=False)
        object.__setattr__(self, "mat", mat)
        object.__setattr__(self, "dim_a", m)
        object.__setattr__(self, "dim_b", n)

    @property
    def shape(self) -> tuple[int, int]:
        return self.dim_a, self.dim_b

    def swap(self) -> "BipartiteDensityMatrix":
        """Relabel A <-> B."""
        m, n = self.dim_a, self.dim_b
        t = self.mat.reshape(m, n, m, n).transpose(1, 0, 3, 2).reshape(m * n, m * n)
        return BipartiteDensityMatrix(t, n, m, swapped=not self.swapped)

    def canonical(self) -> "BipartiteDensityMatrix":
        """Return the state with the smaller subsystem labelled A."""
        return self.swap() if self.dim_a > self.dim_b else self


def as_state(rho, dims=None) -> BipartiteDensityMatrix:
    if isinstance(rho, BipartiteDensityMatrix):
        return rho
    if dims is None:
        raise DimensionError("dims required for a raw array")
    return BipartiteDensityMatrix(np.asarray(rho), *dims)


def projector(psi) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex).ravel()
    return np.outer(psi, psi.conj())


def pure_state(psi, dim_a: int, dim_b: int) -> BipartiteDensityMatrix:
    psi = np.asarray(psi, dtype=complex).ravel()
    norm = np.linalg.norm(psi)
    if abs(norm - 1.0) > 1e-10:
        raise InvalidStateError("normalized", f"||psi|| = {norm!r}")
    return BipartiteDensityMatrix(projector(psi), dim_a, dim_b)


def _blocks(rho: BipartiteDensityMatrix) -> np.ndarray:
    m, n = rho.dim_a, rho.dim_b
    return rho.mat.reshape(m, n, m, n)


def partial_trace(rho: BipartiteDensityMatrix, which: str = "B") -> np.ndarray:
    """Reduced state. ``which`` names the subsystem traced out ("A" or "B")."""
    t = _blocks(rho)
    if which == "B":
        return np.einsum("ikjk->ij", t)
    if which == "A":
        return np.einsum("ikil->kl", t)
    raise ValueError(f"which must be 'A' or 'B', got {which!r}")


def reduced_a(rho: BipartiteDensityMatrix) -> np.ndarray:
    return partial_trace(rho, "B")


def reduced_b(rho: BipartiteDensityMatrix) -> np.ndarray:
    return partial_trace(rho, "A")


def partial_transpose_a(rho: BipartiteDensityMatrix) -> np.ndarray:
    m, n = rho.dim_a, rho.dim_b
    return _blocks(rho).transpose(2, 1, 0, 3).reshape(m * n, m * n)


def realign(rho: BipartiteDensityMatrix) -> np.ndarray:
    """Realigned ``m^2 x n^2`` matrix, ``R[i*m+j, k*n+l] = rho[i*n+k, j*n+l]``."""
    m, n = rho.dim_a, rho.dim_b
    return _blocks(rho).transpose(0, 2, 1, 3).reshape(m * m, n * n)


def trace_norm(mat) -> float:
    mat = np.asarray(mat)
    if not np.all(np.isfinite(mat)):
        raise InvalidStateError("finite", "matrix contains NaN or Inf")
    try:
        s = np.linalg.svd(mat, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(f"SVD did not converge: {exc}") from exc
    return float(np.sum(s))


def purity(mat) -> float:
    """``Tr(M^2)`` as ``sum_ij M_ij M_ji``."""
    mat = np.asarray(mat)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise DimensionError(f"purity needs a square matrix, got shape {mat.shape}")
    return float(np.einsum("ij,ji->", mat, mat).real)


def hermitian_eigenvalues(mat, tol: float = HERM_TOL) -> np.ndarray:
    """Real spectrum of a Hermitian matrix, descending."""
    mat = np.asarray(mat, dtype=complex)
    err = np.max(np.abs(mat - mat.conj().T)) if mat.size else 0.0
    if err > tol:
        raise InvalidStateError("hermitian", f"max |M - M^dag| = {err:.3e}")
    try:
        w = np.linalg.eigvalsh(mat)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(f"eigensolver did not converge: {exc}") from exc
    return w[::-1]


def shannon_entropy(p) -> float:
    p = np.asarray(p, dtype=float)
    p = p[p > EIG_FLOOR]
    return float(-np.sum(p * np.log(p)))


def von_neumann_entropy(rho_reduced) -> float:
    """``-Tr(rho log rho)`` in nats; eigenvalues below 1e-12 contribute zero."""
    w = hermitian_eigenvalues(rho_reduced)
    if w.size and w[-1] < -PSD_TOL:
        raise InvalidStateError("psd", f"minimum eigenvalue = {w[-1]:.3e}")
    return shannon_entropy(w)


def schmidt_vector(coeffs) -> np.ndarray:
    """Validate and return a Schmidt vector (nonnegative, unit sum, descending)."""
    mu = np.asarray(coeffs, dtype=float).ravel()
    if np.any(mu < -SCHMIDT_TOL):
        raise InvalidStateError("nonnegative", f"negative Schmidt coefficient {mu.min()!r}")
    if abs(mu.sum() - 1.0) > SCHMIDT_TOL:
        raise InvalidStateError("normalized", f"Schmidt coefficients sum to {mu.sum()!r}")
    return np.sort(np.clip(mu, 0.0, None))[::-1]


def schmidt_coefficients(psi, dim_a: int, dim_b: int) -> np.ndarray:
    """Squared Schmidt coefficients of ``psi``, descending, length ``dim_a``.

    These are the eigenvalues of ``Tr_B |psi><psi|``.
    """
    psi = np.asarray(psi, dtype=complex).ravel()
    if psi.size != dim_a * dim_b:
        raise DimensionError(f"state has {psi.size} amplitudes, dims give {dim_a * dim_b}")
    norm = np.linalg.norm(psi)
    if abs(norm - 1.0) > 1e-10:
        raise InvalidStateError("normalized", f"||psi|| = {norm!r}")
    s = np.linalg.svd(psi.reshape(dim_a, dim_b), compute_uv=False)
    mu = np.zeros(dim_a)
    k = min(dim_a, s.size)
    mu[:k] = s[:k] ** 2
    return mu / mu.sum()


def pure_concurrence(mu) -> float:
    mu = np.asarray(mu, dtype=float)
    return float(np.sqrt(max(2.0 * (1.0 - np.sum(mu**2)), 0.0)))
