"""Brute-force convex-roof estimates and random test states.

Every ``K``-element decomposition of ``rho = sum_j lam_j |e_j><e_j|`` has the
form ``|psi~_i> = sum_j U_ij sqrt(lam_j) |e_j>`` with ``U`` a ``K x r``
isometry (the first ``r`` columns of a ``K x K`` unitary), and
``p_i = <psi~_i|psi~_i>``.  The search perturbs the mixing at random and
keeps improvements, so the value returned is an achievable ensemble average,
i.e. an upper estimate of the roof.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .densmat import BipartiteDensityMatrix, DimensionError

RANK_TOL = 1e-12
SHRINK = 0.7
PATIENCE = 8
MIN_STEP = 1e-6
MAX_ITER = 5000
INITIAL_STEP = 0.3


@dataclass(frozen=True)
class RoofEstimate:
    value: float
    objective: str
    ensemble_size: int
    restarts: int
    seed: int
    iterations: int
    converged: bool
    restart_values: tuple[float, ...] = ()


def random_density_matrix(m: int, n: int, rank: int | None = None, seed=None) -> BipartiteDensityMatrix:
    """``G G^dag / Tr(G G^dag)`` with ``G`` an ``(mn) x rank`` complex Ginibre matrix."""
    d = m * n
    rank = d if rank is None else rank
    if not 1 <= rank <= d:
        raise ValueError(f"rank must lie in [1, {d}], got {rank}")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((d, rank)) + 1j * rng.standard_normal((d, rank))
    rho = g @ g.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return BipartiteDensityMatrix(rho / np.trace(rho).real, m, n)


def random_pure_state(m: int, n: int, seed=None) -> np.ndarray:
    rng = np.random.default_rng(seed)
    psi = rng.standard_normal(m * n) + 1j * rng.standard_normal(m * n)
    return psi / np.linalg.norm(psi)


def _member_values(vecs: np.ndarray, m: int, n: int, kind: str) -> np.ndarray:
    """``p_i * measure(psi_i)`` for each unnormalized ensemble row."""
    p = np.einsum("ij,ij->i", vecs, vecs.conj()).real
    out = np.zeros(p.size)
    keep = p > 1e-300
    if not np.any(keep):
        return out
    psi = vecs[keep].reshape(-1, m, n) / np.sqrt(p[keep])[:, None, None]
    # reduced state of A; its spectrum is the squared Schmidt coefficients
    sv2 = np.clip(np.linalg.eigvalsh(psi @ psi.conj().transpose(0, 2, 1)), 0.0, None)
    if kind == "eof":
        safe = np.where(sv2 > 1e-300, sv2, 1.0)
        vals = -np.sum(np.where(sv2 > 1e-300, sv2 * np.log(safe), 0.0), axis=-1)
    else:
        vals = np.sqrt(np.clip(2.0 * (1.0 - np.sum(sv2**2, axis=-1)), 0.0, None))
    out[keep] = p[keep] * vals
    return out


def _random_unitary(k: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.standard_normal((k, k)) + 1j * rng.standard_normal((k, k))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def _draws(k: int, seq: np.random.SeedSequence, first: bool, padded: np.ndarray):
    """Starting ensemble and the full move schedule of one restart."""
    rng = np.random.default_rng(seq)
    vecs = padded.copy() if first else _random_unitary(k, rng) @ padded
    first_row = rng.integers(k, size=MAX_ITER)
    ij = np.column_stack([first_row, (first_row + 1 + rng.integers(k - 1, size=MAX_ITER)) % k])
    gauss = rng.standard_normal(MAX_ITER)
    phase = np.exp(2j * np.pi * rng.random(MAX_ITER))
    return vecs, ij, gauss, phase


def _search(basis: np.ndarray, k: int, m: int, n: int, kind: str, seqs, first_index: int = 0):
    """Adaptive random local search, all restarts advanced in lockstep.

    Restart ``r`` mixes the (zero-padded) eigen-ensemble with a ``K x K``
    unitary.  Each move is a random two-member rotation, which keeps the
    mixing unitary and changes only two ensemble members; its angle is
    ``step * N(0, 1)``.  A restart's trajectory depends only on its own
    pre-drawn schedule, so batching does not couple restarts.
    """
    nr = len(seqs)
    r = basis.shape[0]
    padded = np.zeros((k, basis.shape[1]), dtype=complex)
    padded[:r] = basis
    drawn = [_draws(k, s, first_index + q == 0, padded) for q, s in enumerate(seqs)]
    vecs = np.stack([d[0] for d in drawn])
    ij = np.stack([d[1] for d in drawn])
    gauss = np.stack([d[2] for d in drawn])
    phase = np.stack([d[3] for d in drawn])

    member = _member_values(vecs.reshape(nr * k, -1), m, n, kind).reshape(nr, k)
    step = np.full(nr, INITIAL_STEP)
    fails = np.zeros(nr, dtype=int)
    iters = np.zeros(nr, dtype=int)
    active = np.ones(nr, dtype=bool)
    for it in range(MAX_ITER):
        rows = np.flatnonzero(active)
        if rows.size == 0:
            break
        iters[rows] += 1
        i, j = ij[rows, it, 0], ij[rows, it, 1]
        theta = step[rows] * gauss[rows, it]
        c = np.cos(theta)[:, None]
        s = (np.sin(theta) * phase[rows, it])[:, None]
        vi, vj = vecs[rows, i], vecs[rows, j]
        new_i = c * vi - s * vj
        new_j = np.conj(s) * vi + c * vj
        vals = _member_values(np.concatenate([new_i, new_j]), m, n, kind).reshape(2, -1)
        delta = vals[0] + vals[1] - member[rows, i] - member[rows, j]
        ok = delta < 0.0
        acc = rows[ok]
        vecs[acc, i[ok]] = new_i[ok]
        vecs[acc, j[ok]] = new_j[ok]
        member[acc, i[ok]] = vals[0, ok]
        member[acc, j[ok]] = vals[1, ok]
        fails[acc] = 0
        rej = rows[~ok]
        fails[rej] += 1
        shrink = rej[fails[rej] >= PATIENCE]
        step[shrink] *= SHRINK
        fails[shrink] = 0
        active[rows[step[rows] < MIN_STEP]] = False

    # re-sum from scratch so the reported values carry no drift
    final = _member_values(vecs.reshape(nr * k, -1), m, n, kind).reshape(nr, k).sum(axis=1)
    return [(float(final[q]), int(iters[q]), bool(step[q] < MIN_STEP)) for q in range(nr)]


def convex_roof_estimate(
    rho: BipartiteDensityMatrix,
    objective: str = "eof",
    K: int | None = None,
    restarts: int = 8,
    seed: int = 0,
) -> RoofEstimate:
    """Minimize the ensemble-average entropy (or concurrence) over decompositions.

    Restart ``i`` draws from the ``i``-th child of ``SeedSequence(seed)``;
    restart 0 starts from the eigen-decomposition.  The result is the
    minimum over restarts, so it does not depend on execution order and
    never increases when restarts are added.
    """
    if objective not in ("eof", "concurrence"):
        raise ValueError(f"objective must be 'eof' or 'concurrence', got {objective!r}")
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    m, n = rho.dim_a, rho.dim_b
    w, v = np.linalg.eigh(rho.mat)
    keep = w > RANK_TOL
    rank = int(keep.sum())
    k = rank if K is None else int(K)
    if k < rank:
        raise DimensionError(f"ensemble size K = {k} is below rank(rho) = {rank}")
    if k > 4 * m * n:
        raise DimensionError(f"ensemble size K = {k} exceeds the cap 4*m*n = {4 * m * n}")
    # row j holds sqrt(lam_j) |e_j>, so (U @ basis)[i] is psi~_i
    basis = (v[:, keep] * np.sqrt(w[keep])).T

    if rank == 1:
        value = float(_member_values(basis, m, n, objective).sum())
        return RoofEstimate(value, objective, k, restarts, seed, 0, True, (value,))

    seqs = np.random.SeedSequence(seed).spawn(restarts)
    results = _search(basis, k, m, n, objective, seqs)
    vals = tuple(r[0] for r in results)
    best = int(np.argmin(vals))
    return RoofEstimate(
        value=vals[best],
        objective=objective,
        ensemble_size=k,
        restarts=restarts,
        seed=seed,
        iterations=sum(r[1] for r in results),
        converged=all(r[2] for r in results),
        restart_values=vals,
    )


def random_schmidt_vector(m: int, rng: np.random.Generator) -> np.ndarray:
    """Random Schmidt vector of random support, biased toward the simplex edges.

    Dirichlet concentrations are drawn on a log scale so that near-uniform,
    near-product and few-level vectors all appear.
    """
    k = int(rng.integers(1, m + 1))
    conc = 10.0 ** rng.uniform(-1.5, 1.5)
    mu = np.zeros(m)
    mu[:k] = rng.dirichlet(np.full(k, conc))
    return np.sort(mu)[::-1]
