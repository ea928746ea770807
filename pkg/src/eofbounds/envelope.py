"""Entropy-versus-concurrence envelopes.

For pure states of Schmidt rank at most ``m`` with concurrence ``c`` the
entropy lies between ``Y(c)`` and ``X(c)``.  Both extremes are attained on
Schmidt vectors with only two distinct nonzero values: ``n1`` entries equal
to ``alpha`` and ``n2`` equal to ``beta``, whose entropy is
``F(n1, n2; c) = n1 h(alpha) + n2 h(beta)``.

``epsilon`` (largest nondecreasing convex function below ``Y``) and ``eta``
(smallest nondecreasing concave function above ``X``) turn concurrence
bounds into entanglement-of-formation bounds.  They are built as the lower
convex hull and upper concave hull of sampled curves.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

DISC_TOL = 1e-12
CLAMP_TOL = 1e-9
DEFAULT_GRID = 4096

LOG2 = np.log(2.0)
LOG3 = np.log(3.0)
SQRT3 = np.sqrt(3.0)


class DomainError(ValueError):
    pass


def h(x):
    """``-x log x`` with ``h(0) = 0``, for ``x`` in [0, 1]."""
    x = np.asarray(x, dtype=float)
    if np.any(x < 0.0) or np.any(x > 1.0) or np.any(np.isnan(x)):
        raise DomainError("h(x) needs 0 <= x <= 1")
    safe = np.where(x > 0.0, x, 1.0)
    out = np.where(x > 0.0, -x * np.log(safe), 0.0)
    return out if out.ndim else float(out)


def c_max(m: int) -> float:
    """Largest concurrence of an ``m``-level pure state."""
    return float(np.sqrt(2.0 * (m - 1) / m))


def segment_edges(m: int) -> np.ndarray:
    """``[0, 1, 2/sqrt(3), ..., c_max(m)]``: edges of the Schmidt-rank segments."""
    t = np.arange(m)
    return np.sqrt(2.0 * t / (t + 1.0))


def alpha_beta(n1, n2, c):
    """The two Schmidt values of the ``(n1, n2)`` family at concurrence ``c``.

    ``alpha`` is the larger root, so ``n1 alpha + n2 beta = 1`` and
    ``n1 alpha^2 + n2 beta^2 = 1 - c^2/2``.

    Raises
    ------
    DomainError
        If the discriminant or ``beta`` is negative beyond rounding, i.e.
        ``c`` lies outside the range where the family exists.
    """
    n1 = np.asarray(n1, dtype=float)
    n2 = np.asarray(n2, dtype=float)
    c = np.asarray(c, dtype=float)
    if np.any(n1 < 1) or np.any(n2 < 1):
        raise DomainError("n1 and n2 must be >= 1")
    disc = n1**2 - n1 * (n1 + n2) * (1.0 - n2 * (1.0 - c**2 / 2.0))
    if np.any(disc < -DISC_TOL):
        raise DomainError(f"negative discriminant: c outside the domain of F({n1}, {n2})")
    alpha = (n1 + np.sqrt(np.clip(disc, 0.0, None))) / (n1 * (n1 + n2))
    beta = (1.0 - n1 * alpha) / n2
    if np.any(beta < -DISC_TOL):
        raise DomainError(f"negative beta: c outside the domain of F({n1}, {n2})")
    beta = np.clip(beta, 0.0, None)
    alpha = np.clip(alpha, 0.0, 1.0)
    if alpha.ndim == 0:
        return float(alpha), float(beta)
    return alpha, beta


def f_value(n1, n2, c):
    alpha, beta = alpha_beta(n1, n2, c)
    return np.asarray(n1) * h(alpha) + np.asarray(n2) * h(beta)


def _check_c(m: int, c) -> np.ndarray:
    if m < 2:
        raise DomainError("m must be >= 2")
    c = np.asarray(c, dtype=float)
    cm = c_max(m)
    if np.any(c < 0.0) or np.any(c > cm + DISC_TOL) or np.any(np.isnan(c)):
        raise DomainError(f"concurrence must lie in [0, {cm}] for m = {m}")
    return np.clip(c, 0.0, cm)


def segment_index(m: int, c):
    """Segment ``t`` with ``c`` in ``(sqrt(2(t-1)/t), sqrt(2t/(t+1))]``; ``c = 0`` maps to 1."""
    c = _check_c(m, c)
    t = np.searchsorted(segment_edges(m), c, side="left")
    t = np.clip(t, 1, m - 1)
    return t if t.ndim else int(t)


def big_y(m: int, c):
    """Minimum pure-state entropy at concurrence ``c``: ``F(t, 1)`` on segment ``t``."""
    c = _check_c(m, c)
    t = np.asarray(segment_index(m, c))
    val = f_value(t, np.ones_like(t), c)
    return val if np.ndim(val) else float(val)


def big_x(m: int, c, piecewise: bool = False):
    """Maximum pure-state entropy at concurrence ``c``.

    Takes the largest ``F(1, t)`` over every ``t <= m - 1`` whose family
    reaches ``c``.  With ``piecewise=True`` only ``F(1, t)`` on segment ``t``
    is used; that curve is *not* the maximum (``F(1, m-1)`` dominates it
    away from the last segment) and is kept for comparison only.
    """
    c = _check_c(m, c)
    t_seg = np.asarray(segment_index(m, c))
    if piecewise:
        val = f_value(np.ones_like(t_seg), t_seg, c)
        return val if np.ndim(val) else float(val)
    best = np.full(c.shape, -np.inf)
    for t in range(1, m):
        ok = t_seg <= t
        if not np.any(ok):
            continue
        vals = np.full(c.shape, -np.inf)
        vals[ok] = f_value(1, t, c[ok]) if c.ndim else f_value(1, t, c)
        best = np.maximum(best, vals)
    return best if best.ndim else float(best)


def _lower_hull(px: np.ndarray, py: np.ndarray) -> np.ndarray:
    """Indices of the lower convex hull of points sorted by ``px``."""
    hull: list[int] = []
    for i in range(px.size):
        while len(hull) >= 2:
            a, b = hull[-2], hull[-1]
            cross = (px[b] - px[a]) * (py[i] - py[a]) - (py[b] - py[a]) * (px[i] - px[a])
            if cross <= 0.0:
                hull.pop()
            else:
                break
        hull.append(i)
    return np.array(hull)


def _monotone_from_min(vx: np.ndarray, vy: np.ndarray):
    # convex minorant: flatten everything left of its minimum
    k = int(np.argmin(vy))
    if k == 0:
        return vx, vy
    vy = vy.copy()
    vy[:k] = vy[k]
    return np.concatenate([[vx[0]], vx[k:]]), np.concatenate([[vy[k]], vy[k:]])


def _monotone_to_max(vx: np.ndarray, vy: np.ndarray):
    # concave majorant: flatten everything right of its maximum
    k = int(np.argmax(vy))
    if k == vy.size - 1:
        return vx, vy
    return np.concatenate([vx[: k + 1], [vx[-1]]]), np.concatenate([vy[: k + 1], [vy[k]]])


@dataclass(frozen=True)
class EnvelopeTable:
    """Sampled ``X``, ``Y`` and the hull vertices of ``epsilon`` and ``eta``.

    Vertex arrays have shape ``(k, 2)`` with columns ``(c, value)``.
    """

    m: int
    c_max: float
    grid: np.ndarray
    x_vals: np.ndarray
    y_vals: np.ndarray
    eps_vertices: np.ndarray
    eta_vertices: np.ndarray
    method: str = field(default="hull")

    def epsilon(self, c):
        return epsilon_of(self, c)

    def eta(self, c):
        return eta_of(self, c)


def envelope_grid(m: int, grid_size: int = DEFAULT_GRID) -> np.ndarray:
    """Uniform grid on ``(0, c_max]`` plus every segment edge."""
    cm = c_max(m)
    uniform = cm * np.arange(1, grid_size + 1) / grid_size
    grid = np.union1d(uniform, segment_edges(m)[1:])
    keep = np.concatenate([[True], np.diff(grid) > 1e-14])
    grid = grid[keep]
    grid[-1] = cm
    return grid


def build_envelopes(m: int, grid_size: int = DEFAULT_GRID) -> EnvelopeTable:
    """Construct ``epsilon`` and ``eta`` for dimension ``m`` by hulls of sampled curves."""
    if m < 2:
        raise DomainError("m must be >= 2")
    if grid_size < 64:
        raise DomainError("grid_size must be >= 64")
    grid = envelope_grid(m, grid_size)
    y_vals = np.asarray(big_y(m, grid))
    x_vals = np.asarray(big_x(m, grid))

    px = np.concatenate([[0.0], grid])
    py = np.concatenate([[0.0], y_vals])
    idx = _lower_hull(px, py)
    ex, ey = _monotone_from_min(px[idx], py[idx])

    qx = np.concatenate([[0.0], grid])
    qy = np.concatenate([[0.0], x_vals])
    idx = _lower_hull(qx, -qy)
    hx, hy = _monotone_to_max(qx[idx], qy[idx])

    for arr in (grid, x_vals, y_vals):
        arr.setflags(write=False)
    eps = np.column_stack([ex, ey])
    eta = np.column_stack([hx, hy])
    eps.setflags(write=False)
    eta.setflags(write=False)
    return EnvelopeTable(m, c_max(m), grid, x_vals, y_vals, eps, eta, "hull")


def _clamp_query(table: EnvelopeTable, c) -> np.ndarray:
    c = np.asarray(c, dtype=float)
    if np.any(np.isnan(c)) or np.any(c < 0.0) or np.any(c > table.c_max + CLAMP_TOL):
        raise DomainError(
            f"concurrence must lie in [0, {table.c_max}] for m = {table.m}; got {c}"
        )
    return np.minimum(c, table.c_max)


def epsilon_of(table: EnvelopeTable, c):
    """Evaluate ``epsilon``: hull interpolation, capped by ``Y`` itself.

    Where the hull follows the sampled curve, linear interpolation of a
    convex curve overshoots it by ``O(step^2)``; the cap keeps the result a
    true minorant of ``Y`` between grid points.
    """
    c = _clamp_query(table, c)
    v = np.interp(c, table.eps_vertices[:, 0], table.eps_vertices[:, 1])
    v = np.minimum(v, big_y(table.m, c))
    return v if np.ndim(v) else float(v)


def eta_of(table: EnvelopeTable, c):
    """Evaluate ``eta``: hull interpolation, floored by ``X`` itself."""
    c = _clamp_query(table, c)
    v = np.interp(c, table.eta_vertices[:, 0], table.eta_vertices[:, 1])
    v = np.maximum(v, big_x(table.m, c))
    return v if np.ndim(v) else float(v)


_C3 = 2.0 / SQRT3
_EPS3_SLOPE = SQRT3 * np.log(1.5) / (2.0 - SQRT3)
_ETA3_SLOPE = (2.0 * np.log(1.5) + np.log(6.0) - 3.0 * LOG3) / (3.0 * (SQRT3 - 2.0))


def _check_m3(c) -> np.ndarray:
    c = np.asarray(c, dtype=float)
    if np.any(c < 0.0) or np.any(c > _C3 + CLAMP_TOL) or np.any(np.isnan(c)):
        raise DomainError("m = 3 closed forms need 0 <= c <= 2/sqrt(3)")
    return np.minimum(c, _C3)


def epsilon_m3_closed(c):
    """Piecewise closed form of ``epsilon`` for ``m = 3``.

    ``F(1, 1)`` up to ``c = 1``, then the chord to ``(2/sqrt(3), log 3)``.
    """
    c = _check_m3(c)
    low = np.minimum(c, 1.0)
    v = np.where(c <= 1.0, f_value(1, 1, low), _EPS3_SLOPE * (c - 1.0) + LOG2)
    return v if v.ndim else float(v)


def eta_m3_closed(c):
    """Segment-wise upper envelope for ``m = 3``: ``c log 2`` up to ``c = 1``,
    then the chord of ``F(1, 2)`` from ``c = 1`` to ``2/sqrt(3)``.

    This function is discontinuous at ``c = 1`` and is not a majorant of the
    true maximum entropy: ``mu = (2/3, 1/6, 1/6)`` has ``c = 1`` and entropy
    ``F(1, 2; 1) ~ 0.8676 > log 2``.  Use :func:`build_envelopes` for bounds.
    """
    c = _check_m3(c)
    v = np.where(c <= 1.0, c * LOG2, _ETA3_SLOPE * (SQRT3 * c - 2.0) + LOG3)
    return v if v.ndim else float(v)


@dataclass(frozen=True)
class SegmentRule:
    t: int
    lo: float
    hi: float
    x_curvature: str  # sign of F''(1, t): "convex" | "concave" | "mixed"
    y_curvature: str  # sign of F''(t, 1)
    eta_rule: str  # "curve" | "chord"
    eps_rule: str
    x_d2_range: tuple[float, float]
    y_d2_range: tuple[float, float]


@dataclass(frozen=True)
class SegmentClassification:
    """Per-segment curvature signs and the resulting curve/chord choices.

    This reproduces the segment-by-segment construction; it ignores what
    happens across segment edges, so ``epsilon``/``eta`` here need not be
    globally convex/concave.  The hull construction is authoritative.
    """

    m: int
    segments: tuple[SegmentRule, ...]
    flagged: tuple[int, ...]

    def _piece(self, c, upper: bool):
        c = _check_c(self.m, c)
        t = np.atleast_1d(segment_index(self.m, c))
        cc = np.atleast_1d(c)
        out = np.empty_like(cc)
        for seg in self.segments:
            sel = t == seg.t
            if not np.any(sel):
                continue
            n1, n2 = (1, seg.t) if upper else (seg.t, 1)
            rule = seg.eta_rule if upper else seg.eps_rule
            if rule == "curve":
                out[sel] = f_value(n1, n2, cc[sel])
            else:
                f_lo = f_value(n1, n2, seg.lo)
                f_hi = f_value(n1, n2, seg.hi)
                out[sel] = f_hi + (f_hi - f_lo) * (cc[sel] - seg.hi) / (seg.hi - seg.lo)
        return out if np.ndim(c) else float(out[0])

    def epsilon(self, c):
        return self._piece(c, upper=False)

    def eta(self, c):
        return self._piece(c, upper=True)


def _curvature(f, lo: float, hi: float, step: float, samples: int = 64, tol: float = 1e-6):
    cs = np.linspace(lo + 2 * step, hi - 2 * step, samples)
    d2 = (f(cs + step) - 2.0 * f(cs) + f(cs - step)) / step**2
    lo_d2, hi_d2 = float(d2.min()), float(d2.max())
    if lo_d2 >= -tol:
        kind = "convex"
    elif hi_d2 <= tol:
        kind = "concave"
    else:
        kind = "mixed"
    return kind, (lo_d2, hi_d2)


def segment_rules(m: int, fd_step: float = 1e-4) -> SegmentClassification:
    """Classify each segment by the curvature of ``F(1, t)`` and ``F(t, 1)``.

    Convex ``F(1, t)`` means ``eta`` takes the chord between the segment
    edges, concave means it follows the curve; for ``epsilon`` and
    ``F(t, 1)`` it is the other way round.  Curvature is estimated by
    central second differences.
    """
    if m < 2:
        raise DomainError("m must be >= 2")
    edges = segment_edges(m)
    segments = []
    flagged = []
    for t in range(1, m):
        lo, hi = float(edges[t - 1]), float(edges[t])
        xk, xr = _curvature(lambda c: f_value(1, t, c), lo, hi, fd_step)
        yk, yr = _curvature(lambda c: f_value(t, 1, c), lo, hi, fd_step)
        if "mixed" in (xk, yk):
            flagged.append(t)
        segments.append(
            SegmentRule(
                t=t,
                lo=lo,
                hi=hi,
                x_curvature=xk,
                y_curvature=yk,
                eta_rule="chord" if xk == "convex" else "curve",
                eps_rule="curve" if yk == "convex" else "chord",
                x_d2_range=xr,
                y_d2_range=yr,
            )
        )
    return SegmentClassification(m, tuple(segments), tuple(flagged))
