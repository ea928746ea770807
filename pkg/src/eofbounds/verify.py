"""Property suites behind ``eofbounds verify``.

Each suite returns a :class:`SuiteResult`; on the first violation it keeps the
offending state so the caller can write it out for triage.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .concurrence import concurrence_bounds
from .densmat import BipartiteDensityMatrix, pure_concurrence, pure_state, shannon_entropy
from .envelope import (
    LOG2,
    LOG3,
    big_x,
    big_y,
    build_envelopes,
    c_max,
    epsilon_m3_closed,
    eta_m3_closed,
    segment_rules,
)
from .eof import eof_bounds, eof_bounds_from_concurrence, two_qubit_eof_exact
from .roof import convex_roof_estimate, random_density_matrix, random_schmidt_vector
from .states import example2_functionals, example2_state, pure_from_schmidt, werner, werner_concurrence_hint

SUITES = ("two-qubit", "pure-sandwich", "envelope-hull", "roof-consistency", "fixtures")


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""
    known: bool = False  # documented discrepancy with the published numbers


@dataclass
class SuiteResult:
    suite: str
    checks: list[Check] = field(default_factory=list)
    offender: BipartiteDensityMatrix | None = None

    def add(self, name: str, ok: bool, detail: str = "", known: bool = False) -> bool:
        self.checks.append(Check(name, bool(ok), detail, known))
        return bool(ok)

    def passed(self, strict: bool = False) -> bool:
        return all(c.ok or (c.known and not strict) for c in self.checks)


def two_qubit(n: int = 1000, seed: int = 42, slack: float = 1e-9) -> SuiteResult:
    res = SuiteResult("two-qubit")
    table = build_envelopes(2)
    seqs = np.random.SeedSequence(seed).spawn(n)
    worst = 0.0
    for i, s in enumerate(seqs):
        rho = random_density_matrix(2, 2, seed=s)
        rep = eof_bounds(rho, table)
        e = two_qubit_eof_exact(rho)
        gap = max(rep.eof_lower - e, e - rep.eof_upper)
        worst = max(worst, gap)
        if gap > slack:
            res.offender = rho
            res.add(f"state {i}", False, f"lower={rep.eof_lower:.12g} exact={e:.12g} upper={rep.eof_upper:.12g}")
            return res
    res.add(f"{n} states sandwiched", True, f"worst excess {worst:.3e}")
    return res


def pure_sandwich(n: int = 1000, seed: int = 42, slack: float = 1e-8, dims=(2, 3, 4, 5)) -> SuiteResult:
    res = SuiteResult("pure-sandwich")
    rng = np.random.default_rng(seed)
    for m in dims:
        worst = -np.inf
        for _ in range(n):
            mu = random_schmidt_vector(m, rng)
            c = min(pure_concurrence(mu), c_max(m))
            H = shannon_entropy(mu)
            excess = max(big_y(m, c) - H, H - big_x(m, c))
            worst = max(worst, excess)
            if excess > slack:
                res.offender = pure_state(pure_from_schmidt(mu, m), m, m)
                res.add(f"m={m}", False, f"mu={mu.tolist()} c={c:.12g} H={H:.12g}")
                return res
        res.add(f"m={m}", True, f"{n} vectors, worst excess {worst:.3e}")
    return res


def envelope_hull(dims=range(2, 7), grid_size: int = 4096) -> SuiteResult:
    res = SuiteResult("envelope-hull")
    for m in dims:
        t = build_envelopes(m, grid_size)
        ex, ey = t.eps_vertices.T
        hx, hy = t.eta_vertices.T
        es = np.diff(ey) / np.diff(ex)
        hs = np.diff(hy) / np.diff(hx)
        c = t.grid
        res.add(f"m={m} epsilon convex", np.all(np.diff(es) >= -1e-12))
        res.add(f"m={m} epsilon nondecreasing", np.all(es >= -1e-12))
        res.add(f"m={m} epsilon <= Y", np.all(t.epsilon(c) <= t.y_vals + 1e-9))
        res.add(f"m={m} eta concave", np.all(np.diff(hs) <= 1e-12))
        res.add(f"m={m} eta nondecreasing", np.all(hs >= -1e-12))
        res.add(f"m={m} eta >= X", np.all(t.eta(c) >= t.x_vals - 1e-9))
        end = np.log(m)
        res.add(
            f"m={m} endpoints",
            abs(t.epsilon(0.0)) < 1e-9
            and abs(t.eta(0.0)) < 1e-9
            and abs(t.epsilon(t.c_max) - end) < 1e-9
            and abs(t.eta(t.c_max) - end) < 1e-9,
        )
    return res


def roof_consistency(n: int = 20, seed: int = 42, K: int = 12, restarts: int = 16) -> SuiteResult:
    res = SuiteResult("roof-consistency")
    table = build_envelopes(3)
    rng = np.random.default_rng(seed)
    seqs = np.random.SeedSequence(seed).spawn(n)
    for i, s in enumerate(seqs):
        rank = int(rng.integers(2, 5))
        rho = random_density_matrix(3, 3, rank, seed=s)
        rep = eof_bounds(rho, table)
        est = convex_roof_estimate(rho, "eof", K=K, restarts=restarts, seed=i)
        if est.value < rep.eof_lower - 1e-9:
            res.offender = rho
            res.add(f"state {i}", False, f"roof={est.value:.12g} < eof_lower={rep.eof_lower:.12g}")
            return res
    res.add(f"{n} states", True, "roof estimate >= epsilon(c_lower)")
    return res


def fixtures() -> SuiteResult:
    """Check the published numbers. Known discrepancies are marked, not hidden."""
    res = SuiteResult("fixtures")
    t3 = build_envelopes(3)
    rules = segment_rules(3)

    rep = eof_bounds(werner(3, -0.5), t3)
    res.add("werner d=3: 1 - Tr(rho_A^2) = 2/3", abs(rep.conc.upper - np.sqrt(4.0 / 3.0)) < 1e-12)
    res.add("werner d=3: eta(c_upper) ~ 1.099", abs(rep.eof_upper - 1.099) < 1e-3, f"{rep.eof_upper:.6f}")
    for f in (-1.0, -0.75, -0.5, -0.25):
        _, up = eof_bounds_from_concurrence(0.0, werner_concurrence_hint(3, f), t3)
        res.add(
            f"werner d=3 f={f}: eta(-f) = -f log 2",
            abs(up + f * LOG2) < 1e-9,
            f"hull eta={up:.6f}, segment-wise eta={rules.eta(-f):.6f}, -f log 2={-f * LOG2:.6f}",
            known=True,
        )

    res.add("epsilon_m3(1) = log 2", abs(epsilon_m3_closed(1.0) - LOG2) < 1e-12)
    res.add("eta_m3(2/sqrt3) = log 3", abs(eta_m3_closed(2 / np.sqrt(3)) - LOG3) < 1e-12)
    res.add("hull epsilon(1) = log 2", abs(t3.epsilon(1.0) - LOG2) < 1e-9)
    res.add(
        "hull eta(1) = log 2",
        abs(t3.eta(1.0) - LOG2) < 1e-9,
        f"hull eta(1)={t3.eta(1.0):.6f}; mu=(2/3,1/6,1/6) has c=1 and entropy {big_x(3, 1.0):.6f}",
        known=True,
    )
    res.add("X(1) = F11(1) = log 2 (m=3)", abs(big_x(3, 1.0) - LOG2) < 1e-9, f"max entropy at c=1 is {big_x(3, 1.0):.6f}", known=True)
    res.add("Y(1) = log 2 (m=3)", abs(big_y(3, 1.0) - LOG2) < 1e-12)

    a = np.linspace(0.0, 1.0, 41)
    ok = True
    for av in a:
        fx = example2_functionals(av, 0.1)
        lo = np.sqrt(2 * fx["purity_gap"])
        up = np.sqrt(2 * fx["one_minus_purity_a"])
        lo_ref = 2 * np.sqrt(6.53 + 41.46 * av**2 - 1.71 * av**4) / (3 * (2 + 3 * av**2))
        up_ref = np.sqrt(2 * (6.38 + 33.72 * av**2 + 3.42 * av**4) / 3) / (2 + 3 * av**2)
        ok &= abs(lo - lo_ref) <= 5e-3 * lo_ref and abs(up - up_ref) <= 5e-3 * up_ref
    res.add("two-param family, x=0.1 numeric coefficients", ok)

    ppt = [concurrence_bounds(example2_state(av, 0.6)).ppt_lower for av in np.arange(0.0, 1.0 + 1e-9, 0.005)]
    sign_change = [av for av, p, q in zip(np.arange(0.0, 1.0, 0.005), ppt[:-1], ppt[1:]) if p <= 0 < q]
    res.add(
        "two-param family, x=0.6: PPT bound turns positive near a=0.205",
        any(0.195 <= s <= 0.215 for s in sign_change),
        f"PPT component ranges over [{min(ppt):.4f}, {max(ppt):.4f}]",
        known=True,
    )

    okx = all(
        (lambda r: r.component_lower["ppt"] >= r.component_lower["purityA"])(eof_bounds(example2_state(av, 0.1), t3))
        for av in np.arange(0.5, 0.66 + 1e-9, 0.005)
    )
    res.add("x=0.1, a in [0.5,0.66]: eps(PPT) >= eps(purity)", okx)
    oky = all(
        (lambda r: r.component_lower["purityA"] > r.component_lower["ppt"])(eof_bounds(example2_state(av, 0.001), t3))
        for av in np.arange(0.57, 0.59 + 1e-9, 0.005)
    )
    res.add("x=0.001, a in [0.57,0.59]: eps(purity) > eps(PPT)", oky)
    return res


def run_suite(name: str, n: int | None = None, seed: int = 42) -> SuiteResult:
    if name == "two-qubit":
        return two_qubit(n or 1000, seed)
    if name == "pure-sandwich":
        return pure_sandwich(n or 1000, seed)
    if name == "envelope-hull":
        return envelope_hull()
    if name == "roof-consistency":
        return roof_consistency(n or 20, seed)
    if name == "fixtures":
        return fixtures()
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
