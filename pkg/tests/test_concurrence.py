import numpy as np
import pytest

from eofbounds import densmat as dm
from eofbounds.concurrence import Component, concurrence_bounds, concurrence_lower, concurrence_upper
from eofbounds.roof import random_density_matrix, random_pure_state
from eofbounds.states import bell_state, example2_state, maximally_mixed, werner

BELL = dm.pure_state(bell_state(), 2, 2)


def test_bell():
    b = concurrence_bounds(BELL)
    assert b.ppt_lower == pytest.approx(1.0, abs=1e-12)
    assert b.lower == pytest.approx(1.0, abs=1e-12)
    assert b.upper == pytest.approx(1.0, abs=1e-12)


def test_maximally_mixed():
    b = concurrence_bounds(maximally_mixed(3, 3))
    assert all(v <= 1e-12 for v in b.components().values())
    assert b.lower == 0.0
    assert b.upper == pytest.approx(np.sqrt(4 / 3), abs=1e-12)
    assert "purityA_clamped" in b.flags and "purityB_clamped" in b.flags


@pytest.mark.parametrize("a", np.linspace(0, 1, 11))
def test_example2_x01_closed_forms(a):
    b = concurrence_bounds(example2_state(a, 0.1))
    lo = 2 * np.sqrt(6.53 + 41.46 * a**2 - 1.71 * a**4) / (3 * (2 + 3 * a**2))
    up = np.sqrt(2 * (6.38 + 33.72 * a**2 + 3.42 * a**4) / 3) / (2 + 3 * a**2)
    assert b.purity_a_lower == pytest.approx(lo, rel=5e-3)
    assert b.purity_b_lower == pytest.approx(b.purity_a_lower, abs=1e-12)
    assert b.upper == pytest.approx(up, rel=5e-3)
    assert b.lower >= b.purity_a_lower


@pytest.mark.parametrize("f", [-1.0, -0.5, 0.0, 0.5, 1.0])
def test_werner_upper(f):
    assert concurrence_bounds(werner(3, f)).upper == pytest.approx(2 / np.sqrt(3), abs=1e-12)


def test_pure_states_pinch():
    for s in range(50):
        psi = random_pure_state(3, 4, seed=s)
        mu = dm.schmidt_coefficients(psi, 3, 4)
        b = concurrence_bounds(dm.pure_state(psi, 3, 4))
        c = dm.pure_concurrence(mu)
        assert b.upper == pytest.approx(c, abs=1e-10)
        assert b.purity_a_lower == pytest.approx(c, abs=1e-6)


def test_selector_masks_components():
    b = concurrence_bounds(BELL, Component.CCNR)
    assert np.isnan(b.ppt_lower) and np.isnan(b.purity_a_lower)
    assert b.ccnr_lower == pytest.approx(1.0, abs=1e-12)
    vals, lower, _ = concurrence_lower(BELL, Component.PURITY_A | Component.PURITY_B)
    assert np.isnan(vals["ppt"]) and np.isnan(vals["ccnr"])
    assert lower == pytest.approx(1.0, abs=1e-6)


def test_swap_canonicalises():
    rho = random_density_matrix(4, 2, seed=5)
    b = concurrence_bounds(rho)
    b2 = concurrence_bounds(dm.BipartiteDensityMatrix(rho.swap().mat, 2, 4))
    assert b.m == 2 and "swapped_AB" in b.flags and "swapped_AB" not in b2.flags
    assert b.lower == pytest.approx(b2.lower, abs=1e-12)
    assert b.upper == pytest.approx(b2.upper, abs=1e-12)


def test_one_dimensional_factor_rejected():
    with pytest.raises(dm.DimensionError):
        concurrence_bounds(maximally_mixed(1, 3))


def test_random_state_ordering():
    for s in range(500):
        rng = np.random.default_rng(s)
        m, n = (int(v) for v in rng.integers(2, 5, size=2))
        rho = random_density_matrix(m, n, int(rng.integers(1, m * n + 1)), seed=s)
        b = concurrence_bounds(rho)
        assert 0.0 <= b.lower <= b.upper + 1e-10
        ua, ub, up = concurrence_upper(rho)
        assert up == min(ua, ub)
