import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from eofbounds import envelope as env
from eofbounds.densmat import pure_concurrence, shannon_entropy

LOG2, LOG3 = np.log(2), np.log(3)
C3 = 2 / np.sqrt(3)


def binary_entropy_of_c(c):
    a = (1 + np.sqrt(1 - c**2)) / 2
    return -a * np.log(a) - np.where(a < 1, (1 - a) * np.log(np.where(a < 1, 1 - a, 1)), 0)


class TestPrimitives:
    def test_h(self):
        assert env.h(0.0) == 0.0
        assert env.h(1.0) == 0.0
        assert env.h(0.5) == pytest.approx(LOG2 / 2)
        with pytest.raises(env.DomainError):
            env.h(-0.1)

    def test_c_max_and_edges(self):
        assert env.c_max(3) == pytest.approx(C3)
        np.testing.assert_allclose(env.segment_edges(3), [0, 1, C3])

    def test_alpha_beta_examples(self):
        assert env.alpha_beta(1, 1, 1.0) == pytest.approx((0.5, 0.5))
        assert env.alpha_beta(1, 2, C3) == pytest.approx((1 / 3, 1 / 3), abs=1e-7)
        assert env.alpha_beta(2, 1, 1.0) == pytest.approx((0.5, 0.0), abs=1e-12)

    def test_alpha_beta_outside_domain(self):
        with pytest.raises(env.DomainError):
            env.alpha_beta(1, 1, 1.2)
        with pytest.raises(env.DomainError):
            env.alpha_beta(2, 1, 0.5)

    @settings(max_examples=200, deadline=None)
    @given(st.integers(1, 5), st.integers(1, 5), st.floats(0.0, 1.0))
    def test_alpha_beta_constraints(self, n1, n2, u):
        lo = np.sqrt(2 * (n1 - 1) / n1)
        hi = np.sqrt(2 * (n1 + n2 - 1) / (n1 + n2))
        c = lo + u * (hi - lo)
        a, b = env.alpha_beta(n1, n2, c)
        assert n1 * a + n2 * b == pytest.approx(1.0, abs=1e-10)
        assert n1 * a * a + n2 * b * b == pytest.approx(1 - c * c / 2, abs=1e-10)
        assert a >= b - 1e-12

    def test_f_values(self):
        assert env.f_value(1, 1, 1.0) == pytest.approx(LOG2)
        assert env.f_value(1, 2, C3) == pytest.approx(LOG3, abs=1e-7)
        assert env.f_value(1, 2, 1.0) == pytest.approx(2 / 3 * np.log(1.5) + np.log(6) / 3, abs=1e-12)
        assert env.f_value(1, 2, 1.0) == pytest.approx(0.867563, abs=1e-6)


class TestLevelSets:
    def test_y_values(self):
        assert env.big_y(3, 1.0) == pytest.approx(LOG2)
        assert env.big_y(3, C3) == pytest.approx(LOG3, abs=1e-7)
        assert env.big_y(4, 0.0) == 0.0
        assert env.big_y(3, 1.1) == pytest.approx(env.f_value(2, 1, 1.1))

    def test_x_is_true_maximum(self):
        # F(1, m-1) exceeds F(1, 1) at c = 1: mu = (2/3, 1/6, 1/6)
        mu = [2 / 3, 1 / 6, 1 / 6]
        assert pure_concurrence(mu) == pytest.approx(1.0)
        assert env.big_x(3, 1.0) == pytest.approx(shannon_entropy(mu), abs=1e-12)
        assert env.big_x(3, 1.0, piecewise=True) == pytest.approx(LOG2)

    def test_y_below_x(self):
        for m in (3, 4, 5):
            c = np.linspace(0, env.c_max(m), 1000)
            assert np.all(env.big_y(m, c) <= env.big_x(m, c) + 1e-12)

    def test_m2_curves_coincide(self):
        c = np.linspace(0, 1, 200)
        np.testing.assert_allclose(env.big_x(2, c), env.big_y(2, c), atol=1e-12)
        np.testing.assert_allclose(env.big_y(2, c), binary_entropy_of_c(c), atol=1e-12)

    @pytest.mark.parametrize("m", [3, 4])
    def test_brute_force_simplex(self, m):
        # independent oracle: entropy extremes per concurrence bin over a simplex lattice
        steps = 240 if m == 3 else 60
        pts = [np.array(p) / steps for p in _lattice(m, steps)]
        mu = np.array(pts)
        c = np.sqrt(np.clip(2 * (1 - np.sum(mu**2, axis=1)), 0, None))
        c = np.minimum(c, env.c_max(m))
        H = -np.sum(np.where(mu > 0, mu * np.log(np.where(mu > 0, mu, 1)), 0), axis=1)
        assert np.all(H >= env.big_y(m, c) - 1e-9)
        assert np.all(H <= env.big_x(m, c) + 1e-9)
        edges = np.linspace(0, env.c_max(m), 25)
        for lo, hi in zip(edges[:-1], edges[1:]):
            sel = (c >= lo) & (c < hi)
            if sel.sum() < 20:
                continue
            mid = c[sel]
            assert H[sel].max() >= env.big_x(m, mid).min() - 0.05
            assert H[sel].min() <= env.big_y(m, mid).max() + 0.05

    def test_outside_domain(self):
        with pytest.raises(env.DomainError):
            env.big_y(3, 1.2)
        with pytest.raises(env.DomainError):
            env.big_x(1, 0.0)


def _lattice(m, steps):
    if m == 1:
        yield (steps,)
        return
    for k in range(steps + 1):
        for rest in _lattice(m - 1, steps - k):
            yield (k,) + rest


class TestHull:
    @pytest.mark.parametrize("m", range(2, 7))
    def test_shape_properties(self, tables, m):
        t = tables[m]
        c = t.grid
        eps, eta = t.epsilon(c), t.eta(c)
        assert np.all(eps <= t.y_vals + 1e-9)
        assert np.all(eta >= t.x_vals - 1e-9)
        for vx, vy, sign in ((*t.eps_vertices.T, 1), (*t.eta_vertices.T, -1)):
            s = np.diff(vy) / np.diff(vx)
            assert np.all(s >= -1e-12)
            assert np.all(sign * np.diff(s) >= -1e-12)
        assert t.epsilon(0.0) == pytest.approx(0.0, abs=1e-12)
        assert t.eta(0.0) == pytest.approx(0.0, abs=1e-12)
        assert t.epsilon(t.c_max) == pytest.approx(np.log(m), abs=1e-9)
        assert t.eta(t.c_max) == pytest.approx(np.log(m), abs=1e-9)

    def test_m2_envelopes(self, tables):
        t = tables[2]
        np.testing.assert_allclose(t.epsilon(t.grid), binary_entropy_of_c(t.grid), atol=1e-6)
        # the curve is convex, so its concave majorant is the chord to (1, log 2)
        np.testing.assert_allclose(t.eta(t.grid), t.grid * LOG2, atol=1e-12)

    def test_m3_epsilon_matches_closed_form(self, tables):
        c = np.linspace(0, C3, 1000)
        np.testing.assert_allclose(tables[3].epsilon(c), env.epsilon_m3_closed(c), atol=1e-4)
        assert tables[3].epsilon(1.1) == pytest.approx(0.955244, abs=1e-6)
        assert env.epsilon_m3_closed(1.1) == pytest.approx(
            np.sqrt(3) * np.log(1.5) / (2 - np.sqrt(3)) * 0.1 + LOG2, abs=1e-12
        )

    def test_m3_eta_dominates_segmentwise_form(self, tables):
        # the concave majorant of the true maximum lies above the segment-wise curve
        c = np.linspace(0, C3, 1000)
        assert np.all(tables[3].eta(c) >= env.eta_m3_closed(c) - 1e-9)
        assert tables[3].eta(1.0) >= env.f_value(1, 2, 1.0)
        assert env.eta_m3_closed(0.5) == pytest.approx(0.5 * LOG2)

    def test_closed_form_endpoints(self):
        assert env.epsilon_m3_closed(1.0) == pytest.approx(LOG2, abs=1e-12)
        assert env.epsilon_m3_closed(C3) == pytest.approx(LOG3, abs=1e-12)
        assert env.eta_m3_closed(C3) == pytest.approx(LOG3, abs=1e-12)

    def test_query_domain(self, tables):
        t = tables[3]
        assert t.eta(C3 + 5e-10) == pytest.approx(LOG3, abs=1e-9)
        with pytest.raises(env.DomainError):
            t.epsilon(C3 + 1e-6)
        with pytest.raises(env.DomainError):
            t.eta(-0.1)

    def test_grid_contains_edges(self):
        g = env.envelope_grid(4, 128)
        for e in env.segment_edges(4)[1:]:
            assert np.min(np.abs(g - e)) < 1e-14
        assert np.all(np.diff(g) > 0)

    def test_bad_arguments(self):
        with pytest.raises(env.DomainError):
            env.build_envelopes(1)
        with pytest.raises(env.DomainError):
            env.build_envelopes(3, 10)

    def test_table_is_read_only(self, tables):
        with pytest.raises(ValueError):
            tables[3].grid[0] = 1.0


class TestSegmentRules:
    def test_m3_structure(self):
        r = env.segment_rules(3)
        s1, s2 = r.segments
        assert (s1.x_curvature, s1.y_curvature) == ("convex", "convex")
        assert (s2.x_curvature, s2.y_curvature) == ("convex", "concave")
        assert (s1.eps_rule, s2.eps_rule) == ("curve", "chord")
        assert (s1.eta_rule, s2.eta_rule) == ("chord", "chord")
        assert r.flagged == ()

    def test_m3_reproduces_closed_forms(self):
        r = env.segment_rules(3)
        c = np.linspace(0, C3, 500)
        np.testing.assert_allclose(r.epsilon(c), env.epsilon_m3_closed(c), atol=1e-12)
        # closed form jumps at c = 1; compare away from the edge
        off = np.abs(c - 1) > 1e-9
        np.testing.assert_allclose(r.eta(c[off]), env.eta_m3_closed(c[off]), atol=1e-12)
        assert r.eta(0.5) == pytest.approx(0.5 * LOG2)
