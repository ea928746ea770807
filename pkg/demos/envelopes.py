"""
Entropy envelopes for three-level systems
=========================================

Tabulates the pure-state entropy extremes X(c), Y(c) and the two transfer
functions epsilon and eta for m = 3, then compares the hull construction with
the segment-by-segment closed forms.
"""

import numpy as np

from eofbounds import build_envelopes
from eofbounds.densmat import pure_concurrence, shannon_entropy
from eofbounds.envelope import epsilon_m3_closed, eta_m3_closed, segment_rules

# The table samples X and Y on 4096 points plus the segment edge c = 1 and
# takes the convex / concave hulls.
table = build_envelopes(3)
print(f"m = {table.m}, c_max = {table.c_max:.6f}, {table.grid.size} grid points")

print(f"\n{'c':>6} {'Y':>9} {'X':>9} {'epsilon':>9} {'eta':>9}")
for c in np.linspace(0, table.c_max, 12):
    y, x = np.interp(c, table.grid, table.y_vals), np.interp(c, table.grid, table.x_vals)
    print(f"{c:6.3f} {y:9.6f} {x:9.6f} {table.epsilon(c):9.6f} {table.eta(c):9.6f}")

# epsilon agrees with the closed form: F11 up to c = 1, then a straight line.
c = np.linspace(0, table.c_max, 1000)
print(f"\nmax |epsilon - closed form| = {np.max(np.abs(table.epsilon(c) - epsilon_m3_closed(c))):.2e}")

# eta does not.  The segment-wise rule caps the entropy at c log 2 on (0, 1],
# but a pure state with Schmidt vector (2/3, 1/6, 1/6) has c = 1 and more
# entropy than log 2.
mu = [2 / 3, 1 / 6, 1 / 6]
print(f"mu = (2/3, 1/6, 1/6): c = {pure_concurrence(mu):.6f}, H = {shannon_entropy(mu):.6f}, log 2 = {np.log(2):.6f}")
print(f"hull eta(1) = {table.eta(1.0):.6f}, segment-wise eta(1) = {eta_m3_closed(1.0):.6f}")

# The curvature classification that drives the segment-wise construction.
for seg in segment_rules(3).segments:
    print(
        f"segment {seg.t}: c in ({seg.lo:.4f}, {seg.hi:.4f}]  "
        f"F(1,t) {seg.x_curvature} -> eta {seg.eta_rule}, F(t,1) {seg.y_curvature} -> epsilon {seg.eps_rule}"
    )
