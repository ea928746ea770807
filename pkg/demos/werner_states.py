"""
Werner states in 3 x 3
======================

Every d = 3 Werner state has maximally mixed marginals, so the reduced-purity
upper bound on the concurrence is the same for all f and the EoF upper bound
saturates at log 3.
"""

import numpy as np

from eofbounds import build_envelopes, eof_bounds
from eofbounds.densmat import purity, reduced_a
from eofbounds.envelope import segment_rules
from eofbounds.states import werner, werner_concurrence_hint

table = build_envelopes(3)
rules = segment_rules(3)

rho = werner(3, -0.5)
print(f"1 - Tr(rho_A^2) = {1 - purity(reduced_a(rho)):.6f}")

# Feeding the concurrence -f instead of the purity bound gives a much smaller
# number, but which one depends on how eta is built: the segment-wise curve
# returns -f log 2, the concave majorant of the true maximum is larger.
print(f"\n{'f':>6} {'eof_lower':>10} {'eof_upper':>10} {'eta(-f) hull':>13} {'segment-wise':>13} {'-f log 2':>9}")
for f in np.arange(-1.0, 0.01, 0.125):
    rep = eof_bounds(werner(3, f), table)
    hint = werner_concurrence_hint(3, f)
    print(
        f"{f:6.3f} {rep.eof_lower:10.6f} {rep.eof_upper:10.6f} "
        f"{table.eta(hint):13.6f} {rules.eta(hint):13.6f} {hint * np.log(2):9.6f}"
    )
