"""
A two-parameter 3 x 3 family
============================

rho = (x/9) I + (1 - x) |psi><psi| with psi ~ (a, 0, 0, 0, 1/sqrt3, 0, 0, 0, 1/sqrt3).
Each concurrence lower-bound candidate is pushed through epsilon separately,
which shows which criterion is most useful in which region.
"""

import numpy as np

from eofbounds import build_envelopes, eof_bounds
from eofbounds.states import example2_state

table = build_envelopes(3)


def sweep(x, a_values):
    print(f"\nx = {x}")
    print(f"{'a':>6} {'eps(ppt)':>9} {'eps(ccnr)':>10} {'eps(pur)':>9} {'lower':>9} {'upper':>9}")
    for a in a_values:
        r = eof_bounds(example2_state(a, x), table)
        cl = r.component_lower
        print(f"{a:6.3f} {cl['ppt']:9.6f} {cl['ccnr']:10.6f} {cl['purityA']:9.6f} {r.eof_lower:9.6f} {r.eof_upper:9.6f}")


# Weak noise: the partial-transpose bound dominates around a ~ 0.5-0.66.
sweep(0.1, np.arange(0.5, 0.661, 0.04))

# Almost pure: the purity bound is nearly tight and takes over.
sweep(0.001, np.arange(0.57, 0.591, 0.005))

# Strong noise: the purity terms vanish, but the state stays NPT for every a.
sweep(0.6, np.arange(0.0, 1.01, 0.1))
