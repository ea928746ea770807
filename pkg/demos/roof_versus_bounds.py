"""
Brute-force convex roof against the analytic bounds
===================================================

For two qubits the exact EoF is known, so the random search can be checked
directly.  For 3 x 3 states the search gives an achievable ensemble average,
which must sit above the analytic lower bound.  In 3 x 3 the restarts usually
run to the iteration cap rather than the step tolerance; the value is still an
achievable average.
"""

from eofbounds import build_envelopes, convex_roof_estimate, eof_bounds, random_density_matrix
from eofbounds.eof import two_qubit_eof_exact

t2 = build_envelopes(2)
print(f"{'seed':>4} {'lower':>9} {'exact':>9} {'roof':>9} {'upper':>9}")
for seed in range(5):
    rho = random_density_matrix(2, 2, seed=seed)
    r = eof_bounds(rho, t2)
    est = convex_roof_estimate(rho, K=8, restarts=16, seed=seed)
    print(f"{seed:4d} {r.eof_lower:9.6f} {two_qubit_eof_exact(rho):9.6f} {est.value:9.6f} {r.eof_upper:9.6f}")

t3 = build_envelopes(3)
print(f"\n{'rank':>4} {'lower':>9} {'roof':>9} {'upper':>9} {'converged':>10}")
for seed, rank in enumerate((2, 2, 3, 4)):
    rho = random_density_matrix(3, 3, rank, seed=100 + seed)
    r = eof_bounds(rho, t3)
    est = convex_roof_estimate(rho, K=12, restarts=16, seed=seed)
    print(f"{rank:4d} {r.eof_lower:9.6f} {est.value:9.6f} {r.eof_upper:9.6f} {str(est.converged):>10}")
