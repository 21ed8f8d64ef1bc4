"""Exact Cheeger constants, edge density, and spectral tightness.

For graphs certified by a real or Turyn matrix, the Cheeger lower bound
gamma_2 / 2 is attained exactly, witnessed by the plus-cell of a
second-eigenvalue column, and the minimum edge density equals the
algebraic connectivity.  All ratios are exact rationals from brute-force
subset enumeration.
"""

from chd import (
    certify,
    cheeger,
    cheeger_inequality_audit,
    complete,
    complete_bipartite,
    hypercube,
    min_edge_density,
    sylvester_hadamard,
    tightness_check,
)

for name, g, h in [
    ("Q_2", hypercube(2), sylvester_hadamard(4)),
    ("Q_3", hypercube(3), sylvester_hadamard(8)),
    ("Q_4", hypercube(4), sylvester_hadamard(16)),
    ("K_4", complete(4), sylvester_hadamard(4)),
    ("K_{4,4}", complete_bipartite(4, 4), sylvester_hadamard(8)),
]:
    spec = certify(g, h)
    h_val, witness = cheeger(g)
    density, _ = min_edge_density(g)
    lam2 = spec.second_smallest()
    print(
        f"{name:<8} h = {str(h_val):<5} lambda_2 = {lam2}  "
        f"min density = {density}  tight: {tightness_check(g, h, spec)}  "
        f"witness subset: {witness.subset}"
    )
    assert density == lam2

# both sides of the Cheeger inequality, audited without floating square
# roots (the upper bound is compared as h^2 <= 2 gamma_2)
audit = cheeger_inequality_audit(hypercube(3), certify(hypercube(3), sylvester_hadamard(8)))
print(
    f"\nQ_3 audit: gamma_2/2 = {audit['gamma2']/2} <= h = {audit['h']}"
    f" and h^2 = {audit['h']**2} <= 2 gamma_2 = {2*audit['gamma2']}"
)
