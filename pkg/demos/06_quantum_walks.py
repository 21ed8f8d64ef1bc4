"""Continuous-time Laplacian walks: revival search and state transfer.

The revival conditions are congruences on integer eigenvalues, so the
search layer is exact (rational multiples of 2*pi); the floating-point
unitary only appears at the end to cross-validate each certificate.
"""

import math

import numpy as np

from chd import (
    RationalAngle,
    certify,
    character_table,
    check_pst,
    cocktail_party,
    complement,
    complete,
    double,
    double_cover_fr,
    empty_graph,
    evolve,
    find_fr,
    hypercube,
    merge,
    sylvester_hadamard,
)

# cocktail party graph: revival between antipodes at time pi/n
n = 3
g = cocktail_party(n)
h = character_table((2 * n,))
spec = certify(g, h)
print(f"(3K_2)^c certificates (a, b, tau, gamma):")
for c in find_fr(g, h, spec):
    print(f"  {c.a} -> {c.b}  tau = {c.tau.display():<12} gamma = {c.gamma.display()}"
          f"   alpha = {c.alpha:.3f}")

# watch the amplitude actually split at tau = pi/n
u = evolve(g, h, spec, math.pi / n)
print("\n|amplitudes| from vertex 0 at t = pi/3:",
      np.round(np.abs(u[:, 0]), 6))

# the hypercube has perfect state transfer between antipodes at pi/2
q3 = hypercube(3)
f8 = sylvester_hadamard(8)
spec8 = certify(q3, f8)
print("\nQ_3 PST 000 -> 111 at pi/2:",
      check_pst(q3, f8, spec8, 0, 7, RationalAngle.of_pi(1, 2)))

# two-layer covers: the revival phase is -d2 * tau mod pi, provided the
# per-column sum and difference congruences hold
g1, g2 = empty_graph(4), complete(4)
table = character_table((4,))
gamma = double_cover_fr(g1, g2, table, (certify(g1, table), certify(g2, table)),
                        RationalAngle.of_turn(1, 4))
print("\nbipartite double cover of K_4: gamma at tau=2pi/4 ->",
      gamma.display() if gamma else None)

# the double cover of the 3-cube against its complement has PST at pi/2
cover = merge(complement(q3), q3, 1, 1)
spec16 = certify(cover, double(f8))
print("cover of Q_3: PST (0,0) -> (0,1) at pi/2:",
      check_pst(cover, double(f8), spec16, 0, 8, RationalAngle.of_pi(1, 2)))
