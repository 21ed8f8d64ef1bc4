"""Building and inspecting exact complex Hadamard matrices.

Matrices are stored as integer exponent tables: entry (j, k) is z**e with
z = exp(2*pi*i/r).  Everything here is exact; the complex view at the end
is derived on demand.
"""

import numpy as np

from chd import (
    character_table,
    classify,
    conference_lift,
    dephase,
    double,
    paley_conference,
    sylvester_hadamard,
    tensor,
    verify,
)

# the 2x2 seed [[1,1],[1,-1]] is the character table of the two-element group
f2 = character_table((2,))
print("F2 exponents over r=2:\n", f2.exps)
print("verified:", verify(f2))

# tensor powers give the real matrices of orders 4 and 8
f8 = sylvester_hadamard(8)
print("\nF8:", f8, "->", classify(f8))

# the character table of Z_4 uses fourth roots of unity: a Turyn matrix
t4 = character_table((4,))
print("\nZ_4 character table exponents over r=4:\n", t4.exps)
print("class:", classify(t4))

# character tables of product groups are tensor products of the tables
assert character_table((4, 2)) == tensor(t4, f2)

# doubling [[H, H], [H, -H]] is the tensor with F2
d = double(t4)
print("\ndouble(T4):", d, "->", classify(d))

# order 6: no real Hadamard matrix exists, but a Turyn one does, obtained
# by dephasing I + iC for a symmetric conference matrix C (Paley, from the
# quadratic residues mod 5)
c = paley_conference(5)
print("\nconference matrix of order 6:\n", c)
h6 = conference_lift(c)
print("lifted and dephased:", h6, "->", classify(h6))
print("second row of exponents:", h6.exps[1], " (one -1, four +-i)")

# dephasing is idempotent and preserves the Hadamard property
assert dephase(h6) == h6

# the float view satisfies H H* = n I to machine precision
m = h6.to_complex()
print("\n|| H H* - 6 I ||_max =", np.max(np.abs(m @ m.conj().T - 6 * np.eye(6))))
