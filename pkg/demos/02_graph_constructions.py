"""Graph constructions with exact rational weights.

Cayley graphs over abelian groups, complements, unions, joins, two-layer
merges, products and tensor-sum combinations.  Vertices of composite
constructions are numbered in row-major mixed-radix order so they line up
with tensor-product Hadamard matrices later on.
"""

from fractions import Fraction

from chd import (
    AbelianGroup,
    cayley,
    cocktail_party,
    complement,
    complete,
    cycle,
    empty_graph,
    graph_join,
    graph_union,
    hypercube,
    merge,
    neps,
    product,
    weighted_tensor_sum,
)

# the 3-cube as a Cayley graph over Z_2^3 with the unit vectors
group = AbelianGroup((2, 2, 2))
q3 = cayley(group, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
print("Q_3:", q3, "degrees:", sorted(set(q3.degrees())))
assert q3 == hypercube(3)

# the cocktail party graph is the complement of a perfect matching,
# equivalently a Cayley graph over Z_{2n} missing only the antipode
cp = cocktail_party(3)
print("(3K_2)^c:", cp, "=", "complement of 3 disjoint edges")
matching = graph_union(graph_union(complete(2), complete(2)), complete(2))
assert sorted(set(complement(cp).degrees())) == sorted(set(matching.degrees()))

# joins: K_{3,3} is the join of two empty graphs
k33 = graph_join(empty_graph(3), empty_graph(3))
print("K_{3,3} edge count:", sum(1 for _ in k33.edges()))

# the merge puts weighted copies of G1 inside each layer and G2 across;
# with G1 empty it is the bipartite double cover of G2 (here: C_6 from K_3)
cover = merge(empty_graph(3), complete(3), 1, 1)
print("bipartite double cover of K_3:", cover, "connected:", cover.is_connected())

# products: the cube is also K_{2,2} box K_2
from chd import complete_bipartite

box = product(complete_bipartite(2, 2), complete(2), "cartesian")
print("K_{2,2} box K_2 has", sum(1 for _ in box.edges()), "edges (cube: 12)")

# NEPS generalises both products; the basis picks which coordinates move
assert neps([complete(2)] * 3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]) == q3

# weighted tensor sums express the merge identity directly
g1, g2 = cycle(4), complete_bipartite(2, 2)
w1, w2 = Fraction(2), Fraction(1, 3)
assert weighted_tensor_sum(
    [(w1, [2, g1]), (w2, [complete(2), g2])]
) == merge(g1, g2, w1, w2)
print("merge identity via tensor sums: OK")
