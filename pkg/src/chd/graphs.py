"""Weighted simple graphs and the constructions used throughout the package.

Weights are exact rationals (``fractions.Fraction``); adjacency and Laplacian
matrices are materialised as tuples of Fractions for exact work and as numpy
arrays for floating-point cross-checks.  Vertices of product-style
constructions are always numbered in row-major mixed-radix order so that
they line up with the rows of tensor-product Hadamard matrices.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product as iter_product

import numpy as np

from .errors import ChdError, SimplicityError

__all__ = [
    "WeightedGraph",
    "AbelianGroup",
    "cayley",
    "complement",
    "combine",
    "graph_union",
    "graph_join",
    "merge",
    "product",
    "neps",
    "weighted_tensor_sum",
    "complete",
    "empty_graph",
    "cycle",
    "hypercube",
    "cocktail_party",
    "complete_bipartite",
    "complete_multipartite",
    "named",
]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise ChdError(f"cannot interpret {x!r} as an exact rational weight")


class WeightedGraph:
    """Simple undirected graph with nonnegative rational edge weights."""

    __slots__ = ("n", "rows")

    def __init__(self, rows) -> None:
        rows = tuple(tuple(_as_fraction(w) for w in row) for row in rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ChdError("weight matrix must be square")
        for u in range(n):
            if rows[u][u] != 0:
                raise SimplicityError(f"vertex {u} carries a loop")
            for v in range(u + 1, n):
                if rows[u][v] != rows[v][u]:
                    raise SimplicityError(
                        f"weight matrix is not symmetric at ({u}, {v})"
                    )
                if rows[u][v] < 0:
                    raise SimplicityError(f"negative weight on edge ({u}, {v})")
        self.n = n
        self.rows = rows

    @classmethod
    def from_edges(cls, n: int, edges) -> "WeightedGraph":
        w = [[Fraction(0)] * n for _ in range(n)]
        for item in edges:
            if len(item) == 2:
                u, v = item
                weight = Fraction(1)
            else:
                u, v, weight = item
                weight = _as_fraction(weight)
            if not (0 <= u < n and 0 <= v < n):
                raise ChdError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise SimplicityError(f"loop at vertex {u}")
            if w[u][v] != 0:
                raise SimplicityError(f"duplicate edge ({u}, {v})")
            w[u][v] = w[v][u] = weight
        return cls(w)

    # -- matrices -------------------------------------------------------

    def degree(self, u: int) -> Fraction:
        return sum(self.rows[u], Fraction(0))

    def degrees(self) -> tuple[Fraction, ...]:
        return tuple(self.degree(u) for u in range(self.n))

    def laplacian_rows(self) -> tuple[tuple[Fraction, ...], ...]:
        out = []
        for u in range(self.n):
            d = self.degree(u)
            out.append(
                tuple(d - w if v == u else -w for v, w in enumerate(self.rows[u]))
            )
        return tuple(out)

    def integer_matrix(self, target: str = "laplacian") -> tuple[list[list[int]], int]:
        """Exact integer scaling of the Laplacian or adjacency matrix.

        Returns (matrix, scale) with matrix == scale * target entrywise.
        """
        rows = self.laplacian_rows() if target == "laplacian" else self.rows
        scale = 1
        for row in rows:
            for w in row:
                scale = scale * w.denominator // math.gcd(scale, w.denominator)
        mat = [[int(w * scale) for w in row] for row in rows]
        return mat, scale

    def adjacency_float(self) -> np.ndarray:
        return np.array([[float(w) for w in row] for row in self.rows])

    def laplacian_float(self) -> np.ndarray:
        a = self.adjacency_float()
        return np.diag(a.sum(axis=1)) - a

    # -- structure ------------------------------------------------------

    def edges(self):
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if self.rows[u][v]:
                    yield u, v, self.rows[u][v]

    def is_unweighted(self) -> bool:
        return all(w == 1 for _, _, w in self.edges())

    def neighbors(self, u: int):
        return [v for v in range(self.n) if self.rows[u][v]]

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack, comp = [s], []
            seen[s] = True
            while stack:
                u = stack.pop()
                comp.append(u)
                for v in self.neighbors(u):
                    if not seen[v]:
                        seen[v] = True
                        stack.append(v)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "edges": [[u, v, str(w)] for u, v, w in self.edges()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "WeightedGraph":
        for field in ("n", "edges"):
            if field not in data:
                raise ChdError(f"graph JSON is missing the field {field!r}")
        return cls.from_edges(data["n"], data["edges"])

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, edges={sum(1 for _ in self.edges())})"


class AbelianGroup:
    """Direct product of cyclic groups Z_m1 x ... x Z_mk.

    Elements are exponent tuples; ``index`` ranks them in row-major order,
    matching the row order of ``character_table`` with the same moduli.
    """

    __slots__ = ("moduli", "_elements", "_index")

    def __init__(self, moduli) -> None:
        moduli = tuple(int(m) for m in moduli)
        if not moduli or any(m < 1 for m in moduli):
            raise ChdError(f"moduli must be positive integers, got {moduli}")
        self.moduli = moduli
        self._elements = tuple(iter_product(*(range(m) for m in moduli)))
        self._index = {el: i for i, el in enumerate(self._elements)}

    @property
    def order(self) -> int:
        return len(self._elements)

    @property
    def identity(self) -> tuple[int, ...]:
        return (0,) * len(self.moduli)

    def elements(self) -> tuple[tuple[int, ...], ...]:
        return self._elements

    def normalise(self, el) -> tuple[int, ...]:
        el = tuple(int(x) for x in el)
        if len(el) != len(self.moduli):
            raise ChdError(f"element {el} has wrong arity for moduli {self.moduli}")
        return tuple(x % m for x, m in zip(el, self.moduli))

    def index(self, el) -> int:
        return self._index[self.normalise(el)]

    def neg(self, el) -> tuple[int, ...]:
        return tuple((-x) % m for x, m in zip(self.normalise(el), self.moduli))

    def sub(self, a, b) -> tuple[int, ...]:
        a, b = self.normalise(a), self.normalise(b)
        return tuple((x - y) % m for x, y, m in zip(a, b, self.moduli))

    def element_order(self, el) -> int:
        el = self.normalise(el)
        out = 1
        for x, m in zip(el, self.moduli):
            if x:
                out = math.lcm(out, m // math.gcd(x, m))
        return out


def cayley(group: AbelianGroup, connection) -> WeightedGraph:
    """Unit-weight Cayley graph: u ~ v iff u - v lies in the connection set.

    The connection set must avoid the identity (no loops) and be closed
    under negation (undirected edges).
    """
    conn = {group.normalise(c) for c in connection}
    if group.identity in conn:
        raise SimplicityError("connection set contains the identity (loops)")
    for c in conn:
        if group.neg(c) not in conn:
            raise SimplicityError(
                f"connection set is not closed under negation at {c}"
            )
    n = group.order
    w = [[Fraction(0)] * n for _ in range(n)]
    els = group.elements()
    for i, a in enumerate(els):
        for c in conn:
            j = group.index(tuple((x + y) % m for x, y, m in zip(a, c, group.moduli)))
            w[i][j] = Fraction(1)
    return WeightedGraph(w)


def complement(g: WeightedGraph) -> WeightedGraph:
    """Edge-set complement; defined for unweighted graphs only."""
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.rows[u][v] not in (0, 1):
                raise ChdError("complement is only defined for unweighted graphs")
    w = [
        [
            Fraction(0) if u == v else Fraction(1) - g.rows[u][v]
            for v in range(g.n)
        ]
        for u in range(g.n)
    ]
    return WeightedGraph(w)


def graph_union(g1: WeightedGraph, g2: WeightedGraph) -> WeightedGraph:
    """Disjoint union; vertices of g1 come first."""
    n = g1.n + g2.n
    w = [[Fraction(0)] * n for _ in range(n)]
    for u, v, weight in g1.edges():
        w[u][v] = w[v][u] = weight
    for u, v, weight in g2.edges():
        w[g1.n + u][g1.n + v] = w[g1.n + v][g1.n + u] = weight
    return WeightedGraph(w)


def graph_join(g1: WeightedGraph, g2: WeightedGraph) -> WeightedGraph:
    """Union plus all unit-weight cross edges; both inputs must be unweighted."""
    if not (g1.is_unweighted() and g2.is_unweighted()):
        raise ChdError("join is only defined for unweighted graphs")
    g = graph_union(g1, g2)
    w = [list(row) for row in g.rows]
    for u in range(g1.n):
        for v in range(g1.n, g1.n + g2.n):
            w[u][v] = w[v][u] = Fraction(1)
    return WeightedGraph(w)


def combine(g1: WeightedGraph, g2: WeightedGraph, kind: str) -> WeightedGraph:
    if kind == "union":
        return graph_union(g1, g2)
    if kind == "join":
        return graph_join(g1, g2)
    raise ChdError(f"unknown combination {kind!r}; expected 'union' or 'join'")


def merge(g1: WeightedGraph, g2: WeightedGraph, w1, w2) -> WeightedGraph:
    """Two-layer graph with within-layer copies of w1*G1 and cross-layer
    copies of w2*G2.

    Vertex (layer, v) is numbered layer * n + v.  With unit weights and
    disjoint edge sets this is the double cover of G1 + G2's edge union;
    with G1 empty it is the bipartite double cover of G2.
    """
    if g1.n != g2.n:
        raise ChdError(f"merge needs equal orders, got {g1.n} and {g2.n}")
    w1, w2 = _as_fraction(w1), _as_fraction(w2)
    if w1 <= 0 or w2 <= 0:
        raise ChdError("merge weights must be positive")
    n = g1.n
    w = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for u, v, weight in g1.edges():
        w[u][v] = w[v][u] = w1 * weight
        w[n + u][n + v] = w[n + v][n + u] = w1 * weight
    for u in range(n):
        for v in range(n):
            if g2.rows[u][v]:
                w[u][n + v] = w[n + v][u] = w2 * g2.rows[u][v]
    return WeightedGraph(w)


def product(g1: WeightedGraph, g2: WeightedGraph, kind: str) -> WeightedGraph:
    """Direct (A1 (x) A2) or Cartesian (A1 (x) I + I (x) A2) product.

    Vertex (u1, u2) is numbered u1 * n2 + u2.
    """
    n1, n2 = g1.n, g2.n
    n = n1 * n2
    w = [[Fraction(0)] * n for _ in range(n)]
    if kind == "direct":
        for u1, v1, a in g1.edges():
            for u2, v2, b in g2.edges():
                pairs = (
                    (u1 * n2 + u2, v1 * n2 + v2),
                    (u1 * n2 + v2, v1 * n2 + u2),
                )
                for x, y in pairs:
                    w[x][y] = w[y][x] = a * b
    elif kind == "cartesian":
        for u1, v1, a in g1.edges():
            for u2 in range(n2):
                x, y = u1 * n2 + u2, v1 * n2 + u2
                w[x][y] = w[y][x] = a
        for u2, v2, b in g2.edges():
            for u1 in range(n1):
                x, y = u1 * n2 + u2, u1 * n2 + v2
                w[x][y] = w[y][x] = b
    else:
        raise ChdError(f"unknown product {kind!r}; expected 'direct' or 'cartesian'")
    return WeightedGraph(w)


def neps(graphs, basis) -> WeightedGraph:
    """Sum of Kronecker products A(G_1)^b1 (x) ... (x) A(G_d)^bd over a basis
    of 0/1 tuples (the all-zero tuple is excluded; exponent 0 means identity).
    """
    graphs = list(graphs)
    basis = [tuple(int(b) for b in beta) for beta in basis]
    d = len(graphs)
    if not basis:
        raise ChdError("basis must be nonempty")
    for beta in basis:
        if len(beta) != d:
            raise ChdError(f"basis tuple {beta} has wrong arity {len(beta)} != {d}")
        if any(b not in (0, 1) for b in beta):
            raise ChdError(f"basis tuple {beta} is not 0/1")
        if not any(beta):
            raise SimplicityError("the all-zero basis tuple would add a diagonal term")
    terms = []
    for beta in basis:
        factors = [g if b else g.n for g, b in zip(graphs, beta)]
        terms.append((Fraction(1), factors))
    return weighted_tensor_sum(terms)


def weighted_tensor_sum(terms) -> WeightedGraph:
    """Weighted sum of Kronecker products of adjacency matrices.

    Each term is (weight, factors) where a factor is a WeightedGraph or an
    int standing for an identity block of that size.  The summed matrix must
    be a valid simple-graph adjacency matrix (symmetric, zero diagonal,
    nonnegative); otherwise a SimplicityError is raised.
    """
    terms = list(terms)
    if not terms:
        raise ChdError("need at least one term")
    sizes = None
    total = None
    for weight, factors in terms:
        weight = _as_fraction(weight)
        dims = tuple(f.n if isinstance(f, WeightedGraph) else int(f) for f in factors)
        if sizes is None:
            sizes = dims
            n = math.prod(dims)
            total = [[Fraction(0)] * n for _ in range(n)]
        elif dims != sizes:
            raise ChdError(f"inconsistent factor sizes {dims} vs {sizes}")
        mats = []
        for f in factors:
            if isinstance(f, WeightedGraph):
                mats.append(f.rows)
            else:
                m = int(f)
                mats.append(
                    tuple(
                        tuple(Fraction(1 if i == j else 0) for j in range(m))
                        for i in range(m)
                    )
                )
        n = math.prod(sizes)
        for u in range(n):
            uu, rem = [], u
            for s in reversed(sizes):
                uu.append(rem % s)
                rem //= s
            uu.reverse()
            for v in range(n):
                vv, rem = [], v
                for s in reversed(sizes):
                    vv.append(rem % s)
                    rem //= s
                vv.reverse()
                entry = weight
                for mat, i, j in zip(mats, uu, vv):
                    if entry == 0:
                        break
                    entry *= mat[i][j]
                if entry:
                    total[u][v] += entry
    for u in range(len(total)):
        if total[u][u] != 0:
            raise SimplicityError("summed matrix has a nonzero diagonal entry")
        for v in range(len(total)):
            if total[u][v] < 0:
                raise SimplicityError("summed matrix has a negative weight")
    return WeightedGraph(total)


# -- named families -----------------------------------------------------


def complete(n: int) -> WeightedGraph:
    _check_size(n)
    return WeightedGraph(
        [[Fraction(0 if u == v else 1) for v in range(n)] for u in range(n)]
    )


def empty_graph(n: int) -> WeightedGraph:
    _check_size(n)
    return WeightedGraph([[Fraction(0)] * n for _ in range(n)])


def cycle(r: int) -> WeightedGraph:
    _check_size(r)
    if r < 3:
        raise ChdError(f"cycle needs at least 3 vertices, got {r}")
    group = AbelianGroup((r,))
    return cayley(group, [(1,), (r - 1,)])


def hypercube(d: int) -> WeightedGraph:
    _check_size(d)
    group = AbelianGroup((2,) * d)
    units = [tuple(1 if i == j else 0 for j in range(d)) for i in range(d)]
    return cayley(group, units)


def cocktail_party(n: int) -> WeightedGraph:
    """Complement of n disjoint edges, as a Cayley graph on Z_{2n}."""
    _check_size(n)
    group = AbelianGroup((2 * n,))
    conn = [(c,) for c in range(1, 2 * n) if c != n]
    return cayley(group, conn)


def complete_bipartite(a: int, b: int) -> WeightedGraph:
    return complete_multipartite((a, b))


def complete_multipartite(parts) -> WeightedGraph:
    parts = tuple(int(p) for p in parts)
    if not parts or any(p < 1 for p in parts):
        raise ChdError(f"part sizes must be positive, got {parts}")
    n = sum(parts)
    block = []
    for i, p in enumerate(parts):
        block.extend([i] * p)
    w = [
        [Fraction(0 if block[u] == block[v] else 1) for v in range(n)]
        for u in range(n)
    ]
    return WeightedGraph(w)


def _check_size(n: int) -> None:
    if n < 1:
        raise ChdError(f"size must be at least 1, got {n}")


_FAMILIES = {
    "complete": lambda args: complete(int(args[0])),
    "cycle": lambda args: cycle(int(args[0])),
    "hypercube": lambda args: hypercube(int(args[0])),
    "cocktail": lambda args: cocktail_party(int(args[0])),
    "complete-bipartite": lambda args: complete_bipartite(int(args[0]), int(args[1])),
    "complete-multipartite": lambda args: complete_multipartite(
        [int(a) for a in args]
    ),
    "empty": lambda args: empty_graph(int(args[0])),
}


def named(family: str, *args) -> WeightedGraph:
    """Dispatch a standard family by name; used by the command-line front end."""
    key = family.replace("_", "-")
    if key not in _FAMILIES:
        raise ChdError(
            f"unknown family {family!r}; expected one of {sorted(_FAMILIES)}"
        )
    try:
        return _FAMILIES[key](args)
    except IndexError:
        raise ChdError(f"family {family!r} is missing size arguments") from None
