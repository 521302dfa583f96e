"""Loopless undirected multigraphs stored as pair multiplicities.

Vertices are the integers ``1..n``.  A graph value is immutable once built;
every transform returns a new graph.  Internally each vertex ``v`` also owns
bit ``v - 1`` of an integer so that vertex sets can be handled as bitmasks by
the search routines.
"""

from __future__ import annotations

import random
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

MAX_MULTIPLICITY = 255


class GraphError(ValueError):
    """Raised for invalid graph construction or transform arguments."""


class MultiGraph:
    """A loopless multigraph on vertices ``1..n``.

    ``mult`` maps unordered pairs ``(u, v)`` with ``u < v`` to a positive
    multiplicity.  Absent pairs have multiplicity 0.
    """

    __frozen = False

    def __init__(self, n: int, mult: Mapping[tuple[int, int], int] | None = None):
        if n < 0:
            raise GraphError(f"negative order {n}")
        rows = [[0] * (n + 1) for _ in range(n + 1)]
        clean: dict[tuple[int, int], int] = {}
        for (u, v), m in (mult or {}).items():
            if u > v:
                u, v = v, u
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (1 <= u and v <= n):
                raise GraphError(f"pair ({u},{v}) out of range 1..{n}")
            if not 0 <= m <= MAX_MULTIPLICITY:
                raise GraphError(f"pair ({u},{v}) has multiplicity {m} outside 0..{MAX_MULTIPLICITY}")
            if m:
                clean[(u, v)] = m
                rows[u][v] = rows[v][u] = m
        self._n = n
        self._mult = clean
        self._rows = tuple(tuple(r) for r in rows)
        self.__frozen = True

    def __setattr__(self, name, value):
        if self.__frozen:
            raise AttributeError("MultiGraph is immutable")
        super().__setattr__(name, value)

    # -- basic accessors ------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    def __len__(self) -> int:
        return self._n

    @property
    def vertices(self) -> range:
        return range(1, self._n + 1)

    def mu(self, u: int, v: int) -> int:
        """Multiplicity of the pair ``{u, v}``; 0 for absent pairs."""
        if u == v:
            raise GraphError("loops are not part of the model")
        return self._rows[u][v]

    def pairs(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(u, v, mu)`` for every pair with positive multiplicity, sorted."""
        for (u, v) in sorted(self._mult):
            yield u, v, self._mult[(u, v)]

    @property
    def multiplicities(self) -> Mapping[tuple[int, int], int]:
        return dict(self._mult)

    @property
    def num_pairs(self) -> int:
        return len(self._mult)

    @property
    def num_edges(self) -> int:
        return sum(self._mult.values())

    @cached_property
    def max_multiplicity(self) -> int:
        return max(self._mult.values(), default=0)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """Degrees indexed by vertex; index 0 is unused and holds 0."""
        return tuple(sum(row) for row in self._rows)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    @property
    def min_degree(self) -> int:
        return min(self.degrees[1:], default=0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees[1:], default=0)

    def is_simple(self) -> bool:
        return self.max_multiplicity <= 1

    def neighbors(self, v: int) -> list[int]:
        row = self._rows[v]
        return [u for u in self.vertices if row[u]]

    def row(self, v: int) -> tuple[int, ...]:
        """Multiplicity row of ``v`` indexed by vertex (index 0 unused)."""
        return self._rows[v]

    # -- bitmask views used by the search code --------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def _masks(self, keep) -> tuple[int, ...]:
        out = []
        for v in self.vertices:
            row = self._rows[v]
            m = 0
            for u in self.vertices:
                if u != v and keep(row[u]):
                    m |= 1 << (u - 1)
            out.append(m)
        return tuple(out)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """``adjacency_masks[v-1]``: neighbours of ``v`` with multiplicity >= 1."""
        return self._masks(lambda m: m >= 1)

    @cached_property
    def unit_masks(self) -> tuple[int, ...]:
        """``unit_masks[v-1]``: neighbours joined to ``v`` by exactly one edge."""
        return self._masks(lambda m: m == 1)

    def masks_at_least(self, t: int) -> tuple[int, ...]:
        return self._masks(lambda m: m >= t)

    def masks_exactly(self, t: int) -> tuple[int, ...]:
        return self._masks(lambda m: m == t)

    # -- value semantics --------------------------------------------------

    def _key(self):
        return self._n, frozenset(self._mult.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        body = ", ".join(f"({u},{v},{m})" for u, v, m in self.pairs())
        return f"MultiGraph({self._n}, [{body}])"


def mask_to_vertices(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def vertices_to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def check_vertex_set(G: MultiGraph, X: Iterable[int]) -> tuple[int, ...]:
    """Canonicalise ``X`` to an ascending tuple, rejecting duplicates and strays."""
    xs = list(X)
    if len(set(xs)) != len(xs):
        raise GraphError(f"vertex set {xs} has duplicates")
    for v in xs:
        if not (isinstance(v, int) and 1 <= v <= G.n):
            raise GraphError(f"vertex {v!r} not in 1..{G.n}")
    return tuple(sorted(xs))


# -- construction ----------------------------------------------------------


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> MultiGraph:
    """Build a graph from ``(u, v, mu)`` triples with ``1 <= u < v <= n`` and ``mu >= 1``.

    Each pair may appear at most once.
    """
    if n < 0:
        raise GraphError(f"negative order {n}")
    mult: dict[tuple[int, int], int] = {}
    for item in edges:
        u, v, m = item
        if not (1 <= u < v <= n):
            raise GraphError(f"pair ({u},{v}) must satisfy 1 <= u < v <= {n}")
        if m < 1:
            raise GraphError(f"pair ({u},{v}) listed with multiplicity {m}")
        if (u, v) in mult:
            raise GraphError(f"pair ({u},{v}) listed twice")
        mult[(u, v)] = m
    return MultiGraph(n, mult)


def edgeless(n: int) -> MultiGraph:
    return MultiGraph(n)


def cycle(n: int) -> MultiGraph:
    """The simple cycle C_n, n >= 3.  C_2 must be built explicitly."""
    if n < 3:
        raise GraphError("cycle generator needs n >= 3")
    return MultiGraph(n, {(i, i % n + 1): 1 for i in range(1, n + 1)})


def path(n: int) -> MultiGraph:
    return MultiGraph(n, {(i, i + 1): 1 for i in range(1, n)})


def complete(n: int) -> MultiGraph:
    return t_complete(n, 1)


def t_complete(n: int, t: int) -> MultiGraph:
    """tK_n: every pair joined by ``t`` parallel edges."""
    if n < 0 or t < 1:
        raise GraphError(f"t_complete needs n >= 0 and t >= 1, got n={n}, t={t}")
    return MultiGraph(n, {p: t for p in combinations(range(1, n + 1), 2)})


def random_multigraph(n: int, t: int, density: float, seed: int | None = None) -> MultiGraph:
    """Random member of MG_t.

    Each pair is present with probability ``density``; a present pair gets a
    multiplicity drawn uniformly from ``1..t``.
    """
    if n < 0 or t < 1 or not 0.0 <= density <= 1.0:
        raise GraphError(f"bad parameters n={n}, t={t}, density={density}")
    rng = random.Random(seed)
    mult = {}
    for p in combinations(range(1, n + 1), 2):
        if rng.random() < density:
            mult[p] = rng.randint(1, t)
    return MultiGraph(n, mult)


# -- derived graphs --------------------------------------------------------


def induced_subgraph(G: MultiGraph, X: Iterable[int]) -> tuple[MultiGraph, tuple[int, ...]]:
    """Return ``(G[X], labels)`` where vertex ``i`` of ``G[X]`` is ``labels[i-1]`` in ``G``."""
    xs = check_vertex_set(G, X)
    mult = {}
    for i, j in combinations(range(len(xs)), 2):
        m = G.mu(xs[i], xs[j])
        if m:
            mult[(i + 1, j + 1)] = m
    return MultiGraph(len(xs), mult), xs


def delete_vertices(G: MultiGraph, X: Iterable[int]) -> tuple[MultiGraph, tuple[int, ...]]:
    """``G - X`` with its relabelling, as in :func:`induced_subgraph`."""
    drop = set(check_vertex_set(G, X))
    return induced_subgraph(G, [v for v in G.vertices if v not in drop])


def remove_edge(G: MultiGraph, u: int, v: int) -> MultiGraph:
    """Delete a single edge joining ``u`` and ``v``."""
    if u > v:
        u, v = v, u
    if G.mu(u, v) == 0:
        raise GraphError(f"no edge joins {u} and {v}")
    mult = G.multiplicities
    mult[(u, v)] -= 1
    return MultiGraph(G.n, mult)


def s_t(G: MultiGraph, t: int) -> MultiGraph:
    """Simple graph with an edge exactly where the multiplicity equals ``t``."""
    if t < 1:
        raise GraphError(f"level t must be >= 1, got {t}")
    return MultiGraph(G.n, {(u, v): 1 for u, v, m in G.pairs() if m == t})


def underlying_simple(G: MultiGraph) -> MultiGraph:
    return MultiGraph(G.n, {(u, v): 1 for u, v, _ in G.pairs()})


def complement(H: MultiGraph) -> MultiGraph:
    """Ordinary complement of a simple graph."""
    if not H.is_simple():
        raise GraphError("complement is defined for simple graphs; use t_complement")
    return t_complement(H, 1)


def t_complement(G: MultiGraph, t: int) -> MultiGraph:
    if t < 1:
        raise GraphError(f"level t must be >= 1, got {t}")
    mult = {}
    for p in combinations(G.vertices, 2):
        m = G.mu(*p)
        if m > t:
            raise GraphError(f"pair {p} has multiplicity {m} > t={t}")
        if m < t:
            mult[p] = t - m
    return MultiGraph(G.n, mult)


def uniform_inflation(H: MultiGraph, t: int) -> MultiGraph:
    """tH: each edge of the simple graph ``H`` becomes ``t`` parallel edges."""
    if t < 1:
        raise GraphError(f"level t must be >= 1, got {t}")
    if not H.is_simple():
        raise GraphError("uniform inflation takes a simple graph")
    return MultiGraph(H.n, {(u, v): t for u, v, _ in H.pairs()})


def graph_union(G: MultiGraph, H: MultiGraph) -> MultiGraph:
    """Edge-disjoint union on a common vertex set: multiplicities add."""
    if G.n != H.n:
        raise GraphError("union needs equal orders")
    mult = G.multiplicities
    for u, v, m in H.pairs():
        mult[(u, v)] = mult.get((u, v), 0) + m
    return MultiGraph(G.n, mult)


def components_of_mask(adj: Sequence[int], mask: int) -> list[int]:
    """Connected components (as bitmasks) of the vertex set ``mask`` under ``adj``."""
    comps = []
    rest = mask
    while rest:
        low = rest & -rest
        comp = frontier = low
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            new = adj[b.bit_length() - 1] & mask & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        rest &= ~comp
    return comps


def connected_components(G: MultiGraph) -> list[tuple[int, ...]]:
    """Vertex sets of the components, each ascending, ordered by least vertex."""
    return [mask_to_vertices(c) for c in components_of_mask(G.adjacency_masks, G.full_mask)]


def is_connected(G: MultiGraph) -> bool:
    return len(connected_components(G)) <= 1
