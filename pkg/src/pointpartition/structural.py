"""Structural chi_t-perfection tests with certificates.

A graph G in MG_t (t >= 2) is chi_t-perfect exactly when S_t(G) has no odd
hole or odd antihole and no induced subgraph of G is a connected member of
MG_{t-1} with minimum degree at least t (the class GD_t).  For t = 2 the
second condition is equivalent to G having no induced cycle of length >= 3.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .degeneracy import core_mask
from .exact import complement_masks
from .graph import (
    GraphError,
    MultiGraph,
    components_of_mask,
    mask_to_vertices,
    s_t,
    underlying_simple,
)

ODD_HOLE = "odd-hole-of-S_t"
ODD_ANTIHOLE = "odd-antihole-of-S_t"
GDT = "gdt-subgraph"
LONG_CYCLE = "induced-long-cycle"
NONE = "none"

KINDS = (ODD_HOLE, ODD_ANTIHOLE, GDT, LONG_CYCLE, NONE)


@dataclass(frozen=True)
class PerfectionCertificate:
    perfect: bool
    kind: str
    witness: tuple[int, ...]
    t: int

    @property
    def verdict(self) -> str:
        return "perfect" if self.perfect else "imperfect"

    def to_dict(self) -> dict:
        return {"verdict": self.verdict, "kind": self.kind, "witness": list(self.witness), "t": self.t}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def __str__(self) -> str:
        if self.perfect:
            return "perfect"
        return f"imperfect: {self.kind} {{{','.join(map(str, self.witness))}}}"


def _perfect(t: int) -> PerfectionCertificate:
    return PerfectionCertificate(True, NONE, (), t)


def _imperfect(kind: str, witness, t: int) -> PerfectionCertificate:
    return PerfectionCertificate(False, kind, tuple(sorted(witness)), t)


def _require_simple(H: MultiGraph) -> None:
    if not H.is_simple():
        raise GraphError("expected a simple graph")


def chordless_cycles(
    n: int,
    step: Sequence[int],
    touch: Sequence[int],
) -> Iterator[tuple[int, ...]]:
    """Enumerate induced cycles of length >= 3 as vertex tuples (1-based).

    ``step[i]`` is the bitmask of vertices a cycle may move to from vertex
    ``i + 1``; ``touch[i]`` is every vertex adjacent to it at all (a superset
    of ``step[i]``).  A cycle is reported when consecutive vertices are
    ``step``-joined and no other pair is ``touch``-joined.

    Each cycle starts at its least vertex and paths only grow through larger
    vertices; chords are forbidden as the path grows, so dead branches are
    cut early.  Every cycle is produced twice, once per direction.
    """
    for s in range(n):
        above = ~((1 << (s + 1)) - 1)
        s_bit = 1 << s
        path = [s]

        # forbidden: vertices touching an interior vertex (not the last one)
        def grow(on_path: int, forbidden: int):
            last = path[-1]
            cand = step[last] & above & ~on_path & ~forbidden
            while cand:
                low = cand & -cand
                cand ^= low
                v = low.bit_length() - 1
                if len(path) >= 2 and touch[v] & s_bit:
                    if step[v] & s_bit:
                        yield tuple(x + 1 for x in path + [v])
                    continue
                path.append(v)
                yield from grow(on_path | low, forbidden | (touch[last] if len(path) > 2 else 0))
                path.pop()

        yield from grow(s_bit, 0)


def _first_odd(cycles: Iterator[tuple[int, ...]]) -> tuple[int, ...] | None:
    for cyc in cycles:
        if len(cyc) >= 5 and len(cyc) % 2:
            return cyc
    return None


def find_odd_hole(H: MultiGraph) -> tuple[int, ...] | None:
    """An induced odd cycle of length >= 5 in the simple graph ``H``, in cycle order."""
    _require_simple(H)
    adj = H.adjacency_masks
    return _first_odd(chordless_cycles(H.n, adj, adj))


def find_odd_antihole(H: MultiGraph) -> tuple[int, ...] | None:
    """A vertex set inducing the complement of an odd cycle of length >= 5.

    Returned in the cycle order of the complement.
    """
    _require_simple(H)
    co = complement_masks(H.adjacency_masks)
    return _first_odd(chordless_cycles(H.n, co, co))


def chi1_perfect(H: MultiGraph) -> PerfectionCertificate:
    """Perfection of a simple graph via odd hole / odd antihole search."""
    _require_simple(H)
    hole = find_odd_hole(H)
    if hole:
        return _imperfect(ODD_HOLE, hole, 1)
    anti = find_odd_antihole(H)
    if anti:
        return _imperfect(ODD_ANTIHOLE, anti, 1)
    return _perfect(1)


def find_induced_long_cycle(G: MultiGraph) -> tuple[int, ...] | None:
    """X with ``G[X]`` a cycle of length >= 3 carrying single edges only."""
    return next(chordless_cycles(G.n, G.unit_masks, G.adjacency_masks), None)


def maximal_independent_sets(adj: Sequence[int], cand: int) -> Iterator[int]:
    """Maximal independent sets within ``cand`` (Bron-Kerbosch on the complement, with pivoting)."""
    co = complement_masks(adj)

    def bk(r: int, p: int, x: int):
        if not p and not x:
            yield r
            return
        px = p | x
        pivot = max((b for b in _iter_bits(px)), key=lambda b: (co[b.bit_length() - 1] & p).bit_count())
        for b in _iter_bits(p & ~co[pivot.bit_length() - 1]):
            i = b.bit_length() - 1
            yield from bk(r | b, p & co[i], x & co[i])
            p &= ~b
            x |= b

    yield from bk(0, cand, 0)


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def _check_gdt_args(G: MultiGraph, t: int) -> None:
    if t < 2:
        raise GraphError(f"GD_t is defined for t >= 2, got t={t}")
    if G.max_multiplicity > t:
        raise GraphError(f"graph has multiplicity {G.max_multiplicity} > t={t}; outside MG_t")


def find_gdt_subgraph(G: MultiGraph, t: int) -> tuple[int, ...] | None:
    """An induced subgraph in GD_t, or None.

    Any GD_t member avoids t-fold pairs, so it sits inside a maximal
    independent set Y of S_t(G), and then inside the t-core of G[Y].  A
    component of a nonempty such core is itself in GD_t.
    """
    _check_gdt_args(G, t)
    adj = G.adjacency_masks
    for y in maximal_independent_sets(G.masks_exactly(t), G.full_mask):
        core = core_mask(G, y, t)
        if core:
            return mask_to_vertices(components_of_mask(adj, core)[0])
    return None


def find_gdt_subgraph_bruteforce(G: MultiGraph, t: int, max_order: int = 12) -> tuple[int, ...] | None:
    """Smallest induced GD_t member by direct subset enumeration (lexicographic tie-break)."""
    _check_gdt_args(G, t)
    if G.n > max_order:
        raise GraphError(f"brute force limited to n <= {max_order}")
    for k in range(2, G.n + 1):
        for X in combinations(G.vertices, k):
            if _is_gdt(G, X, t):
                return X
    return None


def _is_gdt(G: MultiGraph, X, t: int) -> bool:
    X = list(X)
    if not X:
        return False
    for u, v in combinations(X, 2):
        if G.mu(u, v) >= t:
            return False
    if any(sum(G.mu(v, u) for u in X if u != v) < t for v in X):
        return False
    return _connected(G, X, lambda m: m >= 1)


def chi_t_perfect_structural(G: MultiGraph, t: int) -> PerfectionCertificate:
    """chi_t-perfection for ``t >= 2`` via S_t(G) perfection and GD_t search.

    Witnesses are tried in the fixed order odd hole, odd antihole, GD_t.
    """
    _check_gdt_args(G, t)
    S = s_t(G, t)
    hole = find_odd_hole(S)
    if hole:
        return _imperfect(ODD_HOLE, hole, t)
    anti = find_odd_antihole(S)
    if anti:
        return _imperfect(ODD_ANTIHOLE, anti, t)
    gd = find_gdt_subgraph(G, t)
    if gd:
        return _imperfect(GDT, gd, t)
    return _perfect(t)


def chi2_perfect_by_cycles(G: MultiGraph) -> PerfectionCertificate:
    """t = 2 variant: S_2(G) perfect and no induced cycle of length >= 3."""
    _check_gdt_args(G, 2)
    cert = chi1_perfect(s_t(G, 2))
    if not cert.perfect:
        return PerfectionCertificate(False, cert.kind, cert.witness, 2)
    cyc = find_induced_long_cycle(G)
    if cyc:
        return _imperfect(LONG_CYCLE, cyc, 2)
    return _perfect(2)


def perfection_certificate(G: MultiGraph, t: int) -> PerfectionCertificate:
    """Dispatch: hole/antihole search at t = 1, structural test for t >= 2."""
    if t == 1:
        if G.max_multiplicity > 1:
            raise GraphError(f"graph has multiplicity {G.max_multiplicity} > t=1; outside MG_1")
        return chi1_perfect(G)
    return chi_t_perfect_structural(G, t)


def find_clique_cycle(G: MultiGraph) -> tuple[int, ...] | None:
    """A cycle of single edges whose vertex set is a clique of ``G``, in cycle order."""
    unit = G.unit_masks
    adj = G.adjacency_masks
    for s in range(G.n):
        above = ~((1 << (s + 1)) - 1)
        s_bit = 1 << s
        path = [s]

        def grow(common: int):
            last = path[-1]
            cand = unit[last] & common & above
            while cand:
                low = cand & -cand
                cand ^= low
                v = low.bit_length() - 1
                if len(path) >= 2 and unit[v] & s_bit:
                    return tuple(x + 1 for x in path + [v])
                path.append(v)
                found = grow(common & adj[v])
                path.pop()
                if found:
                    return found
            return None

        found = grow(adj[s])
        if found:
            return found
    return None


def is_normal(G: MultiGraph) -> tuple[bool, tuple[int, ...] | None]:
    """``(normal, witness)``: normal iff no simple cycle spans a clique."""
    cyc = find_clique_cycle(G)
    return cyc is None, cyc


def is_clique_acyclic_inflation_of_perfect(G: MultiGraph) -> bool:
    return is_normal(G)[0] and chi1_perfect(underlying_simple(G)).perfect


# -- independent witness validation -----------------------------------------


def _connected(G: MultiGraph, X, joined) -> bool:
    X = list(X)
    if not X:
        return False
    seen = {X[0]}
    stack = [X[0]]
    while stack:
        v = stack.pop()
        for u in X:
            if u not in seen and joined(G.mu(u, v)):
                seen.add(u)
                stack.append(u)
    return len(seen) == len(X)


def _is_cycle(G: MultiGraph, X, joined) -> bool:
    """``joined`` restricted to X forms a single cycle through all of X."""
    X = list(X)
    if len(X) < 3:
        return False
    for v in X:
        if sum(1 for u in X if u != v and joined(G.mu(u, v))) != 2:
            return False
    return _connected(G, X, joined)


def validate_certificate(G: MultiGraph, cert: PerfectionCertificate) -> bool:
    """Check a certificate's witness against the defining property of its kind.

    Works directly from multiplicities; shares no search code with the finders.
    """
    X = cert.witness
    t = cert.t
    if len(set(X)) != len(X) or any(not 1 <= v <= G.n for v in X):
        return False
    if cert.perfect:
        return cert.kind == NONE and not X
    if cert.kind in (ODD_HOLE, ODD_ANTIHOLE):
        if len(X) < 5 or len(X) % 2 == 0:
            return False
        if cert.kind == ODD_HOLE:
            return _is_cycle(G, X, lambda m: m == t)
        return _is_cycle(G, X, lambda m: m != t)
    if cert.kind == GDT:
        return _is_gdt(G, X, t)
    if cert.kind == LONG_CYCLE:
        if any(G.mu(u, v) > 1 for u, v in combinations(X, 2)):
            return False
        return _is_cycle(G, X, lambda m: m == 1)
    return False


def is_clique_cycle(G: MultiGraph, cyc: Sequence[int]) -> bool:
    """Validate a witness of non-normality: single-edge cycle spanning a clique."""
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        return False
    if any(G.mu(u, v) < 1 for u, v in combinations(cyc, 2)):
        return False
    return all(G.mu(cyc[i], cyc[(i + 1) % len(cyc)]) == 1 for i in range(len(cyc)))


def is_induced_cycle(G: MultiGraph, cyc: Sequence[int], step=lambda m: m == 1) -> bool:
    """``cyc`` in order is a cycle on ``step``-pairs with no other adjacency."""
    k = len(cyc)
    if k < 3 or len(set(cyc)) != k:
        return False
    for i, j in combinations(range(k), 2):
        m = G.mu(cyc[i], cyc[j])
        consecutive = j == i + 1 or (i == 0 and j == k - 1)
        if consecutive and not step(m):
            return False
        if not consecutive and m:
            return False
    return True

