"""Exact desk-scale computation of omega_t, alpha_t and chi_t.

Two independent routes are provided:

* branch-and-bound searches for a single graph (:func:`omega_t`,
  :func:`alpha_t`, :func:`chi_t`), each returning a witness;
* :class:`SubsetProfile`, a dynamic program over all vertex subsets that
  yields the three invariants for *every* induced subgraph at once.  The
  perfection oracle and the Lovasz-type criterion are built on it.

Vertex sets are handled as bitmasks internally (vertex ``v`` is bit
``v - 1``) and returned as ascending tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .degeneracy import Coloring, core_mask
from .graph import GraphError, MultiGraph, mask_to_vertices

ORACLE_MAX_ORDER = 14


def _check_level(t: int) -> None:
    if t < 1:
        raise GraphError(f"level t must be >= 1, got {t}")


def _check_mg_t(G: MultiGraph, t: int) -> None:
    _check_level(t)
    if G.max_multiplicity > t:
        raise GraphError(f"graph has multiplicity {G.max_multiplicity} > t={t}; outside MG_t")


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def _greedy_color_bound(adj: Sequence[int], cand: int) -> int:
    """Number of colors a sequential greedy coloring uses on ``cand``."""
    colors = 0
    rest = cand
    while rest:
        colors += 1
        q = rest
        while q:
            low = q & -q
            rest ^= low
            q &= ~low & ~adj[low.bit_length() - 1]
    return colors


def max_clique_mask(adj: Sequence[int], cand: int) -> int:
    """Lexicographically least maximum clique inside ``cand``.

    Include-first branching over ascending vertices with a greedy-coloring
    upper bound; only strict improvements replace the incumbent, so the first
    maximum found is the lexicographically least one.
    """
    best = [0, 0]

    def expand(cur: int, size: int, cand: int) -> None:
        if size > best[1]:
            best[0], best[1] = cur, size
        while cand:
            if size + _greedy_color_bound(adj, cand) <= best[1]:
                return
            low = cand & -cand
            cand ^= low
            expand(cur | low, size + 1, cand & adj[low.bit_length() - 1])

    expand(0, 0, cand)
    return best[0]


def complement_masks(adj: Sequence[int]) -> tuple[int, ...]:
    full = (1 << len(adj)) - 1
    return tuple(full & ~a & ~(1 << i) for i, a in enumerate(adj))


def maximum_clique(H: MultiGraph) -> tuple[int, ...]:
    """Maximum clique of the underlying simple graph of ``H``."""
    return mask_to_vertices(max_clique_mask(H.adjacency_masks, H.full_mask))


def maximum_independent_set(H: MultiGraph) -> tuple[int, ...]:
    return mask_to_vertices(max_clique_mask(complement_masks(H.adjacency_masks), H.full_mask))


def omega_t(G: MultiGraph, t: int) -> tuple[int, tuple[int, ...]]:
    """Largest t-fold clique: pairwise multiplicity at least ``t``."""
    _check_level(t)
    witness = mask_to_vertices(max_clique_mask(G.masks_at_least(t), G.full_mask))
    return len(witness), witness


def _max_sd_mask(G: MultiGraph, t: int, cand: int) -> int:
    best = [0, 0]

    def expand(cur: int, size: int, cand: int) -> None:
        if size > best[1]:
            best[0], best[1] = cur, size
        # heredity: a vertex that cannot join cur now never can
        cand = sum(b for b in _bits(cand) if core_mask(G, cur | b, t) == 0)
        while cand:
            if size + cand.bit_count() <= best[1]:
                return
            low = cand & -cand
            cand ^= low
            expand(cur | low, size + 1, cand)

    expand(0, 0, cand)
    return best[0]


def alpha_t(G: MultiGraph, t: int) -> tuple[int, tuple[int, ...]]:
    """Maximum SD_t-set, lexicographically least among the maximum ones."""
    _check_level(t)
    witness = mask_to_vertices(_max_sd_mask(G, t, G.full_mask))
    return len(witness), witness


def _coloring_order(G: MultiGraph) -> list[int]:
    return sorted(G.vertices, key=lambda v: (-G.degree(v), v))


def _search_coloring(G: MultiGraph, t: int, k: int, order: list[int]) -> dict[int, int] | None:
    classes = [0] * k
    colors: dict[int, int] = {}

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        bit = 1 << (v - 1)
        # first occurrence of each color is fixed: vertex i may open color used+1 only
        for c in range(min(used + 1, k)):
            trial = classes[c] | bit
            if core_mask(G, trial, t):
                continue
            classes[c] = trial
            colors[v] = c + 1
            if place(i + 1, max(used, c + 1)):
                return True
            classes[c] ^= bit
        colors.pop(v, None)
        return False

    return dict(colors) if place(0, 0) else None


def chi_t(G: MultiGraph, t: int) -> tuple[int, Coloring]:
    """Point partition number with an optimal SD_t-coloring as witness.

    Tries ``k`` upward from ``max(omega_t, ceil(n / alpha_t))``.
    """
    _check_level(t)
    if G.n == 0:
        return 0, Coloring({}, 0)
    w, _ = omega_t(G, t)
    a, _ = alpha_t(G, t)
    order = _coloring_order(G)
    k = max(w, -(-G.n // a))
    while True:
        found = _search_coloring(G, t, k, order)
        if found is not None:
            return k, Coloring(found, k)
        k += 1


def iter_sdt_colorings(G: MultiGraph, t: int, k: int) -> Iterator[Coloring]:
    """Every member of CO_t(G, k) up to renaming colors.

    Colors are normalised so that they first appear in increasing order along
    ``1..n``; classes may therefore use fewer than ``k`` colors.
    """
    _check_level(t)
    classes = [0] * k
    colors: dict[int, int] = {}
    n = G.n

    def place(v: int, used: int):
        if v > n:
            yield Coloring(dict(colors), k)
            return
        bit = 1 << (v - 1)
        for c in range(min(used + 1, k)):
            trial = classes[c] | bit
            if core_mask(G, trial, t):
                continue
            classes[c] = trial
            colors[v] = c + 1
            yield from place(v + 1, max(used, c + 1))
            classes[c] ^= bit
            del colors[v]

    yield from place(1, 0)


@dataclass(frozen=True)
class InvariantReport:
    omega_t: int
    alpha_t: int
    chi_t: int
    witness_clique: tuple[int, ...]
    witness_sdt_set: tuple[int, ...]
    witness_coloring: Coloring

    def to_dict(self) -> dict:
        return {
            "omega_t": self.omega_t,
            "alpha_t": self.alpha_t,
            "chi_t": self.chi_t,
            "witness_clique": list(self.witness_clique),
            "witness_sdt_set": list(self.witness_sdt_set),
            "witness_coloring": {str(v): c for v, c in self.witness_coloring.assignment.items()},
        }


def invariant_report(G: MultiGraph, t: int) -> InvariantReport:
    w, clique = omega_t(G, t)
    a, sdset = alpha_t(G, t)
    c, coloring = chi_t(G, t)
    return InvariantReport(w, a, c, clique, sdset, coloring)


class SubsetProfile:
    """omega_t, alpha_t, chi_t and SD_t membership for every vertex subset.

    ``profile.chi[mask]`` is chi_t of the subgraph induced by ``mask``, and
    likewise for ``omega``, ``alpha`` and ``sd``.  Cost is O(3^n).
    """

    def __init__(self, G: MultiGraph, t: int):
        _check_level(t)
        n = G.n
        if n > ORACLE_MAX_ORDER:
            raise GraphError(f"subset profile limited to n <= {ORACLE_MAX_ORDER}, got {n}")
        self.n = n
        self.t = t
        size = 1 << n
        rows = [G.row(v)[1:] for v in G.vertices]
        fold = G.masks_at_least(t)

        # deg[v][mask]: degree of vertex v+1 counted inside mask
        deg = [[0] * size for _ in range(n)]
        sd = [True] * size
        clique = [True] * size
        omega = [0] * size
        alpha = [0] * size
        for mask in range(1, size):
            low = mask & -mask
            li = low.bit_length() - 1
            prev = mask ^ low
            for v in range(n):
                deg[v][mask] = deg[v][prev] + rows[v][li]
            # heredity: peeling any low-degree vertex decides membership
            s = False
            for v in range(n):
                if mask >> v & 1 and deg[v][mask] < t:
                    s = sd[mask ^ (1 << v)]
                    break
            sd[mask] = s
            clique[mask] = clique[prev] and fold[li] & prev == prev
            if clique[mask]:
                omega[mask] = mask.bit_count()
            else:
                omega[mask] = max(omega[mask ^ b] for b in _bits(mask))
            if s:
                alpha[mask] = mask.bit_count()
            else:
                alpha[mask] = max(alpha[mask ^ b] for b in _bits(mask))

        chi = [0] * size
        for mask in range(1, size):
            low = mask & -mask
            rest = mask ^ low
            best = n
            sub = rest
            while True:
                part = sub | low
                if sd[part]:
                    c = chi[mask ^ part] + 1
                    if c < best:
                        best = c
                if not sub:
                    break
                sub = (sub - 1) & rest
            chi[mask] = best

        self.sd = sd
        self.omega = omega
        self.alpha = alpha
        self.chi = chi

    def masks_by_size(self) -> Iterator[int]:
        """Nonempty masks by increasing size, lexicographic within a size."""
        for k in range(1, self.n + 1):
            for combo in combinations(range(self.n), k):
                yield sum(1 << i for i in combo)


@dataclass(frozen=True)
class OracleResult:
    perfect: bool
    witness: tuple[int, ...] | None = None
    omega_t: int | None = None
    chi_t: int | None = None


@dataclass(frozen=True)
class LovaszResult:
    holds: bool
    witness: tuple[int, ...] | None = None
    order: int | None = None
    omega_t: int | None = None
    alpha_t: int | None = None


def perfection_oracle(G: MultiGraph, t: int, profile: SubsetProfile | None = None) -> OracleResult:
    """Brute-force chi_t-perfection: compare omega_t and chi_t on every induced subgraph.

    A failing verdict carries the smallest offending vertex set
    (lexicographically least among those of that size).
    """
    _check_mg_t(G, t)
    p = profile or SubsetProfile(G, t)
    for mask in p.masks_by_size():
        if p.omega[mask] != p.chi[mask]:
            return OracleResult(False, mask_to_vertices(mask), p.omega[mask], p.chi[mask])
    return OracleResult(True)


def lovasz_criterion(G: MultiGraph, t: int, profile: SubsetProfile | None = None) -> LovaszResult:
    """Check ``|H| <= omega_t(H) * alpha_t(H)`` for every induced subgraph ``H``."""
    _check_mg_t(G, t)
    p = profile or SubsetProfile(G, t)
    for mask in p.masks_by_size():
        size = mask.bit_count()
        if size > p.omega[mask] * p.alpha[mask]:
            return LovaszResult(False, mask_to_vertices(mask), size, p.omega[mask], p.alpha[mask])
    return LovaszResult(True)
