"""Strict t-degeneracy via t-core peeling, and SD_t-coloring checks."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .graph import GraphError, MultiGraph, check_vertex_set, mask_to_vertices, vertices_to_mask


@dataclass(frozen=True)
class Coloring:
    """A vertex -> color map using colors from ``1..k``."""

    assignment: Mapping[int, int]
    k: int = field(default=0)

    def __post_init__(self):
        assignment = dict(sorted(self.assignment.items()))
        object.__setattr__(self, "assignment", assignment)
        if not self.k:
            object.__setattr__(self, "k", max(assignment.values(), default=0))
        bad = [c for c in assignment.values() if not 1 <= c <= self.k]
        if bad:
            raise GraphError(f"colors {sorted(set(bad))} outside 1..{self.k}")

    def classes(self) -> list[tuple[int, ...]]:
        """Color classes for colors ``1..k`` (possibly empty)."""
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in self.assignment.items():
            out[c - 1].append(v)
        return [tuple(cls) for cls in out]

    @property
    def num_colors(self) -> int:
        """Number of colors actually used."""
        return len(set(self.assignment.values()))

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]


def _check_level(t: int) -> None:
    if t < 1:
        raise GraphError(f"level t must be >= 1, got {t}")


def core_mask(G: MultiGraph, mask: int, t: int) -> int:
    """Bitmask of the t-core of ``G[mask]``.

    Repeatedly deletes a vertex whose degree inside the surviving set is at
    most ``t - 1``.  Degrees live in a scratch list; ``G`` is not touched.
    """
    rows = G._rows
    verts = mask_to_vertices(mask)
    deg = {v: sum(rows[v][u] for u in verts) for v in verts}
    queue = [v for v in verts if deg[v] < t]
    alive = mask
    while queue:
        v = queue.pop()
        bit = 1 << (v - 1)
        if not alive & bit:
            continue
        alive ^= bit
        row = rows[v]
        for u in verts:
            if row[u] and alive >> (u - 1) & 1:
                before = deg[u]
                deg[u] = before - row[u]
                if before >= t > deg[u]:
                    queue.append(u)
    return alive


def is_sd_mask(G: MultiGraph, mask: int, t: int) -> bool:
    return core_mask(G, mask, t) == 0


def t_core(
    G: MultiGraph,
    t: int,
    X: Iterable[int] | None = None,
    rng: random.Random | None = None,
) -> tuple[int, ...]:
    """Vertices of the t-core of ``G`` (or of ``G[X]``), ascending.

    With ``rng`` the next vertex to peel is picked at random among all
    currently peelable vertices; the result does not depend on the choice.
    """
    _check_level(t)
    verts = G.vertices if X is None else check_vertex_set(G, X)
    if rng is None:
        return mask_to_vertices(core_mask(G, vertices_to_mask(verts), t))
    alive = set(verts)
    deg = {v: sum(G.mu(v, u) for u in alive if u != v) for v in alive}
    while True:
        low = sorted(v for v in alive if deg[v] < t)
        if not low:
            break
        v = rng.choice(low)
        alive.discard(v)
        for u in alive:
            deg[u] -= G.mu(u, v)
    return tuple(sorted(alive))


def is_strictly_t_degenerate(G: MultiGraph, t: int) -> bool:
    _check_level(t)
    return core_mask(G, G.full_mask, t) == 0


def is_sdt_set(G: MultiGraph, X: Iterable[int], t: int) -> bool:
    """True iff ``G[X]`` is strictly t-degenerate."""
    _check_level(t)
    return core_mask(G, vertices_to_mask(check_vertex_set(G, X)), t) == 0


def validate_coloring(G: MultiGraph, coloring: Coloring | Mapping[int, int], t: int) -> bool:
    """True iff every color class induces a strictly t-degenerate subgraph.

    The coloring must be total on ``V(G)``; anything else raises.
    """
    _check_level(t)
    assignment = coloring.assignment if isinstance(coloring, Coloring) else coloring
    if set(assignment) != set(G.vertices):
        missing = sorted(set(G.vertices) - set(assignment))
        extra = sorted(set(assignment) - set(G.vertices))
        raise GraphError(f"coloring is not total on V(G): missing {missing}, extra {extra}")
    classes: dict[int, int] = {}
    for v, c in assignment.items():
        classes[c] = classes.get(c, 0) | 1 << (v - 1)
    return all(core_mask(G, m, t) == 0 for m in classes.values())
