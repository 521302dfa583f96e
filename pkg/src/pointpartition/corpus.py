"""Corpus verification: run every invariant check over enumerated or random graphs.

Each check is counted by name in a :class:`CorpusReport`; a failure records a
violation line naming the graph.  Nothing is canonicalised, so isomorphic
copies are checked independently.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Iterator

from .degeneracy import is_sdt_set, validate_coloring
from .exact import (
    SubsetProfile,
    alpha_t,
    chi_t,
    iter_sdt_colorings,
    lovasz_criterion,
    omega_t,
    perfection_oracle,
)
from .formats import serialize_graph
from .graph import (
    MultiGraph,
    induced_subgraph,
    random_multigraph,
    remove_edge,
    s_t,
    t_complement,
    uniform_inflation,
)
from .perfect_coloring import color_perfect, max_sdt_set_perfect
from .structural import (
    chi2_perfect_by_cycles,
    find_clique_cycle,
    find_gdt_subgraph,
    find_gdt_subgraph_bruteforce,
    find_induced_long_cycle,
    is_clique_acyclic_inflation_of_perfect,
    is_clique_cycle,
    is_induced_cycle,
    perfection_certificate,
    validate_certificate,
)

MONOTONE_MAX_ORDER = 6
BRUTE_GDT_MAX_ORDER = 8
COLORINGS_SAMPLED = 12


@dataclass
class CorpusReport:
    graphs: int = 0
    checks: Counter = field(default_factory=Counter)
    violations: list[str] = field(default_factory=list)
    perfect: int = 0
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def check(self, name: str, passed: bool, G: MultiGraph | None = None, detail: str = "") -> None:
        self.checks[name] += 1
        if not passed:
            where = "" if G is None else " " + repr(G)
            self.violations.append(f"{name}:{where} {detail}".rstrip())

    def merge(self, other: CorpusReport) -> None:
        self.graphs += other.graphs
        self.checks.update(other.checks)
        self.violations.extend(other.violations)
        self.perfect += other.perfect
        self.elapsed += other.elapsed

    def summary(self) -> str:
        lines = [f"graphs checked: {self.graphs} (perfect: {self.perfect})"]
        for name in sorted(self.checks):
            lines.append(f"  {name}: {self.checks[name]}")
        lines.append(f"violations: {len(self.violations)}")
        lines.extend(f"  {v}" for v in sorted(self.violations))
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "graphs": self.graphs,
            "perfect": self.perfect,
            "checks": dict(sorted(self.checks.items())),
            "violations": sorted(self.violations),
            "ok": self.ok,
        }


# -- corpora ---------------------------------------------------------------


def all_multigraphs(n: int, t: int) -> Iterator[MultiGraph]:
    """Every assignment of multiplicities 0..t to the pairs of ``1..n``."""
    pairs = list(combinations(range(1, n + 1), 2))
    for values in product(range(t + 1), repeat=len(pairs)):
        yield MultiGraph(n, {p: m for p, m in zip(pairs, values) if m})


def random_graphs(n: int, t: int, count: int, seed: int) -> Iterator[MultiGraph]:
    """Seeded random members of MG_t with a fresh density per graph."""
    rng = random.Random(f"corpus:{seed}:{n}:{t}")
    for _ in range(count):
        yield random_multigraph(n, t, rng.random(), rng.randrange(2**32))


def random_simple_graphs(n: int, count: int, seed: int) -> Iterator[MultiGraph]:
    return random_graphs(n, 1, count, seed)


# -- per-graph checks ---------------------------------------------------------


def check_equations(G: MultiGraph, t: int, report: CorpusReport, profile: SubsetProfile) -> None:
    """Bounds |G| <= chi*alpha, omega <= chi, omega_t = omega_1(S_t), monotonicity, and witnesses."""
    full = G.full_mask
    w, clique = omega_t(G, t)
    a, sdset = alpha_t(G, t)
    c, coloring = chi_t(G, t)
    report.check("exact-routes-agree", (w, a, c) == (profile.omega[full], profile.alpha[full], profile.chi[full]), G,
                 f"bnb={(w, a, c)}")
    report.check("order<=chi*alpha", G.n <= c * a, G)
    report.check("omega<=chi", w <= c, G)
    report.check("omega_t=omega_1(S_t)", w == omega_t(s_t(G, t), 1)[0], G)
    report.check("witness-clique", len(clique) == w and all(G.mu(u, v) >= t for u, v in combinations(clique, 2)), G)
    report.check("witness-sdt-set", len(sdset) == a and is_sdt_set(G, sdset, t), G)
    report.check("witness-coloring", coloring.num_colors == c and validate_coloring(G, coloring, t), G)
    if G.n <= MONOTONE_MAX_ORDER:
        chi = profile.chi
        ok = True
        for mask in range(1, full + 1):
            cm = chi[mask]
            sub = mask
            while sub:
                b = sub & -sub
                sub ^= b
                if not chi[mask ^ b] <= cm <= chi[mask ^ b] + 1:
                    ok = False
        report.check("chi-monotone", ok, G)


def check_characterization(G: MultiGraph, t: int, report: CorpusReport, profile: SubsetProfile) -> bool:
    """Structural verdict = brute-force oracle = Lovasz-type criterion; returns the verdict."""
    oracle = perfection_oracle(G, t, profile)
    lov = lovasz_criterion(G, t, profile)
    cert = perfection_certificate(G, t)
    report.check("characterization", cert.perfect == oracle.perfect == lov.holds, G,
                 f"structural={cert.perfect} oracle={oracle.perfect} lovasz={lov.holds}")
    report.check("witness-certificate", validate_certificate(G, cert), G, str(cert))
    if not oracle.perfect:
        H, _ = induced_subgraph(G, oracle.witness)
        report.check("witness-oracle",
                     omega_t(H, t)[0] == oracle.omega_t != oracle.chi_t == chi_t(H, t)[0], G)
    if not lov.holds:
        H, _ = induced_subgraph(G, lov.witness)
        report.check("witness-lovasz",
                     H.n == lov.order > omega_t(H, t)[0] * alpha_t(H, t)[0], G)
    return oracle.perfect


def check_perfect_coloring(G: MultiGraph, t: int, report: CorpusReport, profile: SubsetProfile) -> None:
    full = G.full_mask
    phi = color_perfect(G, t)
    report.check("perfect-coloring", phi.num_colors == profile.omega[full] and validate_coloring(G, phi, t), G)
    X = max_sdt_set_perfect(G, t)
    report.check("perfect-max-sdt-set", len(X) == profile.alpha[full] and is_sdt_set(G, X, t), G)
    S = s_t(G, t)
    ok = True
    for i, psi in enumerate(iter_sdt_colorings(S, 1, profile.omega[full])):
        if i >= COLORINGS_SAMPLED:
            break
        ok = ok and validate_coloring(G, psi, t)
    report.check("every-optimal-S_t-coloring", ok, G)


def check_t2(G: MultiGraph, report: CorpusReport, perfect: bool) -> None:
    """Cycle / normality equivalences that only make sense at t = 2."""
    cyc = find_induced_long_cycle(G)
    if cyc:
        report.check("witness-long-cycle", is_induced_cycle(G, cyc), G)
    gd = find_gdt_subgraph(G, 2)
    report.check("gdt-vs-long-cycle", (gd is None) == (cyc is None), G)
    comp = t_complement(G, 2)
    cc = find_clique_cycle(comp)
    if cc:
        report.check("witness-clique-cycle", is_clique_cycle(comp, cc), G)
    report.check("no-long-cycle<=>complement-normal", (cyc is None) == (cc is None), G)
    report.check("perfect<=>complement-clique-acyclic-inflation",
                 perfect == is_clique_acyclic_inflation_of_perfect(comp), G)
    report.check("cycle-route-agrees", chi2_perfect_by_cycles(G).perfect == perfect, G)


def check_graph(G: MultiGraph, t: int, report: CorpusReport) -> None:
    """Run every applicable check on ``G`` (a member of MG_t)."""
    report.graphs += 1
    profile = SubsetProfile(G, t)
    perfect = check_characterization(G, t, report, profile)
    report.perfect += perfect
    check_equations(G, t, report, profile)
    if perfect:
        check_perfect_coloring(G, t, report, profile)
    if t >= 2 and G.n <= BRUTE_GDT_MAX_ORDER:
        brute = find_gdt_subgraph_bruteforce(G, t)
        report.check("gdt-search-vs-bruteforce", (brute is None) == (find_gdt_subgraph(G, t) is None), G)
    if t == 2:
        check_t2(G, report, perfect)


def check_inflation(H: MultiGraph, t: int, report: CorpusReport, rng: random.Random, colorings: int = 5) -> None:
    """Coloring bridge between H and tH, and chi(H) = chi_t(tH)."""
    tH = uniform_inflation(H, t)
    report.check("chi(H)=chi_t(tH)", chi_t(H, 1)[0] == chi_t(tH, t)[0], H)
    for _ in range(colorings):
        phi = {v: rng.randint(1, 3) for v in H.vertices}
        report.check("CO_1(H)=CO_t(tH)", validate_coloring(H, phi, 1) == validate_coloring(tH, phi, t), H)


def check_edge_deletion(G: MultiGraph, t: int, report: CorpusReport) -> None:
    """Removing one edge lowers chi_t by at most one, and not at all on a pair above t."""
    c = chi_t(G, t)[0]
    for u, v, m in G.pairs():
        c2 = chi_t(remove_edge(G, u, v), t)[0]
        report.check("edge-deletion-drop<=1", c - 1 <= c2 <= c, G)
        if m >= t + 1:
            report.check("edge-deletion-above-t", c2 == c, G)


# -- driver -----------------------------------------------------------------------


def run_checks(graphs: Iterable[MultiGraph], t: int, report: CorpusReport | None = None) -> CorpusReport:
    report = report or CorpusReport()
    start = time.perf_counter()
    for G in graphs:
        check_graph(G, t, report)
    report.elapsed += time.perf_counter() - start
    return report


def verify_corpus(
    t: int,
    n_max: int,
    mode: str = "exhaustive",
    seed: int = 0,
    sample: int = 500,
) -> CorpusReport:
    """Exhaustive: every graph of MG_t on 1..n_max vertices.  Random: ``sample``
    seeded graphs of order ``n_max``, plus inflation checks at t >= 2.
    """
    report = CorpusReport()
    if mode == "exhaustive":
        for n in range(1, n_max + 1):
            run_checks(all_multigraphs(n, t), t, report)
    elif mode == "random":
        run_checks(random_graphs(n_max, t, sample, seed), t, report)
        if t >= 2:
            rng = random.Random(f"inflation:{seed}")
            for H in random_simple_graphs(min(n_max, 6), min(sample, 200), seed):
                check_inflation(H, t, report, rng)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return report


def describe(G: MultiGraph) -> str:
    return serialize_graph(G).replace("\n", "; ")
