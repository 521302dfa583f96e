from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import multigraphs
from pointpartition.exact import perfection_oracle
from pointpartition.graph import (
    GraphError,
    MultiGraph,
    build_graph,
    complement,
    complete,
    cycle,
    edgeless,
    path,
    t_complement,
    t_complete,
    uniform_inflation,
    underlying_simple,
)
from pointpartition.structural import (
    GDT,
    LONG_CYCLE,
    NONE,
    ODD_ANTIHOLE,
    ODD_HOLE,
    PerfectionCertificate,
    chi1_perfect,
    chi2_perfect_by_cycles,
    chi_t_perfect_structural,
    chordless_cycles,
    find_clique_cycle,
    find_gdt_subgraph,
    find_gdt_subgraph_bruteforce,
    find_induced_long_cycle,
    find_odd_antihole,
    find_odd_hole,
    is_clique_acyclic_inflation_of_perfect,
    is_clique_cycle,
    is_induced_cycle,
    is_normal,
    maximal_independent_sets,
    perfection_certificate,
    validate_certificate,
)

PETERSEN = build_graph(
    10,
    [(i, i + 1, 1) for i in range(1, 5)]
    + [(1, 5, 1)]
    + [(i, i + 5, 1) for i in range(1, 6)]
    + [(6, 8, 1), (8, 10, 1), (7, 10, 1), (7, 9, 1), (6, 9, 1)],
)


def test_odd_hole_examples():
    assert sorted(find_odd_hole(cycle(5))) == [1, 2, 3, 4, 5]
    assert find_odd_hole(cycle(6)) is None
    assert find_odd_hole(complete(5)) is None
    hole = find_odd_hole(PETERSEN)
    assert len(hole) in (5, 7, 9) and is_induced_cycle(PETERSEN, hole)
    with pytest.raises(GraphError):
        find_odd_hole(t_complete(3, 2))


def test_odd_antihole_examples():
    anti = find_odd_antihole(complement(cycle(7)))
    assert sorted(anti) == list(range(1, 8))
    # the antihole order is a cycle in the complement
    assert is_induced_cycle(cycle(7), anti)
    assert find_odd_antihole(complement(cycle(6))) is None
    # C_5 is self-complementary, so it is also an antihole
    assert sorted(find_odd_antihole(cycle(5))) == [1, 2, 3, 4, 5]


def test_chi1_perfect_examples():
    assert chi1_perfect(cycle(6)).perfect
    assert chi1_perfect(complete(5)).perfect
    assert chi1_perfect(edgeless(0)).perfect
    cert = chi1_perfect(PETERSEN)
    assert not cert.perfect and cert.kind == ODD_HOLE
    cert = chi1_perfect(complement(cycle(7)))
    assert cert.kind == ODD_ANTIHOLE and cert.witness == tuple(range(1, 8))
    assert str(chi1_perfect(cycle(5))) == "imperfect: odd-hole-of-S_t {1,2,3,4,5}"


def test_chordless_cycles_of_small_graphs():
    adj = cycle(6).adjacency_masks
    assert {frozenset(c) for c in chordless_cycles(6, adj, adj)} == {frozenset(range(1, 7))}
    adj = complete(4).adjacency_masks
    found = {frozenset(c) for c in chordless_cycles(4, adj, adj)}
    assert found == {frozenset(X) for X in combinations(range(1, 5), 3)}


def test_induced_long_cycle_examples(gstar, c5):
    assert sorted(find_induced_long_cycle(c5)) == [1, 2, 3, 4, 5]
    assert find_induced_long_cycle(gstar) is None
    assert find_induced_long_cycle(path(6)) is None
    assert find_induced_long_cycle(uniform_inflation(cycle(4), 2)) is None
    # a double chord leaves no cycle made of single edges only
    G = build_graph(5, [(1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1), (1, 5, 1), (1, 3, 2)])
    assert find_induced_long_cycle(G) is None
    # a single chord splits C_5 into an induced triangle and an induced square
    G = build_graph(5, [(1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1), (1, 5, 1), (1, 3, 1)])
    cycles = {frozenset(c) for c in chordless_cycles(5, G.unit_masks, G.adjacency_masks)}
    assert cycles == {frozenset({1, 2, 3}), frozenset({1, 3, 4, 5})}


def test_gdt_examples(c5):
    assert find_gdt_subgraph(complete(4), 2) == (1, 2, 3, 4)
    assert find_gdt_subgraph(t_complete(3, 2), 3) == (1, 2, 3)
    assert find_gdt_subgraph(c5, 2) == (1, 2, 3, 4, 5)
    assert find_gdt_subgraph(path(5), 2) is None
    assert find_gdt_subgraph(t_complete(4, 2), 2) is None
    assert find_gdt_subgraph_bruteforce(complete(4), 2) == (1, 2, 3)
    with pytest.raises(GraphError):
        find_gdt_subgraph(c5, 1)
    with pytest.raises(GraphError):
        find_gdt_subgraph(t_complete(3, 3), 2)


def test_structural_examples(gstar, c5, c5x2):
    assert chi_t_perfect_structural(gstar, 2) == PerfectionCertificate(True, NONE, (), 2)
    cert = chi_t_perfect_structural(c5x2, 2)
    assert (cert.kind, cert.witness) == (ODD_HOLE, (1, 2, 3, 4, 5))
    cert = chi_t_perfect_structural(c5, 2)
    assert (cert.kind, cert.witness) == (GDT, (1, 2, 3, 4, 5))
    assert chi_t_perfect_structural(t_complete(3, 2), 2).perfect
    assert not chi_t_perfect_structural(t_complete(3, 2), 3).perfect
    assert cert.to_dict() == {"verdict": "imperfect", "kind": GDT, "witness": [1, 2, 3, 4, 5], "t": 2}
    with pytest.raises(GraphError):
        chi_t_perfect_structural(c5, 1)


def test_cycle_route_examples(gstar, c5):
    assert chi2_perfect_by_cycles(gstar).perfect
    cert = chi2_perfect_by_cycles(c5)
    assert cert.kind == LONG_CYCLE and validate_certificate(c5, cert)
    assert perfection_certificate(cycle(5), 1).kind == ODD_HOLE
    with pytest.raises(GraphError):
        perfection_certificate(t_complete(2, 2), 1)


def test_normal_examples(gstar, c5x2):
    assert is_normal(uniform_inflation(complete(3), 2)) == (True, None)
    ok, cyc = is_normal(complete(3))
    assert not ok and sorted(cyc) == [1, 2, 3] and is_clique_cycle(complete(3), cyc)
    assert is_normal(gstar)[0]
    assert is_normal(cycle(4))[0]
    assert find_clique_cycle(cycle(4)) is None
    # K_4 with one doubled pair still has a single-edge triangle
    G = build_graph(4, [(1, 2, 2), (1, 3, 1), (1, 4, 1), (2, 3, 1), (2, 4, 1), (3, 4, 1)])
    ok, cyc = is_normal(G)
    assert not ok and is_clique_cycle(G, cyc)
    # a 4-cycle of single edges over a clique whose diagonals are double
    G = build_graph(4, [(1, 2, 1), (2, 3, 1), (3, 4, 1), (1, 4, 1), (1, 3, 2), (2, 4, 2)])
    ok, cyc = is_normal(G)
    assert not ok and len(cyc) == 4 and is_clique_cycle(G, cyc)
    assert is_clique_acyclic_inflation_of_perfect(c5x2) is False
    assert is_clique_acyclic_inflation_of_perfect(uniform_inflation(complete(4), 2))


def test_validate_certificate_rejects(c5, gstar):
    assert not validate_certificate(c5, PerfectionCertificate(False, ODD_HOLE, (1, 2, 3, 4, 5), 2))
    assert not validate_certificate(c5, PerfectionCertificate(False, GDT, (1, 2, 3), 2))
    assert not validate_certificate(c5, PerfectionCertificate(False, LONG_CYCLE, (1, 2, 3, 4), 2))
    assert not validate_certificate(c5, PerfectionCertificate(True, NONE, (1,), 2))
    assert not validate_certificate(c5, PerfectionCertificate(False, "bogus", (1, 2), 2))
    assert not validate_certificate(gstar, PerfectionCertificate(False, LONG_CYCLE, (1, 2, 3, 4, 5), 2))
    assert validate_certificate(c5, PerfectionCertificate(False, GDT, (1, 2, 3, 4, 5), 2))


def test_maximal_independent_sets():
    adj = cycle(5).adjacency_masks
    sets = sorted(maximal_independent_sets(adj, (1 << 5) - 1))
    assert len(sets) == 5 and all(bin(s).count("1") == 2 for s in sets)
    assert list(maximal_independent_sets(edgeless(3).adjacency_masks, 0b111)) == [0b111]


def _brute_mis(G):
    out = set()
    V = list(G.vertices)
    for k in range(G.n + 1):
        for X in combinations(V, k):
            if any(G.mu(u, v) for u, v in combinations(X, 2)):
                continue
            if all(any(G.mu(u, v) for v in X) for u in V if u not in X):
                out.add(sum(1 << (v - 1) for v in X))
    return out


@given(multigraphs(max_n=8, max_mu=1))
@settings(max_examples=80, deadline=None)
def test_mis_enumeration_complete(G):
    got = list(maximal_independent_sets(G.adjacency_masks, G.full_mask))
    assert len(got) == len(set(got))
    assert set(got) == _brute_mis(G)


@given(multigraphs(max_n=6, max_mu=1))
@settings(max_examples=80, deadline=None)
def test_chi1_perfect_matches_oracle(H):
    cert = chi1_perfect(H)
    assert validate_certificate(H, cert)
    assert cert.perfect == perfection_oracle(H, 1).perfect


@given(multigraphs(max_n=6, max_mu=3, min_n=1), st.integers(2, 3))
@settings(max_examples=120, deadline=None)
def test_structural_matches_oracle(G, t):
    if G.max_multiplicity > t:
        return
    cert = chi_t_perfect_structural(G, t)
    assert validate_certificate(G, cert)
    assert cert.perfect == perfection_oracle(G, t).perfect


@given(multigraphs(max_n=4, max_mu=2))
@settings(max_examples=30, deadline=None)
def test_structural_matches_definition(G):
    n, mu = oracles.from_graph(G)
    assert chi_t_perfect_structural(G, 2).perfect == oracles.perfect(n, mu, 2)


@given(multigraphs(max_n=8, max_mu=3), st.integers(2, 3))
@settings(max_examples=100, deadline=None)
def test_gdt_search_matches_bruteforce(G, t):
    if G.max_multiplicity > t:
        return
    fast = find_gdt_subgraph(G, t)
    slow = find_gdt_subgraph_bruteforce(G, t)
    assert (fast is None) == (slow is None)
    if fast:
        assert validate_certificate(G, PerfectionCertificate(False, GDT, fast, t))


@given(multigraphs(max_n=7, max_mu=2))
@settings(max_examples=100, deadline=None)
def test_t2_cycle_forms(G):
    # GD_2 members exist exactly when an induced single-edge cycle does
    assert (find_gdt_subgraph(G, 2) is None) == (find_induced_long_cycle(G) is None)
    assert chi2_perfect_by_cycles(G).perfect == chi_t_perfect_structural(G, 2).perfect
    cyc = find_induced_long_cycle(G)
    if cyc:
        assert is_induced_cycle(G, cyc)


@given(multigraphs(max_n=7, max_mu=2))
@settings(max_examples=100, deadline=None)
def test_t2_complement_duality(G):
    # no induced long cycle in G <=> the 2-complement is normal
    H = t_complement(G, 2)
    ok, cyc = is_normal(H)
    assert (find_induced_long_cycle(G) is None) == ok
    if cyc:
        assert is_clique_cycle(H, cyc)
    assert chi_t_perfect_structural(G, 2).perfect == is_clique_acyclic_inflation_of_perfect(H)


@given(multigraphs(max_n=6, max_mu=1), st.integers(2, 4))
@settings(max_examples=60, deadline=None)
def test_inflated_perfection(H, t):
    assert chi_t_perfect_structural(uniform_inflation(H, t), t).perfect == chi1_perfect(H).perfect


def test_underlying_simple_of_normal_inflation():
    G = uniform_inflation(cycle(5), 2)
    assert underlying_simple(G) == cycle(5)
    assert isinstance(G, MultiGraph)
