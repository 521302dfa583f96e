import pytest
from hypothesis import given, strategies as st

from conftest import multigraphs
from pointpartition.graph import (
    GraphError,
    MultiGraph,
    build_graph,
    complete,
    connected_components,
    cycle,
    edgeless,
    graph_union,
    induced_subgraph,
    path,
    random_multigraph,
    remove_edge,
    s_t,
    t_complement,
    t_complete,
    underlying_simple,
    uniform_inflation,
)


def test_build_graph_examples(gstar):
    G = build_graph(2, [(1, 2, 2)])
    assert G == t_complete(2, 2)
    assert build_graph(3, []) == edgeless(3)
    assert gstar.mu(1, 2) == 2 and gstar.mu(2, 1) == 2
    assert gstar.mu(1, 3) == 0
    assert gstar.max_multiplicity == 2
    assert gstar.degrees[1:] == (3, 3, 2, 2, 2)
    assert (gstar.min_degree, gstar.max_degree, len(gstar)) == (2, 3, 5)


@pytest.mark.parametrize(
    "n, edges, needle",
    [
        (3, [(1, 2, 1), (1, 2, 2)], "(1,2) listed twice"),
        (3, [(1, 4, 1)], "(1,4)"),
        (3, [(2, 1, 1)], "(2,1)"),
        (3, [(1, 2, 0)], "(1,2) listed with multiplicity 0"),
    ],
)
def test_build_graph_rejects(n, edges, needle):
    with pytest.raises(GraphError, match=needle.replace("(", r"\(").replace(")", r"\)")):
        build_graph(n, edges)


def test_graph_is_immutable(gstar):
    with pytest.raises(AttributeError):
        gstar._n = 7
    with pytest.raises(GraphError):
        gstar.mu(1, 1)
    with pytest.raises(GraphError):
        MultiGraph(2, {(1, 2): 256})


def test_induced_subgraph_examples(gstar):
    H, labels = induced_subgraph(gstar, {2, 3, 4, 5})
    assert labels == (2, 3, 4, 5)
    assert H == path(4)
    assert induced_subgraph(gstar, gstar.vertices)[0] == gstar
    assert induced_subgraph(t_complete(3, 2), [1, 2])[0] == t_complete(2, 2)
    with pytest.raises(GraphError):
        induced_subgraph(gstar, [1, 6])
    with pytest.raises(GraphError):
        induced_subgraph(gstar, [1, 1])


def test_s_t_and_underlying(gstar, c5, c5x2):
    assert s_t(c5x2, 2) == c5
    assert s_t(c5, 2) == edgeless(5)
    assert s_t(gstar, 2) == build_graph(5, [(1, 2, 1)])
    assert underlying_simple(c5x2) == c5
    assert underlying_simple(gstar) == c5
    assert underlying_simple(edgeless(4)) == edgeless(4)
    with pytest.raises(GraphError):
        s_t(c5, 0)


def test_t_complement_examples():
    assert t_complement(t_complete(3, 2), 2) == edgeless(3)
    assert t_complement(cycle(3), 2) == cycle(3)
    assert t_complement(edgeless(4), 2) == t_complete(4, 2)
    with pytest.raises(GraphError, match=r"\(1, 2\)"):
        t_complement(t_complete(3, 3), 2)


def test_uniform_inflation_examples(c5):
    assert uniform_inflation(complete(3), 2) == t_complete(3, 2)
    assert uniform_inflation(c5, 1) == c5
    assert uniform_inflation(complete(4), 3) == t_complete(4, 3)
    with pytest.raises(GraphError):
        uniform_inflation(t_complete(3, 2), 2)


def test_components(gstar, c5):
    assert connected_components(c5) == [(1, 2, 3, 4, 5)]
    assert connected_components(edgeless(3)) == [(1,), (2,), (3,)]
    assert connected_components(gstar) == [(1, 2, 3, 4, 5)]
    assert connected_components(build_graph(4, [(1, 3, 2), (2, 4, 1)])) == [(1, 3), (2, 4)]


def test_generators():
    assert cycle(5).num_pairs == 5 and all(m == 1 for *_, m in cycle(5).pairs())
    assert t_complete(3, 2) == build_graph(3, [(1, 2, 2), (1, 3, 2), (2, 3, 2)])
    with pytest.raises(GraphError):
        cycle(2)
    assert random_multigraph(5, 2, 0.5, 11) == random_multigraph(5, 2, 0.5, 11)
    assert random_multigraph(5, 2, 0.0, 3) == edgeless(5)
    G = random_multigraph(7, 3, 1.0, 5)
    assert G.num_pairs == 21 and G.max_multiplicity <= 3
    with pytest.raises(GraphError):
        random_multigraph(5, 2, 1.5, 0)


def test_remove_edge():
    G = build_graph(3, [(1, 2, 3), (2, 3, 1)])
    assert remove_edge(G, 2, 1).mu(1, 2) == 2
    assert remove_edge(G, 2, 3).num_pairs == 1
    with pytest.raises(GraphError):
        remove_edge(G, 1, 3)


@given(multigraphs(max_n=6, max_mu=3), st.integers(3, 4))
def test_t_complement_involution_and_sum(G, t):
    H = t_complement(G, t)
    assert t_complement(H, t) == G
    assert graph_union(G, H) == t_complete(G.n, t)


@given(multigraphs(max_n=6, max_mu=2), st.data())
def test_induced_subgraph_complement_duality(G, data):
    X = data.draw(st.sets(st.integers(1, max(G.n, 1))).filter(lambda s: s <= set(G.vertices)))
    H, _ = induced_subgraph(G, X)
    H2, _ = induced_subgraph(t_complement(G, 2), X)
    assert H2 == t_complement(H, 2)


@given(multigraphs(max_n=6, max_mu=1), st.integers(1, 4))
def test_s_t_inverts_inflation(H, t):
    assert s_t(uniform_inflation(H, t), t) == H
    assert s_t(H, 1) == H
    assert underlying_simple(H) == H


@given(multigraphs(max_n=7, max_mu=4))
def test_degree_statistics(G):
    for v in G.vertices:
        assert G.degree(v) == sum(G.mu(v, u) for u in G.vertices if u != v)
    assert sum(G.degrees) == 2 * G.num_edges
    assert G.max_multiplicity == max((m for *_, m in G.pairs()), default=0)
