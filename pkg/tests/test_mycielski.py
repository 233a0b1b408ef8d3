import pytest
from hypothesis import given

from jacobrush.graph import cycle_graph, is_isomorphic_small
from jacobrush.jaco import build_jaco
from jacobrush.mycielski import mycielskian

from conftest import small_graphs


def test_mu_j1_is_k1_plus_p2():
    m = mycielskian(build_jaco(1).graph)
    assert m.graph.n == 3
    assert m.graph.edges == {(2, 3)}
    assert sorted(map(len, m.graph.components())) == [1, 2]


def test_mu_j2_is_c5():
    assert is_isomorphic_small(mycielskian(build_jaco(2).graph).graph, cycle_graph(5))


def test_mu_j3_edges():
    m = mycielskian(build_jaco(3).graph)
    x = m.shadow
    w = m.apex
    expected = {(1, 2), (2, 3), (1, x(2)), (2, x(1)), (2, x(3)), (3, x(2)), (x(1), w), (x(2), w), (x(3), w)}
    assert m.graph.n == 7
    assert m.graph.edges == {tuple(sorted(e)) for e in expected}


@given(small_graphs())
def test_size_degree_and_structure(g):
    m = mycielskian(g)
    h = m.graph
    assert h.n == 2 * g.n + 1
    assert len(h.edges) == 3 * len(g.edges) + g.n
    for i in g.vertices:
        assert h.degree(i) == 2 * g.degree(i)
        assert h.degree(m.shadow(i)) == g.degree(i) + 1
    assert h.degree(m.apex) == g.n
    shadows = set(m.shadows)
    assert not any(u in shadows and v in shadows for u, v in h.edges)
    assert h.adj[m.apex] == shadows
    assert h.induced(m.originals) == g


def test_roles_layout():
    m = mycielskian(build_jaco(3).graph)
    assert m.roles() == {"v": [1, 2, 3], "x": [4, 5, 6], "w": 7}


@pytest.mark.parametrize("n", range(2, 9))
def test_mycielski_jaco_connected(n):
    assert mycielskian(build_jaco(n).graph).graph.is_connected()
