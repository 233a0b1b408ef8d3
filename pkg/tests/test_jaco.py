import pytest
from hypothesis import given
from hypothesis import strategies as st

from jacobrush.graph import GraphError
from jacobrush.jaco import build_jaco, jaconian_data, out_degree_unbounded, smaller_graph_degree


def jaco_arcs_by_heads(n):
    """Independent construction: decide the in-arcs of each head j in turn.

    Tail i < j qualifies iff 2i - indeg(i) >= j; indeg(i) is known because
    every head below j has already been settled.
    """
    indeg = {v: 0 for v in range(1, n + 1)}
    arcs = set()
    for j in range(2, n + 1):
        for i in range(1, j):
            if 2 * i - indeg[i] >= j:
                arcs.add((i, j))
        indeg[j] = sum(1 for (_, h) in arcs if h == j)
    return arcs


@pytest.mark.parametrize("n", range(1, 31))
def test_build_matches_head_oracle(n):
    assert set(build_jaco(n).arcs) == jaco_arcs_by_heads(n)


def test_small_jaco_examples():
    assert build_jaco(1).graph.edges == frozenset()
    assert build_jaco(4).graph.edges == {(1, 2), (2, 3), (3, 4)}
    assert build_jaco(5).graph.edges == {(1, 2), (2, 3), (3, 4), (3, 5), (4, 5)}
    assert build_jaco(9).outdeg[1:] == (1, 1, 2, 3, 3, 3, 2, 1, 0)


def test_build_rejects_zero():
    with pytest.raises(GraphError):
        build_jaco(0)


@pytest.mark.parametrize("i,expected", [(1, 1), (2, 1), (5, 3)])
def test_out_degree_unbounded(i, expected):
    assert out_degree_unbounded(i) == expected


def test_out_degree_unbounded_stable_in_larger_prefix():
    big = build_jaco(120)
    for i in range(1, 50):
        assert out_degree_unbounded(i) == big.outdeg[i]


def test_jaconian_examples():
    j5 = jaconian_data(build_jaco(5))
    assert (j5.max_degree, j5.jaconian_set, j5.prime, j5.hope_vertices) == (3, {3}, 3, (4, 5))
    j9 = jaconian_data(build_jaco(9))
    assert (j9.prime, j9.hope_vertices) == (5, (6, 7, 8, 9))
    j2 = jaconian_data(build_jaco(2))
    assert (j2.max_degree, j2.jaconian_set, j2.prime) == (1, {1, 2}, 1)
    with pytest.raises(GraphError):
        jaconian_data(build_jaco(1))


def test_smaller_graph_degree():
    assert smaller_graph_degree(9, 7) == 5 == build_jaco(9).degree(7)
    assert smaller_graph_degree(5, 4) == 2 == build_jaco(5).degree(4)
    with pytest.raises(GraphError):
        smaller_graph_degree(9, 5)


@pytest.mark.parametrize("n", range(1, 41))
def test_structural_properties(n):
    j = build_jaco(n)
    arcs = set(j.arcs)
    # arc soundness re-checked against the finished graph
    for i in range(1, n + 1):
        for k in range(i + 1, n + 1):
            assert ((i, k) in arcs) == (2 * i - j.indeg[i] >= k)
    # tails into each head are contiguous and end at head - 1
    for h in range(2, n + 1):
        tails = sorted(t for t, hh in arcs if hh == h)
        assert tails == list(range(h - len(tails), h))
    # degree of v_i is i once its out-neighbourhood fits
    for i in range(1, n + 1):
        if i + out_degree_unbounded(i) <= n:
            assert j.degree(i) == i
        if n < i + out_degree_unbounded(i):
            assert smaller_graph_degree(n, i) == j.degree(i)
    if n >= 2:
        assert jaconian_data(j).hope_is_complete()


@given(st.integers(1, 40), st.integers(0, 40))
def test_prefix_stability(n, extra):
    small = build_jaco(n)
    big = build_jaco(n + extra)
    assert {(t, h) for t, h in big.arcs if h <= n} == set(small.arcs)
