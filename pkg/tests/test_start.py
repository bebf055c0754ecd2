import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ptcolor import (
    NotThreeColorable,
    PathFromV,
    Plain,
    SmallSubgraph,
    WithTriangle,
    color_excluding_start,
    color_from_start,
    find_induced_path,
    from_edge_list,
)

from .support import check_start, complete_graph, cycle_graph, graphs, star_graph


def test_single_vertex():
    for t in (2, 3, 6):
        out = color_from_start(complete_graph(1), 0, t)
        assert isinstance(out, Plain) and out.coloring.assignments == {0: 1}


def test_triangle_from_start():
    out = color_from_start(complete_graph(3), 0, 4)
    assert isinstance(out, WithTriangle)
    assert out.triangle == (0, 1, 2)
    assert sorted(out.coloring.assignments.values()) == [1, 2, 3]


def test_k4_is_refuted():
    out = color_from_start(complete_graph(4), 0, 4)
    assert isinstance(out, NotThreeColorable)
    assert out.refutation == SmallSubgraph(frozenset({0, 1, 2, 3}))


def test_c5_yields_path():
    out = color_from_start(cycle_graph(5), 0, 4)
    assert isinstance(out, PathFromV) and out.path[0] == 0 and len(out.path) == 4
    assert check_start(cycle_graph(5), 0, 4, out) is None


def test_excluding_edge_at_t2():
    out = color_excluding_start(complete_graph(2), 0, 2)
    assert out == PathFromV((0, 1))


def test_excluding_star_center():
    out = color_excluding_start(star_graph(3), 0, 3)
    assert isinstance(out, Plain)
    assert out.coloring.assignments == {1: 1, 2: 1, 3: 1}


def test_excluding_triangle_root():
    out = color_excluding_start(complete_graph(3), 0, 3)
    assert isinstance(out, WithTriangle)
    assert out.coloring.assignments == {1: 1, 2: 2}
    assert out.triangle == (0, 1, 2)


def test_excluding_at_t1_is_the_root_alone():
    assert color_excluding_start(complete_graph(3), 1, 1) == PathFromV((1,))


@pytest.mark.parametrize("fn", [color_from_start, color_excluding_start])
def test_input_validation(fn):
    with pytest.raises(ValueError):
        fn(from_edge_list(2, []), 0, 4)
    with pytest.raises(ValueError):
        fn(complete_graph(2), 5, 4)
    with pytest.raises(ValueError):
        fn(complete_graph(2), 0, 0)
    with pytest.raises(ValueError):
        color_from_start(complete_graph(2), 0, 1)


def test_wheel_over_odd_cycle_is_refuted():
    # hub 0 over the 5-cycle 1..5, with a pendant so t >= 5 takes the recursive route
    edges = [(0, i) for i in range(1, 6)] + [(i, i % 5 + 1) for i in range(1, 6)] + [(1, 6), (6, 7)]
    G = from_edge_list(8, edges)
    for t in (5, 6):
        out = color_from_start(G, 0, t)
        assert isinstance(out, NotThreeColorable)
        assert check_start(G, 0, t, out) is None


@st.composite
def rooted(draw, max_n=9):
    G = draw(graphs(max_n=max_n, connected=True))
    return G, draw(st.integers(0, G.n - 1)), draw(st.integers(2, 8))


@settings(max_examples=400, deadline=None)
@given(rooted())
def test_from_start_outcomes_verify(data):
    G, v, t = data
    out = color_from_start(G, v, t)
    assert check_start(G, v, t, out) is None
    if find_induced_path(G, t, start=v) is None:
        assert not isinstance(out, PathFromV)


@settings(max_examples=400, deadline=None)
@given(rooted())
def test_excluding_start_outcomes_verify(data):
    G, v, t = data
    out = color_excluding_start(G, v, t)
    assert check_start(G, v, t, out, exclude=True) is None
    if find_induced_path(G, t, start=v) is None:
        assert not isinstance(out, PathFromV)
