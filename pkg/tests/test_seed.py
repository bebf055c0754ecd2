import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ptcolor import (
    InducedPt,
    NotThreeColorable,
    PathFromV,
    SeedResult,
    brute_three_color,
    connected_components,
    find_induced_path,
    find_seed,
    from_edge_list,
)
from ptcolor.generators import multipartite, random_3colorable
from ptcolor.graph import induced_subgraph
from ptcolor.seed import seed_palette

from .support import check_seed, complete_graph, graphs, path_graph


def test_palette():
    assert [seed_palette(t, False) for t in range(3, 12)] == [1, 1, 1, 1, 1, 2, 2, 3, 3]
    assert [seed_palette(t, True) for t in range(3, 12)] == [2, 2, 2, 2, 2, 3, 3, 5, 5]


def test_short_path_from_root():
    assert find_seed(path_graph(5), 0, 3, 9) == PathFromV((0, 1, 2))


def test_octahedron_has_empty_remainder():
    G = multipartite([2, 2, 2])
    out = find_seed(G, 0, 8, 8)
    assert isinstance(out, SeedResult)
    assert 0 in out.S
    assert out.remainder_coloring.domain == frozenset()


def test_single_vertex():
    out = find_seed(complete_graph(1), 0, 5, 6)
    assert isinstance(out, SeedResult)
    assert out.S == {0} and len(out.remainder_coloring) == 0


def test_rejects_disconnected():
    with pytest.raises(ValueError):
        find_seed(from_edge_list(3, [(0, 1)]), 0, 5, 6)


def test_k_above_t_surfaces_as_induced_path():
    out = find_seed(path_graph(8), 0, 9, 5)
    assert isinstance(out, InducedPt) and len(out.path) == 5


@st.composite
def seed_case(draw):
    G = draw(graphs(max_n=10, connected=True))
    t = draw(st.integers(2, 9))
    k = draw(st.integers(1, t))
    return G, draw(st.integers(0, G.n - 1)), k, t


@settings(max_examples=400, deadline=None)
@given(seed_case())
def test_outcomes_verify(data):
    G, v, k, t = data
    out = find_seed(G, v, k, t)
    three_col = brute_three_color(G) is not None
    assert check_seed(G, v, k, t, out, three_col) is None
    if three_col:
        assert not isinstance(out, NotThreeColorable)
    if isinstance(out, InducedPt):
        assert find_induced_path(G, t) is not None


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(8, 12))
def test_larger_three_colorable_inputs(seed, t):
    # big enough to reach both pairing phases; never refuted since 3-colorable
    G = random_3colorable(22, 0.25, seed)
    G = induced_subgraph(G, max(connected_components(G), key=len))[0]
    out = find_seed(G, 0, t, t)
    assert check_seed(G, 0, t, t, out, three_col=True) is None
    assert not isinstance(out, NotThreeColorable)
