import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ptcolor import (
    Coloring,
    GraphFormatError,
    bipartition_or_odd_cycle,
    connected_components,
    format_graph,
    from_edge_list,
    parse_graph,
    verify_coloring,
    verify_path,
    verify_triangle,
)
from ptcolor.graph import Bipartition, OddCycle, induced_subgraph

from .support import complete_graph, cycle_graph, graphs, path_graph


def test_triangle_from_edge_list():
    G = from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
    assert (G.n, G.m) == (3, 3)
    assert G.adj == ((1, 2), (0, 2), (0, 1))


def test_single_vertex():
    G = from_edge_list(1, [])
    assert (G.n, G.m) == (1, 0)


@pytest.mark.parametrize(
    "n, edges, fragment",
    [
        (2, [(0, 0)], "self-loop"),
        (2, [(0, 1), (1, 0)], "duplicate"),
        (2, [(0, 2)], "outside"),
    ],
)
def test_edge_list_errors(n, edges, fragment):
    with pytest.raises(GraphFormatError, match=fragment):
        from_edge_list(n, edges)


def test_components_examples():
    assert connected_components(complete_graph(3)) == [[0, 1, 2]]
    assert connected_components(from_edge_list(4, [])) == [[0], [1], [2], [3]]
    assert connected_components(from_edge_list(4, [(0, 1), (2, 3)])) == [[0, 1], [2, 3]]


def test_bipartition_of_c4():
    out = bipartition_or_odd_cycle(cycle_graph(4), range(4))
    assert isinstance(out, Bipartition)
    assert sorted(map(sorted, out.sides)) == [[0, 2], [1, 3]]


@pytest.mark.parametrize("n", [3, 5])
def test_odd_cycles(n):
    out = bipartition_or_odd_cycle(cycle_graph(n), range(n))
    assert isinstance(out, OddCycle)
    assert sorted(out.vertices) == list(range(n))


def test_verify_coloring_examples():
    K3 = complete_graph(3)
    assert verify_coloring(K3, Coloring({0: 1, 1: 2, 2: 3}))
    assert not verify_coloring(K3, Coloring({0: 1, 1: 1, 2: 2}))
    assert verify_coloring(path_graph(3), Coloring({0: 1, 2: 1}))


def test_verify_coloring_respects_palette():
    assert not verify_coloring(path_graph(2), Coloring({0: 1, 1: 3}, 2))
    assert not verify_coloring(path_graph(2), Coloring({0: 0, 1: 1}))


def test_verify_path_examples():
    assert verify_path(cycle_graph(5), (0, 1, 2, 3), 4, 0)
    assert not verify_path(cycle_graph(4), (0, 1, 2, 3), 4)
    assert verify_path(complete_graph(4), (2,), 1, 2)
    assert not verify_path(path_graph(4), (0, 1, 2, 3), 4, 1)
    assert not verify_path(path_graph(4), (0, 2), 2)


def test_verify_triangle():
    assert verify_triangle(complete_graph(3), (0, 1, 2))
    assert not verify_triangle(path_graph(3), (0, 1, 2))
    assert not verify_triangle(complete_graph(3), (0, 1, 1))


def test_parse_with_comments():
    G = parse_graph("# a triangle\n3 3\n0 1\n1 2  # closing\n0 2\n")
    assert G == complete_graph(3)


def test_parse_reports_line_numbers():
    with pytest.raises(GraphFormatError) as exc:
        parse_graph("3 2\n0 1\n1 1\n")
    assert exc.value.line == 3
    with pytest.raises(GraphFormatError) as exc:
        parse_graph("3 1\nzero one\n")
    assert exc.value.line == 2


def test_parse_count_mismatch():
    with pytest.raises(GraphFormatError, match="declares"):
        parse_graph("3 4\n0 1\n1 2\n")


def test_induced_subgraph_maps_ids():
    sub, old = induced_subgraph(cycle_graph(6), [1, 2, 3, 5])
    assert old == [1, 2, 3, 5]
    assert sorted(sub.edges()) == [(0, 1), (1, 2)]


@settings(max_examples=200)
@given(graphs(max_n=10))
def test_text_round_trip(G):
    assert parse_graph(format_graph(G)) == G


@settings(max_examples=200)
@given(graphs(max_n=10))
def test_components_partition_and_separate(G):
    comps = connected_components(G)
    assert sorted(v for C in comps for v in C) == list(range(G.n))
    assert [C[0] for C in comps] == sorted(C[0] for C in comps)
    where = {v: i for i, C in enumerate(comps) for v in C}
    assert all(where[u] == where[v] for u, v in G.edges())
    for C in comps:
        # internally connected: a search from C[0] inside C reaches all of C
        seen, stack = {C[0]}, [C[0]]
        while stack:
            for w in G.adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        assert seen == set(C)


@settings(max_examples=300)
@given(graphs(max_n=10), st.data())
def test_bipartition_or_cycle_is_valid(G, data):
    W = set(data.draw(st.sets(st.integers(0, G.n - 1))))
    out = bipartition_or_odd_cycle(G, W)
    if isinstance(out, Bipartition):
        side = {v: i for i, S in enumerate(out.sides) for v in S}
        assert set(side) == W
        assert all(side[u] != side[v] for u, v in G.edges() if u in W and v in W)
    else:
        cyc = out.vertices
        assert len(cyc) % 2 == 1 and len(cyc) >= 3 and len(set(cyc)) == len(cyc)
        assert set(cyc) <= W
        assert all(G.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


@settings(max_examples=300)
@given(graphs(max_n=8), st.data())
def test_verify_path_matches_chord_scan(G, data):
    p = data.draw(st.permutations(range(G.n)))[: data.draw(st.integers(1, G.n))]
    expected = all(G.has_edge(p[i], p[i + 1]) for i in range(len(p) - 1)) and not any(
        G.has_edge(p[i], p[j]) for i, j in itertools.combinations(range(len(p)), 2) if j - i > 1
    )
    assert verify_path(G, p, len(p)) == expected
