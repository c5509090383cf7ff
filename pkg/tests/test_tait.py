import pytest

from src.knots.pd import checkerboard, diagram_from_text
from src.knots.tait import TaitGraph, dual_outer_face, tait_graph, tait_graph_for
from src.utils.errors import MalformedRecord


def test_default_colouring_gives_theta(trefoil):
    g = tait_graph(trefoil)
    assert g.n == 2
    assert g.edges == ((0, 1, -1),) * 3
    assert g.tau == -3


def test_flipped_colouring_gives_triangle(trefoil):
    g = tait_graph(trefoil, checkerboard(trefoil, 1))
    assert g.n == 3
    assert sorted(g.edges) == [(0, 1, 1), (0, 2, 1), (1, 2, 1)]
    assert g.tau == 3


def test_edge_count_matches_crossings(trefoil):
    for colouring in ("default", "dual"):
        assert len(tait_graph_for(trefoil, colouring).edges) == trefoil.n_crossings


def test_dual_and_smallest(trefoil):
    assert dual_outer_face(trefoil) == 1
    assert tait_graph_for(trefoil, "dual").n == 3
    assert tait_graph_for(trefoil, "smallest").n == 2
    with pytest.raises(ValueError):
        tait_graph_for(trefoil, "largest")


def test_kinked_unknot_graphs():
    d = diagram_from_text("X[1,2,2,1]")
    g = tait_graph(d)
    assert (g.n, g.edges, g.tau) == (2, ((0, 1, -1),), -1)
    loop = tait_graph_for(d, "dual")
    assert (loop.n, loop.edges) == (1, ((0, 0, 1),))
    assert loop.loops() == [(0, 0, 1)]


def test_from_edges_normalises_and_validates():
    g = TaitGraph.from_edges(3, [[2, 0, -1], [1, 1, 1]])
    assert g.edges == ((0, 2, -1), (1, 1, 1))
    assert g.to_json() == {"n": 3, "tau": 0, "tait_edges": [[0, 2, -1], [1, 1, 1]]}
    with pytest.raises(MalformedRecord):
        TaitGraph.from_edges(2, [(0, 2, 1)])
    with pytest.raises(MalformedRecord):
        TaitGraph.from_edges(2, [(0, 1, 0)])
