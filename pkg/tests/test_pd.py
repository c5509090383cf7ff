import pytest

from src.knots.library import TREFOIL
from src.knots.pd import (
    BLACK,
    PDCode,
    WHITE,
    checkerboard,
    diagram_from_text,
    face_adjacency,
    faces,
    orient_and_sign,
    parse_pd,
    trace_strand,
)
from src.utils.errors import BadEdgeMultiplicity, MalformedRecord, MultiComponent, NonPlanarCode


def test_parse_trefoil():
    pd = parse_pd(TREFOIL)
    assert pd.n_crossings == 3
    assert pd.crossings[0] == (1, 4, 2, 5)
    assert str(pd) == TREFOIL


def test_parse_tolerates_spacing():
    assert parse_pd("X[1, 4, 2, 5]  X[3,6,4,1]\nX[5,2,6,3]") == parse_pd(TREFOIL)


@pytest.mark.parametrize(
    "text, error",
    [
        ("", MalformedRecord),
        ("X[1,2,3]", MalformedRecord),
        ("Y[1,2,2,1]", MalformedRecord),
        ("X[1,1,2,2] X[1,3,4,4]", BadEdgeMultiplicity),
        ("X[1,2,2,1] X[3,4,4,3]", MultiComponent),
        ("X[1,2,2,5] X[5,1,3,3]", MalformedRecord),
    ],
)
def test_parse_rejects(text, error):
    with pytest.raises(error):
        parse_pd(text)


def test_walk_stuck_in_a_loop_is_multi_component():
    # slot 2 leads into a loop through slots 1 and 3 that never returns to slot 2
    with pytest.raises(MultiComponent):
        trace_strand(((2, 1, 1, 1),))


def test_trefoil_orientation_and_writhe(trefoil):
    assert trefoil.strand == (2, 3, 4, 5, 6, 1)
    assert trefoil.crossing_signs == (1, 1, 1)
    assert trefoil.writhe == 3


def test_unknot_has_zero_writhe():
    d = orient_and_sign(PDCode.unknot())
    assert d.n_crossings == 0
    assert d.writhe == 0
    assert len(faces(d)) == 2


def test_kinked_unknot():
    d = diagram_from_text("X[1,2,2,1]")
    assert d.writhe == 1
    fs = faces(d)
    assert len(fs) == 3
    colours = checkerboard(d).colours
    assert colours.count(BLACK) == 2


def test_trefoil_faces(trefoil):
    fs = faces(trefoil)
    assert len(fs) == 5
    assert sorted(len(f.boundary) for f in fs) == [2, 2, 2, 3, 3]
    corners = [corner for f in fs for corner in f.boundary]
    assert len(corners) == len(set(corners)) == 12


def test_scrambled_code_is_not_planar():
    d = orient_and_sign(parse_pd("X[1,5,2,4] X[3,6,4,1] X[5,2,6,3]"))
    with pytest.raises(NonPlanarCode):
        faces(d)


@pytest.mark.parametrize("outer", range(5))
def test_checkerboard_is_proper(trefoil, outer):
    colouring = checkerboard(trefoil, outer)
    assert colouring.colours[outer] == WHITE
    for u, v in face_adjacency(trefoil).edges():
        assert colouring.colours[u] != colouring.colours[v]


def test_checkerboard_classes(trefoil):
    default = checkerboard(trefoil)
    assert default.black_faces() == [1, 3]
    flipped = checkerboard(trefoil, 1)
    assert flipped.black_faces() == [0, 2, 4]


def test_checkerboard_unknown_face(trefoil):
    with pytest.raises(NonPlanarCode):
        checkerboard(trefoil, 7)
