import cmath

import pytest

from src.knots.kauffman import bracket_states, kauffman_jones
from src.knots.library import FIGURE_EIGHT
from src.knots.pd import KnotDiagram, PDCode, diagram_from_text, orient_and_sign
from src.potts.evaluation import eval_point
from src.utils.errors import TooManyCrossings


@pytest.mark.parametrize("t", [1j, cmath.exp(0.7j), 1.0, 2.5])
def test_unknot_is_one(t):
    assert kauffman_jones(orient_and_sign(PDCode.unknot()), t) == pytest.approx(1)


def test_trefoil_at_i(trefoil):
    assert kauffman_jones(trefoil, 1j) == pytest.approx(-1, abs=1e-12)


def test_trefoil_at_one(trefoil):
    assert kauffman_jones(trefoil, 1.0) == pytest.approx(1, abs=1e-12)


def test_state_count(trefoil):
    states = bracket_states(trefoil)
    assert sum(states.values()) == 2 ** 3
    # all-A and all-B states of the standard trefoil
    assert states[(3, 2)] == 1
    assert states[(-3, 3)] == 1


def test_figure_eight_is_amphichiral():
    d = diagram_from_text(FIGURE_EIGHT)
    assert d.writhe == 0
    for q in (2, 3):
        t = eval_point(q).t
        v = kauffman_jones(d, t)
        assert v == pytest.approx(kauffman_jones(d, 1 / t), abs=1e-9)


def test_figure_eight_at_i():
    # V_{4_1}(t) = t^2 - t + 1 - t^-1 + t^-2, so V(i) = -1 - i + 1 + i - 1
    assert kauffman_jones(diagram_from_text(FIGURE_EIGHT), 1j) == pytest.approx(-1, abs=1e-12)


def test_crossing_cap():
    crossings = tuple((1, 2, 2, 1) for _ in range(21))
    diagram = KnotDiagram(PDCode(crossings), (), {}, {}, (1,) * 21)
    with pytest.raises(TooManyCrossings):
        kauffman_jones(diagram, 1j)
