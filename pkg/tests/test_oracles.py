"""Kauffman bracket, Potts contraction and circuit amplitude agree on random diagrams."""

import numpy as np
import pytest

from src.circuits.iqp import iqp_from_graph
from src.circuits.simulate import amplitude
from src.knots.kauffman import kauffman_jones
from src.knots.moves import random_diagram, random_moves
from src.knots.tait import tait_graph_for
from src.potts.evaluation import eval_point, jones_factors
from src.potts.partition import jones_value

QS = (2, 3, 4)


def close(a, b):
    return a == pytest.approx(b, rel=1e-7, abs=1e-7)


def oracle_values(diagram):
    values = {}
    for q in QS:
        values[q] = kauffman_jones(diagram, eval_point(q).t)
        for colouring in ("default", "dual"):
            assert close(jones_value(tait_graph_for(diagram, colouring), diagram.writhe, q), values[q]), (q, colouring)
    g = tait_graph_for(diagram, "smallest")
    factors = jones_factors(eval_point(2).t, g.tau, diagram.writhe, g.n)
    assert close(factors.A * 2 ** g.n * amplitude(iqp_from_graph(g)), values[2])
    return values


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(100))
def test_oracles_agree_on_random_diagram_and_its_moves(seed):
    rng = np.random.default_rng(seed)
    base = random_diagram(rng, int(rng.integers(1, 11)))
    moved = random_moves(base, int(rng.integers(1, 6)), rng)
    reference = oracle_values(base)
    for q, value in oracle_values(moved).items():
        assert close(value, reference[q]), q
