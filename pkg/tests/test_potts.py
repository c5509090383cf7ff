import cmath
import math

import numpy as np
import pytest

from src.knots.tait import TaitGraph
from src.potts.evaluation import (
    couplings,
    eval_point,
    jones_factors,
    principal_power,
    proportionality,
)
from src.potts.partition import (
    build_network,
    jones_value,
    min_degree_order,
    partition_bruteforce,
    partition_contract,
)
from src.utils.errors import TooLarge, ValidationError, ZeroT
from tests.conftest import random_signed_graph


def test_eval_points():
    assert eval_point(2).t == pytest.approx(1j, abs=1e-12)
    assert eval_point(3).t == pytest.approx(cmath.exp(1j * math.pi / 3), abs=1e-12)
    assert eval_point(4).t == pytest.approx(1.0, abs=1e-12)
    for q in (2, 3, 4):
        assert eval_point(q).on_lattice
    assert not eval_point(5).on_lattice


@pytest.mark.parametrize("q", range(2, 10))
def test_eval_point_consistency(q):
    t = eval_point(q).t
    assert t + 1 / t + 2 == pytest.approx(q, abs=1e-12)


def test_eval_point_rejects_small_q():
    with pytest.raises(ValidationError):
        eval_point(1)


def test_couplings():
    cp = couplings(1j)
    assert cp.w_plus == pytest.approx(1j)
    assert cp.w_minus == pytest.approx(-1j)
    assert couplings(1.0).w_plus == -1 and couplings(1.0).w_minus == -1
    t5 = eval_point(5).t
    assert t5 == pytest.approx((3 + math.sqrt(5)) / 2)
    cp5 = couplings(t5)
    assert cp5.w_plus.real < 0 and cp5.w_minus.real < 0
    assert cp5.w_plus.imag == 0 and cp5.w_minus.imag == 0
    with pytest.raises(ZeroT):
        couplings(0)


def test_principal_branch():
    assert principal_power(-1, 0.5) == pytest.approx(1j)
    assert principal_power(1j, 0.25) == pytest.approx(cmath.exp(1j * math.pi / 8))


def test_proportionality_examples():
    assert proportionality(1j, 3, 3, 3) == pytest.approx(0.25j, abs=1e-12)
    assert proportionality(1j, -3, 3, 2) == pytest.approx(-(1 - 1j) / 4, abs=1e-12)
    t = eval_point(3).t
    base = -principal_power(t, 0.5) - principal_power(t, -0.5)
    assert proportionality(t, 0, 0, 0) == pytest.approx(1 / base)


def test_jones_factors_value():
    f = jones_factors(1j, 3, 3, 3)
    assert f.A == pytest.approx(0.25j)
    assert (f.tau, f.w, f.n) == (3, 3, 3)


def test_bruteforce_examples(triangle, theta):
    assert partition_bruteforce(triangle, 2) == pytest.approx(4j, abs=1e-12)
    assert partition_bruteforce(theta, 2) == pytest.approx(2 + 2j, abs=1e-12)
    assert partition_bruteforce(TaitGraph(1, ()), 5) == pytest.approx(5)


def test_self_loop_scales_by_weight():
    g = TaitGraph.from_edges(2, [(0, 1, 1), (1, 1, -1)])
    plain = TaitGraph.from_edges(2, [(0, 1, 1)])
    assert partition_bruteforce(g, 3) == pytest.approx(couplings(eval_point(3).t).w_minus * partition_bruteforce(plain, 3))


def test_bruteforce_cap():
    with pytest.raises(TooLarge):
        partition_bruteforce(TaitGraph(13, ()), 4)


def test_contract_matches_examples(triangle, theta):
    assert partition_contract(triangle, 2) == pytest.approx(4j, abs=1e-12)
    assert partition_contract(theta, 2) == pytest.approx(2 + 2j, abs=1e-12)


@pytest.mark.parametrize("q", [2, 3, 4, 7])
def test_tree_closed_form(q):
    g = TaitGraph.from_edges(5, [(0, 1, 1), (1, 2, -1), (1, 3, 1), (3, 4, -1)])
    cp = couplings(eval_point(q).t)
    expected = q * np.prod([cp.weight(s) + q - 1 for _, _, s in g.edges])
    assert partition_contract(g, q) == pytest.approx(expected, rel=1e-12)
    assert partition_bruteforce(g, q) == pytest.approx(expected, rel=1e-12)


def test_contract_matches_bruteforce_on_random_graphs(rng):
    for _ in range(200):
        n = int(rng.integers(1, 11))
        q = int(rng.choice([2, 3, 4, 5]))
        if q ** n > 2 ** 20:
            n = 6
        g = random_signed_graph(rng, n, int(rng.integers(0, 2 * n + 2)))
        brute = partition_bruteforce(g, q)
        assert partition_contract(g, q) == pytest.approx(brute, rel=1e-10, abs=1e-10)


def test_min_degree_order_is_a_permutation(theta):
    net = build_network(TaitGraph.from_edges(4, [(0, 1, 1), (1, 2, 1), (2, 3, -1), (0, 3, 1)]), 2)
    order = min_degree_order(4, net.factors)
    assert sorted(order) == [0, 1, 2, 3]
    assert build_network(theta, 2).factors[0][0] == (0, 1)
    assert len(build_network(theta, 2).factors) == 1


def test_jones_value_examples(triangle):
    assert jones_value(triangle, 3, 2) == pytest.approx(-1, abs=1e-12)
    for q in (2, 3, 4):
        assert jones_value(TaitGraph(1, ()), 0, q) == pytest.approx(1, abs=1e-12)
