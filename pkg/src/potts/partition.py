"""Potts partition function of a signed Tait graph.

Two evaluators: an exhaustive sum over spin configurations and a tensor
network contraction by greedy minimum-degree vertex elimination. Each edge is
a q x q matrix holding its coupling weight on the diagonal and 1 elsewhere;
each vertex is a copy tensor, which einsum expresses by sharing an index.
A self-loop always has equal endpoint spins and scales Z by its weight.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import networkx as nx
import numpy as np

from src.config import DEFAULTS
from src.knots.tait import TaitGraph
from src.potts.evaluation import couplings, eval_point, proportionality
from src.utils.errors import TooLarge

logger = logging.getLogger(__name__)

CHUNK = 1 << 16

Factor = Tuple[Tuple[int, ...], np.ndarray]


def _edge_weights(g: TaitGraph, q: int) -> List[Tuple[int, int, complex]]:
    cp = couplings(eval_point(q).t)
    return [(u, v, cp.weight(s)) for u, v, s in g.edges]


def partition_bruteforce(g: TaitGraph, q: int) -> complex:
    cap = DEFAULTS["bruteforce_max_configs"]
    if q ** g.n > cap:
        raise TooLarge(f"{q}^{g.n} configurations exceed the brute-force cap of {cap}")
    weights = _edge_weights(g, q)
    loop_factor = complex(np.prod([w for u, v, w in weights if u == v])) if weights else 1 + 0j
    edges = [(u, v, w) for u, v, w in weights if u != v]
    total = q ** g.n
    place = q ** np.arange(g.n, dtype=np.int64)
    z = 0j
    for start in range(0, total, CHUNK):
        idx = np.arange(start, min(start + CHUNK, total), dtype=np.int64)
        spins = (idx[:, None] // place[None, :]) % q
        terms = np.ones(len(idx), dtype=complex)
        for u, v, w in edges:
            terms *= np.where(spins[:, u] == spins[:, v], w, 1.0)
        z += terms.sum()
    return complex(loop_factor * z)


@dataclass
class TensorNetwork:
    q: int
    n: int
    factors: List[Factor]
    scalar: complex = 1 + 0j
    order: List[int] = field(default_factory=list)


def build_network(g: TaitGraph, q: int) -> TensorNetwork:
    scalar = 1 + 0j
    merged: Dict[Tuple[int, int], np.ndarray] = {}
    for u, v, w in _edge_weights(g, q):
        if u == v:
            scalar *= w
            continue
        matrix = np.ones((q, q), dtype=complex) + (w - 1) * np.eye(q)
        # parallel edges share one table
        merged[(u, v)] = merged[(u, v)] * matrix if (u, v) in merged else matrix
    factors = [(key, table) for key, table in sorted(merged.items())]
    return TensorNetwork(q=q, n=g.n, factors=factors, scalar=scalar)


def min_degree_order(n: int, factors: List[Factor]) -> List[int]:
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    for variables, _ in factors:
        for i, a in enumerate(variables):
            for b in variables[i + 1:]:
                graph.add_edge(a, b)
    order: List[int] = []
    while graph.number_of_nodes():
        v = min(graph.nodes, key=lambda x: (graph.degree(x), x))
        neighbours = list(graph.neighbors(v))
        for i, a in enumerate(neighbours):
            for b in neighbours[i + 1:]:
                graph.add_edge(a, b)
        graph.remove_node(v)
        order.append(v)
    return order


def _eliminate(factors: List[Factor], v: int) -> Factor:
    variables = sorted({x for vs, _ in factors for x in vs} - {v})
    local = {x: i for i, x in enumerate(variables + [v])}
    args: list = []
    for vs, table in factors:
        args.extend([table, [local[x] for x in vs]])
    args.append([local[x] for x in variables])
    return tuple(variables), np.einsum(*args)


def contract(network: TensorNetwork) -> complex:
    factors = list(network.factors)
    value = complex(network.scalar)
    for v in network.order:
        involved = [f for f in factors if v in f[0]]
        if not involved:
            value *= network.q
            continue
        factors = [f for f in factors if v not in f[0]]
        factors.append(_eliminate(involved, v))
    for _, table in factors:
        value *= complex(table)
    return value


def partition_contract(g: TaitGraph, q: int) -> complex:
    network = build_network(g, q)
    network.order = min_degree_order(g.n, network.factors)
    logger.debug("contracting n=%d q=%d order=%s", g.n, q, network.order)
    return contract(network)


def partition(g: TaitGraph, q: int, method: str = "contract") -> complex:
    if method == "bruteforce":
        return partition_bruteforce(g, q)
    if method == "contract":
        return partition_contract(g, q)
    raise ValueError(f"unknown partition method {method!r}")


def jones_value(g: TaitGraph, w: int, q: int, method: str = "contract") -> complex:
    t = eval_point(q).t
    return proportionality(t, g.tau, w, g.n) * partition(g, q, method)
