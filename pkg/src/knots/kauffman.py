"""Kauffman-bracket state sum, used as an independent oracle for Jones values.

Smoothings join edge labels: the A-smoothing of `X[a,b,c,d]` joins a-d and
b-c, the B-smoothing joins a-b and c-d. Every label is joined twice, so each
state is a disjoint union of loops. Crossings are absorbed in strand order
while only the open path ends are remembered, which keeps the number of
distinct partial states small for planar codes.
"""

import logging
from collections import defaultdict
from typing import Dict, FrozenSet, List, Tuple

from src.config import DEFAULTS
from src.knots.pd import KnotDiagram
from src.potts.evaluation import principal_power
from src.utils.errors import TooManyCrossings

logger = logging.getLogger(__name__)

# open path ends as frozenset of (end, other end) pairs
Frontier = FrozenSet[Tuple[int, int]]


def _join(frontier: Dict[int, int], x: int, y: int) -> int:
    """Join labels x and y in place; returns the number of loops closed (0 or 1)."""
    if x == y:
        return 1
    ex = frontier.pop(x, x)
    ey = frontier.pop(y, y)
    if ex == y:
        # x and y were the two ends of one path
        return 1
    if ex != x:
        frontier.pop(ex, None)
    if ey != y:
        frontier.pop(ey, None)
    frontier[ex] = ey
    frontier[ey] = ex
    return 0


def _crossing_order(diagram: KnotDiagram) -> List[int]:
    order: List[int] = []
    for label in diagram.strand:
        x = diagram.tails[label][0]
        if x not in order:
            order.append(x)
    return order


def bracket_states(diagram: KnotDiagram) -> Dict[Tuple[int, int], int]:
    """Histogram of (#A - #B smoothings, #loops) over all 2^c states."""
    c = diagram.n_crossings
    cap = DEFAULTS["kauffman_max_crossings"]
    if c > cap:
        raise TooManyCrossings(f"{c} crossings exceed the state-sum cap of {cap}")
    if c == 0:
        return {(0, 1): 1}
    states: Dict[Tuple[Frontier, int, int], int] = {(frozenset(), 0, 0): 1}
    for x in _crossing_order(diagram):
        a, b, cc, d = diagram.pd.crossings[x]
        nxt: Dict[Tuple[Frontier, int, int], int] = defaultdict(int)
        for (frontier, exponent, loops), count in states.items():
            for step, pairs in ((+1, ((a, d), (b, cc))), (-1, ((a, b), (cc, d)))):
                ends = dict(frontier)
                closed = sum(_join(ends, u, v) for u, v in pairs)
                nxt[(frozenset(ends.items()), exponent + step, loops + closed)] += count
        states = nxt
    histogram: Dict[Tuple[int, int], int] = defaultdict(int)
    for (frontier, exponent, loops), count in states.items():
        histogram[(exponent, loops)] += count
    logger.debug("bracket of %d crossings: %d (exponent, loops) classes", c, len(histogram))
    return dict(histogram)


def kauffman_bracket(diagram: KnotDiagram, a: complex) -> complex:
    d = -(a ** 2) - a ** -2
    total = 0j
    for (exponent, loops), count in bracket_states(diagram).items():
        total += count * a ** exponent * d ** (loops - 1)
    return total


def kauffman_jones(diagram: KnotDiagram, t: complex) -> complex:
    a = principal_power(t, -0.25)
    value = (-(a ** 3)) ** (-diagram.writhe) * kauffman_bracket(diagram, a)
    logger.debug("kauffman jones c=%d w=%d t=%s -> %s", diagram.n_crossings, diagram.writhe, t, value)
    return complex(value)
