"""R1/R2 insertions on planar-diagram codes and random equivalent-diagram generation."""

import logging
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.knots.pd import Crossing, KnotDiagram, PDCode, face_edges, faces, orient_and_sign, trace_strand
from src.utils.errors import EdgesNotCoFacial, MalformedRecord

logger = logging.getLogger(__name__)

SCALE = 10


class KinkType(Enum):
    """R1 kinks: crossing sign and whether the loop first passes under or over.

    The two loop orders put the kink on opposite sides of the edge.
    """

    POSITIVE_UNDER = "positive"
    POSITIVE_OVER = "positive-over"
    NEGATIVE_UNDER = "negative"
    NEGATIVE_OVER = "negative-over"

    @property
    def sign(self) -> int:
        return +1 if self in (KinkType.POSITIVE_UNDER, KinkType.POSITIVE_OVER) else -1

    def crossing(self, x: int, y: int, z: int) -> Crossing:
        # x: edge into the kink, y: the loop, z: edge out of the kink
        if self is KinkType.POSITIVE_UNDER:
            return (x, y, y, z)
        if self is KinkType.POSITIVE_OVER:
            return (y, x, z, y)
        if self is KinkType.NEGATIVE_UNDER:
            return (x, z, y, y)
        return (y, y, z, x)


def _kink(kink_type) -> KinkType:
    return kink_type if isinstance(kink_type, KinkType) else KinkType(kink_type)


def _scaled(diagram: KnotDiagram) -> List[List[int]]:
    return [[SCALE * label for label in x] for x in diagram.pd.crossings]


def canonical_relabel(crossings: Sequence[Crossing]) -> PDCode:
    """Renumber edges 1..2c along the strand, starting from the lowest label."""
    crossings = tuple(tuple(x) for x in crossings)
    walk = trace_strand(crossings)
    order = [label for label, _, _ in walk]
    start = order.index(min(order))
    order = order[start:] + order[:start]
    mapping = {label: i + 1 for i, label in enumerate(order)}
    return PDCode(tuple(tuple(mapping[label] for label in x) for x in crossings))


def _check_edge(diagram: KnotDiagram, edge: int) -> None:
    if edge not in diagram.tails:
        raise MalformedRecord(f"diagram has no edge {edge}")


def r1_insert(diagram: KnotDiagram, edge: int, kink_type="positive") -> KnotDiagram:
    kind = _kink(kink_type)
    if diagram.n_crossings == 0:
        crossings = [kind.crossing(SCALE, SCALE + 1, SCALE)]
    else:
        _check_edge(diagram, edge)
        crossings = _scaled(diagram)
        hx, hs = diagram.heads[edge]
        base = SCALE * edge
        crossings[hx][hs] = base + 2
        crossings.append(list(kind.crossing(base, base + 1, base + 2)))
    out = orient_and_sign(canonical_relabel(crossings))
    logger.debug("r1 on edge %d (%s): %d -> %d crossings", edge, kind.value, diagram.n_crossings, out.n_crossings)
    return out


def _finger_crossings(a: Tuple[int, int, int], b: Tuple[int, int, int], a_right: bool, b_right: bool) -> List[Crossing]:
    a1, a2, a3 = a
    b1, b2, b3 = b
    if a_right and not b_right:
        return [(b1, a2, b2, a1), (b2, a2, b3, a3)]
    if not a_right and not b_right:
        return [(b1, a2, b2, a3), (b2, a2, b3, a1)]
    if a_right and b_right:
        return [(b2, a1, b3, a2), (b1, a3, b2, a2)]
    return [(b2, a3, b3, a2), (b1, a1, b2, a2)]


def r2_insert(diagram: KnotDiagram, edge_a: int, edge_b: int, face: Optional[int] = None) -> KnotDiagram:
    """Push a finger of edge_a over edge_b across a face both edges bound."""
    if diagram.n_crossings == 0 or edge_a == edge_b:
        raise EdgesNotCoFacial(f"edges {edge_a} and {edge_b} cannot carry an R2 move")
    _check_edge(diagram, edge_a)
    _check_edge(diagram, edge_b)
    sides = None
    for f in faces(diagram):
        if face is not None and f.id != face:
            continue
        boundary = dict(reversed(face_edges(diagram, f)))
        if edge_a in boundary and edge_b in boundary:
            sides = boundary[edge_a], boundary[edge_b]
            break
    if sides is None:
        raise EdgesNotCoFacial(f"edges {edge_a} and {edge_b} do not bound a common face")
    crossings = _scaled(diagram)
    pieces = []
    for edge in (edge_a, edge_b):
        hx, hs = diagram.heads[edge]
        base = SCALE * edge
        crossings[hx][hs] = base + 2
        pieces.append((base, base + 1, base + 2))
    crossings.extend(list(x) for x in _finger_crossings(pieces[0], pieces[1], *sides))
    out = orient_and_sign(canonical_relabel(crossings))
    logger.debug("r2 on edges %d/%d: %d -> %d crossings", edge_a, edge_b, diagram.n_crossings, out.n_crossings)
    return out


def random_move(diagram: KnotDiagram, rng: np.random.Generator, r2_probability: float = 0.5) -> KnotDiagram:
    kinds = list(KinkType)
    if diagram.n_crossings > 0 and rng.random() < r2_probability:
        candidates = []
        for f in faces(diagram):
            labels = sorted({label for label, _ in face_edges(diagram, f)})
            if len(labels) >= 2:
                candidates.append((f.id, labels))
        f_id, labels = candidates[int(rng.integers(len(candidates)))]
        a, b = rng.choice(len(labels), size=2, replace=False)
        return r2_insert(diagram, labels[int(a)], labels[int(b)], face=f_id)
    edge = int(rng.integers(1, max(2 * diagram.n_crossings, 1) + 1))
    return r1_insert(diagram, edge, kinds[int(rng.integers(len(kinds)))])


def random_moves(diagram: KnotDiagram, count: int, rng: np.random.Generator) -> KnotDiagram:
    for _ in range(count):
        diagram = random_move(diagram, rng)
    return diagram


def random_diagram(rng: np.random.Generator, target_crossings: int) -> KnotDiagram:
    """Random planar diagram with `target_crossings` crossings grown from a seed knot."""
    from src.knots.library import seed_diagrams

    seeds = [d for d in seed_diagrams().values() if d.n_crossings <= target_crossings]
    diagram = seeds[int(rng.integers(len(seeds)))]
    while diagram.n_crossings < target_crossings:
        r2 = 0.0 if target_crossings - diagram.n_crossings < 2 else 0.5
        diagram = random_move(diagram, rng, r2_probability=r2)
    return diagram
