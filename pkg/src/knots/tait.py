import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from src.knots.pd import (
    BLACK,
    CheckerboardColoring,
    KnotDiagram,
    checkerboard,
    corner_faces,
)
from src.utils.errors import MalformedRecord

logger = logging.getLogger(__name__)

Edge = Tuple[int, int, int]  # (u, v, sign) with u <= v


@dataclass(frozen=True)
class TaitGraph:
    n: int
    edges: Tuple[Edge, ...]

    def __post_init__(self) -> None:
        for u, v, s in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise MalformedRecord(f"edge ({u},{v}) outside {self.n} vertices")
            if s not in (1, -1):
                raise MalformedRecord(f"edge sign must be +1 or -1, got {s}")

    @property
    def tau(self) -> int:
        return sum(s for _, _, s in self.edges)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "TaitGraph":
        norm = []
        for u, v, s in edges:
            u, v = int(u), int(v)
            norm.append((min(u, v), max(u, v), int(s)))
        return cls(int(n), tuple(norm))

    def to_json(self) -> Dict:
        return {"n": self.n, "tau": self.tau, "tait_edges": [list(e) for e in self.edges]}

    def loops(self) -> List[Edge]:
        return [e for e in self.edges if e[0] == e[1]]

    def canonical(self) -> Tuple[int, Tuple[Edge, ...]]:
        return self.n, tuple(sorted(self.edges))


def tait_graph(diagram: KnotDiagram, coloring: Optional[CheckerboardColoring] = None) -> TaitGraph:
    coloring = coloring or checkerboard(diagram)
    black = coloring.black_faces()
    vertex = {face_id: i for i, face_id in enumerate(black)}
    if diagram.n_crossings == 0:
        return TaitGraph(len(black), ())
    lookup = corner_faces(diagram)
    edges: List[Edge] = []
    for x in range(diagram.n_crossings):
        colours = [coloring.colours[lookup[(x, k)]] for k in range(4)]
        # black corners 0/2 take the sign of the smoothing that joins them
        if colours[0] == BLACK:
            u, v, sign = lookup[(x, 0)], lookup[(x, 2)], +1
        else:
            u, v, sign = lookup[(x, 1)], lookup[(x, 3)], -1
        a, b = vertex[u], vertex[v]
        edges.append((min(a, b), max(a, b), sign))
    g = TaitGraph(len(black), tuple(edges))
    logger.debug("tait graph n=%d tau=%d edges=%s", g.n, g.tau, g.edges)
    return g


def dual_outer_face(diagram: KnotDiagram) -> int:
    """Smallest face id coloured black by the default colouring."""
    return checkerboard(diagram).black_faces()[0]


def tait_graph_for(diagram: KnotDiagram, colouring: str = "default") -> TaitGraph:
    if colouring == "default":
        return tait_graph(diagram)
    dual = tait_graph(diagram, checkerboard(diagram, dual_outer_face(diagram)))
    if colouring == "dual":
        return dual
    if colouring == "smallest":
        default = tait_graph(diagram)
        return dual if dual.n < default.n else default
    raise ValueError(f"unknown colouring {colouring!r}")
