"""Planar-diagram codes: parsing, orientation, faces and checkerboard colouring.

Crossings are `X[a,b,c,d]` records listed counter-clockwise from the incoming
under-strand, so slot 0 is the under-strand entering and slot 2 the
under-strand leaving. Corner k of a crossing is the region between slot k and
slot k+1 (mod 4).
"""

import logging
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import networkx as nx

from src.utils.errors import BadEdgeMultiplicity, MalformedRecord, MultiComponent, NonPlanarCode

logger = logging.getLogger(__name__)

Crossing = Tuple[int, int, int, int]
Slot = Tuple[int, int]  # (crossing index, slot index)
Corner = Tuple[int, int]  # (crossing index, corner index)

BLACK = "black"
WHITE = "white"

_RECORD = re.compile(r"^X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]$")
_TOKEN = re.compile(r"X\[[^\]]*\]|\S+")


@dataclass(frozen=True)
class PDCode:
    crossings: Tuple[Crossing, ...]

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @classmethod
    def unknot(cls) -> "PDCode":
        return cls(())

    def __str__(self) -> str:
        return " ".join("X[%d,%d,%d,%d]" % x for x in self.crossings)


@dataclass(frozen=True)
class KnotDiagram:
    pd: PDCode
    strand: Tuple[int, ...]  # edge labels in traversal order
    tails: Dict[int, Slot] = field(hash=False, compare=False)
    heads: Dict[int, Slot] = field(hash=False, compare=False)
    crossing_signs: Tuple[int, ...]
    outer_face: int = 0

    @property
    def n_crossings(self) -> int:
        return self.pd.n_crossings

    @property
    def writhe(self) -> int:
        return sum(self.crossing_signs)


@dataclass(frozen=True)
class Face:
    id: int
    boundary: Tuple[Corner, ...]


@dataclass(frozen=True)
class CheckerboardColoring:
    colours: Tuple[str, ...]  # indexed by face id
    outer_face: int

    def black_faces(self) -> List[int]:
        return [i for i, c in enumerate(self.colours) if c == BLACK]


def parse_pd(text: str) -> PDCode:
    tokens = _TOKEN.findall(text or "")
    if not tokens:
        raise MalformedRecord("empty PD code")
    crossings: List[Crossing] = []
    for tok in tokens:
        m = _RECORD.match(tok.replace(" ", ""))
        if not m:
            raise MalformedRecord(f"cannot parse crossing record {tok!r}")
        crossings.append(tuple(int(g) for g in m.groups()))
    pd = PDCode(tuple(crossings))
    validate_pd(pd)
    return pd


def _occurrences(crossings: Tuple[Crossing, ...]) -> Dict[int, List[Slot]]:
    occ: Dict[int, List[Slot]] = {}
    for x, crossing in enumerate(crossings):
        for s, label in enumerate(crossing):
            occ.setdefault(label, []).append((x, s))
    return occ


def trace_strand(crossings: Tuple[Crossing, ...]) -> List[Tuple[int, Slot, Slot]]:
    """Walk the strand from the outgoing under-slot of crossing 0.

    Returns (label, tail slot, head slot) per edge in traversal order.
    """
    if not crossings:
        return []
    occ = _occurrences(crossings)
    start: Slot = (0, 2)
    walk: List[Tuple[int, Slot, Slot]] = []
    x, s = start
    while True:
        label = crossings[x][s]
        ends = occ[label]
        head = ends[1] if ends[0] == (x, s) else ends[0]
        if head[1] == 2:
            raise MalformedRecord(f"edge {label} enters crossing {head[0]} through its outgoing under-slot")
        walk.append((label, (x, s), head))
        x, s = head[0], (head[1] + 2) % 4
        if (x, s) == start:
            break
        if len(walk) > 2 * len(crossings):
            raise MultiComponent("strand traversal loops without returning to its start")
    return walk


def validate_pd(pd: PDCode) -> None:
    crossings = pd.crossings
    if not crossings:
        return
    occ = _occurrences(crossings)
    for label, ends in sorted(occ.items()):
        if len(ends) != 2:
            raise BadEdgeMultiplicity(f"edge label {label} occurs {len(ends)} times")
    c = len(crossings)
    if set(occ) != set(range(1, 2 * c + 1)):
        raise MalformedRecord(f"labels of a {c}-crossing code must be exactly 1..{2 * c}")
    walk = trace_strand(crossings)
    if len(walk) != 2 * c:
        raise MultiComponent(f"strand visits {len(walk)} of {2 * c} edges")


def orient_and_sign(pd: PDCode, outer_face: int = 0) -> KnotDiagram:
    validate_pd(pd)
    walk = trace_strand(pd.crossings)
    tails = {label: tail for label, tail, _ in walk}
    heads = {label: head for label, _, head in walk}
    signs: List[int] = []
    for x, crossing in enumerate(pd.crossings):
        # over-strand entering at slot 1 is a positive crossing
        signs.append(+1 if heads[crossing[1]] == (x, 1) else -1)
    return KnotDiagram(
        pd=pd,
        strand=tuple(label for label, _, _ in walk),
        tails=tails,
        heads=heads,
        crossing_signs=tuple(signs),
        outer_face=outer_face,
    )


def diagram_from_text(text: str, outer_face: int = 0) -> KnotDiagram:
    return orient_and_sign(parse_pd(text), outer_face=outer_face)


@lru_cache(maxsize=1024)
def _face_cycles(crossings: Tuple[Crossing, ...]) -> Tuple[Tuple[Corner, ...], ...]:
    occ = _occurrences(crossings)
    seen = set()
    cycles: List[Tuple[Corner, ...]] = []
    for x in range(len(crossings)):
        for k in range(4):
            if (x, k) in seen:
                continue
            cycle: List[Corner] = []
            corner = (x, k)
            while corner not in seen:
                seen.add(corner)
                cycle.append(corner)
                cx, ck = corner
                s = (ck + 1) % 4
                ends = occ[crossings[cx][s]]
                corner = ends[1] if ends[0] == (cx, s) else ends[0]
            cycles.append(tuple(cycle))
    return tuple(cycles)


def faces(diagram: KnotDiagram) -> List[Face]:
    c = diagram.n_crossings
    if c == 0:
        return [Face(0, ()), Face(1, ())]
    cycles = _face_cycles(diagram.pd.crossings)
    if len(cycles) != c + 2:
        raise NonPlanarCode(f"{c}-crossing code traces {len(cycles)} faces, expected {c + 2}")
    return [Face(i, cycle) for i, cycle in enumerate(cycles)]


def corner_faces(diagram: KnotDiagram) -> Dict[Corner, int]:
    return {corner: f.id for f in faces(diagram) for corner in f.boundary}


def face_edges(diagram: KnotDiagram, face: Face) -> List[Tuple[int, bool]]:
    """Edges along a face boundary as (label, face lies right of the strand)."""
    out: List[Tuple[int, bool]] = []
    for x, k in face.boundary:
        s = (k + 1) % 4
        label = diagram.pd.crossings[x][s]
        out.append((label, diagram.tails[label] == (x, s)))
    return out


def face_adjacency(diagram: KnotDiagram) -> nx.MultiGraph:
    g = nx.MultiGraph()
    fs = faces(diagram)
    g.add_nodes_from(f.id for f in fs)
    if diagram.n_crossings == 0:
        g.add_edge(0, 1)
        return g
    lookup = corner_faces(diagram)
    for x in range(diagram.n_crossings):
        for k in range(4):
            # corners k and k+1 meet along the edge at slot k+1
            g.add_edge(lookup[(x, k)], lookup[(x, (k + 1) % 4)], slot=(x, (k + 1) % 4))
    return g


def checkerboard(diagram: KnotDiagram, outer_face: Optional[int] = None) -> CheckerboardColoring:
    outer = diagram.outer_face if outer_face is None else outer_face
    adjacency = face_adjacency(diagram)
    if outer not in adjacency:
        raise NonPlanarCode(f"no face with id {outer}")
    colours: Dict[int, str] = {outer: WHITE}
    for u, v in nx.bfs_edges(adjacency, outer):
        colours[v] = BLACK if colours[u] == WHITE else WHITE
    for u, v in adjacency.edges():
        if colours[u] == colours[v]:
            raise NonPlanarCode(f"faces {u} and {v} share a strand and a colour")
    logger.debug("checkerboard outer=%d black=%s", outer, [f for f in sorted(colours) if colours[f] == BLACK])
    return CheckerboardColoring(tuple(colours[i] for i in range(len(colours))), outer)
