"""Star contraction of a representative subgraph and lifting of cycles back.

The representative subgraph is given as a set of edge ids of a host
:class:`ColoredGraph`. Each block is a center plus the non-center vertices
assigned to it; a block edge is the edge joining a non-center vertex to its
center. Every other edge survives contraction, possibly as a loop (both ends
in one block) or as one of several parallel edges between two blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import LiftFailure, NonAdjacentAssignment, UnassignedVertex
from .graph import ColoredGraph, CycleCertificate, build_colored_graph
from .search import verify_rainbow_cycle


@dataclass(frozen=True)
class ContractionMap:
    block_of: Mapping[int, int]          # original vertex -> block id
    center_of: Tuple[int, ...]           # block id -> center vertex
    block_edge: Mapping[int, int]        # non-center vertex -> edge id to its center
    preimage: Tuple[int, ...]            # contracted edge index -> original edge id

    def block_sizes(self) -> List[int]:
        sizes = [0] * len(self.center_of)
        for b in self.block_of.values():
            sizes[b] += 1
        return sizes


@dataclass(frozen=True)
class ContractedGraph:
    """Multigraph on blocks ``0..n-1``. ``edges[i] = (a, b, color)``."""

    n: int
    edges: Tuple[Tuple[int, int, int], ...]
    loops: Tuple[int, ...]
    parallel: Tuple[Tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def is_simple(self) -> bool:
        return not self.loops and not self.parallel

    def simple_part(self) -> Tuple[ColoredGraph, List[int]]:
        """Drop loops and keep the first edge of each parallel class.

        Returns the simple graph and, per its edge id, the contracted edge index.
        """
        seen = set()
        keep: List[int] = []
        for i, (a, b, _) in enumerate(self.edges):
            key = (min(a, b), max(a, b))
            if a == b or key in seen:
                continue
            seen.add(key)
            keep.append(i)
        sg = build_colored_graph(self.n, [self.edges[i] for i in keep])
        return sg, keep


def assign_to_centers(
    g: ColoredGraph, edge_ids: Iterable[int], centers: Sequence[int]
) -> Dict[int, int]:
    """Assign each non-center endpoint to its adjacent center of smallest id."""
    center_set = set(centers)
    best: Dict[int, int] = {}
    for eid in edge_ids:
        u, v, _ = g.edges[eid]
        for x, y in ((u, v), (v, u)):
            if x not in center_set and y in center_set:
                if x not in best or y < best[x]:
                    best[x] = y
    return best


def contract_stars(
    g: ColoredGraph,
    edge_ids: Iterable[int],
    centers: Sequence[int],
    assignment: Optional[Mapping[int, int]] = None,
) -> Tuple[ContractedGraph, ContractionMap]:
    """Contract every block ``{center} + assigned vertices`` to one vertex."""
    eids = sorted(set(edge_ids))
    centers = list(dict.fromkeys(centers))
    center_set = set(centers)
    if assignment is None:
        assignment = assign_to_centers(g, eids, centers)

    block_id = {c: i for i, c in enumerate(centers)}
    block_of: Dict[int, int] = dict(block_id)
    block_edge: Dict[int, int] = {}
    touched = {x for e in eids for x in g.edges[e][:2]}
    for v in sorted(touched - center_set):
        if v not in assignment:
            raise UnassignedVertex(f"vertex {v} is neither a center nor assigned")
        c = assignment[v]
        if c not in center_set:
            raise NonAdjacentAssignment(f"vertex {v} assigned to non-center {c}")
        e = g.edge_between(v, c)
        if e is None or e not in eids:
            raise NonAdjacentAssignment(f"vertex {v} is not adjacent to its center {c}")
        block_of[v] = block_id[c]
        block_edge[v] = e

    block_edges = set(block_edge.values())
    edges: List[Tuple[int, int, int]] = []
    preimage: List[int] = []
    for e in eids:
        if e in block_edges:
            continue
        u, v, col = g.edges[e]
        edges.append((block_of[u], block_of[v], col))
        preimage.append(e)

    loops = tuple(i for i, (a, b, _) in enumerate(edges) if a == b)
    first: Dict[Tuple[int, int], int] = {}
    parallel: List[Tuple[int, int]] = []
    for i, (a, b, _) in enumerate(edges):
        if a == b:
            continue
        key = (min(a, b), max(a, b))
        if key in first:
            parallel.append((first[key], i))
        else:
            first[key] = i

    cg = ContractedGraph(len(centers), tuple(edges), loops, tuple(parallel))
    cm = ContractionMap(block_of, tuple(centers), block_edge, tuple(preimage))
    return cg, cm


def _block_path(cm: ContractionMap, x: int, y: int) -> Tuple[List[int], List[int]]:
    """Vertices strictly after ``x`` up to ``y`` and the edges walked, going
    through the center unless one end already is the center."""
    if x == y:
        return [], []
    center = cm.center_of[cm.block_of[x]]
    if x == center:
        return [y], [cm.block_edge[y]]
    if y == center:
        return [y], [cm.block_edge[x]]
    return [center, y], [cm.block_edge[x], cm.block_edge[y]]


def lift_cycle(cm: ContractionMap, g: ColoredGraph, c: CycleCertificate) -> CycleCertificate:
    """Turn a cycle of the contracted graph (loops and 2-cycles allowed) into a
    rainbow cycle of ``g`` with at most three times as many edges.

    ``c.edge_ids`` index the contracted edge list; ``c.vertices`` are blocks.
    """
    L = c.length
    if L == 0 or len(c.vertices) != L:
        raise LiftFailure(f"malformed contracted cycle {c}")
    # orient each contracted edge as (tail in block i, head in block i+1)
    oriented: List[Tuple[int, int, int]] = []
    for i in range(L):
        e = cm.preimage[c.edge_ids[i]]
        u, v, _ = g.edges[e]
        a, b = c.vertices[i], c.vertices[(i + 1) % L]
        if cm.block_of[u] == a and cm.block_of[v] == b:
            oriented.append((u, v, e))
        elif cm.block_of[v] == a and cm.block_of[u] == b:
            oriented.append((v, u, e))
        else:
            raise LiftFailure(f"contracted edge {c.edge_ids[i]} does not join blocks {a},{b}")

    verts: List[int] = []
    eids: List[int] = []
    for i in range(L):
        tail, head, e = oriented[i]
        nxt_tail = oriented[(i + 1) % L][0]
        verts.append(head)
        eids.append(e)
        pv, pe = _block_path(cm, head, nxt_tail)
        verts.extend(pv)
        eids.extend(pe)
    # verts currently starts at head of edge 0 and ends at tail of edge 0
    verts = [verts[-1]] + verts[:-1]
    out = CycleCertificate(tuple(verts), tuple(eids), rainbow=True)
    if not verify_rainbow_cycle(g, out):
        raise LiftFailure(f"lifted walk {out} is not a rainbow cycle")
    if out.length > 3 * L:
        raise LiftFailure(f"lifted cycle has length {out.length} > 3*{L}")
    return out
