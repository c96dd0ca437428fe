"""Edge-colored simple graphs, simple digraphs and cycle certificates.

Vertices and colors are dense 0-based integers. Every type here is immutable
once built; use :func:`build_colored_graph` and :func:`build_digraph` rather
than the constructors so that the invariants get checked.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import EmptyOutNeighborhood, LoopEdge, NegativeId, ParallelEdge

Edge = Tuple[int, int, int]  # (u, v, color)
Arc = Tuple[int, int]


@dataclass(frozen=True)
class ColoredGraph:
    """A simple undirected graph together with an edge coloring.

    ``class_index[i]`` lists the edge ids of color ``i`` in increasing order.
    ``adj[v]`` lists ``(neighbor, edge_id)`` pairs.
    """

    n: int
    edges: Tuple[Edge, ...]
    K: int
    class_index: Tuple[Tuple[int, ...], ...]
    adj: Tuple[Tuple[Tuple[int, int], ...], ...] = field(repr=False, compare=False)
    _pair_index: Dict[Tuple[int, int], int] = field(repr=False, compare=False)
    _incidence: Counter = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def color(self, eid: int) -> int:
        return self.edges[eid][2]

    def edge_between(self, u: int, v: int) -> Optional[int]:
        """Edge id joining ``u`` and ``v``, or None."""
        return self._pair_index.get((u, v) if u < v else (v, u))

    def incidence(self, v: int, color: int) -> int:
        """Number of edges of ``color`` at vertex ``v``."""
        return self._incidence.get((v, color), 0)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def class_sizes(self) -> List[int]:
        return [len(c) for c in self.class_index]


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: Tuple[Arc, ...]
    out_adj: Tuple[Tuple[int, ...], ...] = field(repr=False, compare=False)

    def outdegree(self, v: int) -> int:
        return len(self.out_adj[v])

    def min_outdegree(self) -> int:
        return min((len(a) for a in self.out_adj), default=0)

    def has_arc(self, u: int, v: int) -> bool:
        return v in self.out_adj[u]


@dataclass(frozen=True)
class CycleCertificate:
    """A claimed cycle: ``edge_ids[i]`` joins ``vertices[i]`` and ``vertices[i+1]``
    (indices taken cyclically)."""

    vertices: Tuple[int, ...]
    edge_ids: Tuple[int, ...]
    rainbow: bool = False

    @property
    def length(self) -> int:
        return len(self.edge_ids)

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edge_ids": list(self.edge_ids),
            "rainbow": self.rainbow,
            "length": self.length,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CycleCertificate":
        return cls(tuple(d["vertices"]), tuple(d["edge_ids"]), bool(d.get("rainbow", False)))


def build_colored_graph(n: int, edges: Iterable[Sequence[int]]) -> ColoredGraph:
    """Validate ``edges`` and index them. ``K`` is one more than the largest color."""
    if n < 0:
        raise NegativeId(f"vertex count {n} is negative")
    norm: List[Edge] = []
    pair_index: Dict[Tuple[int, int], int] = {}
    adj: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
    incidence: Counter = Counter()
    for eid, e in enumerate(edges):
        u, v, c = (int(x) for x in e)
        if u < 0 or v < 0 or c < 0:
            raise NegativeId(f"edge {eid} = {(u, v, c)} has a negative id")
        if u >= n or v >= n:
            raise NegativeId(f"edge {eid} = {(u, v, c)} names a vertex >= n={n}")
        if u == v:
            raise LoopEdge(f"edge {eid} is a loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in pair_index:
            raise ParallelEdge(f"edges {pair_index[key]} and {eid} both join {key}")
        pair_index[key] = eid
        norm.append((u, v, c))
        adj[u].append((v, eid))
        adj[v].append((u, eid))
        incidence[(u, c)] += 1
        incidence[(v, c)] += 1
    K = 1 + max((c for _, _, c in norm), default=-1)
    classes: List[List[int]] = [[] for _ in range(K)]
    for eid, (_, _, c) in enumerate(norm):
        classes[c].append(eid)
    return ColoredGraph(
        n=n,
        edges=tuple(norm),
        K=K,
        class_index=tuple(tuple(c) for c in classes),
        adj=tuple(tuple(a) for a in adj),
        _pair_index=pair_index,
        _incidence=incidence,
    )


def build_digraph(n: int, arcs: Iterable[Sequence[int]]) -> Digraph:
    """Validate a simple digraph: no loops, at most one arc per unordered pair."""
    if n < 0:
        raise NegativeId(f"vertex count {n} is negative")
    seen: Dict[Tuple[int, int], Arc] = {}
    out: List[List[int]] = [[] for _ in range(n)]
    norm: List[Arc] = []
    for a in arcs:
        u, v = int(a[0]), int(a[1])
        if u < 0 or v < 0 or u >= n or v >= n:
            raise NegativeId(f"arc {(u, v)} is out of range for n={n}")
        if u == v:
            raise LoopEdge(f"arc {(u, v)} is a loop")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ParallelEdge(f"arcs {seen[key]} and {(u, v)} share the pair {key}")
        seen[key] = (u, v)
        out[u].append(v)
        norm.append((u, v))
    return Digraph(n=n, arcs=tuple(norm), out_adj=tuple(tuple(o) for o in out))


def validate_classes(g: ColoredGraph, k: int, K_required: int) -> bool:
    """True iff ``g`` has exactly colors ``0..K_required-1``, each with >= k edges."""
    if g.K != K_required:
        return False
    return all(len(c) >= k and len(c) > 0 for c in g.class_index)


def from_digraph(d: Digraph) -> ColoredGraph:
    """Color every arc ``v -> u`` with color ``v``: each class becomes the
    out-star of one vertex."""
    for v in range(d.n):
        if not d.out_adj[v]:
            raise EmptyOutNeighborhood(v)
    edges = [(v, u, v) for v in range(d.n) for u in d.out_adj[v]]
    return build_colored_graph(d.n, edges)


def induced_subgraph(
    g: ColoredGraph, keep: Iterable[int], colors: Optional[Iterable[int]] = None
) -> Tuple[ColoredGraph, List[int], List[int], List[int]]:
    """Subgraph on ``keep`` restricted to edges whose color is in ``colors``.

    Vertices and surviving colors are relabeled densely in increasing order.
    Returns ``(sub, vertex_map, color_map, edge_map)`` where each map sends a
    new id to the original id.
    """
    vmap = sorted(set(keep))
    vinv = {v: i for i, v in enumerate(vmap)}
    allowed = None if colors is None else set(colors)
    picked = [
        eid
        for eid, (u, v, c) in enumerate(g.edges)
        if u in vinv and v in vinv and (allowed is None or c in allowed)
    ]
    cmap = sorted({g.edges[e][2] for e in picked})
    cinv = {c: i for i, c in enumerate(cmap)}
    sub = build_colored_graph(
        len(vmap), [(vinv[g.edges[e][0]], vinv[g.edges[e][1]], cinv[g.edges[e][2]]) for e in picked]
    )
    return sub, vmap, cmap, picked
