"""Exact girth, directed girth and rainbow girth, plus a brute-force oracle."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from .errors import BudgetExceeded, TooLarge
from .graph import ColoredGraph, CycleCertificate, Digraph, build_colored_graph

UncoloredGraph = Tuple[int, Sequence[Tuple[int, int]]]


@dataclass(frozen=True)
class SearchLimits:
    max_len: int = 20
    node_budget: int = 10**8

    def __post_init__(self):
        if self.max_len < 2:
            raise ValueError("max_len must be >= 2")
        if self.node_budget <= 0:
            raise ValueError("node_budget must be positive")


# verification ---------------------------------------------------------------

def verify_cycle(g: ColoredGraph, c: CycleCertificate) -> bool:
    """True iff ``c`` is a genuine cycle of ``g`` (colors ignored)."""
    L = len(c.edge_ids)
    if L < 3 or len(c.vertices) != L or len(set(c.vertices)) != L:
        return False
    if len(set(c.edge_ids)) != L:
        return False
    for i, eid in enumerate(c.edge_ids):
        if not 0 <= eid < g.m:
            return False
        u, v, _ = g.edges[eid]
        a, b = c.vertices[i], c.vertices[(i + 1) % L]
        if {u, v} != {a, b}:
            return False
    return True


def verify_rainbow_cycle(g: ColoredGraph, c: CycleCertificate) -> bool:
    """True iff ``c`` is a cycle of ``g`` whose edge colors are pairwise distinct."""
    if not verify_cycle(g, c):
        return False
    colors = [g.edges[e][2] for e in c.edge_ids]
    return len(set(colors)) == len(colors)


def _as_colored(graph: Union[ColoredGraph, UncoloredGraph]) -> ColoredGraph:
    if isinstance(graph, ColoredGraph):
        return graph
    n, edges = graph
    return build_colored_graph(n, [(u, v, 0) for u, v in edges])


# undirected girth -----------------------------------------------------------

def _two_core(g: ColoredGraph) -> List[bool]:
    deg = [len(a) for a in g.adj]
    alive = [True] * g.n
    stack = [v for v in range(g.n) if deg[v] < 2]
    while stack:
        v = stack.pop()
        if not alive[v]:
            continue
        alive[v] = False
        for w, _ in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] < 2:
                    stack.append(w)
    return alive


def undirected_girth(graph: Union[ColoredGraph, UncoloredGraph]) -> Optional[CycleCertificate]:
    """Shortest cycle of a simple graph, or None for a forest.

    Accepts a :class:`ColoredGraph` or an ``(n, [(u, v), ...])`` pair; in the
    latter case certificate edge ids index the given edge list.
    """
    g = _as_colored(graph)
    alive = _two_core(g)
    best = g.n + 1
    witness = None
    dist = [-1] * g.n
    parent = [-1] * g.n
    pedge = [-1] * g.n
    for root in range(g.n):
        if not alive[root]:
            continue
        touched = [root]
        dist[root] = 0
        q = deque([root])
        while q:
            u = q.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w, eid in g.adj[u]:
                if not alive[w] or eid == pedge[u]:
                    continue
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    pedge[w] = eid
                    touched.append(w)
                    q.append(w)
                elif dist[w] >= dist[u]:
                    length = dist[u] + dist[w] + 1
                    if length < best:
                        best = length
                        witness = (root, u, w, eid, list(parent), list(pedge))
        for v in touched:
            dist[v] = -1
            parent[v] = -1
            pedge[v] = -1
    if witness is None:
        return None
    root, u, w, eid, par, pe = witness
    left_v, left_e = [u], []
    while left_v[-1] != root:
        left_e.append(pe[left_v[-1]])
        left_v.append(par[left_v[-1]])
    right_v, right_e = [w], []
    while right_v[-1] != root:
        right_e.append(pe[right_v[-1]])
        right_v.append(par[right_v[-1]])
    # root ... u, then w ... back to root
    verts = left_v[::-1] + right_v[:-1]
    edges = left_e[::-1] + [eid] + right_e
    cert = CycleCertificate(tuple(verts), tuple(edges), rainbow=False)
    assert cert.length == best and len(set(verts)) == len(verts), "girth witness is not simple"
    return cert


# directed girth -------------------------------------------------------------

def directed_girth(d: Digraph) -> Optional[CycleCertificate]:
    """Shortest directed cycle; certificate edge ids index ``d.arcs``."""
    arc_id = {a: i for i, a in enumerate(d.arcs)}
    best = d.n + 1
    best_path: Optional[List[int]] = None
    dist = [-1] * d.n
    parent = [-1] * d.n
    for root in range(d.n):
        touched = [root]
        dist[root] = 0
        q = deque([root])
        found = False
        while q and not found:
            u = q.popleft()
            if dist[u] + 1 >= best:
                break
            for w in d.out_adj[u]:
                if w == root:
                    best = dist[u] + 1
                    path = [u]
                    while path[-1] != root:
                        path.append(parent[path[-1]])
                    best_path = path[::-1]
                    found = True
                    break
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    touched.append(w)
                    q.append(w)
        for v in touched:
            dist[v] = -1
            parent[v] = -1
    if best_path is None:
        return None
    L = len(best_path)
    arcs = tuple(arc_id[(best_path[i], best_path[(i + 1) % L])] for i in range(L))
    return CycleCertificate(tuple(best_path), arcs, rainbow=False)


def verify_directed_cycle(d: Digraph, c: CycleCertificate) -> bool:
    L = c.length
    if L < 2 or len(c.vertices) != L or len(set(c.vertices)) != L:
        return False
    for i, a in enumerate(c.edge_ids):
        if not 0 <= a < len(d.arcs):
            return False
        if d.arcs[a] != (c.vertices[i], c.vertices[(i + 1) % L]):
            return False
    return True


# rainbow girth --------------------------------------------------------------

def _bfs_dist(g: ColoredGraph, root: int, lo: int) -> List[int]:
    """Hop distances from ``root`` inside the subgraph on vertices >= lo."""
    dist = [-1] * g.n
    dist[root] = 0
    q = deque([root])
    while q:
        u = q.popleft()
        for w, _ in g.adj[u]:
            if w >= lo and dist[w] < 0:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def rainbow_girth_exact(
    g: ColoredGraph, limits: SearchLimits = SearchLimits()
) -> Optional[CycleCertificate]:
    """Shortest rainbow cycle of length <= ``limits.max_len``, or None.

    Iterative deepening on the cycle length. For each target length the DFS
    fixes the smallest vertex of the cycle as the start, keeps the used colors
    in an int bitmask and prunes by hop distance back to the start.
    Raises :class:`BudgetExceeded` if ``limits.node_budget`` DFS nodes are
    spent before the answer is settled.
    """
    n = g.n
    # neighbors sorted by ascending degree, then id
    nbrs = [
        sorted(((w, 1 << g.edges[e][2], e) for w, e in g.adj[v]), key=lambda t: (len(g.adj[t[0]]), t[0]))
        for v in range(n)
    ]
    starts = [s for s in range(n) if len(g.adj[s]) >= 2]
    dists = {s: _bfs_dist(g, s, s) for s in starts}
    nodes = 0
    budget = limits.node_budget
    max_len = min(limits.max_len, n)

    for L in range(3, max_len + 1):
        for s in starts:
            dist = dists[s]
            on_path = [False] * n
            on_path[s] = True
            path_v = [s]
            path_e: List[int] = []
            # explicit stack of neighbor iterators
            stack = [(iter(nbrs[s]), 0)]
            while stack:
                it, used = stack[-1]
                depth = len(path_e)
                advanced = False
                for w, bit, e in it:
                    if used & bit:
                        continue
                    if w == s:
                        if depth + 1 == L and depth >= 2:
                            cert = CycleCertificate(tuple(path_v), tuple(path_e + [e]), rainbow=True)
                            return cert
                        continue
                    if w < s or on_path[w]:
                        continue
                    dw = dist[w]
                    if dw < 0 or depth + 1 + dw > L:
                        continue
                    if depth + 1 == L:
                        continue
                    nodes += 1
                    if nodes > budget:
                        raise BudgetExceeded(best=None, lower_bound=L, nodes=nodes)
                    on_path[w] = True
                    path_v.append(w)
                    path_e.append(e)
                    stack.append((iter(nbrs[w]), used | bit))
                    advanced = True
                    break
                if not advanced:
                    stack.pop()
                    if path_e:
                        on_path[path_v.pop()] = False
                        path_e.pop()
    return None


def brute_force_rainbow_girth(g: ColoredGraph, max_len: Optional[int] = None) -> Optional[int]:
    """Rainbow girth by listing every simple cycle (each seen from its
    smallest vertex) and checking its colors afterwards. Only for n <= 12.

    With ``max_len`` only cycles up to that length are listed, which still
    decides exactly whether the rainbow girth is <= max_len.
    """
    if g.n > 12:
        raise TooLarge(f"brute force is limited to n <= 12, got n={g.n}")
    cap = g.n if max_len is None else min(max_len, g.n)
    best: Optional[int] = None

    def extend(s: int, v: int, verts: List[int], edges: List[int]) -> None:
        nonlocal best
        for w, e in g.adj[v]:
            if w == s and len(edges) >= 2 and e != edges[0]:
                cyc = edges + [e]
                colors = {g.edges[x][2] for x in cyc}
                if len(colors) == len(cyc) and (best is None or len(cyc) < best):
                    best = len(cyc)
            elif w > s and w not in verts and len(edges) + 1 < cap:
                verts.append(w)
                edges.append(e)
                extend(s, w, verts, edges)
                verts.pop()
                edges.pop()

    for s in range(g.n):
        extend(s, s, [s], [])
    return best
