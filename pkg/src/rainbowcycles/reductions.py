"""Constructive pipelines that turn a colored graph into a certified short
rainbow cycle.

Two end-to-end procedures are provided:

* :func:`pipeline_n_plus_k` for graphs with ``n + k`` color classes: find a
  small vertex set touching every color, keep one edge per color next to it,
  contract the stars around the chosen vertices and look for a short cycle in
  the contracted graph, which lifts back to a rainbow cycle at most three
  times as long. When ``k`` is large relative to ``n`` a maximal collection of
  colorful stars supplies the centers instead.
* :func:`pipeline_main` for graphs with ``n`` color classes: colors that put
  many edges on a single vertex give a digraph whose short directed cycles are
  rainbow; otherwise a small random vertex set is deleted so that at least
  ``k`` more colors than vertices survive, and the ``n + k`` pipeline finishes.

The constants fixed in the theory (``c = 10**11`` and ``10**9``) are far out of
reach on real inputs, so every threshold lives in :class:`PipelineParams`
and is derived from ``c`` by the same formulas; a small ``c`` gives a
working, honestly certified desk-scale run. Certified bounds are per run:
three times the contracted cycle length, or the directed cycle length.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field, replace
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .contraction import ContractedGraph, contract_stars, lift_cycle
from .errors import (
    ColorNotHit,
    InternalConsistencyError,
    NoCycleFound,
    PreconditionError,
    SampleFailure,
)
from .graph import ColoredGraph, CycleCertificate, Digraph, build_digraph, induced_subgraph, validate_classes
from .rng import derive_seed, make_rng
from .search import directed_girth, undirected_girth, verify_rainbow_cycle

C_MAIN = 1e11
C_N_PLUS_K = 1e9


@dataclass(frozen=True)
class PipelineParams:
    """Tunable constants. Any field left as None is derived from ``c`` (and
    ``n``, ``k``) on demand; setting it overrides the formula."""

    c: float = C_MAIN
    retry_cap: int = 64
    class_size: Optional[int] = None
    domination_threshold: Optional[float] = None
    bad_threshold: Optional[float] = None
    deletion_rate_numerator: Optional[float] = None
    deletion_window: Optional[Tuple[float, float]] = None
    hitting_rounds: Optional[int] = None
    hitting_sample_size: Optional[int] = None
    star_min_size: Optional[float] = None
    star_color_cap: Optional[float] = None

    @classmethod
    def scaled(cls, c: float, **overrides) -> "PipelineParams":
        return cls(c=c, **overrides)

    def t(self, k: int) -> float:
        return self.c * k

    def required_class_size(self, k: int) -> int:
        return self.class_size if self.class_size is not None else math.ceil(self.c * k)

    def threshold(self, k: int) -> float:
        if self.domination_threshold is not None:
            return self.domination_threshold
        return self.t(k) / 100 + 8 * k

    def bad(self, k: int) -> float:
        return self.bad_threshold if self.bad_threshold is not None else self.t(k) / 100

    def rate_numerator(self, k: int) -> float:
        return self.deletion_rate_numerator if self.deletion_rate_numerator is not None else 4 * k

    def window(self, k: int) -> Tuple[float, float]:
        return self.deletion_window if self.deletion_window is not None else (2 * k, 8 * k)

    def rounds(self, k: int) -> int:
        if self.hitting_rounds is not None:
            return self.hitting_rounds
        return int(math.floor(2 * math.log2(k))) if k >= 1 else 0

    def sample_size(self, n: int, k: int) -> int:
        if self.hitting_sample_size is not None:
            return self.hitting_sample_size
        return int(n // (560 * math.sqrt(k))) if k >= 1 else 0

    def sigma(self, n: int, k: int) -> float:
        if self.star_min_size is not None:
            return self.star_min_size
        return self.c * k * k / (4 * n) if n > 0 else math.inf

    def gamma(self, k: int) -> float:
        if self.star_color_cap is not None:
            return self.star_color_cap
        return self.c ** (2 / 3) * k ** (2 / 3)

    def resolve(self, n: int, k: int, r: Optional[int] = None) -> Dict[str, object]:
        """Concrete values of every derived field for this instance."""
        out: Dict[str, object] = {
            "c": self.c,
            "t": self.t(k),
            "retry_cap": self.retry_cap,
            "class_size": self.required_class_size(k),
            "domination_threshold": self.threshold(k),
            "bad_threshold": self.bad(k),
            "deletion_rate_numerator": self.rate_numerator(k),
            "deletion_window": list(self.window(k)),
            "hitting_rounds": self.rounds(k),
            "hitting_sample_size": self.sample_size(n, k),
            "star_min_size": self.sigma(n, k),
            "star_color_cap": self.gamma(k),
        }
        if r is not None:
            out["deletion_probability"] = self.rate_numerator(k) / r if r else None
        return out

    def to_dict(self) -> dict:
        d = asdict(self)
        if self.deletion_window is not None:
            d["deletion_window"] = list(self.deletion_window)
        return d

    @classmethod
    def from_dict(cls, d: Mapping) -> "PipelineParams":
        d = dict(d)
        if d.get("deletion_window") is not None:
            d["deletion_window"] = tuple(d["deletion_window"])
        return cls(**d)


@dataclass
class PipelineReport:
    """Everything a run did. ``status`` is ``ok`` exactly when ``certificate``
    is set, in which case it is a verified rainbow cycle of the input graph
    with ``certificate.length <= bound``."""

    kind: str
    n: int
    k: int
    K: int
    seed: int
    params: Dict[str, object]
    branch: str = ""
    status: str = "running"
    certificate: Optional[CycleCertificate] = None
    bound: Optional[int] = None
    reason: str = ""
    sizes: Dict[str, object] = field(default_factory=dict)
    hypotheses: Dict[str, bool] = field(default_factory=dict)
    diagnostics: Dict[str, object] = field(default_factory=dict)

    @property
    def ratio_bound(self) -> float:
        return self.n / self.k

    @property
    def aharoni_bound(self) -> int:
        return -(-self.n // self.k)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "branch": self.branch,
            "status": self.status,
            "seed": self.seed,
            "n": self.n,
            "k": self.k,
            "K": self.K,
            "params": self.params,
            "sizes": self.sizes,
            "hypotheses": self.hypotheses,
            "certificate": self.certificate.to_dict() if self.certificate else None,
            "bound": self.bound,
            "ratio_bound": self.ratio_bound,
            "aharoni_bound": self.aharoni_bound,
            "reason": self.reason,
            "diagnostics": self.diagnostics,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, default=_json_default)


def _json_default(o):
    if isinstance(o, (np.integer,)):
        return int(o)
    if isinstance(o, (np.floating,)):
        return float(o)
    raise TypeError(f"not JSON serializable: {type(o).__name__}")


# hitting set ----------------------------------------------------------------

def _colors_at(g: ColoredGraph) -> List[frozenset]:
    return [frozenset(g.edges[e][2] for _, e in g.adj[v]) for v in range(g.n)]


def find_color_hitting_set(g: ColoredGraph, k: int, params: PipelineParams, seed: int = 0) -> List[int]:
    """A vertex set touching at least one edge of every nonempty color class.

    A few rounds of uniform sampling (with repetition) shrink the set of
    untouched colors; each round redraws up to ``retry_cap`` times until the
    residual drops to ``exp(-sqrt(c)/1120)`` of its size, keeping the best
    draw. A greedy pass then adds the vertex touching the most untouched
    colors until none remain.
    """
    S, _ = _hitting_set(g, k, params, seed)
    return S


def _hitting_set(g: ColoredGraph, k: int, params: PipelineParams, seed: int) -> Tuple[List[int], int]:
    colors_at = _colors_at(g)
    unhit = {c for c in range(g.K) if g.class_index[c]}
    chosen: set = set()
    rounds = params.rounds(k)
    size = params.sample_size(g.n, k)
    shrink = math.exp(-math.sqrt(params.c) / 1120)
    rng = make_rng(seed)
    if size > 0 and g.n > 0:
        for _ in range(rounds):
            if not unhit:
                break
            target = shrink * len(unhit)
            best_sample, best_left = None, None
            for _ in range(max(1, params.retry_cap)):
                sample = {int(v) for v in rng.integers(0, g.n, size=size)}
                left = unhit.difference(*(colors_at[v] for v in sample))
                if best_left is None or len(left) < len(best_left):
                    best_sample, best_left = sample, left
                if len(left) <= target:
                    break
            chosen |= best_sample
            unhit = best_left
    sampled = len(chosen)
    while unhit:
        gain, v = max((len(colors_at[v] & unhit), -v) for v in range(g.n))
        v = -v
        if gain == 0:  # unreachable: every nonempty class has an endpoint
            raise InternalConsistencyError("greedy hitting set stalled")
        chosen.add(v)
        unhit -= colors_at[v]
    return sorted(chosen), sampled


def representative_subgraph(g: ColoredGraph, S: Iterable[int]) -> List[int]:
    """For each nonempty color, its smallest edge id touching ``S``."""
    inS = set(S)
    F = []
    for c in range(g.K):
        if not g.class_index[c]:
            continue
        for e in g.class_index[c]:
            u, v, _ = g.edges[e]
            if u in inS or v in inS:
                F.append(e)
                break
        else:
            raise ColorNotHit(c)
    return F


# contraction step -----------------------------------------------------------

def _contracted_candidates(cg: ContractedGraph) -> List[Tuple[int, CycleCertificate, str]]:
    """(certified bound, contracted cycle, kind) for the best loop, parallel
    pair and shortest simple cycle that exist."""
    out = []
    if cg.loops:
        i = cg.loops[0]
        out.append((3, CycleCertificate((cg.edges[i][0],), (i,)), "loop"))
    if cg.parallel:
        i, j = cg.parallel[0]
        a, b, _ = cg.edges[i]
        out.append((6, CycleCertificate((a, b), (i, j)), "parallel"))
    sg, keep = cg.simple_part()
    cyc = undirected_girth(sg)
    if cyc is not None:
        out.append((3 * cyc.length, CycleCertificate(cyc.vertices, tuple(keep[e] for e in cyc.edge_ids)), "girth"))
    out.sort(key=lambda t: t[0])
    return out


def _cycle_via_contraction(
    g: ColoredGraph, F: Sequence[int], S: Sequence[int], report: PipelineReport, tag: str
) -> Optional[Tuple[CycleCertificate, int]]:
    cg, cm = contract_stars(g, F, S)
    report.sizes.update({
        f"{tag}_S": len(S),
        f"{tag}_F": len(F),
        f"{tag}_H_vertices": len(cm.block_of),
        f"{tag}_contracted_order": cg.n,
        f"{tag}_contracted_size": cg.m,
        f"{tag}_loops": len(cg.loops),
        f"{tag}_parallel_pairs": len(cg.parallel),
    })
    cands = _contracted_candidates(cg)
    if not cands:
        return None
    bound, ccyc, kind = cands[0]
    lifted = lift_cycle(cm, g, ccyc)
    report.diagnostics[f"{tag}_contracted_cycle"] = {"kind": kind, "length": ccyc.length}
    return lifted, bound


# colorful stars -------------------------------------------------------------

@dataclass
class StarCollection:
    stars: List[Tuple[int, Tuple[int, ...]]]
    color_usage: Dict[int, int]
    sigma: float
    gamma: float
    colors_missing: int
    claim1_limit: float
    claim2_limit: float

    @property
    def size(self) -> int:
        return len(self.stars)

    @property
    def centers(self) -> List[int]:
        return [v for v, _ in self.stars]

    @property
    def claim1_holds(self) -> bool:
        return self.colors_missing <= self.claim1_limit

    @property
    def claim2_holds(self) -> bool:
        return self.size < self.claim2_limit

    def diagnostics(self) -> dict:
        return {
            "stars": self.size,
            "colors_missing": self.colors_missing,
            "claim1_limit": self.claim1_limit,
            "claim1_holds": self.claim1_holds,
            "claim2_limit": self.claim2_limit,
            "claim2_holds": self.claim2_holds,
            "sigma": self.sigma,
            "gamma": self.gamma,
        }


def colorful_star_collection(g: ColoredGraph, k: int, params: PipelineParams) -> StarCollection:
    """Greedy maximal collection of colorful stars with pairwise disjoint colors.

    Vertices are scanned in id order; a vertex becomes a center if its edges in
    still-unused colors, at most ``floor(gamma)`` per color, number at least
    ``sigma`` (and at least one). It then takes all of them.
    """
    sigma, gamma = params.sigma(g.n, k), params.gamma(k)
    cap = int(math.floor(gamma))
    used: Dict[int, int] = {}
    stars: List[Tuple[int, Tuple[int, ...]]] = []
    for v in range(g.n):
        by_color: Dict[int, List[int]] = {}
        for _, e in g.adj[v]:
            c = g.edges[e][2]
            if c not in used:
                by_color.setdefault(c, []).append(e)
        picked = [e for c in by_color for e in sorted(by_color[c])[:cap]]
        if picked and len(picked) >= sigma:
            stars.append((v, tuple(sorted(picked))))
            for c in by_color:
                used[c] = min(len(by_color[c]), cap)
    nonempty = sum(1 for c in range(g.K) if g.class_index[c])
    return StarCollection(
        stars=stars,
        color_usage=used,
        sigma=sigma,
        gamma=gamma,
        colors_missing=nonempty - len(used),
        claim1_limit=k / 2,
        claim2_limit=g.n ** 0.2 / 12,
    )


# domination -----------------------------------------------------------------

def dominated_map(g: ColoredGraph, threshold: float) -> Tuple[Dict[int, int], List[int]]:
    """For each color with >= ``threshold`` edges at some vertex, the smallest
    such vertex. Also returns the sorted set of picked vertices."""
    dm: Dict[int, int] = {}
    for c in range(g.K):
        cands = {x for e in g.class_index[c] for x in g.edges[e][:2]}
        for v in sorted(cands):
            if g.incidence(v, c) >= threshold:
                dm[c] = v
                break
    return dm, sorted(set(dm.values()))


@dataclass(frozen=True)
class DominationDigraph:
    digraph: Digraph
    vertices: Tuple[int, ...]       # digraph vertex -> original vertex
    arc_edge: Tuple[int, ...]       # arc index -> original edge id
    arc_color: Tuple[int, ...]


def domination_digraph(g: ColoredGraph, dm: Mapping[int, int]) -> DominationDigraph:
    """Digraph on the dominated vertices with an arc ``v_i -> w`` for each edge
    ``v_i w`` of color ``i`` whose other end is also dominated.

    Two arcs on one vertex pair would need one edge with two colors, so a digon
    signals corrupted input and raises.
    """
    S = sorted(set(dm.values()))
    idx = {v: i for i, v in enumerate(S)}
    arcs: List[Tuple[int, int]] = []
    arc_edge: List[int] = []
    arc_color: List[int] = []
    seen = set()
    for c in sorted(dm):
        vc = dm[c]
        for e in g.class_index[c]:
            u, v, _ = g.edges[e]
            if vc not in (u, v):
                continue
            w = v if u == vc else u
            if w not in idx:
                continue
            a, b = idx[vc], idx[w]
            if (b, a) in seen or (a, b) in seen:
                raise InternalConsistencyError(f"digon between {vc} and {w}")
            seen.add((a, b))
            arcs.append((a, b))
            arc_edge.append(e)
            arc_color.append(c)
    return DominationDigraph(build_digraph(len(S), arcs), tuple(S), tuple(arc_edge), tuple(arc_color))


# random deletion ------------------------------------------------------------

@dataclass(frozen=True)
class DeletionSample:
    T: Tuple[int, ...]
    Y: int
    r: int
    attempts: int


def deletion_sample(
    g: ColoredGraph,
    S: Iterable[int],
    k: int,
    params: PipelineParams,
    seed: int = 0,
    dominating: Optional[Iterable[int]] = None,
) -> DeletionSample:
    """Sample ``T`` from ``H = V \\ S``, each vertex with probability ``4k/r``.

    A draw is accepted when ``2k < |T| < 8k`` and fewer than ``k``
    non-dominating colors keep under ``t/100`` edges avoiding ``T``. Raises
    :class:`SampleFailure` after ``retry_cap`` rejected draws.
    """
    Sset = set(S)
    H = np.array([v for v in range(g.n) if v not in Sset], dtype=np.int64)
    r = len(H)
    num = params.rate_numerator(k)
    if r == 0 or r <= num:
        raise PreconditionError(f"need |H| > {num:g}, got |H| = {r}")
    if dominating is None:
        dominating = dominated_map(g, params.threshold(k))[0].keys()
    dom = set(dominating)
    non_dom = [c for c in range(g.K) if c not in dom and g.class_index[c]]
    lo, hi = params.window(k)
    bad_thr = params.bad(k)
    p = num / r
    eu = np.array([e[0] for e in g.edges], dtype=np.int64)
    ev = np.array([e[1] for e in g.edges], dtype=np.int64)
    rng = make_rng(seed)
    for attempt in range(1, params.retry_cap + 1):
        T = H[rng.random(r) < p]
        if not lo < len(T) < hi:
            continue
        inT = np.zeros(g.n, dtype=bool)
        inT[T] = True
        survives = ~(inT[eu] | inT[ev]) if g.m else np.zeros(0, dtype=bool)
        Y = sum(1 for c in non_dom if int(survives[list(g.class_index[c])].sum()) < bad_thr)
        if Y < k:
            return DeletionSample(tuple(int(x) for x in T), Y, r, attempt)
    raise SampleFailure(f"no acceptable deletion set in {params.retry_cap} draws (seed {seed})")


# pipelines ------------------------------------------------------------------

def _finish(report: PipelineReport, g: ColoredGraph, cert: CycleCertificate, bound: int) -> PipelineReport:
    if not verify_rainbow_cycle(g, cert) or cert.length > bound:
        raise InternalConsistencyError(f"bad certificate {cert} (bound {bound})")
    report.certificate = cert
    report.bound = int(bound)
    report.status = "ok"
    return report


def _fail(report: PipelineReport, exc_type, reason: str):
    report.status = exc_type.status
    report.reason = reason
    return exc_type(reason, report)


def pipeline_n_plus_k(
    g: ColoredGraph, k: int, params: Optional[PipelineParams] = None, seed: int = 0, strict: bool = True
) -> PipelineReport:
    """Certified rainbow cycle for a graph with ``n + k`` color classes.

    With ``strict`` the instance must have exactly ``n + k`` classes of size
    ``params.required_class_size(k)``; otherwise the hypotheses are only
    recorded. Raises :class:`NoCycleFound` (carrying the report) when the
    contracted graph is a forest.
    """
    params = params if params is not None else PipelineParams(c=C_N_PLUS_K)
    report = PipelineReport("n_plus_k", g.n, k, g.K, seed, params.resolve(g.n, k))
    class_ok = validate_classes(g, params.required_class_size(k), g.K)
    report.hypotheses = {"class_size": class_ok, "color_count": g.K >= g.n + k, "k_gt_1": k > 1}
    if strict and not (class_ok and g.K == g.n + k and k > 1):
        raise PreconditionError(
            f"need k > 1 and exactly n + k = {g.n + k} classes of size >= "
            f"{params.required_class_size(k)}; got K = {g.K}, sizes {min(g.class_sizes(), default=0)}+"
        )

    large_n = 28 * k * math.log2(k) <= g.n if k >= 1 else True
    report.branch = "res_one" if large_n else "res_two"
    found = None
    if not large_n:
        coll = colorful_star_collection(g, k, params)
        report.diagnostics["stars"] = coll.diagnostics()
        if coll.stars:
            F, seen = [], set()
            for _, eids in coll.stars:
                for e in eids:
                    c = g.edges[e][2]
                    if c not in seen:
                        seen.add(c)
                        F.append(e)
            found = _cycle_via_contraction(g, F, coll.centers, report, "stars")
        if found is None:
            report.branch = "res_two+res_one"
    if found is None:
        S, sampled = _hitting_set(g, k, params, derive_seed(seed, 1))
        report.sizes["hitting_sampled"] = sampled
        F = representative_subgraph(g, S)
        found = _cycle_via_contraction(g, F, S, report, "hitting")
    if found is None:
        raise _fail(report, NoCycleFound, "contracted representative subgraph is a forest")
    return _finish(report, g, *found)


def _one_edge_per_color_cycle(g: ColoredGraph) -> Optional[CycleCertificate]:
    F = [cls[0] for cls in g.class_index if cls]
    cyc = undirected_girth((g.n, [g.edges[e][:2] for e in F]))
    if cyc is None:
        return None
    return CycleCertificate(cyc.vertices, tuple(F[i] for i in cyc.edge_ids), rainbow=True)


def pipeline_main(
    g: ColoredGraph, k: int, params: Optional[PipelineParams] = None, seed: int = 0, strict: bool = True
) -> PipelineReport:
    """Certified rainbow cycle for a graph with ``n`` color classes.

    Branches: ``k1`` (one edge per color), ``A`` (few undominated vertices,
    shortest directed cycle of the domination digraph) and ``B`` (random
    deletion followed by :func:`pipeline_n_plus_k` with ``c/100``).
    """
    params = params if params is not None else PipelineParams(c=C_MAIN)
    if k < 1:
        raise PreconditionError("k must be >= 1")
    report = PipelineReport("main", g.n, k, g.K, seed, params.resolve(g.n, k))
    class_ok = validate_classes(g, params.required_class_size(k), g.n)
    report.hypotheses = {"class_size": class_ok, "color_count": g.K == g.n}
    if strict and not class_ok:
        raise PreconditionError(
            f"need exactly n = {g.n} classes of size >= {params.required_class_size(k)}; got K = {g.K}"
        )

    if k == 1:
        report.branch = "k1"
        cert = _one_edge_per_color_cycle(g)
        if cert is None:
            raise _fail(report, NoCycleFound, "one-edge-per-color subgraph is a forest")
        return _finish(report, g, cert, max(g.n, cert.length))

    dm, S = dominated_map(g, params.threshold(k))
    H = g.n - len(S)
    report.sizes.update({"dominating_colors": len(dm), "S": len(S), "H": H})
    if H <= params.bad(k):
        report.branch = "A"
        dd = domination_digraph(g, dm)
        d = dd.digraph
        report.sizes.update({"digraph_arcs": len(d.arcs), "digraph_min_outdegree": d.min_outdegree()})
        report.hypotheses["outdegree_8k"] = d.n > 0 and d.min_outdegree() >= 8 * k
        cyc = directed_girth(d)
        if cyc is None:
            raise _fail(report, NoCycleFound, "domination digraph is acyclic")
        cert = CycleCertificate(
            tuple(dd.vertices[v] for v in cyc.vertices), tuple(dd.arc_edge[a] for a in cyc.edge_ids), rainbow=True
        )
        report.diagnostics["directed_girth"] = cyc.length
        return _finish(report, g, cert, cyc.length)

    report.branch = "B"
    try:
        ds = deletion_sample(g, S, k, params, derive_seed(seed, 2), dominating=dm.keys())
    except (SampleFailure, PreconditionError) as exc:
        raise _fail(report, SampleFailure, str(exc)) from None
    report.sizes.update({"r": ds.r, "T": len(ds.T), "Y": ds.Y, "draws": ds.attempts})
    x = (ds.r - params.rate_numerator(k)) / ds.r
    report.diagnostics.update({"x": x, "lambda": params.t(k) * (x * x - 0.01)})

    inT = set(ds.T)
    bad_thr = params.bad(k)
    survive = [0] * g.K
    for e, (u, v, c) in enumerate(g.edges):
        if u not in inT and v not in inT:
            survive[c] += 1
    good = [c for c in range(g.K) if survive[c] >= bad_thr and survive[c] > 0]
    retained = all(survive[c] >= bad_thr for c in dm)
    # guaranteed when the domination threshold leaves room for |T| deletions
    if params.threshold(k) >= bad_thr + params.window(k)[1] and not retained:
        raise InternalConsistencyError("a dominating color lost too many edges")
    report.diagnostics["dominating_retained"] = retained
    keep = [v for v in range(g.n) if v not in inT]
    sub, vmap, _, emap = induced_subgraph(g, keep, good)
    report.sizes.update({"G_prime_vertices": sub.n, "G_prime_colors": sub.K})
    report.hypotheses["reduced_color_surplus"] = sub.K >= sub.n + k

    inner_params = replace(params, c=params.c / 100, class_size=max(1, math.ceil(bad_thr)))
    try:
        inner = pipeline_n_plus_k(sub, k, inner_params, derive_seed(seed, 3), strict=False)
    except NoCycleFound as exc:
        report.diagnostics["inner"] = exc.report.to_dict() if exc.report else None
        raise _fail(report, NoCycleFound, f"reduced instance: {exc}") from None
    report.diagnostics["inner"] = inner.to_dict()
    ic = inner.certificate
    cert = CycleCertificate(tuple(vmap[v] for v in ic.vertices), tuple(emap[e] for e in ic.edge_ids), rainbow=True)
    return _finish(report, g, cert, inner.bound)
