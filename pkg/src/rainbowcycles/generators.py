"""Seeded instance families.

All randomness comes from ``numpy.random.default_rng(seed)`` (PCG64), so the
same seed always reproduces the same instance.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Iterable, List, Optional, Tuple, Union

import numpy as np

from .errors import DigonRisk, GeneratorError, InfeasibleDegree, TooDense
from .graph import ColoredGraph, Digraph, build_colored_graph, build_digraph, from_digraph

FAMILIES = (
    "circulant",          # Digraph, arcs v -> v+s
    "random_min_outdeg",  # Digraph, exactly k out-neighbors each
    "random_colored",     # ColoredGraph, K classes of exactly k edges
    "star_circulant",     # ColoredGraph from circulant(n, steps or 1..k)
    "star_random",        # ColoredGraph from random_min_outdeg(n, k)
    "random_simple",      # ColoredGraph, n + k edges all of color 0
)


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int
    k: int = 1
    K: Optional[int] = None
    seed: int = 0
    steps: Optional[Tuple[int, ...]] = None

    def to_dict(self) -> dict:
        d = asdict(self)
        if self.steps is not None:
            d["steps"] = list(self.steps)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "GenSpec":
        d = dict(d)
        if d.get("steps") is not None:
            d["steps"] = tuple(int(s) for s in d["steps"])
        unknown = set(d) - set(cls.__dataclass_fields__)
        if unknown:
            raise GeneratorError(f"unknown GenSpec fields {sorted(unknown)}")
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> "GenSpec":
        return cls.from_dict(json.loads(text))


def gen_circulant_digraph(n: int, steps: Iterable[int]) -> Digraph:
    steps = sorted(set(int(s) for s in steps))
    for s in steps:
        if not 1 <= s <= n - 1:
            raise GeneratorError(f"step {s} outside [1, {n - 1}]")
        if n - s in steps:
            raise DigonRisk(min(s, n - s), n)
    return build_digraph(n, [(v, (v + s) % n) for v in range(n) for s in steps])


def gen_random_min_outdeg(n: int, k: int, seed: int = 0, attempts: int = 100) -> Digraph:
    """Each vertex gets exactly ``k`` out-neighbors, no loops or digons.

    Vertices pick their out-neighbors in random order among the vertices that
    do not already point at them. If ``attempts`` rounds all dead-end, a
    circulant ``v -> v+1..v+k`` on a random relabeling is returned instead.
    """
    if k < 0 or 2 * k > n - 1:
        raise InfeasibleDegree(f"out-degree {k} needs n >= {2 * k + 1}, got n={n}")
    rng = np.random.default_rng(seed)
    for _ in range(attempts):
        out: List[set] = [set() for _ in range(n)]
        ok = True
        for v in rng.permutation(n):
            v = int(v)
            cand = [w for w in range(n) if w != v and v not in out[w]]
            if len(cand) < k:
                ok = False
                break
            out[v] = {int(w) for w in rng.choice(cand, size=k, replace=False)}
        if ok:
            return build_digraph(n, [(v, w) for v in range(n) for w in sorted(out[v])])
    perm = [int(x) for x in rng.permutation(n)]
    return build_digraph(n, [(perm[v], perm[(v + s) % n]) for v in range(n) for s in range(1, k + 1)])


def _random_pairs(n: int, m: int, rng: np.random.Generator) -> List[Tuple[int, int]]:
    total = n * (n - 1) // 2
    idx = rng.choice(total, size=m, replace=False)
    # decode the rank of pair (u, v), u < v, in row-major order
    out = []
    for x in idx:
        x = int(x)
        u = 0
        while x >= n - 1 - u:
            x -= n - 1 - u
            u += 1
        out.append((u, u + 1 + x))
    return out


def gen_random_colored(n: int, K: int, k: int, seed: int = 0) -> ColoredGraph:
    """``K`` color classes of exactly ``k`` edges on uniformly random pairs."""
    if K * k > n * (n - 1) // 2:
        raise TooDense(f"{K}*{k} edges do not fit in a simple graph on {n} vertices")
    rng = np.random.default_rng(seed)
    pairs = _random_pairs(n, K * k, rng)
    return build_colored_graph(n, [(u, v, i // k) for i, (u, v) in enumerate(pairs)])


def gen_random_simple(n: int, m: int, seed: int = 0) -> List[Tuple[int, int]]:
    if m > n * (n - 1) // 2:
        raise TooDense(f"{m} edges do not fit in a simple graph on {n} vertices")
    return sorted(_random_pairs(n, m, np.random.default_rng(seed)))


def gen_star_colored(d: Digraph) -> ColoredGraph:
    return from_digraph(d)


def generate(spec: GenSpec) -> Union[ColoredGraph, Digraph]:
    f = spec.family
    if f == "circulant":
        return gen_circulant_digraph(spec.n, spec.steps or range(1, spec.k + 1))
    if f == "random_min_outdeg":
        return gen_random_min_outdeg(spec.n, spec.k, spec.seed)
    if f == "random_colored":
        return gen_random_colored(spec.n, spec.K if spec.K is not None else spec.n, spec.k, spec.seed)
    if f == "star_circulant":
        return gen_star_colored(gen_circulant_digraph(spec.n, spec.steps or range(1, spec.k + 1)))
    if f == "star_random":
        return gen_star_colored(gen_random_min_outdeg(spec.n, spec.k, spec.seed))
    if f == "random_simple":
        return build_colored_graph(spec.n, [(u, v, 0) for u, v in gen_random_simple(spec.n, spec.n + spec.k, spec.seed)])
    raise GeneratorError(f"unknown family {f!r}; expected one of {FAMILIES}")
