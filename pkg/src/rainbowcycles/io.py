"""Plain-text graph formats.

Colored graph::

    ecg 1
    n <n> m <m> K <K>
    e <u> <v> <c>      (m lines)

Digraph::

    dg 1
    n <n> m <m>
    a <u> <v>          (m lines)

Lines starting with ``#`` are comments. Ids are 0-based decimal.
"""

from __future__ import annotations

from pathlib import Path
from typing import List, Tuple, Union

from .errors import FormatError
from .graph import ColoredGraph, Digraph, build_colored_graph, build_digraph

AnyGraph = Union[ColoredGraph, Digraph]


def dumps_colored(g: ColoredGraph) -> str:
    lines = ["ecg 1", f"n {g.n} m {g.m} K {g.K}"]
    lines += [f"e {u} {v} {c}" for u, v, c in g.edges]
    return "\n".join(lines) + "\n"


def dumps_digraph(d: Digraph) -> str:
    lines = ["dg 1", f"n {d.n} m {len(d.arcs)}"]
    lines += [f"a {u} {v}" for u, v in d.arcs]
    return "\n".join(lines) + "\n"


def dumps(g: AnyGraph) -> str:
    if isinstance(g, ColoredGraph):
        return dumps_colored(g)
    return dumps_digraph(g)


def _tokens(text: str) -> List[Tuple[int, List[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((lineno, line.split()))
    return out


def _header_ints(parts: List[str], keys: Tuple[str, ...], lineno: int) -> List[int]:
    if len(parts) != 2 * len(keys) or tuple(parts[0::2]) != keys:
        raise FormatError(f"line {lineno}: expected header {' '.join(k + ' <int>' for k in keys)}")
    try:
        return [int(x) for x in parts[1::2]]
    except ValueError as exc:
        raise FormatError(f"line {lineno}: {exc}") from None


def _body(rows, tag: str, arity: int, m: int) -> List[List[int]]:
    body = []
    for lineno, parts in rows:
        if parts[0] != tag or len(parts) != arity + 1:
            raise FormatError(f"line {lineno}: expected '{tag}' followed by {arity} ids")
        try:
            body.append([int(x) for x in parts[1:]])
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
    if len(body) != m:
        raise FormatError(f"header announces m={m} but found {len(body)} lines")
    return body


def loads(text: str) -> AnyGraph:
    """Parse either format, dispatching on the magic line."""
    rows = _tokens(text)
    if len(rows) < 2:
        raise FormatError("missing magic line or header")
    magic = rows[0][1]
    if magic == ["ecg", "1"]:
        n, m, K = _header_ints(rows[1][1], ("n", "m", "K"), rows[1][0])
        g = build_colored_graph(n, _body(rows[2:], "e", 3, m))
        if g.K != K:
            raise FormatError(f"header says K={K} but colors span 0..{g.K - 1}")
        return g
    if magic == ["dg", "1"]:
        n, m = _header_ints(rows[1][1], ("n", "m"), rows[1][0])
        return build_digraph(n, _body(rows[2:], "a", 2, m))
    raise FormatError(f"unknown magic line {' '.join(magic)!r}")


def load(path: Union[str, Path]) -> AnyGraph:
    return loads(Path(path).read_text(encoding="utf-8"))


def save(g: AnyGraph, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(g), encoding="utf-8")
