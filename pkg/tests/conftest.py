import itertools

import pytest

from rainbowcycles.graph import build_colored_graph


def rainbow_triangle():
    return build_colored_graph(3, [(0, 1, 0), (1, 2, 1), (2, 0, 2)])


def permutation_rainbow_girth(g):
    """Slow third oracle: try every vertex sequence up to rotation."""
    best = None
    for L in range(3, g.n + 1):
        for subset in itertools.combinations(range(g.n), L):
            first, rest = subset[0], subset[1:]
            for perm in itertools.permutations(rest):
                cyc = (first,) + perm
                eids = [g.edge_between(cyc[i], cyc[(i + 1) % L]) for i in range(L)]
                if None in eids:
                    continue
                if len({g.edges[e][2] for e in eids}) == L:
                    return L
    return best


@pytest.fixture
def triangle():
    return rainbow_triangle()
