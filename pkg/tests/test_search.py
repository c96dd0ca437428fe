import itertools

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from rainbowcycles.errors import BudgetExceeded, TooLarge
from rainbowcycles.generators import gen_circulant_digraph, gen_random_colored
from rainbowcycles.graph import CycleCertificate, build_colored_graph, build_digraph
from rainbowcycles.search import (
    SearchLimits,
    brute_force_rainbow_girth,
    directed_girth,
    rainbow_girth_exact,
    undirected_girth,
    verify_cycle,
    verify_directed_cycle,
    verify_rainbow_cycle,
)

from conftest import permutation_rainbow_girth


def cycle_edges(n):
    return [(i, (i + 1) % n) for i in range(n)]


def test_girth_five_cycle():
    cert = undirected_girth((5, cycle_edges(5)))
    assert cert.length == 5


def test_girth_tree_is_none():
    assert undirected_girth((5, [(0, 1), (1, 2), (1, 3), (3, 4)])) is None


def test_petersen_girth():
    pg = nx.petersen_graph()
    g = build_colored_graph(10, [(u, v, 0) for u, v in pg.edges()])
    cert = undirected_girth(g)
    assert cert.length == 5 and verify_cycle(g, cert)


@settings(max_examples=80, deadline=None)
@given(n=st.integers(3, 14), p=st.floats(0.1, 0.8), seed=st.integers(0, 10**6))
def test_girth_matches_networkx(n, p, seed):
    G = nx.gnp_random_graph(n, p, seed=seed)
    g = build_colored_graph(n, [(u, v, 0) for u, v in G.edges()])
    ours = undirected_girth(g)
    theirs = nx.girth(G)
    assert (ours.length if ours else float("inf")) == theirs
    if ours:
        assert verify_cycle(g, ours)


def test_directed_triangle():
    d = build_digraph(3, [(0, 1), (1, 2), (2, 0)])
    cert = directed_girth(d)
    assert cert.length == 3 and verify_directed_cycle(d, cert)


def test_circulant_nine():
    assert directed_girth(gen_circulant_digraph(9, [1, 2])).length == 5


def test_dag_has_no_cycle():
    assert directed_girth(build_digraph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])) is None


@pytest.mark.parametrize("n", range(3, 61))
def test_circulant_girth_is_ceiling(n):
    for k in range(1, n // 3 + 1):
        cert = directed_girth(gen_circulant_digraph(n, range(1, k + 1)))
        assert cert.length == -(-n // k), (n, k)


def test_rainbow_triangle(triangle):
    cert = rainbow_girth_exact(triangle)
    assert cert.length == 3 and verify_rainbow_cycle(triangle, cert)


def test_k4_distinct_colors():
    g = build_colored_graph(4, [(u, v, i) for i, (u, v) in enumerate(itertools.combinations(range(4), 2))])
    assert rainbow_girth_exact(g).length == 3


def test_alternating_four_cycle_is_not_rainbow():
    g = build_colored_graph(4, [(0, 1, 0), (1, 2, 1), (2, 3, 0), (3, 0, 1)])
    assert rainbow_girth_exact(g) is None
    assert brute_force_rainbow_girth(g) is None


def test_monochromatic_triangle_skipped_for_longer_rainbow():
    # triangle 0-1-2 has two edges of color 0; the 4-cycle 0-2-3-4 is rainbow
    g = build_colored_graph(5, [(0, 1, 0), (1, 2, 0), (0, 2, 1), (2, 3, 2), (3, 4, 3), (4, 0, 4)])
    assert rainbow_girth_exact(g).length == 4
    assert brute_force_rainbow_girth(g) == 4


def test_max_len_cap():
    g = build_colored_graph(6, [(u, v, i) for i, (u, v) in enumerate(cycle_edges(6))])
    assert rainbow_girth_exact(g, SearchLimits(max_len=5)) is None
    assert rainbow_girth_exact(g, SearchLimits(max_len=6)).length == 6
    assert brute_force_rainbow_girth(g, max_len=5) is None


def test_budget_exceeded():
    g = gen_random_colored(12, 6, 2, seed=3)
    with pytest.raises(BudgetExceeded) as exc:
        rainbow_girth_exact(g, SearchLimits(max_len=12, node_budget=1))
    assert exc.value.best is None and exc.value.lower_bound >= 3


def test_brute_force_size_limit():
    with pytest.raises(TooLarge):
        brute_force_rainbow_girth(build_colored_graph(13, []))


def test_verify_rejects_bad_certificates(triangle):
    assert not verify_rainbow_cycle(triangle, CycleCertificate((0, 1, 2), (0, 0, 2)))
    assert not verify_rainbow_cycle(triangle, CycleCertificate((0, 2, 1), (0, 1, 2)))


@settings(max_examples=150, deadline=None)
@given(n=st.integers(3, 8), K=st.integers(1, 8), k=st.integers(1, 3), seed=st.integers(0, 10**6))
def test_three_oracles_agree(n, K, k, seed):
    if K * k > n * (n - 1) // 2:
        return
    g = gen_random_colored(n, K, k, seed)
    exact = rainbow_girth_exact(g, SearchLimits(max_len=n))
    brute = brute_force_rainbow_girth(g)
    assert (exact.length if exact else None) == brute == permutation_rainbow_girth(g)
    if exact:
        assert verify_rainbow_cycle(g, exact)


@settings(max_examples=60, deadline=None)
@given(n=st.integers(4, 9), K=st.integers(2, 6), seed=st.integers(0, 10**6), split=st.data())
def test_refining_colors_never_lengthens(n, K, seed, split):
    if 2 * K > n * (n - 1) // 2:
        return
    g = gen_random_colored(n, K, 2, seed)
    # give one edge of one class a fresh color
    i = split.draw(st.integers(0, g.m - 1))
    edges = list(g.edges)
    u, v, _ = edges[i]
    edges[i] = (u, v, g.K)
    finer = build_colored_graph(n, edges)
    a, b = brute_force_rainbow_girth(g), brute_force_rainbow_girth(finer)
    assert a is None or (b is not None and b <= a)
