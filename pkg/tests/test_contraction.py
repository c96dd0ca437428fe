import pytest

from rainbowcycles.contraction import assign_to_centers, contract_stars, lift_cycle
from rainbowcycles.errors import LiftFailure, NonAdjacentAssignment, UnassignedVertex
from rainbowcycles.graph import CycleCertificate, build_colored_graph
from rainbowcycles.search import SearchLimits, rainbow_girth_exact, verify_rainbow_cycle


def distinct(n, pairs):
    return build_colored_graph(n, [(u, v, i) for i, (u, v) in enumerate(pairs)])


def test_two_stars_one_edge():
    # stars 0:{2,3} and 1:{4,5}, bridged by 2-4
    g = distinct(6, [(0, 2), (0, 3), (1, 4), (1, 5), (2, 4)])
    cg, cm = contract_stars(g, range(g.m), [0, 1])
    assert cg.n == 2 and cg.m == 1 and cg.is_simple
    assert cg.edges[0][:2] == (0, 1)
    assert cm.preimage == (4,)
    assert cm.block_sizes() == [3, 3]


def test_loop_inside_one_star():
    g = distinct(3, [(0, 1), (0, 2), (1, 2)])
    cg, cm = contract_stars(g, range(3), [0])
    assert cg.loops == (0,) and cg.n == 1
    lifted = lift_cycle(cm, g, CycleCertificate((0,), (0,)))
    assert lifted.length == 3 and verify_rainbow_cycle(g, lifted)


def test_parallel_pair_lifts_to_at_most_six():
    g = distinct(6, [(0, 2), (0, 3), (1, 4), (1, 5), (2, 4), (3, 5)])
    cg, cm = contract_stars(g, range(g.m), [0, 1])
    assert cg.parallel == ((0, 1),)
    lifted = lift_cycle(cm, g, CycleCertificate((0, 1), (0, 1)))
    assert lifted.length == 6 and verify_rainbow_cycle(g, lifted)


def test_parallel_pair_through_center_is_shorter():
    # the second parallel edge ends at a center, so one star step is skipped
    g = distinct(5, [(0, 2), (1, 3), (1, 4), (2, 3), (0, 4)])
    cg, cm = contract_stars(g, range(g.m), [0, 1])
    assert len(cg.parallel) == 1
    i, j = cg.parallel[0]
    lifted = lift_cycle(cm, g, CycleCertificate((0, 1), (i, j)))
    assert lifted.length == 5 and verify_rainbow_cycle(g, lifted)


def test_identity_contraction_lifts_triangle_unchanged():
    g = distinct(3, [(0, 1), (1, 2), (2, 0)])
    cg, cm = contract_stars(g, range(3), [0, 1, 2])
    assert cg.n == 3 and cg.m == 3
    cert = rainbow_girth_exact(cg.simple_part()[0])
    lifted = lift_cycle(cm, g, cert)
    assert lifted.length == 3 and set(lifted.edge_ids) == {0, 1, 2}


def test_four_cycle_with_one_big_block():
    # blocks: 0 with leaves 4,5; 1; 2; 3. Contracted 4-cycle 0-1-2-3
    g = distinct(6, [(0, 4), (0, 5), (4, 1), (1, 2), (2, 3), (3, 5)])
    cg, cm = contract_stars(g, range(g.m), [0, 1, 2, 3])
    sg, keep = cg.simple_part()
    cert = rainbow_girth_exact(sg, SearchLimits(max_len=4))
    assert cert.length == 4
    lifted = lift_cycle(cm, g, CycleCertificate(cert.vertices, tuple(keep[e] for e in cert.edge_ids)))
    assert lifted.length == 6 <= 12 and verify_rainbow_cycle(g, lifted)


def test_assignment_prefers_smallest_center():
    g = distinct(3, [(2, 1), (2, 0), (0, 1)])
    assert assign_to_centers(g, [0, 1], [0, 1]) == {2: 0}


def test_unassigned_and_nonadjacent():
    g = distinct(4, [(0, 1), (2, 3)])
    with pytest.raises(UnassignedVertex):
        contract_stars(g, [0, 1], [0])
    with pytest.raises(NonAdjacentAssignment):
        contract_stars(g, [0, 1], [0, 2], assignment={1: 2, 3: 2})


def test_lift_rejects_repeated_color():
    # star edges share a color with the loop edge, so no rainbow lift exists
    g = build_colored_graph(3, [(0, 1, 0), (0, 2, 1), (1, 2, 0)])
    cg, cm = contract_stars(g, range(3), [0])
    with pytest.raises(LiftFailure):
        lift_cycle(cm, g, CycleCertificate((0,), (0,)))
