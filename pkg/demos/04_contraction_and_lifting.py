"""Contract stars, find a short cycle in the quotient, lift it back.

Each block is a center plus the leaves attached to it. After contraction a
cycle of length L passes through at most L blocks. Crossing a block costs at
most two star edges, so the lifted cycle has length at most 3L. Loops
(L = 1) and parallel pairs (L = 2) count too. They lift to rainbow cycles of
length at most 3 and 6.
"""

from rainbowcycles.contraction import contract_stars, lift_cycle
from rainbowcycles.graph import CycleCertificate, build_colored_graph
from rainbowcycles.search import verify_rainbow_cycle

# Two stars, centers 0 and 1, with leaves {2,3} and {4,5}, joined by 2-4 and 3-5.
edges = [(0, 2), (0, 3), (1, 4), (1, 5), (2, 4), (3, 5)]
g = build_colored_graph(6, [(u, v, i) for i, (u, v) in enumerate(edges)])
cg, cm = contract_stars(g, range(g.m), centers=[0, 1])
print("contracted:", cg.n, "blocks,", cg.m, "edges, parallel pairs", cg.parallel)

i, j = cg.parallel[0]
lifted = lift_cycle(cm, g, CycleCertificate((0, 1), (i, j)))
print("lifted 2-cycle ->", lifted.vertices, "length", lifted.length,
      "rainbow" if verify_rainbow_cycle(g, lifted) else "NOT rainbow")

# A triangle inside one block becomes a loop.
tri = build_colored_graph(3, [(0, 1, 0), (0, 2, 1), (1, 2, 2)])
cg, cm = contract_stars(tri, range(3), centers=[0])
print("\ntriangle in one star: loops", cg.loops, "->",
      lift_cycle(cm, tri, CycleCertificate((0,), (cg.loops[0],))).vertices)
