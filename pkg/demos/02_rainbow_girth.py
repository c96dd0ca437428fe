"""Exact rainbow girth and the brute-force oracle that checks it.

A digraph turns into an edge-colored graph by coloring each arc with its
tail vertex. Directed cycles become rainbow cycles this way. The rainbow
version of the conjecture says n color classes of size k force a rainbow
cycle of length at most ceil(n/k).

`rainbow_girth_exact` is a depth-first search over simple paths. Used
colors live in an integer bitmask. It deepens the target length one step
at a time and prunes branches by BFS distance back to the start.
`brute_force_rainbow_girth` lists every cycle and checks its colors
afterwards. It is slow but trivially correct.
"""

from rainbowcycles.generators import gen_circulant_digraph, gen_random_colored
from rainbowcycles.graph import build_colored_graph, from_digraph
from rainbowcycles.search import SearchLimits, brute_force_rainbow_girth, rainbow_girth_exact

# Two colors alternating around a 4-cycle: a cycle, but never a rainbow one.
alt = build_colored_graph(4, [(0, 1, 0), (1, 2, 1), (2, 3, 0), (3, 0, 1)])
print("alternating 4-cycle:", rainbow_girth_exact(alt))

g = from_digraph(gen_circulant_digraph(12, [1, 2, 3]))
cert = rainbow_girth_exact(g)
print("star-colored circulant(12,{1,2,3}):", cert.length, "vertices", cert.vertices)

print("\nexact search vs brute force on random instances (n=10, K=10, k=2)")
for seed in range(6):
    g = gen_random_colored(10, 10, 2, seed)
    fast = rainbow_girth_exact(g, SearchLimits(max_len=10))
    print(f"  seed {seed}: exact {fast.length if fast else None}, brute {brute_force_rainbow_girth(g)}")
