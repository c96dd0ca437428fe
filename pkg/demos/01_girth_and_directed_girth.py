"""Girth of undirected graphs and directed girth of digraphs.

Plain girth is the warm-up: BFS from every vertex of the 2-core. Directed
girth is what the circulant digraphs are about. With steps 1..k the shortest
directed cycle of circulant(n) has length ceil(n/k), which is exactly the
value the minimum out-degree conjecture predicts. That makes these graphs
the standard tight examples.
"""

from rainbowcycles.generators import gen_circulant_digraph, gen_random_min_outdeg
from rainbowcycles.search import directed_girth, undirected_girth

# A 7-cycle with a chord 0-3 has girth 4.
cert = undirected_girth((7, [(i, (i + 1) % 7) for i in range(7)] + [(0, 3)]))
print("7-cycle plus chord: girth", cert.length, "via", cert.vertices)

print("\ncirculant(n, {1..k}): directed girth vs ceil(n/k)")
for n, k in [(9, 2), (20, 3), (31, 4), (50, 7)]:
    g = directed_girth(gen_circulant_digraph(n, range(1, k + 1)))
    print(f"  n={n:>2} k={k}: {g.length:>2}  (ceil = {-(-n // k)})")

# Random digraphs with out-degree k usually sit well below the extremal value.
print("\nrandom digraphs with out-degree exactly 3 on 60 vertices")
for seed in range(5):
    d = gen_random_min_outdeg(60, 3, seed)
    print(f"  seed {seed}: directed girth {directed_girth(d).length} (extremal value 20)")
