"""Closed-form bounds, the scalar inequalities, and a variance claim that
only holds on part of its stated range.
"""

from rainbowcycles.bounds import bound_table, check_scalar_lemmas, chernoff_tails, variance_bound_check

for n, k in [(100, 10), (1000, 4), (10**6, 1000)]:
    bt = bound_table(n, k)
    print(f"n={n} k={k}: ceil(n/k)={bt.aharoni} shen={bt.shen} "
          f"bs={bt.bs_exact:.1f} res_one={bt.res_one:.1f}")

rep = check_scalar_lemmas(2, 2**20)
for l in rep.lemmas:
    print(f"{l.statement:<48} {'holds' if l.passed else 'fails at ' + str(l.first_failure)}")

lo, hi = chernoff_tails(8.0, 0.5)
print(f"\nChernoff tails for mean 8, eps 1/2: lower {lo:.4f}, upper {hi:.4f}")

# The variance inequality is claimed on all of [1 - 400/c, 1). Sampling shows
# it holds for y >= (r - 4k)/r but fails below that once r is much larger than t/100.
print("\nvariance claim, c = 1e9")
for k, r in [(5, 5e7 + 1), (5, 1e10), (5, 5e10)]:
    v = variance_bound_check(k, r, c=1e9)
    print(f"  k={k} r={r:.3g}: max ratio {v.max_ratio:8.3f} at y={v.argmax_y:.8f}; "
          f"max ratio for y >= x {v.max_ratio_from_x:.3f}")
