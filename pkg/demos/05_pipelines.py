"""The two certifying pipelines at desk-scale constants.

The thresholds are derived from a constant c. At the theoretical values
(1e9, 1e11) no graph that fits in memory satisfies the hypotheses.
`PipelineParams(c=...)` applies the same formulas with a small c. Every run
returns either a verified rainbow cycle with a per-run bound or a typed
failure that carries the full report.
"""

from rainbowcycles.errors import PipelineFailure
from rainbowcycles.generators import GenSpec, gen_random_colored, generate
from rainbowcycles.reductions import PipelineParams, pipeline_main, pipeline_n_plus_k


def show(title, run):
    try:
        rep = run()
    except PipelineFailure as exc:
        rep = exc.report
    c = rep.certificate
    print(f"{title}\n  branch {rep.branch}, status {rep.status}, "
          f"length {c.length if c else '-'}, bound {rep.bound}, reason {rep.reason or '-'}")


# n + k colors: hitting set, representative edges, contraction.
g = gen_random_colored(30, 34, 3, seed=1)
show("n+k pipeline on 30 vertices, 34 classes of 3", lambda: pipeline_n_plus_k(g, 4, PipelineParams(c=1.0), seed=0, strict=False))

# Main pipeline, branch A: every vertex dominates its own color, so the
# domination digraph is the original circulant.
g = generate(GenSpec("star_circulant", 30, 3))
p = PipelineParams(c=1.0, domination_threshold=3, bad_threshold=0)
show("main pipeline, branch A on star_circulant(30, 3)", lambda: pipeline_main(g, 3, p, strict=False))

# Branch B: no color dominates, so delete a random set and recurse.
g = gen_random_colored(40, 40, 6, seed=0)
show("main pipeline, branch B on 40 classes of 6", lambda: pipeline_main(g, 2, PipelineParams(c=1.0), seed=0, strict=False))

# A forest has no cycle; the failure is typed, not a crash.
g = gen_random_colored(12, 5, 1, seed=0)
show("forest-like instance", lambda: pipeline_main(g, 1, PipelineParams(c=1.0), strict=False))
