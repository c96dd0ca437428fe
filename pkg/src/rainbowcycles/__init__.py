"""Short rainbow cycles in edge-colored graphs.

Exact cycle searches in colored graphs and in digraphs come with
closed-form bounds and seeded instance generators. Certifying pipelines extract short
rainbow cycles through hitting sets, star contraction, color domination and
random vertex deletion.
"""

from .bounds import (
    BoundTable,
    bound_table,
    check_scalar_lemmas,
    chernoff_tails,
    variance_bound_check,
)
from .contraction import ContractedGraph, ContractionMap, contract_stars, lift_cycle
from .generators import (
    GenSpec,
    gen_circulant_digraph,
    gen_random_colored,
    gen_random_min_outdeg,
    gen_star_colored,
    generate,
)
from .graph import (
    ColoredGraph,
    CycleCertificate,
    Digraph,
    build_colored_graph,
    build_digraph,
    from_digraph,
    validate_classes,
)
from .harness import CampaignConfig, run_campaign
from .reductions import (
    PipelineParams,
    PipelineReport,
    StarCollection,
    colorful_star_collection,
    deletion_sample,
    dominated_map,
    domination_digraph,
    find_color_hitting_set,
    pipeline_main,
    pipeline_n_plus_k,
    representative_subgraph,
)
from .search import (
    SearchLimits,
    brute_force_rainbow_girth,
    directed_girth,
    rainbow_girth_exact,
    undirected_girth,
    verify_rainbow_cycle,
)

__version__ = "0.1.0"
