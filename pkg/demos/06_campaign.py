"""A small verification campaign, written as JSONL.

The same campaign can be run from the command line by saving the config as
JSON and calling ``rainbowcycles verify --config cfg.json --out results.jsonl``.
"""

import json
import tempfile
from pathlib import Path

from rainbowcycles.harness import CampaignConfig, run_campaign

cfg = CampaignConfig.from_dict({
    "generators": [
        {"family": "star_random", "n": [8, 10, 12], "k": [2, 3], "seeds": [0, 10]},
        {"family": "random_simple", "n": 100, "k": [5, 20], "seeds": [0, 10]},
        {"family": "circulant", "n": [20, 21, 22], "k": [3, 4]},
    ],
    "checks": ["conjecture", "pipeline", "bound_dominance"],
    "scale": {"c": 1.0},
    "seed": 7,
})

out = Path(tempfile.mkdtemp()) / "campaign.jsonl"
summary = run_campaign(cfg, out)
print(json.dumps(summary.to_dict(), indent=2))

first = json.loads(out.read_text().splitlines()[0])
print("\nfirst record:", json.dumps({k: first[k] for k in ("trial", "spec", "checks", "rainbow_girth")}))
