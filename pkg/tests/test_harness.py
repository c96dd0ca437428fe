import json

import pytest

from rainbowcycles import io as gio
from rainbowcycles.cli import main
from rainbowcycles.errors import ConfigError
from rainbowcycles.harness import CampaignConfig, expand_specs, run_campaign, strip_timing

from conftest import rainbow_triangle


def read_jsonl(path):
    return [json.loads(line) for line in open(path, encoding="utf-8")]


@pytest.mark.parametrize("cfg", [
    {"generators": []},
    {},
    {"generators": [{"family": "nope", "n": 4}]},
    {"generators": [{"family": "circulant"}]},
    {"generators": [{"family": "circulant", "n": 4}], "checks": ["magic"]},
    {"generators": [{"family": "circulant", "n": 4}], "oracle": "psychic"},
    {"generators": [{"family": "circulant", "n": 4}], "limits": {"max_len": 1}},
    {"generators": [{"family": "circulant", "n": 4}], "colour": 1},
])
def test_config_errors(cfg):
    with pytest.raises(ConfigError):
        CampaignConfig.from_dict(cfg)


def test_expand_order():
    cfg = CampaignConfig.from_dict({"generators": [
        {"family": "random_colored", "n": [6, 7], "k": [1, 2], "seeds": [3, 5]},
    ]})
    specs = list(expand_specs(cfg))
    assert [(s.n, s.k, s.seed) for s in specs] == [
        (6, 1, 3), (6, 1, 4), (6, 2, 3), (6, 2, 4), (7, 1, 3), (7, 1, 4), (7, 2, 3), (7, 2, 4)]


CAMPAIGN = {
    "generators": [
        {"family": "star_random", "n": [7, 9], "k": [1, 2], "seeds": [0, 3]},
        {"family": "random_simple", "n": 12, "k": 4, "seeds": [0, 3]},
        {"family": "circulant", "n": [9, 10], "k": [2, 3]},
    ],
    "checks": ["conjecture", "pipeline", "bound_dominance"],
    "scale": {"c": 1.0},
    "seed": 11,
}


def test_campaign_deterministic(tmp_path):
    cfg = CampaignConfig.from_dict(CAMPAIGN)
    s1 = run_campaign(cfg, tmp_path / "a.jsonl")
    s2 = run_campaign(cfg, tmp_path / "b.jsonl")
    a, b = read_jsonl(tmp_path / "a.jsonl"), read_jsonl(tmp_path / "b.jsonl")
    assert s1.ok and s1.records == len(a) == 19
    assert strip_timing(a) == strip_timing(b)
    assert [r["trial"] for r in a] == list(range(19))


def test_campaign_parallel_matches_serial(tmp_path):
    cfg = CampaignConfig.from_dict(CAMPAIGN)
    run_campaign(cfg, tmp_path / "a.jsonl")
    run_campaign(CampaignConfig.from_dict({**CAMPAIGN, "workers": 2}), tmp_path / "b.jsonl")
    assert strip_timing(read_jsonl(tmp_path / "a.jsonl")) == strip_timing(read_jsonl(tmp_path / "b.jsonl"))


def test_tight_check_flags_and_embeds_instance(tmp_path):
    # circulant(10, {1,2,3}) has girth 4 = ceil(10/3); random stars are usually shorter
    cfg = CampaignConfig.from_dict({
        "generators": [{"family": "star_random", "n": 9, "k": 3, "seeds": [0, 6]}],
        "checks": ["tight"],
    })
    run_campaign(cfg, tmp_path / "t.jsonl")
    recs = read_jsonl(tmp_path / "t.jsonl")
    failing = [r for r in recs if r["checks"]["tight"] == "fail"]
    for r in failing:
        g = gio.loads(r["instance"])
        assert g.n == 9
    assert all(r["checks"]["tight"] in ("pass", "fail") for r in recs)


def test_invalid_generator_is_recorded(tmp_path):
    cfg = CampaignConfig.from_dict({"generators": [{"family": "circulant", "n": 6, "steps": [2, 4]}]})
    s = run_campaign(cfg, tmp_path / "x.jsonl")
    assert s.invalid == 1 and s.ok
    assert "DigonRisk" in read_jsonl(tmp_path / "x.jsonl")[0]["invalid"]


# CLI --------------------------------------------------------------------------

def test_cli_rainbow_girth(tmp_path, capsys):
    path = tmp_path / "tri.ecg"
    gio.save(rainbow_triangle(), path)
    assert main(["rainbow-girth", "--in", str(path)]) == 0
    assert capsys.readouterr().out.strip() == "3"
    assert main(["rainbow-girth", "--in", str(path), "--brute", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["length"] == 3


def test_cli_bounds(capsys):
    assert main(["bounds", "--n", "100", "--k", "10", "--json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["aharoni"] == 10 and d["shen"] == 83


def test_cli_gen_and_girths(tmp_path, capsys):
    out = tmp_path / "c.dg"
    assert main(["gen", "--family", "circulant", "--n", "9", "--k", "2", "--out", str(out)]) == 0
    assert json.loads((tmp_path / "c.dg.json").read_text())["family"] == "circulant"
    capsys.readouterr()
    assert main(["directed-girth", "--in", str(out)]) == 0
    assert capsys.readouterr().out.strip() == "5"
    assert main(["rainbow-girth", "--in", str(out)]) == 2


def test_cli_pipeline(tmp_path, capsys):
    path = tmp_path / "r.ecg"
    gen = ["gen", "--family", "random_colored", "--n", "40", "--K", "40", "--k", "6", "--seed", "1"]
    assert main(gen + ["--out", str(path)]) == 0
    capsys.readouterr()
    code = main(["pipeline", "--in", str(path), "--k", "2", "--kind", "main", "--scale", "c=1", "--json"])
    rep = json.loads(capsys.readouterr().out)
    assert code == 0 and rep["status"] == "ok" and rep["branch"] == "B"
    assert len(rep["certificate"]["vertices"]) == 4 and rep["bound"] == 6


def test_cli_pipeline_typed_failure(tmp_path, capsys):
    path = tmp_path / "s.ecg"
    assert main(["gen", "--family", "star_circulant", "--n", "12", "--k", "3", "--out", str(path)]) == 0
    capsys.readouterr()
    assert main(["pipeline", "--in", str(path), "--k", "3", "--kind", "main", "--scale", "c=1", "--json"]) == 1
    assert json.loads(capsys.readouterr().out)["status"] == "sample_failure"


def test_cli_budget_exit(tmp_path, capsys):
    path = tmp_path / "r.ecg"
    assert main(["gen", "--family", "random_colored", "--n", "12", "--k", "2", "--K", "6", "--out", str(path)]) == 0
    assert main(["rainbow-girth", "--in", str(path), "--node-budget", "1"]) == 1


def test_cli_lemmas(capsys):
    assert main(["lemmas", "--k-hi", "1024"]) == 0
    assert main(["lemmas", "--k-lo", "1"]) == 2


def test_cli_verify(tmp_path, capsys):
    cfgp = tmp_path / "cfg.json"
    cfgp.write_text(json.dumps({"generators": [{"family": "circulant", "n": [12, 13], "k": [2, 3, 4]}],
                                "checks": ["conjecture", "tight"]}))
    assert main(["verify", "--config", str(cfgp), "--out", str(tmp_path / "o.jsonl")]) == 0
    assert len(read_jsonl(tmp_path / "o.jsonl")) == 6


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["bounds", "--n", "0", "--k", "1"],
    ["girth"],
    ["pipeline", "--k", "2", "--in", "/nonexistent.ecg"],
    ["bounds", "--n", "3", "--k", "1", "--scale", "d=4"],
])
def test_cli_usage_errors(argv, capsys):
    assert main(argv) == 2


def test_cli_malformed_input(tmp_path):
    bad = tmp_path / "bad.ecg"
    bad.write_text("ecg 1\nn 3 m 5 K 1\n")
    assert main(["girth", "--in", str(bad)]) == 2
