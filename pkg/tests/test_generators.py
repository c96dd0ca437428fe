import pytest

from rainbowcycles.errors import DigonRisk, GeneratorError, InfeasibleDegree, TooDense
from rainbowcycles.generators import (
    GenSpec,
    gen_circulant_digraph,
    gen_random_colored,
    gen_random_min_outdeg,
    gen_random_simple,
    generate,
)
from rainbowcycles.graph import ColoredGraph, Digraph, validate_classes


def test_circulant_triangle():
    assert generate(GenSpec("circulant", 3, 1)).arcs == ((0, 1), (1, 2), (2, 0))


def test_circulant_digon_risk():
    with pytest.raises(DigonRisk) as exc:
        gen_circulant_digraph(6, [2, 4])
    assert exc.value.pair == (2, 4)


def test_circulant_bad_step():
    with pytest.raises(GeneratorError):
        gen_circulant_digraph(5, [0])


def test_min_outdeg_frozen():
    d = gen_random_min_outdeg(7, 2, 0)
    assert d.arcs[:4] == ((0, 1), (0, 4), (1, 4), (1, 6))
    assert all(d.outdegree(v) == 2 for v in range(7))


@pytest.mark.parametrize("n,k", [(5, 3), (4, 2)])
def test_min_outdeg_infeasible(n, k):
    with pytest.raises(InfeasibleDegree):
        gen_random_min_outdeg(n, k)


@pytest.mark.parametrize("seed", range(20))
def test_min_outdeg_tight_density(seed):
    # 2k = n - 1 forces a tournament
    d = gen_random_min_outdeg(9, 4, seed)
    assert len(d.arcs) == 36 and d.min_outdegree() == 4


def test_random_colored_frozen():
    g = gen_random_colored(6, 3, 2, 0)
    assert g.edges == ((0, 4, 0), (1, 4, 0), (1, 3, 1), (0, 5, 1), (0, 1, 2), (1, 5, 2))
    assert validate_classes(g, 2, 3)


def test_random_colored_too_dense():
    with pytest.raises(TooDense):
        gen_random_colored(4, 7, 1)


def test_random_simple_frozen():
    assert gen_random_simple(6, 7, 0) == [(0, 1), (0, 2), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4)]


@pytest.mark.parametrize("spec", [
    GenSpec("circulant", 11, 3),
    GenSpec("random_min_outdeg", 15, 3, seed=4),
    GenSpec("random_colored", 12, 2, K=9, seed=5),
    GenSpec("star_circulant", 10, 2),
    GenSpec("star_random", 13, 3, seed=6),
    GenSpec("random_simple", 14, 5, seed=7),
])
def test_generate_deterministic(spec):
    a, b = generate(spec), generate(spec)
    assert a == b
    assert GenSpec.from_json(spec.to_json()) == spec


def test_star_families_have_n_classes_of_k():
    g = generate(GenSpec("star_random", 13, 3, seed=1))
    assert isinstance(g, ColoredGraph) and validate_classes(g, 3, 13)
    assert isinstance(generate(GenSpec("circulant", 5, 1)), Digraph)


def test_random_simple_family_size():
    g = generate(GenSpec("random_simple", 10, 4, seed=2))
    assert g.m == 14 and g.K == 1


def test_unknown_family():
    with pytest.raises(GeneratorError):
        generate(GenSpec("nope", 3))
    with pytest.raises(GeneratorError):
        GenSpec.from_dict({"family": "circulant", "n": 3, "density": 0.5})
