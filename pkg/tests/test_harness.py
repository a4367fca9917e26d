from fractions import Fraction

import pytest

from gainrank.fileformat import serialize
from gainrank.graph import GainGraph, UndirectedGraph
from gainrank.harness import (CAMPAIGNS, GeneratorConfig, Instance, Scope, enumerate_graphs, parse_instance,
                              random_gain_graph, replay, run_campaign)

from conftest import R, graph

# vertex 2 (1-based) has degree 2 and lies on two cycles, yet its deletion lowers theta by 1 only
THETA_DROP_ONE = graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])


def test_random_graph_examples():
    assert len(random_gain_graph(GeneratorConfig(n=0))) == 0
    k5 = random_gain_graph(GeneratorConfig(n=5, edge_probability=Fraction(1), gain_denominator=1, seed=9))
    assert len(k5.edges) == 10 and all(g == R(0) for g in k5.gains.values())
    cfg = GeneratorConfig(n=9, gain_denominator=8, seed=123)
    assert random_gain_graph(cfg) == random_gain_graph(cfg)


def test_random_graph_gain_denominators():
    phi = random_gain_graph(GeneratorConfig(n=10, edge_probability=Fraction(1), gain_denominator=12, seed=2))
    assert all(12 % g.q == 0 for g in phi.gains.values())


def test_enumerate_counts():
    assert [sum(1 for _ in enumerate_graphs(n)) for n in (0, 1, 2, 3, 4)] == [1, 1, 2, 8, 64]
    assert len({g.edges for g in enumerate_graphs(4)}) == 64


def test_enumerate_limit():
    with pytest.raises(ValueError):
        next(enumerate_graphs(9))


def test_unknown_campaign():
    with pytest.raises(KeyError):
        run_campaign("nope")


def test_campaign_names():
    assert set(CAMPAIGNS) == {"bounds_3_2", "char_lower_4_8", "char_upper_4_9", "cycle_table_2_5", "pendant_2_2",
                              "tree_2_6", "cutpoint_2_8", "trim_2_11", "theta_3_1", "unicyclic_4_3",
                              "contraction_4_6_4_7", "ratio_4_10", "exact_vs_numeric"}


DEGENERATE = [
    Instance("empty", GainGraph.empty()),
    Instance("single", GainGraph.empty([0])),
    Instance("edgeless", GainGraph.empty(range(4))),
    Instance("disconnected", GainGraph.from_edges(range(5), [(0, 1, R(1, 4)), (2, 3, R(1, 2))])),
]


@pytest.mark.parametrize("name", sorted(set(CAMPAIGNS) - {"unicyclic_4_3"}))
def test_campaigns_are_total_on_degenerate_instances(name):
    report = run_campaign(name, instances=DEGENERATE)
    assert report.instances_checked == 4
    if name != "theta_3_1":
        assert report.passed, report.failure_lines()


@pytest.mark.parametrize("name", sorted(CAMPAIGNS))
def test_small_scope_runs(name):
    report = run_campaign(name, Scope(n=4, q=(4, 8), trials=3, seed=1))
    assert report.instances_checked > 0
    assert report.summary().startswith(("PASS", "FAIL"))


def test_failure_lines_and_replay():
    report = run_campaign("theta_3_1", instances=[Instance("x", GainGraph(THETA_DROP_ONE))])
    assert not report.passed
    line = report.failure_lines()[0]
    campaign, tag, inst, expected, actual = line.split("\t")
    assert (campaign, tag) == ("theta_3_1", "x")
    assert expected == "(c) theta(G-2) <= 0" and actual == "1"
    again = replay("theta_3_1", inst)
    assert [(f.expected, f.actual) for f in again] == [(f.expected, f.actual) for f in report.failures]


def test_replay_passing_instance_is_empty():
    assert replay("bounds_3_2", serialize(GainGraph(UndirectedGraph.cycle(4)), inline=True)) == []


def test_unicyclic_meta_round_trip():
    report = run_campaign("unicyclic_4_3", Scope(n=4, q=(4,), trials=5, seed=3))
    inst = next(CAMPAIGNS["unicyclic_4_3"].instances(Scope(n=4, q=(4,), trials=1, seed=3)))
    back = parse_instance(inst.serialize())
    assert back.meta == {k: str(v) for k, v in inst.meta.items()} and back.phi == inst.phi
    assert report.instances_checked == 5


def test_exceptions_become_failures():
    from gainrank.gains import Numeric
    import cmath
    z = Numeric.from_complex(cmath.exp(0.5j * cmath.pi))  # gain i in floating point: Type E boundary
    phi = GainGraph.cycle([z, R(0), R(0)])
    report = run_campaign("cycle_table_2_5", instances=[Instance("amb", phi)])
    assert not report.passed and "AmbiguousCycleTypeError" in report.failures[0].actual


def test_determinism_and_workers():
    scope = Scope(n=6, q=(8, 12), trials=60, seed=4)
    a = run_campaign("theta_3_1", scope)
    b = run_campaign("theta_3_1", scope)
    c = run_campaign("theta_3_1", Scope(n=6, q=(8, 12), trials=60, seed=4, workers=2))
    assert a.failure_lines() == b.failure_lines() == c.failure_lines()


def test_exhaustive_bounds_example():
    report = run_campaign("bounds_3_2", Scope(n=5, q=(4,), trials=8, exhaustive=True))
    assert report.instances_checked == 8 * sum(2 ** (k * (k - 1) // 2) for k in range(6))
    assert report.passed


def test_cycle_table_example():
    assert run_campaign("cycle_table_2_5", Scope(n=12, q=(8,), trials=100)).passed
