from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from turanlab.clique_shift import (
    Distribution,
    InvalidDistribution,
    NotCliqueSupported,
    clique_lower_bound,
    edge_probability,
    neighbor_mass,
    restart_distribution,
    restart_profile,
    run_to_clique,
    shift_step,
    uniformize_on_support,
)
from turanlab.graph import Graph, all_graphs, brute_force_max_clique, graph_from_edge_mask, triangle_free_graphs


def ordered_pair_probability(g, d):
    # independent oracle: enumerate every ordered draw (u, v)
    return sum((d[u] * d[v] for u in range(g.n) for v in range(g.n) if g.adjacent(u, v)), F(0))


def test_edge_probability_examples(k3, p3):
    assert edge_probability(k3, Distribution.uniform(3)) == F(2, 3)
    assert edge_probability(Graph.empty(4), Distribution((F(1, 2), F(1, 4), F(1, 8), F(1, 8)))) == 0
    assert edge_probability(p3, Distribution.uniform(3)) == F(4, 9)


def test_uniform_edge_probability_is_2e_over_n2():
    for g in all_graphs(4):
        assert edge_probability(g, Distribution.uniform(4)) == F(2 * g.num_edges(), 16)


@settings(max_examples=200)
@given(st.integers(0, 2**10 - 1), st.lists(st.integers(0, 5), min_size=5, max_size=5).filter(any))
def test_edge_probability_matches_pair_enumeration(mask, weights):
    g = graph_from_edge_mask(5, mask)
    total = sum(weights)
    d = Distribution(tuple(F(w, total) for w in weights))
    assert edge_probability(g, d) == ordered_pair_probability(g, d)


def test_neighbor_mass_examples(p3):
    u = Distribution.uniform(3)
    assert neighbor_mass(p3, u, 0) == F(1, 3)
    assert neighbor_mass(p3, u, 1) == F(2, 3)
    assert neighbor_mass(Graph.empty(3), u, 2) == 0


def test_distribution_validation():
    with pytest.raises(InvalidDistribution):
        Distribution((F(1, 2), F(1, 3)))
    with pytest.raises(InvalidDistribution):
        Distribution((F(3, 2), F(-1, 2)))
    with pytest.raises(InvalidDistribution):
        edge_probability(Graph.empty(3), Distribution.uniform(2))


def test_shift_step_path(p3):
    d, step = shift_step(p3, Distribution.uniform(3))
    assert d.p == (F(2, 3), F(1, 3), F(0))
    assert (step.donor, step.receiver, step.gain) == (2, 0, 0)
    assert edge_probability(p3, d) == F(4, 9)


def test_shift_step_clique_supported(k3):
    assert shift_step(k3, Distribution.uniform(3)) is None


def test_shift_step_isolated_pair():
    d, step = shift_step(Graph.empty(2), Distribution.uniform(2))
    assert d.p == (1, 0)
    assert step.gain == 0


def test_shift_moves_toward_larger_neighbor_mass():
    # star centre 0 with leaves 1,2; vertex 3 isolated. Pair (0,3) is first.
    g = Graph.from_edges(4, [(0, 1), (0, 2)])
    d0 = Distribution.uniform(4)
    d, step = shift_step(g, d0)
    assert (step.donor, step.receiver) == (3, 0)
    # s_0 = 1/2, s_3 = 0, p_3 = 1/4: ordered-pair gain 2 * 1/4 * 1/2
    assert step.gain == F(1, 4)
    assert edge_probability(g, d) - edge_probability(g, d0) == step.gain


def test_run_to_clique_examples(p3, k3, k32):
    t = run_to_clique(p3)
    assert t.support() == [0, 1] and len(t.steps) == 1
    t = run_to_clique(k3)
    assert t.steps == () and t.support() == [0, 1, 2]
    t = run_to_clique(k32)
    assert len(t.support()) == 2 and k32.is_clique(t.support()) and len(t.steps) <= 4


def test_uniformize_examples(p3, k3):
    d, v = uniformize_on_support(p3, Distribution((F(2, 3), F(1, 3), F(0))))
    assert d.p == (F(1, 2), F(1, 2), 0) and v == F(1, 2)
    d, v = uniformize_on_support(k3, Distribution.uniform(3))
    assert d == Distribution.uniform(3) and v == F(2, 3)
    pt = Distribution.point(3, 1)
    assert uniformize_on_support(p3, pt) == (pt, 0)
    with pytest.raises(NotCliqueSupported):
        uniformize_on_support(p3, Distribution.uniform(3))


def _replay(g, trace):
    d = trace.start
    values = [edge_probability(g, d)]
    for step in trace.steps:
        p = list(d.p)
        p[step.receiver] += p[step.donor]
        p[step.donor] = F(0)
        d = Distribution(tuple(p))
        values.append(edge_probability(g, d))
    return d, values


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_trace_invariants_all_graphs(n):
    for idx, g in enumerate(all_graphs(n)):
        omega = brute_force_max_clique(g)
        for d0 in (Distribution.uniform(n), restart_distribution(n, 11, idx)):
            trace = run_to_clique(g, d0)
            final, values = _replay(g, trace)
            assert final == trace.final
            assert all(b >= a for a, b in zip(values, values[1:]))
            assert [b - a for a, b in zip(values, values[1:])] == [s.gain for s in trace.steps]
            assert len(trace.steps) <= len(d0.support()) - len(trace.support())
            assert g.is_clique(trace.support())
            _, value = uniformize_on_support(g, trace.final)
            assert value <= 1 - F(1, omega)


def test_mantel_chain_small():
    for n in range(1, 6):
        for g in triangle_free_graphs(n):
            start = edge_probability(g, Distribution.uniform(n))
            _, value = uniformize_on_support(g, run_to_clique(g).final)
            assert F(2 * g.num_edges(), n * n) == start <= value <= F(1, 2)


def test_restart_profile_sums_to_one():
    for n in range(1, 20):
        p = restart_profile(n)
        assert sum(p) == 1 and len(p) == n and all(x > 0 for x in p)


def test_restart_distribution_is_deterministic():
    assert restart_distribution(6, 5, 3) == restart_distribution(6, 5, 3)
    assert sorted(restart_distribution(6, 5, 3).p) == sorted(restart_profile(6))


def test_clique_lower_bound_examples(k3, k32):
    assert clique_lower_bound(k3, 1, 0) == 3
    assert clique_lower_bound(k32, 10, 0) == 2
    for g in triangle_free_graphs(5):
        assert clique_lower_bound(g, 3, 1) <= 2


def test_clique_lower_bound_never_exceeds_omega():
    for g in all_graphs(5):
        assert clique_lower_bound(g, 4, 2) <= brute_force_max_clique(g)


def test_trace_json(p3):
    js = run_to_clique(p3).to_json()
    assert js == {"steps": [{"donor": 2, "receiver": 0, "gain_num": 0, "gain_den": 1}], "final": ["2/3", "1/3", "0/1"]}
