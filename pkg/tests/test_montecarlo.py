from fractions import Fraction as F
from itertools import combinations
import math

import pytest

from turanlab.clique_shift import Distribution
from turanlab.combinatorics import Subset
from turanlab.graph import Graph
from turanlab.montecarlo import (
    Estimate,
    estimate_edge_probability,
    estimate_prefix_event,
    estimate_sequential_draw,
    sharded_counts,
)
from turanlab.sperner import SubsetFamily
from turanlab.turan import CoverInstance

M = 10**6


def test_edge_probability_k3(k3):
    e = estimate_edge_probability(k3, Distribution.uniform(3), M, 1)
    assert e.exact_target == F(2, 3)
    assert e.within(3.0)


def test_edge_probability_edgeless():
    e = estimate_edge_probability(Graph.empty(4), Distribution.uniform(4), 1000, 1)
    assert e.value == 0 and e.stderr == 0


def test_edge_probability_k32(k32):
    e = estimate_edge_probability(k32, Distribution.uniform(5), M, 2)
    assert e.exact_target == F(12, 25)
    assert e.within(3.0)


def test_edge_probability_nonuniform():
    g = Graph.path(3)
    d = Distribution((F(1, 2), F(1, 4), F(1, 4)))
    e = estimate_edge_probability(g, d, 200_000, 5)
    assert e.exact_target == 2 * (F(1, 2) * F(1, 4) + F(1, 4) * F(1, 4))
    assert e.within(3.0)


def test_sequential_draw():
    inst = CoverInstance(5, 4, 2)
    e = estimate_sequential_draw(inst, SubsetFamily.of(5, [[0, 1], [2, 3]]), M, 3)
    assert e.exact_target == F(1, 5)
    assert e.within(3.0)
    every = SubsetFamily.of(5, combinations(range(5), 2))
    assert estimate_sequential_draw(inst, every, 1000, 3).value == 1
    assert estimate_sequential_draw(inst, SubsetFamily(5, ()), 1000, 3).value == 0


def test_prefix_event():
    e = estimate_prefix_event(4, Subset.of([0, 1], 4), M, 4)
    assert e.exact_target == F(1, 6)
    assert e.within(3.0)
    assert estimate_prefix_event(6, Subset(0, 6), 500, 4).value == 1
    assert estimate_prefix_event(6, Subset.of(range(6), 6), 500, 4).value == 1


def test_stderr_formula():
    e = Estimate.from_count(250, 1000, 0, F(1, 4))
    assert e.value == 0.25
    assert e.stderr == pytest.approx(math.sqrt(0.25 * 0.75 / 1000))
    assert e.to_json()["exact"] == "1/4"


def test_determinism_independent_of_threads(k32):
    d = Distribution.uniform(5)
    runs = [estimate_edge_probability(k32, d, 300_000, 77, threads=t) for t in (1, 2, 4)]
    assert runs[0] == runs[1] == runs[2]


def test_shard_split_fixed():
    seen = []

    def shard(rng, size):
        seen.append(size)
        return [size]

    assert sharded_counts(shard, 10, 0, shard_size=4, threads=1)[0] == 10
    assert seen == [4, 4, 2]


def test_seeds_differ():
    d = Distribution.uniform(3)
    a = estimate_edge_probability(Graph.complete(3), d, 10_000, 1)
    b = estimate_edge_probability(Graph.complete(3), d, 10_000, 2)
    assert a.value != b.value
