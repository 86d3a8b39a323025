from fractions import Fraction as F
from itertools import combinations

import pytest

from turanlab.combinatorics import CapacityError, binomial
from turanlab.graph import mantel_bound
from turanlab.sperner import SubsetFamily
from turanlab.turan import (
    CoverInstance,
    conditional_bound_check,
    greedy_cover,
    is_covering,
    sequential_draw_probability,
    solve_exact,
    turan_lower_bound,
)


def _covers(n, k, blocks):
    return all(any(set(b) <= set(K) for b in blocks) for K in combinations(range(n), k))


def naive_turan(n, k, l):
    # smallest r such that some r l-subsets cover every k-subset; plain set arithmetic
    blocks = list(combinations(range(n), l))
    for r in range(len(blocks) + 1):
        if any(_covers(n, k, fam) for fam in combinations(blocks, r)):
            return r


ORACLE_CASES = [(n, k, l) for n in range(1, 7) for k in range(n + 1) for l in range(min(k, 2) + 1)]
ORACLE_CASES += [(5, 4, 3), (6, 5, 3), (5, 3, 3), (6, 4, 3)]


def test_naive_oracle_spot_values():
    assert naive_turan(5, 4, 2) == 2
    assert naive_turan(5, 3, 2) == 4
    assert naive_turan(5, 3, 2) == binomial(5, 2) - mantel_bound(5)


@pytest.mark.parametrize("n,k,l", ORACLE_CASES)
def test_solver_matches_naive(n, k, l):
    inst = CoverInstance(n, k, l)
    res = solve_exact(inst)
    assert res.optimal
    assert res.size == naive_turan(n, k, l)
    assert is_covering(inst, res.family)


def test_instance_validation():
    with pytest.raises(ValueError):
        CoverInstance(3, 4, 2)
    with pytest.raises(ValueError):
        CoverInstance(5, 2, 3)
    with pytest.raises(ValueError):
        CoverInstance(5, 2, -1)


def test_is_covering_examples():
    inst = CoverInstance(5, 4, 2)
    assert is_covering(inst, SubsetFamily.of(5, [[0, 1], [2, 3]]))
    assert not is_covering(inst, SubsetFamily.of(5, [[0, 1]]))
    assert is_covering(CoverInstance(6, 6, 3), SubsetFamily.of(6, [[1, 4, 5]]))
    with pytest.raises(ValueError):
        is_covering(inst, SubsetFamily.of(5, [[0, 1, 2]]))


def test_lower_bound_examples():
    assert turan_lower_bound(CoverInstance(5, 4, 2)) == (F(10, 6), 2)
    assert turan_lower_bound(CoverInstance(7, 3, 3)) == (F(35), 35)
    assert turan_lower_bound(CoverInstance(7, 3, 0)) == (F(1), 1)


def test_sequential_draw_examples():
    inst = CoverInstance(5, 4, 2)
    assert sequential_draw_probability(inst, SubsetFamily.of(5, [[0, 1], [2, 3]])) == F(1, 5)
    everything = SubsetFamily.of(5, combinations(range(5), 2))
    assert sequential_draw_probability(inst, everything) == 1
    assert sequential_draw_probability(inst, SubsetFamily(5, ())) == 0


def test_conditional_bound_examples():
    inst = CoverInstance(5, 4, 2)
    assert conditional_bound_check(inst, SubsetFamily.of(5, [[0, 1], [2, 3]]))
    assert conditional_bound_check(CoverInstance(5, 5, 2), SubsetFamily.of(5, [[3, 4]]))
    assert conditional_bound_check(inst, SubsetFamily.of(5, combinations(range(5), 2)))
    with pytest.raises(ValueError):
        conditional_bound_check(inst, SubsetFamily.of(5, [[0, 1]]))


def test_solve_examples():
    assert solve_exact(CoverInstance(5, 4, 2)).size == 2
    assert solve_exact(CoverInstance(5, 3, 2)).size == 4
    for n in range(1, 8):
        for l in range(min(n, 3) + 1):
            assert solve_exact(CoverInstance(n, n, l)).size == 1


def test_greedy_examples():
    g = greedy_cover(CoverInstance(6, 6, 2))
    assert len(g) == 1
    inst = CoverInstance(5, 4, 2)
    g = greedy_cover(inst)
    assert len(g) <= 3 and is_covering(inst, g)
    assert greedy_cover(CoverInstance(4, 2, 0)).members == (0,)


def test_budget_exhaustion_reports_incumbent():
    inst = CoverInstance(7, 4, 3)
    res = solve_exact(inst, node_budget=5)
    assert not res.optimal
    assert res.nodes_explored == 5
    assert is_covering(inst, res.family)
    assert res.size <= len(greedy_cover(inst))


def test_result_json_shape():
    js = solve_exact(CoverInstance(5, 4, 2)).to_json()
    assert js == {
        "n": 5, "k": 4, "l": 2, "size": 2, "lower_bound": "5/3", "optimal": True,
        "family": [[0, 1], [2, 3]], "nodes": 0,
    }


def test_solver_is_reproducible():
    a = solve_exact(CoverInstance(7, 4, 3))
    b = solve_exact(CoverInstance(7, 4, 3))
    assert a == b


def test_capacity_guard():
    with pytest.raises(CapacityError):
        solve_exact(CoverInstance(40, 20, 3))
