"""Invariant suites run end to end; shared by the CLI and the acceptance tests.

Every suite returns a plain dict (JSON-ready, no timings) so that two runs
with the same arguments serialise byte-for-byte identically.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .clique_shift import (
    Distribution,
    edge_probability,
    restart_distribution,
    run_to_clique,
    uniformize_on_support,
)
from .combinatorics import DEFAULT_SEED, Subset, binomial, make_rng
from .graph import (
    all_graphs,
    brute_force_max_clique,
    brute_force_max_triangle_free,
    complete_bipartite,
    graph_from_edge_mask,
    has_triangle,
    mantel_bound,
    max_degree,
    triangle_free_graphs,
    vertex_pairs,
    Graph,
)
from .montecarlo import estimate_edge_probability, estimate_prefix_event, estimate_sequential_draw
from .sperner import SubsetFamily, antichains, lym_sum, max_antichain_bruteforce, prefix_event_probability, sperner_bound
from .turan import (
    CoverInstance,
    conditional_bound_check,
    greedy_cover,
    is_covering,
    solve_exact,
    turan_lower_bound,
)

MAX_VERIFY_N = 7

# substream tags so suites never share random streams
_STREAM_RANDOM_GRAPHS = 1
_STREAM_MONTECARLO = 2


class _Suite:
    def __init__(self, name: str):
        self.name = name
        self.checks = 0
        self.violations: list[str] = []

    def check(self, ok: bool, what: Callable[[], str] | str):
        self.checks += 1
        if not ok:
            self.violations.append(what() if callable(what) else what)

    def report(self, **extra) -> dict:
        out = {
            "name": self.name,
            "passed": not self.violations,
            "checks": self.checks,
            "violations": self.violations[:20],
            "violation_count": len(self.violations),
        }
        out.update(extra)
        return out


def mantel_suite(max_n: int = MAX_VERIFY_N) -> dict:
    """Exhaustive maximum vs floor(n^2/4), the bipartite witness and the degree-counting argument."""
    s = _Suite("mantel")
    table = []
    for n in range(2, max_n + 1):
        brute = brute_force_max_triangle_free(n)
        s.check(brute == mantel_bound(n), f"n={n}: brute force {brute} != {mantel_bound(n)}")
        table.append({"n": n, "bound": mantel_bound(n), "brute_force": brute})
    for n in range(1, 65):
        w = complete_bipartite(n)
        s.check(w.num_edges() == mantel_bound(n) and not has_triangle(w), f"K_bipartite({n}) is not extremal")
    for n in range(1, min(max_n, 6) + 1):
        for g in triangle_free_graphs(n):
            e = g.num_edges()
            s.check(sum(g.degrees()) == 2 * e, f"degree sum on {g.adj}")
            k = max_degree(g)
            s.check(e <= (n - k) * k and 4 * (n - k) * k <= n * n, f"counting argument fails on {g.adj}")
    return s.report(table=table)


def _random_graphs(n: int, count: int, seed: int) -> list[Graph]:
    pairs = vertex_pairs(n)
    rng = make_rng(seed, _STREAM_RANDOM_GRAPHS, n)
    masks = rng.integers(0, 1 << len(pairs), size=count, dtype="uint64")
    return [graph_from_edge_mask(n, int(m), pairs) for m in masks]


def check_shift_trace(s: _Suite, g: Graph, d0: Distribution, omega: int):
    trace = run_to_clique(g, d0)
    d = d0
    before = edge_probability(g, d0)
    for step in trace.steps:
        p = list(d.p)
        p[step.receiver] += p[step.donor]
        p[step.donor] = Fraction(0)
        d = Distribution(tuple(p))
        after = edge_probability(g, d)
        s.check(step.gain >= 0 and after >= before, lambda: f"edge probability decreased on {g.adj}")
        s.check(after - before == step.gain, lambda: f"gain mismatch on {g.adj}")
        before = after
    s.check(d == trace.final, lambda: f"trace replay mismatch on {g.adj}")
    start_support = len(d0.support())
    final_support = trace.support()
    s.check(len(trace.steps) <= g.n - 1, lambda: f"{len(trace.steps)} steps on n={g.n}")
    s.check(len(trace.steps) <= start_support - len(final_support), lambda: f"step count vs support on {g.adj}")
    s.check(g.is_clique(final_support), lambda: f"final support {final_support} not a clique in {g.adj}")
    _, value = uniformize_on_support(g, trace.final)
    s.check(value == 1 - Fraction(1, len(final_support)), "uniformized value")
    s.check(value <= 1 - Fraction(1, omega), lambda: f"value {value} above omega ceiling on {g.adj}")
    return trace, value


def shift_suite(max_n: int = MAX_VERIFY_N, seed: int = DEFAULT_SEED, random_graphs: int = 1000) -> dict:
    """Monotonicity, gain identity, termination and the clique ceiling for the shifting dynamics."""
    s = _Suite("shift_dynamics")
    graphs_checked = 0
    for n in range(1, max_n + 1):
        graphs = all_graphs(n) if n <= 5 else _random_graphs(n, random_graphs, seed)
        for idx, g in enumerate(graphs):
            omega = brute_force_max_clique(g)
            check_shift_trace(s, g, Distribution.uniform(n), omega)
            check_shift_trace(s, g, restart_distribution(n, seed, idx), omega)
            graphs_checked += 1
    return s.report(graphs=graphs_checked)


def mantel_chain_suite(max_n: int = 6) -> dict:
    """For triangle-free graphs: 2|E|/n^2 <= final shifted value <= 1/2, hence |E| <= n^2/4."""
    s = _Suite("mantel_chain")
    graphs = 0
    for n in range(1, min(max_n, 6) + 1):
        for g in triangle_free_graphs(n):
            e = g.num_edges()
            start = edge_probability(g, Distribution.uniform(n))
            s.check(start == Fraction(2 * e, n * n), lambda: f"uniform value on {g.adj}")
            _, value = uniformize_on_support(g, run_to_clique(g).final)
            s.check(start <= value <= Fraction(1, 2), lambda: f"chain broken on {g.adj}")
            s.check(4 * e <= n * n, lambda: f"|E| too large on {g.adj}")
            graphs += 1
    return s.report(graphs=graphs)


def sperner_suite(max_n: int = 4) -> dict:
    s = _Suite("sperner")
    table = []
    for n in range(1, min(max_n, 4) + 1):
        best = max_antichain_bruteforce(n)
        s.check(best == sperner_bound(n), f"n={n}: max antichain {best} != {sperner_bound(n)}")
        count = 0
        for members in antichains(n):
            f = SubsetFamily(n, members)
            s.check(len(f) <= sperner_bound(n) and lym_sum(f) <= 1, f"antichain {f.as_lists()} breaks LYM")
            count += 1
        table.append({"n": n, "max_antichain": best, "bound": sperner_bound(n), "antichains": count})
    for n in range(1, 21):
        for a in range(n + 1):
            s.check(prefix_event_probability(n, a) * binomial(n, a) == 1, f"prefix probability ({n},{a})")
    return s.report(table=table)


def turan_grid(max_n: int, max_l: int = 3):
    for n in range(1, max_n + 1):
        for k in range(n + 1):
            for l in range(min(k, max_l) + 1):
                yield CoverInstance(n, k, l)


def turan_suite(max_n: int = MAX_VERIFY_N, node_budget: int = 10**7) -> dict:
    """Bound sandwich, certificates and monotonicity in k over the n <= max_n, l <= 3 grid."""
    s = _Suite("turan")
    solved: dict[tuple[int, int, int], int] = {}
    for inst in turan_grid(max_n):
        res = solve_exact(inst, node_budget)
        greedy = greedy_cover(inst)
        _, lo = turan_lower_bound(inst)
        key = (inst.n, inst.k, inst.l)
        s.check(res.optimal, f"T{key} not proven optimal")
        s.check(lo <= res.size <= len(greedy), f"T{key}: {lo} <= {res.size} <= {len(greedy)} fails")
        for fam in (res.family, greedy):
            s.check(is_covering(inst, fam) and conditional_bound_check(inst, fam), f"T{key}: bad certificate")
        solved[key] = res.size
    for (n, k, l), size in solved.items():
        if (n, k + 1, l) in solved:
            s.check(solved[(n, k + 1, l)] <= size, f"T({n},k,{l}) increases at k={k}")
    spots = {(5, 4, 2): 2, (5, 3, 2): 4}
    spots.update({(n, n, l): 1 for n in range(1, max_n + 1) for l in range(min(n, 3) + 1)})
    for key, want in spots.items():
        if key in solved:
            s.check(solved[key] == want, f"T{key} = {solved[key]}, expected {want}")
    values = [{"n": n, "k": k, "l": l, "T": v} for (n, k, l), v in sorted(solved.items())]
    return s.report(values=values)


def complement_suite(max_n: int = MAX_VERIFY_N) -> dict:
    """Pairs covering every triple <-> triangle-free complement: T(n,3,2) = C(n,2) - floor(n^2/4)."""
    s = _Suite("complement_identity")
    table = []
    for n in range(4, max_n + 1):
        t = solve_exact(CoverInstance(n, 3, 2)).size
        want = binomial(n, 2) - mantel_bound(n)
        s.check(t == want, f"T({n},3,2)={t}, expected {want}")
        table.append({"n": n, "T": t, "expected": want})
    return s.report(table=table)


def montecarlo_cases():
    """(name, estimator) pairs for the listed estimator cases; each takes (samples, seed, threads)."""
    k3 = Graph.complete(3)
    k32 = complete_bipartite(5)
    inst = CoverInstance(5, 4, 2)
    fam = SubsetFamily.of(5, [[0, 1], [2, 3]])
    pair = Subset.of([0, 1], 4)
    return [
        ("edge_probability_K3", lambda m, sd, th: estimate_edge_probability(k3, Distribution.uniform(3), m, sd, th)),
        ("edge_probability_K32", lambda m, sd, th: estimate_edge_probability(k32, Distribution.uniform(5), m, sd, th)),
        ("sequential_draw_5_4_2", lambda m, sd, th: estimate_sequential_draw(inst, fam, m, sd, th)),
        ("prefix_event_4_01", lambda m, sd, th: estimate_prefix_event(4, pair, m, sd, th)),
    ]


def montecarlo_suite(
    seed: int = DEFAULT_SEED,
    samples: int = 10**6,
    calibration_seeds: int = 100,
    calibration_samples: int = 10**4,
    threads: int | None = None,
) -> dict:
    """Each estimator within 3 stderr at ``samples``; 3-sigma coverage >= 95% across seeds."""
    s = _Suite("montecarlo")
    rows = []
    for idx, (name, est) in enumerate(montecarlo_cases()):
        e = est(samples, seed, threads)
        s.check(e.within(3.0), f"{name}: {e.value} vs {e.exact_target} (stderr {e.stderr})")
        covered = 0
        for r in range(calibration_seeds):
            sub = int(make_rng(seed, _STREAM_MONTECARLO, idx, r).integers(0, 2**63))
            covered += est(calibration_samples, sub, threads).within(3.0)
        s.check(covered >= 0.95 * calibration_seeds, f"{name}: coverage {covered}/{calibration_seeds}")
        row = e.to_json()
        row.update(name=name, coverage=covered, coverage_runs=calibration_seeds)
        rows.append(row)
    return s.report(estimates=rows)


def verify_all(
    max_n: int = MAX_VERIFY_N,
    seed: int = DEFAULT_SEED,
    threads: int | None = None,
    samples: int = 10**5,
    random_graphs: int = 1000,
) -> dict:
    if not 2 <= max_n <= MAX_VERIFY_N:
        raise ValueError(f"max_n must be in 2..{MAX_VERIFY_N}, got {max_n}")
    suites = [
        mantel_suite(max_n),
        shift_suite(max_n, seed, random_graphs),
        mantel_chain_suite(min(max_n, 6)),
        sperner_suite(min(max_n, 4)),
        turan_suite(max_n),
        complement_suite(max_n),
        montecarlo_suite(seed, samples, threads=threads),
    ]
    return {
        "max_n": max_n,
        "seed": seed,
        "samples": samples,
        "suites": suites,
        "passed": all(x["passed"] for x in suites),
        "total_checks": sum(x["checks"] for x in suites),
        "total_violations": sum(x["violation_count"] for x in suites),
    }
