# Turán covering numbers T(n, k, l): lower bound, greedy and exact solutions.
#
# Run: python demos/04_turan_cover.py

from turanlab.combinatorics import binomial
from turanlab.graph import mantel_bound
from turanlab.turan import (
    CoverInstance,
    conditional_bound_check,
    greedy_cover,
    sequential_draw_probability,
    solve_exact,
    turan_lower_bound,
)

print(" n  k  l  bound  greedy  exact  nodes")
for n, k, l in [(5, 4, 2), (6, 4, 2), (7, 4, 3), (7, 5, 3), (8, 5, 3)]:
    inst = CoverInstance(n, k, l)
    frac, ceil = turan_lower_bound(inst)
    res = solve_exact(inst)
    print(f"{n:2d} {k:2d} {l:2d}  {ceil:5d}  {len(greedy_cover(inst)):6d}  {res.size:5d}  {res.nodes_explored}")

res = solve_exact(CoverInstance(5, 4, 2))
print("certificate:", res.family.as_lists())
print("P(first two draws form a block) =", sequential_draw_probability(res.instance, res.family),
      ">= 1/C(4,2):", conditional_bound_check(res.instance, res.family))

# Pairs covering all triples are complements of triangle-free graphs.
for n in range(4, 8):
    print(f"T({n},3,2) = {solve_exact(CoverInstance(n, 3, 2)).size} = C({n},2) - floor({n}^2/4) = {binomial(n, 2) - mantel_bound(n)}")
