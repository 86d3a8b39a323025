# Shifting probability mass between non-adjacent vertices until the support is a clique.
#
# Run: python demos/02_clique_shift.py

from fractions import Fraction

from turanlab.clique_shift import Distribution, clique_lower_bound, edge_probability, run_to_clique, uniformize_on_support
from turanlab.graph import Graph, brute_force_max_clique, complete_bipartite

g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (0, 5)])
d0 = Distribution.uniform(g.n)
print("start:", edge_probability(g, d0), "= 2|E|/n^2 =", Fraction(2 * g.num_edges(), g.n ** 2))

trace = run_to_clique(g, d0)
for step in trace.steps:
    print(f"  move mass {step.donor} -> {step.receiver}, edge probability +{step.gain}")
print("final support:", trace.support(), "probability", edge_probability(g, trace.final))

d, value = uniformize_on_support(g, trace.final)
print("uniform on the clique:", value, "(1 - 1/|Q|)")

# Greedy dynamics only certify a lower bound on the clique number.
print("restarts found", clique_lower_bound(g, 20, seed=1), "omega =", brute_force_max_clique(g))

# Triangle-free graph: value stays at or below 1/2, which is Mantel's bound in disguise.
h = complete_bipartite(7)
_, v = uniformize_on_support(h, run_to_clique(h).final)
print("K_{4,3}: start", edge_probability(h, Distribution.uniform(7)), "final", v)
