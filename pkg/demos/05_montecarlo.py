# Sampling estimates next to their exact values.
#
# Run: python demos/05_montecarlo.py

from turanlab.clique_shift import Distribution
from turanlab.combinatorics import Subset
from turanlab.graph import Graph, complete_bipartite
from turanlab.montecarlo import estimate_edge_probability, estimate_prefix_event, estimate_sequential_draw
from turanlab.sperner import SubsetFamily
from turanlab.turan import CoverInstance

samples = 10**6
estimates = {
    "edge probability, K3": estimate_edge_probability(Graph.complete(3), Distribution.uniform(3), samples, 1),
    "edge probability, K_{3,2}": estimate_edge_probability(complete_bipartite(5), Distribution.uniform(5), samples, 1),
    "first two of four draws in {01, 23}": estimate_sequential_draw(
        CoverInstance(5, 4, 2), SubsetFamily.of(5, [[0, 1], [2, 3]]), samples, 1),
    "{0,1} leads a permutation of 4": estimate_prefix_event(4, Subset.of([0, 1], 4), samples, 1),
}
for name, e in estimates.items():
    print(f"{name:38s} {e.value:.5f} +/- {e.stderr:.5f}  exact {e.exact_target}  ok={e.within(3)}")
