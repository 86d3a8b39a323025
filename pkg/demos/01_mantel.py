# Triangle-free graphs and the floor(n^2/4) edge bound.
#
# Run: python demos/01_mantel.py

from turanlab.graph import (
    brute_force_max_triangle_free,
    complete_bipartite,
    has_triangle,
    mantel_bound,
    max_degree,
    triangle_free_graphs,
)

# Exhaustive maximum against the closed form.
for n in range(2, 8):
    print(f"n={n}: floor(n^2/4)={mantel_bound(n):2d}  exhaustive max={brute_force_max_triangle_free(n):2d}")

# The balanced complete bipartite graph reaches the bound and has no triangle.
g = complete_bipartite(7)
print("K_{4,3}:", g.num_edges(), "edges, triangle:", has_triangle(g))

# Degree counting: with maximum degree k a triangle-free graph has at most (n-k)k edges.
n = 6
worst = max((g.num_edges(), (n - max_degree(g)) * max_degree(g)) for g in triangle_free_graphs(n))
print("n=6, largest |E| with its (n-k)k cap:", worst)
