"""Executable checks for Mantel's theorem, Sperner's theorem and Turán covering numbers."""

from .combinatorics import (
    DEFAULT_SEED,
    CapacityError,
    Rational,
    Subset,
    binomial,
    enumerate_subsets,
    random_permutation,
)
from .graph import (
    Graph,
    brute_force_max_clique,
    brute_force_max_triangle_free,
    complete_bipartite,
    has_triangle,
    mantel_bound,
    max_degree,
    parse_edge_list,
)
from .clique_shift import (
    Distribution,
    ShiftTrace,
    clique_lower_bound,
    edge_probability,
    neighbor_mass,
    run_to_clique,
    shift_step,
    uniformize_on_support,
)
from .sperner import (
    SubsetFamily,
    is_antichain,
    lym_sum,
    max_antichain_bruteforce,
    parse_family,
    prefix_event_probability,
    simulate_prefix_events,
    sperner_bound,
)
from .turan import (
    CoverInstance,
    CoverResult,
    conditional_bound_check,
    greedy_cover,
    is_covering,
    sequential_draw_probability,
    solve_exact,
    turan_lower_bound,
)
from .montecarlo import Estimate, estimate_edge_probability, estimate_prefix_event, estimate_sequential_draw

__version__ = "0.1.0"
