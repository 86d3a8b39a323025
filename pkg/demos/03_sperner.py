# Antichains, the LYM sum and permutation prefixes.
#
# Run: python demos/03_sperner.py

from turanlab.sperner import (
    SubsetFamily,
    is_antichain,
    lym_sum,
    max_antichain_bruteforce,
    prefix_event_probability,
    simulate_prefix_events,
    sperner_bound,
)

for n in range(1, 5):
    print(f"n={n}: largest antichain {max_antichain_bruteforce(n)}, C(n, n//2) = {sperner_bound(n)}")

f = SubsetFamily.of(5, [[0], [1, 2], [1, 3, 4], [2, 3, 4]])
print("antichain:", is_antichain(f), " LYM sum:", lym_sum(f))
print("exact prefix probabilities:", [str(prefix_event_probability(5, len(s))) for s in f.as_lists()])

sim = simulate_prefix_events(f, 200_000, seed=5)
print("simulated:", [round(x, 4) for x in sim.frequencies], " co-firing samples:", sim.cofire)

chain = SubsetFamily.of(3, [[0], [0, 1]])
print("chain co-fires:", simulate_prefix_events(chain, 10_000, seed=5).cofire_fraction)
