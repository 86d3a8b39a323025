"""Mass-shifting dynamics on vertex distributions, in exact arithmetic.

Two vertices are drawn independently from a distribution ``p`` on the
vertices; the edge-hit probability is the chance the ordered pair is an
edge.  Moving all mass from one of two non-adjacent supported vertices onto
the one with the larger neighbour mass never lowers that probability, and
the process ends with the support on a clique.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .combinatorics import bits_to_elements, check_seed, fraction_str, random_permutation, derive_seed
from .graph import Graph


class InvalidDistribution(ValueError):
    pass


class NotCliqueSupported(ValueError):
    pass


@dataclass(frozen=True)
class Distribution:
    """Exact probability vector over the vertices of a graph."""

    p: tuple[Fraction, ...]

    def __post_init__(self):
        p = tuple(Fraction(x) for x in self.p)
        object.__setattr__(self, "p", p)
        if any(x < 0 for x in p):
            raise InvalidDistribution(f"negative mass in {[str(x) for x in p]}")
        if sum(p, Fraction(0)) != 1:
            raise InvalidDistribution(f"masses sum to {sum(p, Fraction(0))}, not 1")

    @classmethod
    def uniform(cls, n: int) -> "Distribution":
        if n < 1:
            raise InvalidDistribution("no uniform distribution on zero vertices")
        return cls((Fraction(1, n),) * n)

    @classmethod
    def uniform_on(cls, n: int, support: Sequence[int]) -> "Distribution":
        support = set(support)
        q = Fraction(1, len(support))
        return cls(tuple(q if i in support else Fraction(0) for i in range(n)))

    @classmethod
    def point(cls, n: int, i: int) -> "Distribution":
        return cls.uniform_on(n, [i])

    def __len__(self):
        return len(self.p)

    def __getitem__(self, i):
        return self.p[i]

    def support(self) -> list[int]:
        return [i for i, x in enumerate(self.p) if x > 0]

    def to_json(self) -> list[str]:
        return [fraction_str(x) for x in self.p]


@dataclass(frozen=True)
class ShiftStep:
    donor: int
    receiver: int
    gain: Fraction

    def to_json(self) -> dict:
        return {
            "donor": self.donor,
            "receiver": self.receiver,
            "gain_num": self.gain.numerator,
            "gain_den": self.gain.denominator,
        }


@dataclass(frozen=True)
class ShiftTrace:
    steps: tuple[ShiftStep, ...]
    final: Distribution
    start: Distribution = field(repr=False, default=None)

    def support(self) -> list[int]:
        return self.final.support()

    def to_json(self) -> dict:
        return {"steps": [s.to_json() for s in self.steps], "final": self.final.to_json()}


def _check(g: Graph, d: Distribution):
    if len(d) != g.n:
        raise InvalidDistribution(f"distribution has {len(d)} entries, graph has {g.n} vertices")


def neighbor_mass(g: Graph, d: Distribution, i: int) -> Fraction:
    """Total probability on the neighbours of vertex i."""
    _check(g, d)
    if not 0 <= i < g.n:
        raise IndexError(f"vertex {i} not in graph on {g.n} vertices")
    return sum((d.p[k] for k in bits_to_elements(g.adj[i])), Fraction(0))


def edge_probability(g: Graph, d: Distribution) -> Fraction:
    """P({u,v} in E) for u, v drawn independently from d, i.e. the sum over ordered edges."""
    _check(g, d)
    return sum((d.p[i] * neighbor_mass(g, d, i) for i in range(g.n) if d.p[i]), Fraction(0))


def _canonical_pair(g: Graph, d: Distribution) -> tuple[int, int] | None:
    supp = d.support()
    for a, i in enumerate(supp):
        for j in supp[a + 1:]:
            if not g.adjacent(i, j):
                return i, j
    return None


def shift_step(g: Graph, d: Distribution) -> tuple[Distribution, ShiftStep] | None:
    """One shift on the lexicographically first non-adjacent supported pair.

    Returns None when the support is already a clique.  The step's ``gain``
    is the exact increase in :func:`edge_probability`; with ordered draws that
    is twice ``p_donor * (s_receiver - s_donor)``.
    """
    _check(g, d)
    pair = _canonical_pair(g, d)
    if pair is None:
        return None
    i, j = pair
    si, sj = neighbor_mass(g, d, i), neighbor_mass(g, d, j)
    if si >= sj:
        receiver, donor, s_r, s_d = i, j, si, sj
    else:
        receiver, donor, s_r, s_d = j, i, sj, si
    p = list(d.p)
    gain = 2 * p[donor] * (s_r - s_d)
    p[receiver] += p[donor]
    p[donor] = Fraction(0)
    return Distribution(tuple(p)), ShiftStep(donor, receiver, gain)


def run_to_clique(g: Graph, d0: Distribution | None = None) -> ShiftTrace:
    """Shift until no two non-adjacent vertices carry mass (at most n-1 steps)."""
    d = Distribution.uniform(g.n) if d0 is None else d0
    _check(g, d)
    start = d
    steps = []
    while True:
        out = shift_step(g, d)
        if out is None:
            break
        d, step = out
        steps.append(step)
    return ShiftTrace(tuple(steps), d, start)


def uniformize_on_support(g: Graph, d: Distribution) -> tuple[Distribution, Fraction]:
    """Spread mass evenly over a clique support; the edge probability becomes 1 - 1/|Q|."""
    _check(g, d)
    supp = d.support()
    if not g.is_clique(supp):
        raise NotCliqueSupported(f"support {supp} is not a clique")
    u = Distribution.uniform_on(g.n, supp)
    value = 1 - Fraction(1, len(supp))
    assert edge_probability(g, u) == value
    return u, value


def restart_profile(n: int) -> tuple[Fraction, ...]:
    """(1/2, 1/4, ..., 1/2^(n-1), 1/2^(n-1)): geometric weights summing to exactly 1."""
    if n == 1:
        return (Fraction(1),)
    head = tuple(Fraction(1, 2 ** (i + 1)) for i in range(n - 1))
    return head + (Fraction(1, 2 ** (n - 1)),)


def restart_distribution(n: int, seed: int, restart: int) -> Distribution:
    perm = random_permutation(n, int(derive_seed(seed, restart).generate_state(1, "uint64")[0]))
    profile = restart_profile(n)
    p = [Fraction(0)] * n
    for rank, v in enumerate(perm):
        p[v] = profile[rank]
    return Distribution(tuple(p))


def best_clique(g: Graph, restarts: int, seed: int) -> tuple[list[int], int]:
    """Largest final support over seeded restarts, with the restart index that found it.

    Ties go to the earliest restart, so the answer does not depend on
    evaluation order.
    """
    check_seed(seed)
    if restarts < 1:
        raise ValueError(f"need restarts >= 1, got {restarts}")
    if g.n == 0:
        return [], 0
    best: tuple[int, int] | None = None
    best_support: list[int] = []
    for r in range(restarts):
        supp = run_to_clique(g, restart_distribution(g.n, seed, r)).support()
        key = (len(supp), -r)
        if best is None or key > best:
            best, best_support = key, supp
    return best_support, -best[1]


def clique_lower_bound(g: Graph, restarts: int, seed: int) -> int:
    """Size of the largest clique reached by the shifting dynamics; never exceeds omega(g)."""
    return len(best_clique(g, restarts, seed)[0])
