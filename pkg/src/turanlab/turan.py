"""Turán covering numbers T(n, k, l): predicate, bounds and an exact solver.

A family of l-subsets of [n] *covers* when every k-subset contains one of
its members.  T(n, k, l) is the size of the smallest covering family.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .combinatorics import MAX_GROUND, CapacityError, binomial, ceil_fraction, colex_masks, fraction_str, popcount
from .sperner import SubsetFamily

MAX_ENUM = 10**6
DEFAULT_NODE_BUDGET = 10**7


@dataclass(frozen=True)
class CoverInstance:
    n: int
    k: int
    l: int

    def __post_init__(self):
        if not (self.n >= self.k >= self.l >= 0):
            raise ValueError(f"need n >= k >= l >= 0, got n={self.n}, k={self.k}, l={self.l}")
        if self.n > MAX_GROUND:
            raise CapacityError(f"n={self.n} exceeds {MAX_GROUND}")

    def check_capacity(self):
        if binomial(self.n, self.l) > MAX_ENUM or binomial(self.n, self.k) > MAX_ENUM:
            raise CapacityError(f"instance {self} exceeds the {MAX_ENUM} enumeration guard")


@dataclass(frozen=True)
class CoverResult:
    instance: CoverInstance
    family: SubsetFamily
    lower_bound: Fraction
    optimal: bool
    nodes_explored: int

    @property
    def size(self) -> int:
        return len(self.family)

    def to_json(self) -> dict:
        inst = self.instance
        return {
            "n": inst.n,
            "k": inst.k,
            "l": inst.l,
            "size": self.size,
            "lower_bound": fraction_str(self.lower_bound),
            "optimal": self.optimal,
            "family": self.family.as_lists(),
            "nodes": self.nodes_explored,
        }


def check_family(inst: CoverInstance, f: SubsetFamily):
    if f.n != inst.n:
        raise ValueError(f"family lives on [{f.n}], instance on [{inst.n}]")
    for m in f.members:
        if popcount(m) != inst.l:
            raise ValueError(f"member of size {popcount(m)} in a family of {inst.l}-subsets")


def is_covering(inst: CoverInstance, f: SubsetFamily) -> bool:
    """True iff every k-subset of [n] contains some member of f."""
    check_family(inst, f)
    inst.check_capacity()
    members = f.members
    for kset in colex_masks(inst.n, inst.k):
        if not any(m & kset == m for m in members):
            return False
    return True


def turan_lower_bound(inst: CoverInstance) -> tuple[Fraction, int]:
    """C(n,l)/C(k,l) exactly, and its ceiling."""
    b = Fraction(binomial(inst.n, inst.l), binomial(inst.k, inst.l))
    return b, ceil_fraction(b)


def sequential_draw_probability(inst: CoverInstance, f: SubsetFamily) -> Fraction:
    """Chance that the first l of k elements drawn without replacement form a member of f: |f|/C(n,l)."""
    check_family(inst, f)
    return Fraction(len(f), binomial(inst.n, inst.l))


def conditional_bound_check(inst: CoverInstance, f: SubsetFamily) -> bool:
    """For a covering family, P(first l draws land in f) >= 1/C(k,l)."""
    if not is_covering(inst, f):
        raise ValueError("conditional bound only applies to covering families")
    return sequential_draw_probability(inst, f) >= Fraction(1, binomial(inst.k, inst.l))


@dataclass
class _Incidence:
    blocks: list[int]
    ksets: list[int]
    cover: list[int] = field(default_factory=list)  # block index -> bitmask of k-set indices
    cands: list[int] = field(default_factory=list)  # k-set index -> bitmask of block indices


def _incidence(inst: CoverInstance) -> _Incidence:
    inst.check_capacity()
    blocks = list(colex_masks(inst.n, inst.l))
    ksets = list(colex_masks(inst.n, inst.k))
    bindex = {b: i for i, b in enumerate(blocks)}
    cover = [0] * len(blocks)
    cands = [0] * len(ksets)
    for t, ks in enumerate(ksets):
        for sub in colex_masks(inst.k, inst.l):
            # map the l-subset of positions within ks onto actual elements
            elems = [e for e in range(inst.n) if ks >> e & 1]
            m = 0
            for pos in range(inst.k):
                if sub >> pos & 1:
                    m |= 1 << elems[pos]
            b = bindex[m]
            cover[b] |= 1 << t
            cands[t] |= 1 << b
    return _Incidence(blocks, ksets, cover, cands)


def _greedy_indices(inc: _Incidence) -> list[int]:
    uncovered = (1 << len(inc.ksets)) - 1
    chosen = []
    while uncovered:
        best, best_gain = -1, 0
        for b, cv in enumerate(inc.cover):
            gain = popcount(cv & uncovered)
            if gain > best_gain:
                best, best_gain = b, gain
        chosen.append(best)
        uncovered &= ~inc.cover[best]
    return chosen


def greedy_cover(inst: CoverInstance) -> SubsetFamily:
    """Add the block covering the most uncovered k-sets until all are covered (ties: colex first)."""
    inc = _incidence(inst)
    return SubsetFamily(inst.n, tuple(inc.blocks[b] for b in _greedy_indices(inc)))


class _BudgetExhausted(Exception):
    pass


def _bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def _blocks_needed(cover: list[int], uncovered: int, allowed: int) -> int:
    """Fewest allowed blocks whose individual coverages could add up to the uncovered count."""
    remaining = popcount(uncovered)
    gains = sorted((popcount(cover[b] & uncovered) for b in _bits(allowed)), reverse=True)
    need = 0
    for g in gains:
        if remaining <= 0 or g == 0:
            break
        remaining -= g
        need += 1
    return need if remaining <= 0 else len(gains) + 1


def solve_exact(inst: CoverInstance, node_budget: int = DEFAULT_NODE_BUDGET) -> CoverResult:
    """Smallest covering family by branch and bound.

    Branches on the uncovered k-set with the fewest remaining candidate
    blocks; a block rejected in one branch stays forbidden in its later
    siblings.  Nodes are pruned when the chosen count plus
    the fewest blocks whose coverages sum to the uncovered count cannot beat the incumbent.
    At the root every candidate inside the first k-set is equivalent under
    relabelling, so only one is tried.
    """
    inc = _incidence(inst)
    bound, ceil_bound = turan_lower_bound(inst)
    incumbent = _greedy_indices(inc)
    best = [len(incumbent), sorted(incumbent)]
    nodes = 0
    nblocks = len(inc.blocks)
    cover, cands = inc.cover, inc.cands

    def search(uncovered: int, allowed: int, chosen: list[int], root: bool):
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise _BudgetExhausted
        if uncovered == 0:
            if len(chosen) < best[0]:
                best[0], best[1] = len(chosen), sorted(chosen)
            return
        if len(chosen) + 1 >= best[0]:
            return
        pivot, pivot_cands, fewest = -1, 0, nblocks + 1
        for t in _bits(uncovered):
            c = cands[t] & allowed
            cnt = popcount(c)
            if cnt < fewest:
                pivot, pivot_cands, fewest = t, c, cnt
                if cnt <= 1:
                    break
        if fewest == 0:
            return
        if len(chosen) + _blocks_needed(cover, uncovered, allowed) >= best[0]:
            return
        order = sorted(_bits(pivot_cands), key=lambda b: (-popcount(cover[b] & uncovered), b))
        if root:
            order = order[:1]
        for b in order:
            chosen.append(b)
            search(uncovered & ~cover[b], allowed, chosen, False)
            chosen.pop()
            allowed &= ~(1 << b)
            if best[0] <= ceil_bound:
                return

    optimal = True
    if best[0] > ceil_bound:
        try:
            search((1 << len(inc.ksets)) - 1, (1 << nblocks) - 1, [], True)
        except _BudgetExhausted:
            optimal = False
            nodes = node_budget
    family = SubsetFamily(inst.n, tuple(inc.blocks[b] for b in best[1]))
    return CoverResult(inst, family, bound, optimal, nodes)
