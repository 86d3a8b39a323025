"""Antichains in the subset lattice and the permutation-prefix argument."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

import numpy as np

from .combinatorics import (
    MAX_GROUND,
    CapacityError,
    Subset,
    binomial,
    bits_to_elements,
    check_seed,
    popcount,
)

MAX_ORACLE_N = 4


class FamilyFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class SubsetFamily:
    """Distinct subsets of [n], stored as bitmasks in insertion order."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_GROUND:
            raise CapacityError(f"ground set size {self.n} outside 0..{MAX_GROUND}")
        members = tuple(m.bits if isinstance(m, Subset) else int(m) for m in self.members)
        object.__setattr__(self, "members", members)
        for m in members:
            if m < 0 or m >> self.n:
                raise ValueError(f"member {bits_to_elements(m)} not a subset of [{self.n}]")
        if len(set(members)) != len(members):
            raise ValueError("duplicate members in family")

    @classmethod
    def of(cls, n: int, sets: Iterable[Iterable[int]]) -> "SubsetFamily":
        masks = []
        for s in sets:
            m = 0
            for e in s:
                if not 0 <= e < n:
                    raise ValueError(f"element {e} outside [0, {n})")
                m |= 1 << e
            masks.append(m)
        return cls(n, tuple(masks))

    def __len__(self):
        return len(self.members)

    def subsets(self) -> list[Subset]:
        return [Subset(m, self.n) for m in self.members]

    def as_lists(self) -> list[list[int]]:
        return [bits_to_elements(m) for m in self.members]


def is_antichain(f: SubsetFamily) -> bool:
    """No member strictly contains another."""
    ms = f.members
    for a in range(len(ms)):
        x = ms[a]
        for y in ms[a + 1:]:
            both = x & y
            if both == x or both == y:
                return False
    return True


def sperner_bound(n: int) -> int:
    return binomial(n, n // 2)


def prefix_event_probability(n: int, a: int) -> Fraction:
    """Chance a fixed a-set fills the first a places of a uniform permutation of [n]: 1/C(n, a)."""
    if n < 1 or not 0 <= a <= n:
        raise ValueError(f"need n >= 1 and 0 <= a <= n, got n={n}, a={a}")
    return Fraction(1, binomial(n, a))


def lym_sum(f: SubsetFamily) -> Fraction:
    """Sum over members of 1/C(n, |A|)."""
    return sum((Fraction(1, binomial(f.n, popcount(m))) for m in f.members), Fraction(0))


def _comparable(x: int, y: int) -> bool:
    both = x & y
    return both == x or both == y


def antichains(n: int) -> Iterator[tuple[int, ...]]:
    """Every antichain of subsets of [n] (including the empty one), as bitmask tuples.

    Extends only families that are still antichains, so comparable pairs are
    never carried forward.
    """
    if not 0 <= n <= MAX_ORACLE_N:
        raise CapacityError(f"antichain enumeration supports n <= {MAX_ORACLE_N}, got {n}")
    universe = 1 << n
    chosen: list[int] = []

    def rec(start: int):
        yield tuple(chosen)
        for s in range(start, universe):
            if any(_comparable(s, c) for c in chosen):
                continue
            chosen.append(s)
            yield from rec(s + 1)
            chosen.pop()

    yield from rec(0)


def max_antichain_bruteforce(n: int) -> int:
    """Largest antichain in the subset lattice of [n], by exhaustive search (1 <= n <= 4)."""
    if not 1 <= n <= MAX_ORACLE_N:
        raise CapacityError(f"oracle supports 1 <= n <= {MAX_ORACLE_N}, got {n}")
    return max(len(a) for a in antichains(n))


def permutation_batch(rng: np.random.Generator, n: int, samples: int) -> np.ndarray:
    """``samples`` independent uniform permutations of range(n), one per row."""
    base = np.broadcast_to(np.arange(n, dtype=np.int64), (samples, n))
    return rng.permuted(base, axis=1)


def prefix_masks(perms: np.ndarray) -> np.ndarray:
    """Column t holds the bitmask of the first t entries of each row (t = 0..n)."""
    samples, n = perms.shape
    out = np.zeros((samples, n + 1), dtype=np.uint64)
    bits = np.left_shift(np.uint64(1), perms.astype(np.uint64))
    np.cumsum(bits, axis=1, out=out[:, 1:])
    return out


@dataclass(frozen=True)
class PrefixSimulation:
    samples: int
    hits: tuple[int, ...]
    cofire: int

    @property
    def frequencies(self) -> list[float]:
        return [h / self.samples for h in self.hits]

    @property
    def cofire_fraction(self) -> float:
        return self.cofire / self.samples


def count_prefix_events(members: tuple[int, ...], perms: np.ndarray) -> tuple[np.ndarray, int]:
    pm = prefix_masks(perms)
    fired = np.zeros((perms.shape[0], len(members)), dtype=bool)
    for i, m in enumerate(members):
        fired[:, i] = pm[:, popcount(m)] == np.uint64(m)
    return fired.sum(axis=0), int((fired.sum(axis=1) >= 2).sum())


def simulate_prefix_events(f: SubsetFamily, samples: int, seed: int, shard_size: int = 1 << 17) -> PrefixSimulation:
    """Per-member frequency of 'A fills the first |A| places' over seeded random permutations.

    Also counts samples in which two or more members fire together; for an
    antichain that count is always zero.
    """
    from .montecarlo import sharded_counts

    check_seed(seed)
    if samples < 1:
        raise ValueError(f"need samples >= 1, got {samples}")
    if f.n < 1:
        raise ValueError("need a nonempty ground set")
    k = len(f.members)

    def shard(rng, size):
        hits, co = count_prefix_events(f.members, permutation_batch(rng, f.n, size))
        return np.append(hits.astype(np.int64), co)

    totals = sharded_counts(shard, samples, seed, width=k + 1, shard_size=shard_size)
    return PrefixSimulation(samples, tuple(int(x) for x in totals[:k]), int(totals[k]))


def parse_family(text: str) -> SubsetFamily:
    """First line 'n', then one member per line as space-separated elements; a blank line is the empty set.

    Trailing blank lines at end of file are ignored.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or not lines[0].strip():
        raise FamilyFormatError("missing ground-set size", 1)
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise FamilyFormatError(f"expected an integer, got {lines[0]!r}", 1) from None
    if not 0 <= n <= MAX_GROUND:
        raise FamilyFormatError(f"n={n} outside 0..{MAX_GROUND}", 1)
    masks: list[int] = []
    seen: dict[int, int] = {}
    for lineno, ln in enumerate(lines[1:], start=2):
        m = 0
        for tok in ln.split():
            try:
                e = int(tok)
            except ValueError:
                raise FamilyFormatError(f"bad element {tok!r}", lineno) from None
            if not 0 <= e < n:
                raise FamilyFormatError(f"element {e} outside [0, {n})", lineno)
            if m >> e & 1:
                raise FamilyFormatError(f"element {e} repeated", lineno)
            m |= 1 << e
        if m in seen:
            raise FamilyFormatError(f"duplicate member (first seen on line {seen[m]})", lineno)
        seen[m] = lineno
        masks.append(m)
    return SubsetFamily(n, tuple(masks))


def format_family(f: SubsetFamily) -> str:
    rows = [str(f.n)] + [" ".join(map(str, s)) for s in f.as_lists()]
    return "\n".join(rows) + "\n"
