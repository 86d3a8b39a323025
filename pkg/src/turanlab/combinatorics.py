"""Exact integer/rational primitives, bitmask subsets and seeded randomness."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

MAX_GROUND = 64
SEED_MASK = (1 << 64) - 1
DEFAULT_SEED = 0xC0FFEE

# Exact probabilities everywhere are plain ``Fraction``s: arbitrary precision,
# always stored in lowest terms with a positive denominator.
Rational = Fraction


class CapacityError(ValueError):
    """Raised when an input exceeds a documented size guard."""


def binomial(n: int, r: int) -> int:
    """C(n, r), zero outside 0 <= r <= n."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if r < 0 or r > n:
        return 0
    return math.comb(n, r)


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits_to_elements(bits: int) -> list[int]:
    out = []
    i = 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return out


def elements_to_bits(elements) -> int:
    bits = 0
    for e in elements:
        if e < 0:
            raise ValueError(f"negative element {e}")
        bits |= 1 << e
    return bits


@dataclass(frozen=True, order=True)
class Subset:
    """A subset of {0, ..., n-1} held as a bitmask."""

    bits: int
    n: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_GROUND:
            raise CapacityError(f"ground set size {self.n} outside 0..{MAX_GROUND}")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bitmask {self.bits:#x} has elements outside [0, {self.n})")

    @classmethod
    def of(cls, elements, n: int) -> "Subset":
        return cls(elements_to_bits(elements), n)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(bits_to_elements(self.bits))

    def __contains__(self, item: int) -> bool:
        return 0 <= item < self.n and bool(self.bits >> item & 1)

    def issubset(self, other: "Subset") -> bool:
        return self.bits & other.bits == self.bits

    def elements(self) -> list[int]:
        return bits_to_elements(self.bits)


def colex_masks(n: int, l: int) -> Iterator[int]:
    """Bitmasks of all l-subsets of [n] in increasing integer (colex) order."""
    if not 0 <= l <= n:
        raise ValueError(f"need 0 <= l <= n, got n={n}, l={l}")
    if n > MAX_GROUND:
        raise CapacityError(f"ground set size {n} exceeds {MAX_GROUND}")
    if l == 0:
        yield 0
        return
    x = (1 << l) - 1
    limit = 1 << n
    while x < limit:
        yield x
        # Gosper's hack: next integer with the same popcount
        c = x & -x
        r = x + c
        x = (((r ^ x) >> 2) // c) | r


def enumerate_subsets(n: int, l: int) -> list[Subset]:
    """All l-subsets of [n] in colexicographic order."""
    return [Subset(m, n) for m in colex_masks(n, l)]


def check_seed(seed: int) -> int:
    if not isinstance(seed, (int, np.integer)) or isinstance(seed, bool):
        raise TypeError(f"seed must be an integer, got {type(seed).__name__}")
    seed = int(seed)
    if not 0 <= seed <= SEED_MASK:
        raise ValueError(f"seed {seed} is not a 64-bit unsigned integer")
    return seed


def derive_seed(seed: int, *keys: int) -> np.random.SeedSequence:
    """Independent substream for (seed, keys...), stable across runs and platforms."""
    return np.random.SeedSequence(check_seed(seed), spawn_key=tuple(int(k) for k in keys))


def make_rng(seed: int, *keys: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(derive_seed(seed, *keys)))


def random_permutation(n: int, seed: int) -> list[int]:
    """Uniform permutation of 0..n-1, fully determined by ``seed``."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > MAX_GROUND:
        raise CapacityError(f"n={n} exceeds {MAX_GROUND}")
    rng = make_rng(seed)
    perm = list(range(n))
    # explicit Fisher-Yates so the stream-to-permutation map is pinned here
    for i in range(n - 1, 0, -1):
        j = int(rng.integers(0, i + 1))
        perm[i], perm[j] = perm[j], perm[i]
    return perm


def fraction_str(x: Fraction) -> str:
    """'p/q' form used in every JSON payload (integers keep the '/1')."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def ceil_fraction(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def is_probability_vector(p: Sequence[Fraction]) -> bool:
    return all(isinstance(x, Fraction) and x >= 0 for x in p) and sum(p, Fraction(0)) == 1
