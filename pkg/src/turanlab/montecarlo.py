"""Seeded sampling estimators for the closed-form probabilities.

Samples are split into fixed-size shards; shard ``i`` draws from the
substream ``(seed, i)`` and shard counts are summed as integers, so the
result depends only on (inputs, samples, seed, shard_size), never on how
many threads ran the shards.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .clique_shift import Distribution, edge_probability
from .combinatorics import Subset, binomial, check_seed, fraction_str, make_rng, popcount
from .graph import Graph
from .sperner import SubsetFamily, permutation_batch, prefix_masks
from .turan import CoverInstance, check_family

DEFAULT_SHARD = 1 << 17


@dataclass(frozen=True)
class Estimate:
    value: float
    samples: int
    stderr: float
    seed: int
    exact_target: Fraction | None = None

    @classmethod
    def from_count(cls, hits: int, samples: int, seed: int, exact: Fraction | None) -> "Estimate":
        value = hits / samples
        return cls(value, samples, math.sqrt(value * (1 - value) / samples), seed, exact)

    def within(self, sigmas: float = 3.0) -> bool:
        if self.exact_target is None:
            raise ValueError("estimate has no exact target")
        return abs(self.value - float(self.exact_target)) <= sigmas * self.stderr

    def to_json(self) -> dict:
        out = {"estimate": self.value, "stderr": self.stderr, "samples": self.samples, "seed": self.seed}
        if self.exact_target is not None:
            out["exact"] = fraction_str(self.exact_target)
            out["within_3_sigma"] = self.within(3.0)
        return out


def sharded_counts(
    shard: Callable[[np.random.Generator, int], np.ndarray],
    samples: int,
    seed: int,
    width: int = 1,
    shard_size: int = DEFAULT_SHARD,
    threads: int | None = None,
) -> np.ndarray:
    """Sum of ``shard(rng_i, size_i)`` over shards; the split is fixed by ``shard_size`` alone."""
    check_seed(seed)
    if samples < 1:
        raise ValueError(f"need samples >= 1, got {samples}")
    sizes = [shard_size] * (samples // shard_size)
    if samples % shard_size:
        sizes.append(samples % shard_size)

    def run(i: int) -> np.ndarray:
        return np.asarray(shard(make_rng(seed, i), sizes[i]), dtype=np.int64).reshape(width)

    threads = threads or os.cpu_count() or 1
    if threads == 1 or len(sizes) == 1:
        parts = [run(i) for i in range(len(sizes))]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(run, range(len(sizes))))
    total = np.zeros(width, dtype=np.int64)
    for p in parts:
        total += p
    return total


def estimate_edge_probability(
    g: Graph, d: Distribution, samples: int, seed: int, threads: int | None = None
) -> Estimate:
    """Fraction of i.i.d. ordered vertex pairs drawn from d that are edges."""
    if len(d) != g.n:
        raise ValueError(f"distribution has {len(d)} entries, graph has {g.n} vertices")
    exact = edge_probability(g, d)
    adj = np.array([[g.adjacent(i, j) for j in range(g.n)] for i in range(g.n)], dtype=bool).reshape(g.n, g.n)
    probs = np.array([float(x) for x in d.p])
    probs /= probs.sum()

    def shard(rng, size):
        u = rng.choice(g.n, size=size, p=probs)
        v = rng.choice(g.n, size=size, p=probs)
        return [int(adj[u, v].sum())]

    hits = int(sharded_counts(shard, samples, seed, threads=threads)[0])
    return Estimate.from_count(hits, samples, seed, exact)


def estimate_sequential_draw(
    inst: CoverInstance, f: SubsetFamily, samples: int, seed: int, threads: int | None = None
) -> Estimate:
    """Draw k elements without replacement; frequency with which the first l drawn form a member of f."""
    check_family(inst, f)
    exact = Fraction(len(f), binomial(inst.n, inst.l))
    members = np.array(sorted(f.members), dtype=np.uint64)

    def shard(rng, size):
        if inst.l == 0:
            return [size if len(members) else 0]
        # the first l of k draws without replacement are the first l entries of a random ordering
        order = permutation_batch(rng, inst.n, size)[:, : inst.k]
        first = prefix_masks(order[:, : inst.l])[:, inst.l]
        return [int(np.isin(first, members).sum())]

    hits = int(sharded_counts(shard, samples, seed, threads=threads)[0])
    return Estimate.from_count(hits, samples, seed, exact)


def estimate_prefix_event(n: int, subset: Subset, samples: int, seed: int, threads: int | None = None) -> Estimate:
    """Frequency with which ``subset`` fills the first |subset| places of a uniform permutation."""
    if subset.n != n:
        raise ValueError(f"subset lives on [{subset.n}], expected [{n}]")
    if n < 1:
        raise ValueError("need n >= 1")
    a = popcount(subset.bits)
    exact = Fraction(1, binomial(n, a))
    target = np.uint64(subset.bits)

    def shard(rng, size):
        pm = prefix_masks(permutation_batch(rng, n, size))
        return [int((pm[:, a] == target).sum())]

    hits = int(sharded_counts(shard, samples, seed, threads=threads)[0])
    return Estimate.from_count(hits, samples, seed, exact)
