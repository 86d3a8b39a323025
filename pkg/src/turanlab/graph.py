"""Bitset graphs and the brute-force oracles behind Mantel's bound."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .combinatorics import MAX_GROUND, CapacityError, bits_to_elements, popcount

MAX_TRIANGLE_FREE_N = 7
MAX_CLIQUE_N = 20


class GraphFormatError(ValueError):
    """Malformed edge-list input; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on n <= 64 vertices; adj[i] is the neighbour bitmask of i."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_GROUND:
            raise CapacityError(f"graph on {self.n} vertices; limit is {MAX_GROUND}")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        for i, row in enumerate(self.adj):
            if row < 0 or row >> self.n:
                raise ValueError(f"row {i} references vertices outside the graph")
            if row >> i & 1:
                raise ValueError(f"self-loop at vertex {i}")
            for j in bits_to_elements(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << i) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    def degree(self, i: int) -> int:
        return popcount(self.adj[i])

    def degrees(self) -> list[int]:
        return [popcount(row) for row in self.adj]

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in bits_to_elements(self.adj[i] >> (i + 1) << (i + 1))]

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.adjacent(a, b) for a, b in combinations(vs, 2))

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(self.adj)))


def mantel_bound(n: int) -> int:
    """floor(n^2 / 4), the most edges a triangle-free graph on n vertices can have."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    return n * n // 4


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("max_degree of the graph with no vertices is undefined")
    return max(g.degrees())


def has_triangle(g: Graph) -> bool:
    for i, j in g.edges():
        if g.adj[i] & g.adj[j]:
            return True
    return False


def complete_bipartite(n: int) -> Graph:
    """K_{ceil(n/2), floor(n/2)}: parts {0..a-1} and {a..n-1}."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    a = (n + 1) // 2
    left = (1 << a) - 1
    right = ((1 << n) - 1) ^ left
    return Graph(n, tuple(right if i < a else left for i in range(n)))


def vertex_pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def graph_from_edge_mask(n: int, mask: int, pairs: list[tuple[int, int]] | None = None) -> Graph:
    """Graph whose edge set is bit t of ``mask`` <-> pairs[t] (pairs in lexicographic order)."""
    if pairs is None:
        pairs = vertex_pairs(n)
    adj = [0] * n
    t = 0
    while mask:
        if mask & 1:
            u, v = pairs[t]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        mask >>= 1
        t += 1
    return Graph(n, tuple(adj))


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on n vertices (2^C(n,2) of them)."""
    pairs = vertex_pairs(n)
    for mask in range(1 << len(pairs)):
        yield graph_from_edge_mask(n, mask, pairs)


def _triangle_free_adjacencies(n: int) -> Iterator[list[int]]:
    pairs = vertex_pairs(n)
    m = len(pairs)
    adj = [0] * n

    def rec(t: int):
        if t == m:
            yield adj
            return
        yield from rec(t + 1)
        u, v = pairs[t]
        # the edge closes a triangle iff u and v already share a neighbour
        if not adj[u] & adj[v]:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            yield from rec(t + 1)
            adj[u] ^= 1 << v
            adj[v] ^= 1 << u

    yield from rec(0)


def triangle_free_graphs(n: int) -> Iterator[Graph]:
    """Every labelled triangle-free graph on n vertices, by pruned edge-mask search."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    for adj in _triangle_free_adjacencies(n):
        yield Graph(n, tuple(adj))


def brute_force_max_triangle_free(n: int) -> int:
    """Largest edge count over all triangle-free labelled graphs on n vertices (n <= 7)."""
    if not 1 <= n <= MAX_TRIANGLE_FREE_N:
        raise CapacityError(f"exhaustive search supports 1 <= n <= {MAX_TRIANGLE_FREE_N}, got {n}")
    best = 0
    for adj in _triangle_free_adjacencies(n):
        e = sum(popcount(row) for row in adj) // 2
        if e > best:
            best = e
    return best


def max_clique_vertices(g: Graph) -> list[int]:
    """A maximum clique, by bitset branch and bound (n <= 20)."""
    if g.n > MAX_CLIQUE_N:
        raise CapacityError(f"max-clique oracle supports n <= {MAX_CLIQUE_N}, got {g.n}")
    best = 0
    best_set = 0

    def expand(clique: int, size: int, cand: int):
        nonlocal best, best_set
        if cand == 0:
            if size > best:
                best, best_set = size, clique
            return
        while cand:
            if size + popcount(cand) <= best:
                return
            v = cand.bit_length() - 1
            cand ^= 1 << v
            expand(clique | 1 << v, size + 1, cand & g.adj[v])

    expand(0, 0, (1 << g.n) - 1)
    return bits_to_elements(best_set)


def brute_force_max_clique(g: Graph) -> int:
    """Clique number omega(g); 0 for the vertexless graph."""
    return len(max_clique_vertices(g))


def parse_edge_list(text: str) -> Graph:
    """Parse the 'n m' header plus m lines of 'u v' (0-based)."""
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise GraphFormatError("missing 'n m' header", 1)
    header = lines[0].split()
    try:
        n, m = (int(x) for x in header)
    except ValueError:
        raise GraphFormatError(f"expected 'n m', got {lines[0]!r}", 1) from None
    if not 0 <= n <= MAX_GROUND:
        raise GraphFormatError(f"n={n} outside 0..{MAX_GROUND}", 1)
    if m < 0:
        raise GraphFormatError(f"negative edge count {m}", 1)
    body = [(k + 2, ln) for k, ln in enumerate(lines[1:]) if ln.strip()]
    if len(body) != m:
        raise GraphFormatError(f"header promises {m} edges, found {len(body)}")
    seen = set()
    edges = []
    for lineno, ln in body:
        parts = ln.split()
        try:
            u, v = (int(x) for x in parts)
        except ValueError:
            raise GraphFormatError(f"expected 'u v', got {ln.strip()!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"endpoint out of range in {ln.strip()!r}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop {u} {v}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {u} {v}", lineno)
        seen.add(key)
        edges.append(key)
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"
