"""Graph corpora: exhaustive small graphs, regular graphs, random samples."""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

import numpy as np

from .graphcore import Graph, are_isomorphic, complement, is_connected, join
from .graphio import read_graph6_lines
from .spectra import alpha_value


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on n vertices, one per edge bitmask."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[b] for b in range(len(pairs)) if mask >> b & 1])


def exhaustive(max_n: int = 6, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from all_graphs(n)


def connected_noncomplete(max_n: int = 6) -> Iterator[Graph]:
    for g in exhaustive(max_n, 2):
        if not g.is_complete and is_connected(g):
            yield g


def load_corpus(path: str) -> list[Graph]:
    with open(path) as fh:
        return list(read_graph6_lines(fh))


def _regular_labelled(n: int, r: int) -> Iterator[Graph]:
    """Labelled r-regular graphs on n vertices with N(0) = {1..r}."""
    if r == 0:
        yield Graph.from_edges(n, [])
        return
    adj = [set() for _ in range(n)]

    def add(u, v):
        adj[u].add(v)
        adj[v].add(u)

    def drop(u, v):
        adj[u].discard(v)
        adj[v].discard(u)

    for v in range(1, r + 1):
        add(0, v)

    def fill(v: int) -> Iterator[None]:
        if v == n:
            yield None
            return
        need = r - len(adj[v])
        if need < 0:
            return
        cand = [u for u in range(v + 1, n) if len(adj[u]) < r]
        if need > len(cand):
            return
        for chosen in combinations(cand, need):
            for u in chosen:
                add(v, u)
            yield from fill(v + 1)
            for u in chosen:
                drop(v, u)

    seen = set()
    for _ in fill(1):
        key = frozenset((u, w) for u in range(n) for w in adj[u] if u < w)
        if key not in seen:
            seen.add(key)
            yield Graph.from_edges(n, key)


def _invariant(g: Graph) -> tuple:
    a = g.adjacency_matrix()
    a2 = a @ a
    return (g.edge_count, is_connected(g), int(np.trace(a2 @ a)), tuple(np.round(np.linalg.eigvalsh(a), 6)))


def regular_graphs(n: int, r: int) -> list[Graph]:
    """All r-regular graphs on n vertices up to isomorphism (small n only)."""
    if r < 0 or r >= n or (n * r) % 2:
        return []
    if 2 * r > n - 1:
        return [complement(g) for g in regular_graphs(n, n - 1 - r)]
    buckets: dict[tuple, list[Graph]] = {}
    for g in _regular_labelled(n, r):
        bucket = buckets.setdefault(_invariant(g), [])
        if not any(are_isomorphic(g, h) for h in bucket):
            bucket.append(g)
    return [g for bucket in buckets.values() for g in bucket]


def connected_regular(max_n: int = 8, min_n: int = 2) -> list[Graph]:
    out = []
    for n in range(min_n, max_n + 1):
        for r in range(n):
            out.extend(g for g in regular_graphs(n, r) if is_connected(g))
    return out


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_connected_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    while True:
        g = random_graph(n, p, rng)
        if is_connected(g):
            return g


def random_join_with_premise(rng: np.random.Generator, max_part: int = 6) -> tuple[Graph, int]:
    """A join G_1 v G_2 with alpha(G_2) > alpha(G) - |V(G_1)|.

    Returns (G, |V(G_1)|); the G_2 vertices are the labels after that.
    """
    while True:
        n1 = int(rng.integers(1, max_part + 1))
        n2 = int(rng.integers(1, max_part + 1))
        g1 = random_graph(n1, float(rng.uniform(0.1, 0.9)), rng)
        g2 = random_graph(n2, float(rng.uniform(0.1, 0.9)), rng)
        g = join(g1, g2)
        if g.n >= 3 and alpha_value(g2) > alpha_value(g) - n1 + 1e-7:
            return g, n1

