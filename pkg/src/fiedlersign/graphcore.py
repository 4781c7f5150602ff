"""Simple undirected graphs on vertices 0..n-1 and combinatorial primitives.

Adjacency is stored as one neighbour bitmask per vertex. Graphs are
immutable; every operation returns a new graph. Joins and disjoint unions
place the vertices of the left operand first, then the right operand,
so eigenvector blocks line up with argument order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

VertexSet = tuple  # sorted tuple of vertex indices


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    masks: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.masks) != self.n:
            raise ValueError("mask count must equal n")
        full = (1 << self.n) - 1
        for v, m in enumerate(self.masks):
            if m & ~full:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            if m >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in _bits(m):
                if not self.masks[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    # construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls(n, tuple(masks))

    @classmethod
    def from_adjacency(cls, a) -> "Graph":
        a = np.asarray(a)
        n = a.shape[0]
        return cls.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n) if a[i, j]))

    # basic queries ----------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.masks[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.masks[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.masks) // 2

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.masks)

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    def regularity(self) -> int | None:
        """Common degree r if the graph is r-regular, else None."""
        if self.n == 0:
            return 0
        d = self.degrees
        return d[0] if all(x == d[0] for x in d) else None

    @property
    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        return a

    def laplacian_matrix(self) -> np.ndarray:
        a = self.adjacency_matrix()
        return np.diag(a.sum(axis=1)) - a

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, relabelled 0..len-1 in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [
            (index[u], index[v])
            for u, v in combinations(vertices, 2)
            if self.masks[u] >> v & 1
        ]
        return Graph.from_edges(len(vertices), edges)

    def delete_vertices(self, removed: Iterable[int]) -> "Graph":
        gone = set(removed)
        return self.induced([v for v in range(self.n) if v not in gone])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# families -------------------------------------------------------------


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least 1 vertex")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star(leaves: int) -> Graph:
    """K_{1,leaves}; the centre is vertex 0."""
    if leaves < 1:
        raise ValueError("star needs at least one leaf")
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def cocktail_party(k: int) -> Graph:
    """K_{2k} minus the perfect matching {2i, 2i+1}."""
    if k < 1:
        raise ValueError("cocktail party graph needs k >= 1")
    g = complete(2 * k)
    return Graph.from_edges(2 * k, (e for e in g.edges() if not (e[0] % 2 == 0 and e[1] == e[0] + 1)))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertex (i, j) is labelled i * h.n + j."""
    m = h.n
    edges = []
    for i in range(g.n):
        for a, b in h.edges():
            edges.append((i * m + a, i * m + b))
    for a, b in g.edges():
        for j in range(m):
            edges.append((a * m + j, b * m + j))
    return Graph.from_edges(g.n * m, edges)


def rook(m: int) -> Graph:
    """m x m rook's graph K_m x K_m; cell (i, j) is vertex m*i + j."""
    return cartesian_product(complete(m), complete(m))


def petersen() -> Graph:
    """Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint."""
    pairs = list(combinations(range(5), 2))
    edges = [(i, j) for i, j in combinations(range(10), 2) if not set(pairs[i]) & set(pairs[j])]
    return Graph.from_edges(10, edges)


_FAMILIES = {
    "complete": complete,
    "empty": empty,
    "cycle": cycle,
    "path": path,
    "cocktail": cocktail_party,
    "star": star,
    "rook": rook,
}


def build_named(family: str, param: int) -> Graph:
    """Build a named family member, e.g. ``build_named("cycle", 5)``."""
    try:
        builder = _FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; expected one of {sorted(_FAMILIES)}") from None
    if param < 1:
        raise ValueError("family parameter must be >= 1")
    return builder(param)


# operations -----------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full ^ m ^ (1 << v) for v, m in enumerate(g.masks)))


def disjoint_union(*graphs: Graph) -> Graph:
    masks: list[int] = []
    offset = 0
    for g in graphs:
        masks.extend(m << offset for m in g.masks)
        offset += g.n
    return Graph(offset, tuple(masks))


def join(*graphs: Graph) -> Graph:
    """Join of the arguments; vertex blocks follow argument order."""
    total = sum(g.n for g in graphs)
    full = (1 << total) - 1
    masks: list[int] = []
    offset = 0
    for g in graphs:
        block = ((1 << g.n) - 1) << offset
        masks.extend((m << offset) | (full ^ block) for m in g.masks)
        offset += g.n
    return Graph(total, tuple(masks))


def line_graph(g: Graph) -> Graph:
    es = g.edges()
    adj = [(i, j) for i, j in combinations(range(len(es)), 2) if set(es[i]) & set(es[j])]
    return Graph.from_edges(len(es), adj)


def connected_components(g: Graph) -> list[VertexSet]:
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.masks[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(tuple(_bits(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def cut_vertices(g: Graph) -> VertexSet:
    """Articulation points via DFS low-points."""
    if not is_connected(g):
        raise ValueError("cut vertices are defined here for connected graphs only")
    disc = [-1] * g.n
    low = [0] * g.n
    cuts: set[int] = set()
    timer = 0
    # iterative DFS: stack of (vertex, parent, neighbour iterator)
    disc[0] = low[0] = timer
    stack = [(0, -1, iter(g.neighbors(0)))]
    root_children = 0
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                timer += 1
                disc[w] = low[w] = timer
                stack.append((w, v, iter(g.neighbors(w))))
                if v == 0:
                    root_children += 1
                advanced = True
                break
            if w != parent:
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if stack:
            u = stack[-1][0]
            low[u] = min(low[u], low[v])
            if u != 0 and low[v] >= disc[u]:
                cuts.add(u)
    if root_children > 1:
        cuts.add(0)
    return tuple(sorted(cuts))


def _max_vertex_disjoint_paths(g: Graph, s: int, t: int) -> int:
    # split each vertex v into v_in = 2v, v_out = 2v+1 with unit capacity;
    # original edges become infinite-capacity arcs out->in both ways
    big = g.n + 1
    cap: dict[tuple[int, int], int] = {}
    adj: list[list[int]] = [[] for _ in range(2 * g.n)]

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            adj[a].append(b)
            adj[b].append(a)
            cap.setdefault((b, a), 0)
        cap[(a, b)] = cap.get((a, b), 0) + c

    for v in range(g.n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges():
        arc(2 * u + 1, 2 * v, big)
        arc(2 * v + 1, 2 * u, big)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        prev = {source: source}
        queue = deque([source])
        while queue and sink not in prev:
            a = queue.popleft()
            for b in adj[a]:
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            return flow
        b = sink
        while b != source:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """v(G): n-1 for K_n, otherwise the minimum vertex cut size."""
    if g.n < 2:
        raise ValueError("vertex connectivity needs at least 2 vertices")
    if g.is_complete:
        return g.n - 1
    if not is_connected(g):
        return 0
    best = g.n - 1
    for s, t in combinations(range(g.n), 2):
        if not g.has_edge(s, t):
            best = min(best, _max_vertex_disjoint_paths(g, s, t))
    return best


def find_induced_c4(g: Graph) -> tuple[int, int, int, int] | None:
    """First induced 4-cycle (a, b, c, d) in cycle order, or None."""
    for quad in combinations(range(g.n), 4):
        a, b, c, d = quad
        for order in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            w, x, y, z = order
            if (
                g.has_edge(w, x) and g.has_edge(x, y) and g.has_edge(y, z) and g.has_edge(z, w)
                and not g.has_edge(w, y) and not g.has_edge(x, z)
            ):
                return order
    return None


def is_cocktail_party(g: Graph) -> int | None:
    """k if g is K_{2k} minus a perfect matching, else None."""
    if g.n == 0 or g.n % 2:
        return None
    full = (1 << g.n) - 1
    partner = []
    for v, m in enumerate(g.masks):
        non = full ^ m ^ (1 << v)
        if non.bit_count() != 1:
            return None
        partner.append(non.bit_length() - 1)
    if any(partner[partner[v]] != v for v in range(g.n)):
        return None
    return g.n // 2


def clique_number(g: Graph) -> int:
    """Exact clique number by Bron-Kerbosch with pivoting."""
    best = 0

    def expand(size: int, cand: int, excl: int) -> None:
        nonlocal best
        if not cand and not excl:
            best = max(best, size)
            return
        if size + cand.bit_count() <= best:
            return
        pivot = max(_bits(cand | excl), key=lambda u: (cand & g.masks[u]).bit_count())
        for v in list(_bits(cand & ~g.masks[pivot])):
            expand(size + 1, cand & g.masks[v], excl & g.masks[v])
            cand &= ~(1 << v)
            excl |= 1 << v

    if g.n:
        expand(0, (1 << g.n) - 1, 0)
    return best


def find_matching_of_size_two(g: Graph) -> tuple[tuple[int, int], tuple[int, int]] | None:
    es = g.edges()
    for e, f in combinations(es, 2):
        if not set(e) & set(f):
            return e, f
    return None


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking isomorphism test with degree pruning, meant for small n."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees) != sorted(h.degrees):
        return False
    n = g.n
    order = sorted(range(n), key=lambda v: -g.degrees[v])
    mapping = [-1] * n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used >> w & 1 or h.degrees[w] != g.degrees[v]:
                continue
            if all(g.has_edge(v, order[j]) == h.has_edge(w, mapping[order[j]]) for j in range(i)):
                mapping[v] = w
                used |= 1 << w
                if extend(i + 1):
                    return True
                used &= ~(1 << w)
                mapping[v] = -1
        return False

    return extend(0)
