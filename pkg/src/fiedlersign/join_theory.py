"""Join structure of graphs whose Fiedler vectors can isolate a single vertex.

A connected non-complete graph has a Fiedler vector with exactly one vertex
on one side (i(G) = 1) precisely when it splits as a join G_1 v G_2 where
G_1 has order n - delta and an isolated vertex. Iterating that split gives
the k-join decomposition handled here: elementary graphs G_1..G_k of equal
order, each with isolated vertices, plus an optional combined graph G'.

Every decision below is made twice, once from eigenvalues and once from the
complement-component structure, and a disagreement raises
InconsistencyError.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import InconsistencyError
from .graphcore import (
    Graph,
    complement,
    complete,
    connected_components,
    disjoint_union,
    empty,
    is_connected,
    join,
)
from .spectra import (
    algebraic_connectivity,
    alpha_value,
    fiedler_residual,
    sign_profile,
)

TOL = 1e-7


# -- factorisation -------------------------------------------------------


def join_factor_sets(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the join factors, i.e. the components of the complement."""
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    return connected_components(complement(g))


def join_factorization(g: Graph) -> list[Graph]:
    return [g.induced(s) for s in join_factor_sets(g)]


def _is_join_of(g: Graph, parts: list[tuple[int, ...]]) -> bool:
    owner = {}
    for i, part in enumerate(parts):
        for v in part:
            owner[v] = i
    if sorted(owner) != list(range(g.n)):
        return False
    return all(
        g.has_edge(u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if owner[u] != owner[v]
    )


# -- certificates --------------------------------------------------------


@dataclass
class Certificate:
    """A verdict together with the evidence needed to re-check it.

    ``checks`` maps a predicate name to a zero-argument callable; validate()
    runs them all against the stored witness without repeating the
    decision procedure.
    """

    verdict: str
    witness: object
    checks: dict[str, Callable[[], bool]] = field(default_factory=dict)

    def validate(self) -> dict[str, bool]:
        return {name: bool(fn()) for name, fn in self.checks.items()}

    def is_valid(self) -> bool:
        return all(self.validate().values())


def _isolated_in(g: Graph, part) -> list[int]:
    s = set(part)
    return [v for v in part if not any(u in s for u in g.neighbors(v))]


def _single_split(g: Graph):
    """Structural test for i(G) = 1 on a connected non-complete graph.

    Returns (G_1 vertex set, isolated vertex v, G_2 vertex set) for the first
    complement component of order n - delta with an isolated vertex whose
    complement G_2 satisfies alpha(G_2) >= 2 delta - n, else None.
    """
    n, delta = g.n, g.min_degree
    factors = join_factor_sets(g)
    for f in factors:
        if len(f) != n - delta:
            continue
        iso = _isolated_in(g, f)
        if not iso:
            continue
        rest = sorted(set(range(n)) - set(f))
        if alpha_value(g.induced(rest)) >= 2 * delta - n - TOL:
            return tuple(f), iso[0], tuple(rest)
    return None


def _split_vector(n: int, g1, v: int) -> np.ndarray:
    x = np.zeros(n)
    for u in g1:
        x[u] = 1.0
    x[v] = -(len(g1) - 1.0)
    return x


def _vector_checks(g: Graph, x: np.ndarray, alpha: float, imbalance: int) -> dict:
    return {
        "eigenvector": lambda: fiedler_residual(g, x, alpha) <= 1e-8 * (1 + g.n),
        "orthogonal_to_ones": lambda: abs(x.sum()) <= 1e-8 * (1 + np.abs(x).sum()),
        "imbalance": lambda: sign_profile(x).imbalance == imbalance,
    }


def decide_i01(g: Graph) -> Certificate:
    """Decide whether i(G) is 0, 1, or at least 2.

    Verdicts are "i=0", "i=1" and "i>=2". For connected non-complete graphs
    the numeric test alpha = delta and the join-structure test must agree.
    """
    if g.n < 2:
        raise ValueError("need at least 2 vertices")
    n = g.n
    if not is_connected(g):
        space = algebraic_connectivity(g)
        x = np.ones(n)
        checks = {
            "kernel_dimension": lambda: space.multiplicity >= 2,
            "eigenvector": lambda: fiedler_residual(g, x, 0.0) <= 1e-8,
        }
        return Certificate("i=0", x, checks)
    if g.is_complete:
        x = np.zeros(n)
        x[0], x[1] = 1.0, -1.0
        return Certificate("i=1", x, _vector_checks(g, x, float(n), 1))

    alpha = alpha_value(g)
    delta = g.min_degree
    numeric = abs(alpha - delta) <= TOL
    split = _single_split(g)
    if numeric != (split is not None):
        raise InconsistencyError(
            f"alpha={alpha!r}, delta={delta}: numeric test says {numeric}, structure says {split is not None}"
        )
    if split is None:
        checks = {"alpha_below_delta": lambda: alpha_value(g) < delta - TOL}
        return Certificate("i>=2", {"alpha": alpha, "delta": delta}, checks)
    g1, v, _ = split
    x = _split_vector(n, g1, v)
    return Certificate("i=1", x, _vector_checks(g, x, float(delta), 1))


# -- k-join decomposition ------------------------------------------------


@dataclass
class KJoinDecomposition:
    """Unique k-join splitting of a graph with i(G) = 1.

    ``c[i]`` counts the isolated vertices of G_i beyond one distinguished
    isolated vertex; which one is distinguished does not affect the count.
    """

    n: int
    delta: int
    elementary: list[Graph]
    elementary_vertices: list[tuple[int, ...]]
    combined: Graph | None
    combined_vertices: tuple[int, ...]
    ell: int
    c: list[int]

    @property
    def k(self) -> int:
        return len(self.elementary)

    @property
    def c_max(self) -> int:
        return max(self.c)

    @property
    def q(self) -> int:
        return sum(1 for ci in self.c if ci == self.c_max)

    @property
    def r(self) -> int:
        return self.ell - self.k - self.c_max * self.q

    @property
    def p(self) -> int:
        return sum(1 for h in self.elementary for comp in connected_components(h) if len(comp) > 1)

    @property
    def is_combined(self) -> bool:
        return self.combined is not None

    @property
    def threshold(self) -> int:
        """|V(G')| - |V(G_1)|, the level alpha(G') is compared against."""
        return len(self.combined_vertices) - len(self.elementary_vertices[0])

    def problems(self, g: Graph) -> list[str]:
        out = []
        orders = {len(s) for s in self.elementary_vertices}
        if len(orders) != 1 or min(orders) < 2:
            out.append(f"elementary orders {sorted(orders)} not equal and >= 2")
        if min(orders) != self.n - self.delta:
            out.append("elementary order differs from n - delta")
        for h in self.elementary:
            if not _isolated_in(h, range(h.n)):
                out.append("elementary graph without isolated vertex")
        parts = list(self.elementary_vertices)
        if self.combined_vertices:
            parts.append(self.combined_vertices)
        if not _is_join_of(g, parts):
            out.append("parts do not re-join to G")
        if self.is_combined:
            m = len(self.combined_vertices)
            if m != self.k * self.delta - (self.k - 1) * self.n:
                out.append("combined graph has the wrong order")
            if any(g.degrees[v] <= self.delta for v in self.combined_vertices):
                out.append("combined graph holds a minimum-degree vertex")
            if alpha_value(self.combined) < self.threshold - TOL:
                out.append("alpha(G') below |V(G')| - |V(G_1)|")
        elif self.k < 2:
            out.append("elementary k-join needs k >= 2")
        if self.ell != self.k + sum(self.c):
            out.append("ell != k + sum(c)")
        if self.ell != sum(1 for d in g.degrees if d == self.delta):
            out.append("ell does not count the minimum-degree vertices")
        return out


def kjoin_recognize(g: Graph) -> KJoinDecomposition | None:
    """The k-join decomposition of G, or None when i(G) != 1."""
    if not is_connected(g) or g.is_complete:
        raise ValueError("graph must be connected and non-complete")
    if decide_i01(g).verdict != "i=1":
        return None
    n, delta = g.n, g.min_degree
    elem, rest = [], []
    for f in join_factor_sets(g):
        if len(f) == n - delta and _isolated_in(g, f):
            elem.append(f)
        else:
            rest.extend(f)
    rest = tuple(sorted(rest))
    graphs = [g.induced(f) for f in elem]
    c = [len(_isolated_in(h, range(h.n))) - 1 for h in graphs]
    ell = sum(1 for d in g.degrees if d == delta)
    d = KJoinDecomposition(
        n, delta, graphs, elem, g.induced(rest) if rest else None, rest, ell, c
    )
    bad = d.problems(g)
    if bad:
        raise InconsistencyError("k-join validation failed: " + "; ".join(bad))
    return d


def _beta(h: Graph) -> int:
    return len(connected_components(h))


def am_alpha(decomp: KJoinDecomposition, n: int | None = None) -> int:
    """Multiplicity of alpha(G) predicted from the k-join structure.

    The elementary graphs contribute sum(beta(G_i)) - k. A combined graph
    G' adds the number of its nontrivial Laplacian eigenvalues equal to
    |V(G')| - |V(G_1)|, which is nonzero only when alpha(G') sits exactly at
    that level.
    """
    if n is not None and n != decomp.n:
        raise ValueError("order does not match decomposition")
    base = sum(_beta(h) for h in decomp.elementary) - decomp.k
    if not decomp.is_combined or decomp.combined.n < 2:
        return base
    vals = np.sort(np.linalg.eigvalsh(decomp.combined.laplacian_matrix()))[1:]
    return base + int(np.sum(np.abs(vals - decomp.threshold) <= TOL))


def numeric_am_alpha(g: Graph) -> int:
    return algebraic_connectivity(g).multiplicity


# -- the m_{l,k} table ---------------------------------------------------


def _check_lk(ell: int, k: int) -> None:
    if not (isinstance(ell, int) and isinstance(k, int)) or not 1 <= k <= ell:
        raise ValueError(f"need 1 <= k <= ell, got ell={ell}, k={k}")


def _case(ell: int, k: int) -> str:
    if k == ell or (k == ell - 1 and k >= 2):
        return "full"
    if ell % k == 0:
        return "divides"
    if (ell + 1) % k == 0 and ell + 1 >= 4 * k and 2 <= k <= ell - 2:
        return "divides_plus_one"
    if (ell - k) % 2 == 1 and (ell - k) // 2 <= k - 1 <= ell - 3:
        return "odd_gap"
    return "general"


def m_lk(ell: int, k: int) -> int:
    """Least am(alpha(G)) over k-joins with ell minimum-degree vertices."""
    _check_lk(ell, k)
    case = _case(ell, k)
    if case == "full":
        return ell
    if case == "divides":
        return ell - k
    if case == "divides_plus_one":
        # c_max = (ell + 1) / k, so q = floor((ell - k) k / (ell + 1))
        return ell - (k * (ell - k)) // (ell + 1)
    if case == "odd_gap":
        return ell - (ell - k) // 3
    c = max(-(-(ell - k) // k), 2)
    return ell - (ell - k) // c


@lru_cache(maxsize=None)
def _fewest_parts(t: int, smallest: int = 2) -> int | None:
    """Fewest parts in a partition of t into parts >= smallest (None if impossible)."""
    if t == 0:
        return 0
    best = None
    for first in range(smallest, t + 1):
        sub = _fewest_parts(t - first, first)
        if sub is not None and (best is None or sub + 1 < best):
            best = sub + 1
    return best


def _partitions(total: int, parts: int, cap: int | None = None):
    """Non-increasing tuples of exactly ``parts`` nonnegative ints summing to total."""
    cap = total if cap is None else cap
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, cap), -1, -1):
        if first * parts < total:
            break
        for tail in _partitions(total - first, parts - 1, first):
            yield (first,) + tail


def p_lk_oracle(ell: int, k: int, max_order: int) -> int | None:
    """Fewest components of order > 1 over all elementary slot fillings.

    Searches every distribution c_1..c_k of the ell - k extra isolated
    vertices and every common slot order s <= max_order; slot i then needs
    its remaining s - c_i - 1 vertices split into components of order >= 2.
    """
    if ell - k < 0 or k < 1:
        raise ValueError("need 1 <= k <= ell")
    best = None
    for c in _partitions(ell - k, k):
        for s in range(max(2, c[0] + 1), max_order + 1):
            total = 0
            for ci in c:
                f = _fewest_parts(s - ci - 1)
                if f is None:
                    break
                total += f
            else:
                if best is None or total < best:
                    best = total
    return best


# -- constructions -------------------------------------------------------


def _slot(isolated: int, filler: int) -> Graph:
    if filler == 0:
        return empty(isolated)
    return disjoint_union(empty(isolated), complete(filler))


def extremal_distribution(ell: int, k: int) -> tuple[list[int], int]:
    """(c, s): extra isolated-vertex counts per slot and the common slot order."""
    _check_lk(ell, k)
    case = _case(ell, k)
    if case == "full":
        if k == ell:
            return [0] * k, 3
        return [1] + [0] * (k - 1), 4
    if case == "divides":
        return [ell // k - 1] * k, ell // k
    e = ell - k
    c0 = max(-(-e // k), 2)
    if case == "odd_gap":
        cmax = 3
    elif case == "divides_plus_one":
        cmax = c0 + 1
    else:
        cmax = c0
    q, r = divmod(e, cmax)
    # a slot exactly one short of c_max would force fillers everywhere,
    # so such a remainder is split as (r - 1, 1)
    if r == 0:
        tail = []
    elif cmax - r >= 2:
        tail = [r]
    else:
        tail = [r - 1, 1]
    c = [cmax] * q + tail
    c += [0] * (k - len(c))
    if len(c) != k or sum(c) != e:
        raise InconsistencyError(f"bad distribution {c} for ell={ell}, k={k}")
    return c, cmax + 1


def extremal_kjoin(ell: int, k: int) -> Graph:
    """A k-join with ell minimum-degree vertices attaining m_lk(ell, k)."""
    c, s = extremal_distribution(ell, k)
    slots = [_slot(ci + 1, s - ci - 1) for ci in c]
    if k == 1:
        return join(slots[0], complete(1))
    return join(*slots)


def min_am_bound(ell: int) -> tuple[int, list[Callable[..., Graph]]]:
    """Lower bound on am(alpha(G)) over i(G)=1 graphs with ell minimum-degree vertices.

    Each witness builder takes ``m``, the order of an optional complete
    graph joined on (m = 0 leaves it out where the family allows that).
    """
    if ell < 1:
        raise ValueError("ell must be >= 1")

    def family(slots: list[Graph], needs_tail: bool = False):
        def build(m: int = 0) -> Graph:
            if m < 0 or (needs_tail and m == 0):
                raise ValueError("this family needs a nonempty complete tail")
            parts = list(slots) + ([complete(m)] if m else [])
            return join(*parts)
        return build

    n2, n3, pend = empty(2), empty(3), disjoint_union(empty(1), complete(2))
    if ell % 2 == 0:
        h = ell // 2
        fams = [family([n2] * h, needs_tail=(h == 1))]
        return h, fams
    bound = ell - ell // 3
    if ell == 1:
        return 1, [lambda m=1: join(disjoint_union(complete(2), empty(1)), complete(max(m, 1)))]
    if ell % 3 == 0:
        b = ell // 3
        return bound, [family([n3] * b, needs_tail=(b == 1))]
    if ell % 3 == 1:
        b = (ell - 1) // 3
        return bound, [family([n3] * b + [pend])]
    d = (ell - 2) // 3
    fams = [family([n3] * d + [pend, pend])]
    if ell == 5:
        fams += [
            family([empty(5)], needs_tail=True),
            family([empty(4), disjoint_union(empty(1), complete(3))]),
        ]
    return bound, fams


# -- the am = 1 classification and augmentation ---------------------------


def _is_n2_join_complete(g: Graph) -> bool:
    return g.n >= 3 and complement(g).edge_count == 1


def decide_extreme(g: Graph) -> Certificate:
    """Is i(G) = 1 together with am(alpha(G)) = 1?

    Structurally this holds for N_2 v K_{n-2}, and for combined 1-joins with
    ell = 1 whose elementary graph is one isolated vertex plus one connected
    graph and whose combined graph has alpha(G') above 2 delta - n.
    """
    if not is_connected(g) or g.is_complete:
        raise ValueError("graph must be connected and non-complete")
    space = algebraic_connectivity(g)
    i01 = decide_i01(g)
    numeric = i01.verdict == "i=1" and space.multiplicity == 1
    decomp = kjoin_recognize(g) if i01.verdict == "i=1" else None
    structural = _is_n2_join_complete(g)
    if not structural and decomp is not None and decomp.k == 1 and decomp.is_combined:
        tau = 2 * g.min_degree - g.n
        gp = decomp.combined
        structural = (
            decomp.ell == 1
            and _beta(decomp.elementary[0]) == 2
            and alpha_value(gp) > tau + TOL
            and gp.min_degree > tau
        )
    if numeric != structural:
        raise InconsistencyError(f"am=1 numeric={numeric} structural={structural}")
    checks = {
        "multiplicity_one": lambda: (
            decide_i01(g).verdict == "i=1" and algebraic_connectivity(g).multiplicity == 1
        ) == structural
    }
    return Certificate("yes" if structural else "no", decomp, checks)


def augment_to_i1(g: Graph) -> tuple[Graph, int]:
    """Add one or two vertices so the result has i = 1 and contains G as induced subgraph.

    The new vertices get labels n (and n + 1). A join G = H_1 v H_2 with H_2
    the smallest factor becomes ({v} + H_1) v H_2; otherwise G becomes
    ({v} + G) v {w}.
    """
    if g.n < 3 or not is_connected(g):
        raise ValueError("graph must be connected with at least 3 vertices")
    if decide_i01(g).verdict == "i=1":
        raise ValueError("graph already has i(G) = 1")
    n = g.n
    factors = join_factor_sets(g)
    edges = list(g.edges())
    if len(factors) > 1:
        h2 = min(factors, key=len)
        edges += [(u, n) for u in h2]
        out, added = Graph.from_edges(n + 1, edges), 1
    else:
        edges += [(n, n + 1)] + [(u, n + 1) for u in range(n)]
        out, added = Graph.from_edges(n + 2, edges), 2
    if decide_i01(out).verdict != "i=1":
        raise InconsistencyError("augmented graph does not have i = 1")
    return out, added
