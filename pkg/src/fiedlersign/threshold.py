"""Threshold graphs: creation sequences, recognition and integer spectra."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InconsistencyError
from .graphcore import Graph, connected_components, is_connected
from .spectra import algebraic_connectivity, symmetric_eigen

ISOLATED, DOMINATING = "i", "d"


@dataclass(frozen=True)
class CreationSequence:
    """Ops in creation order; ops[0] is the seed vertex and is always 'i'."""

    ops: tuple[str, ...]

    def __post_init__(self):
        if not self.ops:
            raise ValueError("creation sequence must be nonempty")
        bad = [op for op in self.ops if op not in (ISOLATED, DOMINATING)]
        if bad:
            raise ValueError(f"unknown creation ops {bad}")

    @classmethod
    def parse(cls, text: str) -> "CreationSequence":
        s = text.strip().lower()
        if not s:
            raise ValueError("creation sequence must be nonempty")
        # the seed vertex is the same whichever letter it is given
        return cls((ISOLATED,) + tuple(s[1:]))

    def __str__(self) -> str:
        return "".join(self.ops)

    @property
    def n(self) -> int:
        return len(self.ops)

    @property
    def connected(self) -> bool:
        return self.n == 1 or self.ops[-1] == DOMINATING


def build_threshold(seq: CreationSequence | str) -> Graph:
    if isinstance(seq, str):
        seq = CreationSequence.parse(seq)
    edges = []
    for v, op in enumerate(seq.ops):
        if op == DOMINATING and v > 0:
            edges.extend((u, v) for u in range(v))
    return Graph.from_edges(seq.n, edges)


def is_threshold(g: Graph) -> CreationSequence | None:
    """Creation sequence by peeling dominating (preferred) or isolated vertices.

    Returns None when some stage has neither.
    """
    if g.n == 0:
        return None
    alive = set(range(g.n))
    deg = {v: g.degrees[v] for v in alive}
    peeled: list[str] = []
    while len(alive) > 1:
        size = len(alive)
        dom = next((v for v in sorted(alive) if deg[v] == size - 1), None)
        pick, op = (dom, DOMINATING) if dom is not None else (None, ISOLATED)
        if pick is None:
            pick = next((v for v in sorted(alive) if deg[v] == 0), None)
            if pick is None:
                return None
        alive.remove(pick)
        for u in g.neighbors(pick):
            if u in alive:
                deg[u] -= 1
        peeled.append(op)
    return CreationSequence((ISOLATED,) + tuple(reversed(peeled)))


def random_creation_sequence(n: int, rng: np.random.Generator, connected: bool = True) -> CreationSequence:
    if n < 1:
        raise ValueError("n must be positive")
    ops = [ISOLATED] + [DOMINATING if rng.random() < 0.5 else ISOLATED for _ in range(n - 1)]
    if connected and n >= 2:
        ops[-1] = DOMINATING
    return CreationSequence(tuple(ops))


def conjugate_degree_sequence(g: Graph) -> list[int]:
    """d*_k = #{i : d_i >= k} for k = 1..n."""
    d = g.degrees
    return [sum(1 for x in d if x >= k) for k in range(1, g.n + 1)]


def threshold_spectrum_check(g: Graph) -> bool:
    """Does the Laplacian spectrum of a connected threshold graph equal d*?"""
    if is_threshold(g) is None or not is_connected(g):
        raise ValueError("need a connected threshold graph")
    lap = g.laplacian_matrix()
    vals, vecs = symmetric_eigen(lap)
    if np.max(np.abs(lap @ vecs - vecs * vals)) > 1e-8:
        return False
    rounded = [int(round(v)) for v in vals]
    if max(abs(v - r) for v, r in zip(vals, rounded)) > 1e-8:
        return False
    return rounded == conjugate_degree_sequence(g)


@dataclass(frozen=True)
class ThresholdAlpha:
    alpha: int
    multiplicity: int
    dominating: tuple[int, ...]


def threshold_alpha_structure(g: Graph) -> ThresholdAlpha:
    """alpha and its multiplicity read off the dominating vertices.

    alpha is the number of dominating vertices; deleting them leaves
    multiplicity + 1 components, at least ``multiplicity`` of them single
    vertices. Both numbers are checked against the spectrum.
    """
    if is_threshold(g) is None or not is_connected(g) or g.is_complete:
        raise ValueError("need a connected non-complete threshold graph")
    dom = tuple(v for v in range(g.n) if g.degrees[v] == g.n - 1)
    rest = g.delete_vertices(dom)
    comps = connected_components(rest)
    ell = len(comps) - 1
    singles = sum(1 for c in comps if len(c) == 1)
    space = algebraic_connectivity(g)
    if ell < 1 or singles < ell:
        raise InconsistencyError(f"{len(comps)} components with {singles} singletons after removing dominating vertices")
    if abs(space.alpha - len(dom)) > 1e-7 or space.multiplicity != ell:
        raise InconsistencyError(
            f"spectrum gives alpha={space.alpha}, am={space.multiplicity}; structure gives {len(dom)}, {ell}"
        )
    return ThresholdAlpha(len(dom), ell, dom)
