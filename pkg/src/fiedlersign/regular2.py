"""Deciding i(G) = 2 for connected regular graphs.

For an r-regular G the Fiedler space is the eigenspace of the least
adjacency eigenvalue of the complement, so everything reduces to the
complement components H attaining that eigenvalue: i(G) = 2 exactly when
one of them is C_5, or has least eigenvalue -2 and contains an induced
4-cycle.

Cocktail party components are not excluded. When the complement is
connected such a component cannot occur (G would be a perfect matching),
and when it is disconnected a cocktail party component does give i(G) = 2:
the complement of K_3 + C_4 is one example.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InconsistencyError
from .graphcore import (
    Graph,
    complement,
    connected_components,
    find_induced_c4,
    find_matching_of_size_two,
    is_cocktail_party,
    is_connected,
)
from .spectra import SIGN_TOL, alpha_value, fiedler_residual, sign_profile

TOL = 1e-7


def _least_adjacency(h: Graph) -> float:
    if h.n == 1:
        return 0.0
    return float(np.linalg.eigvalsh(h.adjacency_matrix())[0])


def _is_c5(h: Graph) -> bool:
    return h.n == 5 and h.regularity() == 2 and is_connected(h)


def necessary_i2_screen(g: Graph, witness, tol: float = SIGN_TOL) -> dict[str, bool]:
    """Conditions every imbalance-2 Fiedler vector forces on G.

    ``witness`` must be a Fiedler vector with exactly two negative entries.
    """
    x = np.asarray(witness, dtype=float)
    if x.shape != (g.n,):
        raise ValueError("witness has the wrong length")
    prof = sign_profile(x, tol)
    if len(prof.minus) != 2:
        raise ValueError(f"witness must have exactly two negative entries, has {len(prof.minus)}")
    alpha = alpha_value(g)
    if fiedler_residual(g, x, alpha) > 1e-6 * (1 + np.max(np.abs(x))):
        raise ValueError("witness is not a Fiedler vector")
    a, b = prof.minus
    delta = g.min_degree
    gap = delta - alpha
    deg = g.degrees
    out = {
        "negatives_adjacent": g.has_edge(a, b),
        "gap_in_(0,1]": TOL < gap <= 1 + TOL,
        "negative_of_min_degree": deg[a] == delta or deg[b] == delta,
    }
    if abs(gap - 1) <= TOL:
        out["both_negatives_min_degree"] = deg[a] == delta and deg[b] == delta
    r = g.regularity()
    if r is not None:
        mu2 = r - alpha
        out["mu2_in_(0,1]"] = TOL < mu2 <= 1 + TOL
        if abs(mu2 - 1) <= TOL:
            out["matching_of_size_two"] = find_matching_of_size_two(g) is not None
    return out


@dataclass(frozen=True)
class RegularI2Certificate:
    verdict: bool
    component: tuple[int, ...] | None
    branch: str | None
    mu_min: float
    alpha: float
    details: object = None

    def consistent(self, r: int) -> bool:
        """alpha(G) = r + 1 + mu_n(complement)."""
        return abs(self.alpha - (r + 1 + self.mu_min)) <= TOL


def decide_i2_regular(g: Graph) -> RegularI2Certificate:
    """Decide i(G) = 2 for a connected regular graph.

    Among the complement components attaining the least adjacency
    eigenvalue of the complement, "yes" needs one to be C_5 (with that
    eigenvalue strictly between -2 and -1) or to have eigenvalue -2 and
    contain an induced 4-cycle. For the C4 branch ``details`` holds the
    cycle in G's labels and whether H is a cocktail party graph.
    """
    r = g.regularity()
    if r is None:
        raise ValueError("graph is not regular")
    if not is_connected(g):
        raise ValueError("graph must be connected")
    comp = complement(g)
    parts = connected_components(comp)
    mus = [_least_adjacency(comp.induced(p)) for p in parts]
    mu = min(mus)
    alpha = alpha_value(g) if g.n > 1 else 0.0
    if g.n > 1 and abs(alpha - (r + 1 + mu)) > 1e-6:
        raise InconsistencyError(f"alpha={alpha} but r + 1 + mu_min = {r + 1 + mu}")
    for part, m in zip(parts, mus):
        if abs(m - mu) > TOL:
            continue
        h = comp.induced(part)
        if _is_c5(h) and -2 + TOL < m < -1 - TOL:
            return RegularI2Certificate(True, part, "C5", mu, alpha, tuple(part))
        if abs(m + 2) <= TOL:
            c4 = find_induced_c4(h)
            if c4 is not None:
                details = (tuple(part[v] for v in c4), is_cocktail_party(h) is not None)
                return RegularI2Certificate(True, part, "C4", mu, alpha, details)
    return RegularI2Certificate(False, None, None, mu, alpha)


def cycle_istar(n: int) -> tuple[int, list[np.ndarray]]:
    """floor(n/2) with explicit eigenvectors of the least eigenvalue of A(C_n)."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    j = np.arange(n)
    sign = (-1.0) ** j
    if n % 2 == 0:
        vecs = [sign.copy()]
    else:
        vecs = [sign * np.cos(np.pi * j / n), sign * np.sin(np.pi * j / n)]
    return n // 2, vecs


def cycle_least_eigenvalue(n: int) -> float:
    return 2 * np.cos(2 * np.pi * (n // 2) / n)


def c4_eigenvector(h: Graph, c4) -> np.ndarray:
    """+1, -1, +1, -1 on an induced 4-cycle, zero elsewhere; an eigenvector for -2."""
    a, b, c, d = c4
    ring = [(a, b), (b, c), (c, d), (d, a)]
    if not all(h.has_edge(u, v) for u, v in ring) or h.has_edge(a, c) or h.has_edge(b, d):
        raise ValueError(f"{tuple(c4)} is not an induced 4-cycle in cycle order")
    x = np.zeros(h.n)
    x[[a, c]] = 1.0
    x[[b, d]] = -1.0
    res = float(np.max(np.abs(h.adjacency_matrix() @ x + 2 * x)))
    if res > 1e-8:
        raise InconsistencyError(f"residual {res:.3g}: least eigenvalue is not -2 here")
    return x
