"""Brute-force sign patterns over an eigenspace.

Given an orthonormal basis B (n x d) of an eigenspace, every vector in the
space is B @ c for a coefficient c in R^d, and coordinate j vanishes on the
hyperplane {c : b_j . c = 0} where b_j is row j of B. The achievable sign
patterns are therefore the faces of a central hyperplane arrangement.

For d <= 3 every face is visited: rays, arcs between consecutive rays on
each great circle, and the cells on either side of every arc. For d >= 4
the enumeration falls back to random sampling plus the one-dimensional
solutions obtained by forcing d-1 coordinates to zero, and is flagged
inexact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import InconsistencyError, NoWitnessError
from .graphcore import Graph, is_connected
from .spectra import SIGN_TOL, FiedlerSpace, adjacency_spectrum, algebraic_connectivity

EXACT_MAX_DIM = 3
ROW_ZERO_TOL = 1e-9
PARALLEL_TOL = 1e-9
CROSSCHECK_SAMPLES = 100_000
RANDOM_SAMPLES = 1_000_000
CHUNK = 100_000


@dataclass
class CellEnumeration:
    basis: np.ndarray
    patterns: dict[tuple[int, ...], np.ndarray] = field(default_factory=dict)
    exact: bool = False

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def vector(self, pattern: tuple[int, ...]) -> np.ndarray:
        return self.basis @ self.patterns[pattern]

    def imbalances(self) -> set[int]:
        return {_imbalance(p) for p in self.patterns if any(p)}


def _imbalance(pattern) -> int:
    return min(sum(1 for s in pattern if s > 0), sum(1 for s in pattern if s < 0))


def _check_basis(b: np.ndarray) -> np.ndarray:
    b = np.asarray(b, dtype=float)
    if b.ndim == 1:
        b = b[:, None]
    if b.shape[1] < 1:
        raise ValueError("basis must have at least one column")
    gram = b.T @ b
    if np.max(np.abs(gram - np.eye(b.shape[1]))) > 1e-6:
        raise ValueError("basis columns must be orthonormal (rank-deficient or unnormalised input)")
    return b


def _sign_matrix(x: np.ndarray, tol: float) -> np.ndarray:
    scale = np.max(np.abs(x), axis=1, keepdims=True)
    s = np.sign(x).astype(np.int8)
    s[np.abs(x) <= tol * scale] = 0
    return s


def _codes(s: np.ndarray) -> np.ndarray:
    n = s.shape[1]
    if n > 39:
        raise ValueError("pattern codes support at most 39 coordinates")
    weights = 3 ** np.arange(n, dtype=np.int64)
    return (s.astype(np.int64) + 1) @ weights


def _distinct_normals(rows: np.ndarray) -> list[np.ndarray]:
    """Unit row normals with zero rows dropped and parallel rows merged."""
    norms = np.linalg.norm(rows, axis=1)
    top = norms.max() if norms.size else 0.0
    out: list[np.ndarray] = []
    for r, nr in zip(rows, norms):
        if nr <= ROW_ZERO_TOL * max(top, 1.0):
            continue
        u = r / nr
        if all(np.linalg.norm(u - (u @ w) * w) > PARALLEL_TOL for w in out):
            out.append(u)
    return out


def _circle_faces(normals: list[np.ndarray]) -> list[tuple[np.ndarray, bool]]:
    """Sample points for every face of a line arrangement on the unit circle.

    Returns (point, is_arc) pairs: one point per ray where a line meets
    the circle and one per open arc between consecutive rays.
    """
    if not normals:
        return [(np.array([1.0, 0.0]), True)]
    angles = []
    for a, b in normals:
        phi = np.arctan2(a, -b) % (2 * np.pi)
        angles.extend([phi, (phi + np.pi) % (2 * np.pi)])
    angles.sort()
    merged = [angles[0]]
    for t in angles[1:]:
        if t - merged[-1] > 1e-12:
            merged.append(t)
    if len(merged) > 1 and merged[0] + 2 * np.pi - merged[-1] <= 1e-12:
        merged.pop()
    out = []
    for i, t in enumerate(merged):
        nxt = merged[(i + 1) % len(merged)] + (2 * np.pi if i + 1 == len(merged) else 0.0)
        mid = 0.5 * (t + nxt)
        out.append((np.array([np.cos(t), np.sin(t)]), False))
        out.append((np.array([np.cos(mid), np.sin(mid)]), True))
    return out


def _plane_frame(nrm: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    pivot = np.eye(3)[int(np.argmin(np.abs(nrm)))]
    u = np.cross(nrm, pivot)
    u /= np.linalg.norm(u)
    return u, np.cross(nrm, u)


def _exact_samples(b: np.ndarray) -> np.ndarray:
    d = b.shape[1]
    if d == 1:
        return np.array([[1.0]])
    normals = _distinct_normals(b)
    if d == 2:
        return np.array([p for p, _ in _circle_faces(normals)])
    samples = []
    if not normals:
        return np.eye(3)
    for i, ni in enumerate(normals):
        others = [w for j, w in enumerate(normals) if j != i]
        u, v = _plane_frame(ni)
        proj = [np.array([w @ u, w @ v]) for w in others]
        proj = _distinct_normals(np.array(proj)) if proj else []
        for q, is_arc in _circle_faces(proj):
            p = q[0] * u + q[1] * v
            samples.append(p)
            if is_arc:
                dist = min((abs(w @ p) for w in others), default=1.0)
                eps = 0.5 * dist
                samples.append(p + eps * ni)
                samples.append(p - eps * ni)
    return np.array(samples)


def _add_samples(enum: CellEnumeration, coeffs: np.ndarray, tol: float) -> None:
    coeffs = coeffs / np.linalg.norm(coeffs, axis=1, keepdims=True)
    x = coeffs @ enum.basis.T
    s = _sign_matrix(x, tol)
    for row, c in zip(s, coeffs):
        key = tuple(int(t) for t in row)
        if key not in enum.patterns:
            enum.patterns[key] = c
            enum.patterns.setdefault(tuple(-t for t in key), -c)


def _zeroing_witnesses(b: np.ndarray) -> np.ndarray:
    """Coefficients c (up to sign) with b_j . c = 0 on d-1 chosen rows."""
    n, d = b.shape
    rows = [j for j in range(n) if np.linalg.norm(b[j]) > ROW_ZERO_TOL]
    out = []
    for subset in combinations(rows, d - 1):
        sub = b[list(subset)]
        _, s, vt = np.linalg.svd(sub)
        if s[-1] > 1e-9 * s[0]:
            c = vt[-1]
            out.extend([c, -c])
    return np.array(out) if out else np.zeros((0, d))


def enumerate_sign_cells(
    basis,
    *,
    tol: float = SIGN_TOL,
    crosscheck: int = CROSSCHECK_SAMPLES,
    samples: int = RANDOM_SAMPLES,
    seed: int = 0,
) -> CellEnumeration:
    """All sign patterns realised by nonzero vectors of span(basis).

    Exact for dimension <= 3. In dimension 3 the result is cross-checked
    against ``crosscheck`` random unit coefficients; a random sample with
    an unseen pattern raises InconsistencyError.
    """
    b = _check_basis(basis)
    d = b.shape[1]
    enum = CellEnumeration(b)
    rng = np.random.default_rng(seed)
    if d <= EXACT_MAX_DIM:
        _add_samples(enum, _exact_samples(b), tol)
        enum.exact = True
        if d == 3 and crosscheck:
            seen = set(_codes(np.array(list(enum.patterns))).tolist())
            c = rng.standard_normal((crosscheck, 3))
            x = c @ b.T
            codes = _codes(_sign_matrix(x, tol))
            missing = set(np.unique(codes).tolist()) - seen
            if missing:
                raise InconsistencyError(f"arrangement enumeration missed {len(missing)} pattern(s)")
        return enum

    z = _zeroing_witnesses(b)
    if len(z):
        _add_samples(enum, z, tol)
    done = 0
    while done < samples:
        m = min(CHUNK, samples - done)
        c = rng.standard_normal((m, d))
        c /= np.linalg.norm(c, axis=1, keepdims=True)
        s = _sign_matrix(c @ b.T, tol)
        _, first = np.unique(_codes(s), return_index=True)
        for idx in first:
            key = tuple(int(t) for t in s[idx])
            if key not in enum.patterns:
                enum.patterns[key] = c[idx]
                enum.patterns.setdefault(tuple(-t for t in key), -c[idx])
        done += m
    enum.exact = False
    return enum


def _pick_min(patterns) -> tuple[int, ...]:
    return min((p for p in patterns if any(p)), key=lambda p: (_imbalance(p), p))


def min_imbalance(
    basis,
    *,
    tol: float = SIGN_TOL,
    crosscheck: int = CROSSCHECK_SAMPLES,
    samples: int = RANDOM_SAMPLES,
    seed: int = 0,
) -> tuple[int, np.ndarray, bool]:
    """Minimum of min(#positive, #negative) over nonzero vectors in span(basis).

    Returns ``(value, witness, exact)``. In dimension >= 4 the search is
    sampled and stops early once it reaches a provable lower bound (0, or 1
    when the span is orthogonal to all-ones); ``exact`` is True when the
    enumeration was complete or that bound was met.
    """
    b = _check_basis(basis)
    n, d = b.shape
    if d <= EXACT_MAX_DIM:
        enum = enumerate_sign_cells(b, tol=tol, crosscheck=crosscheck, seed=seed)
        best = _pick_min(enum.patterns)
        return _imbalance(best), enum.vector(best), True

    floor = 1 if np.max(np.abs(np.ones(n) @ b)) <= 1e-9 * np.sqrt(n) else 0
    rng = np.random.default_rng(seed)
    best_val, best_c = n + 1, None

    def scan(c: np.ndarray) -> None:
        nonlocal best_val, best_c
        s = _sign_matrix(c @ b.T, tol)
        val = np.minimum((s > 0).sum(axis=1), (s < 0).sum(axis=1))
        i = int(np.argmin(val))
        if val[i] < best_val:
            best_val, best_c = int(val[i]), c[i]

    z = _zeroing_witnesses(b)
    if len(z):
        scan(z)
    done = 0
    while best_val > floor and done < samples:
        m = min(CHUNK, samples - done)
        scan(rng.standard_normal((m, d)))
        done += m
    x = b @ best_c
    return best_val, x / np.max(np.abs(x)), best_val == floor


def graph_imbalance(g: Graph, **kwargs) -> tuple[int, np.ndarray, bool]:
    """i(G) by brute force over the Fiedler eigenspace."""
    return min_imbalance(algebraic_connectivity(g).basis, **kwargs)


def least_adjacency_istar(g: Graph, **kwargs) -> tuple[int, np.ndarray, bool]:
    """i*_mu(G) for the least adjacency eigenvalue mu."""
    return min_imbalance(adjacency_spectrum(g).groups[-1].basis, **kwargs)


def _induces_connected(g: Graph, vertices) -> bool:
    return bool(vertices) and is_connected(g.induced(sorted(vertices)))


def connected_bisection(g: Graph, basis=None, **kwargs) -> np.ndarray:
    """A Fiedler vector whose parts i_+ u i_0 and i_- both induce connected subgraphs.

    Among qualifying patterns the one with the most negative entries wins,
    ties going to the lexicographically smallest pattern.
    """
    if not is_connected(g):
        raise ValueError("graph must be connected")
    b = algebraic_connectivity(g).basis if basis is None else basis
    enum = enumerate_sign_cells(b, **kwargs)
    candidates = []
    for p in enum.patterns:
        minus = [j for j, s in enumerate(p) if s < 0]
        rest = [j for j, s in enumerate(p) if s >= 0]
        if minus and _induces_connected(g, rest) and _induces_connected(g, minus):
            candidates.append(p)
    if not candidates:
        if enum.exact:
            raise InconsistencyError("exact enumeration found no connected bisection")
        raise NoWitnessError("no witness found (enumeration inexact)")
    best = min(candidates, key=lambda p: (-sum(1 for s in p if s < 0), p))
    return enum.vector(best)


@dataclass(frozen=True)
class BisectionReport:
    negative: tuple[int, ...]
    zero: tuple[int, ...]
    positive: tuple[int, ...]
    edge_cut: int
    balance: float
    witness: np.ndarray

    @property
    def sizes(self) -> tuple[int, int, int]:
        return len(self.negative), len(self.zero), len(self.positive)


def bisection_report(g: Graph, fiedler: FiedlerSpace | None = None, **kwargs) -> BisectionReport:
    """Partition sizes, cut size and balance for the connected-bisection witness.

    The two sides are i_- and i_+ u i_0, as produced by connected_bisection;
    balance is smaller side over larger side.
    """
    space = fiedler if fiedler is not None else algebraic_connectivity(g)
    x = connected_bisection(g, space.basis, **kwargs)
    scale = np.max(np.abs(x))
    tol = kwargs.get("tol", SIGN_TOL)
    neg = tuple(int(j) for j in np.flatnonzero(x < -tol * scale))
    pos = tuple(int(j) for j in np.flatnonzero(x > tol * scale))
    zer = tuple(int(j) for j in np.flatnonzero(np.abs(x) <= tol * scale))
    side = set(neg)
    cut = sum(1 for u, v in g.edges() if (u in side) != (v in side))
    a, c = len(neg), g.n - len(neg)
    return BisectionReport(neg, zer, pos, cut, min(a, c) / max(a, c), x / scale)
