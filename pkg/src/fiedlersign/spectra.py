"""Laplacian and adjacency spectra with multiplicity grouping.

Eigenvalues are reported non-increasing, matching the convention
lambda_1 >= ... >= lambda_n = 0. Consecutive eigenvalues closer than
``GROUP_GAP * (1 + ||M||_inf)`` share a group; integer Laplacians of the
graph sizes handled here separate far beyond that gap.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InconsistencyError
from .graphcore import Graph, connected_components

GROUP_GAP = 1e-6
SIGN_TOL = 1e-7


def symmetric_eigen(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Full eigendecomposition of a real symmetric matrix.

    Returns ``(values, vectors)`` with values non-increasing and the
    eigenvectors as orthonormal columns. Each column is normalised so its
    first entry of magnitude above 1e-9 is positive, which makes the
    output reproducible across calls.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("expected a square matrix")
    if m.size and np.max(np.abs(m - m.T)) > 1e-12:
        raise ValueError("matrix is not symmetric")
    values, vectors = np.linalg.eigh(m)
    values = values[::-1].copy()
    vectors = vectors[:, ::-1].copy()
    for j in range(vectors.shape[1]):
        col = vectors[:, j]
        nz = np.flatnonzero(np.abs(col) > 1e-9)
        if nz.size and col[nz[0]] < 0:
            vectors[:, j] = -col
    return values, vectors


@dataclass(frozen=True)
class EigenGroup:
    value: float
    multiplicity: int
    basis: np.ndarray  # n x multiplicity, orthonormal columns


@dataclass(frozen=True)
class Spectrum:
    groups: tuple[EigenGroup, ...]
    values: np.ndarray  # all n eigenvalues, non-increasing
    matrix_norm: float

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def distinct(self) -> list[float]:
        return [g.value for g in self.groups]

    def group_of(self, value: float) -> EigenGroup | None:
        tol = GROUP_GAP * (1 + self.matrix_norm)
        for g in self.groups:
            if abs(g.value - value) <= tol:
                return g
        return None


def grouped_spectrum(m: np.ndarray) -> Spectrum:
    m = np.asarray(m, dtype=float)
    values, vectors = symmetric_eigen(m)
    norm = float(np.max(np.sum(np.abs(m), axis=1))) if m.size else 0.0
    gap = GROUP_GAP * (1 + norm)
    groups = []
    start = 0
    for i in range(1, len(values) + 1):
        if i == len(values) or values[i - 1] - values[i] > gap:
            block = values[start:i]
            groups.append(EigenGroup(float(block.mean()), i - start, vectors[:, start:i]))
            start = i
    return Spectrum(tuple(groups), values, norm)


def laplacian_spectrum(g: Graph) -> Spectrum:
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    return grouped_spectrum(g.laplacian_matrix())


def adjacency_spectrum(g: Graph) -> Spectrum:
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    return grouped_spectrum(g.adjacency_matrix())


@dataclass(frozen=True)
class FiedlerSpace:
    """Eigenspace of the algebraic connectivity.

    ``basis`` spans the whole eigenspace of L(G) for the eigenvalue alpha.
    When G is disconnected alpha is 0 and this is the full kernel, whose
    first column is the normalised all-ones vector; ``quotient_basis``
    drops that column so what remains is orthogonal to all-ones.
    """

    alpha: float
    multiplicity: int
    basis: np.ndarray
    connected: bool

    @property
    def quotient_basis(self) -> np.ndarray:
        return self.basis if self.connected else self.basis[:, 1:]


def algebraic_connectivity(g: Graph, spectrum: Spectrum | None = None) -> FiedlerSpace:
    if g.n < 2:
        raise ValueError("algebraic connectivity needs at least 2 vertices")
    spec = spectrum if spectrum is not None else laplacian_spectrum(g)
    zero = spec.groups[-1]
    connected = len(connected_components(g)) == 1
    if (zero.multiplicity == 1) != connected:
        raise InconsistencyError(
            f"kernel dimension {zero.multiplicity} disagrees with connectivity={connected}"
        )
    if connected:
        grp = spec.groups[-2]
        return FiedlerSpace(grp.value, grp.multiplicity, grp.basis, True)
    ones = np.ones(g.n) / np.sqrt(g.n)
    rest = zero.basis - np.outer(ones, ones @ zero.basis)
    # orthonormal complement of ones inside the kernel
    u, s, _ = np.linalg.svd(rest, full_matrices=False)
    quotient = u[:, : zero.multiplicity - 1]
    basis = np.column_stack([ones, quotient])
    return FiedlerSpace(0.0, zero.multiplicity, basis, False)


def alpha_value(g: Graph) -> float:
    """alpha(G), with the convention alpha(K_1) = 0."""
    if g.n < 2:
        return 0.0
    vals = np.linalg.eigvalsh(g.laplacian_matrix())
    return float(max(vals[1], 0.0))


def join_spectrum(s1: Spectrum, s2: Spectrum) -> np.ndarray:
    """Laplacian spectrum of G1 v G2 from the spectra of G1 (order p) and G2 (order q)."""
    p, q = s1.n, s2.n
    if p < 1 or q < 1:
        raise ValueError("both spectra must be nonempty")
    vals = np.concatenate([[0.0], s1.values[:-1] + q, s2.values[:-1] + p, [float(p + q)]])
    return np.sort(vals)[::-1]


@dataclass(frozen=True)
class SignProfile:
    plus: tuple[int, ...]
    minus: tuple[int, ...]
    zero: tuple[int, ...]

    @property
    def imbalance(self) -> int:
        return min(len(self.plus), len(self.minus))

    @property
    def pattern(self) -> tuple[int, ...]:
        n = len(self.plus) + len(self.minus) + len(self.zero)
        out = [0] * n
        for v in self.plus:
            out[v] = 1
        for v in self.minus:
            out[v] = -1
        return tuple(out)


def sign_profile(x, tol: float = SIGN_TOL) -> SignProfile:
    """Partition vertices by the sign of x; |x_j| <= tol * max|x| counts as zero."""
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    x = np.asarray(x, dtype=float)
    scale = float(np.max(np.abs(x))) if x.size else 0.0
    if scale == 0.0:
        raise ValueError("sign profile of the zero vector is undefined")
    cut = tol * scale
    plus = tuple(int(j) for j in np.flatnonzero(x > cut))
    minus = tuple(int(j) for j in np.flatnonzero(x < -cut))
    zero = tuple(int(j) for j in np.flatnonzero(np.abs(x) <= cut))
    return SignProfile(plus, minus, zero)


def common_zero_support(basis, tol: float = SIGN_TOL) -> tuple[int, ...]:
    """Vertices on which every vector of the spanned space vanishes."""
    b = np.asarray(basis, dtype=float)
    if b.ndim == 1:
        b = b[:, None]
    if b.shape[1] == 0:
        raise ValueError("basis must be nonempty")
    scale = float(np.max(np.abs(b)))
    return tuple(int(j) for j in np.flatnonzero(np.max(np.abs(b), axis=1) <= tol * scale))


def fiedler_residual(g: Graph, x, alpha: float) -> float:
    x = np.asarray(x, dtype=float)
    return float(np.max(np.abs(g.laplacian_matrix() @ x - alpha * x)))
