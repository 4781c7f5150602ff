from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fiedlersign.errors import InconsistencyError
from fiedlersign.graphcore import complete, cycle, disjoint_union, empty, join, path, rook, star
from fiedlersign.sign_oracle import (
    bisection_report,
    connected_bisection,
    enumerate_sign_cells,
    graph_imbalance,
    least_adjacency_istar,
    min_imbalance,
)
from fiedlersign.spectra import algebraic_connectivity, sign_profile


def _orthonormal(rng, n, d):
    q, _ = np.linalg.qr(rng.standard_normal((n, d)))
    return q


def _brute_patterns(b, grid=41):
    """Patterns on a lattice of coefficient directions; a subset of the true set."""
    d = b.shape[1]
    axis = np.linspace(-1, 1, grid)
    out = set()
    for c in product(axis, repeat=d):
        c = np.array(c)
        if np.any(c):
            out.add(sign_profile(b @ c).pattern)
    return out


@given(st.integers(0, 10_000), st.integers(1, 3), st.integers(4, 8))
def test_exact_enumeration_contains_lattice_patterns(seed, d, n):
    rng = np.random.default_rng(seed)
    b = _orthonormal(rng, n, d)
    cells = enumerate_sign_cells(b, crosscheck=2000)
    assert cells.exact
    grid = 41 if d < 3 else 13
    assert _brute_patterns(b, grid) <= set(cells.patterns)
    for p in cells.patterns:
        assert sign_profile(cells.vector(p)).pattern == p


def test_generic_plane_has_all_cells():
    # a generic 2-dim space in R^n meets 2n cells of the arrangement plus 2n rays
    rng = np.random.default_rng(1)
    b = _orthonormal(rng, 5, 2)
    cells = enumerate_sign_cells(b)
    full = [p for p in cells.patterns if 0 not in p]
    rays = [p for p in cells.patterns if p.count(0) == 1]
    assert len(full) == 10 and len(rays) == 10


def test_degenerate_rows_and_parallel_normals():
    b = np.array([[1.0, 0.0], [2.0, 0.0], [0.0, 0.0], [0.0, 1.0]])
    b /= np.linalg.norm(b, axis=0)
    cells = enumerate_sign_cells(b)
    assert all(p[2] == 0 for p in cells.patterns)
    assert all(p[0] == p[1] for p in cells.patterns)
    value, w, exact = min_imbalance(b)
    assert value == 0 and exact


def test_rejects_non_orthonormal_basis():
    with pytest.raises(ValueError):
        enumerate_sign_cells(np.array([[1.0], [1.0]]))


def test_graph_imbalance_small_cases():
    assert graph_imbalance(star(4))[0] == 1
    assert graph_imbalance(path(5))[0] == 2
    assert graph_imbalance(disjoint_union(complete(2), complete(3)))[0] == 0
    assert graph_imbalance(cycle(5))[0] == 2
    i, w, exact = least_adjacency_istar(cycle(6))
    assert (i, exact) == (3, True)


def test_high_dimension_is_flagged_or_bounded():
    # K_6 has a 5-dim Fiedler space; i = 1 is the provable floor and is found
    value, w, exact = min_imbalance(algebraic_connectivity(complete(6)).basis, samples=20_000)
    assert value == 1 and exact
    # the 3 x 3 rook's graph has a 4-dim Fiedler space and i = 2, above the floor
    g = rook(3)
    value, w, exact = min_imbalance(algebraic_connectivity(g).basis, samples=20_000)
    assert value == 2 and not exact
    assert sign_profile(w).imbalance == 2


def test_connected_bisection_witness():
    g = join(disjoint_union(complete(12), empty(1)), complete(1))
    rep = bisection_report(g)
    assert rep.sizes == (12, 1, 1)
    assert rep.balance == pytest.approx(2 / 12)
    assert rep.edge_cut == 12
    x = connected_bisection(path(6))
    assert sign_profile(x).imbalance == 3
    with pytest.raises(ValueError):
        connected_bisection(disjoint_union(complete(2), complete(2)))


def test_crosscheck_detects_missing_cells(monkeypatch):
    import fiedlersign.sign_oracle as so

    monkeypatch.setattr(so, "_exact_samples", lambda b: np.eye(b.shape[1])[:1])
    rng = np.random.default_rng(3)
    with pytest.raises(InconsistencyError):
        so.enumerate_sign_cells(_orthonormal(rng, 6, 3), crosscheck=1000)
