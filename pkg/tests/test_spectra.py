import networkx as nx
import numpy as np
import pytest
from hypothesis import given

from fiedlersign.graphcore import complete, cycle, disjoint_union, empty, join, path, star
from fiedlersign.spectra import (
    adjacency_spectrum,
    algebraic_connectivity,
    alpha_value,
    common_zero_support,
    fiedler_residual,
    grouped_spectrum,
    join_spectrum,
    laplacian_spectrum,
    sign_profile,
    symmetric_eigen,
)

from conftest import graphs


@given(graphs(min_n=2, max_n=9))
def test_laplacian_matches_networkx(g):
    ref = nx.Graph()
    ref.add_nodes_from(range(g.n))
    ref.add_edges_from(g.edges())
    want = np.sort(nx.laplacian_spectrum(ref))[::-1]
    assert np.allclose(laplacian_spectrum(g).values, want, atol=1e-9)


@given(graphs(min_n=2, max_n=9))
def test_groups_are_orthonormal_eigenspaces(g):
    spec = laplacian_spectrum(g)
    lap = g.laplacian_matrix()
    assert sum(grp.multiplicity for grp in spec.groups) == g.n
    values = [grp.value for grp in spec.groups]
    assert values == sorted(values, reverse=True)
    for grp in spec.groups:
        b = grp.basis
        assert np.allclose(b.T @ b, np.eye(grp.multiplicity), atol=1e-9)
        assert np.max(np.abs(lap @ b - grp.value * b)) < 1e-8


@given(graphs(min_n=1, max_n=6), graphs(min_n=1, max_n=6))
def test_join_spectrum_formula(g, h):
    direct = laplacian_spectrum(join(g, h)).values
    formula = join_spectrum(laplacian_spectrum(g), laplacian_spectrum(h))
    assert np.allclose(direct, formula, atol=1e-9)


@given(graphs(min_n=2, max_n=9))
def test_fiedler_space(g):
    space = algebraic_connectivity(g)
    assert abs(space.alpha - alpha_value(g)) < 1e-9
    for x in space.basis.T:
        assert fiedler_residual(g, x, space.alpha) < 1e-8
    if space.connected:
        assert np.allclose(space.basis.T @ np.ones(g.n), 0, atol=1e-9)
    else:
        assert space.quotient_basis.shape[1] == space.multiplicity - 1


def test_known_values():
    assert algebraic_connectivity(complete(5)).alpha == pytest.approx(5)
    assert algebraic_connectivity(complete(5)).multiplicity == 4
    assert algebraic_connectivity(star(4)).alpha == pytest.approx(1)
    assert algebraic_connectivity(path(5)).alpha == pytest.approx(2 - 2 * np.cos(np.pi / 5))
    assert algebraic_connectivity(cycle(6)).multiplicity == 2
    assert adjacency_spectrum(cycle(5)).values[-1] == pytest.approx(2 * np.cos(4 * np.pi / 5))
    g = disjoint_union(complete(2), complete(3))
    space = algebraic_connectivity(g)
    assert space.alpha == 0 and space.multiplicity == 2 and not space.connected
    with pytest.raises(ValueError):
        algebraic_connectivity(empty(1))


def test_grouping_merges_near_ties():
    m = np.diag([1.0, 1.0 + 1e-9, 2.0])
    spec = grouped_spectrum(m)
    assert [grp.multiplicity for grp in spec.groups] == [1, 2]
    vals, vecs = symmetric_eigen(m)
    assert np.all(np.diff(vals) <= 0)


def test_sign_profile_tolerance():
    prof = sign_profile([1.0, -0.5, 1e-9, 0.0])
    assert prof.plus == (0,) and prof.minus == (1,) and prof.zero == (2, 3)
    assert prof.imbalance == 1 and prof.pattern == (1, -1, 0, 0)
    assert sign_profile([1.0, 1e-6], tol=1e-5).zero == (1,)
    with pytest.raises(ValueError):
        sign_profile([0.0, 0.0])
    with pytest.raises(ValueError):
        sign_profile([1.0], tol=-1)


def test_common_zero_support():
    b = np.array([[1.0, 0.0], [0.0, 1.0], [0.0, 0.0]])
    assert common_zero_support(b) == (2,)
    with pytest.raises(ValueError):
        common_zero_support(np.zeros((3, 0)))
