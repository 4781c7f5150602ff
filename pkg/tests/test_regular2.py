import numpy as np
import pytest

from fiedlersign.corpus import connected_regular, regular_graphs
from fiedlersign.graphcore import (
    cocktail_party,
    complement,
    complete,
    cycle,
    disjoint_union,
    find_induced_c4,
    is_connected,
    path,
    petersen,
    rook,
)
from fiedlersign.graphio import parse_graph6
from fiedlersign.regular2 import (
    c4_eigenvector,
    cycle_istar,
    cycle_least_eigenvalue,
    decide_i2_regular,
    necessary_i2_screen,
)
from fiedlersign.sign_oracle import graph_imbalance, min_imbalance
from fiedlersign.spectra import algebraic_connectivity, sign_profile


@pytest.mark.parametrize(
    "g, want, branch",
    [
        (cycle(5), True, "C5"),
        (complement(rook(3)), True, "C4"),
        (complement(petersen()), False, None),
        (cycle(6), True, "C4"),
        (cocktail_party(3), False, None),
    ],
)
def test_named_verdicts(g, want, branch):
    cert = decide_i2_regular(g)
    assert cert.verdict == want and cert.branch == branch
    assert cert.consistent(g.regularity())


@pytest.mark.parametrize("g6", ["FFzn_", "GK~vno"])
def test_cocktail_party_complement_components_give_two(g6):
    # complements of K_3 + C_4 and of C_4 + C_4: the C_4 components are
    # cocktail party graphs, and the oracle still finds imbalance 2
    g = parse_graph6(g6)
    cert = decide_i2_regular(g)
    assert cert.verdict and cert.branch == "C4" and cert.details[1]
    i, w, _ = graph_imbalance(g)
    assert i == 2


def test_cocktail_components_from_construction():
    g = complement(disjoint_union(complete(3), cycle(4)))
    assert decide_i2_regular(g).verdict


def test_yes_verdicts_have_imbalance_two_witness():
    for g in connected_regular(7):
        cert = decide_i2_regular(g)
        if not cert.verdict:
            continue
        space = algebraic_connectivity(g)
        i, w, _ = min_imbalance(space.basis, samples=50_000)
        assert i == 2
        prof = sign_profile(w)
        screen = necessary_i2_screen(g, -w if len(prof.minus) != 2 else w)
        assert all(screen.values()), screen


def test_screen_rejects_bad_witness():
    g = cycle(5)
    with pytest.raises(ValueError):
        necessary_i2_screen(g, np.ones(5))
    with pytest.raises(ValueError):
        necessary_i2_screen(g, np.array([1.0, -1, -1, 1, 0]))


def test_rejects_irregular_or_disconnected():
    with pytest.raises(ValueError):
        decide_i2_regular(path(4))
    with pytest.raises(ValueError):
        decide_i2_regular(disjoint_union(cycle(3), cycle(3)))


@pytest.mark.parametrize("n", range(3, 13))
def test_cycle_formula(n):
    value, vecs = cycle_istar(n)
    assert value == n // 2
    a = cycle(n).adjacency_matrix()
    mu = cycle_least_eigenvalue(n)
    assert len(vecs) == (1 if n % 2 == 0 else 2)
    for x in vecs:
        assert np.max(np.abs(a @ x - mu * x)) < 1e-8


@pytest.mark.parametrize("h", [rook(3), rook(4), cocktail_party(3), cocktail_party(4)])
def test_c4_eigenvector(h):
    x = c4_eigenvector(h, find_induced_c4(h))
    assert np.max(np.abs(h.adjacency_matrix() @ x + 2 * x)) <= 1e-8
    assert sign_profile(x).imbalance == 2


def test_c4_eigenvector_rejects_non_cycle():
    with pytest.raises(ValueError):
        c4_eigenvector(cycle(5), (0, 1, 2, 3))


def test_regular_enumeration_counts():
    # connected cubic graphs on 8 vertices: 5; quartic on 8: 6
    assert sum(is_connected(g) for g in regular_graphs(8, 3)) == 5
    assert sum(is_connected(g) for g in regular_graphs(8, 4)) == 6
    assert len(regular_graphs(6, 2)) == 2
