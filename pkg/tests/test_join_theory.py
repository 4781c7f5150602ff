from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fiedlersign.corpus import connected_noncomplete
from fiedlersign.graphcore import (
    Graph,
    complete,
    cycle,
    disjoint_union,
    empty,
    is_connected,
    join,
    path,
)
from fiedlersign.graphio import parse_graph6
from fiedlersign.join_theory import (
    am_alpha,
    augment_to_i1,
    decide_extreme,
    decide_i01,
    extremal_distribution,
    extremal_kjoin,
    join_factor_sets,
    join_factorization,
    kjoin_recognize,
    m_lk,
    min_am_bound,
    numeric_am_alpha,
    p_lk_oracle,
)
from fiedlersign.sign_oracle import graph_imbalance
from fiedlersign.spectra import algebraic_connectivity, laplacian_spectrum

from conftest import graphs

DATA = Path(__file__).parent / "data"


def worked_example():
    return join(disjoint_union(complete(2), empty(1)), join(empty(1), empty(3)))


@given(graphs(min_n=2, max_n=8))
def test_decision_matches_oracle(g):
    cert = decide_i01(g)
    assert cert.is_valid()
    space = algebraic_connectivity(g)
    if space.multiplicity <= 3:
        i, _, exact = graph_imbalance(g)
        assert exact
        assert cert.verdict == {0: "i=0", 1: "i=1"}.get(i, "i>=2")


def test_join_factors():
    g = worked_example()
    assert sorted(map(len, join_factor_sets(g))) == [1, 3, 3]
    assert [h.n for h in join_factorization(cycle(5))] == [5]


def test_worked_example_decomposition():
    g = worked_example()
    d = kjoin_recognize(g)
    assert (d.k, d.ell, d.c, d.p) == (2, 4, [0, 2], 1)
    assert d.elementary_vertices == [(0, 1, 2), (4, 5, 6)]
    assert d.combined_vertices == (3,)
    assert d.problems(g) == []
    assert am_alpha(d) == 3


def test_recognizer_rejects_bad_input():
    with pytest.raises(ValueError):
        kjoin_recognize(complete(4))
    with pytest.raises(ValueError):
        kjoin_recognize(disjoint_union(complete(2), complete(2)))
    assert kjoin_recognize(cycle(5)) is None


@st.composite
def kjoins(draw):
    """Joins of random elementary slots, optionally with a combined graph."""
    k = draw(st.integers(1, 3))
    size = draw(st.integers(2, 5))
    slots = []
    for _ in range(k):
        iso = draw(st.integers(1, size))
        rest = size - iso
        filler = disjoint_union(*[complete(c) for c in _split(draw, rest)]) if rest else None
        slots.append(disjoint_union(empty(iso), filler) if filler else empty(iso))
    extra = draw(st.integers(0, 4))
    if extra or k == 1:
        m = max(extra, 1)
        pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
        keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
        slots.append(Graph.from_edges(m, [p for p, b in zip(pairs, keep) if b]))
    return join(*slots)


def _split(draw, total):
    parts = []
    while total:
        p = draw(st.integers(1, total))
        parts.append(p)
        total -= p
    return parts


@given(kjoins())
def test_structural_multiplicity_matches_spectrum(g):
    if g.is_complete or not is_connected(g):
        return
    d = kjoin_recognize(g)
    if d is None:
        assert decide_i01(g).verdict != "i=1"
        return
    assert d.problems(g) == []
    assert am_alpha(d) == algebraic_connectivity(g).multiplicity == numeric_am_alpha(g)


def test_multiplicity_beyond_single_factor_threshold():
    # the eigenvalue threshold for G' must be |V(G')| - |V(G_1)|, not 2 delta - n
    g = join(empty(4), empty(4), disjoint_union(complete(2), complete(2)))
    d = kjoin_recognize(g)
    assert (g.n, g.min_degree, d.k) == (12, 8, 2)
    assert algebraic_connectivity(g).multiplicity == 7
    assert am_alpha(d) == 7


def test_shrikhande_join():
    s = parse_graph6((DATA / "shrikhande.g6").read_text())
    assert s.n == 16 and s.regularity() == 6
    vals = laplacian_spectrum(s)
    assert [(round(grp.value), grp.multiplicity) for grp in vals.groups] == [(8, 9), (4, 6), (0, 1)]
    # srg(16, 6, 2, 2): every pair shares two neighbours
    a = s.adjacency_matrix()
    common = a @ a
    off = ~np.eye(16, dtype=bool)
    assert set(common[off].astype(int)) == {2}
    g = join(disjoint_union(complete(11), empty(1)), s)
    d = kjoin_recognize(g)
    assert algebraic_connectivity(g).multiplicity == am_alpha(d) == 7


@pytest.mark.parametrize(
    "ell, k, want",
    [(1, 1, 1), (5, 5, 5), (6, 3, 3), (7, 2, 6), (11, 3, 9), (16, 5, 13), (15, 4, 13)],
)
def test_m_lk_values(ell, k, want):
    assert m_lk(ell, k) == want


def test_m_lk_against_partition_oracle_beyond_acceptance_range():
    for ell in range(13, 16):
        for k in range(1, ell + 1):
            assert m_lk(ell, k) == ell - k + p_lk_oracle(ell, k, ell + 3)


def test_m_lk_domain():
    with pytest.raises(ValueError):
        m_lk(3, 4)
    with pytest.raises(ValueError):
        m_lk(0, 0)


def test_extremal_distribution_examples():
    assert extremal_distribution(16, 5) == ([3, 3, 3, 1, 1], 4)
    assert extremal_distribution(7, 2) == ([4, 1], 5)
    for ell in range(1, 13):
        for k in range(1, ell + 1):
            c, s = extremal_distribution(ell, k)
            assert len(c) == k and sum(c) == ell - k and max(c) < s


@pytest.mark.parametrize("ell", range(1, 11))
def test_min_am_bound_witnesses(ell):
    bound, builders = min_am_bound(ell)
    assert bound == (ell // 2 if ell % 2 == 0 else ell - ell // 3)
    for build in builders:
        for m in (1, 2, 3):
            g = build(m)
            deg = np.array(g.degrees)
            assert int(np.sum(deg == deg.min())) == ell
            assert decide_i01(g).verdict == "i=1"
            assert algebraic_connectivity(g).multiplicity == bound


def test_extremal_kjoin_small():
    g = extremal_kjoin(4, 2)
    d = kjoin_recognize(g)
    assert d.k == 2 and algebraic_connectivity(g).multiplicity == m_lk(4, 2)


def test_decide_extreme():
    assert decide_extreme(join(empty(2), complete(3))).verdict == "yes"
    assert decide_extreme(join(disjoint_union(empty(1), complete(2)), complete(2))).verdict == "yes"
    # a second nontrivial component in the elementary graph raises am to 2
    g = join(disjoint_union(empty(1), complete(2), complete(2)), complete(1))
    assert algebraic_connectivity(g).multiplicity == 2
    assert decide_extreme(g).verdict == "no"
    assert decide_extreme(cycle(5)).verdict == "no"


def test_decide_extreme_sweep():
    for g in connected_noncomplete(5):
        cert = decide_extreme(g)  # raises if the two routes disagree
        assert cert.is_valid()


@pytest.mark.parametrize("g, added", [(join(cycle(5), complete(1)), 1), (cycle(5), 2), (path(4), 2)])
def test_augment_to_i1(g, added):
    out, k = augment_to_i1(g)
    assert k == added and out.n == g.n + added
    assert set(out.induced(range(g.n)).edges()) == set(g.edges())
    assert decide_i01(out).verdict == "i=1"


def test_augment_rejects_i1_input():
    with pytest.raises(ValueError):
        augment_to_i1(worked_example())
    with pytest.raises(ValueError):
        augment_to_i1(disjoint_union(complete(2), complete(2)))
