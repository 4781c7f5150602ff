import networkx as nx
from networkx.algorithms.threshold import is_threshold_graph
import numpy as np
import pytest
from hypothesis import given, strategies as st

from fiedlersign.graphcore import are_isomorphic, cycle, path, star
from fiedlersign.join_theory import decide_i01
from fiedlersign.spectra import laplacian_spectrum
from fiedlersign.threshold import (
    CreationSequence,
    build_threshold,
    conjugate_degree_sequence,
    is_threshold,
    random_creation_sequence,
    threshold_alpha_structure,
    threshold_spectrum_check,
)

sequences = st.text(alphabet="id", min_size=2, max_size=12).map(lambda s: s[:-1] + "d")


@given(sequences)
def test_spectrum_is_conjugate_degree_sequence(text):
    g = build_threshold(text)
    assert threshold_spectrum_check(g)
    assert np.allclose(laplacian_spectrum(g).values, conjugate_degree_sequence(g), atol=1e-8)
    assert decide_i01(g).verdict == "i=1"


@given(sequences)
def test_recognition_round_trip(text):
    g = build_threshold(text)
    seq = is_threshold(g)
    assert seq is not None
    assert are_isomorphic(build_threshold(seq), g)
    ref = nx.Graph()
    ref.add_nodes_from(range(g.n))
    ref.add_edges_from(g.edges())
    assert is_threshold_graph(ref)


@given(sequences)
def test_alpha_read_from_dominating_vertices(text):
    g = build_threshold(text)
    if g.is_complete:
        return
    info = threshold_alpha_structure(g)
    assert info.alpha == len(info.dominating)
    assert info.multiplicity >= 1


def test_parse_and_properties():
    seq = CreationSequence.parse("DIID")
    assert str(seq) == "iiid" and seq.n == 4 and seq.connected
    assert not CreationSequence.parse("idi").connected
    assert are_isomorphic(build_threshold("iiid"), star(3))
    with pytest.raises(ValueError):
        CreationSequence.parse("")
    with pytest.raises(ValueError):
        CreationSequence(("i", "x"))


def test_non_threshold_graphs_rejected():
    assert is_threshold(path(4)) is None
    assert is_threshold(cycle(4)) is None
    with pytest.raises(ValueError):
        threshold_spectrum_check(path(4))
    with pytest.raises(ValueError):
        threshold_alpha_structure(build_threshold("iiid").induced([0, 1]))


def test_random_sequences_are_seeded():
    a = random_creation_sequence(10, np.random.default_rng(7))
    b = random_creation_sequence(10, np.random.default_rng(7))
    assert a == b and a.connected
