import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paratlas import graphs


def test_graphic_vectors_k5():
    sys = graphs.graphic_vectors(graphs.LABEL_REPRESENTATIVES["K5"])
    assert len(sys.vectors) == 10
    assert graphs.is_unimodular(sys)


def test_cographic_k33_unimodular():
    sys = graphs.cographic_k33_vectors()
    assert len(sys.vectors) == 9
    assert graphs.is_unimodular(sys)
    assert graphs.system_label(sys) == graphs.K33_STAR


def test_is_unimodular_negative():
    assert not graphs.is_unimodular(
        [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (1, 1, 2, 0)]
    )
    assert graphs.is_unimodular(
        [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 2, 0), (1, 1, 2, 0)]
    )


def test_spans_unimodular_rescaling():
    # not unimodular as given, but doubling e3 makes it so
    assert graphs.spans_unimodular(
        [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (1, 1, 2, 0)]
    )


def test_spans_unimodular_obstructed():
    # four pairwise independent directions in a plane: no rescaling works
    bad = [(1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0), (1, -1, 0, 0),
           (0, 0, 1, 0), (0, 0, 0, 1)]
    assert not graphs.spans_unimodular(bad)


def test_spans_unimodular_contains_unimodular():
    sys = graphs.graphic_vectors(graphs.LABEL_REPRESENTATIVES["C5"])
    assert graphs.spans_unimodular(sys)


def test_circuits_triangle():
    tri = [(1, 0), (0, 1), (1, 1)]
    assert graphs.circuits(tri) == [(0, 1, 2)]


def test_matroid_certificate_invariance():
    vecs = list(graphs.graphic_vectors(graphs.LABEL_REPRESENTATIVES["K5-1"]).vectors)
    base = graphs.matroid_certificate(vecs)
    rng = random.Random(3)
    for _ in range(5):
        shuffled = vecs[:]
        rng.shuffle(shuffled)
        signed = [
            tuple(-a for a in v) if rng.random() < 0.5 else v for v in shuffled
        ]
        assert graphs.matroid_certificate(signed) == base


def test_enumerate_rank4_subgraphs_k5():
    reps = graphs.enumerate_rank4_subgraphs_k5()
    assert len(reps) == 16
    labels = sorted(lbl for _, lbl in reps)
    assert len(set(labels)) == 16
    for g, lbl in reps:
        assert graphs.conway_label(g) == lbl


def test_graph_isomorphic():
    g1 = graphs.Graph(4, ((1, 2), (2, 3), (3, 4), (4, 1)))
    g2 = graphs.Graph(4, ((1, 3), (3, 2), (2, 4), (4, 1)))
    path = graphs.Graph(4, ((1, 2), (2, 3), (3, 4)))
    assert graphs.graph_isomorphic(g1, g2)
    assert not graphs.graph_isomorphic(g1, path)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_is_unimodular_basis_choice_free(seed):
    # the quotient test must not depend on which basic subset comes first
    rng = random.Random(seed)
    pool = [
        v
        for v in itertools.product((-1, 0, 1), repeat=3)
        if any(v)
    ]
    vecs = [rng.choice(pool) for _ in range(rng.randint(2, 6))]
    results = set()
    for _ in range(4):
        rng.shuffle(vecs)
        results.add(graphs.is_unimodular(list(vecs)))
    assert len(results) == 1
