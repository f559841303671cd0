import random

from hypothesis import given, settings
from hypothesis import strategies as st

from paratlas import canon


def _adj_from_edges(n, edges):
    adj = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    return adj


def _relabel(n, edges, perm):
    return [(perm[a], perm[b]) for a, b in edges]


C5 = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
P5 = [(0, 1), (1, 2), (2, 3), (3, 4)]


def test_isomorphic_graphs_same_certificate():
    perm = [2, 0, 4, 1, 3]
    a = canon.canonical_form(_adj_from_edges(5, C5), [0] * 5)
    b = canon.canonical_form(_adj_from_edges(5, _relabel(5, C5, perm)), [0] * 5)
    assert a == b


def test_nonisomorphic_graphs_differ():
    a = canon.canonical_form(_adj_from_edges(5, C5), [0] * 5)
    b = canon.canonical_form(_adj_from_edges(5, P5), [0] * 5)
    assert a != b


def test_colors_restrict_isomorphism():
    # same graph, but coloring distinguishes an endpoint from the middle
    adj = _adj_from_edges(3, [(0, 1), (1, 2)])
    a = canon.canonical_form(adj, [0, 0, 1])
    b = canon.canonical_form(adj, [1, 0, 0])
    assert a == b  # mirrored coloring, isomorphic as colored graphs
    c = canon.canonical_form(adj, [0, 1, 0])
    assert a != c


def test_regular_graph_needs_individualization():
    # two 3-regular graphs on 6 vertices: K_{3,3} vs the prism; color
    # refinement alone cannot split either, so this exercises the search
    k33 = [(i, 3 + j) for i in range(3) for j in range(3)]
    prism = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
    a = canon.canonical_form(_adj_from_edges(6, k33), [0] * 6)
    b = canon.canonical_form(_adj_from_edges(6, prism), [0] * 6)
    assert a != b


def test_bipartite_certificate_sides_fixed():
    # star seen from the left vs from the right must differ
    a = canon.bipartite_certificate(1, 3, [(0, 0), (0, 1), (0, 2)])
    b = canon.bipartite_certificate(3, 1, [(0, 0), (1, 0), (2, 0)])
    assert a != b


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_certificate_invariant_under_relabeling(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 7)
    all_pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = [e for e in all_pairs if rng.random() < 0.5]
    perm = list(range(n))
    rng.shuffle(perm)
    a = canon.canonical_form(_adj_from_edges(n, edges), [0] * n)
    b = canon.canonical_form(
        _adj_from_edges(n, _relabel(n, edges, perm)), [0] * n
    )
    assert a == b
