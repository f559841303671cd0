from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paratlas import linalg


def test_rank_basic():
    assert linalg.rank([]) == 0
    assert linalg.rank([(0, 0, 0)]) == 0
    assert linalg.rank([(1, 0), (0, 1)]) == 2
    assert linalg.rank([(1, 2), (2, 4)]) == 1
    assert linalg.rank([(1, 0, 0), (0, 1, 0), (1, 1, 0)]) == 2


def test_rank_fractions():
    assert linalg.rank([(Fraction(1, 2), Fraction(1, 3)), (3, 2)]) == 1


def test_det():
    assert linalg.det([(2,)]) == 2
    assert linalg.det([(1, 2), (3, 4)]) == -2
    assert linalg.det([(1, 0, 0, 0), (0, 2, 0, 0), (0, 0, 3, 0), (0, 0, 0, 4)]) == 24
    assert linalg.det([(1, 1), (1, 1)]) == 0


def test_primitive_and_canonical_direction():
    assert linalg.primitive((2, 4, -6)) == (1, 2, -3)
    assert linalg.primitive((Fraction(1, 2), Fraction(1, 3))) == (3, 2)
    assert linalg.canonical_direction((0, -2, 4)) == (0, 1, -2)
    assert linalg.canonical_direction((-1, 1)) == (1, -1)


def test_rref_is_canonical_for_row_space():
    a = [(1, 2, 3), (0, 1, 1)]
    b = [(1, 3, 4), (2, 5, 7)]  # same row space, different presentation
    assert linalg.rref(a) == linalg.rref(b)
    r = linalg.rref([(2, 4), (1, 3)])
    assert r == [[1, 0], [0, 1]]


def test_solve_linear():
    assert linalg.solve_linear([(2, 0), (0, 4)], (6, 8)) == (3, 2)
    assert linalg.solve_linear([(1, 1), (2, 2)], (1, 3)) is None
    # underdetermined: free variables pinned to zero
    assert linalg.solve_linear([(1, 1)], (5,)) == (5, 0)


def test_orthogonal_complement_canonical_normal():
    basis = [(1, 0, 0, -1), (0, 1, 0, -1), (0, 0, 1, -1)]
    assert linalg.orthogonal_complement(basis) == [(1, 1, 1, 1)]


def test_orthogonal_complement_full_dim():
    assert linalg.orthogonal_complement([(1, 0), (0, 1)]) == []


def test_maximal_minor_values():
    vals = linalg.maximal_minor_values([(1, 0), (0, 1), (1, 1)])
    assert vals == [-1, 1, 1]


def test_enumerate_vertices_square():
    facets = [((1, 0), 1), ((-1, 0), 1), ((0, 1), 1), ((0, -1), 1)]
    verts = linalg.enumerate_vertices(facets, 2)
    assert verts == [(-1, -1), (-1, 1), (1, -1), (1, 1)]


def test_lp_extremum():
    class Square:
        facets = [((1, 0), 1), ((-1, 0), 1), ((0, 1), 1), ((0, -1), 1)]
        dim = 2

    val, pt = linalg.lp_extremum(Square(), (1, 1), "max")
    assert val == 2 and pt == (1, 1)
    val, pt = linalg.lp_extremum(Square(), (1, 0), "max")
    assert val == 1 and pt == (1, -1)  # lexicographic tie break


def test_lp_extremum_unbounded():
    class HalfPlane:
        facets = [((1, 0), 1), ((0, 1), 1), ((0, -1), 1)]
        dim = 2

    with pytest.raises(linalg.UnboundedPolytopeError):
        linalg.lp_extremum(HalfPlane(), (1, 0), "min")


@settings(max_examples=50, deadline=None)
@given(
    st.lists(
        st.tuples(*[st.integers(-5, 5)] * 3),
        min_size=1,
        max_size=5,
    )
)
def test_rank_invariant_under_row_order(rows):
    assert linalg.rank(rows) == linalg.rank(list(reversed(rows)))


@settings(max_examples=50, deadline=None)
@given(
    st.lists(st.tuples(*[st.integers(-4, 4)] * 3), min_size=3, max_size=3),
    st.tuples(*[st.integers(-4, 4)] * 3),
)
def test_solve_linear_solution_satisfies_system(a, b):
    x = linalg.solve_linear(a, b)
    if x is not None:
        assert all(linalg.dot(row, x) == bi for row, bi in zip(a, b))
