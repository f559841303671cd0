from fractions import Fraction

import pytest

from paratlas import construct, graphs, linalg, roots


def test_cell24(cell24):
    assert cell24.f_vector() == (24, 96, 96, 24)
    belts = cell24.belts()
    assert len(belts) == 16
    assert all(b.size == 6 for b in belts)
    zones = cell24.edge_zones()
    assert len(zones) == 12
    assert not any(z.closed for z in zones)
    assert cell24.is_parallelotope()


def test_voronoi_d3_is_rhombic_dodecahedron():
    p = construct.voronoi_dn(3)
    assert p.f_vector() == (14, 24, 12)
    assert p.is_parallelotope()


def test_voronoi_d4_is_cell24(cell24):
    assert construct.voronoi_dn(4).certificate() == cell24.certificate()


def test_chambers():
    ch = construct.chambers()
    assert len(ch) == 192
    # each chamber carries a 24-cell vertex and a full sign vector
    for vert, signs in ch[:5]:
        assert len(signs) == 12
        assert all(s in (-1, 1) for s in signs)


def test_zonotope_projects_to_span():
    p = construct.zonotope([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)])
    assert p.dim == 3
    assert p.f_vector() == (8, 12, 6)


def test_sum_cell24_one_root(cell24):
    p = construct.sum_cell24(["14+"])
    assert p.f_vector() == (30, 102, 96, 24)
    assert p.is_parallelotope()
    # same polytope whether built from symbols or the bit mask
    mask = roots.root_mask(["14+"])
    assert construct.sum_cell24(mask).certificate() == p.certificate()


def test_decompose_cube_has_point_core():
    cube = construct.zonotope(
        [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    )
    d = construct.decompose(cube)
    assert len(d.core_points) == 1
    assert sorted(z for z, _ in d.segments) == [
        (0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0)
    ]
    assert all(lam == 1 for _, lam in d.segments)


def test_decompose_sum_has_cell24_core(cell24):
    p = construct.sum_cell24(["14+"])
    d = construct.decompose(p)
    assert d.core is not None
    assert d.core.certificate() == cell24.certificate()
    assert d.segments == [((1, 0, 0, 1), Fraction(1))]


def test_pvz_validate_two_roots():
    r = construct.pvz_validate(["12-", "34-"])
    assert r.ok
    assert (r.n_tau, r.n_pi) == (0, 1)


def test_pvz_validate_triple():
    r = construct.pvz_validate(["12-", "12+", "34-"])
    assert r.ok
    assert (r.n_tau, r.n_pi) == (1, 0)


def test_sdn_d3():
    r = construct.sdn_validate(3)
    assert r.ok
    assert len(r.accepted_belt_test) == 7
    assert r.accepted_belt_test == r.accepted_brute_force
    assert r.belt_pattern_counts.get("other", 0) == 0


def test_sdn_rejects_other_dims():
    with pytest.raises(ValueError):
        construct.sdn_validate(5)


def test_eframe_edge_directions():
    dirs = construct.eframe_edge_directions(4)
    assert len(dirs) == 12
    assert all(d == linalg.canonical_direction(d) for d in dirs)
