"""Builders for the specific polytopes of the enumeration.

Voronoi polytopes of D_n, the 24-cell in the root frame, zonotopes of vector
systems, and Minkowski sums of the 24-cell with root zonotopes; plus the
validators for the segment-addition and decomposition statements.

Sum vertices are enumerated through the chamber fan of the D4 reflection
arrangement: the 192 Weyl chambers refine the normal fan of every sum
24-cell + Z(U) with U a set of roots, so evaluating one generic point per
chamber yields the exact vertex set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Optional, Sequence

from . import linalg, polytope, roots
from .graphs import UniSystem
from .linalg import Number, Vector, dot, vadd, vneg, vscale, vsub
from .polytope import Polytope
from .roots import D4_ROOTS, D4_VECTORS, Root

MAX_GENERATORS = 12


def eframe_edge_directions(n: int) -> list[Vector]:
    """The 2^(n-1) + n edge directions of P_V(D_n), up to sign."""
    dirs = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        dirs.append(tuple(e))
    for signs in product((1, -1), repeat=n - 1):
        dirs.append((1,) + signs)
    return dirs


def voronoi_dn(n: int) -> Polytope:
    """P_V(D_n) = {x : -1 <= x_i +/- x_j <= 1}, exact, in the e-frame."""
    if n not in (3, 4):
        raise ValueError("only n in {3, 4} is supported")
    points: list[Vector] = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        points.append(tuple(e))
        points.append(tuple(-x for x in e))
    half = Fraction(1, 2)
    for signs in product((1, -1), repeat=n):
        points.append(tuple(half * s for s in signs))
    return Polytope.from_points(points, eframe_edge_directions(n))


_CELL24: Optional[Polytope] = None


def cell24() -> Polytope:
    """The 24-cell as the convex hull of the 24 D4 roots (root frame)."""
    global _CELL24
    if _CELL24 is None:
        points = [v for v in D4_VECTORS] + [vneg(v) for v in D4_VECTORS]
        _CELL24 = Polytope.from_points(points, list(D4_VECTORS))
    return _CELL24


def facet_roots(p: Polytope, facet_id: int) -> set[str]:
    """R(F): symbols of the roots parallel to the edges of facet F."""
    lat = p.lattice()
    fmask = lat.facet_masks[facet_id]
    symbols = set()
    for emask in lat.faces_by_dim[1]:
        if emask & fmask != emask:
            continue
        pts = polytope._face_points(lat, emask)
        d = linalg.canonical_direction(vsub(pts[1], pts[0]))
        for r in D4_ROOTS:
            if d in (r.vector(), vneg(r.vector())):
                symbols.add(r.symbol)
    return symbols


def zonotope(
    system: UniSystem | Sequence[Vector], lengths: Optional[Sequence[Number]] = None
) -> Polytope:
    """Z(U) = sum of segments [-l*g, +l*g]; built inside the span of U."""
    gens = list(system.vectors if isinstance(system, UniSystem) else system)
    if len(gens) > MAX_GENERATORS:
        raise ValueError(f"more than {MAX_GENERATORS} generators refused")
    if not gens:
        raise ValueError("empty generator set")
    lengths = list(lengths) if lengths is not None else [1] * len(gens)
    if any(l <= 0 for l in lengths):
        raise ValueError("segment lengths must be positive")
    dim = len(gens[0])
    r = linalg.rank(gens)
    if r < dim:
        gens = _project_to_span(gens)
        dim = r
    scaled = [vscale(l, g) for g, l in zip(gens, lengths)]
    points = []
    for signs in product((1, -1), repeat=len(scaled)):
        total = tuple(
            sum(s * g[k] for s, g in zip(signs, scaled)) for k in range(dim)
        )
        points.append(total)
    return Polytope.from_points(points, gens)


def _project_to_span(gens: list[Vector]) -> list[Vector]:
    basis: list[Vector] = []
    for g in gens:
        if linalg.rank(basis + [g]) > len(basis):
            basis.append(g)
    out = []
    for g in gens:
        coords = linalg.solve_linear(linalg.transpose(basis), g)
        assert coords is not None
        out.append(coords)
    return out


# --- chambers of the D4 reflection arrangement -------------------------------

_CHAMBERS: Optional[list[tuple[Vector, tuple[int, ...]]]] = None


def chambers() -> list[tuple[Vector, tuple[int, ...]]]:
    """One (argmax 24-cell vertex, root sign vector) pair per Weyl chamber."""
    global _CHAMBERS
    if _CHAMBERS is None:
        base = (8, 4, 2, 1)
        cell_vertices = [v for v in D4_VECTORS] + [vneg(v) for v in D4_VECTORS]
        out = []
        seen = set()
        for perm, signs in roots.signed_permutations(even_only=True):
            c = [0, 0, 0, 0]
            for k in range(4):
                c[perm[k]] = signs[k] * base[k]
            c = tuple(c)
            sigma = []
            for rv in D4_VECTORS:
                s = dot(c, rv)
                assert s != 0, "chamber point lies on a root hyperplane"
                sigma.append(1 if s > 0 else -1)
            sigma = tuple(sigma)
            assert sigma not in seen, "duplicate chamber"
            seen.add(sigma)
            best = max(cell_vertices, key=lambda v: dot(c, v))
            ties = [v for v in cell_vertices if dot(c, v) == dot(c, best)]
            assert len(ties) == 1, "argmax vertex not unique in a chamber"
            out.append((best, sigma))
        assert len(out) == 192
        _CHAMBERS = out
    return _CHAMBERS


def sum_cell24_vertices(
    root_set: Sequence[Root], lengths: Optional[Sequence[Number]] = None
) -> list[Vector]:
    """Exact vertex set of 24-cell + sum of segments [-l*r, +l*r]."""
    idx = [roots.D4_INDEX[r.symbol] for r in root_set]
    lengths = list(lengths) if lengths is not None else [1] * len(idx)
    pts = set()
    for vc, sigma in chambers():
        p = list(vc)
        for k, l in zip(idx, lengths):
            rv = D4_VECTORS[k]
            s = sigma[k] * l
            for c in range(4):
                p[c] += s * rv[c]
        pts.add(tuple(p))
    return sorted(pts)


def sum_cell24(
    u: Sequence[Root | str] | int, lengths: Optional[Sequence[Number]] = None
) -> Polytope:
    """The Minkowski sum 24-cell + Z(U) for a set U of positive D4 roots."""
    if isinstance(u, int):
        root_set = roots.mask_roots(u)
    else:
        root_set = [Root.from_symbol(r) if isinstance(r, str) else r for r in u]
    if not root_set:
        return cell24()
    points = sum_cell24_vertices(root_set, lengths)
    return Polytope.from_points(points, list(D4_VECTORS))


# --- validators --------------------------------------------------------------

@dataclass
class PVZReport:
    u_symbols: list[str]
    n_tau: int
    n_pi: int
    facets_measured: int
    facets_predicted: int
    belts2_measured: int
    belts2_predicted: int
    belts3_measured: int
    belts3_predicted: int
    addable_mismatches: list[str]  # roots where belt test and predicate differ

    @property
    def ok(self) -> bool:
        return (
            self.facets_measured == self.facets_predicted
            and self.belts2_measured == self.belts2_predicted
            and self.belts3_measured == self.belts3_predicted
            and not self.addable_mismatches
        )


def pvz_validate(u: Sequence[Root | str]) -> PVZReport:
    """Check the facet/belt count formulas and the segment-addition predicate."""
    root_set = [Root.from_symbol(r) if isinstance(r, str) else r for r in u]
    taus = roots.tau(root_set)
    pis = roots.pi(root_set)
    p = sum_cell24(root_set)
    if not p.is_parallelotope():
        raise ValueError("sum is not a parallelotope; formulas do not apply")
    b2 = sum(1 for b in p.belts() if b.size == 4)
    b3 = sum(1 for b in p.belts() if b.size == 6)
    blocked = {t.completion.symbol for t in taus}
    mismatches = []
    for r in D4_ROOTS:
        predicted = r.symbol not in blocked
        measured = polytope.can_add_segment(p, r.vector())
        if predicted != measured:
            mismatches.append(r.symbol)
    return PVZReport(
        u_symbols=[r.symbol for r in root_set],
        n_tau=len(taus),
        n_pi=len(pis),
        facets_measured=len(p.facets),
        facets_predicted=24 + 2 * len(taus),
        belts2_measured=b2,
        belts2_predicted=len(pis),
        belts3_measured=b3,
        belts3_predicted=16 + 3 * len(taus),
        addable_mismatches=mismatches,
    )


@dataclass
class SDnReport:
    n: int
    accepted_belt_test: list[Vector]
    accepted_brute_force: list[Vector]
    expected_edge_directions: list[Vector]
    belt_pattern_counts: dict[str, int]  # "a", "b", "other"

    @property
    def ok(self) -> bool:
        return (
            sorted(self.accepted_belt_test)
            == sorted(self.accepted_brute_force)
            == sorted(self.expected_edge_directions)
            and self.belt_pattern_counts.get("other", 0) == 0
        )


def _primitive_directions(n: int, radius: int) -> list[Vector]:
    out = []
    for coords in product(range(-radius, radius + 1), repeat=n):
        if all(c == 0 for c in coords):
            continue
        d = linalg.canonical_direction(coords)
        if d == coords:
            out.append(d)
    return sorted(set(out))


def _classify_3belt(normals: Sequence[Vector]) -> str:
    """Pattern of a 3-belt of P_V(D_n): (a) differences only, (b) two sums."""
    unsigned = []
    for nvec in normals:
        d = linalg.canonical_direction(nvec)
        if d not in unsigned:
            unsigned.append(d)
    if len(unsigned) != 3:
        return "other"
    kinds = []
    for d in unsigned:
        nz = [a for a in d if a != 0]
        if sorted(nz) == [-1, 1]:
            kinds.append("diff")
        elif nz == [1, 1]:
            kinds.append("sum")
        else:
            return "other"
    dependent = any(
        linalg.is_zero(
            vadd(vadd(vscale(s0, unsigned[0]), vscale(s1, unsigned[1])),
                 vscale(s2, unsigned[2]))
        )
        for s0, s1, s2 in product((1, -1), repeat=3)
    )
    if not dependent:
        return "other"
    n_sum = kinds.count("sum")
    if n_sum == 0:
        return "a"
    if n_sum == 2:
        return "b"
    return "other"


def sdn_validate(n: int) -> SDnReport:
    """Check which segments can be added to P_V(D_n), two independent ways.

    Route 1 applies the 3-belt orthogonality test; route 2 builds the actual
    sum and runs the full Venkov check.  Both scan every primitive integer
    direction with coordinates in [-2, 2], up to sign.
    """
    p = voronoi_dn(n)
    dirs = _primitive_directions(n, 2)
    accepted_belt = [z for z in dirs if polytope.can_add_segment(p, z)]
    doubled = Polytope.from_points(
        [vscale(2, v) for v in p.vertices], eframe_edge_directions(n)
    )
    accepted_brute = []
    for z in dirs:
        s = polytope.add_segment(doubled, z)
        if s.is_parallelotope():
            accepted_brute.append(z)
    expected = sorted(
        linalg.canonical_direction(d) for d in eframe_edge_directions(n)
    )
    counts: dict[str, int] = {}
    for belt in p.belts():
        if belt.size != 6:
            continue
        normals = [p.facets[i][0] for i in belt.facet_ids]
        kind = _classify_3belt(normals)
        counts[kind] = counts.get(kind, 0) + 1
    return SDnReport(n, accepted_belt, accepted_brute, expected, counts)


# --- decomposition -----------------------------------------------------------

@dataclass
class DecompositionResult:
    core_points: list[Vector]           # ambient-frame vertex set of the core
    core: Optional[Polytope]            # set when the core stayed full-dimensional
    segments: list[tuple[Vector, Number]]  # (primitive direction, half-length)

    def direction_multiset(self) -> list[Vector]:
        return sorted(d for d, _ in self.segments)


def _lift(columns: Sequence[Vector], coords: Vector) -> Vector:
    amb = len(columns[0])
    return tuple(
        sum(c * col[k] for c, col in zip(coords, columns)) for k in range(amb)
    )


def decompose(p: Polytope, zone_order: Optional[Sequence[int]] = None) -> DecompositionResult:
    """Peel off one maximal segment per closed edge zone until none remains.

    Each step erodes by half the shortest regulator of the chosen closed zone,
    per the non-zero-width equivalences, which kills that zone's shortest
    edges.  When the erosion drops the dimension the working frame is
    projected onto the affine span and the peeling continues there, so a
    zonotope erodes all the way down to a single point.  The zone picked at
    each step is the closed one with lexicographically smallest characteristic
    unless ``zone_order`` gives a permutation preference.

    The result is verified: core + split segments must re-sum to the input.
    """
    if not p.is_parallelotope():
        raise ValueError("decompose requires a parallelotope")
    amb = p.dim
    origin: Vector = (0,) * amb
    frame: list[Vector] = [
        tuple(1 if k == i else 0 for k in range(amb)) for i in range(amb)
    ]
    segments: list[tuple[Vector, Number]] = []
    half_extents: list[Vector] = []  # ambient vectors lam * z
    current: Optional[Polytope] = p
    core_points = [tuple(v) for v in p.vertices]
    projected = False
    step = 0
    while current is not None:
        closed = [z for z in current.edge_zones() if z.closed]
        if not closed:
            break
        closed.sort(key=lambda z: z.characteristic)
        if zone_order is not None:
            pick = closed[zone_order[step % len(zone_order)] % len(closed)]
        else:
            pick = closed[0]
        step += 1
        z = pick.characteristic
        lam = Fraction(min(pick.regulators), 2)
        shrunk = [
            (n, c - lam * abs(dot(n, z))) for n, c in current.facets
        ]
        offset = vscale(lam, z)
        cands = set()
        for v in current.vertices:
            cands.add(vadd(v, offset))
            cands.add(vsub(v, offset))
        pts = sorted(
            q for q in cands if all(dot(n, q) <= c for n, c in shrunk)
        )
        assert pts, "erosion emptied the polytope"

        w_amb = _lift(frame, offset)
        d = linalg.canonical_direction(w_amb)
        k = next(i for i, a in enumerate(d) if a != 0)
        segments.append((d, Fraction(w_amb[k], d[k])))
        half_extents.append(w_amb)

        r = linalg.affine_rank(pts)
        if r == current.dim:
            current = Polytope.from_points(pts, current.edge_directions())
            core_points = [vadd(origin, _lift(frame, q)) for q in pts]
            continue
        # dimension dropped: project onto the affine span and keep going
        q0 = pts[0]
        basis: list[Vector] = []
        for q in pts:
            dv = vsub(q, q0)
            if linalg.rank(basis + [dv]) > len(basis):
                basis.append(dv)
        origin = vadd(origin, _lift(frame, q0))
        projected = True
        if r == 0:
            core_points = [origin]
            current = None
            break
        frame = [_lift(frame, b) for b in basis]
        bt = linalg.transpose(basis)
        new_pts = []
        for q in pts:
            coords = linalg.solve_linear(bt, vsub(q, q0))
            assert coords is not None
            new_pts.append(coords)
        core_points = [vadd(origin, _lift(frame, q)) for q in new_pts]
        new_dirs = []
        for dvec in current.edge_directions():
            coords = linalg.solve_linear(bt, dvec)
            if coords is not None and _lift(basis, coords) == dvec:
                new_dirs.append(coords)
        current = Polytope.from_points(new_pts, new_dirs)

    # verify: core + segments re-sums to the input polytope
    cands = set()
    for signs in product((1, -1), repeat=len(half_extents)):
        shift = (0,) * amb
        for s, w in zip(signs, half_extents):
            shift = vadd(shift, vscale(s, w))
        for q in core_points:
            cands.add(vadd(q, shift))
    for q in cands:
        if any(dot(n, q) > c for n, c in p.facets):
            raise AssertionError("decomposition overshoots the input")
    if not set(p.vertices) <= cands:
        raise AssertionError("decomposition does not re-sum to the input")
    core = current if (current is not None and not projected) else None
    return DecompositionResult(
        core_points=sorted(core_points), core=core, segments=segments
    )
