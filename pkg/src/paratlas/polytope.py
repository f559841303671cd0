"""Exact polytope engine: dual descriptions, face lattice, belts, zones.

All geometry is exact (ints / Fractions).  Facet enumeration is support
function driven: candidate normals come from (dim-1)-subsets of known edge
directions, which covers every polytope built in this package (their edges
are all parallel to D4 roots or to zonotope generators); a coverage assertion
guards the assumption.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from . import canon, linalg
from .linalg import (
    Number,
    Vector,
    affine_rank,
    canonical_direction,
    dot,
    vadd,
    vneg,
    vscale,
    vsub,
)


class CandidateCoverageError(RuntimeError):
    """Candidate directions failed to produce a complete facet set."""


class InconsistentDescriptionError(ValueError):
    """H- and V-representations do not describe the same polytope."""


@dataclass(frozen=True)
class HPolytope:
    facets: tuple[tuple[Vector, Number], ...]  # normal . x <= rhs
    dim: int


@dataclass(frozen=True)
class VPolytope:
    vertices: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.vertices[0])


@dataclass(frozen=True)
class Belt:
    facet_ids: tuple[int, ...]
    spine: tuple  # translation-class key of the defining (dim-2)-faces

    @property
    def size(self) -> int:
        return len(self.facet_ids)

    @property
    def order(self) -> Optional[int]:
        return self.size // 2 if self.size in (4, 6) else None

    @property
    def flagged(self) -> bool:
        return self.size not in (4, 6)


@dataclass(frozen=True)
class EdgeZone:
    characteristic: Vector  # primitive, first nonzero entry positive
    edges: tuple[int, ...]  # edge face masks
    regulators: tuple[Fraction, ...]
    closed: bool


@dataclass
class FaceLattice:
    vertices: tuple[Vector, ...]
    facet_masks: tuple[int, ...]
    faces_by_dim: dict[int, tuple[int, ...]]
    f_vector: tuple[int, ...]
    dim: int


def vertices_of(h: HPolytope) -> VPolytope:
    """Exact vertex enumeration by subset solving; errors on unbounded input."""
    verts = linalg.enumerate_vertices(h.facets, h.dim)
    if not linalg._recession_trivial(h.facets, h.dim):
        raise linalg.UnboundedPolytopeError("H-polytope is unbounded")
    if not verts:
        raise linalg.EmptyPolytopeError("H-polytope is empty")
    return VPolytope(tuple(verts))


def _support_facets(
    points: Sequence[Vector], candidate_dirs: Sequence[Vector], dim: int
) -> list[tuple[Vector, Number]]:
    normals: set[Vector] = set()
    if dim == 1:
        normals.add((1,))
    for sub in combinations(candidate_dirs, dim - 1) if dim > 1 else ():
        if linalg.rank(sub) < dim - 1:
            continue
        comp = linalg.orthogonal_complement(sub)
        if len(comp) != 1:
            continue
        normals.add(comp[0])
    facets = []
    for base in sorted(normals):
        for n in (base, vneg(base)):
            h = max(dot(n, p) for p in points)
            tight = [p for p in points if dot(n, p) == h]
            if affine_rank(tight) == dim - 1:
                facets.append((n, h))
    facets.sort()
    return facets


def hull_facets(v: VPolytope, candidate_dirs: Sequence[Vector]) -> HPolytope:
    """Irredundant H-representation from candidate edge directions.

    Every 3-subset (generally, (dim-1)-subset) of candidates of full rank
    yields a candidate normal; an orientation is kept iff its argmax face has
    affine dimension dim-1.  Incomplete candidate sets are a hard error.
    """
    dim = v.dim
    if affine_rank(v.vertices) != dim:
        raise ValueError("V-polytope is not full-dimensional")
    facets = _support_facets(v.vertices, candidate_dirs, dim)
    _check_coverage(v.vertices, facets, dim)
    return HPolytope(tuple(facets), dim)


def _check_coverage(
    points: Sequence[Vector], facets: Sequence[tuple[Vector, Number]], dim: int
) -> None:
    for p in points:
        tight = [n for n, b in facets if dot(n, p) == b]
        if linalg.rank(tight) < dim and len(tight) < dim:
            raise CandidateCoverageError(
                f"vertex {p} lies on only {len(tight)} facets; "
                "candidate directions do not cover the polytope"
            )


def convex_hull(
    points: Sequence[Vector], candidate_dirs: Sequence[Vector]
) -> tuple[HPolytope, VPolytope]:
    """Hull of a finite point set whose edges follow the candidate directions.

    Points need not all be extreme; vertices are the points whose tight facet
    normals span the space.
    """
    points = sorted(set(points))
    dim = len(points[0])
    if affine_rank(points) != dim:
        raise ValueError("point set is not full-dimensional")
    facets = _support_facets(points, candidate_dirs, dim)
    verts = []
    for p in points:
        tight = [n for n, b in facets if dot(n, p) == b]
        if len(tight) >= dim and linalg.rank(tight) == dim:
            verts.append(p)
    vp = VPolytope(tuple(verts))
    _check_coverage(vp.vertices, facets, dim)
    return HPolytope(tuple(facets), dim), vp


def face_lattice(h: HPolytope, v: VPolytope) -> FaceLattice:
    """All faces via intersections of facet vertex sets; f-vector included."""
    dim = h.dim
    verts = v.vertices
    for p in verts:
        if any(dot(n, p) > b for n, b in h.facets):
            raise InconsistentDescriptionError(f"vertex {p} violates a facet")
    facet_masks = []
    for n, b in h.facets:
        mask = 0
        for i, p in enumerate(verts):
            if dot(n, p) == b:
                mask |= 1 << i
        if mask == 0:
            raise InconsistentDescriptionError(f"facet {n} touches no vertex")
        facet_masks.append(mask)
    all_faces: set[int] = set(facet_masks)
    frontier = set(facet_masks)
    while frontier:
        new = set()
        for f in frontier:
            for g in facet_masks:
                x = f & g
                if x and x not in all_faces:
                    new.add(x)
        all_faces |= new
        frontier = new
    dims: dict[int, list[int]] = {}
    for mask in all_faces:
        pts = [verts[i] for i in range(len(verts)) if mask >> i & 1]
        dims.setdefault(affine_rank(pts), []).append(mask)
    faces_by_dim = {k: tuple(sorted(dims.get(k, ()))) for k in range(dim)}
    if any(not faces_by_dim[k] for k in range(dim)):
        raise InconsistentDescriptionError("missing faces in some dimension")
    f_vector = tuple(len(faces_by_dim[k]) for k in range(dim))
    return FaceLattice(verts, tuple(facet_masks), faces_by_dim, f_vector, dim)


def centrally_symmetric(points: Sequence[Vector]) -> Optional[Vector]:
    """The center if the point set is symmetric under x -> 2c - x, else None."""
    pts = set(points)
    n = len(pts)
    total = tuple(sum(p[k] for p in pts) for k in range(len(points[0])))
    center = tuple(Fraction(t, n) for t in total)
    for p in pts:
        if tuple(2 * c - a for c, a in zip(center, p)) not in pts:
            return None
    return center


def _face_points(lattice: FaceLattice, mask: int) -> list[Vector]:
    return [
        lattice.vertices[i]
        for i in range(len(lattice.vertices))
        if mask >> i & 1
    ]


def _direction_space_key(points: Sequence[Vector]) -> tuple:
    """Canonical key of the linear span of the face's edge directions.

    Reduced row echelon form of the difference vectors, rows made primitive:
    canonical for the subspace, so two faces share a key iff they are
    parallel (lie in translates of the same plane).
    """
    base = points[0]
    rows = linalg.rref([vsub(p, base) for p in points[1:]])
    return tuple(linalg.canonical_direction(tuple(row)) for row in rows)


def belts(lattice: FaceLattice) -> list[Belt]:
    """Group (dim-2)-faces by direction plane; belt = facets containing one.

    Parallelism, not translation equivalence, is what the 4-or-6 belt
    condition quantifies over: grouping by translation class would split an
    oversized belt of pairwise-parallel but incongruent 2-faces into small
    pieces and mask a Venkov violation.
    """
    dim = lattice.dim
    if dim == 2:
        return [
            Belt(tuple(range(len(lattice.facet_masks))), ("polygon",))
        ]
    classes: dict[tuple, list[int]] = {}
    for mask in lattice.faces_by_dim[dim - 2]:
        key = _direction_space_key(_face_points(lattice, mask))
        classes.setdefault(key, []).append(mask)
    out = []
    for key in sorted(classes):
        facet_ids = set()
        for mask in classes[key]:
            for fid, fmask in enumerate(lattice.facet_masks):
                if mask & fmask == mask:
                    facet_ids.add(fid)
        out.append(Belt(tuple(sorted(facet_ids)), key))
    return out


def edge_zones(lattice: FaceLattice) -> list[EdgeZone]:
    """Edges grouped by direction; closed iff every 2-face holds 0 or 2."""
    if lattice.dim == 1:
        pts = sorted(lattice.vertices)
        z = canonical_direction(vsub(pts[1], pts[0]))
        k = next(i for i, a in enumerate(z) if a != 0)
        rho = abs(Fraction(vsub(pts[1], pts[0])[k], z[k]))
        full = (1 << len(lattice.vertices)) - 1
        return [EdgeZone(z, (full,), (rho,), True)]
    by_dir: dict[Vector, list[int]] = {}
    for mask in lattice.faces_by_dim[1]:
        pts = _face_points(lattice, mask)
        assert len(pts) == 2, "edge with != 2 vertices"
        by_dir.setdefault(canonical_direction(vsub(pts[1], pts[0])), []).append(mask)
    two_faces = lattice.faces_by_dim[2] if lattice.dim >= 3 else ()
    zones = []
    for z in sorted(by_dir):
        edges = sorted(by_dir[z])
        k = next(i for i, a in enumerate(z) if a != 0)
        regulators = []
        for mask in edges:
            pts = _face_points(lattice, mask)
            rho = abs(Fraction(vsub(pts[1], pts[0])[k], z[k]))
            regulators.append(rho)
        closed = True
        edge_set = set(edges)
        for fmask in two_faces:
            count = sum(1 for e in edges if e & fmask == e)
            if count not in (0, 2):
                closed = False
                break
        zones.append(EdgeZone(z, tuple(edges), tuple(regulators), closed))
    return zones


class Polytope:
    """Bundle of both descriptions with cached derived structure."""

    def __init__(self, hpoly: HPolytope, vpoly: VPolytope):
        self.hpoly = hpoly
        self.vpoly = vpoly
        self._lattice: Optional[FaceLattice] = None
        self._belts: Optional[list[Belt]] = None
        self._zones: Optional[list[EdgeZone]] = None
        self._venkov: Optional[bool] = None
        self._certificate: Optional[str] = None

    @property
    def dim(self) -> int:
        return self.hpoly.dim

    @property
    def facets(self):
        return self.hpoly.facets

    @property
    def vertices(self):
        return self.vpoly.vertices

    @classmethod
    def from_h(cls, h: HPolytope) -> "Polytope":
        return cls(h, vertices_of(h))

    @classmethod
    def from_points(
        cls, points: Sequence[Vector], candidate_dirs: Sequence[Vector]
    ) -> "Polytope":
        h, v = convex_hull(points, candidate_dirs)
        return cls(h, v)

    def lattice(self) -> FaceLattice:
        if self._lattice is None:
            self._lattice = face_lattice(self.hpoly, self.vpoly)
        return self._lattice

    def f_vector(self) -> tuple[int, ...]:
        return self.lattice().f_vector

    def belts(self) -> list[Belt]:
        if self._belts is None:
            self._belts = belts(self.lattice())
        return self._belts

    def edge_zones(self) -> list[EdgeZone]:
        if self._zones is None:
            self._zones = edge_zones(self.lattice())
        return self._zones

    def edge_directions(self) -> list[Vector]:
        return [z.characteristic for z in self.edge_zones()]

    def center(self) -> Optional[Vector]:
        return centrally_symmetric(self.vertices)

    def is_parallelotope(self) -> bool:
        if self._venkov is None:
            self._venkov = venkov_parallelotope(self)
        return self._venkov

    def certificate(self) -> str:
        if self._certificate is None:
            self._certificate = canonical_certificate(self.lattice())
        return self._certificate

    def facet_vertex_sets(self) -> list[list[Vector]]:
        lat = self.lattice()
        return [_face_points(lat, m) for m in lat.facet_masks]


def venkov_parallelotope(p: Polytope) -> bool:
    """Venkov's criterion: central symmetry, cs facets, belts of size 4 or 6."""
    if centrally_symmetric(p.vertices) is None:
        return False
    for pts in p.facet_vertex_sets():
        if centrally_symmetric(pts) is None:
            return False
    return all(not b.flagged for b in p.belts())


def width(p: Polytope, z: Vector) -> Fraction:
    """Minimal fiber length of P along z, in units of |z|.

    The fiber length over the shadow of P along z is concave and minimized at
    a shadow vertex; shadow vertices are projections of vertices, so checking
    the fiber through every vertex is exact.  Zero means P has no Minkowski
    summand S(z).
    """
    if linalg.is_zero(z):
        raise ValueError("direction must be nonzero")
    w: Optional[Fraction] = None
    for v in p.vertices:
        t_lo, t_hi = None, None
        for n, b in p.facets:
            a = dot(n, z)
            if a == 0:
                continue
            bound = Fraction(b - dot(n, v), a)
            if a > 0:
                t_hi = bound if t_hi is None else min(t_hi, bound)
            else:
                t_lo = bound if t_lo is None else max(t_lo, bound)
        assert t_lo is not None and t_hi is not None, "polytope unbounded along z"
        fiber = max(t_hi - t_lo, Fraction(0))
        if w is None or fiber < w:
            w = fiber
        if w == 0:
            break
    assert w is not None
    return w


def width_positive(p: Polytope, z: Vector) -> bool:
    """Exact non-zero-width test in direction z."""
    return width(p, z) > 0


def can_add_segment(p: Polytope, z: Vector) -> bool:
    """Prop-sum test: z orthogonal to >= 1 facet vector of every 3-belt."""
    if not p.is_parallelotope():
        raise ValueError("can_add_segment requires a parallelotope")
    for belt in p.belts():
        if belt.size != 6:
            continue
        if not any(dot(p.facets[fid][0], z) == 0 for fid in belt.facet_ids):
            return False
    return True


def add_segment(p: Polytope, z: Vector, lam: Number = 1) -> Polytope:
    """Minkowski sum with the segment [-lam*z, +lam*z]."""
    if lam <= 0:
        raise ValueError("segment length must be positive")
    shift = vscale(lam, z)
    points = [vadd(v, shift) for v in p.vertices] + [
        vsub(v, shift) for v in p.vertices
    ]
    dirs = list(p.edge_directions())
    zc = canonical_direction(z)
    if zc not in dirs:
        dirs.append(zc)
    return Polytope.from_points(points, dirs)


def erode_segment(p: Polytope, z: Vector, lam: Number = 1) -> Polytope:
    """Inverse of add_segment: subtract lam*|n.z| from every rhs and prune.

    Valid when P really is Q + [-lam*z, lam*z] for some polytope Q (e.g. when
    splitting a closed zone at most down to its shortest edge); verified by
    re-adding the segment and comparing facet sets.
    """
    if lam <= 0:
        raise ValueError("segment length must be positive")
    shrunk = [(n, b - lam * abs(dot(n, z))) for n, b in p.facets]
    shift = vscale(lam, z)
    candidates = sorted(
        set(
            [vsub(v, shift) for v in p.vertices]
            + [vadd(v, shift) for v in p.vertices]
        )
    )
    verts = []
    for q in candidates:
        ok = True
        tight = []
        for n, b in shrunk:
            s = dot(n, q)
            if s > b:
                ok = False
                break
            if s == b:
                tight.append(n)
        if ok and len(tight) >= p.dim and linalg.rank(tight) == p.dim:
            verts.append(q)
    if not verts:
        raise linalg.EmptyPolytopeError("erosion emptied the polytope")
    # P equals conv(verts) + [-lam*z, lam*z] iff every vertex of P is of the
    # form q +- lam*z with q in verts: the sum is conv{q +- lam*z} and it is
    # contained in P by construction, so equality reduces to this inclusion.
    shifted = set(vadd(q, shift) for q in verts) | set(
        vsub(q, shift) for q in verts
    )
    if not all(v in shifted for v in p.vertices):
        raise ValueError("polytope is not a Minkowski sum with this segment")
    facets = []
    for n, b in shrunk:
        tight_pts = [q for q in verts if dot(n, q) == b]
        if affine_rank(tight_pts) == p.dim - 1:
            facets.append((n, b))
    return Polytope(HPolytope(tuple(sorted(facets)), p.dim), VPolytope(tuple(verts)))


def canonical_certificate(lattice: FaceLattice) -> str:
    """Canonical certificate of the vertex-facet incidence structure.

    Equal strings iff the bipartite incidence graphs are isomorphic with
    sides respected, which determines the face lattice of a polytope.
    """
    n_v = len(lattice.vertices)
    edges = []
    for fid, fmask in enumerate(lattice.facet_masks):
        for i in range(n_v):
            if fmask >> i & 1:
                edges.append((i, fid))
    cert = canon.bipartite_certificate(n_v, len(lattice.facet_masks), edges)
    digest = hashlib.sha256(repr(cert).encode()).hexdigest()
    fv = "-".join(str(x) for x in lattice.f_vector)
    return f"{lattice.dim}d:f{fv}:{digest[:32]}"
