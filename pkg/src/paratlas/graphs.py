"""Graphs, their unimodular vector systems, and Conway-style labels.

A subgraph of K5 (vertices 1..5, parallel edges allowed, loops not) maps to a
vector system in R^4: edge (i,5) -> e_i and edge (i,j) with i<j<=4 ->
e_i - e_j.  Cycle sums of these vectors vanish, so the system represents the
cycle matroid of the graph.  Vector systems are compared through canonical
certificates of the matroid they represent (sorted circuit incidence), which
is exactly the equivalence that matters for zonotope combinatorics.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Optional, Sequence

from . import canon, linalg
from .linalg import Vector


@dataclass(frozen=True)
class Graph:
    """Multigraph on vertices 1..n_vertices; edges is a sorted tuple of pairs."""

    n_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for i, j in self.edges:
            if not (1 <= i <= self.n_vertices and 1 <= j <= self.n_vertices):
                raise ValueError(f"edge ({i},{j}) endpoint out of range")
            if i == j:
                raise ValueError("loops are not allowed")
        norm = tuple(sorted(tuple(sorted(e)) for e in self.edges))
        object.__setattr__(self, "edges", norm)

    @property
    def m(self) -> int:
        return len(self.edges)

    def n_components(self) -> int:
        parent = list(range(self.n_vertices + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, j in self.edges:
            parent[find(i)] = find(j)
        return len({find(v) for v in range(1, self.n_vertices + 1)})

    def rank(self) -> int:
        return self.n_vertices - self.n_components()

    def to_json(self) -> dict:
        return {"n": self.n_vertices, "edges": [list(e) for e in self.edges]}

    @staticmethod
    def from_json(data: dict) -> "Graph":
        return Graph(data["n"], tuple(tuple(e) for e in data["edges"]))


def graph_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Multigraph isomorphism by brute force over vertex permutations (n <= 6)."""
    if g1.n_vertices != g2.n_vertices or g1.m != g2.m:
        return False
    if g1.n_vertices > 6:
        raise ValueError("graphs with more than 6 vertices are out of scope")
    target = g1.edges
    verts = range(1, g2.n_vertices + 1)
    for perm in permutations(verts):
        mapping = dict(zip(verts, perm))
        mapped = tuple(
            sorted(tuple(sorted((mapping[i], mapping[j]))) for i, j in g2.edges)
        )
        if mapped == target:
            return True
    return False


@dataclass(frozen=True)
class UniSystem:
    """A finite system of non-parallel integer vectors, up to sign."""

    vectors: tuple[Vector, ...]
    source: str = "root-subset"  # "graphic" | "cographic-K33" | "root-subset"

    def __post_init__(self):
        for v in self.vectors:
            if linalg.is_zero(v):
                raise ValueError("zero vector in system")
        dirs = [linalg.canonical_direction(v) for v in self.vectors]
        if len(set(dirs)) != len(dirs):
            raise ValueError("parallel vectors in system; merge them first")

    @property
    def m(self) -> int:
        return len(self.vectors)

    @property
    def dim(self) -> int:
        return len(self.vectors[0]) if self.vectors else 0

    def rank(self) -> int:
        return linalg.rank(self.vectors) if self.vectors else 0


def graphic_vectors(g: Graph) -> UniSystem:
    """Vector system of a subgraph of K5: (i,5) -> e_i, (i,j) -> e_i - e_j."""
    if g.n_vertices > 5:
        raise ValueError("only subgraphs of K5 are supported")
    vecs = []
    for i, j in g.edges:
        v = [0, 0, 0, 0]
        if j == 5:
            v[i - 1] = 1
        else:
            v[i - 1] = 1
            v[j - 1] = -1
        vecs.append(tuple(v))
    return UniSystem(tuple(vecs), source="graphic")


def _root_vec(symbol: str) -> Vector:
    i, j, s = int(symbol[0]), int(symbol[1]), symbol[2]
    v = [0, 0, 0, 0]
    v[i - 1] = 1
    v[j - 1] = 1 if s == "+" else -1
    return tuple(v)


def cographic_k33_vectors() -> UniSystem:
    """The 9 roots representing the cographic matroid of K_{3,3}.

    Obtained from the representation of the cycle matroid of K5 minus an edge
    by swapping 24- for 24+.
    """
    symbols = ["12-", "13-", "14-", "23-", "34-", "12+", "13+", "14+", "24+"]
    return UniSystem(tuple(_root_vec(s) for s in symbols), source="cographic-K33")


def is_unimodular(system: UniSystem | Sequence[Vector]) -> bool:
    """True iff every vector is integral in coordinates of a basic subset.

    Implementation: take the first lexicographic basic subset B and a row set
    R with det(B_R) != 0; every maximal minor of the coordinate matrix equals
    det(A_{R,S}) / det(B_R), so the test is that every such quotient lies in
    {-1, 0, 1}.  The outcome does not depend on the choice of B (verified by
    a property test).
    """
    vectors = system.vectors if isinstance(system, UniSystem) else tuple(system)
    if not vectors:
        return True
    return _unimodular_vectors(vectors)


def _unimodular_vectors(vectors: Sequence[Vector]) -> bool:
    r = linalg.rank(vectors)
    if r == 0:
        return True
    basis: list[Vector] = []
    for v in vectors:
        if linalg.rank(basis + [v]) > len(basis):
            basis.append(v)
        if len(basis) == r:
            break
    dim = len(vectors[0])
    row_set = None
    for rows in combinations(range(dim), r):
        sub = [[b[k] for k in rows] for b in basis]
        d = linalg.det(sub)
        if d != 0:
            row_set, base_det = rows, d
            break
    assert row_set is not None
    for sel in combinations(vectors, r):
        sub = [[v[k] for k in row_set] for v in sel]
        q = linalg.Fraction(linalg.det(sub), base_det)
        if q.denominator != 1 or abs(q) > 1:
            return False
    return True


def spans_unimodular(system: UniSystem | Sequence[Vector]) -> bool:
    """True iff some positive rescaling of the vectors is unimodular.

    ``is_unimodular`` fixes the vector lengths; this test only asks about the
    line arrangement they span, which is what decides whether the zonotope is
    a parallelotope.  E.g. {e1, e2, e3, e1+e2+2e3} is not unimodular, but
    doubling e3 makes it so, hence it spans a unimodular system.

    Method: fix a column set C of size r = rank, so every basic subset B has
    a well-defined minor D(B) over C (changing C scales all D(B) by a common
    factor).  A rescaling y_e > 0 works iff |D(B)| * prod_{e in B} y_e is
    constant over bases.  Adjacent bases B, B' = B - i + j force the ratio
    y_j / y_i = |D(B)| / |D(B')|, and the basis-exchange graph is connected,
    so potentials y_e are propagated from these ratios and the candidate is
    verified against every basis.  All arithmetic is exact.
    """
    vectors = system.vectors if isinstance(system, UniSystem) else tuple(system)
    vectors = tuple(v for v in vectors if any(a != 0 for a in v))
    if not vectors:
        return True
    r = linalg.rank(vectors)
    if r <= 1:
        return True
    dim = len(vectors[0])
    col_set = None
    for cols in combinations(range(dim), r):
        if linalg.rank([[v[k] for k in cols] for v in vectors]) == r:
            col_set = cols
            break
    assert col_set is not None

    def minor(sel: tuple[int, ...]):
        return linalg.det([[vectors[i][k] for k in col_set] for i in sel])

    bases = [
        sel for sel in combinations(range(len(vectors)), r) if minor(sel) != 0
    ]
    dets = {b: abs(minor(b)) for b in bases}
    # each adjacent basis pair B, B' = B - i + j forces y_j / y_i
    ratio: dict[int, dict[int, linalg.Fraction]] = {}
    for a, b in combinations(bases, 2):
        diff = set(a) ^ set(b)
        if len(diff) != 2:
            continue
        (i,) = diff & set(a)
        (j,) = diff & set(b)
        w = linalg.Fraction(dets[a], dets[b])  # y_j = w * y_i
        ratio.setdefault(i, {})[j] = w
        ratio.setdefault(j, {})[i] = 1 / w
    elements = sorted({e for b in bases for e in b})
    y: dict[int, linalg.Fraction] = {}
    for seed in elements:
        if seed in y:
            continue
        y[seed] = linalg.Fraction(1)
        queue = [seed]
        while queue:
            i = queue.pop()
            for j, w in ratio.get(i, {}).items():
                val = y[i] * w
                if j in y:
                    if y[j] != val:
                        return False
                else:
                    y[j] = val
                    queue.append(j)
    scaled = set()
    for b in bases:
        d = dets[b]
        for e in b:
            d *= y[e]
        scaled.add(d)
    return len(scaled) == 1


def circuits(vectors: Sequence[Vector]) -> list[tuple[int, ...]]:
    """Minimal dependent index subsets of a vector system."""
    m = len(vectors)
    r = linalg.rank(vectors)
    found: list[tuple[int, ...]] = []
    for size in range(1, r + 2):
        for sel in combinations(range(m), size):
            if any(set(c) <= set(sel) for c in found):
                continue
            if linalg.rank([vectors[i] for i in sel]) < size:
                found.append(sel)
    return found


def matroid_certificate(system: UniSystem | Sequence[Vector]) -> tuple:
    """Canonical certificate of the matroid represented by a vector system.

    Equal certificates mean equal matroids up to relabeling, which is
    invariant under vector reorder, sign flips, and unimodular basis change.
    """
    vectors = system.vectors if isinstance(system, UniSystem) else tuple(system)
    m = len(vectors)
    r = linalg.rank(vectors) if vectors else 0
    circs = circuits(vectors)
    edges = [(e, ci) for ci, c in enumerate(circs) for e in c]
    cert = canon.bipartite_certificate(m, len(circs), edges)
    return (m, r, tuple(sorted(len(c) for c in circs)), cert)


# --- Conway labels -----------------------------------------------------------

K33_STAR = "K33*"
CELL24 = "24-cell"


def _chain_graph(lengths: Sequence[int]) -> Graph:
    """C_{ijk...}: chains of the given lengths joining two fixed vertices."""
    edges = []
    nxt = 3
    for length in lengths:
        prev = 1
        for step in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 2))
    g = Graph(max(max(e) for e in edges), tuple(edges))
    return g


def _k5_minus(removed: Sequence[tuple[int, int]]) -> Graph:
    all_edges = [(i, j) for i in range(1, 6) for j in range(i + 1, 6)]
    removed = {tuple(sorted(e)) for e in removed}
    return Graph(5, tuple(e for e in all_edges if e not in removed))


LABEL_REPRESENTATIVES: dict[str, Graph] = {
    "K5": _k5_minus([]),
    "K5-1": _k5_minus([(1, 2)]),
    "K5-2x1": _k5_minus([(1, 2), (3, 4)]),
    "K5-2": _k5_minus([(1, 2), (2, 3)]),
    "K5-1-2": _k5_minus([(1, 2), (3, 4), (4, 5)]),
    "K5-3": _k5_minus([(1, 2), (2, 3), (3, 4)]),
    "K4+1": Graph(5, ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (4, 5))),
    "C2221": _chain_graph([2, 2, 2, 1]),
    "C222": _chain_graph([2, 2, 2]),
    "C321": _chain_graph([3, 2, 1]),
    "C221+1": Graph(5, ((1, 3), (3, 2), (1, 4), (4, 2), (1, 2), (2, 5))),
    "C3+C3": Graph(5, ((1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5))),
    "C4+1": Graph(5, ((1, 2), (2, 3), (3, 4), (4, 1), (4, 5))),
    "C5": Graph(5, ((1, 2), (2, 3), (3, 4), (4, 5), (1, 5))),
    "C3+2x1": Graph(5, ((1, 2), (2, 3), (1, 3), (3, 4), (4, 5))),
    "4x1": Graph(5, ((1, 5), (2, 5), (3, 5), (4, 5))),
    "K4": Graph(4, ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))),
    "C221": _chain_graph([2, 2, 1]),
    "C3+1": Graph(5, ((1, 2), (2, 3), (1, 3), (3, 4))),
    "C4": Graph(4, ((1, 2), (2, 3), (3, 4), (4, 1))),
    "3x1": Graph(5, ((1, 5), (2, 5), (3, 5))),
    "C3": Graph(3, ((1, 2), (2, 3), (1, 3))),
    "2x1": Graph(5, ((1, 5), (2, 5))),
    "1": Graph(5, ((1, 5),)),
}

RANK4_LABELS = [
    "K5", "K5-1", "K5-2x1", "K5-2", "K5-1-2", "K5-3", "K4+1", "C2221",
    "C222", "C321", "C221+1", "C3+C3", "C4+1", "C5", "C3+2x1", "4x1",
]


class UnlabelableGraphError(ValueError):
    pass


def _label_table() -> dict[tuple, str]:
    table = {}
    for label, g in LABEL_REPRESENTATIVES.items():
        cert = matroid_certificate(graphic_vectors(g))
        assert cert not in table, f"label clash: {label} vs {table[cert]}"
        table[cert] = label
    table[matroid_certificate(cographic_k33_vectors())] = K33_STAR
    return table


_LABELS_BY_CERT: Optional[dict[tuple, str]] = None


def _labels_by_cert() -> dict[tuple, str]:
    global _LABELS_BY_CERT
    if _LABELS_BY_CERT is None:
        _LABELS_BY_CERT = _label_table()
    return _LABELS_BY_CERT


def conway_label(g: Graph) -> str:
    """The Conway-style label of a subgraph of K5, via its cycle matroid."""
    cert = matroid_certificate(graphic_vectors(g))
    label = _labels_by_cert().get(cert)
    if label is None:
        raise UnlabelableGraphError(f"no label for graph {g}")
    return label


def system_label(system: UniSystem) -> str:
    """Label of the matroid a vector system represents (includes K33*)."""
    if system.m == 0:
        return CELL24
    cert = matroid_certificate(system)
    label = _labels_by_cert().get(cert)
    if label is None:
        raise UnlabelableGraphError("system matches no labeled matroid")
    return label


def _canonical_graph_key(g: Graph) -> tuple:
    verts = range(1, g.n_vertices + 1)
    best = None
    for perm in permutations(verts):
        mapping = dict(zip(verts, perm))
        mapped = tuple(
            sorted(tuple(sorted((mapping[i], mapping[j]))) for i, j in g.edges)
        )
        if best is None or mapped < best:
            best = mapped
    return (g.n_vertices, best)


def enumerate_rank4_subgraphs_k5() -> list[tuple[Graph, str]]:
    """The 16 rank-4 subgraphs of K5 up to cycle-matroid equivalence."""
    all_edges = [(i, j) for i in range(1, 6) for j in range(i + 1, 6)]
    graph_reps: dict[tuple, Graph] = {}
    for size in range(4, 11):
        for sel in combinations(all_edges, size):
            g = Graph(5, sel)
            if g.rank() != 4:
                continue
            key = _canonical_graph_key(g)
            if key not in graph_reps:
                graph_reps[key] = g
    seen: dict[tuple, tuple[Graph, str]] = {}
    for g in graph_reps.values():
        cert = matroid_certificate(graphic_vectors(g))
        if cert not in seen:
            seen[cert] = (g, _labels_by_cert()[cert])
    results = list(seen.values())
    results.sort(key=lambda pair: (-pair[0].m, pair[1]))
    return results
