"""Exact rational linear algebra.

Everything here is built on arbitrary-precision integers and
``fractions.Fraction``; no floating point is used anywhere in the package.
Vectors are tuples of numbers (int or Fraction), matrices are tuples of row
tuples.  All functions are pure.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Optional, Sequence

Number = Fraction | int
Vector = tuple[Number, ...]
Matrix = tuple[Vector, ...]


def vec(*coords: Number) -> Vector:
    return tuple(coords)


def dot(u: Sequence[Number], v: Sequence[Number]) -> Number:
    assert len(u) == len(v), "dimension mismatch"
    return sum(a * b for a, b in zip(u, v))


def vadd(u: Sequence[Number], v: Sequence[Number]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence[Number], v: Sequence[Number]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vneg(u: Sequence[Number]) -> Vector:
    return tuple(-a for a in u)


def vscale(c: Number, u: Sequence[Number]) -> Vector:
    return tuple(c * a for a in u)


def is_zero(u: Sequence[Number]) -> bool:
    return all(a == 0 for a in u)


def mat_vec(m: Sequence[Sequence[Number]], v: Sequence[Number]) -> Vector:
    return tuple(dot(row, v) for row in m)


def transpose(m: Sequence[Sequence[Number]]) -> Matrix:
    return tuple(zip(*m))


def primitive(v: Sequence[Number]) -> Vector:
    """Scale a nonzero rational vector to coprime integers, keeping direction."""
    assert not is_zero(v), "zero vector has no primitive form"
    fracs = [Fraction(a) for a in v]
    denom_lcm = 1
    for f in fracs:
        denom_lcm = denom_lcm * f.denominator // gcd(denom_lcm, f.denominator)
    ints = [int(f * denom_lcm) for f in fracs]
    g = 0
    for a in ints:
        g = gcd(g, a)
    return tuple(a // g for a in ints)


def canonical_direction(v: Sequence[Number]) -> Vector:
    """Primitive integer vector with first nonzero entry positive."""
    p = primitive(v)
    for a in p:
        if a != 0:
            return p if a > 0 else vneg(p)
    raise AssertionError("unreachable")


def _echelon(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """In-place fraction-free-ish Gaussian elimination; returns echelon rows."""
    rows = [list(r) for r in rows]
    n_cols = len(rows[0]) if rows else 0
    pivot_row = 0
    for col in range(n_cols):
        piv = None
        for r in range(pivot_row, len(rows)):
            if rows[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        rows[pivot_row], rows[piv] = rows[piv], rows[pivot_row]
        prow = rows[pivot_row]
        pval = prow[col]
        for r in range(pivot_row + 1, len(rows)):
            if rows[r][col] != 0:
                factor = rows[r][col] / pval
                rows[r] = [a - factor * b for a, b in zip(rows[r], prow)]
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return rows


def _int_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix, Bareiss-style fraction-free elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    n_cols = len(m[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        piv = None
        for r in range(rank, len(m)):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        for r in range(rank + 1, len(m)):
            row = m[r]
            if any(row[col:]):
                m[r] = [
                    (prow[col] * row[c] - row[col] * prow[c]) // prev
                    for c in range(n_cols)
                ]
        prev = prow[col]
        rank += 1
        if rank == len(m):
            break
    return rank


def rank(rows: Sequence[Sequence[Number]]) -> int:
    """Exact rank over the rationals."""
    rows = [r for r in rows if not is_zero(r)]
    if not rows:
        return 0
    if all(isinstance(a, int) for r in rows for a in r):
        return _int_rank(rows)
    scaled = []
    for r in rows:
        fr = [Fraction(a) for a in r]
        lcm = 1
        for f in fr:
            lcm = lcm * f.denominator // gcd(lcm, f.denominator)
        scaled.append([int(f * lcm) for f in fr])
    return _int_rank(scaled)


def rref(rows: Sequence[Sequence[Number]]) -> list[list[Fraction]]:
    """Reduced row echelon form; canonical for the row space."""
    ech = _echelon([[Fraction(a) for a in r] for r in rows])
    out = [r for r in ech if any(x != 0 for x in r)]
    for i in range(len(out) - 1, -1, -1):
        lead = next(c for c, x in enumerate(out[i]) if x != 0)
        pval = out[i][lead]
        out[i] = [x / pval for x in out[i]]
        for j in range(i):
            factor = out[j][lead]
            if factor != 0:
                out[j] = [a - factor * b for a, b in zip(out[j], out[i])]
    return out


def affine_rank(points: Sequence[Sequence[Number]]) -> int:
    """Dimension of the affine hull of a point set (-1 for empty)."""
    if not points:
        return -1
    p0 = points[0]
    return rank([vsub(p, p0) for p in points[1:]])


def det(rows: Sequence[Sequence[Number]]) -> Number:
    """Exact determinant of a square matrix."""
    n = len(rows)
    assert all(len(r) == n for r in rows), "matrix not square"
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    # expansion by first row is fine for the 4x4 and 5x5 cases seen here
    total = 0
    for j, coeff in enumerate(rows[0]):
        if coeff == 0:
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
        sign = 1 if j % 2 == 0 else -1
        total += sign * coeff * det(minor)
    return total


def solve_linear(
    a: Sequence[Sequence[Number]], b: Sequence[Number]
) -> Optional[Vector]:
    """Solve A x = b exactly; None when inconsistent.

    For underdetermined consistent systems the free variables are set to 0,
    so square nonsingular systems get their unique solution.
    """
    if len(a) != len(b):
        raise ValueError("dimension mismatch: len(A rows) != len(b)")
    n_cols = len(a[0]) if a else 0
    aug = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(a, b)]
    aug = _echelon(aug)
    pivots: list[tuple[int, int]] = []
    for r, row in enumerate(aug):
        lead = next((c for c, x in enumerate(row) if x != 0), None)
        if lead is None:
            continue
        if lead == n_cols:
            return None  # 0 = nonzero
        pivots.append((r, lead))
    x = [Fraction(0)] * n_cols
    for r, c in reversed(pivots):
        s = aug[r][n_cols] - sum(aug[r][k] * x[k] for k in range(c + 1, n_cols))
        x[c] = s / aug[r][c]
    return tuple(x)


def orthogonal_complement(vectors: Sequence[Sequence[Number]]) -> list[Vector]:
    """Basis of the null space of the span of ``vectors``.

    Returned vectors are canonicalized: primitive integer entries, first
    nonzero entry positive.  Empty list when the span is full-dimensional.
    """
    vectors = [v for v in vectors if not is_zero(v)]
    if not vectors:
        raise ValueError("need the ambient dimension; pass at least one vector")
    dim = len(vectors[0])
    ech = _echelon([[Fraction(a) for a in v] for v in vectors])
    pivots: dict[int, list[Fraction]] = {}
    for row in ech:
        lead = next((c for c, x in enumerate(row) if x != 0), None)
        if lead is not None:
            pivots[lead] = row
    free_cols = [c for c in range(dim) if c not in pivots]
    basis = []
    for fc in free_cols:
        x = [Fraction(0)] * dim
        x[fc] = Fraction(1)
        for c in sorted(pivots, reverse=True):
            row = pivots[c]
            s = sum(row[k] * x[k] for k in range(c + 1, dim))
            x[c] = -s / row[c]
        basis.append(canonical_direction(x))
    return basis


def maximal_minor_values(rows: Sequence[Sequence[Number]]) -> list[Number]:
    """All determinants of maximal (rank-order) square submatrices, sorted.

    Minors of order rank(M) are taken over every row and column selection of
    that order; the result is the full multiset.
    """
    r = rank(rows)
    if r == 0:
        return []
    n_rows, n_cols = len(rows), len(rows[0])
    values = []
    for rsel in combinations(range(n_rows), r):
        for csel in combinations(range(n_cols), r):
            sub = [[rows[i][j] for j in csel] for i in rsel]
            values.append(det(sub))
    return sorted(values)


def enumerate_vertices(
    facets: Sequence[tuple[Vector, Number]], dim: int
) -> list[Vector]:
    """Vertices of {x : n.x <= b for all (n, b)} by exhaustive subset solving.

    Assumes the polytope is bounded; every dim-subset of tight facets is
    solved and feasible solutions are kept, deduplicated and sorted.
    """
    seen: set[Vector] = set()
    for sel in combinations(range(len(facets)), dim):
        sub = [facets[i][0] for i in sel]
        rhs = [facets[i][1] for i in sel]
        if rank(sub) < dim:
            continue
        x = solve_linear(sub, rhs)
        if x is None:
            continue
        if all(dot(n, x) <= b for n, b in facets):
            seen.add(x)
    return sorted(seen)


class UnboundedPolytopeError(ValueError):
    pass


class EmptyPolytopeError(ValueError):
    pass


def lp_extremum(
    polytope, objective: Sequence[Number], sense: str
) -> tuple[Number, Vector]:
    """Exact linear optimum over a bounded H-polytope, by vertex evaluation.

    ``polytope`` needs ``.facets`` (list of (normal, rhs)) and ``.dim``.
    Ties break to the lexicographically smallest optimal vertex.
    """
    if sense not in ("min", "max"):
        raise ValueError(f"sense must be 'min' or 'max', got {sense!r}")
    verts = enumerate_vertices(polytope.facets, polytope.dim)
    if not verts:
        raise EmptyPolytopeError("polytope has no vertices")
    if not _recession_trivial(polytope.facets, polytope.dim):
        raise UnboundedPolytopeError("polytope is unbounded")
    best_val = None
    best_pt = None
    for v in verts:  # verts already lex-sorted
        val = dot(objective, v)
        better = (
            best_val is None
            or (sense == "max" and val > best_val)
            or (sense == "min" and val < best_val)
        )
        if better:
            best_val, best_pt = val, v
    return best_val, best_pt


def _recession_trivial(facets: Sequence[tuple[Vector, Number]], dim: int) -> bool:
    """True iff {d : n.d <= 0 for all facet normals n} = {0}."""
    normals = [n for n, _ in facets]
    if rank(normals) < dim:
        return False
    for sel in combinations(range(len(normals)), dim - 1):
        sub = [normals[i] for i in sel]
        if rank(sub) < dim - 1:
            continue
        for z in orthogonal_complement_of_subspace(sub, dim):
            for cand in (z, vneg(z)):
                if all(dot(n, cand) <= 0 for n in normals):
                    return False
    return True


def orthogonal_complement_of_subspace(
    vectors: Sequence[Sequence[Number]], dim: int
) -> list[Vector]:
    """Like orthogonal_complement but tolerates an empty input list."""
    if not vectors:
        return [
            canonical_direction(tuple(1 if i == j else 0 for j in range(dim)))
            for i in range(dim)
        ]
    return orthogonal_complement(vectors)
