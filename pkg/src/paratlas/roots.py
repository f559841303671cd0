"""The root system D_n (n <= 5) and the orthogonality combinatorics of D4.

Roots e_i + s*e_j are kept up to overall sign, with the canonical
representative having positive e_i coefficient (symbol "ij+" / "ij-").
Subsets of the 12 positive D4 roots are handled as bitmasks throughout the
exhaustive scans.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterable, Sequence

from . import linalg
from .graphs import UniSystem, is_unimodular
from .linalg import Vector, dot


@dataclass(frozen=True)
class Root:
    i: int
    j: int
    sign: int  # +1 or -1

    def __post_init__(self):
        if not (1 <= self.i < self.j) or self.sign not in (1, -1):
            raise ValueError(f"bad root ({self.i},{self.j},{self.sign})")

    @property
    def symbol(self) -> str:
        return f"{self.i}{self.j}{'+' if self.sign > 0 else '-'}"

    def vector(self, dim: int = 4) -> Vector:
        v = [0] * dim
        v[self.i - 1] = 1
        v[self.j - 1] = self.sign
        return tuple(v)

    @staticmethod
    def from_symbol(s: str) -> "Root":
        return Root(int(s[0]), int(s[1]), 1 if s[2] == "+" else -1)

    def __str__(self) -> str:
        return self.symbol


def positive_roots(n: int) -> list[Root]:
    """The n(n-1) canonical representatives e_i +/- e_j, i < j <= n."""
    if not 2 <= n <= 5:
        raise ValueError("n must be in 2..5")
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out.append(Root(i, j, -1))
            out.append(Root(i, j, 1))
    return out


D4_ROOTS: list[Root] = positive_roots(4)
D4_INDEX: dict[str, int] = {r.symbol: k for k, r in enumerate(D4_ROOTS)}
D4_VECTORS: list[Vector] = [r.vector() for r in D4_ROOTS]


def root_mask(roots: Iterable[Root | str]) -> int:
    mask = 0
    for r in roots:
        sym = r if isinstance(r, str) else r.symbol
        mask |= 1 << D4_INDEX[sym]
    return mask


def mask_roots(mask: int) -> list[Root]:
    return [D4_ROOTS[k] for k in range(12) if mask >> k & 1]


def mask_system(mask: int) -> UniSystem:
    return UniSystem(tuple(D4_VECTORS[k] for k in range(12) if mask >> k & 1))


@dataclass(frozen=True)
class Quadruple:
    roots: tuple[Root, Root, Root, Root]

    def __post_init__(self):
        vs = [r.vector() for r in self.roots]
        for a, b in combinations(vs, 2):
            if dot(a, b) != 0:
                raise ValueError("quadruple roots must be mutually orthogonal")


@dataclass(frozen=True)
class Triple:
    roots: tuple[Root, Root, Root]
    completion: Root

    def __post_init__(self):
        vs = [r.vector() for r in self.roots] + [self.completion.vector()]
        for a, b in combinations(vs, 2):
            if dot(a, b) != 0:
                raise ValueError("triple plus completion must be orthogonal")

    def quadruple(self) -> Quadruple:
        return Quadruple(tuple(sorted(self.roots + (self.completion,),
                                      key=lambda r: r.symbol)))


@dataclass(frozen=True)
class Triad:
    roots: tuple[Root, Root, Root]

    @property
    def minus_count(self) -> int:
        return sum(1 for r in self.roots if r.sign < 0)


def quadruples() -> list[Quadruple]:
    """The three quadruples of D4, one per pair-partition of {1,2,3,4}."""
    out = []
    for (i, j), (k, l) in (((1, 2), (3, 4)), ((1, 3), (2, 4)), ((1, 4), (2, 3))):
        out.append(
            Quadruple(
                (Root(i, j, -1), Root(i, j, 1), Root(k, l, -1), Root(k, l, 1))
            )
        )
    return out


QUADRUPLE_MASKS: list[int] = [root_mask(q.roots) for q in quadruples()]


def completing_root(three: Sequence[Root]) -> Root:
    """The unique D4 root orthogonal to three mutually orthogonal roots."""
    vs = [r.vector() for r in three]
    candidates = [
        r for r in D4_ROOTS if all(dot(r.vector(), v) == 0 for v in vs)
    ]
    assert len(candidates) == 1, f"completion not unique for {three}"
    return candidates[0]


def _check_roots(system: Sequence[Root | str]) -> list[Root]:
    out = []
    for r in system:
        root = Root.from_symbol(r) if isinstance(r, str) else r
        if root.symbol not in D4_INDEX:
            raise ValueError(f"{root} is not a D4 root")
        out.append(root)
    return out


def tau(system: Sequence[Root | str]) -> list[Triple]:
    """All mutually orthogonal 3-subsets, each with its completing root."""
    roots = _check_roots(system)
    out = []
    for sel in combinations(roots, 3):
        vs = [r.vector() for r in sel]
        if all(dot(a, b) == 0 for a, b in combinations(vs, 2)):
            out.append(Triple(tuple(sel), completing_root(sel)))
    return out


def pi(system: Sequence[Root | str]) -> list[frozenset[Root]]:
    """Maximal orthogonal pairs: no third root of the system fits them."""
    roots = _check_roots(system)
    out = []
    for a, b in combinations(roots, 2):
        if dot(a.vector(), b.vector()) != 0:
            continue
        extendable = any(
            c not in (a, b)
            and dot(c.vector(), a.vector()) == 0
            and dot(c.vector(), b.vector()) == 0
            for c in roots
        )
        if not extendable:
            out.append(frozenset((a, b)))
    return out


def triad_of(system: Sequence[Root | str]) -> Triad:
    """The triad of completing roots of a three-disjoint-triples system."""
    roots = _check_roots(system)
    if len(roots) != 9:
        raise ValueError("expected a union of three disjoint triples (9 roots)")
    triples = tau(roots)
    cover: list[Triple] = []
    used: set[str] = set()
    for t in triples:
        syms = {r.symbol for r in t.roots}
        if syms & used:
            continue
        cover.append(t)
        used |= syms
    if len(cover) != 3 or len(used) != 9:
        raise ValueError("system is not a union of three disjoint triples")
    comps = tuple(sorted((t.completion for t in cover), key=lambda r: r.symbol))
    return Triad(comps)


def triad_class(system: Sequence[Root | str]) -> str:
    """Matroid class of a three-disjoint-triples system: A4-e or K33*.

    Classified by the represented matroid, not by triad minus-sign parity:
    parity is not invariant under sign flips of the coordinate frame, and
    16 of the 32 odd-parity sets are in fact A4-e.  (All 32 even-parity
    sets are A4-e; the class split is 48 to 16.)
    """
    from . import graphs as _graphs

    vecs = tuple(r.vector() for r in _check_roots(system))
    label = _graphs.system_label(_graphs.UniSystem(vecs))
    if label == "K5-1":
        return "A4-e"
    if label == _graphs.K33_STAR:
        return "K33*"
    raise ValueError(f"not a three-triple system (matroid {label})")


# --- automorphisms of the root system ---------------------------------------

def signed_permutations(even_only: bool = False) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """(permutation, signs) pairs: x_i -> signs[i] * x_perm[i].

    With even_only, restricted to the Weyl group of D4 (192 elements);
    otherwise the full signed permutation group B4 (384), which is the
    automorphism group of the D4 root set.
    """
    out = []
    for perm in permutations(range(4)):
        for signs in product((1, -1), repeat=4):
            if even_only and signs.count(-1) % 2 == 1:
                continue
            out.append((perm, signs))
    return out


def _root_index_of_vector(v: Vector) -> int:
    for cand in (v, linalg.vneg(v)):
        nz = [k for k, a in enumerate(cand) if a != 0]
        if len(nz) == 2 and cand[nz[0]] == 1 and cand[nz[1]] in (1, -1):
            return D4_INDEX[f"{nz[0]+1}{nz[1]+1}{'+' if cand[nz[1]] > 0 else '-'}"]
    raise ValueError(f"{v} is not a D4 root")


def root_permutations(even_only: bool = False) -> list[tuple[int, ...]]:
    """Permutations of the 12 positive-root indices induced by (B4 or D4)."""
    perms = []
    for perm, signs in signed_permutations(even_only):
        images = []
        for v in D4_VECTORS:
            w = [0, 0, 0, 0]
            for k, a in enumerate(v):
                w[perm[k]] = signs[k] * a
            images.append(_root_index_of_vector(tuple(w)))
        perms.append(tuple(images))
    return sorted(set(perms))


def mask_orbit_rep(mask: int, perms: Sequence[tuple[int, ...]]) -> int:
    """Lexicographically smallest bitmask in the orbit under index perms."""
    best = mask
    for p in perms:
        img = 0
        for k in range(12):
            if mask >> k & 1:
                img |= 1 << p[k]
        if img < best:
            best = img
    return best


# --- unimodularity over all 4096 subsets -------------------------------------

_UNIMODULAR_MASKS: list[bool] | None = None


def unimodular_mask_table() -> list[bool]:
    """unimodular?[mask] for every subset of the 12 positive roots."""
    global _UNIMODULAR_MASKS
    if _UNIMODULAR_MASKS is None:
        table = []
        for mask in range(4096):
            vecs = [D4_VECTORS[k] for k in range(12) if mask >> k & 1]
            table.append(_unimodular_int_vectors(vecs))
        _UNIMODULAR_MASKS = table
    return _UNIMODULAR_MASKS


def _unimodular_int_vectors(vectors: Sequence[Vector]) -> bool:
    if not vectors:
        return True
    r = linalg.rank(vectors)
    basis: list[Vector] = []
    for v in vectors:
        if linalg.rank(basis + [v]) > len(basis):
            basis.append(v)
        if len(basis) == r:
            break
    row_set = None
    for rows in combinations(range(4), r):
        sub = [[b[k] for k in rows] for b in basis]
        d = linalg.det(sub)
        if d != 0:
            row_set, base_det = rows, abs(d)
            break
    for sel in combinations(vectors, r):
        sub = [[v[k] for k in row_set] for v in sel]
        d = abs(linalg.det(sub))
        if d != 0 and d != base_det:
            return False
        if d != 0 and d % base_det != 0:
            return False
    return True


def contains_quadruple(mask: int) -> bool:
    return any(mask & q == q for q in QUADRUPLE_MASKS)


@dataclass
class UnextendibleReport:
    classes: list[dict]          # label, size (m), instance masks
    n_unextendible: int
    n_three_triple_sets: int
    parity_split: tuple[int, int]  # (even, odd) triad parities among the 64
    class_split: tuple[int, int]   # (A4-e, K33*) counts among the 64
    odd_parity_a4e: int            # odd-parity sets that are nonetheless A4-e


def unextendible_unimodular_subsystems() -> UnextendibleReport:
    """Brute force over all 2^12 root subsets (Prop-level classification).

    Classes are matroid-isomorphism classes.  Triad parity is reported
    alongside because it is a natural labeling of the 64 three-triple sets,
    but it does not coincide with the class split: every even-parity set is
    A4-e, while the odd-parity sets are half K33* and half A4-e.
    """
    table = unimodular_mask_table()
    unext = []
    for mask in range(4096):
        if not table[mask]:
            continue
        if any(table[mask | 1 << k] for k in range(12) if not mask >> k & 1):
            continue
        unext.append(mask)

    by_label: dict[str, list[int]] = {}
    for mask in unext:
        size = bin(mask).count("1")
        label = "quadruple" if size == 4 else triad_class(mask_roots(mask))
        by_label.setdefault(label, []).append(mask)
    classes = [
        {
            "label": label,
            "m": bin(masks[0]).count("1"),
            "masks": sorted(masks),
        }
        for label, masks in sorted(by_label.items())
    ]

    three_triple_sets = _three_triple_sets()
    even = odd = a4e = odd_a4e = 0
    for s in three_triple_sets:
        parity = triad_of(mask_roots(s)).minus_count % 2
        cls = triad_class(mask_roots(s))
        if parity == 0:
            even += 1
        else:
            odd += 1
        if cls == "A4-e":
            a4e += 1
            if parity == 1:
                odd_a4e += 1
    return UnextendibleReport(
        classes=classes,
        n_unextendible=len(unext),
        n_three_triple_sets=len(three_triple_sets),
        parity_split=(even, odd),
        class_split=(a4e, len(three_triple_sets) - a4e),
        odd_parity_a4e=odd_a4e,
    )


def _three_triple_sets() -> list[int]:
    """All 9-root subsets that are unions of three disjoint triples."""
    out = []
    for mask in range(4096):
        if bin(mask).count("1") != 9:
            continue
        if contains_quadruple(mask):
            continue
        try:
            triad_of(mask_roots(mask))
        except ValueError:
            continue
        out.append(mask)
    return out


def frame_map() -> tuple[Vector, ...]:
    """Integer matrix bridging the Eq-frame P_V(D4) to the root frame.

    Columns are 12+, 12-, 34+, 34-; it maps the 12 edge directions of
    P_V(D4) onto the 12 root directions and A^T A = 2I, so the
    inverse-transpose is A/2.
    """
    return ((1, 1, 0, 0), (1, -1, 0, 0), (0, 0, 1, 1), (0, 0, 1, -1))
