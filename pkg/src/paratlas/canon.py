"""Canonical forms of vertex-colored graphs.

Color refinement plus individualization with backtracking.  Small instances
only (the largest graphs here have ~150 nodes), so the exponential worst case
is irrelevant; correctness is what matters: two colored graphs get the same
certificate if and only if they are isomorphic by a color-preserving map.
"""

from __future__ import annotations

from typing import Sequence


def refine(adj: Sequence[Sequence[int]], colors: list[int]) -> list[int]:
    """Iterated color refinement: color <- (color, sorted neighbor colors)."""
    n = len(adj)
    colors = list(colors)
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(n)
        ]
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new_colors = [palette[s] for s in sigs]
        if new_colors == colors:
            return colors
        colors = new_colors


def _partition_signature(colors: list[int]) -> tuple:
    counts: dict[int, int] = {}
    for c in colors:
        counts[c] = counts.get(c, 0) + 1
    return tuple(sorted(counts.items()))


def _certificate_of_discrete(
    adj: Sequence[Sequence[int]], colors: list[int]
) -> tuple:
    order = sorted(range(len(adj)), key=lambda v: colors[v])
    pos = {v: i for i, v in enumerate(order)}
    edges = sorted(
        (pos[v], pos[u]) for v in range(len(adj)) for u in adj[v] if pos[v] < pos[u]
    )
    return (tuple(colors[v] for v in order), tuple(edges))


def canonical_form(
    adj: Sequence[Sequence[int]], init_colors: Sequence[int]
) -> tuple:
    """Canonical certificate of a colored graph.

    The initial coloring is part of the input: only isomorphisms preserving it
    are considered.  Returns a hashable tuple; compare for equality only.
    """
    best: list[tuple | None] = [None]

    def search(colors: list[int], path: tuple) -> None:
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            cert = (path, _certificate_of_discrete(adj, colors))
            if best[0] is None or cert < best[0]:
                best[0] = cert
            return
        # Branch on every member of the first non-singleton cell.  Children
        # whose refined partition signature is not minimal are pruned: the
        # signature is isomorphism-invariant and is a component of the leaf
        # certificate, so the minimum lives under a minimal-signature child.
        children = []
        fresh = max(colors) + 1
        for v in target:
            child = list(colors)
            child[v] = fresh
            child = refine(adj, child)
            children.append((_partition_signature(child), child))
        min_sig = min(sig for sig, _ in children)
        for sig, child in children:
            if sig == min_sig:
                search(child, path + (sig,))

    start = refine(adj, list(init_colors))
    search(start, (_partition_signature(start),))
    assert best[0] is not None
    return best[0]


def bipartite_certificate(
    n_left: int, n_right: int, edges: Sequence[tuple[int, int]]
) -> tuple:
    """Certificate of a bipartite incidence structure.

    Left nodes get color 0 and right nodes color 1, so the two sides can never
    be exchanged.  ``edges`` are (left_index, right_index) pairs.
    """
    adj: list[list[int]] = [[] for _ in range(n_left + n_right)]
    for a, b in edges:
        assert 0 <= a < n_left and 0 <= b < n_right
        adj[a].append(n_left + b)
        adj[n_left + b].append(a)
    colors = [0] * n_left + [1] * n_right
    return (n_left, n_right, canonical_form(adj, colors))
