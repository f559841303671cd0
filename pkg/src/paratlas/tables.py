"""The two reference tables of the classification.

Delaunay numbers N_D are historical labels: they cannot be derived from the
geometry, so each enumerated record is matched to its table row by structural
signature and inherits the label.  Table 1 covers the 17 zonotopal types,
Table 2 the 35 types whose representative is a sum of the 24-cell with a
(possibly empty) zonotope of D4 roots.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Table1Row:
    nd: str
    m: int
    graph_label: str


# N_D 1..19 except 2 and 3 (those are not zonotopal); ordered by (-m, label)
# as a fixed presentation order.
TABLE1: tuple[Table1Row, ...] = tuple(
    Table1Row(nd, m, g)
    for nd, m, g in [
        ("1", 10, "K5"),
        ("4", 9, "K5-1"),
        ("19", 9, "K33*"),
        ("5", 8, "K5-2x1"),
        ("6", 8, "K5-2"),
        ("7", 7, "K5-1-2"),
        ("8", 7, "K4+1"),
        ("9", 7, "C2221"),
        ("10", 7, "K5-3"),
        ("11", 6, "C222"),
        ("12", 6, "C321"),
        ("13", 6, "C221+1"),
        ("16", 6, "C3+C3"),
        ("14", 5, "C4+1"),
        ("15", 5, "C5"),
        ("17", 5, "C3+2x1"),
        ("18", 4, "4x1"),
    ]
)


@dataclass(frozen=True)
class Table2Row:
    nd: str
    m: int
    roots: tuple[str, ...]
    # root symbols grouped as printed: parenthesized maximal orthogonal
    # pairs/triples, e.g. "(13-,13+),14-"
    roots_display: str
    graph_label: str
    dim_u: int
    nd0: str


def _row(nd, m, display, graph, dim_u, nd0) -> Table2Row:
    syms = tuple(
        display.replace("(", "").replace(")", "").split(",")
    ) if display else ()
    return Table2Row(nd, m, syms, display, graph, dim_u, nd0)


TABLE2: tuple[Table2Row, ...] = (
    _row("2", 9, "(12-,12+,34-),(13-,13+,24-),(14-,14+,23-)", "K5-1", 4, "4"),
    _row("3", 9, "(12-,12+,34-),(13-,13+,24+),(14-,14+,23-)", "K33*", 4, "19"),
    _row("20", 8, "(12-,12+,34-),(13-,13+,24-),(14+,23-)", "K5-2", 4, "6"),
    _row("21", 8, "(12-,12+,34-),(13-,13+,24-),(14-,14+)", "K5-2x1", 4, "5"),
    _row("22", 7, "(12+,34-),(13-,13+,24-),(14-,14+)", "K5-3", 4, "10"),
    _row("23", 7, "34-,(13-,13+,24-),(14-,14+,23-)", "C2221", 4, "9"),
    _row("24", 7, "(12-,12+,34-),(13-,13+,24-),14+", "K5-1-2", 4, "7"),
    _row("25", 7, "(12+,34-),(13-,13+,24-),(14+,23-)", "K4+1", 4, "8"),
    _row("26", 7, "(12-,12+,34-),(13-,13+),(14-,14+)", "K5-1-2", 4, "7"),
    _row("27", 6, "(12-,12+,34-),(13-,13+),14+", "C321", 4, "12"),
    _row("28", 6, "(12+,34-),(13-,13+,24-),14+", "C221+1", 4, "13"),
    _row("29", 6, "(13-,13+,24-),(14-,14+,23-)", "C222", 4, "11"),
    _row("30", 6, "(12+,34-),(13+,24-),(14-,14+)", "C221+1", 4, "13"),
    _row("31", 6, "(12-,12+),(13-,13+),(14-,14+)", "C222", 4, "11"),
    _row("32", 6, "(12+,34-),(13-,24-),(14-,14+)", "C3+C3", 4, "16"),
    _row("33", 6, "(12+,34-),(13+,24-),(14+,23-)", "K4", 3, "a1"),
    _row("34", 5, "12+,(13-,13+,24-),14+", "C3+2x1", 4, "17"),
    _row("35", 5, "(12-,12+,34-),13-,14+", "C5", 4, "15"),
    _row("36", 5, "(13-,13+,24-),(14-,14+)", "C4+1", 4, "14"),
    _row("37", 5, "(12-,12+),(13-,13+),14+", "C4+1", 4, "14"),
    _row("38", 5, "(12+,34-),(13-,13+),14+", "C3+2x1", 4, "17"),
    _row("39", 5, "(12+,34-),(13+,24-),14+", "C221", 3, "a2"),
    _row("40", 4, "(13-,13+,24-),14+", "4x1", 4, "18"),
    _row("41", 4, "12+,(13-,13+),14+", "4x1", 4, "18"),
    _row("42", 4, "(12+,34-),13+,14+", "C3+1", 3, "a3"),
    _row("43", 4, "(13+,24-),(14-,14+)", "4x1", 4, "18"),
    _row("44", 4, "(13-,13+),(14-,14+)", "C4", 3, "a4"),
    _row("45", 3, "(14-,14+,23-)", "3x1", 3, "a5"),
    _row("46", 3, "(13-,13+),14-", "3x1", 3, "a5'"),
    _row("47", 3, "12+,13+,14+", "3x1", 3, "a5''"),
    _row("St", 3, "34-,13+,14+", "C3", 2, "alpha"),
    _row("48", 2, "(14-,14+)", "2x1", 2, "beta1"),
    _row("49", 2, "13+,14+", "2x1", 2, "beta2"),
    _row("50", 1, "14+", "1", 1, "-"),
    _row("51", 0, "", "24-cell", 0, "-"),
)

# shape names behind the lower-dimensional N_D0 labels
ND0_SHAPES: dict[str, str] = {
    "a1": "permutohedron (truncated octahedron)",
    "a2": "elongated dodecahedron",
    "a3": "hexagonal prism",
    "a4": "rhombic dodecahedron",
    "a5": "box with mutually orthogonal edges",
    "a5'": "parallelepiped with a pair of rectangle facets",
    "a5''": "parallelepiped without rectangle facets",
    "alpha": "centrally symmetric hexagon",
    "beta1": "rectangle",
    "beta2": "parallelogram without orthogonal edges",
}


def table2_signature_map() -> dict[tuple, str]:
    """(graph_label, m, dimU, |tau|, |pi|) -> N_D; injective over the table."""
    from . import roots as _roots

    out: dict[tuple, str] = {}
    for r in TABLE2:
        sig = (
            r.graph_label,
            r.m,
            r.dim_u,
            len(_roots.tau(r.roots)) if r.roots else 0,
            len(_roots.pi(r.roots)) if r.roots else 0,
        )
        if sig in out:
            raise AssertionError(f"ambiguous Table 2 signature {sig}")
        out[sig] = r.nd
    return out


def table1_by_signature() -> dict[tuple[str, int], str]:
    out: dict[tuple[str, int], str] = {}
    for r in TABLE1:
        key = (r.graph_label, r.m)
        assert key not in out, f"ambiguous Table 1 signature {key}"
        out[key] = r.nd
    return out
