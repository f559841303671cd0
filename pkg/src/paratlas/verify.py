"""Machine checks for every proposition behind the classification.

Each checker returns a Report of labelled pass/fail entries; nothing is
sampled away silently — where a check covers only a sample, the label says
so.  All checkers are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import atlas as atlas_mod
from . import construct, graphs, linalg, polytope, roots, tables
from .linalg import Vector


@dataclass
class Check:
    label: str
    ok: bool
    detail: str = ""


@dataclass
class Report:
    name: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, label: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(label, bool(ok), detail))

    def lines(self) -> list[str]:
        out = [f"[{self.name}] {'PASS' if self.ok else 'FAIL'}"]
        for c in self.checks:
            mark = "ok " if c.ok else "FAIL"
            suffix = f"  ({c.detail})" if c.detail else ""
            out.append(f"  {mark} {c.label}{suffix}")
        return out


def _default_atlas() -> atlas_mod.Atlas:
    return atlas_mod.build_atlas(run_scan=False)


def _erode_roundtrip_ok(p: polytope.Polytope, z: Vector, lam) -> bool:
    try:
        polytope.erode_segment(p, z, lam)
        return True
    except Exception:
        return False


def verify_pnz(atlas: Optional[atlas_mod.Atlas] = None) -> Report:
    """Closed zone <=> positive width <=> erode/re-add round trip.

    Checked for every record over the 12 root directions plus the record's
    own generator directions.
    """
    atlas = atlas or _default_atlas()
    rep = Report("pnz")
    for rec in atlas.records:
        p = atlas_mod.record_polytope(rec)
        dirs = [linalg.canonical_direction(v) for v in roots.D4_VECTORS]
        dirs += [
            linalg.canonical_direction(v)
            for v in atlas_mod._record_generator_vectors(rec)
        ]
        dirs = sorted(set(dirs))
        zone_dirs = {
            z.characteristic for z in p.edge_zones() if z.closed
        }
        bad = []
        for d in dirs:
            has_zone = d in zone_dirs
            w = polytope.width(p, d)
            lam = w / 2 if w > 0 else Fraction(1, 4)
            eroded = _erode_roundtrip_ok(p, d, lam)
            if not (has_zone == (w > 0) == eroded):
                bad.append((d, has_zone, w > 0, eroded))
        rep.add(
            f"record {rec.id}: zone/width/erosion agree on {len(dirs)} directions",
            not bad,
            str(bad[:3]) if bad else "",
        )
    return rep


def verify_pzs(atlas: Optional[atlas_mod.Atlas] = None) -> Report:
    """Decomposition trichotomy: point core, 24-cell core, direction multisets."""
    atlas = atlas or _default_atlas()
    rep = Report("pzs")
    cell24_cert = construct.cell24().certificate()
    for rec in atlas.records:
        p = atlas_mod.record_polytope(rec)
        d = construct.decompose(p)
        if rec.kind == "zonotopal":
            core_ok = len(d.core_points) == 1
            core_note = "point core"
        elif rec.kind == "cell24":
            core_ok = not d.segments
            core_note = "no segments"
        else:
            core_ok = d.core is not None and d.core.certificate() == cell24_cert
            core_note = "24-cell core"
        dirs_ok = True
        if rec.kind != "cell24":
            gen_dirs = sorted(
                linalg.canonical_direction(g)
                for g in atlas_mod._record_generator_vectors(rec)
            )
            dirs_ok = d.direction_multiset() == gen_dirs
        rep.add(
            f"record {rec.id}: {core_note}, directions match generators",
            core_ok and dirs_ok,
        )
    return rep


# records whose polytopes the two segment-addition routes are compared on
_SUM_SAMPLE_IDS = ("51", "45", "33", "18", "48")


def verify_sum(atlas: Optional[atlas_mod.Atlas] = None) -> Report:
    """Belt-orthogonality test vs building the sum and running Venkov."""
    atlas = atlas or _default_atlas()
    rep = Report("sum")
    for rid in _SUM_SAMPLE_IDS:
        rec = atlas.by_id(rid)
        p = atlas_mod.record_polytope(rec)
        bad = []
        for r in roots.D4_ROOTS:
            z = r.vector()
            belt = polytope.can_add_segment(p, z)
            brute = polytope.add_segment(p, z).is_parallelotope()
            if belt != brute:
                bad.append(r.symbol)
        rep.add(
            f"record {rid}: belt test agrees with brute force on 12 roots",
            not bad,
            ",".join(bad),
        )
    return rep


def verify_sdn() -> Report:
    rep = Report("sdn")
    for n, expected in ((3, 7), (4, 12)):
        r = construct.sdn_validate(n)
        rep.add(
            f"P_V(D{n}): {expected} accepted directions, both routes",
            r.ok and len(r.accepted_belt_test) == expected,
            f"belt={len(r.accepted_belt_test)} brute={len(r.accepted_brute_force)}",
        )
        rep.add(
            f"P_V(D{n}): every 3-belt matches pattern (a) or (b)",
            r.belt_pattern_counts.get("other", 0) == 0,
            str(r.belt_pattern_counts),
        )
    return rep


def verify_unext() -> Report:
    rep = Report("unext")
    r = roots.unextendible_unimodular_subsystems()
    labels = sorted(c["label"] for c in r.classes)
    rep.add(
        "3 classes of unextendible unimodular subsystems",
        labels == ["A4-e", "K33*", "quadruple"],
        ",".join(labels),
    )
    quad = next((c for c in r.classes if c["label"] == "quadruple"), None)
    rep.add(
        "the quadruple class has 3 instances",
        quad is not None and len(quad["masks"]) == 3,
    )
    rep.add(
        "64 three-disjoint-triple sets",
        r.n_three_triple_sets == 64,
        str(r.n_three_triple_sets),
    )
    rep.add(
        "triad parities split 32 even / 32 odd",
        r.parity_split == (32, 32),
        str(r.parity_split),
    )
    rep.add(
        "every even-parity set is A4-e; the class split is 48 A4-e / 16 K33*",
        r.class_split == (48, 16) and r.odd_parity_a4e == 16,
        f"class_split={r.class_split} odd_parity_a4e={r.odd_parity_a4e}",
    )
    return rep


def verify_pvz(atlas: Optional[atlas_mod.Atlas] = None) -> Report:
    """Facet/belt count formulas and the completion-root obstruction."""
    rep = Report("pvz")
    for row in tables.TABLE2:
        if not row.roots:
            continue
        r = construct.pvz_validate(row.roots)
        rep.add(
            f"row {row.nd}: facets=24+2|tau|, 3-belts=16+3|tau|, 2-belts=|pi|, "
            "additions blocked exactly at completion roots",
            r.ok,
            f"tau={r.n_tau} pi={r.n_pi}",
        )
    # contracting the zone 24- of the A4-e sum and 24+ of the K33* sum
    # leaves the same root set, whose sum is the type N_D=21
    atlas = atlas or _default_atlas()
    row2 = set(tables.TABLE2[0].roots) - {"24-"}
    row3 = set(tables.TABLE2[1].roots) - {"24+"}
    rep.add("zone contraction of rows 2 and 3 meet", row2 == row3)
    contracted = construct.sum_cell24(sorted(row2)).certificate()
    rep.add(
        "the contracted sum is type N_D=21",
        contracted == atlas.by_id("21").certificate,
    )
    return rep


def _nonunimodular_rank4_masks(
    spanning: int = 10, rescalable: int = 2
) -> tuple[list[int], list[int]]:
    """Rank-4 root subsets that fail the fixed-length unimodularity test.

    Returns (non_spanning, spans_after_rescale): the first group does not
    span a unimodular system at all, the second becomes unimodular after
    rescaling a vector (these are the subsets containing a quadruple plus
    extra roots).  Masks are taken in ascending order, size <= 7.
    """
    table = roots.unimodular_mask_table()
    non_spanning: list[int] = []
    spans: list[int] = []
    for mask in range(4096):
        if table[mask]:
            continue
        vecs = [roots.D4_VECTORS[k] for k in range(12) if mask >> k & 1]
        if len(vecs) > 7 or linalg.rank(vecs) != 4:
            continue
        if graphs.spans_unimodular(vecs):
            if len(spans) < rescalable:
                spans.append(mask)
        elif len(non_spanning) < spanning:
            non_spanning.append(mask)
        if len(non_spanning) == spanning and len(spans) == rescalable:
            break
    return non_spanning, spans


def verify_mcmullen(atlas: Optional[atlas_mod.Atlas] = None) -> Report:
    """Zonotope parallelotopes are exactly those spanning a unimodular system.

    A unimodular generator system always gives a parallelotope.  The converse
    holds up to rescaling: the zonotope depends only on the segments, so the
    right obstruction is that no positive rescaling of the generators is
    unimodular.  Subsets containing an orthogonal quadruple plus extra roots
    fail the fixed-length test yet still tile (rescaling fixes them); both
    kinds are exercised below.
    """
    atlas = atlas or _default_atlas()
    rep = Report("mcmullen")
    for rec in atlas.records:
        if rec.kind != "zonotopal":
            continue
        gens = atlas_mod._record_generator_vectors(rec)
        uni = graphs.is_unimodular(gens)
        venkov = atlas_mod.record_polytope(rec).is_parallelotope()
        rep.add(f"record {rec.id} ({rec.graph_label}): unimodular and Venkov", uni and venkov)
    non_spanning, rescalable = _nonunimodular_rank4_masks()
    rep.add(
        "found >= 10 rank-4 root subsets spanning no unimodular system",
        len(non_spanning) >= 10,
    )
    for mask in non_spanning:
        vecs = [roots.D4_VECTORS[k] for k in range(12) if mask >> k & 1]
        venkov = construct.zonotope(vecs).is_parallelotope()
        rep.add(f"mask {mask}: spans no unimodular system and Venkov fails", not venkov)
    for mask in rescalable:
        vecs = [roots.D4_VECTORS[k] for k in range(12) if mask >> k & 1]
        venkov = construct.zonotope(vecs).is_parallelotope()
        rep.add(
            f"mask {mask}: non-unimodular but rescalable, Venkov holds",
            venkov and not graphs.is_unimodular(vecs),
        )
    return rep


_PROPS = {
    "pnz": lambda a: verify_pnz(a),
    "pzs": lambda a: verify_pzs(a),
    "sum": lambda a: verify_sum(a),
    "sdn": lambda a: verify_sdn(),
    "unext": lambda a: verify_unext(),
    "pvz": lambda a: verify_pvz(a),
    "mcmullen": lambda a: verify_mcmullen(a),
}

PROP_NAMES = tuple(_PROPS)


def run(prop: str, atlas: Optional[atlas_mod.Atlas] = None) -> list[Report]:
    if prop == "all":
        names = list(PROP_NAMES)
    elif prop in _PROPS:
        names = [prop]
    else:
        raise ValueError(f"unknown proposition {prop!r}")
    if atlas is None and any(n not in ("sdn", "unext") for n in names):
        atlas = _default_atlas()
    return [_PROPS[n](atlas) for n in names]
