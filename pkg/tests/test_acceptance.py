"""Acceptance gate: the ten end-to-end criteria for the catalog.

Heavy shared artifacts (atlas, exhaustive scan) come from session fixtures;
each criterion is a separate test so failures localize.
"""

import subprocess
import sys
import time

from paratlas import atlas as atlas_mod
from paratlas import construct, roots, tables, verify


# 1. zonotopal catalog: 17 records, fast, matching the reference table
def test_criterion_1_zonotopal_enumeration():
    t0 = time.monotonic()
    records = atlas_mod.enumerate_zonotopal()
    elapsed = time.monotonic() - t0
    assert elapsed < 60
    assert len(records) == 17
    expected_m = {r.graph_label: r.m for r in tables.TABLE1}
    expected_nd = {r.graph_label: r.nd for r in tables.TABLE1}
    for rec in records:
        assert rec.m == expected_m[rec.graph_label]
        assert rec.nd == expected_nd[rec.graph_label]
        assert len(rec.generators) == rec.m


# 2. the 24-cell: f-vector, belt census, all zones open
def test_criterion_2_cell24(cell24):
    assert cell24.f_vector() == (24, 96, 96, 24)
    belts = cell24.belts()
    assert len(belts) == 16
    assert all(b.size == 6 for b in belts)
    zones = cell24.edge_zones()
    assert len(zones) == 12
    assert not any(z.closed for z in zones)


# 3. facet/belt count formulas across every sum row
def test_criterion_3_pvz_formulas(atlas):
    report = verify.verify_pvz(atlas)
    assert sum(1 for c in report.checks if c.label.startswith("row ")) == 34
    assert report.ok, "\n".join(report.lines())


# 4. exhaustive scan of all 4096 root subsets
def test_criterion_4_exhaustive_scan(scan_with_timing):
    result, elapsed = scan_with_timing
    assert elapsed < 30 * 60
    assert result.ok
    assert result.mismatches == []
    table = roots.unimodular_mask_table()
    predicate = [
        m
        for m in range(4096)
        if table[m] and not roots.contains_quadruple(m)
    ]
    assert result.venkov_masks == predicate
    assert len(result.distinct_certificates()) == 35


# 5. 52 pairwise distinct combinatorial types
def test_criterion_5_distinct_certificates(atlas):
    assert len(atlas.records) == 52
    certs = [r.certificate for r in atlas.records]
    assert len(set(certs)) == 52
    zon = {r.certificate for r in atlas.records if r.kind == "zonotopal"}
    other = {r.certificate for r in atlas.records if r.kind != "zonotopal"}
    assert not (zon & other)


# 6. segment directions addable to the D_n Voronoi cell, both routes
def test_criterion_6_sdn():
    r4 = construct.sdn_validate(4)
    assert r4.ok
    assert len(r4.accepted_belt_test) == 12
    assert r4.accepted_belt_test == r4.accepted_brute_force
    assert r4.belt_pattern_counts.get("other", 0) == 0
    assert set(r4.belt_pattern_counts) <= {"a", "b"}

    r3 = construct.sdn_validate(3)
    assert r3.ok
    assert len(r3.accepted_belt_test) == 7
    assert r3.accepted_belt_test == r3.accepted_brute_force
    assert r3.belt_pattern_counts.get("other", 0) == 0


# 7. unextendible unimodular subsystems and the three-triple census
def test_criterion_7_unextendible():
    report = verify.verify_unext()
    assert report.ok, "\n".join(report.lines())
    r = roots.unextendible_unimodular_subsystems()
    assert r.n_three_triple_sets == 64
    assert r.parity_split == (32, 32)
    # the two classes split 48/16 by matroid; every even-parity set is A4-e
    assert r.class_split == (48, 16)
    assert r.odd_parity_a4e == 16


# 8. zone/width/erosion equivalence and the decomposition trichotomy
def test_criterion_8_pnz(atlas):
    report = verify.verify_pnz(atlas)
    assert report.ok, "\n".join(report.lines())


def test_criterion_8_pzs(atlas):
    report = verify.verify_pzs(atlas)
    assert report.ok, "\n".join(report.lines())


def test_segment_addition_routes_agree(atlas):
    report = verify.verify_sum(atlas)
    assert report.ok, "\n".join(report.lines())


# 9. zonotope parallelotopes are those spanning a unimodular system
def test_criterion_9_mcmullen(atlas):
    report = verify.verify_mcmullen(atlas)
    assert report.ok, "\n".join(report.lines())
    negative = [
        c for c in report.checks if "spans no unimodular system" in c.label
    ]
    assert len(negative) >= 10


# 10. byte-identical output across repeated full runs
def test_criterion_10_determinism(tmp_path):
    def enumerate_all(path):
        proc = subprocess.run(
            [sys.executable, "-m", "paratlas.cli", "enumerate", "all",
             "--out", str(path)],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0, proc.stderr
        return path.read_bytes()

    first = enumerate_all(tmp_path / "run1.json")
    second = enumerate_all(tmp_path / "run2.json")
    assert first == second

    def table_bytes(which):
        proc = subprocess.run(
            [sys.executable, "-m", "paratlas.cli", "tables", which],
            capture_output=True,
        )
        assert proc.returncode == 0
        return proc.stdout

    for which in ("1", "2"):
        assert table_bytes(which) == table_bytes(which)
