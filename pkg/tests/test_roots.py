from paratlas import graphs, roots


def test_positive_roots_order():
    syms = [r.symbol for r in roots.D4_ROOTS]
    assert syms == [
        "12-", "12+", "13-", "13+", "14-", "14+",
        "23-", "23+", "24-", "24+", "34-", "34+",
    ]
    assert roots.D4_VECTORS[0] == (1, -1, 0, 0)
    assert roots.D4_VECTORS[1] == (1, 1, 0, 0)


def test_quadruples():
    qs = roots.quadruples()
    assert [[r.symbol for r in q.roots] for q in qs] == [
        ["12-", "12+", "34-", "34+"],
        ["13-", "13+", "24-", "24+"],
        ["14-", "14+", "23-", "23+"],
    ]
    for q in qs:
        vs = [r.vector() for r in q.roots]
        assert all(
            sum(a * b for a, b in zip(u, v)) == 0
            for i, u in enumerate(vs)
            for v in vs[i + 1:]
        )


def test_completing_root():
    triple = [roots.D4_ROOTS[roots.D4_INDEX[s]] for s in ("12-", "12+", "34-")]
    assert roots.completing_root(triple).symbol == "34+"


def test_tau_and_pi():
    assert [[r.symbol for r in t.roots] for t in roots.tau(["12-", "12+", "34-"])] == [
        ["12-", "12+", "34-"]
    ]
    assert [sorted(r.symbol for r in p) for p in roots.pi(["12-", "34-"])] == [
        ["12-", "34-"]
    ]
    # a pair inside a triple is not maximal, so pi is empty there
    assert roots.pi(["12-", "12+", "34-"]) == []


def test_mask_round_trip():
    mask = roots.root_mask(["12-", "13+", "34+"])
    assert sorted(r.symbol for r in roots.mask_roots(mask)) == ["12-", "13+", "34+"]


def test_unimodular_mask_table():
    table = roots.unimodular_mask_table()
    assert len(table) == 4096
    assert sum(table) == 3378
    assert table[0]  # empty system
    # a bare quadruple has a single basic subset, hence is unimodular, but
    # adding any further root breaks the fixed-length test
    for qmask in roots.QUADRUPLE_MASKS:
        assert table[qmask]
        assert roots.contains_quadruple(qmask)
        for k in range(12):
            if not qmask >> k & 1:
                assert not table[qmask | 1 << k]


def test_mask_orbit_rep_is_invariant():
    perms = roots.root_permutations()
    mask = roots.root_mask(["12-", "13+", "24-"])
    rep = roots.mask_orbit_rep(mask, perms)
    for p in perms[:50]:
        image = 0
        for k in range(12):
            if mask >> k & 1:
                image |= 1 << p[k]
        assert roots.mask_orbit_rep(image, perms) == rep


def test_triad_class_matches_matroid_label():
    r = roots.unextendible_unimodular_subsystems()
    for cls in r.classes:
        if cls["label"] == "quadruple":
            continue
        for mask in cls["masks"]:
            syms = [rt.symbol for rt in roots.mask_roots(mask)]
            assert roots.triad_class(syms) == cls["label"]
            graph_label = {"A4-e": "K5-1", "K33*": "K33*"}[cls["label"]]
            assert graphs.system_label(roots.mask_system(mask)) == graph_label


def test_unextendible_report():
    r = roots.unextendible_unimodular_subsystems()
    assert [(c["label"], len(c["masks"])) for c in sorted(r.classes, key=lambda c: c["label"])] == [
        ("A4-e", 48),
        ("K33*", 16),
        ("quadruple", 3),
    ]
    assert r.n_unextendible == 67
    assert r.n_three_triple_sets == 64
    assert r.parity_split == (32, 32)
    assert r.class_split == (48, 16)
    assert r.odd_parity_a4e == 16
