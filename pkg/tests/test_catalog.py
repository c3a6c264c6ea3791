from fractions import Fraction as F

from medial import catalog
from medial.geometry import interior_labels, main_cuts, realize
from medial.rewrite import replay_certificate
from medial.trees import arity, leaf_labels


def test_relation_shapes_and_transpositions():
    expect = {
        "kock16": (16, ("f", "g")),
        "bm9": (9, ("e", "g")),
        "configA": (10, ("d", "g")),
        "configB": (10, ("c", "g")),
        "case2": (10, ("f", "g")),
    }
    for name, (n, letters) in expect.items():
        rel = catalog.RELATIONS[name]
        assert arity(rel.lhs) == arity(rel.rhs) == n
        assert sorted(leaf_labels(rel.lhs)) == list(range(1, n + 1))
        assert rel.transposed_letters() == letters
        # both sides share the bracketing and operations
        from medial.trees import strip_labels

        assert strip_labels(rel.lhs) == strip_labels(rel.rhs)


def test_kock16_realizes_four_by_four_grid():
    p = realize(catalog.KOCK16.lhs)
    xs = {b.x1 for b in p.blocks} | {b.x2 for b in p.blocks}
    ys = {b.y1 for b in p.blocks} | {b.y2 for b in p.blocks}
    quarters = {F(0), F(1, 4), F(1, 2), F(3, 4), F(1)}
    assert xs == quarters and ys == quarters
    assert len(p) == 16


def test_config_a_blocks():
    rel = catalog.CONFIG_A
    p = realize(rel.lhs)
    names = rel.names
    assert interior_labels(p) == {names["d"], names["g"]}
    d = p.block_with_label(names["d"])
    assert (d.x1, d.x2, d.y1, d.y2) == (F(1, 4), F(1, 2), F(1, 2), F(3, 4))
    g = p.block_with_label(names["g"])
    assert (g.x1, g.x2, g.y1, g.y2) == (F(1, 2), F(3, 4), F(1, 4), F(1, 2))
    assert len(main_cuts(p)) == 2


def test_case1_middle_slice_blocks():
    cfg = catalog.CASE1
    p = realize(cfg.monomial)
    names = cfg.names
    # the four tracked blocks line up left to right in the middle band
    xs = [
        (p.block_with_label(names[x]).x1, p.block_with_label(names[x]).x2)
        for x in "defg"
    ]
    assert xs == [
        (F(1, 4), F(3, 8)),
        (F(3, 8), F(1, 2)),
        (F(1, 2), F(5, 8)),
        (F(5, 8), F(3, 4)),
    ]
    assert interior_labels(p) == {names[x] for x in "defg"}


def test_seven_block_configurations_realize_seven_blocks():
    for cfg in catalog.SEVEN_BLOCKS:
        p = realize(cfg.monomial)
        assert len(p) == 7
        assert len(interior_labels(p)) == 2


def test_bundled_certificates_replay_and_state_their_relations():
    for name, rel in catalog.RELATIONS.items():
        cert = catalog.load_certificate(name)
        assert cert.initial == rel.lhs
        assert cert.final == rel.rhs
        assert replay_certificate(cert)


def test_config_a_certificate_has_twenty_interchanges():
    cert = catalog.load_certificate("configA")
    assert cert.interchange_count == 20
