import random

import pytest

from chirality.catalog import MMIC_NAMES, named
from chirality.certificates import (
    ACHIRAL,
    CHIRAL,
    UNRESOLVED,
    AddedEdgeMirrorCertificate,
    ChiralityCertificate,
    HypothesisError,
    TwinMirrorCertificate,
    TypeOneCertificate,
    check_added_edge_mirror,
    classify_embeddability,
    find_added_edge_mirror,
    find_chirality_certificate,
    find_twin_mirror,
    find_type1,
    iter_chirality_certificates,
    nonsimple_achiral,
    verify_added_edge_mirror,
    verify_certificate,
    verify_chirality,
    verify_nonsimple,
    verify_type1,
    verify_verdict,
)
from chirality.graph import GraphError, Multigraph, complete, complete_bipartite, cycle, moebius_ladder
from chirality.planarity import is_planar, planar

from conftest import brute_type1, random_simple

V = [f"v{i}" for i in range(1, 8)]
K33 = [(x, y) for x in V[:3] for y in V[3:6]]


def labeled(pairs, names=V):
    return Multigraph.from_labeled(names, pairs)


# -- type 1 ----------------------------------------------------------------------


def test_k6_has_type1_fixing_a_k4():
    cert = find_type1(complete(6))
    assert cert is not None and len(cert.V1) == 4 and len(cert.W2) == 1
    assert verify_type1(complete(6), cert)


def test_k7_has_no_type1_exhaustively():
    assert find_type1(complete(7)) is None
    assert brute_type1(complete(7)) == []


def test_k33_type1():
    g = complete_bipartite(3, 3)
    cert = find_type1(g)
    assert cert is not None and verify_type1(g, cert)


def test_type1_side_assignment_is_complete():
    rng = random.Random(17)
    graphs = [named(n).graph for n in ("K33", "H1", "H2", "G_12_7_2", "G_12_9_1", "G_11_8_1")]
    graphs += [complete(6), moebius_ladder(4), cycle(8)]
    graphs += [random_simple(rng, rng.randint(5, 10), 0.45) for _ in range(120)]
    for g in graphs:
        expected = brute_type1(g)
        found = find_type1(g)
        assert (found is not None) == bool(expected)
        if found is not None:
            assert verify_type1(g, found)


def test_type1_verifier_rejects_tampering():
    g = complete_bipartite(3, 3)
    cert = find_type1(g)
    assert not verify_type1(g, TypeOneCertificate(cert.phi, cert.V1, cert.W2p + cert.W2, ()))
    assert not verify_type1(g, TypeOneCertificate(tuple(range(6)), tuple(range(6)), (), ()))


# -- twin mirror ------------------------------------------------------------------


def test_k33_twin_pair_in_one_part():
    cert = find_twin_mirror(complete_bipartite(3, 3))
    assert cert is not None and {cert.v, cert.w} <= {0, 1, 2}


def test_twin_pair_in_h1_configuration():
    g = labeled(K33 + [("v1", "v7"), ("v6", "v7"), ("v2", "v7")])
    v4, v5 = g.vertex("v4"), g.vertex("v5")
    stated = TwinMirrorCertificate(v4, v5, is_planar(g.without_vertices([v4, v5])))
    assert verify_certificate(g, stated)
    cert = find_twin_mirror(g)
    assert cert is not None and verify_certificate(g, cert)


def test_k7_has_no_twin_mirror():
    assert find_twin_mirror(complete(7)) is None


def test_twin_verifier_rejects_non_twins():
    g = complete_bipartite(3, 3)
    cert = find_twin_mirror(g)
    assert not verify_certificate(g, TwinMirrorCertificate(0, 3, cert.witness))


# -- added-edge mirror ---------------------------------------------------------------


def test_added_edge_on_k33():
    x1, x2, x3, y1, y2 = 0, 1, 2, 3, 4
    gp = complete_bipartite(3, 3).add_edge(x1, x3)
    cert = check_added_edge_mirror(gp, ((x1, x2), (y1, y2)), (x1, x3))
    assert isinstance(cert, AddedEdgeMirrorCertificate)
    assert len(cert.adjacencies) == 4
    assert verify_added_edge_mirror(gp, cert)


def test_added_edge_in_h1_configuration():
    g = labeled(K33 + [("v1", "v7"), ("v4", "v7")])
    gp = g.add_edge(g.vertex("v1"), g.vertex("v2"))
    pairs = ((gp.vertex("v2"), gp.vertex("v3")), (gp.vertex("v5"), gp.vertex("v6")))
    cert = check_added_edge_mirror(gp, pairs, gp.edge("v1", "v2"))
    assert cert is not None and verify_certificate(gp, cert)
    assert find_added_edge_mirror(gp) is not None


def test_added_edge_hypothesis_failures_are_itemised():
    gp = complete_bipartite(3, 3)
    with pytest.raises(HypothesisError) as info:
        check_added_edge_mirror(gp, ((0, 3), (1, 4)), (0, 3))
    assert any("not a twin pair" in f for f in info.value.failures)
    doubled = Multigraph(6, gp.edges + ((0, 3),))
    with pytest.raises(HypothesisError) as info:
        check_added_edge_mirror(doubled, ((0, 1), (3, 4)), (0, 3))
    assert info.value.failures == ["the graph with the added edge is not simple"]


# -- non-simple rules ------------------------------------------------------------------


def test_nonsimple_variants():
    k33 = complete_bipartite(3, 3)
    dbl = Multigraph(6, k33.edges + ((0, 1), (0, 1)))
    cert = nonsimple_achiral(dbl)
    assert cert.variant == "DoubleEdgeOverK33" and verify_nonsimple(dbl, cert)
    loop = Multigraph(6, k33.edges + ((2, 2),))
    cert = nonsimple_achiral(loop)
    assert cert.variant == "LoopOnK33" and verify_nonsimple(loop, cert)
    tri = Multigraph(3, cycle(3).edges + ((0, 1),))
    assert nonsimple_achiral(tri).variant == "Planar"
    over_edge = Multigraph(6, k33.edges + ((0, 3),))
    cert = nonsimple_achiral(over_edge)
    assert cert.variant == "DoubleEdgePlanar" and verify_nonsimple(over_edge, cert)


def test_nonsimple_with_pendant_isolated_vertex():
    k33 = complete_bipartite(3, 3)
    g = Multigraph(7, k33.edges + ((0, 6), (0, 6)))
    cert = nonsimple_achiral(g)
    assert cert.variant == "DoubleEdgeOverK33" and verify_nonsimple(g, cert)


def test_nonsimple_gives_up_on_k5_with_loop():
    g = Multigraph(5, complete(5).edges + ((0, 0),))
    assert nonsimple_achiral(g) is None


# -- chirality ---------------------------------------------------------------------


def _names(g, edges):
    return {frozenset((g.name(u), g.name(v))) for u, v in edges}


HEX = {frozenset(p) for p in [("a1", "a2"), ("a2", "a3"), ("a3", "b1"), ("b1", "b2"), ("b2", "b3"), ("b3", "a1")]}


def test_12_7_2_stated_certificate_is_reachable():
    g = named("G_12_7_2").graph
    found = [c for c in iter_chirality_certificates(g)
             if _names(g, c.D) == {frozenset(("a1", "b2")), frozenset(("b1", "a2"))} and _names(g, c.C) == HEX]  # fmt: skip
    assert found and found[0].n == 3
    assert verify_chirality(g, found[0])


def test_12_9_1_certificate_without_deletions():
    g = named("G_12_9_1").graph
    cert = find_chirality_certificate(g)
    assert cert.D == () and cert.n == 3
    assert _names(g, cert.C) == HEX
    assert verify_chirality(g, cert)


def test_k33_has_no_chirality_certificate():
    assert find_chirality_certificate(complete_bipartite(3, 3)) is None


def test_chirality_verifier_checks_the_audit_is_total():
    g = named("G_12_7_2").graph
    cert = find_chirality_certificate(g)
    partial = ChiralityCertificate(cert.D, cert.C, cert.n, cert.core_map, cert.audit[:1])
    assert not verify_chirality(g, partial)
    wrong_c = ChiralityCertificate(cert.D, cert.C[1:], cert.n, cert.core_map, cert.audit)
    assert not verify_chirality(g, wrong_c)


def test_chirality_search_needs_simple_input():
    with pytest.raises(GraphError):
        find_chirality_certificate(Multigraph(2, ((0, 1), (0, 1))))


# -- classification ---------------------------------------------------------------


def test_classify_examples():
    assert classify_embeddability(complete(4)).certificate.kind == "planar"
    assert classify_embeddability(named("G_12_8_2").graph).status == CHIRAL
    v = classify_embeddability(complete_bipartite(3, 3))
    assert v.status == ACHIRAL and v.certificate.kind == "twin_mirror"
    with pytest.raises(GraphError):
        classify_embeddability(Multigraph(2, ()))


def test_catalog_exclusivity():
    for name in MMIC_NAMES:
        v = classify_embeddability(named(name).graph)
        assert v.status == CHIRAL, name
        assert verify_verdict(named(name).graph, v)
    for g in [named(n).graph for n in ("K33", "K5", "M3", "H1", "H2")] + [complete(6)]:
        v = classify_embeddability(g)
        assert v.status == ACHIRAL
        assert verify_verdict(g, v)


def test_k7_is_unresolved():
    assert classify_embeddability(complete(7)).status == UNRESOLVED


def test_every_found_certificate_verifies_on_random_nonplanar_graphs():
    rng = random.Random(23)
    checked = 0
    while checked < 40:
        g = random_simple(rng, rng.randint(6, 9), 0.5)
        if planar(g) or len(g.components()) != 1:
            continue
        checked += 1
        v = classify_embeddability(g)
        assert verify_verdict(g, v)


def test_verdict_json_shapes():
    v = classify_embeddability(named("G_12_7_2").graph)
    data = v.to_json()
    assert data["status"] == "Chiral"
    assert data["certificate"]["n"] == 3
    assert len(data["certificate"]["audit"]) == 2
