import random

import pytest
from hypothesis import given, settings, strategies as st

from chirality.canon import canonical_key
from chirality.catalog import named
from chirality.graph import GraphError, Multigraph, complete, complete_bipartite, cycle, moebius_ladder, path
from chirality.minors import (
    DELETE_EDGE,
    MinorModel,
    circuit_rank,
    contains_11_8_1,
    enumerate_one_step_minors,
    find_moebius_cores,
    has_minor,
    k33_routes_via_h,
    ladder_loops,
    prune_and_smooth,
    recognize_H1_H2,
)

from conftest import random_multigraph


def naive_minor_keys(g):
    """Every minor of ``g`` (including ``g``) by exhaustive closure."""
    seen = {canonical_key(g)}
    stack = [g]
    while stack:
        h = stack.pop()
        for _, m in enumerate_one_step_minors(h):
            k = canonical_key(m)
            if k not in seen:
                seen.add(k)
                stack.append(m)
    return seen


def test_model_replay_and_json_round_trip():
    g = named("M5").graph
    model = has_minor(g, "K33")
    assert model is not None and model.verify(g, named("K33").graph)
    again = MinorModel.from_json(model.to_json())
    assert again == model
    assert not MinorModel(((DELETE_EDGE, (0, 9)),)).verify(g, g)


def test_identity_model_for_the_target_itself():
    g = named("G_11_8_1").graph
    model = contains_11_8_1(g)
    assert model is not None and model.steps == ()


def test_one_step_minors_of_triangle():
    kinds = {canonical_key(m) for _, m in enumerate_one_step_minors(cycle(3))}
    assert kinds == {canonical_key(path(3)), canonical_key(Multigraph(2, ((0, 1), (0, 1))))}


def test_one_step_minors_are_replayable():
    g = named("G_12_7_2").graph
    for model, m in enumerate_one_step_minors(g):
        assert len(model.steps) == 1 and model.verify(g, m)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 5), st.integers(0, 7), st.randoms(use_true_random=False))
def test_has_minor_matches_exhaustive_closure(n, m, r):
    g = random_multigraph(r, n, m)
    closure = naive_minor_keys(g)
    targets = [cycle(3), path(3), Multigraph(2, ((0, 1), (0, 1))), Multigraph(1, ((0, 0),)),
               complete(4), Multigraph(3, ((0, 1), (1, 2), (1, 2))), Multigraph(2, ())]  # fmt: skip
    for h in targets:
        model = has_minor(g, h)
        assert (model is not None) == (canonical_key(h) in closure)
        if model is not None:
            assert model.verify(g, h)


def test_minor_relation_is_transitive_on_catalog():
    g = named("G_12_8_1").graph
    assert has_minor(g, "M3") is not None
    assert has_minor(named("M3").graph, "K33") is not None
    assert has_minor(g, "K33") is not None
    assert has_minor(named("K33").graph, "K5") is None


def test_circuit_rank_never_increases():
    rng = random.Random(3)
    for _ in range(30):
        g = random_multigraph(rng, 6, 9)
        for _, m in enumerate_one_step_minors(g):
            assert circuit_rank(m) <= circuit_rank(g)


def test_prune_and_smooth_hexagon_with_pendant():
    g = Multigraph(7, cycle(6).edges + ((0, 6),))
    s = prune_and_smooth(g)
    assert s.core.edges == ((0, 1), (0, 1))
    covered = sorted(i for c in s.chains for i in c)
    assert covered == sorted(i for i, e in enumerate(g.edges) if e != (0, 6))


def test_prune_and_smooth_subdivided_k33():
    g = named("G_11_8_1").graph
    s = prune_and_smooth(g)
    assert canonical_key(s.core) == canonical_key(complete_bipartite(3, 3))
    assert sorted(len(c) for c in s.chains) == [1] * 7 + [2, 2]
    assert prune_and_smooth(s.core).core == s.core


def test_prune_and_smooth_tree_vanishes():
    assert prune_and_smooth(path(5)).core.n == 0


def test_ladder_loops():
    assert len(ladder_loops(moebius_ladder(3))) == 6
    assert len(ladder_loops(moebius_ladder(5))) == 1
    assert ladder_loops(complete(4)) == []


def test_find_moebius_cores_on_catalog():
    cores = list(find_moebius_cores(named("G_12_9_1").graph, 0))
    assert cores and all(c.rungs == 3 and c.deleted == () for c in cores)
    with pytest.raises(GraphError):
        list(find_moebius_cores(path(3), 3))


def test_recognize_h1_h2():
    assert recognize_H1_H2(named("H1").graph) == "H1"
    assert recognize_H1_H2(named("H2").graph) == "H2"
    assert recognize_H1_H2(named("K33").graph) is None


def test_order_seven_catalog_graphs_route_through_h():
    for name in ("G_12_7_1", "G_12_7_2"):
        assert k33_routes_via_h(named(name).graph)


def test_contains_11_8_1_on_a_known_host():
    # K3,3 with path v2-v8-v4, pendant v7 at v1 joined to v5
    V = [f"v{i}" for i in range(1, 9)]
    k33 = [(x, y) for x in V[:3] for y in V[3:6] if (x, y) != ("v2", "v4")]
    g = Multigraph.from_labeled(V, k33 + [("v2", "v8"), ("v8", "v4"), ("v1", "v7"), ("v5", "v7")])
    model = contains_11_8_1(g)
    assert model is not None and model.verify(g, named("G_11_8_1").graph)


def test_minimal_catalog_graphs_avoid_11_8_1():
    for name in ("G_12_7_1", "G_12_7_2", "G_12_8_1", "G_12_9_1"):
        assert contains_11_8_1(named(name).graph) is None
