import random

import pytest

from chirality.catalog import named
from chirality.graph import GraphError, Multigraph, complete, complete_bipartite, grid, moebius_ladder, path, wheel
from chirality.planarity import (
    is_planar,
    kuratowski_witness,
    lemma_pla_shortcut,
    planar,
    smooth_to_core,
    verify_obstruction,
    verify_rotation_system,
)

from conftest import random_simple


@pytest.mark.parametrize("g", [complete(5), complete_bipartite(3, 3), moebius_ladder(5), named("G_11_8_1").graph])
def test_nonplanar_with_checkable_obstruction(g):
    v = is_planar(g)
    assert not v.planar
    assert verify_obstruction(g, v.obstruction)
    assert kuratowski_witness(g) is not None


@pytest.mark.parametrize("g", [complete(4), grid(3, 3), wheel(6), moebius_ladder(2), Multigraph(1, ())])
def test_planar_with_valid_rotation(g):
    v = is_planar(g)
    assert v.planar
    assert verify_rotation_system(g, v.rotation)
    assert kuratowski_witness(g) is None


def test_loops_and_parallel_edges_do_not_matter():
    assert planar(Multigraph(2, ((0, 1), (0, 1))))
    assert planar(Multigraph(1, ((0, 0), (0, 0))))
    doubled = Multigraph(6, complete_bipartite(3, 3).edges + ((0, 3),))
    assert not planar(doubled)


def test_rotation_check_rejects_a_bad_rotation():
    g = complete(4)
    v = is_planar(g)
    bad = dict(v.rotation)
    bad[0] = list(reversed(bad[0]))
    assert not verify_rotation_system(g, bad)
    assert not verify_rotation_system(g, {0: [1]})


def test_obstruction_check_rejects_non_kuratowski_sets():
    g = complete(5)
    assert not verify_obstruction(g, g.edges[:-1])
    assert not verify_obstruction(g, ((0, 1), (0, 1)))


def test_smooth_to_core_of_subdivided_k5():
    edges = [e for e in complete(5).edges if e != (0, 1)] + [(0, 5), (5, 1)]
    core = smooth_to_core(edges)
    assert core.n == 5 and core.size == 10


def test_shortcut():
    assert lemma_pla_shortcut(path(4)) is True
    assert lemma_pla_shortcut(complete(5)) is None
    with pytest.raises(GraphError):
        lemma_pla_shortcut(Multigraph(2, ()))


def test_random_8_vertex_graphs_agree_with_brute_force():
    rng = random.Random(11)
    for _ in range(60):
        g = random_simple(rng, 8, 0.35)
        v = is_planar(g)
        assert v.planar == (kuratowski_witness(g) is None)
        if v.planar:
            assert verify_rotation_system(g, v.rotation)
        else:
            assert verify_obstruction(g, v.obstruction)
