"""Named graphs: the Kuratowski graphs, Moebius ladders, the two one-step
uncontractions of K3,3, and the six minor minimal intrinsically chiral graphs
of size at most twelve.

The ``a``/``b`` labelling of the size-12 graphs follows a hexagon
``a1 a2 a3 b1 b2 b3`` whose antipodal chords ``a_i b_i`` are the rungs of M3.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .graph import Multigraph, complete, complete_bipartite, moebius_ladder

AB = ["a1", "a2", "a3", "b1", "b2", "b3"]
HEXAGON = ["a1", "a2", "a3", "b1", "b2", "b3"]
_LOOP = [("a1", "a2"), ("a2", "a3"), ("a3", "b1"), ("b1", "b2"), ("b2", "b3"), ("b3", "a1")]
_V = ["v1", "v2", "v3", "v4", "v5", "v6"]
# K3,3 with parts {v1, v2, v3} and {v4, v5, v6}
_K33 = [(x, y) for x in _V[:3] for y in _V[3:]]

MMIC_NAMES = ("G_12_7_1", "G_12_7_2", "G_12_8_1", "G_12_8_2", "G_12_9_1", "G_11_8_1")


@dataclass(frozen=True)
class NamedGraph:
    name: str
    graph: Multigraph
    notes: str = ""
    loop: tuple[str, ...] | None = field(default=None)

    @property
    def display(self) -> str:
        if self.name.startswith("G_"):
            _, size, order, idx = self.name.split("_")
            return f"{size}^{order}_{idx}"
        return self.name


def _subdivide(pairs, edge, mid):
    a, b = edge
    out = [p for p in pairs if set(p) != {a, b}]
    return out + [(a, mid), (mid, b)]


def mobius(n: int) -> NamedGraph:
    g = moebius_ladder(n)
    labels = tuple(f"x{i}" for i in range(2 * n))
    return NamedGraph(
        f"M{n}",
        Multigraph(g.n, g.edges, labels),
        f"{2 * n}-cycle x0..x{2 * n - 1} with {n} antipodal rungs",
        loop=labels,
    )


def h1() -> NamedGraph:
    g = Multigraph.from_labeled(_V + ["v7"], _K33 + [("v1", "v7")])
    return NamedGraph("H1", g, "K3,3 with a pendant vertex v7 at v1")


def h2() -> NamedGraph:
    g = Multigraph.from_labeled(_V + ["v7"], _subdivide(_K33, ("v1", "v4"), "v7"))
    return NamedGraph("H2", g, "K3,3 with the edge v1v4 subdivided by v7")


def g_12_7_1() -> NamedGraph:
    pairs = _subdivide(_K33, ("v1", "v4"), "v7") + [("v2", "v7"), ("v5", "v7")]
    return NamedGraph(
        "G_12_7_1",
        Multigraph.from_labeled(_V + ["v7"], pairs),
        "H2 plus the edges v2v7 and v5v7 (equivalently v2v7 and v4v5)",
    )


def g_12_7_2() -> NamedGraph:
    pairs = _LOOP + [("a2", "b2"), ("a3", "b3"), ("a1", "v"), ("v", "b1"), ("a1", "b2"), ("b1", "a2")]
    return NamedGraph(
        "G_12_7_2",
        Multigraph.from_labeled(AB + ["v"], pairs),
        "M3 with rung a1b1 subdivided by v, plus a1b2 and b1a2",
        loop=tuple(HEXAGON),
    )


def g_12_8_1() -> NamedGraph:
    pairs = _LOOP + [("a2", "b2"), ("a3", "b3"), ("a1", "v"), ("v", "b1"), ("w", "a2"), ("a1", "b2")]
    return NamedGraph(
        "G_12_8_1",
        Multigraph.from_labeled(AB + ["v", "w"], pairs),
        "M3 with rung a1b1 subdivided by v, pendant w at a2, plus a1b2",
        loop=tuple(HEXAGON),
    )


def g_12_8_2() -> NamedGraph:
    pairs = [
        ("a1", "w"), ("w", "a2"), ("a2", "a3"), ("a3", "b1"), ("b1", "b2"), ("b2", "b3"), ("b3", "a1"),
        ("a2", "b2"), ("a3", "b3"), ("a1", "v"), ("v", "b1"), ("v", "b2"),
    ]  # fmt: skip
    return NamedGraph(
        "G_12_8_2",
        Multigraph.from_labeled(AB + ["v", "w"], pairs),
        "M3 with a1a2 subdivided by w, rung a1b1 subdivided by v, plus vb2",
        loop=tuple(HEXAGON),
    )


def g_12_9_1() -> NamedGraph:
    pairs = _LOOP + [("a1", "b1"), ("a3", "b3"), ("a2", "v"), ("v", "b2"), ("w1", "a1"), ("w2", "b1")]
    return NamedGraph(
        "G_12_9_1",
        Multigraph.from_labeled(AB + ["v", "w1", "w2"], pairs),
        "M3 with rung a2b2 subdivided by v and pendants w1 at a1, w2 at b1",
        loop=tuple(HEXAGON),
    )


def g_11_8_1() -> NamedGraph:
    pairs = _subdivide(_subdivide(_K33, ("v1", "v4"), "v7"), ("v2", "v5"), "v8")
    return NamedGraph(
        "G_11_8_1",
        Multigraph.from_labeled(_V + ["v7", "v8"], pairs),
        "K3,3 with the disjoint edges v1v4 and v2v5 subdivided",
    )


@lru_cache(maxsize=None)
def catalog() -> dict[str, NamedGraph]:
    k5 = complete(5)
    k33 = complete_bipartite(3, 3)
    entries = [
        NamedGraph("K5", k5, "complete graph on five vertices"),
        NamedGraph("K33", Multigraph(6, k33.edges, tuple(_V)), "parts {v1,v2,v3} and {v4,v5,v6}"),
        mobius(3),
        mobius(5),
        h1(),
        h2(),
        g_12_7_1(),
        g_12_7_2(),
        g_12_8_1(),
        g_12_8_2(),
        g_12_9_1(),
        g_11_8_1(),
    ]
    return {e.name: e for e in entries}


def named(name: str) -> NamedGraph:
    if name.startswith("M") and name[1:].isdigit():
        return mobius(int(name[1:]))
    try:
        return catalog()[name]
    except KeyError:
        raise KeyError(f"unknown catalog graph {name!r}") from None


def mmic_graphs() -> list[NamedGraph]:
    return [catalog()[n] for n in MMIC_NAMES]
