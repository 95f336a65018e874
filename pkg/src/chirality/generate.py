"""Isomorph-free generation of simple graphs by canonical edge augmentation.

Each graph with ``k`` edges is produced from exactly one parent with
``k - 1`` edges: a child is kept only when the edge just added lies in the
automorphism orbit of the child's distinguished edge, the edge whose
endpoints receive the largest pair of canonical labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .canon import canonical, canonical_form, canonical_key, edge_orbits
from .graph import Edge, GraphError, Multigraph
from .planarity import planar

MAX_ORDER = 10
MAX_SIZE = 15


@dataclass(frozen=True)
class GenerationSpec:
    order: int
    size: int
    connected: bool = True
    nonplanar: bool = False

    def __post_init__(self):
        if not 0 <= self.order <= MAX_ORDER:
            raise GraphError(f"order must lie in 0..{MAX_ORDER}")
        if not 0 <= self.size <= MAX_SIZE:
            raise GraphError(f"size must lie in 0..{MAX_SIZE}")
        if self.size > self.order * (self.order - 1) // 2:
            raise GraphError("more edges than a simple graph of this order can hold")


def _distinguished(g: Multigraph) -> Edge:
    pos = canonical(g).perm
    return max(g.edges, key=lambda e: tuple(sorted((pos[e[0]], pos[e[1]]), reverse=True)))


def _children(parent: Multigraph) -> Iterator[Multigraph]:
    gens = canonical(parent).generators
    n = parent.n
    present = set(parent.edges)
    missing = Multigraph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in present))
    reps = sorted(set(edge_orbits(missing, gens).values())) if missing.size else []
    for e in reps:
        child = parent.add_edge(*e)
        orbit = edge_orbits(child, canonical(child).generators)
        if orbit[e] == orbit[_distinguished(child)]:
            yield canonical_form(child)


def generate_layers(order: int, size: int, connected_target: bool = False) -> Iterator[list[Multigraph]]:
    """Yield the list of graphs for each edge count ``0..size``, in key order.

    With ``connected_target`` the layers drop graphs that cannot become
    connected with the edges still to be added.
    """
    layer = [Multigraph(order, ())]
    for k in range(size + 1):
        if connected_target:
            layer = [g for g in layer if len(g.components()) - 1 <= size - k]
        layer.sort(key=canonical_key)
        yield layer
        if k == size:
            return
        layer = [c for p in layer for c in _children(p)]


def generate(spec: GenerationSpec) -> list[Multigraph]:
    """Canonical representatives of every class matching ``spec``, sorted by key."""
    if spec.connected and spec.order > 1 and spec.size < spec.order - 1:
        return []
    last: list[Multigraph] = []
    for layer in generate_layers(spec.order, spec.size, spec.connected):
        last = layer
    out = []
    for g in last:
        if spec.connected and len(g.components()) > 1:
            continue
        if spec.nonplanar and planar(g):
            continue
        out.append(g)
    return out


def nonplanar_connected(size: int, orders=None) -> list[Multigraph]:
    """All connected non-planar simple graphs of the given size.

    Orders run from the smallest that fits ``size`` edges up to ``size - 3``;
    beyond that a connected graph is planar.
    """
    if orders is None:
        lo = next(n for n in range(1, size + 2) if n * (n - 1) // 2 >= size)
        orders = range(max(lo, 5), min(size - 3, MAX_ORDER) + 1)
    out: list[Multigraph] = []
    for n in orders:
        out += generate(GenerationSpec(n, size, connected=True, nonplanar=True))
    return out
