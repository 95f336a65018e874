"""Immutable multigraphs and the elementary minor operations.

Vertices are the integers ``0..n-1``.  Edges are unordered pairs stored as
``(u, v)`` with ``u <= v``; ``u == v`` is a loop and repeated pairs encode
parallel edges.  The edge tuple is kept sorted so that two graphs built from
the same multiset compare equal.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised when an operation's precondition on a graph is violated."""


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[Edge, ...] = ()
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        norm = []
        for e in self.edges:
            u, v = _norm(int(e[0]), int(e[1]))
            if u < 0 or v >= self.n:
                raise GraphError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            norm.append((u, v))
        object.__setattr__(self, "edges", tuple(sorted(norm)))
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise GraphError("one label per vertex is required")
            object.__setattr__(self, "labels", tuple(self.labels))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], labels=None) -> "Multigraph":
        return cls(n, tuple((e[0], e[1]) for e in edges), labels)

    @classmethod
    def from_labeled(cls, names: Sequence[str], pairs: Iterable[tuple[str, str]]) -> "Multigraph":
        """Build a graph from named vertices, e.g. ``[("a1", "a2"), ...]``."""
        index = {name: i for i, name in enumerate(names)}
        return cls(len(names), tuple((index[a], index[b]) for a, b in pairs), tuple(names))

    # -- basic measures -------------------------------------------------

    @property
    def order(self) -> int:
        return self.n

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def multiplicity(self) -> Counter:
        return Counter(self.edges)

    @cached_property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """Symmetric multiplicity matrix; the diagonal counts loops."""
        m = [[0] * self.n for _ in range(self.n)]
        for (u, v), k in self.multiplicity.items():
            m[u][v] += k
            if u != v:
                m[v][u] += k
        return tuple(tuple(row) for row in m)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if u != v:
                nb[u].add(v)
                nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @property
    def is_simple(self) -> bool:
        return all(u != v for u, v in self.edges) and len(self.multiplicity) == len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.multiplicity

    def name(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def vertex(self, name: str) -> int:
        if self.labels is None:
            return int(name)
        return self.labels.index(name)

    def edge(self, a: str, b: str) -> Edge:
        return _norm(self.vertex(a), self.vertex(b))

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, edges={list(self.edges)})"

    # -- derived graphs --------------------------------------------------

    def simplify(self) -> "Multigraph":
        """Drop loops and collapse parallel edges."""
        return Multigraph(self.n, tuple(sorted({e for e in self.edges if e[0] != e[1]})), self.labels)

    def relabel(self, perm: Sequence[int]) -> "Multigraph":
        """Apply ``perm`` (old vertex -> new vertex)."""
        labels = None
        if self.labels is not None:
            new = [""] * self.n
            for old, nv in enumerate(perm):
                new[nv] = self.labels[old]
            labels = tuple(new)
        return Multigraph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges), labels)

    def add_edge(self, u: int, v: int) -> "Multigraph":
        return Multigraph(self.n, self.edges + ((u, v),), self.labels)

    def remove_edges(self, edges: Iterable[Edge]) -> "Multigraph":
        left = list(self.edges)
        for e in edges:
            try:
                left.remove(_norm(*e))
            except ValueError:
                raise GraphError(f"edge not in graph: {e}") from None
        return Multigraph(self.n, tuple(left), self.labels)

    def induced(self, vertices: Iterable[int]) -> "Multigraph":
        """Induced subgraph, survivors renumbered in increasing order."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        edges = tuple((pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos)
        labels = tuple(self.labels[v] for v in keep) if self.labels else None
        return Multigraph(len(keep), edges, labels)

    def without_vertices(self, vertices: Iterable[int]) -> "Multigraph":
        drop = set(vertices)
        return self.induced(v for v in range(self.n) if v not in drop)

    def without_isolated(self) -> "Multigraph":
        deg = self.degrees
        return self.induced(v for v in range(self.n) if deg[v] > 0)

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        nb = self.neighbors
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in nb[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps


# -- operations ------------------------------------------------------------


def delete_edge(g: Multigraph, e: Sequence[int]) -> Multigraph:
    """Remove one copy of ``e``."""
    return g.remove_edges([(e[0], e[1])])


def contract_edge(g: Multigraph, e: Sequence[int]) -> Multigraph:
    """Merge the endpoints of ``e`` into one vertex.

    The contracted copy disappears; other copies of the same pair become
    loops and parallel edges elsewhere are kept.  The merged vertex keeps
    the smaller index and the survivors are renumbered densely.
    """
    u, v = _norm(e[0], e[1])
    if (u, v) not in g.multiplicity:
        raise GraphError(f"edge not in graph: {tuple(e)}")
    if u == v:
        raise GraphError("cannot contract a loop")
    rest = list(g.edges)
    rest.remove((u, v))

    def image(x: int) -> int:
        if x == v:
            x = u
        return x - 1 if x > v else x

    labels = None
    if g.labels is not None:
        labels = tuple(lab for i, lab in enumerate(g.labels) if i != v)
    return Multigraph(g.n - 1, tuple((image(a), image(b)) for a, b in rest), labels)


def delete_vertex(g: Multigraph, v: int) -> Multigraph:
    """Remove ``v`` with its incident edges; survivors keep their relative order."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for a graph of order {g.n}")
    return g.without_vertices([v])


def degree_sequence(g: Multigraph) -> tuple[int, ...]:
    return tuple(sorted(g.degrees, reverse=True))


def is_connected(g: Multigraph) -> bool:
    return len(g.components()) <= 1


def twin_pair(g: Multigraph, v: int, w: int) -> bool:
    """True when ``v`` and ``w`` see the same vertices outside ``{v, w}``."""
    if v == w:
        raise GraphError("twin test needs two distinct vertices")
    if not g.is_simple:
        raise GraphError("twin test is defined for simple graphs only")
    nb = g.neighbors
    return nb[v] - {w} == nb[w] - {v}


# -- small constructors used throughout --------------------------------------


def complete(n: int) -> Multigraph:
    return Multigraph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(p: int, q: int) -> Multigraph:
    return Multigraph(p + q, tuple((i, p + j) for i in range(p) for j in range(q)))


def cycle(n: int) -> Multigraph:
    return Multigraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Multigraph:
    return Multigraph(n, tuple((i, i + 1) for i in range(n - 1)))


def grid(rows: int, cols: int) -> Multigraph:
    idx = lambda r, c: r * cols + c  # noqa: E731
    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((idx(r, c), idx(r, c + 1)))
            if r + 1 < rows:
                edges.append((idx(r, c), idx(r + 1, c)))
    return Multigraph(rows * cols, tuple(edges))


def wheel(spokes: int) -> Multigraph:
    """Hub 0 joined to a cycle on ``1..spokes``."""
    rim = [(1 + i, 1 + (i + 1) % spokes) for i in range(spokes)]
    return Multigraph(spokes + 1, tuple([(0, 1 + i) for i in range(spokes)] + rim))


def moebius_ladder(k: int) -> Multigraph:
    """The ladder with ``k`` rungs: cycle ``0..2k-1`` plus antipodal chords."""
    loop = [(i, (i + 1) % (2 * k)) for i in range(2 * k)]
    rungs = [(i, i + k) for i in range(k)]
    return Multigraph(2 * k, tuple(loop + rungs))
