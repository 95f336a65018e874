"""Canonical labelling, isomorphism and automorphism groups.

The search is the usual individualise-and-refine scheme: colour refinement
on the multiplicity matrix, branching on the first smallest non-singleton
cell, and pruning of sibling branches that lie in one orbit of the
automorphisms discovered so far.  Leaves are compared by the upper triangle
of the relabelled multiplicity matrix; the lexicographically largest one is
the canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .graph import Edge, GraphError, Multigraph

Perm = tuple[int, ...]

AUTOMORPHISM_VERTEX_BOUND = 16


def compose(a: Perm, b: Perm) -> Perm:
    """``a`` after ``b``."""
    return tuple(a[x] for x in b)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


def permutation_order(p: Perm) -> int:
    from math import lcm

    seen = [False] * len(p)
    out = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        k, j = 0, i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            k += 1
        out = lcm(out, k)
    return out


def map_edge(p: Perm, e: Edge) -> Edge:
    u, v = p[e[0]], p[e[1]]
    return (u, v) if u <= v else (v, u)


def fixes_graph(p: Perm, g: Multigraph) -> bool:
    return sorted(map_edge(p, e) for e in g.edges) == list(g.edges)


# -- refinement ------------------------------------------------------------


def _rank(sigs: list) -> list[int]:
    order = {s: i for i, s in enumerate(sorted(set(sigs)))}
    return [order[s] for s in sigs]


def _refine(mat, nbrs, colors: list[int]) -> list[int]:
    ncells = len(set(colors))
    n = len(colors)
    while ncells < n:
        sigs = [
            (colors[v], tuple(sorted((colors[u], mat[v][u]) for u in nbrs[v])))
            for v in range(n)
        ]
        new = _rank(sigs)
        k = max(new) + 1
        if k == ncells:
            break
        colors, ncells = new, k
    return colors


def _individualize(colors: list[int], v: int) -> list[int]:
    c = colors[v]
    return _rank([2 * x + (1 if x == c and i != v else 0) for i, x in enumerate(colors)])


@dataclass(frozen=True)
class Canon:
    key: bytes
    perm: Perm  # vertex -> canonical position
    generators: tuple[Perm, ...]


class _Search:
    def __init__(self, g: Multigraph):
        self.n = g.n
        self.mat = g.matrix
        self.nbrs = [sorted(s) for s in g.neighbors]
        self.leaves: dict[tuple, tuple[Perm, tuple[int, ...]]] = {}
        self.gens: list[Perm] = []
        self.best: tuple | None = None
        self.best_perm: Perm | None = None

    def run(self) -> None:
        mat = self.mat
        init = _rank([(sum(mat[v]) + mat[v][v], mat[v][v]) for v in range(self.n)])
        self._dfs(_refine(mat, self.nbrs, init), ())

    def _orbit_blocked(self, w: int, explored: list[int], prefix: tuple[int, ...]) -> bool:
        gens = [p for p in self.gens if all(p[x] == x for x in prefix)]
        if not gens:
            return False
        seen = {w}
        stack = [w]
        while stack:
            x = stack.pop()
            for p in gens:
                y = p[x]
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return any(e in seen for e in explored)

    def _leaf(self, colors: list[int], path: tuple[int, ...]) -> int | None:
        perm = tuple(colors)
        inv = inverse(perm)
        mat = self.mat
        n = self.n
        cert = tuple(mat[inv[i]][inv[j]] for i in range(n) for j in range(i, n))
        if self.best is None or cert > self.best:
            self.best, self.best_perm = cert, perm
        hit = self.leaves.get(cert)
        if hit is None:
            self.leaves[cert] = (perm, path)
            return None
        perm0, path0 = hit
        gamma = compose(inv, perm0)  # maps path0 onto path
        self.gens.append(gamma)
        depth = 0
        while path0[depth] == path[depth]:
            depth += 1
        return depth

    def _dfs(self, colors: list[int], path: tuple[int, ...]) -> int | None:
        n = self.n
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        if len(cells) == n:
            return self._leaf(colors, path)
        target = min((c for c in cells.values() if len(c) > 1), key=lambda c: (len(c), colors[c[0]]))
        explored: list[int] = []
        depth = len(path)
        for w in target:
            if explored and self._orbit_blocked(w, explored, path):
                continue
            explored.append(w)
            res = self._dfs(_refine(self.mat, self.nbrs, _individualize(colors, w)), path + (w,))
            if res is not None and res < depth:
                return res
        return None


@lru_cache(maxsize=200_000)
def canonical(g: Multigraph) -> Canon:
    if g.n > 255 or any(k > 255 for k in g.multiplicity.values()):
        raise GraphError("canonical keys support at most 255 vertices and multiplicity 255")
    if g.n == 0:
        return Canon(b"\x00", (), ())
    s = _Search(g)
    s.run()
    assert s.best is not None and s.best_perm is not None
    return Canon(bytes([g.n]) + bytes(s.best), s.best_perm, tuple(s.gens))


def canonical_key(g: Multigraph) -> bytes:
    return canonical(g).key


def canonical_form(g: Multigraph) -> Multigraph:
    """The canonical representative of ``g``'s isomorphism class."""
    return Multigraph(g.n, g.relabel(canonical(g).perm).edges)


def is_isomorphic(g: Multigraph, h: Multigraph) -> Perm | None:
    """A vertex bijection mapping ``g`` onto ``h``, or None."""
    cg, ch = canonical(g), canonical(h)
    if cg.key != ch.key:
        return None
    return compose(inverse(ch.perm), cg.perm)


# -- automorphism groups ---------------------------------------------------


def _closure(gens: Sequence[Perm], n: int, limit: int) -> list[Perm]:
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        if len(seen) > limit:
            raise GraphError(f"automorphism group has more than {limit} elements")
        frontier = nxt
    return sorted(seen)


def _group_order(gens: Sequence[Perm], n: int) -> int:
    if not gens:
        return 1
    from sympy.combinatorics import Permutation, PermutationGroup

    return int(PermutationGroup([Permutation(list(p)) for p in gens]).order())


@dataclass(frozen=True)
class AutomorphismGroup:
    n: int
    generators: tuple[Perm, ...]
    order: int

    def elements(self, limit: int = 2_000_000) -> list[Perm]:
        """Every element, sorted; the identity comes first."""
        return _closure(self.generators, self.n, limit)

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements())

    def involutions(self) -> list[Perm]:
        return [p for p in self.elements() if permutation_order(p) == 2]

    def vertex_orbits(self) -> list[list[int]]:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for p in self.generators:
            for x, y in enumerate(p):
                a, b = find(x), find(y)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        orbits: dict[int, list[int]] = {}
        for v in range(self.n):
            orbits.setdefault(find(v), []).append(v)
        return sorted(orbits.values())


@lru_cache(maxsize=20_000)
def automorphism_group(g: Multigraph, bound: int = AUTOMORPHISM_VERTEX_BOUND) -> AutomorphismGroup:
    if g.n > bound:
        raise GraphError(f"automorphism search is limited to {bound} vertices (got {g.n})")
    gens = tuple(sorted(set(canonical(g).generators)))
    return AutomorphismGroup(g.n, gens, _group_order(gens, g.n))


def edge_orbits(g: Multigraph, generators: Sequence[Perm]) -> dict[Edge, Edge]:
    """Map each distinct edge pair to a representative of its orbit."""
    pairs = sorted(g.multiplicity)
    parent = {e: e for e in pairs}

    def find(e: Edge) -> Edge:
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for p in generators:
        for e in pairs:
            a, b = find(e), find(map_edge(p, e))
            if a != b:
                parent[max(a, b)] = min(a, b)
    return {e: find(e) for e in pairs}
