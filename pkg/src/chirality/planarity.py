"""Planarity verdicts with witnesses.

``is_planar`` delegates to the left-right test in networkx and converts its
output into a rotation system or a Kuratowski edge set over the original
edges.  ``kuratowski_witness`` is an independent exhaustive search for
subdivisions of K5 and K3,3 and is used to cross-check the fast path.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Optional

import networkx as nx

from .graph import Edge, GraphError, Multigraph, complete, complete_bipartite, is_connected


@dataclass(frozen=True)
class PlanarityVerdict:
    planar: bool
    rotation: Optional[dict[int, list[int]]] = None
    obstruction: Optional[tuple[Edge, ...]] = None

    def to_json(self) -> dict:
        if self.planar:
            rot = None if self.rotation is None else {str(k): v for k, v in sorted(self.rotation.items())}
            return {"planar": True, "rotation": rot}
        return {"planar": False, "obstruction": [list(e) for e in self.obstruction or ()]}


def _nx(g: Multigraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(e for e in g.edges if e[0] != e[1])
    return h


@lru_cache(maxsize=100_000)
def _planar_simple(g: Multigraph) -> bool:
    if g.n <= 4 or g.size <= 8:
        return True
    if g.size > 3 * g.n - 6:
        return False
    return nx.check_planarity(_nx(g), counterexample=False)[0]


def planar(g: Multigraph) -> bool:
    """Boolean planarity of the simplification of ``g``."""
    return _planar_simple(Multigraph(g.n, tuple(sorted({e for e in g.edges if e[0] != e[1]}))))


def is_planar(g: Multigraph, witness: bool = True) -> PlanarityVerdict:
    """Decide planarity; loops and parallel copies do not affect the answer."""
    if not witness:
        return PlanarityVerdict(planar(g))
    ok, cert = nx.check_planarity(_nx(g), counterexample=True)
    if ok:
        rotation = {v: list(cert.neighbors_cw_order(v)) for v in range(g.n)}
        return PlanarityVerdict(True, rotation=rotation)
    edges = tuple(sorted((min(u, v), max(u, v)) for u, v in cert.edges()))
    return PlanarityVerdict(False, obstruction=edges)


def lemma_pla_shortcut(g: Multigraph) -> Optional[bool]:
    """``True`` when a connected graph has size - order <= 2; ``None`` otherwise."""
    if not is_connected(g):
        raise GraphError("the size/order shortcut needs a connected graph")
    return True if g.size - g.n <= 2 else None


# -- witness checks ------------------------------------------------------------


def verify_rotation_system(g: Multigraph, rotation: dict[int, list[int]]) -> bool:
    """Check that ``rotation`` embeds the simplification of ``g`` in the sphere."""
    s = g.simplify()
    nb = s.neighbors
    for v in range(s.n):
        if sorted(rotation.get(v, [])) != sorted(nb[v]):
            return False
    pos = {v: {w: i for i, w in enumerate(rotation[v])} for v in range(s.n)}
    unused = {(u, v) for u, v in s.edges} | {(v, u) for u, v in s.edges}
    faces_by_comp: dict[int, int] = {}
    comp_of = {}
    for ci, comp in enumerate(s.components()):
        for v in comp:
            comp_of[v] = ci
    while unused:
        start = min(unused)
        dart = start
        while True:
            unused.discard(dart)
            u, v = dart
            # next dart around the face: leave v by the successor of u in v's rotation
            rot = rotation[v]
            w = rot[(pos[v][u] + 1) % len(rot)]
            dart = (v, w)
            if dart == start:
                break
            if dart not in unused:
                return False
        faces_by_comp[comp_of[start[0]]] = faces_by_comp.get(comp_of[start[0]], 0) + 1
    for ci, comp in enumerate(s.components()):
        e = sum(1 for u, v in s.edges if comp_of[u] == ci)
        if e == 0:
            continue
        if len(comp) - e + faces_by_comp.get(ci, 0) != 2:
            return False
    return True


def smooth_to_core(edges: list[Edge]) -> Multigraph:
    """Drop isolated vertices and suppress degree-2 vertices of a simple edge set."""
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    changed = True
    while changed:
        changed = False
        for x in sorted(adj):
            nbrs = adj[x]
            if len(nbrs) == 2 and nbrs[0] != nbrs[1]:
                a, b = nbrs
                adj[a].remove(x)
                adj[b].remove(x)
                adj[a].append(b)
                adj[b].append(a)
                del adj[x]
                changed = True
                break
    verts = sorted(adj)
    idx = {v: i for i, v in enumerate(verts)}
    out = [(idx[u], idx[v]) for u in verts for v in adj[u] if u < v]
    return Multigraph(len(verts), tuple(out))


def verify_obstruction(g: Multigraph, edges: tuple[Edge, ...]) -> bool:
    from .canon import canonical_key

    if any(not g.has_edge(u, v) for u, v in edges) or len(set(edges)) != len(edges):
        return False
    core = smooth_to_core(list(edges))
    key = canonical_key(core)
    return key in (canonical_key(complete(5)), canonical_key(complete_bipartite(3, 3)))


# -- brute-force oracle -------------------------------------------------------------


def _route(nb, pattern, branch, blocked, used_edges, k, chosen):
    """Route pattern edge ``k`` onwards as internally disjoint paths."""
    if k == len(pattern):
        return True
    a, b = branch[pattern[k][0]], branch[pattern[k][1]]
    stack = [(a, [a])]
    while stack:
        x, p = stack.pop()
        for y in sorted(nb[x], reverse=True):
            if y == b:
                if len(p) == 1 and (min(a, b), max(a, b)) in used_edges:
                    continue
                edges = [(min(p[i], p[i + 1]), max(p[i], p[i + 1])) for i in range(len(p) - 1)]
                edges.append((min(x, b), max(x, b)))
                inner = p[1:]
                for v in inner:
                    blocked.add(v)
                chosen.append(edges)
                used_edges.update(edges)
                if _route(nb, pattern, branch, blocked, used_edges, k + 1, chosen):
                    return True
                chosen.pop()
                used_edges.difference_update(edges)
                for v in inner:
                    blocked.discard(v)
            elif y not in blocked and y not in p:
                stack.append((y, p + [y]))
    return False


def kuratowski_witness(g: Multigraph) -> Optional[tuple[Edge, ...]]:
    """Exhaustively search for a subdivision of K5 or K3,3; return its edges."""
    s = g.simplify()
    nb = s.neighbors
    deg = s.degrees
    k5 = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    k33 = [(i, 3 + j) for i in range(3) for j in range(3)]
    for verts in combinations([v for v in range(s.n) if deg[v] >= 4], 5):
        chosen: list = []
        if _route(nb, k5, list(verts), set(verts), set(), 0, chosen):
            return tuple(sorted(e for path in chosen for e in path))
    cand = [v for v in range(s.n) if deg[v] >= 3]
    for six in combinations(cand, 6):
        first = six[0]
        for rest in combinations(six[1:], 2):
            left = (first,) + rest
            right = tuple(v for v in six if v not in left)
            chosen = []
            if _route(nb, k33, list(left + right), set(six), set(), 0, chosen):
                return tuple(sorted(e for path in chosen for e in path))
    return None
