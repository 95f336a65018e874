"""Minor models, minor containment, and Moebius-ladder cores.

A :class:`MinorModel` is a replayable list of steps.  Each step refers to the
vertex numbering of the graph produced by the previous steps, exactly as the
operations in :mod:`chirality.graph` renumber vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence, Union

from .canon import canonical_key, is_isomorphic
from .catalog import NamedGraph, named
from .graph import Edge, GraphError, Multigraph, contract_edge, delete_edge, delete_vertex

Step = tuple[str, tuple[int, ...]]

DELETE_EDGE = "delete_edge"
CONTRACT_EDGE = "contract_edge"
DELETE_VERTEX = "delete_vertex"


def apply_step(g: Multigraph, step: Step) -> Multigraph:
    op, args = step
    if op == DELETE_EDGE:
        return delete_edge(g, args)
    if op == CONTRACT_EDGE:
        return contract_edge(g, args)
    if op == DELETE_VERTEX:
        return delete_vertex(g, args[0])
    raise GraphError(f"unknown minor step {op!r}")


@dataclass(frozen=True)
class MinorModel:
    steps: tuple[Step, ...] = ()
    source_key: str = ""
    target_key: str = ""

    def replay(self, g: Multigraph) -> Multigraph:
        for step in self.steps:
            g = apply_step(g, step)
        return g

    def describe(self, g: Multigraph) -> list[str]:
        """Steps rendered with the vertex names current at each step."""
        out = []
        for op, args in self.steps:
            out.append(f"{op} {'-'.join(g.name(a) for a in args)}")
            g = apply_step(g, (op, args))
        return out

    def verify(self, source: Multigraph, target: Multigraph) -> bool:
        try:
            result = self.replay(source)
        except GraphError:
            return False
        return canonical_key(result) == canonical_key(target)

    def to_json(self) -> dict:
        return {
            "source": self.source_key,
            "target": self.target_key,
            "steps": [[op, list(args)] for op, args in self.steps],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MinorModel":
        steps = tuple((op, tuple(int(a) for a in args)) for op, args in data["steps"])
        return cls(steps, data.get("source", ""), data.get("target", ""))


def _model(source: Multigraph, steps: Sequence[Step], result: Multigraph) -> MinorModel:
    return MinorModel(tuple(steps), canonical_key(source).hex(), canonical_key(result).hex())


def enumerate_one_step_minors(g: Multigraph) -> list[tuple[MinorModel, Multigraph]]:
    """All single deletions, contractions and isolated-vertex deletions, one per class."""
    found: dict[bytes, tuple[MinorModel, Multigraph]] = {}
    steps: list[Step] = [(DELETE_EDGE, e) for e in sorted(g.multiplicity)]
    steps += [(CONTRACT_EDGE, e) for e in sorted(g.multiplicity) if e[0] != e[1]]
    steps += [(DELETE_VERTEX, (v,)) for v in range(g.n) if g.degrees[v] == 0]
    for step in steps:
        h = apply_step(g, step)
        key = canonical_key(h)
        if key not in found:
            found[key] = (_model(g, [step], h), h)
    return [found[k] for k in sorted(found)]


# -- containment -------------------------------------------------------------


def circuit_rank(g: Multigraph) -> int:
    """``size - order + components``; never increases when taking minors."""
    return g.size - g.n + len(g.components())


class _MinorSearch:
    def __init__(self, target: Multigraph):
        self.h = target
        self.key = canonical_key(target)
        mindeg = min(target.degrees) if target.n else 0
        self.simple = target.is_simple
        self.drop_isolated = mindeg >= 1
        self.drop_leaves = self.simple and mindeg >= 2
        self.smooth = self.simple and mindeg >= 3
        self.rank = circuit_rank(target)
        self.failed: set[bytes] = set()

    def normalize(self, g: Multigraph, steps: list[Step]) -> Multigraph:
        """Discard structure that cannot take part in a model of the target."""
        while True:
            changed = False
            if self.simple:
                seen: set[Edge] = set()
                for e in g.edges:
                    if e[0] == e[1] or e in seen:
                        steps.append((DELETE_EDGE, e))
                        g = delete_edge(g, e)
                        changed = True
                        break
                    seen.add(e)
                if changed:
                    continue
            deg = g.degrees
            if self.drop_isolated:
                iso = [v for v in range(g.n) if deg[v] == 0]
                if iso:
                    steps.append((DELETE_VERTEX, (iso[-1],)))
                    g = delete_vertex(g, iso[-1])
                    continue
            if self.drop_leaves:
                leaf = next((v for v in range(g.n) if deg[v] == 1), None)
                if leaf is not None:
                    e = next(e for e in g.edges if leaf in e)
                    steps.append((CONTRACT_EDGE, e))
                    g = contract_edge(g, e)
                    continue
            if self.smooth:
                nb = g.neighbors
                mid = next((v for v in range(g.n) if deg[v] == 2 and len(nb[v]) == 2), None)
                if mid is not None:
                    e = next(e for e in g.edges if mid in e)
                    steps.append((CONTRACT_EDGE, e))
                    g = contract_edge(g, e)
                    continue
            return g

    def search(self, g: Multigraph, steps: list[Step]) -> Optional[list[Step]]:
        h = self.h
        if g.n < h.n or g.size < h.size or circuit_rank(g) < self.rank:
            return None
        key = canonical_key(g)
        if key == self.key:
            return steps
        if key in self.failed or (g.n == h.n and g.size == h.size):
            self.failed.add(key)
            return None
        pairs = sorted(g.multiplicity)
        moves = [(DELETE_EDGE, e) for e in pairs] + [(CONTRACT_EDGE, e) for e in pairs if e[0] != e[1]]
        if not self.drop_isolated:
            moves += [(DELETE_VERTEX, (v,)) for v in range(g.n) if g.degrees[v] == 0]
        tried: set[bytes] = set()
        for move in moves:
            child_steps = steps + [move]
            child = self.normalize(apply_step(g, move), child_steps)
            ck = canonical_key(child)
            if ck in tried:
                continue
            tried.add(ck)
            res = self.search(child, child_steps)
            if res is not None:
                return res
        self.failed.add(key)
        return None


def has_minor(g: Multigraph, target: Union[Multigraph, NamedGraph, str]) -> Optional[MinorModel]:
    """A replayable model of ``target`` inside ``g``, or None when there is none."""
    if isinstance(target, str):
        target = named(target)
    h = target.graph if isinstance(target, NamedGraph) else target
    s = _MinorSearch(h)
    steps: list[Step] = []
    start = s.normalize(g, steps)
    found = s.search(start, steps)
    if found is None:
        return None
    return _model(g, found, h)


def contains_11_8_1(g: Multigraph) -> Optional[MinorModel]:
    return has_minor(g, "G_11_8_1")


def recognize_H1_H2(g: Multigraph) -> Optional[str]:
    for name in ("H1", "H2"):
        if is_isomorphic(g, named(name).graph) is not None:
            return name
    return None


def k33_routes_via_h(g: Multigraph) -> list[tuple[Edge, Edge, str]]:
    """Pairs of edges whose deletion leaves H1 or H2 (two deletions then one contraction)."""
    out = []
    for e1, e2 in combinations(g.edges, 2):
        kind = recognize_H1_H2(g.remove_edges([e1, e2]))
        if kind:
            out.append((e1, e2, kind))
    return out


# -- pruning and smoothing ----------------------------------------------------------


@dataclass(frozen=True)
class Smoothing:
    """Result of pruning trees and suppressing degree-2 vertices.

    ``chains[i]`` lists the indices (into the input's edge tuple) of the
    path that became core edge ``core_edges[i]``; ``vertex_map`` sends
    surviving input vertices to core vertices.
    """

    core: Multigraph
    core_edges: tuple[Edge, ...]
    chains: tuple[tuple[int, ...], ...]
    vertex_map: dict[int, int] = field(hash=False)

    def chain_for(self, edge: Edge) -> tuple[int, ...]:
        return self.chains[self.core_edges.index(edge)]


def prune_and_smooth(g: Multigraph) -> Smoothing:
    """Delete vertices of degree 0 or 1 until none remain, then suppress
    degree-2 vertices whose two edges lead to two distinct neighbours.

    Loops and 2-cycles are never collapsed, so the result is idempotent.
    """
    alive = set(range(g.n))
    # working edges: id -> [x, y, chain of input edge indices]
    work: dict[int, list] = {i: [u, v, (i,)] for i, (u, v) in enumerate(g.edges)}
    inc: dict[int, set[int]] = {v: set() for v in range(g.n)}
    for i, (u, v) in enumerate(g.edges):
        inc[u].add(i)
        inc[v].add(i)

    def degree(x: int) -> int:
        return sum(2 if work[i][0] == work[i][1] else 1 for i in inc[x])

    queue = sorted(alive)
    while queue:
        x = queue.pop()
        if x not in alive or degree(x) > 1:
            continue
        alive.discard(x)
        for i in list(inc[x]):
            u, v, _ = work.pop(i)
            other = v if u == x else u
            inc[other].discard(i)
            queue.append(other)
        inc[x].clear()
        queue.sort()

    next_id = g.size
    changed = True
    while changed:
        changed = False
        for x in sorted(alive):
            ids = sorted(inc[x])
            if len(ids) != 2:
                continue
            (u1, v1, c1), (u2, v2, c2) = work[ids[0]], work[ids[1]]
            a = v1 if u1 == x else u1
            b = v2 if u2 == x else u2
            if a == x or b == x or a == b:
                continue
            # orient chains so the path reads a .. x .. b
            first = c1 if (v1 == x) else tuple(reversed(c1))
            second = c2 if (u2 == x) else tuple(reversed(c2))
            for i in ids:
                del work[i]
            inc[a].discard(ids[0])
            inc[b].discard(ids[1])
            work[next_id] = [a, b, first + second]
            inc[a].add(next_id)
            inc[b].add(next_id)
            next_id += 1
            alive.discard(x)
            inc[x].clear()
            changed = True
            break

    keep = sorted(alive)
    pos = {v: i for i, v in enumerate(keep)}
    items = sorted(
        ((min(pos[u], pos[v]), max(pos[u], pos[v])), chain) for u, v, chain in work.values()
    )
    core = Multigraph(len(keep), tuple(e for e, _ in items))
    return Smoothing(core, tuple(e for e, _ in items), tuple(c for _, c in items), pos)


# -- Moebius cores ----------------------------------------------------------------


def ladder_loops(core: Multigraph) -> list[tuple[int, ...]]:
    """Hamiltonian cycles of ``core`` whose remaining edges all join antipodal
    vertices of the cycle, i.e. the ways to read ``core`` as a ladder with
    that cycle as its loop.  Each cycle is reported once, as a vertex tuple
    starting at 0 with the smaller second vertex."""
    n = core.n
    if n < 6 or n % 2 or not core.is_simple or core.size != 3 * n // 2:
        return []
    if any(d != 3 for d in core.degrees):
        return []
    half = n // 2
    nb = core.neighbors
    edges = set(core.edges)
    out = []

    def extend(p: list[int], used: set[int]) -> None:
        if len(p) == n:
            if 0 not in nb[p[-1]] or p[1] > p[-1]:
                return
            cyc = {(min(p[i], p[(i + 1) % n]), max(p[i], p[(i + 1) % n])) for i in range(n)}
            rest = edges - cyc
            idx = {v: i for i, v in enumerate(p)}
            if all(abs(idx[u] - idx[v]) == half for u, v in rest):
                out.append(tuple(p))
            return
        for y in sorted(nb[p[-1]]):
            if y not in used:
                used.add(y)
                p.append(y)
                extend(p, used)
                p.pop()
                used.discard(y)

    extend([0], {0})
    return out


@dataclass(frozen=True)
class MoebiusCore:
    deleted: tuple[Edge, ...]
    base: Multigraph
    core: Multigraph
    rungs: int
    loop_in_base: tuple[Edge, ...]
    rung_paths: tuple[tuple[Edge, ...], ...]
    core_loop: tuple[int, ...]


def find_moebius_cores(
    g: Multigraph, max_deletions: int = 3, odd_only: bool = True
) -> Iterable[MoebiusCore]:
    """Yield every (deletion set, loop) pair whose pruned and smoothed core is
    a Moebius ladder with an odd number of rungs.  Deletion sets are visited
    by size, then lexicographically."""
    if max_deletions > g.size:
        raise GraphError("max_deletions exceeds the number of edges")
    if not g.is_simple:
        raise GraphError("Moebius cores are searched in simple graphs")
    edges = g.edges
    for k in range(max_deletions + 1):
        for dset in combinations(range(len(edges)), k):
            deleted = tuple(edges[i] for i in dset)
            base = Multigraph(g.n, tuple(e for i, e in enumerate(edges) if i not in dset))
            sm = prune_and_smooth(base)
            rungs = sm.core.n // 2
            if sm.core.n < 6 or sm.core.size != 3 * rungs or (odd_only and rungs % 2 == 0):
                continue
            for loop in ladder_loops(sm.core):
                n = len(loop)
                loop_edges = []
                for i in range(n):
                    a, b = loop[i], loop[(i + 1) % n]
                    loop_edges += [base.edges[j] for j in sm.chain_for((min(a, b), max(a, b)))]
                cyc = {(min(loop[i], loop[(i + 1) % n]), max(loop[i], loop[(i + 1) % n])) for i in range(n)}
                rung_paths = tuple(
                    tuple(base.edges[j] for j in sm.chains[i])
                    for i, e in enumerate(sm.core_edges)
                    if e not in cyc
                )
                yield MoebiusCore(
                    deleted, base, sm.core, rungs, tuple(sorted(loop_edges)), rung_paths, loop
                )
