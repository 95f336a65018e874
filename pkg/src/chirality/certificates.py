"""Checkable witnesses of achiral embeddability and of intrinsic chirality.

Every ``find_*`` search has a ``verify_*`` counterpart that re-checks the
witness from scratch with independent primitives: a brute-force
automorphism enumerator and the exhaustive Kuratowski search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Optional, Union

from .canon import Perm, automorphism_group, canonical_key, fixes_graph, map_edge
from .graph import (
    Edge,
    GraphError,
    Multigraph,
    complete_bipartite,
    is_connected,
    moebius_ladder,
    twin_pair,
)
from .minors import find_moebius_cores, prune_and_smooth
from .planarity import PlanarityVerdict, is_planar, kuratowski_witness, planar

K33_KEY = canonical_key(complete_bipartite(3, 3))


class HypothesisError(GraphError):
    """Raised when the inputs of a certificate check do not meet its hypotheses."""

    def __init__(self, failures: list[str]):
        self.failures = failures
        super().__init__("; ".join(failures))


def _edges_json(edges) -> list[list[int]]:
    return [list(e) for e in edges]


# -- certificate types ------------------------------------------------------------


@dataclass(frozen=True)
class PlanarCertificate:
    witness: PlanarityVerdict
    kind: str = "planar"

    def to_json(self) -> dict:
        return {"kind": self.kind, **self.witness.to_json()}


@dataclass(frozen=True)
class TypeOneCertificate:
    phi: Perm
    V1: tuple[int, ...]
    W2: tuple[int, ...]
    W2p: tuple[int, ...]
    kind: str = "type1"

    def to_json(self) -> dict:
        return {"kind": self.kind, "phi": list(self.phi), "V1": list(self.V1), "W2": list(self.W2), "W2p": list(self.W2p)}


@dataclass(frozen=True)
class TwinMirrorCertificate:
    v: int
    w: int
    witness: PlanarityVerdict
    kind: str = "twin_mirror"

    def to_json(self) -> dict:
        return {"kind": self.kind, "pair": [self.v, self.w], "remainder": self.witness.to_json()}


@dataclass(frozen=True)
class AddedEdgeMirrorCertificate:
    base: Multigraph
    pairs: tuple[tuple[int, int], tuple[int, int]]
    added: Edge
    witnesses: tuple[PlanarityVerdict, PlanarityVerdict]
    adjacencies: tuple[Edge, ...]
    kind: str = "added_edge_mirror"

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "base_edges": _edges_json(self.base.edges),
            "pairs": [list(p) for p in self.pairs],
            "added": list(self.added),
            "adjacencies_used": _edges_json(self.adjacencies),
            "remainders": [w.to_json() for w in self.witnesses],
        }


NONSIMPLE_VARIANTS = ("Planar", "DoubleEdgePlanar", "DoubleEdgeOverK33", "LoopOnK33")


@dataclass(frozen=True)
class NonSimpleCertificate:
    variant: str
    edges: tuple[Edge, ...] = ()
    witness: Optional[PlanarityVerdict] = None
    kind: str = "nonsimple"

    def to_json(self) -> dict:
        out = {"kind": self.kind, "variant": self.variant, "edges": _edges_json(self.edges)}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


@dataclass(frozen=True)
class ChiralityCertificate:
    """A deleted edge set ``D`` and a cycle ``C`` of ``G - D``.

    Pruning and smoothing ``G - D`` gives a Moebius ladder with ``n`` rungs
    (``n`` odd) whose loop is the image of ``C``, and every automorphism of
    ``G`` maps ``D`` and ``C`` onto themselves.  A self-homeomorphism of an
    embedding induces such an automorphism, so it preserves the embedded
    ladder and its loop, and an odd ladder with its loop admits no
    orientation-reversing homeomorphism.
    """

    D: tuple[Edge, ...]
    C: tuple[Edge, ...]
    n: int
    core_map: dict[int, int] = field(hash=False)  # vertex of G -> vertex of the ladder
    audit: tuple[tuple[Perm, bool, bool], ...] = ()
    kind: str = "chirality"

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "D": _edges_json(self.D),
            "C": _edges_json(self.C),
            "n": self.n,
            "core_map": {str(k): v for k, v in sorted(self.core_map.items())},
            "audit": [{"perm": list(p), "fixes_D": d, "fixes_C": c} for p, d, c in self.audit],
        }


@dataclass(frozen=True)
class ComponentwiseCertificate:
    """Achirality of a disconnected graph from achirality of each component."""

    parts: tuple[tuple[tuple[int, ...], object], ...]
    kind: str = "componentwise"

    def to_json(self) -> dict:
        return {"kind": self.kind, "parts": [{"vertices": list(vs), "certificate": c.to_json()} for vs, c in self.parts]}


Certificate = Union[
    PlanarCertificate,
    TypeOneCertificate,
    TwinMirrorCertificate,
    AddedEdgeMirrorCertificate,
    NonSimpleCertificate,
    ChiralityCertificate,
    ComponentwiseCertificate,
]

ACHIRAL, CHIRAL, UNRESOLVED = "Achiral", "Chiral", "Unresolved"


@dataclass(frozen=True)
class Verdict:
    status: str
    certificate: Optional[Certificate] = None
    notes: str = ""

    def to_json(self) -> dict:
        out: dict = {"status": self.status}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        if self.notes:
            out["notes"] = self.notes
        return out


# -- independent primitives for verification ---------------------------------------


def brute_force_automorphisms(g: Multigraph) -> list[Perm]:
    """Every automorphism by backtracking over multiplicity-preserving maps."""
    n = g.n
    mat = g.matrix
    deg = g.degrees
    out: list[Perm] = []
    img = [-1] * n
    used = [False] * n

    def extend(v: int) -> None:
        if v == n:
            out.append(tuple(img))
            return
        for x in range(n):
            if used[x] or deg[x] != deg[v] or mat[x][x] != mat[v][v]:
                continue
            if all(mat[v][u] == mat[x][img[u]] for u in range(v)):
                img[v], used[x] = x, True
                extend(v + 1)
                used[x] = False
        img[v] = -1

    extend(0)
    return sorted(out)


def _planar_oracle(g: Multigraph) -> bool:
    return kuratowski_witness(g) is None


def _edge_set(edges) -> frozenset:
    return frozenset((min(u, v), max(u, v)) for u, v in edges)


# -- type 1 ---------------------------------------------------------------------------


def _type1_sides(g: Multigraph, phi: Perm) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Split the 2-orbits of ``phi`` between two sides so that every edge
    across the sides joins a vertex to its own image.  Solved as a parity
    2-colouring over orbits."""
    moved = [v for v in range(g.n) if phi[v] != v]
    rep = {v: min(v, phi[v]) for v in moved}
    flip = {v: 0 if v == rep[v] else 1 for v in moved}
    parent: dict[int, tuple[int, int]] = {r: (r, 0) for r in set(rep.values())}

    def find(x: int) -> tuple[int, int]:
        p, par = parent[x]
        if p == x:
            return x, 0
        root, rp = find(p)
        parent[x] = (root, par ^ rp)
        return root, par ^ rp

    for u, v in g.edges:
        if u not in rep or v not in rep or rep[u] == rep[v]:
            continue
        # u and v must sit on the same side
        need = flip[u] ^ flip[v]
        (ru, pu), (rv, pv) = find(rep[u]), find(rep[v])
        if ru == rv:
            if pu ^ pv != need:
                return None
        else:
            parent[ru] = (rv, pu ^ pv ^ need)
    left = tuple(sorted(v for v in moved if find(rep[v])[1] ^ flip[v] == 0))
    right = tuple(sorted(v for v in moved if find(rep[v])[1] ^ flip[v] == 1))
    return left, right


def find_type1(g: Multigraph) -> Optional[TypeOneCertificate]:
    for phi in automorphism_group(g).involutions():
        fixed = tuple(v for v in range(g.n) if phi[v] == v)
        if not planar(g.induced(fixed)):
            continue
        sides = _type1_sides(g, phi)
        if sides is not None:
            return TypeOneCertificate(phi, fixed, sides[0], sides[1])
    return None


def verify_type1(g: Multigraph, cert: TypeOneCertificate) -> bool:
    phi = cert.phi
    if sorted(phi) != list(range(g.n)) or not fixes_graph(phi, g):
        return False
    if any(phi[phi[v]] != v for v in range(g.n)) or all(phi[v] == v for v in range(g.n)):
        return False
    if set(cert.V1) != {v for v in range(g.n) if phi[v] == v}:
        return False
    w2, w2p = set(cert.W2), set(cert.W2p)
    if w2 & w2p or w2 | w2p | set(cert.V1) != set(range(g.n)) or {phi[v] for v in w2} != w2p:
        return False
    for u, v in g.edges:
        if (u in w2 and v in w2p) or (u in w2p and v in w2):
            if phi[u] != v:
                return False
    return _planar_oracle(g.induced(cert.V1))


# -- twin mirror ------------------------------------------------------------------------


def find_twin_mirror(g: Multigraph) -> Optional[TwinMirrorCertificate]:
    for v, w in combinations(range(g.n), 2):
        if twin_pair(g, v, w):
            rest = g.without_vertices([v, w])
            if planar(rest):
                return TwinMirrorCertificate(v, w, is_planar(rest))
    return None


def verify_twin_mirror(g: Multigraph, cert: TwinMirrorCertificate) -> bool:
    v, w = cert.v, cert.w
    if v == w or not g.is_simple:
        return False
    nb = g.neighbors
    if nb[v] - {w} != nb[w] - {v}:
        return False
    return _planar_oracle(g.without_vertices([v, w]))


# -- added-edge mirror -------------------------------------------------------------


def _added_edge_failures(gp: Multigraph, pairs, e) -> tuple[list[str], Optional[Multigraph]]:
    failures: list[str] = []
    if not gp.is_simple:
        return ["the graph with the added edge is not simple"], None
    e = (min(e), max(e))
    if e not in gp.multiplicity:
        return [f"edge {e} is not in the graph"], None
    (v1, v2), (v3, v4) = pairs
    if len({v1, v2, v3, v4}) != 4:
        return ["the two pairs must be four distinct vertices"], None
    g = gp.remove_edges([e])
    for tag, (a, b) in (("first", (v1, v2)), ("second", (v3, v4))):
        if not twin_pair(g, a, b):
            failures.append(f"{tag} pair ({a}, {b}) is not a twin pair once the edge is removed")
        elif not planar(g.without_vertices([a, b])):
            failures.append(f"{tag} pair ({a}, {b}) leaves a non-planar remainder once the edge is removed")
    for x in (v1, v2):
        for y in (v3, v4):
            if not g.has_edge(x, y):
                failures.append(f"vertex {x} is not adjacent to vertex {y}")
    return failures, g


def check_added_edge_mirror(gp: Multigraph, pairs, e) -> Optional[AddedEdgeMirrorCertificate]:
    """Certificate for ``gp`` built from mirror images of ``gp - e`` at two twin pairs.

    Raises :class:`HypothesisError` listing every failed hypothesis; returns
    None when the hypotheses hold but a vertex-deleted graph is non-planar.
    Each of ``v1, v2`` is required to be adjacent to each of ``v3, v4``.
    """
    failures, g = _added_edge_failures(gp, pairs, e)
    if failures:
        raise HypothesisError(failures)
    (v1, v2), (v3, v4) = pairs
    r1, r2 = gp.without_vertices([v1, v2]), gp.without_vertices([v3, v4])
    if not (planar(r1) and planar(r2)):
        return None
    adj = tuple((min(x, y), max(x, y)) for x in (v1, v2) for y in (v3, v4))
    e = (min(e), max(e))
    return AddedEdgeMirrorCertificate(g, ((v1, v2), (v3, v4)), e, (is_planar(r1), is_planar(r2)), adj)


def find_added_edge_mirror(gp: Multigraph) -> Optional[AddedEdgeMirrorCertificate]:
    for e in gp.edges:
        g = gp.remove_edges([e])
        twins = [
            (v, w) for v, w in combinations(range(g.n), 2)
            if twin_pair(g, v, w) and planar(g.without_vertices([v, w]))
        ]  # fmt: skip
        for p, q in combinations(twins, 2):
            if len(set(p) | set(q)) != 4:
                continue
            if not all(g.has_edge(x, y) for x in p for y in q):
                continue
            cert = check_added_edge_mirror(gp, (p, q), e)
            if cert is not None:
                return cert
    return None


def verify_added_edge_mirror(gp: Multigraph, cert: AddedEdgeMirrorCertificate) -> bool:
    if not gp.is_simple or cert.added not in gp.multiplicity:
        return False
    g = gp.remove_edges([cert.added])
    if canonical_key(g) != canonical_key(cert.base) or g.edges != cert.base.edges:
        return False
    (v1, v2), (v3, v4) = cert.pairs
    nb = g.neighbors
    for a, b in cert.pairs:
        if nb[a] - {b} != nb[b] - {a} or not _planar_oracle(g.without_vertices([a, b])):
            return False
    if not all(g.has_edge(x, y) for x in (v1, v2) for y in (v3, v4)):
        return False
    return _planar_oracle(gp.without_vertices([v1, v2])) and _planar_oracle(gp.without_vertices([v3, v4]))


# -- non-simple graphs -----------------------------------------------------------


def _is_k33_plus_isolated(h: Multigraph) -> bool:
    core = h.without_isolated()
    return core.is_simple and core.n == 6 and canonical_key(core) == K33_KEY


def nonsimple_achiral(gp: Multigraph) -> Optional[NonSimpleCertificate]:
    """Try, in order: planar outright, a double edge over a planar rest, a
    double edge over K3,3 between non-adjacent vertices, a loop on K3,3."""
    if planar(gp):
        return NonSimpleCertificate("Planar", witness=is_planar(gp))
    doubles = sorted(e for e, k in gp.multiplicity.items() if k == 2 and e[0] != e[1])
    for e in doubles:
        rest = gp.remove_edges([e, e])
        if planar(rest):
            return NonSimpleCertificate("DoubleEdgePlanar", (e, e), is_planar(rest))
    for e in doubles:
        rest = gp.remove_edges([e, e])
        if _is_k33_plus_isolated(rest) and not rest.has_edge(*e):
            return NonSimpleCertificate("DoubleEdgeOverK33", (e, e))
    loops = [e for e in gp.edges if e[0] == e[1]]
    if len(loops) == 1 and _is_k33_plus_isolated(gp.remove_edges(loops)):
        return NonSimpleCertificate("LoopOnK33", tuple(loops))
    return None


def verify_nonsimple(gp: Multigraph, cert: NonSimpleCertificate) -> bool:
    simple_core = gp.simplify()
    if cert.variant == "Planar":
        return _planar_oracle(simple_core)
    if cert.variant in ("DoubleEdgePlanar", "DoubleEdgeOverK33"):
        if len(cert.edges) != 2 or cert.edges[0] != cert.edges[1]:
            return False
        e = cert.edges[0]
        if e[0] == e[1] or gp.multiplicity.get(e, 0) != 2:
            return False
        rest = gp.remove_edges([e, e])
        if cert.variant == "DoubleEdgePlanar":
            return _planar_oracle(rest.simplify())
        core = rest.without_isolated()
        if not core.is_simple or core.n != 6 or core.size != 9 or rest.has_edge(*e):
            return False
        return sorted(core.degrees) == [3] * 6 and _bipartite(core)
    if cert.variant == "LoopOnK33":
        loops = [x for x in gp.edges if x[0] == x[1]]
        if list(cert.edges) != loops or len(loops) != 1:
            return False
        core = gp.remove_edges(loops).without_isolated()
        return core.is_simple and core.n == 6 and core.size == 9 and sorted(core.degrees) == [3] * 6 and _bipartite(core)
    return False


def _bipartite(g: Multigraph) -> bool:
    """Connected cubic bipartite graph on six vertices, which is K3,3."""
    color = {0: 0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in g.neighbors[x]:
            if y not in color:
                color[y] = 1 - color[x]
                stack.append(y)
            elif color[y] == color[x]:
                return False
    return len(color) == g.n


# -- chirality --------------------------------------------------------------------


def iter_chirality_certificates(g: Multigraph, max_deletions: int = 3) -> Iterator[ChiralityCertificate]:
    """Every (D, C) candidate from the Moebius-core search that survives the audit."""
    if not g.is_simple:
        raise GraphError("chirality certificates are searched in simple graphs")
    elements = automorphism_group(g).elements()
    for mc in find_moebius_cores(g, min(max_deletions, g.size)):
        d, c = set(mc.deleted), set(mc.loop_in_base)
        if all({map_edge(s, e) for e in d} == d and {map_edge(s, e) for e in c} == c for s in elements):
            sm = prune_and_smooth(mc.base)
            pos = {v: i for i, v in enumerate(mc.core_loop)}
            core_map = {v: pos[k] for v, k in sm.vertex_map.items()}
            audit = tuple((s, True, True) for s in elements)
            yield ChiralityCertificate(mc.deleted, mc.loop_in_base, mc.rungs, core_map, audit)


def find_chirality_certificate(g: Multigraph, max_deletions: int = 3) -> Optional[ChiralityCertificate]:
    return next(iter_chirality_certificates(g, max_deletions), None)


def verify_chirality(g: Multigraph, cert: ChiralityCertificate) -> bool:
    if cert.n < 3 or cert.n % 2 == 0 or not g.is_simple:
        return False
    edges = set(g.edges)
    d, c = set(cert.D), set(cert.C)
    if not d <= edges or not c <= edges or d & c:
        return False
    # the audit must list exactly Aut(G), and every element must preserve D and C
    elements = brute_force_automorphisms(g)
    if [p for p, _, _ in cert.audit] != elements:
        return False
    for s in elements:
        if {map_edge(s, e) for e in d} != d or {map_edge(s, e) for e in c} != c:
            return False
    # C is a single cycle
    deg: dict[int, int] = {}
    for u, v in c:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if any(k != 2 for k in deg.values()) or not is_connected(Multigraph.from_edges(g.n, sorted(c)).without_isolated()):
        return False
    base = g.remove_edges(sorted(d))
    sm = prune_and_smooth(base)
    ladder = moebius_ladder(cert.n)
    if sm.core.n != ladder.n or set(cert.core_map) != set(sm.vertex_map):
        return False
    images = [cert.core_map[v] for v in sorted(sm.vertex_map, key=sm.vertex_map.get)]
    if sorted(images) != list(range(ladder.n)):
        return False
    mapped = sorted(map_edge(images, e) for e in sm.core_edges)
    if mapped != list(ladder.edges):
        return False
    loop_edges = {(i, (i + 1) % ladder.n) for i in range(ladder.n)}
    loop_edges = {(min(a, b), max(a, b)) for a, b in loop_edges}
    pulled = set()
    for e, chain in zip(sm.core_edges, sm.chains):
        if map_edge(images, e) in loop_edges:
            pulled |= {base.edges[i] for i in chain}
    return pulled == c


# -- orchestration -----------------------------------------------------------------


def classify_embeddability(g: Multigraph) -> Verdict:
    """Cheapest certificate first: planarity, twins, type 1, added edge, chirality."""
    if not is_connected(g):
        raise GraphError("classification expects a connected graph")
    if planar(g):
        return Verdict(ACHIRAL, PlanarCertificate(is_planar(g)))
    if not g.is_simple:
        cert = nonsimple_achiral(g)
        if cert is not None:
            return Verdict(ACHIRAL, cert)
        return Verdict(UNRESOLVED, notes="no non-simple rule applies")
    for finder in (find_twin_mirror, find_type1, find_added_edge_mirror):
        cert = finder(g)
        if cert is not None:
            return Verdict(ACHIRAL, cert)
    chiral = find_chirality_certificate(g)
    if chiral is not None:
        return Verdict(CHIRAL, chiral)
    return Verdict(UNRESOLVED, notes="no achirality certificate and no odd Moebius core preserved by every automorphism")


def verify_certificate(g: Multigraph, cert: Certificate) -> bool:
    if isinstance(cert, PlanarCertificate):
        return _planar_oracle(g.simplify())
    if isinstance(cert, TypeOneCertificate):
        return verify_type1(g, cert)
    if isinstance(cert, TwinMirrorCertificate):
        return verify_twin_mirror(g, cert)
    if isinstance(cert, AddedEdgeMirrorCertificate):
        return verify_added_edge_mirror(g, cert)
    if isinstance(cert, NonSimpleCertificate):
        return verify_nonsimple(g, cert)
    if isinstance(cert, ChiralityCertificate):
        return verify_chirality(g, cert)
    if isinstance(cert, ComponentwiseCertificate):
        covered = sorted(v for vs, _ in cert.parts for v in vs)
        if covered != list(range(g.n)):
            return False
        return all(verify_certificate(g.induced(vs), c) for vs, c in cert.parts)
    return False


def verify_verdict(g: Multigraph, verdict: Verdict) -> bool:
    if verdict.status == UNRESOLVED:
        return verdict.certificate is None
    if verdict.certificate is None:
        return False
    chiral = isinstance(verdict.certificate, ChiralityCertificate)
    return chiral == (verdict.status == CHIRAL) and verify_certificate(g, verdict.certificate)
