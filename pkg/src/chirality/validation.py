"""Consistency checks for the named size-12 graphs and 11^8_1.

Each entry lists per-vertex degrees, adjacency facts, the operations that
reduce the graph to a labelled M3 on the hexagon ``a1 a2 a3 b1 b2 b3``, the
expected automorphism-group order and the vertex blocks every automorphism
must preserve.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .canon import automorphism_group, is_isomorphic
from .catalog import HEXAGON, MMIC_NAMES, mobius, named
from .graph import GraphError, Multigraph, contract_edge, degree_sequence
from .minors import contains_11_8_1
from .planarity import planar

RUNGS = [("a1", "b1"), ("a2", "b2"), ("a3", "b3")]

FACTS: dict[str, dict] = {
    "G_12_7_2": {
        "degrees": {"a1": 4, "a2": 4, "b1": 4, "b2": 4, "a3": 3, "b3": 3, "v": 2},
        "adjacent": [("a1", "v"), ("b1", "v")],
        "nonadjacent": [("a2", "v"), ("b2", "v")],
        "delete": [("a1", "b2"), ("b1", "a2")],
        "contract": [("v", "a1")],
        "aut_order": 2,
        "blocks": [("a1", "b1"), ("a2", "b2"), ("a3", "b3"), ("v",)],
    },
    "G_12_8_1": {
        "degrees": {"a1": 4, "a2": 4, "b2": 4, "a3": 3, "b1": 3, "b3": 3, "v": 2, "w": 1},
        # the written account gives a1 degree 3, which makes the degree sum odd
        "stated_degree_notes": {"a1": 3},
        "adjacent": [("a2", "w"), ("a1", "v"), ("b1", "v")],
        "nonadjacent": [("b2", "w"), ("a2", "v"), ("b2", "v")],
        "delete": [("a1", "b2")],
        "contract": [("v", "a1"), ("w", "a2")],
        "aut_order": 1,
        "blocks": [],
    },
    "G_12_8_2": {
        "degrees": {"b2": 4, "v": 3, "a1": 3, "a2": 3, "a3": 3, "b1": 3, "b3": 3, "w": 2},
        "adjacent": [("a2", "b2"), ("a2", "w"), ("a1", "w"), ("a3", "a2"), ("b3", "a1"), ("b3", "a3")],
        "nonadjacent": [("w", "v"), ("w", "a3"), ("w", "b1"), ("w", "b3"), ("a2", "v"), ("a2", "b1"),
                        ("a2", "b3"), ("v", "a3"), ("b1", "a1")],  # fmt: skip
        "delete": [("v", "b2")],
        "contract": [("v", "a1"), ("w", "a1")],
        "alternate_source": "G_12_8_1",
        "aut_order": 1,
        "blocks": [],
    },
    "G_12_9_1": {
        "degrees": {"a1": 4, "b1": 4, "a2": 3, "a3": 3, "b2": 3, "b3": 3, "v": 2, "w1": 1, "w2": 1},
        "adjacent": [("a2", "v"), ("b2", "v")],
        "nonadjacent": [("a3", "v"), ("b3", "v")],
        "delete": [],
        "contract": [("w1", "a1"), ("w2", "b1"), ("v", "a2")],
        "aut_order": 2,
        "blocks": [("w1", "w2"), ("a1", "b1"), ("a2", "b2"), ("a3", "b3"), ("v",)],
    },
    "G_12_7_1": {"sequence": (4, 4, 4, 3, 3, 3, 3)},
    "G_11_8_1": {"sequence": (3, 3, 3, 3, 3, 3, 2, 2)},
}


@dataclass
class Check:
    label: str
    ok: bool
    detail: str = ""


@dataclass
class EntryReport:
    name: str
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, label: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(label, bool(ok), detail))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "checks": [{"check": c.label, "ok": c.ok, "detail": c.detail} for c in self.checks],
            "notes": self.notes,
        }


@dataclass
class CatalogReport:
    entries: list[EntryReport]

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def failures(self) -> list[str]:
        return [f"{e.name}: {c.label} ({c.detail})" for e in self.entries for c in e.checks if not c.ok]

    def to_json(self) -> dict:
        return {"ok": self.ok, "entries": [e.to_json() for e in self.entries]}


def contract_named(g: Multigraph, drop: str, keep: str) -> Multigraph:
    """Contract the edge ``drop``-``keep``; the merged vertex is called ``keep``."""
    i, j = g.vertex(drop), g.vertex(keep)
    h = contract_edge(g, (i, j))
    labels = list(h.labels)
    labels[min(i, j)] = keep
    return Multigraph(h.n, h.edges, tuple(labels))


def apply_named_operations(g: Multigraph, delete, contract) -> Multigraph:
    for a, b in delete:
        g = g.remove_edges([g.edge(a, b)])
    for drop, keep in contract:
        g = contract_named(g, drop, keep)
    return g


def is_labelled_m3(g: Multigraph) -> bool:
    """``g`` is M3 with loop a1a2a3b1b2b3 and rungs a_i b_i, by vertex names."""
    if g.labels is None or sorted(g.labels) != sorted(HEXAGON) or not g.is_simple:
        return False
    want = {frozenset(p) for p in RUNGS}
    want |= {frozenset((HEXAGON[i], HEXAGON[(i + 1) % 6])) for i in range(6)}
    have = {frozenset((g.name(u), g.name(v))) for u, v in g.edges}
    return have == want and g.size == 9


def _try_operations(g: Multigraph, delete, contract) -> tuple[Optional[Multigraph], str]:
    try:
        return apply_named_operations(g, delete, contract), ""
    except (GraphError, ValueError) as exc:
        return None, str(exc)


def validate_entry(name: str) -> EntryReport:
    ng = named(name)
    g = ng.graph
    facts = FACTS[name]
    rep = EntryReport(name)
    rep.add("non-planar", not planar(g))
    if "sequence" in facts:
        seq = degree_sequence(g)
        rep.add("degree sequence", seq == facts["sequence"], f"observed {seq}")
    else:
        degs = {g.name(v): d for v, d in enumerate(g.degrees)}
        bad = {k: (v, degs.get(k)) for k, v in facts["degrees"].items() if degs.get(k) != v}
        rep.add("vertex degrees", not bad and len(degs) == len(facts["degrees"]), f"mismatches {bad}" if bad else "")
        for vtx, stated in facts.get("stated_degree_notes", {}).items():
            total = sum(facts["degrees"].values()) - facts["degrees"][vtx] + stated
            rep.notes.append(
                f"written degree {stated} for {vtx} gives degree sum {total}, which is odd; "
                f"the minor operations force degree {facts['degrees'][vtx]}"
            )
        for a, b in facts["adjacent"]:
            rep.add(f"{a} adjacent to {b}", g.has_edge(g.vertex(a), g.vertex(b)))
        for a, b in facts["nonadjacent"]:
            rep.add(f"{a} not adjacent to {b}", not g.has_edge(g.vertex(a), g.vertex(b)))
        result, err = _try_operations(g, facts["delete"], facts["contract"])
        ok = result is not None and is_labelled_m3(result)
        rep.add("stated operations give M3 with the hexagon loop", ok, err)
        if ok:
            rep.add("result isomorphic to M3", is_isomorphic(result, mobius(3).graph) is not None)
        alt = facts.get("alternate_source")
        if alt:
            other, err = _try_operations(named(alt).graph, facts["delete"], facts["contract"])
            applies = other is not None and is_labelled_m3(other)
            rep.notes.append(
                f"operations applied to {alt}: "
                + ("yield M3" if applies else f"do not apply ({err or 'result is not the labelled M3'})")
            )
        grp = automorphism_group(g)
        rep.add("automorphism group order", grp.order == facts["aut_order"], f"observed {grp.order}")
        elements = grp.elements()
        for block in facts["blocks"]:
            idx = {g.vertex(x) for x in block}
            rep.add(
                f"every automorphism preserves {{{', '.join(block)}}}",
                all({p[x] for x in idx} == idx for p in elements),
            )
    if g.size == 12:
        model = contains_11_8_1(g)
        detail = ""
        if model is not None:
            detail = "minor found: " + ", ".join(model.describe(g))
        rep.add("no 11^8_1 minor", model is None, detail)
    return rep


def validate_catalog() -> CatalogReport:
    return CatalogReport([validate_entry(n) for n in MMIC_NAMES])
