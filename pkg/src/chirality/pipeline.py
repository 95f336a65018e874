"""Exhaustive classification of connected non-planar graphs by size, the
minor-minimality audit, and the summary report."""

from __future__ import annotations

import json
import os
from collections import Counter, deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .canon import canonical_form, canonical_key
from .catalog import catalog, named
from .certificates import (
    ACHIRAL,
    CHIRAL,
    UNRESOLVED,
    ComponentwiseCertificate,
    PlanarCertificate,
    Verdict,
    classify_embeddability,
    nonsimple_achiral,
)
from .formats import to_graph6
from .generate import GenerationSpec, generate
from .graph import GraphError, Multigraph, degree_sequence
from .minors import contains_11_8_1, enumerate_one_step_minors, has_minor, k33_routes_via_h
from .planarity import is_planar, planar

MAX_CLASSIFY_SIZE = 12


def _key_11_8_1() -> bytes:
    return canonical_key(named("G_11_8_1").graph)


def catalog_name(g: Multigraph) -> Optional[str]:
    key = canonical_key(g)
    for name, ng in catalog().items():
        if canonical_key(ng.graph) == key:
            return name
    return None


# -- minor verdicts ------------------------------------------------------------------


def certify_minor(g: Multigraph, cache: Optional[dict] = None) -> Verdict:
    """Verdict for an arbitrary multigraph met while walking minors.

    Disconnected graphs are handled component by component: achiral when
    every component is, chiral when some component is.
    """
    key = canonical_key(g)
    if cache is not None and key in cache:
        return cache[key]
    nonsimple = None if g.is_simple else nonsimple_achiral(g)
    if nonsimple is not None:
        verdict = Verdict(ACHIRAL, nonsimple)
    elif planar(g):
        verdict = Verdict(ACHIRAL, PlanarCertificate(is_planar(g)))
    else:
        comps = [c for c in g.components() if len(c) > 1 or g.matrix[c[0]][c[0]]]
        if len(comps) == 1 and len(g.components()) == 1:
            verdict = classify_embeddability(g)
        else:
            parts = []
            verdict = None
            for comp in comps:
                sub = certify_minor(g.induced(comp), cache)
                if sub.status != ACHIRAL:
                    verdict = Verdict(sub.status, sub.certificate, notes=f"component {comp}: {sub.status}")
                    break
                parts.append((tuple(comp), sub.certificate))
            if verdict is None:
                isolated = [c for c in g.components() if c not in comps]
                parts += [(tuple(c), PlanarCertificate(is_planar(g.induced(c)))) for c in isolated]
                verdict = Verdict(ACHIRAL, ComponentwiseCertificate(tuple(sorted(parts))))
    if cache is not None:
        cache[key] = verdict
    return verdict


def _discharge_kind(v: Verdict) -> str:
    if v.certificate is None:
        return v.status.lower()
    kind = v.certificate.kind
    if kind == "nonsimple":
        return f"nonsimple:{v.certificate.variant}"
    return kind


@dataclass
class AuditResult:
    minimal: bool
    fast_path: Optional[bool]
    minors_walked: int
    discharges: dict[str, int]
    chiral_minors: list[str]
    unresolved_minors: list[str]
    contradiction: str = ""

    @property
    def agrees(self) -> bool:
        return self.fast_path is None or self.fast_path == self.minimal

    def to_json(self) -> dict:
        return {
            "minimal": self.minimal,
            "fast_path": self.fast_path,
            "agrees": self.agrees,
            "minors_walked": self.minors_walked,
            "discharges": dict(sorted(self.discharges.items())),
            "chiral_minors": self.chiral_minors,
            "unresolved_minors": self.unresolved_minors,
            "contradiction": self.contradiction,
        }


def fast_minimality(g: Multigraph) -> Optional[bool]:
    """For simple size-12 graphs, minimal exactly when there is no 11^8_1 minor."""
    if g.size != 12 or not g.is_simple:
        return None
    return contains_11_8_1(g) is None


def walk_proper_minors(g: Multigraph, expand_planar: bool = True) -> Iterable[Multigraph]:
    """Every proper minor of ``g`` once up to isomorphism, breadth first.

    With ``expand_planar`` off, planar minors are reported but not expanded:
    their own minors are planar too.
    """
    seen = {canonical_key(g)}
    queue = deque([g])
    while queue:
        h = queue.popleft()
        for _, m in enumerate_one_step_minors(h):
            k = canonical_key(m)
            if k in seen:
                continue
            seen.add(k)
            yield m
            if expand_planar or not planar(m):
                queue.append(m)


def _minor_label(m: Multigraph) -> str:
    """Catalog name of the graph left after dropping isolated vertices, else graph6
    of its simplification (starred when loops or parallel edges were dropped)."""
    core = m.without_isolated()
    return catalog_name(core) or to_graph6(canonical_form(core).simplify()) + ("" if core.is_simple else "*")


def minor_minimality_audit(
    g: Multigraph, cache: Optional[dict] = None, expand_planar: bool = True
) -> AuditResult:
    """Check every proper minor for a chiral or undecided verdict.

    A chiral proper minor is expected only when it is 11^8_1 inside a
    size-12 graph; any other chiral minor is reported as a contradiction.
    """
    cache = {} if cache is None else cache
    discharges: Counter = Counter()
    chiral, unresolved = [], []
    walked = 0
    for m in walk_proper_minors(g, expand_planar):
        walked += 1
        v = certify_minor(m, cache)
        discharges[_discharge_kind(v)] += 1
        label = _minor_label(m)
        if v.status == CHIRAL:
            chiral.append(label)
        elif v.status == UNRESOLVED:
            unresolved.append(label)
    fast = fast_minimality(g)
    contradiction = ""
    unexpected = [c for c in chiral if c != "G_11_8_1"]
    if unexpected:
        contradiction = f"unexpected chiral proper minors {sorted(unexpected)}"
    minimal = not chiral and not unresolved
    if fast is not None and fast != minimal and not unresolved:
        contradiction = (contradiction + "; " if contradiction else "") + "fast path and audit path disagree"
    return AuditResult(minimal, fast, walked, dict(discharges), sorted(set(chiral)), sorted(set(unresolved)), contradiction)


# -- classification records -----------------------------------------------------------


@dataclass
class ClassificationRecord:
    key: str
    graph6: str
    order: int
    size: int
    degrees: tuple[int, ...]
    verdict: Verdict
    contains_11_8_1: Optional[bool] = None
    minor_model: Optional[dict] = None
    minor_minimal: bool = False
    name: Optional[str] = None
    h_route: Optional[str] = None
    audit: Optional[AuditResult] = None
    seconds: float = field(default=0.0, compare=False)

    def to_json(self) -> dict:
        out = {
            "key": self.key,
            "graph6": self.graph6,
            "order": self.order,
            "size": self.size,
            "degrees": list(self.degrees),
            "verdict": self.verdict.to_json(),
            "contains_11_8_1": self.contains_11_8_1,
            "minor_model": self.minor_model,
            "minor_minimal": self.minor_minimal,
            "name": self.name,
            "h_route": self.h_route,
        }
        if self.audit is not None:
            out["audit"] = self.audit.to_json()
        return out


def classify_graph(g: Multigraph, audit: bool = False) -> ClassificationRecord:
    import time

    start = time.perf_counter()
    g = canonical_form(g)
    verdict = classify_embeddability(g)
    rec = ClassificationRecord(
        canonical_key(g).hex(), to_graph6(g), g.n, g.size, degree_sequence(g), verdict, name=catalog_name(g)
    )
    if g.n == 7 and g.size == 12 and has_minor(g, "K33") is not None:
        routes = k33_routes_via_h(g)
        rec.h_route = "+".join(sorted({kind for _, _, kind in routes})) or "none"
    if verdict.status == CHIRAL:
        is_target = canonical_key(g) == _key_11_8_1()
        model = None if is_target else contains_11_8_1(g)
        rec.contains_11_8_1 = model is not None
        rec.minor_model = model.to_json() if model is not None else None
        fast = fast_minimality(g)
        if audit or fast is None:
            rec.audit = minor_minimality_audit(g, {})
            rec.minor_minimal = rec.audit.minimal
        else:
            rec.minor_minimal = fast
    rec.seconds = time.perf_counter() - start
    return rec


def _classify_task(args) -> ClassificationRecord:
    g, audit = args
    return classify_graph(g, audit)


def worker_count(requested: Optional[int] = None) -> int:
    n = requested if requested else (os.cpu_count() or 1)
    cap = os.environ.get("CHIRALITY_THREADS")
    if cap:
        try:
            n = min(n, max(1, int(cap)))
        except ValueError:
            raise GraphError(f"CHIRALITY_THREADS must be an integer, got {cap!r}") from None
    return max(1, n)


@dataclass
class Census:
    """Connected graph counts per (size, order), split by planarity."""

    connected: dict[tuple[int, int], int] = field(default_factory=dict)
    planar: dict[tuple[int, int], int] = field(default_factory=dict)


def candidate_orders(size: int) -> range:
    lo = next(n for n in range(1, size + 2) if n * (n - 1) // 2 >= size)
    return range(max(lo, 5), size - 3 + 1)


def candidates(max_size: int, census: Optional[Census] = None) -> list[Multigraph]:
    """Connected non-planar simple graphs of every size up to ``max_size``."""
    if max_size > MAX_CLASSIFY_SIZE:
        raise GraphError(f"classification is limited to size {MAX_CLASSIFY_SIZE}")
    out = []
    for s in range(1, max_size + 1):
        for n in candidate_orders(s):
            conn = generate(GenerationSpec(n, s, connected=True))
            nonplanar = [g for g in conn if not planar(g)]
            if census is not None:
                census.connected[(s, n)] = len(conn)
                census.planar[(s, n)] = len(conn) - len(nonplanar)
            out += nonplanar
    return out


def classify_all(
    max_size: int = MAX_CLASSIFY_SIZE,
    audit: bool = False,
    workers: Optional[int] = None,
    census: Optional[Census] = None,
) -> list[ClassificationRecord]:
    graphs = candidates(max_size, census)
    jobs = [(g, audit) for g in graphs]
    n = worker_count(workers)
    if n == 1:
        records = [_classify_task(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=n) as pool:
            records = list(pool.map(_classify_task, jobs, chunksize=4))
    return sorted(records, key=lambda r: (r.size, r.order, r.key))


# -- reporting ----------------------------------------------------------------------


def to_jsonl(records: Iterable[ClassificationRecord]) -> str:
    rows = sorted(records, key=lambda r: (r.size, r.order, r.key))
    return "".join(json.dumps(r.to_json(), sort_keys=True, separators=(",", ":")) + "\n" for r in rows)


def mmic(records: Iterable[ClassificationRecord]) -> list[ClassificationRecord]:
    return [r for r in records if r.verdict.status == CHIRAL and r.minor_minimal]


def degree_names(records: Iterable[ClassificationRecord]) -> dict[str, str]:
    """Name each minimal class size^order_index, indices by descending degree sequence."""
    groups: dict[tuple[int, int], list[ClassificationRecord]] = {}
    for r in mmic(records):
        groups.setdefault((r.size, r.order), []).append(r)
    out = {}
    for (s, n), rs in groups.items():
        rs.sort(key=lambda r: (tuple(-d for d in r.degrees), r.key))
        for i, r in enumerate(rs, start=1):
            out[r.key] = f"{s}^{n}_{i}"
    return out


def summary_line(records: list[ClassificationRecord], max_size: int) -> str:
    minimal = mmic(records)
    top = sum(1 for r in minimal if r.size == max_size)
    return f"MMIC({max_size}) = {top}, MMIC(≤{max_size}) = {len(minimal)}"


@dataclass
class Report:
    text: str
    summary: str
    unresolved: int
    contradictions: list[str]

    @property
    def ok(self) -> bool:
        return self.unresolved == 0 and not self.contradictions


def report(records: list[ClassificationRecord], max_size: int, census: Optional[Census] = None) -> Report:
    rows = []
    counts: dict[tuple[int, int], Counter] = {}
    for r in records:
        counts.setdefault((r.size, r.order), Counter())[r.verdict.status] += 1
    keys = sorted(set(counts) | set(census.planar if census else ()))
    rows.append(f"{'size':>4} {'order':>5} {'planar':>7} {'achiral':>7} {'chiral':>6} {'unresolved':>10}")
    for s, n in keys:
        c = counts.get((s, n), Counter())
        p = census.planar.get((s, n), 0) if census else 0
        rows.append(f"{s:>4} {n:>5} {p:>7} {c[ACHIRAL]:>7} {c[CHIRAL]:>6} {c[UNRESOLVED]:>10}")
    rows.append("")
    names = degree_names(records)
    rows.append("minor minimal intrinsically chiral classes:")
    for r in mmic(records):
        deg = ",".join(map(str, r.degrees))
        rows.append(f"  {names[r.key]:<8} catalog={r.name or '-':<9} degrees=({deg}) graph6={r.graph6}")
    chiral_other = [r for r in records if r.verdict.status == CHIRAL and not r.minor_minimal]
    if chiral_other:
        rows.append("chiral but not minimal:")
        for r in chiral_other:
            why = "contains 11^8_1" if r.contains_11_8_1 else "has a chiral or undecided proper minor"
            rows.append(f"  catalog={r.name or '-':<9} graph6={r.graph6} ({why})")
    unresolved = [r for r in records if r.verdict.status == UNRESOLVED]
    if unresolved:
        rows.append("unresolved:")
        for r in unresolved:
            rows.append(f"  graph6={r.graph6} degrees={list(r.degrees)} notes={r.verdict.notes}")
    contradictions = []
    for r in records:
        if r.audit is not None and r.audit.contradiction:
            contradictions.append(f"{r.name or r.graph6}: {r.audit.contradiction}")
        if r.audit is not None and r.audit.unresolved_minors:
            contradictions.append(f"{r.name or r.graph6}: undecided proper minors {r.audit.unresolved_minors}")
        if r.h_route == "none":
            contradictions.append(f"{r.graph6}: order-7 candidate with no route through H1 or H2")
    if contradictions:
        rows.append("audit contradictions:")
        rows += [f"  {c}" for c in contradictions]
    line = summary_line(records, max_size)
    rows.append("")
    rows.append(line)
    return Report("\n".join(rows) + "\n", line, len(unresolved), contradictions)
