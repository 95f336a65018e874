"""Command-line entry point: ``chirality <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from .canon import automorphism_group
from .catalog import mmic_graphs
from .certificates import UNRESOLVED, Verdict, classify_embeddability
from .formats import ParseError, read_graph, to_dot, to_graph6, to_mg
from .generate import GenerationSpec, generate
from .graph import GraphError
from .minors import MinorModel, has_minor
from .pipeline import (
    AuditResult,
    Census,
    ClassificationRecord,
    classify_all,
    report,
    to_jsonl,
)
from .planarity import is_planar, verify_rotation_system
from .validation import validate_catalog

TARGETS = {"k5": "K5", "k33": "K33", "m3": "M3", "m5": "M5", "11_8_1": "G_11_8_1"}


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def cmd_gen(args) -> int:
    spec = GenerationSpec(args.vertices, args.edges, connected=args.connected, nonplanar=args.nonplanar)
    out = []
    for i, g in enumerate(generate(spec)):
        if args.format == "g6":
            out.append(to_graph6(g) + "\n")
        else:
            out.append(f"# graph {i}\n" + to_mg(g) + "\n")
    _write(args.output, "".join(out))
    return 0


def cmd_planar(args) -> int:
    g = read_graph(args.file)
    verdict = is_planar(g)
    payload = verdict.to_json()
    if verdict.planar:
        payload["rotation_checked"] = verify_rotation_system(g, verdict.rotation)
    print(_dump(payload))
    return 0


def cmd_aut(args) -> int:
    g = read_graph(args.file)
    grp = automorphism_group(g)
    print(_dump({"order": grp.order, "generators": [list(p) for p in grp.generators], "orbits": grp.vertex_orbits()}))
    return 0


def cmd_minor(args) -> int:
    from .catalog import named

    g = read_graph(args.file)
    target = named(TARGETS[args.target]).graph
    if args.replay:
        with open(args.replay, encoding="utf-8") as fh:
            model = MinorModel.from_json(json.load(fh))
        ok = model.verify(g, target)
        print(_dump({"replay": ok}))
        return 0 if ok else 1
    model = has_minor(g, target)
    print(_dump({"target": args.target, "found": model is not None, "model": model.to_json() if model else None}))
    return 0 if model is not None else 1


def cmd_certify(args) -> int:
    g = read_graph(args.file)
    verdict = classify_embeddability(g)
    print(_dump(verdict.to_json()))
    return 2 if verdict.status == UNRESOLVED else 0


def _read_config(path: str) -> dict:
    conf = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ParseError("expected key=value", lineno)
            k, v = (x.strip() for x in line.split("=", 1))
            if k not in ("max_size", "audit", "workers"):
                raise ParseError(f"unknown key {k!r}", lineno)
            if k == "audit":
                conf[k] = v.lower() in ("1", "true", "yes", "on")
            else:
                if not v.isdigit():
                    raise ParseError(f"{k} must be an integer", lineno)
                conf[k] = int(v)
    return conf


def cmd_classify(args) -> int:
    conf = _read_config(args.config) if args.config else {}
    max_size = args.max_size if args.max_size is not None else conf.get("max_size", 12)
    audit = args.audit or conf.get("audit", False)
    workers = args.workers if args.workers is not None else conf.get("workers")
    census = Census()
    start = time.perf_counter()
    records = classify_all(max_size, audit=audit, workers=workers, census=census)
    elapsed = time.perf_counter() - start
    rep = report(records, max_size, census)
    lines = to_jsonl(records)
    if args.jsonl:
        _write(args.jsonl, lines)
    else:
        sys.stdout.write(lines)
    summary = rep.text + f"elapsed {elapsed:.1f}s over {len(records)} candidates\n"
    if args.summary:
        _write(args.summary, rep.text)
    (sys.stdout if args.jsonl else sys.stderr).write(summary)
    return 0 if rep.ok else 1


def cmd_catalog(args) -> int:
    chunks = []
    for ng in mmic_graphs():
        g = ng.graph
        if args.format == "g6":
            chunks.append(f"{ng.name} {to_graph6(g)}\n")
        elif args.format == "dot":
            chunks.append(to_dot(g, ng.name))
        else:
            names = " ".join(g.name(v) for v in range(g.n))
            chunks.append(f"# {ng.name}: {ng.notes}\n# vertices: {names}\n" + to_mg(g) + "\n")
    sys.stdout.write("".join(chunks))
    if not args.validate:
        return 0
    rep = validate_catalog()
    print(_dump(rep.to_json()))
    for f in rep.failures():
        print(f"validation failed: {f}", file=sys.stderr)
    return 0 if rep.ok else 1


def _record_from_json(d: dict) -> ClassificationRecord:
    v = d["verdict"]
    audit = None
    if "audit" in d:
        a = d["audit"]
        audit = AuditResult(
            a["minimal"], a["fast_path"], a["minors_walked"], a["discharges"],
            a["chiral_minors"], a["unresolved_minors"], a["contradiction"],
        )  # fmt: skip
    return ClassificationRecord(
        d["key"], d["graph6"], d["order"], d["size"], tuple(d["degrees"]),
        Verdict(v["status"], None, v.get("notes", "")),
        d["contains_11_8_1"], d["minor_model"], d["minor_minimal"], d["name"], d["h_route"], audit,
    )  # fmt: skip


def cmd_report(args) -> int:
    records = []
    with open(args.jsonl, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                records.append(_record_from_json(json.loads(line)))
            except (json.JSONDecodeError, KeyError, TypeError) as exc:
                raise ParseError(f"bad record: {exc}", lineno) from None
    max_size = max((r.size for r in records), default=0)
    rep = report(records, max_size)
    sys.stdout.write(rep.text)
    return 0 if rep.ok else 1


def _write(path: Optional[str], text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chirality", description="Intrinsic chirality of small graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate graphs, one per isomorphism class")
    g.add_argument("--vertices", type=int, required=True)
    g.add_argument("--edges", type=int, required=True)
    g.add_argument("--connected", action="store_true")
    g.add_argument("--nonplanar", action="store_true")
    g.add_argument("--format", choices=["g6", "mg"], default="g6")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    for name, func, text in (
        ("planar", cmd_planar, "planarity verdict with witness"),
        ("aut", cmd_aut, "automorphism group order and generators"),
        ("certify", cmd_certify, "achirality or chirality certificate"),
    ):
        q = sub.add_parser(name, help=text)
        q.add_argument("file", help=".mg file, or graph6 when the name ends in .g6")
        q.set_defaults(func=func)

    m = sub.add_parser("minor", help="find or replay a minor model")
    m.add_argument("file")
    m.add_argument("--target", choices=sorted(TARGETS), required=True)
    m.add_argument("--replay", metavar="MODEL", help="JSON minor model to check instead of searching")
    m.set_defaults(func=cmd_minor)

    c = sub.add_parser("classify", help="classify every connected non-planar graph up to a size")
    c.add_argument("--max-size", type=int)
    c.add_argument("--audit", action="store_true", help="walk all proper minors of chiral graphs")
    c.add_argument("--workers", type=int)
    c.add_argument("--jsonl", help="write JSON-lines records here (default: stdout)")
    c.add_argument("--summary", help="also write the summary table here")
    c.add_argument("--config", help="key=value file with max_size, audit, workers")
    c.set_defaults(func=cmd_classify)

    k = sub.add_parser("catalog", help="print the named graphs")
    k.add_argument("--validate", action="store_true")
    k.add_argument("--format", choices=["mg", "g6", "dot"], default="mg")
    k.set_defaults(func=cmd_catalog)

    r = sub.add_parser("report", help="summarise a JSON-lines file written by classify")
    r.add_argument("jsonl")
    r.set_defaults(func=cmd_report)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (GraphError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
