"""Shared oracles and the per-criterion summary printed at the end of a run."""

from __future__ import annotations

import itertools
import math
import random
from collections import Counter

import networkx as nx
import pytest

from chirality.canon import automorphism_group
from chirality.graph import Multigraph
from chirality.planarity import planar

CRITERIA: dict[int, tuple[bool, str]] = {}


def record_criterion(number: int, ok: bool, detail: str) -> None:
    CRITERIA[number] = (bool(ok), detail)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        ok, detail = CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")


def to_nx(g: Multigraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(e for e in g.edges if e[0] != e[1])
    return h


def all_pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def labeled_graphs(n: int, max_edges: int | None = None):
    """Every labelled simple graph on ``n`` vertices (optionally capped in size)."""
    pairs = all_pairs(n)
    top = len(pairs) if max_edges is None else min(max_edges, len(pairs))
    for k in range(top + 1):
        for chosen in itertools.combinations(pairs, k):
            yield Multigraph(n, chosen)


def burnside_counts(n: int) -> Counter:
    """Number of unlabelled simple graphs on ``n`` vertices per edge count,
    by averaging fixed colourings over all vertex permutations."""
    pairs = all_pairs(n)
    index = {p: i for i, p in enumerate(pairs)}
    total = [0] * (len(pairs) + 1)
    for perm in itertools.permutations(range(n)):
        seen = [False] * len(pairs)
        poly = [1]
        for i, (a, b) in enumerate(pairs):
            if seen[i]:
                continue
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                length += 1
                u, v = pairs[j]
                x, y = perm[u], perm[v]
                j = index[(min(x, y), max(x, y))]
            new = [0] * (len(poly) + length)
            for d, c in enumerate(poly):
                new[d] += c
                new[d + length] += c
            poly = new
        for d, c in enumerate(poly):
            total[d] += c
    f = math.factorial(n)
    return Counter({d: c // f for d, c in enumerate(total) if c})


def brute_type1(g):
    """Involutions admitting some side assignment, by trying all of them."""
    good = []
    for phi in automorphism_group(g).involutions():
        fixed = [v for v in range(g.n) if phi[v] == v]
        if not planar(g.induced(fixed)):
            continue
        orbits = sorted({(min(v, phi[v]), max(v, phi[v])) for v in range(g.n) if phi[v] != v})
        for bits in itertools.product((0, 1), repeat=len(orbits)):
            left = {o[b] for o, b in zip(orbits, bits)}
            right = {o[1 - b] for o, b in zip(orbits, bits)}
            if all(phi[u] == v for u, v in g.edges if (u in left and v in right) or (u in right and v in left)):
                good.append(phi)
                break
    return good


def random_multigraph(rng: random.Random, n: int, m: int, loops: bool = True) -> Multigraph:
    edges = []
    for _ in range(m):
        u = rng.randrange(n)
        v = rng.randrange(n) if loops else rng.choice([x for x in range(n) if x != u])
        edges.append((u, v))
    return Multigraph(n, tuple(edges))


def random_simple(rng: random.Random, n: int, p: float) -> Multigraph:
    return Multigraph(n, tuple(e for e in all_pairs(n) if rng.random() < p))


@pytest.fixture
def rng():
    return random.Random(20240611)


def run_classify(tmp_dir, workers: int):
    """Full size-12 classification through the CLI; returns (exit code, JSON lines, stdout)."""
    import contextlib
    import io
    import json

    from chirality.cli import main

    path = tmp_dir / f"records_{workers}.jsonl"
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(["classify", "--max-size", "12", "--audit", "--workers", str(workers), "--jsonl", str(path)])
    text = path.read_text(encoding="utf-8")
    return code, text, [json.loads(line) for line in text.splitlines()], buf.getvalue()


@pytest.fixture(scope="session")
def full_run(tmp_path_factory):
    return run_classify(tmp_path_factory.mktemp("classify"), 1)
