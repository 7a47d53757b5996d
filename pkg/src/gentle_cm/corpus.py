"""Generators for test corpora: random gentle presentations and split configurations."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .bound_quiver import Arrow, GentlePresentation, Quiver, relation_free_cycle, validate_gentle
from .cluster_a import cluster_relations, quiver_from_edges, random_cluster_quiver
from .cm_construct import cm_auslander


def _vertex_relations(rng: random.Random, ins: list[str], outs: list[str]) -> set[tuple[str, str]]:
    """Relations at one vertex keeping every continuation unique."""
    if len(ins) == 2 and len(outs) == 2:
        if rng.random() < 0.5:
            return {(outs[0], ins[0]), (outs[1], ins[1])}
        return {(outs[0], ins[1]), (outs[1], ins[0])}
    if len(ins) == 2 and len(outs) == 1:
        return {(outs[0], rng.choice(ins))}
    if len(ins) == 1 and len(outs) == 2:
        return {(rng.choice(outs), ins[0])}
    if len(ins) == 1 and len(outs) == 1 and rng.random() < 0.5:
        return {(outs[0], ins[0])}
    return set()


def random_gentle_presentation(rng: random.Random, max_vertices: int = 8,
                               loops: bool = True) -> GentlePresentation:
    """A random finite-dimensional gentle presentation, by rejection sampling."""
    while True:
        n = rng.randint(1, max_vertices)
        vertices = [str(i + 1) for i in range(n)]
        out_deg = dict.fromkeys(vertices, 0)
        in_deg = dict.fromkeys(vertices, 0)
        arrows: list[Arrow] = []
        for _ in range(rng.randint(0, 2 * n)):
            s, t = rng.choice(vertices), rng.choice(vertices)
            if (s == t and not loops) or out_deg[s] == 2 or in_deg[t] == 2:
                continue
            arrows.append(Arrow(f"x{len(arrows) + 1}", s, t))
            out_deg[s] += 1
            in_deg[t] += 1
        rels: set[tuple[str, str]] = set()
        for v in vertices:
            ins = [a.name for a in arrows if a.target == v]
            outs = [a.name for a in arrows if a.source == v]
            rels |= _vertex_relations(rng, ins, outs)
        p = GentlePresentation(Quiver(tuple(vertices), tuple(arrows)), frozenset(rels))
        if relation_free_cycle(p) is None:
            assert validate_gentle(p).ok
            return p


@dataclass(frozen=True)
class SplitConfiguration:
    """Presentations for chi(whole) = chi(gamma1) chi(gamma2) - x chi(b) chi(c)."""

    whole: GentlePresentation
    gamma1: GentlePresentation
    gamma2: GentlePresentation
    b: GentlePresentation
    c: GentlePresentation | None


def triangle_with_tail_split() -> SplitConfiguration:
    """One triangle with three lines 1 -> x, 2 -> 1, 2 -> 3, cut along 2 -> 1.

    B is the hexagon, gamma1 adds vertex 1, gamma2 = {2, 3} and C = {3}.
    """
    q = quiver_from_edges(["x", "y", "z", "1", "2", "3"],
                          [("x", "y"), ("y", "z"), ("z", "x"), ("1", "x"), ("2", "1"), ("2", "3")])
    whole = cm_auslander(cluster_relations(q))
    hexagon = [v for v in whole.vertices if v not in ("1", "2", "3")]
    return SplitConfiguration(
        whole,
        whole.restrict(hexagon + ["1"]),
        whole.restrict(["2", "3"]),
        whole.restrict(hexagon),
        whole.restrict(["3"]),
    )


def triangles_with_line_split(t: int = 2) -> SplitConfiguration:
    """A chain of t triangles with the line 4 <- 3 -> 2 -> 1 -> x1, cut along 3 -> 4.

    gamma2 = {4}, C is empty and B drops vertex 3 from gamma1.
    """
    if t < 1:
        raise ValueError("need at least one triangle")
    vertices, edges = [], []
    prev = None
    for i in range(1, t + 1):
        x, y, z = (f"x{i}", f"y{i}", f"z{i}")
        if prev is not None:
            x = prev
        vertices += [v for v in (x, y, z) if v not in vertices]
        edges += [(x, y), (y, z), (z, x)]
        prev = z
    vertices += ["1", "2", "3", "4"]
    edges += [("1", "x1"), ("2", "1"), ("3", "2"), ("3", "4")]
    whole = cm_auslander(cluster_relations(quiver_from_edges(vertices, edges)))
    gamma1 = [v for v in whole.vertices if v != "4"]
    return SplitConfiguration(
        whole,
        whole.restrict(gamma1),
        whole.restrict(["4"]),
        whole.restrict([v for v in gamma1 if v != "3"]),
        None,
    )


def cluster_corpus(sizes, count: int, seed: int = 0):
    """``count`` random cluster quivers with vertex counts drawn from ``sizes``."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.choice(list(sizes))
        t = rng.randint(0, (n - 1) // 2)
        out.append(random_cluster_quiver(t, n - 1 - 2 * t, rng.randrange(2 ** 32)))
    return out
