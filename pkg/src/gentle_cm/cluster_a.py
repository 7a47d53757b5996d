"""Cluster-tilted quivers of type A: recognition, mutation and good mutations."""

from __future__ import annotations

import itertools
import random
from collections import Counter, deque
from dataclasses import dataclass

import networkx as nx

from .bound_quiver import (
    Arrow,
    GentlePresentation,
    Quiver,
    ValidationReport,
    Violation,
    enumerate_nonzero_paths,
    is_schurian,
)
from .errors import DomainError, ResourceCapError

DEFAULT_BFS_MAX_N = 8
DEFAULT_BFS_STATE_CAP = 200_000


@dataclass(frozen=True)
class ClusterQuiver:
    """A quiver known to lie in the class of cluster-tilted type A quivers."""

    quiver: Quiver
    triangles: tuple[tuple[str, str, str], ...]
    lines: tuple[str, ...]

    @property
    def s(self) -> int:
        return len(self.lines)

    @property
    def t(self) -> int:
        return len(self.triangles)

    @property
    def n(self) -> int:
        return len(self.quiver.vertices)


def _undirected(q: Quiver) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(q.vertices)
    g.add_edges_from((a.source, a.target) for a in q.arrows if a.source != a.target)
    return g


def _oriented_triangle(q: Quiver, block: set[str]) -> tuple[str, str, str] | None:
    """The block as x -> y -> z -> x with x the first vertex in declared order."""
    edges = {(a.source, a.target) for a in q.arrows if a.source in block and a.target in block}
    if len(edges) != 3:
        return None
    x = min(block, key=q.index.__getitem__)
    succ = {s: t for s, t in edges}
    if len(succ) != 3:
        return None
    y = succ[x]
    z = succ[y]
    if succ[z] != x:
        return None
    return x, y, z


def analyze_cluster_quiver(q: Quiver) -> tuple[ClusterQuiver | None, ValidationReport]:
    out: list[Violation] = []
    if not q.vertices:
        out.append(Violation("empty quiver", "no vertices"))
        return None, ValidationReport(out)
    pairs = Counter((a.source, a.target) for a in q.arrows)
    for a in q.arrows:
        if a.source == a.target:
            out.append(Violation("loop", a.name))
    for (i, j), m in pairs.items():
        if m > 1:
            out.append(Violation("multiple arrows", f"{m} arrows {i} -> {j}"))
        if i != j and (j, i) in pairs and q.index[i] < q.index[j]:
            out.append(Violation("2-cycle", f"{i} <-> {j}"))
    g = _undirected(q)
    if not nx.is_connected(g):
        out.append(Violation("not connected", f"{nx.number_connected_components(g)} components"))
    if out:
        return None, ValidationReport(out)

    triangles = []
    in_blocks: Counter = Counter()
    for block in nx.biconnected_components(g):
        for v in block:
            in_blocks[v] += 1
        if len(block) == 2:
            continue
        tri = _oriented_triangle(q, block) if len(block) == 3 else None
        if tri is None:
            order = sorted(block, key=q.index.__getitem__)
            out.append(Violation("cycle that is not an oriented triangle", " ".join(order)))
        else:
            triangles.append(tri)
    for v in q.vertices:
        if in_blocks[v] > 2:
            out.append(Violation("vertex in more than two blocks",
                                 f"vertex {v} has {g.degree(v)} neighbours"))
    if out:
        return None, ValidationReport(out)

    triangles.sort(key=lambda tr: q.index[tr[0]])
    tri_edges = {(x, y) for tr in triangles for x, y in zip(tr, tr[1:] + tr[:1])}
    lines = tuple(a.name for a in q.arrows if (a.source, a.target) not in tri_edges)
    cq = ClusterQuiver(q, tuple(triangles), lines)
    assert cq.n == 1 + cq.s + 2 * cq.t
    return cq, ValidationReport([])


def is_cluster_tilted_a(q: Quiver) -> tuple[bool, ValidationReport]:
    cq, report = analyze_cluster_quiver(q)
    return cq is not None, report


def as_cluster_quiver(q: Quiver | ClusterQuiver) -> ClusterQuiver:
    if isinstance(q, ClusterQuiver):
        return q
    cq, report = analyze_cluster_quiver(q)
    if cq is None:
        raise DomainError("not a cluster-tilted type A quiver:\n" + str(report))
    return cq


def count_lines_triangles(q: Quiver | ClusterQuiver) -> tuple[int, int]:
    cq = as_cluster_quiver(q)
    return cq.s, cq.t


def cluster_relations(q: Quiver | ClusterQuiver) -> GentlePresentation:
    """All length-2 paths inside oriented triangles are zero."""
    cq = as_cluster_quiver(q)
    name = {(a.source, a.target): a.name for a in cq.quiver.arrows}
    rels = set()
    for x, y, z in cq.triangles:
        a, b, c = name[(x, y)], name[(y, z)], name[(z, x)]
        rels |= {(b, a), (c, b), (a, c)}
    return GentlePresentation(cq.quiver, frozenset(rels))


def arrow_name(i: str, j: str, m: int = 1) -> str:
    return f"{i}>{j}" if m == 1 else f"{i}>{j}.{m}"


def exchange_matrix(q: Quiver) -> list[list[int]]:
    idx = q.index
    n = len(q.vertices)
    b = [[0] * n for _ in range(n)]
    for a in q.arrows:
        b[idx[a.source]][idx[a.target]] += 1
        b[idx[a.target]][idx[a.source]] -= 1
    return b


def quiver_from_exchange_matrix(vertices, b: list[list[int]]) -> Quiver:
    vertices = tuple(vertices)
    arrows = []
    for i, vi in enumerate(vertices):
        for j, vj in enumerate(vertices):
            for m in range(1, b[i][j] + 1):
                arrows.append(Arrow(arrow_name(vi, vj, m), vi, vj))
    return Quiver(vertices, tuple(arrows))


def fz_mutate(q: Quiver, k: str) -> Quiver:
    """Fomin-Zelevinsky mutation; arrows are renamed ``i>j`` in the result."""
    if k not in q.index:
        raise DomainError(f"unknown vertex {k!r}")
    pairs = {(a.source, a.target) for a in q.arrows}
    if (k, k) in pairs:
        raise DomainError(f"loop at {k}")
    for i, j in pairs:
        if (j, i) in pairs and k in (i, j):
            raise DomainError(f"2-cycle through {k}")
    b = exchange_matrix(q)
    kk = q.index[k]
    n = len(b)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if kk in (i, j):
                out[i][j] = -b[i][j]
            else:
                out[i][j] = b[i][j] + (abs(b[i][kk]) * b[kk][j] + b[i][kk] * abs(b[kk][j])) // 2
    return quiver_from_exchange_matrix(q.vertices, out)


def _nontrivial_paths(p: GentlePresentation):
    return [x for x in enumerate_nonzero_paths(p) if x.arrows]


def mutation_defined(p: GentlePresentation, k: str, sign: str) -> bool:
    """Whether the algebra mutation at ``k`` with the given sign ('-' or '+') is defined.

    For '-' every nontrivial nonzero path starting at k must extend to a nonzero
    path by some arrow ending at k; '+' is the dual statement.
    """
    if sign not in ("-", "+"):
        raise DomainError("sign must be '-' or '+'")
    if k not in p.quiver.index:
        raise DomainError(f"unknown vertex {k!r}")
    if any(a.source == a.target == k for a in p.arrows):
        raise DomainError(f"loop at {k}")
    if not is_schurian(p):
        raise DomainError("mutation criterion needs a schurian algebra")
    q = p.quiver
    for path in _nontrivial_paths(p):
        if sign == "-" and path.source == k:
            first = path.arrows[-1]
            if not any(not p.is_relation(first, a.name) for a in q.incoming[k]):
                return False
        if sign == "+" and path.target == k:
            last = path.arrows[0]
            if not any(not p.is_relation(a.name, last) for a in q.outgoing[k]):
                return False
    return True


def defined_mutations(p: GentlePresentation, k: str) -> tuple[str, ...]:
    return tuple(sg for sg in ("-", "+") if mutation_defined(p, k, sg))


def is_good_mutation(q: Quiver | ClusterQuiver, k: str) -> bool:
    cq = as_cluster_quiver(q)
    before = cluster_relations(cq)
    after = cluster_relations(fz_mutate(cq.quiver, k))
    return (mutation_defined(before, k, "-") and mutation_defined(after, k, "+")) or (
        mutation_defined(before, k, "+") and mutation_defined(after, k, "-")
    )


def neighborhood_type(q: Quiver | ClusterQuiver, k: str) -> str:
    """Local shape at k: '1', '2a', '2b', '3' or '4' (isolated vertex gives '0')."""
    cq = as_cluster_quiver(q)
    qq = cq.quiver
    ins = [a.source for a in qq.incoming[k]]
    outs = [a.target for a in qq.outgoing[k]]
    deg = len(ins) + len(outs)
    if deg == 2:
        in_triangle = any(k in tr for tr in cq.triangles)
        if in_triangle or (ins and outs):
            return "2b"
        return "2a"
    return str(deg)


def derived_equivalent(q1: Quiver | ClusterQuiver, q2: Quiver | ClusterQuiver) -> bool:
    c1, c2 = as_cluster_quiver(q1), as_cluster_quiver(q2)
    if c1.n != c2.n:
        raise DomainError(f"size mismatch: {c1.n} vs {c2.n} vertices")
    return c1.t == c2.t


def _refine_colors(q: Quiver) -> list[int]:
    idx = q.index
    n = len(q.vertices)
    outs = [[] for _ in range(n)]
    ins = [[] for _ in range(n)]
    for a in q.arrows:
        outs[idx[a.source]].append(idx[a.target])
        ins[idx[a.target]].append(idx[a.source])
    colors = [0] * n
    classes = 0
    while True:
        sig = [(colors[v], tuple(sorted(colors[w] for w in outs[v])),
                tuple(sorted(colors[w] for w in ins[v]))) for v in range(n)]
        palette = {s: c for c, s in enumerate(sorted(set(sig)))}
        colors = [palette[s] for s in sig]
        if len(palette) == classes:
            return colors
        classes = len(palette)


def canonical_form(q: Quiver, cap: int = 1_000_000) -> tuple:
    """Isomorphism invariant that is also complete: equal iff the quivers are isomorphic.

    Colour refinement fixes an invariant ordered partition of the vertices; the
    minimum adjacency encoding is then taken over orderings respecting it.
    """
    colors = _refine_colors(q)
    n = len(colors)
    classes = [[v for v in range(n) if colors[v] == c] for c in sorted(set(colors))]
    total = 1
    for cl in classes:
        for m in range(2, len(cl) + 1):
            total *= m
    if total > cap:
        raise ResourceCapError(f"{total} orderings exceed the canonical-form cap {cap}")
    idx = q.index
    count = Counter((idx[a.source], idx[a.target]) for a in q.arrows)
    best = None
    for choice in itertools.product(*(itertools.permutations(cl) for cl in classes)):
        order = [v for part in choice for v in part]
        code = tuple(count[(i, j)] for i in order for j in order)
        if best is None or code < best:
            best = code
    return n, tuple(sorted(Counter(colors).values())), best


def good_mutation_sequence(
    q1: Quiver | ClusterQuiver,
    q2: Quiver | ClusterQuiver,
    max_n: int = DEFAULT_BFS_MAX_N,
    state_cap: int = DEFAULT_BFS_STATE_CAP,
) -> list[str] | None:
    """Shortest vertex sequence of good mutations taking q1 to a copy of q2."""
    c1, c2 = as_cluster_quiver(q1), as_cluster_quiver(q2)
    if not derived_equivalent(c1, c2):
        raise DomainError("the quivers have different triangle counts")
    if c1.n > max_n:
        raise ResourceCapError(f"{c1.n} vertices exceed the search bound {max_n}")
    target = canonical_form(c2.quiver)
    start = canonical_form(c1.quiver)
    if start == target:
        return []
    parent: dict[tuple, tuple[tuple, str] | None] = {start: None}
    queue = deque([(c1.quiver, start)])
    while queue:
        q, key = queue.popleft()
        for k in q.vertices:
            if not is_good_mutation(q, k):
                continue
            nq = fz_mutate(q, k)
            nkey = canonical_form(nq)
            if nkey in parent:
                continue
            parent[nkey] = (key, k)
            if nkey == target:
                seq = []
                cur = nkey
                while parent[cur] is not None:
                    cur, step = parent[cur]
                    seq.append(step)
                return seq[::-1]
            if len(parent) > state_cap:
                raise ResourceCapError(f"more than {state_cap} states visited")
            queue.append((nq, nkey))
    return None


def count_hexagons(p: GentlePresentation) -> int:
    """Oriented chordless 6-cycles in the quiver of ``p``."""
    g = nx.DiGraph()
    g.add_nodes_from(p.vertices)
    g.add_edges_from((a.source, a.target) for a in p.arrows)
    und = _undirected(p.quiver)
    total = 0
    for cyc in nx.simple_cycles(g, length_bound=6):
        if len(cyc) != 6:
            continue
        if und.subgraph(cyc).number_of_edges() == 6:
            total += 1
    return total


def random_cluster_quiver(t: int, s: int, seed) -> ClusterQuiver:
    """Random tree of t oriented triangles and s lines glued at vertices."""
    if t < 0 or s < 0:
        raise DomainError("t and s must be nonnegative")
    rng = random.Random(seed)
    blocks = ["T"] * t + ["L"] * s
    rng.shuffle(blocks)
    vertices = ["1"]
    used = Counter()
    arrows: list[Arrow] = []

    def fresh() -> str:
        vertices.append(str(len(vertices) + 1))
        return vertices[-1]

    def link(i, j):
        arrows.append(Arrow(arrow_name(i, j), i, j))

    for kind in blocks:
        v = rng.choice([x for x in vertices if used[x] < 2])
        if kind == "T":
            u, w = fresh(), fresh()
            cyc = [v, u, w] if rng.random() < 0.5 else [v, w, u]
            for i, j in zip(cyc, cyc[1:] + cyc[:1]):
                link(i, j)
            for x in (v, u, w):
                used[x] += 1
        else:
            u = fresh()
            if rng.random() < 0.5:
                link(v, u)
            else:
                link(u, v)
            used[v] += 1
            used[u] += 1
    cq = as_cluster_quiver(Quiver(tuple(vertices), tuple(arrows)))
    assert (cq.s, cq.t) == (s, t)
    return cq


def quiver_from_edges(vertices, edges) -> Quiver:
    return Quiver(tuple(vertices), tuple(Arrow(arrow_name(i, j), i, j) for i, j in edges))


@dataclass(frozen=True)
class NeighborhoodRow:
    """One drawn row of the good-mutation table, with the expected answers."""

    name: str
    left: Quiver
    right: Quiver
    left_defined: tuple[str, ...]
    right_defined: tuple[str, ...]
    good: bool
    vertex: str = "k"


def table_rows() -> list[NeighborhoodRow]:
    q = quiver_from_edges
    return [
        NeighborhoodRow("1", q("ak", [("a", "k")]), q("ak", [("k", "a")]), ("-",), ("+",), True),
        NeighborhoodRow("2a", q("abk", [("a", "k"), ("b", "k")]),
                        q("abk", [("k", "a"), ("k", "b")]), ("-",), ("+",), True),
        NeighborhoodRow("2b", q("akb", [("a", "k"), ("k", "b")]),
                        q("akb", [("a", "k"), ("k", "b"), ("b", "a")]), ("-", "+"), (), False),
        NeighborhoodRow("3", q("ABCk", [("A", "B"), ("B", "k"), ("k", "A"), ("C", "k")]),
                        q("ABCk", [("A", "k"), ("k", "C"), ("C", "A"), ("k", "B")]),
                        ("-",), ("+",), True),
        NeighborhoodRow("4", q("ABCDk", [("A", "B"), ("B", "k"), ("k", "A"),
                                         ("k", "D"), ("D", "C"), ("C", "k")]),
                        q("ABCDk", [("A", "k"), ("k", "C"), ("C", "A"),
                                    ("k", "B"), ("B", "D"), ("D", "k")]),
                        ("-", "+"), ("-", "+"), True),
    ]
