"""Quivers with length-2 monomial relations.

Paths are written in composition order: ``Path(("b", "a"), ...)`` is the
path that traverses ``a`` first and then ``b``.  A relation ``("b", "a")``
likewise means that the composite ``b`` after ``a`` is zero.
"""

from __future__ import annotations

import re
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from graphlib import CycleError, TopologicalSorter
from typing import Iterable, Iterator

from .errors import DomainError, InfiniteDimensionalError, QuiverFormatError


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        if len(set(self.vertices)) != len(self.vertices):
            dup = [v for v, c in Counter(self.vertices).items() if c > 1]
            raise DomainError(f"duplicate vertex ids: {dup}")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            dup = [n for n, c in Counter(names).items() if c > 1]
            raise DomainError(f"duplicate arrow ids: {dup}")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise DomainError(f"arrow {a.name} has an undeclared endpoint")

    @cached_property
    def arrow(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def outgoing(self) -> dict[str, tuple[Arrow, ...]]:
        out = defaultdict(list)
        for a in self.arrows:
            out[a.source].append(a)
        return {v: tuple(out[v]) for v in self.vertices}

    @cached_property
    def incoming(self) -> dict[str, tuple[Arrow, ...]]:
        inc = defaultdict(list)
        for a in self.arrows:
            inc[a.target].append(a)
        return {v: tuple(inc[v]) for v in self.vertices}

    def edges(self) -> list[tuple[str, str]]:
        return [(a.source, a.target) for a in self.arrows]


@dataclass(frozen=True, order=True)
class Path:
    """A path; ``arrows`` is in composition order (last entry traversed first)."""

    source: str
    target: str
    arrows: tuple[str, ...] = ()

    @classmethod
    def trivial(cls, vertex: str) -> "Path":
        return cls(vertex, vertex, ())

    def __len__(self) -> int:
        return len(self.arrows)

    def __str__(self) -> str:
        return " ".join(self.arrows) if self.arrows else f"e({self.source})"


@dataclass(frozen=True)
class GentlePresentation:
    """A bound quiver ``(Q, I)`` with ``I`` a set of length-2 zero relations.

    Construction only checks that relations are composable; the gentle axioms
    are reported by :func:`validate_gentle`.
    """

    quiver: Quiver
    relations: frozenset[tuple[str, str]] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "relations", frozenset(tuple(r) for r in self.relations))
        for rel in self.relations:
            if len(rel) != 2:
                raise DomainError(f"relation {rel} does not have length 2")
            beta, alpha = rel
            for name in rel:
                if name not in self.quiver.arrow:
                    raise DomainError(f"relation {rel} uses unknown arrow {name}")
            if self.quiver.arrow[alpha].target != self.quiver.arrow[beta].source:
                raise DomainError(f"relation {beta} {alpha} is not composable")

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.quiver.vertices

    @property
    def arrows(self) -> tuple[Arrow, ...]:
        return self.quiver.arrows

    def is_relation(self, beta: str, alpha: str) -> bool:
        return (beta, alpha) in self.relations

    def sorted_relations(self) -> list[tuple[str, str]]:
        order = {a.name: i for i, a in enumerate(self.quiver.arrows)}
        return sorted(self.relations, key=lambda r: (order[r[1]], order[r[0]]))

    def path(self, *arrows: str) -> Path:
        """Build a path from arrow ids in composition order, checking composability."""
        if not arrows:
            raise DomainError("use Path.trivial for trivial paths")
        q = self.quiver
        for name in arrows:
            if name not in q.arrow:
                raise DomainError(f"unknown arrow {name}")
        for left, right in zip(arrows, arrows[1:]):
            if q.arrow[right].target != q.arrow[left].source:
                raise DomainError(f"arrows {left} and {right} are not composable")
        return Path(q.arrow[arrows[-1]].source, q.arrow[arrows[0]].target, tuple(arrows))

    def restrict(self, vertices: Iterable[str]) -> "GentlePresentation":
        """Full bound subquiver on ``vertices`` (kept in ambient order)."""
        keep = set(vertices)
        unknown = keep - set(self.vertices)
        if unknown:
            raise DomainError(f"unknown vertices {sorted(unknown)}")
        q = Quiver(
            tuple(v for v in self.vertices if v in keep),
            tuple(a for a in self.arrows if a.source in keep and a.target in keep),
        )
        names = set(q.arrow)
        return GentlePresentation(
            q, frozenset(r for r in self.relations if r[0] in names and r[1] in names)
        )


# ---------------------------------------------------------------------------
# text format

_ARROW_RE = re.compile(r"^arrow\s+([^\s:]+)\s*:\s*(\S+)\s*->\s*(\S+)$")


def parse_presentation(text: str) -> GentlePresentation:
    vertices: list[str] = []
    seen_vertices: dict[str, int] = {}
    arrows: list[Arrow] = []
    arrow_lines: dict[str, int] = {}
    rels: list[tuple[tuple[str, str], int]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        keyword = line.split(None, 1)[0]
        if keyword == "vertex":
            ids = line.split()[1:]
            if not ids:
                raise QuiverFormatError("vertex statement without ids", lineno)
            for v in ids:
                if v in seen_vertices:
                    raise QuiverFormatError(f"duplicate vertex id {v!r}", lineno)
                seen_vertices[v] = lineno
                vertices.append(v)
        elif keyword == "arrow":
            m = _ARROW_RE.match(line)
            if not m:
                raise QuiverFormatError(f"malformed arrow statement {line!r}", lineno)
            name, src, tgt = m.groups()
            if name in arrow_lines:
                raise QuiverFormatError(f"duplicate arrow id {name!r}", lineno)
            for v in (src, tgt):
                if v not in seen_vertices:
                    raise QuiverFormatError(f"unknown vertex {v!r}", lineno)
            arrow_lines[name] = lineno
            arrows.append(Arrow(name, src, tgt))
        elif keyword == "rel":
            ids = line.split()[1:]
            if len(ids) != 2:
                raise QuiverFormatError(
                    f"only length-2 monomial relations are supported, got {len(ids)} arrows",
                    lineno,
                )
            rels.append((tuple(ids), lineno))
        else:
            raise QuiverFormatError(f"unknown statement {keyword!r}", lineno)

    by_name = {a.name: a for a in arrows}
    for (beta, alpha), lineno in rels:
        for name in (beta, alpha):
            if name not in by_name:
                raise QuiverFormatError(f"unknown arrow {name!r} in relation", lineno)
        if by_name[alpha].target != by_name[beta].source:
            raise QuiverFormatError(
                f"relation {beta} {alpha} is not composable: t({alpha}) != s({beta})", lineno
            )
    return GentlePresentation(Quiver(tuple(vertices), tuple(arrows)), frozenset(r for r, _ in rels))


def serialize_presentation(p: GentlePresentation) -> str:
    lines = []
    if p.vertices:
        lines.append("vertex " + " ".join(p.vertices))
    for a in p.arrows:
        lines.append(f"arrow {a.name}: {a.source} -> {a.target}")
    for beta, alpha in p.sorted_relations():
        lines.append(f"rel {beta} {alpha}")
    return "\n".join(lines) + "\n"


def load_presentation(path) -> GentlePresentation:
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read())


def presentation_to_json(p: GentlePresentation) -> dict:
    return {
        "vertices": list(p.vertices),
        "arrows": [{"id": a.name, "source": a.source, "target": a.target} for a in p.arrows],
        "relations": [list(r) for r in p.sorted_relations()],
    }


def presentation_from_json(obj: dict) -> GentlePresentation:
    q = Quiver(
        tuple(obj["vertices"]),
        tuple(Arrow(a["id"], a["source"], a["target"]) for a in obj["arrows"]),
    )
    return GentlePresentation(q, frozenset(tuple(r) for r in obj["relations"]))


# ---------------------------------------------------------------------------
# axioms


@dataclass(frozen=True)
class Violation:
    clause: str
    witness: str

    def __str__(self):
        return f"{self.clause}: {self.witness}"


@dataclass
class ValidationReport:
    violations: list[Violation]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "ok"
        return "\n".join(str(v) for v in self.violations)


def _continuation_graph(p: GentlePresentation) -> dict[str, list[str]]:
    """arrow -> arrows that may follow it without hitting a relation."""
    q = p.quiver
    return {
        a.name: [b.name for b in q.outgoing[a.target] if (b.name, a.name) not in p.relations]
        for a in q.arrows
    }


def _find_cycle(graph: dict[str, list[str]]) -> list[str] | None:
    # The cycle graphlib reports is closed (first == last) and in edge direction.
    ts = TopologicalSorter({node: set() for node in graph})
    for node, succs in graph.items():
        for s in succs:
            ts.add(s, node)
    try:
        ts.prepare()
    except CycleError as exc:
        return list(exc.args[1])
    return None


def relation_free_cycle(p: GentlePresentation) -> list[str] | None:
    """An oriented cycle avoiding all relations (traversal order), or ``None``."""
    cyc = _find_cycle(_continuation_graph(p))
    if cyc is None:
        return None
    return cyc[:-1]


def validate_gentle(p: GentlePresentation) -> ValidationReport:
    q = p.quiver
    out: list[Violation] = []
    for v in q.vertices:
        if len(q.outgoing[v]) > 2:
            out.append(Violation("too many outgoing", f"vertex {v} has {len(q.outgoing[v])}"))
        if len(q.incoming[v]) > 2:
            out.append(Violation("too many incoming", f"vertex {v} has {len(q.incoming[v])}"))
    for a in q.arrows:
        after = q.outgoing[a.target]
        before = q.incoming[a.source]
        free_after = [b.name for b in after if (b.name, a.name) not in p.relations]
        rel_after = [b.name for b in after if (b.name, a.name) in p.relations]
        free_before = [g.name for g in before if (a.name, g.name) not in p.relations]
        rel_before = [g.name for g in before if (a.name, g.name) in p.relations]
        if len(free_after) > 1:
            out.append(Violation("non-zero continuation not unique",
                                 f"{a.name} followed by {free_after}"))
        if len(free_before) > 1:
            out.append(Violation("non-zero predecessor not unique",
                                 f"{a.name} preceded by {free_before}"))
        if len(rel_after) > 1:
            out.append(Violation("zero continuation not unique",
                                 f"{a.name} followed by {rel_after} in relations"))
        if len(rel_before) > 1:
            out.append(Violation("zero predecessor not unique",
                                 f"{a.name} preceded by {rel_before} in relations"))
    cyc = relation_free_cycle(p)
    if cyc is not None:
        out.append(Violation("infinite dimensional", "relation-free cycle " + " ".join(cyc)))
    return ValidationReport(out)


def is_gentle(p: GentlePresentation) -> bool:
    return validate_gentle(p).ok


# ---------------------------------------------------------------------------
# paths


def compose(p: GentlePresentation, left: Path, right: Path) -> Path | None:
    """``left`` after ``right``; ``None`` stands for the zero path."""
    if right.target != left.source:
        raise DomainError(f"cannot compose: t(right)={right.target} != s(left)={left.source}")
    if not left.arrows:
        return right
    if not right.arrows:
        return left
    if (left.arrows[-1], right.arrows[0]) in p.relations:
        return None
    return Path(right.source, left.target, left.arrows + right.arrows)


def _iter_paths_from(p: GentlePresentation, start: str) -> Iterator[Path]:
    q = p.quiver
    stack = [Path.trivial(start)]
    while stack:
        path = stack.pop()
        yield path
        for b in q.outgoing[path.target]:
            if path.arrows and (b.name, path.arrows[0]) in p.relations:
                continue
            stack.append(Path(start, b.target, (b.name,) + path.arrows))


def enumerate_nonzero_paths(p: GentlePresentation) -> list[Path]:
    cyc = relation_free_cycle(p)
    if cyc is not None:
        raise InfiniteDimensionalError("relation-free cycle " + " ".join(cyc))
    out = []
    for v in p.vertices:
        paths = list(_iter_paths_from(p, v))
        paths.sort(key=lambda x: (len(x), x.arrows))
        out.extend(paths)
    return out


def path_counts(p: GentlePresentation) -> Counter:
    """(source, target) -> number of nonzero paths."""
    return Counter((x.source, x.target) for x in enumerate_nonzero_paths(p))


def is_schurian(p: GentlePresentation) -> bool:
    return all(c <= 1 for c in path_counts(p).values())
