"""Critical cycles, Gorenstein-projective labels and the CM-Auslander presentation."""

from __future__ import annotations

from dataclasses import dataclass

from .bound_quiver import Arrow, GentlePresentation, Quiver
from .errors import DomainError


def cyc_vertex(arrow: str) -> str:
    return f"[{arrow}]"


def plus_arrow(arrow: str) -> str:
    return f"{arrow}+"


def minus_arrow(arrow: str) -> str:
    return f"{arrow}-"


@dataclass(frozen=True)
class CriticalCycle:
    """Cyclic path a_1 ... a_n (composition order) with every a_i a_{i+1} a relation.

    Stored as the lexicographically least rotation.
    """

    arrows: tuple[str, ...]

    def __len__(self):
        return len(self.arrows)

    @classmethod
    def from_composition_order(cls, arrows) -> "CriticalCycle":
        arrows = tuple(arrows)
        rotations = [arrows[i:] + arrows[:i] for i in range(len(arrows))]
        return cls(min(rotations))

    def __str__(self):
        return "(" + " ".join(self.arrows) + ")"


def _relation_successor(p: GentlePresentation) -> dict[str, str]:
    """alpha -> the unique beta with beta*alpha in I."""
    succ: dict[str, str] = {}
    for beta, alpha in p.relations:
        if alpha in succ:
            raise DomainError(f"arrow {alpha} has two zero continuations; input is not gentle")
        succ[alpha] = beta
    return succ


def critical_cycles(p: GentlePresentation) -> list[CriticalCycle]:
    succ = _relation_successor(p)
    seen: set[str] = set()
    cycles = []
    for a in p.arrows:
        start = a.name
        if start in seen:
            continue
        walk, pos = [], start
        index: dict[str, int] = {}
        while pos is not None and pos not in index and pos not in seen:
            index[pos] = len(walk)
            walk.append(pos)
            pos = succ.get(pos)
        seen.update(walk)
        if pos is not None and pos in index:
            loop = walk[index[pos]:]
            # walk is in traversal order; the cycle is written in composition order
            cycles.append(CriticalCycle.from_composition_order(reversed(loop)))
    cycles.sort(key=lambda c: c.arrows)
    owner: dict[str, CriticalCycle] = {}
    for c in cycles:
        for x in c.arrows:
            if x in owner:
                raise DomainError(f"arrow {x} lies on two critical cycles")
            owner[x] = c
    return cycles


def cyclic_arrows(p: GentlePresentation) -> frozenset[str]:
    return frozenset(x for c in critical_cycles(p) for x in c.arrows)


@dataclass(frozen=True)
class GorensteinProjectiveList:
    projectives: tuple[str, ...]
    radicals: tuple[str, ...]

    @property
    def labels(self) -> tuple[str, ...]:
        return self.projectives + self.radicals

    def __len__(self):
        return len(self.projectives) + len(self.radicals)


def gorenstein_projectives(p: GentlePresentation) -> GorensteinProjectiveList:
    cyc = cyclic_arrows(p)
    return GorensteinProjectiveList(
        tuple(f"P({v})" for v in p.vertices),
        tuple(f"R({a.name})" for a in p.arrows if a.name in cyc),
    )


def singularity_profile(p: GentlePresentation) -> list[int]:
    """Sorted multiset of critical-cycle lengths; empty means no singular part."""
    return sorted(len(c) for c in critical_cycles(p))


def cm_auslander(p: GentlePresentation) -> GentlePresentation:
    cyc = cyclic_arrows(p)
    q = p.quiver
    new_vertices = [cyc_vertex(a.name) for a in q.arrows if a.name in cyc]
    clash = set(new_vertices) & set(q.vertices)
    if clash:
        raise DomainError(f"vertex ids {sorted(clash)} collide with the naming scheme")
    arrows: list[Arrow] = []
    for a in q.arrows:
        if a.name in cyc:
            arrows.append(Arrow(plus_arrow(a.name), a.source, cyc_vertex(a.name)))
            arrows.append(Arrow(minus_arrow(a.name), cyc_vertex(a.name), a.target))
        else:
            arrows.append(a)
    names = [x.name for x in arrows]
    if len(set(names)) != len(names):
        raise DomainError("arrow ids collide with the +/- naming scheme")

    rels = set()
    for beta, alpha in p.relations:
        kinds = (beta in cyc, alpha in cyc)
        if kinds == (True, True):
            rels.add((plus_arrow(beta), minus_arrow(alpha)))
        elif kinds == (False, False):
            rels.add((beta, alpha))
        else:
            raise DomainError(
                f"relation {beta} {alpha} mixes cyclic and non-cyclic arrows; input is not gentle"
            )
    return GentlePresentation(Quiver(tuple(q.vertices) + tuple(new_vertices), tuple(arrows)),
                              frozenset(rels))
