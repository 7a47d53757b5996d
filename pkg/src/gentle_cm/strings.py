"""String and band combinatorics, dimension vectors and the maps iota, pi-, pi+.

A word c_1 ... c_n is read like a path: c_n is walked first, so adjacent letters
satisfy s(c_i) = t(c_{i+1}).  Because every relation has length two, a word is a
string exactly when each adjacent pair is admissible, which makes strings the
paths of a small "letter graph" and bands its cycles.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator

from .bound_quiver import GentlePresentation, _find_cycle
from .cm_construct import cyc_vertex, cyclic_arrows, minus_arrow, plus_arrow
from .errors import DomainError, NotRepresentationFiniteError, QuiverFormatError, ResourceCapError

DEFAULT_STRING_CAP = 100_000


@dataclass(frozen=True, order=True)
class Letter:
    arrow: str
    inverse: bool = False

    def inv(self) -> "Letter":
        return Letter(self.arrow, not self.inverse)

    def __str__(self):
        return f"{self.arrow}^-1" if self.inverse else self.arrow


@dataclass(frozen=True, order=True)
class StringWord:
    """Either a nonempty letter sequence or a trivial string (vertex, sign)."""

    letters: tuple[Letter, ...] = ()
    vertex: str | None = field(default=None)
    sign: int = 1

    def __post_init__(self):
        if self.letters and self.vertex is not None:
            raise DomainError("a nontrivial string carries no vertex")
        if not self.letters and self.vertex is None:
            raise DomainError("a trivial string needs a vertex")
        if self.sign not in (1, -1):
            raise DomainError("sign must be +1 or -1")

    @classmethod
    def trivial(cls, vertex: str, sign: int = 1) -> "StringWord":
        return cls((), vertex, sign)

    @classmethod
    def of(cls, *letters: Letter) -> "StringWord":
        return cls(tuple(letters))

    @property
    def is_trivial(self) -> bool:
        return not self.letters

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return format_string(self)


Band = StringWord


def parse_string(text: str) -> StringWord:
    """Parse ``a,b^-1`` or ``e(v)``; whitespace around letters is ignored."""
    text = text.strip()
    if text.startswith("e(") and text.endswith(")"):
        return StringWord.trivial(text[2:-1].strip())
    if not text:
        raise QuiverFormatError("empty string literal")
    letters = []
    for tok in text.split(","):
        tok = tok.strip()
        inverse = tok.endswith("^-1")
        name = tok[:-3] if inverse else tok
        if not name or any(ch.isspace() for ch in name):
            raise QuiverFormatError(f"bad letter {tok!r} in string literal {text!r}")
        letters.append(Letter(name, inverse))
    return StringWord(tuple(letters))


def format_string(w: StringWord) -> str:
    if w.is_trivial:
        return f"e({w.vertex})" if w.sign == 1 else f"e({w.vertex})^-1"
    return ",".join(str(c) for c in w.letters)


def letter_source(p: GentlePresentation, c: Letter) -> str:
    a = p.quiver.arrow[c.arrow]
    return a.target if c.inverse else a.source


def letter_target(p: GentlePresentation, c: Letter) -> str:
    a = p.quiver.arrow[c.arrow]
    return a.source if c.inverse else a.target


def admissible_pair(p: GentlePresentation, left: Letter, right: Letter) -> bool:
    """Whether ``left right`` (right walked first) is a string of length two."""
    if right == left.inv():
        return False
    if letter_source(p, left) != letter_target(p, right):
        return False
    if not left.inverse and not right.inverse:
        return not p.is_relation(left.arrow, right.arrow)
    if left.inverse and right.inverse:
        return not p.is_relation(right.arrow, left.arrow)
    return True


def _check_letters(p: GentlePresentation, w: StringWord) -> None:
    if w.is_trivial:
        if w.vertex not in p.quiver.index:
            raise DomainError(f"unknown vertex {w.vertex!r}")
        return
    for c in w.letters:
        if c.arrow not in p.quiver.arrow:
            raise DomainError(f"unknown arrow {c.arrow!r}")


def is_string(p: GentlePresentation, w: StringWord) -> bool:
    _check_letters(p, w)
    return all(admissible_pair(p, x, y) for x, y in zip(w.letters, w.letters[1:]))


def inverse(w: StringWord) -> StringWord:
    if w.is_trivial:
        return StringWord.trivial(w.vertex, -w.sign)
    return StringWord(tuple(c.inv() for c in reversed(w.letters)))


def canonical_string(w: StringWord) -> StringWord:
    if w.is_trivial:
        return StringWord.trivial(w.vertex)
    return min(w, inverse(w))


def string_ends(p: GentlePresentation, w: StringWord) -> tuple[str, str]:
    """(t(w), s(w)), the left and right end vertices."""
    if w.is_trivial:
        return w.vertex, w.vertex
    return letter_target(p, w.letters[0]), letter_source(p, w.letters[-1])


def visited_vertices(p: GentlePresentation, w: StringWord) -> list[str]:
    """u(0), ..., u(n) with u(i) = t(c_{i+1}) and u(n) = s(c_n)."""
    if w.is_trivial:
        return [w.vertex]
    return [letter_target(p, c) for c in w.letters] + [letter_source(p, w.letters[-1])]


def dimension_vector(p: GentlePresentation, w: StringWord) -> dict[str, int]:
    counts = Counter(visited_vertices(p, w))
    return {v: counts[v] for v in p.vertices if counts[v]}


def all_letters(p: GentlePresentation) -> list[Letter]:
    return sorted(Letter(a.name, inv) for a in p.arrows for inv in (False, True))


def letter_graph(p: GentlePresentation) -> dict[Letter, list[Letter]]:
    """Edge x -> y when the word ``x y`` is a string."""
    letters = all_letters(p)
    return {x: [y for y in letters if admissible_pair(p, x, y)] for x in letters}


def _canonical_band(word: tuple[Letter, ...]) -> StringWord:
    inv = tuple(c.inv() for c in reversed(word))
    rotations = [w[i:] + w[:i] for w in (word, inv) for i in range(len(w))]
    return StringWord(min(rotations))


def find_band(p: GentlePresentation) -> Band | None:
    """A primitive band if one exists, in canonical rotation, else None.

    A simple cycle in the letter graph has distinct letters, so it is never a
    proper power, and all of its rotations and powers are strings.
    """
    cycle = _find_cycle(letter_graph(p))
    if cycle is None:
        return None
    # the reported cycle is in edge order x -> y, i.e. left to right in the word
    return _canonical_band(tuple(cycle[:-1]))


def is_band(p: GentlePresentation, w: StringWord) -> bool:
    if w.is_trivial or not is_string(p, w):
        return False
    n = len(w)
    if not admissible_pair(p, w.letters[-1], w.letters[0]):
        return False
    return not any(n % d == 0 and w.letters == w.letters[:d] * (n // d) for d in range(1, n))


def is_representation_finite(p: GentlePresentation) -> bool:
    return find_band(p) is None


def _letter_paths(graph: dict[Letter, list[Letter]], start: Letter) -> Iterator[tuple[Letter, ...]]:
    stack = [(start,)]
    while stack:
        word = stack.pop()
        yield word
        for nxt in reversed(graph[word[-1]]):
            stack.append(word + (nxt,))


def enumerate_strings(p: GentlePresentation, cap: int = DEFAULT_STRING_CAP) -> list[StringWord]:
    """All strings up to inversion, one trivial string per vertex.

    Order: trivial strings in vertex order, then by length and letters.
    """
    band = find_band(p)
    if band is not None:
        raise NotRepresentationFiniteError(f"band {band} exists; the algebra is representation-infinite")
    graph = letter_graph(p)
    out = [StringWord.trivial(v) for v in p.vertices]
    found: list[StringWord] = []
    for start in graph:
        for word in _letter_paths(graph, start):
            w = StringWord(word)
            if w == canonical_string(w):
                found.append(w)
                if len(out) + len(found) > cap:
                    raise ResourceCapError(f"more than {cap} strings")
    found.sort(key=lambda w: (len(w), w.letters))
    return out + found


def dim_vector_uniqueness(p: GentlePresentation, cap: int = DEFAULT_STRING_CAP) -> bool:
    """Whether distinct indecomposables have distinct dimension vectors."""
    seen = set()
    for w in enumerate_strings(p, cap):
        key = tuple(sorted(dimension_vector(p, w).items()))
        if key in seen:
            return False
        seen.add(key)
    return True


def has_two_cycle(p: GentlePresentation) -> bool:
    edges = {(a.source, a.target) for a in p.arrows if a.source != a.target}
    return any((t, s) in edges for s, t in edges)


def has_loop(p: GentlePresentation) -> bool:
    return any(a.source == a.target for a in p.arrows)


# maps between a gentle algebra and its CM-Auslander algebra


def _require_string(p: GentlePresentation, w: StringWord, what: str) -> None:
    if not is_string(p, w):
        raise DomainError(f"{format_string(w)} is not a string of {what}")


def iota(p_lam: GentlePresentation, p_gam: GentlePresentation, w: StringWord) -> StringWord:
    _require_string(p_lam, w, "the source algebra")
    if w.is_trivial:
        return w
    cyc = cyclic_arrows(p_lam)
    out: list[Letter] = []
    for c in w.letters:
        if c.arrow not in cyc:
            out.append(c)
        elif c.inverse:
            out += [Letter(plus_arrow(c.arrow), True), Letter(minus_arrow(c.arrow), True)]
        else:
            out += [Letter(minus_arrow(c.arrow)), Letter(plus_arrow(c.arrow))]
    v = StringWord(tuple(out))
    _require_string(p_gam, v, "the CM-Auslander algebra")
    return v


def _cyclic_maps(p_lam: GentlePresentation) -> tuple[dict[str, str], dict[str, str], dict[str, str]]:
    """New vertex, plus arrow and minus arrow, each keyed to its cyclic arrow."""
    cyc = cyclic_arrows(p_lam)
    plus = {plus_arrow(a): a for a in cyc}
    minus = {minus_arrow(a): a for a in cyc}
    return {cyc_vertex(a): a for a in cyc}, plus, minus


def _contract(letters: list[Letter], plus: dict[str, str], minus: dict[str, str]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    i = 0
    while i < len(letters):
        c = letters[i]
        if c.arrow not in plus and c.arrow not in minus:
            out.append(c)
            i += 1
            continue
        nxt = letters[i + 1] if i + 1 < len(letters) else None
        if not c.inverse and c.arrow in minus and nxt == Letter(plus_arrow(minus[c.arrow])):
            out.append(Letter(minus[c.arrow]))
        elif c.inverse and c.arrow in plus and nxt == Letter(minus_arrow(plus[c.arrow]), True):
            out.append(Letter(plus[c.arrow], True))
        else:
            raise DomainError(f"unpaired letter {c} while contracting")
        i += 2
    return tuple(out)


def _finish(p_lam: GentlePresentation, letters: list[Letter], fallback_vertex: str,
            plus: dict[str, str], minus: dict[str, str]) -> StringWord:
    if not letters:
        return StringWord.trivial(fallback_vertex)
    w = StringWord(_contract(letters, plus, minus))
    _require_string(p_lam, w, "the source algebra")
    return w


def pi_minus(p_lam: GentlePresentation, p_gam: GentlePresentation, v: StringWord) -> StringWord | None:
    """Contract the longest substring whose ends lie in the original vertex set.

    The trivial string at a new vertex has no such substring; None stands for
    the zero module there.
    """
    _require_string(p_gam, v, "the CM-Auslander algebra")
    new, plus, minus = _cyclic_maps(p_lam)
    if v.is_trivial:
        return None if v.vertex in new else StringWord.trivial(v.vertex, v.sign)
    letters = list(v.letters)
    path = visited_vertices(p_gam, v)
    lo, hi = 0, len(letters)
    if path[0] in new:
        lo = 1
    if path[-1] in new:
        hi -= 1
    kept = letters[lo:hi]
    assert len(letters) - len(kept) <= 2
    return _finish(p_lam, kept, path[lo], plus, minus)


def pi_plus(p_lam: GentlePresentation, p_gam: GentlePresentation, v: StringWord) -> StringWord:
    """Contract the shortest superstring whose ends lie in the original vertex set."""
    _require_string(p_gam, v, "the CM-Auslander algebra")
    new, plus, minus = _cyclic_maps(p_lam)
    if v.is_trivial:
        if v.vertex not in new:
            return StringWord.trivial(v.vertex, v.sign)
        return StringWord((Letter(new[v.vertex], v.sign == -1),))
    letters = list(v.letters)
    first, last = letters[0], letters[-1]
    ext: list[Letter] = []
    if letter_target(p_gam, first) in new:
        if first.inverse:
            ext.append(Letter(plus_arrow(minus[first.arrow]), True))
        else:
            ext.append(Letter(minus_arrow(plus[first.arrow])))
    ext += letters
    if letter_source(p_gam, last) in new:
        if last.inverse:
            ext.append(Letter(minus_arrow(plus[last.arrow]), True))
        else:
            ext.append(Letter(plus_arrow(minus[last.arrow])))
    assert len(ext) - len(letters) <= 2
    sup = StringWord(tuple(ext))
    _require_string(p_gam, sup, "the CM-Auslander algebra")
    return _finish(p_lam, ext, "", plus, minus)
