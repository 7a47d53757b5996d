"""String modules over prime fields, submodule enumeration and Hall numbers.

Linear algebra here is modulo a small prime on numpy int64 arrays; entries stay
below q**2 between reductions, so there is no overflow risk for q <= 13.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .bound_quiver import GentlePresentation
from .errors import DomainError, ResourceCapError, SingularMatrixError
from .exact_linalg import Poly, inverse, lagrange_fit
from .strings import (
    StringWord,
    canonical_string,
    dimension_vector,
    enumerate_strings,
    format_string,
    is_string,
    parse_string,
    visited_vertices,
)

DEFAULT_DIM_CAP = 8
MAX_FIELD = 13
FIT_PRIMES = (2, 3, 5, 7)
CHECK_PRIMES = (11, 13)


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


@dataclass(frozen=True)
class PrimeField:
    q: int

    def __post_init__(self):
        if not _is_prime(self.q):
            raise DomainError(f"{self.q} is not prime; only prime fields are supported")

    def inv(self, x: int) -> int:
        return pow(int(x), -1, self.q)


def _field(q) -> PrimeField:
    return q if isinstance(q, PrimeField) else PrimeField(int(q))


# ---------------------------------------------------------------------------
# linear algebra mod q


def rref(m: np.ndarray, q: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod q with zero rows dropped, and the pivot columns."""
    a = np.array(m, dtype=np.int64) % q
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if not len(nz):
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, q)) % q
        others = np.nonzero(a[:, c])[0]
        for i in others:
            if i != r:
                a[i] = (a[i] - a[i, c] * a[r]) % q
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank_mod(m: np.ndarray, q: int) -> int:
    if m.size == 0:
        return 0
    return len(rref(m, q)[1])


def _reduce(vec: np.ndarray, basis: np.ndarray, pivots: list[int], q: int) -> np.ndarray:
    """Remainder of ``vec`` modulo the row space of an RREF ``basis``."""
    out = vec % q
    for row, c in zip(basis, pivots):
        if out[c]:
            out = (out - out[c] * row) % q
    return out


# ---------------------------------------------------------------------------
# representations


@dataclass(eq=False)
class Representation:
    """Vector spaces F_q^dims[v] and arrow matrices of shape (dim t(a), dim s(a))."""

    presentation: GentlePresentation
    q: int
    dims: dict[str, int]
    maps: dict[str, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        p = self.presentation
        for v in p.vertices:
            self.dims.setdefault(v, 0)
        for a in p.arrows:
            shape = (self.dims[a.target], self.dims[a.source])
            m = self.maps.get(a.name)
            m = np.zeros(shape, dtype=np.int64) if m is None else np.asarray(m, dtype=np.int64) % self.q
            if m.shape != shape:
                raise DomainError(f"arrow {a.name}: matrix shape {m.shape}, expected {shape}")
            self.maps[a.name] = m
        for beta, alpha in p.relations:
            if ((self.maps[beta] @ self.maps[alpha]) % self.q).any():
                raise DomainError(f"relation {beta} {alpha} does not act as zero")

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def dim_vector(self) -> tuple[int, ...]:
        return tuple(self.dims[v] for v in self.presentation.vertices)

    def conjugate(self, change: dict[str, np.ndarray]) -> "Representation":
        """Isomorphic copy with vertex spaces rebased by invertible ``change[v]``."""
        q = self.q
        invs = {v: _inverse_mod(change[v], q) for v in self.presentation.vertices}
        maps = {a.name: (change[a.target] @ self.maps[a.name] @ invs[a.source]) % q
                for a in self.presentation.arrows}
        return Representation(self.presentation, q, dict(self.dims), maps)


def _inverse_mod(m: np.ndarray, q: int) -> np.ndarray:
    n = m.shape[0]
    if n == 0:
        return m.copy()
    red, piv = rref(np.hstack([m % q, np.eye(n, dtype=np.int64)]), q)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise SingularMatrixError("matrix is singular mod q")
    return red[:, n:]


def random_invertible(n: int, q: int, rng) -> np.ndarray:
    while True:
        m = np.array([rng.randrange(q) for _ in range(n * n)], dtype=np.int64).reshape(n, n)
        if rank_mod(m, q) == n:
            return m


def string_module(p: GentlePresentation, w: StringWord, q) -> Representation:
    f = _field(q)
    if not is_string(p, w):
        raise DomainError(f"{format_string(w)} is not a string")
    us = visited_vertices(p, w)
    pos = []
    seen: Counter = Counter()
    for v in us:
        pos.append(seen[v])
        seen[v] += 1
    dims = {v: seen[v] for v in p.vertices}
    maps = {a.name: np.zeros((dims[a.target], dims[a.source]), dtype=np.int64) for a in p.arrows}
    for i, c in enumerate(w.letters, start=1):
        if c.inverse:
            maps[c.arrow][pos[i], pos[i - 1]] += 1
        else:
            maps[c.arrow][pos[i - 1], pos[i]] += 1
    return Representation(p, f.q, dims, maps)


def direct_sum(reps: list[Representation], p: GentlePresentation | None = None, q=None) -> Representation:
    if not reps:
        if p is None or q is None:
            raise DomainError("empty direct sum needs a presentation and a field")
        return Representation(p, _field(q).q, {})
    p, q = reps[0].presentation, reps[0].q
    dims = {v: sum(r.dims[v] for r in reps) for v in p.vertices}
    maps = {}
    for a in p.arrows:
        m = np.zeros((dims[a.target], dims[a.source]), dtype=np.int64)
        i = j = 0
        for r in reps:
            block = r.maps[a.name]
            m[i:i + block.shape[0], j:j + block.shape[1]] = block
            i += block.shape[0]
            j += block.shape[1]
        maps[a.name] = m
    return Representation(p, q, dims, maps)


def hom_dimension(x: Representation, y: Representation) -> int:
    """dim of {f_v} with f_t(a) X_a = Y_a f_s(a) for all arrows a."""
    if x.presentation != y.presentation or x.q != y.q:
        raise DomainError("representations live over different algebras or fields")
    p, q = x.presentation, x.q
    offset, nvars = {}, 0
    for v in p.vertices:
        offset[v] = nvars
        nvars += y.dims[v] * x.dims[v]
    if nvars == 0:
        return 0
    blocks = []
    for a in p.arrows:
        s, t = a.source, a.target
        rows = y.dims[t] * x.dims[s]
        if rows == 0:
            continue
        eq = np.zeros((rows, nvars), dtype=np.int64)
        # row-major vec: vec(F X) = (I kron X^T) vec(F), vec(Y F) = (Y kron I) vec(F)
        left = np.kron(np.eye(y.dims[t], dtype=np.int64), x.maps[a.name].T)
        right = np.kron(y.maps[a.name], np.eye(x.dims[s], dtype=np.int64))
        eq[:, offset[t]:offset[t] + left.shape[1]] += left
        eq[:, offset[s]:offset[s] + right.shape[1]] -= right
        blocks.append(eq)
    if not blocks:
        return nvars
    return nvars - rank_mod(np.vstack(blocks) % q, q)


# ---------------------------------------------------------------------------
# isomorphism classes


@dataclass(frozen=True, order=True)
class IsoClass:
    """Multiset of canonical strings; the empty multiset is the zero module."""

    parts: tuple[tuple[StringWord, int], ...] = ()

    @classmethod
    def of(cls, strings) -> "IsoClass":
        counts = Counter()
        if isinstance(strings, dict):
            items = strings.items()
        else:
            items = ((w, 1) for w in strings)
        for w, m in items:
            if m < 0:
                raise DomainError("negative multiplicity")
            if m:
                counts[canonical_string(w)] += m
        return cls(tuple(sorted(counts.items())))

    @classmethod
    def parse(cls, text: str) -> "IsoClass":
        """``2*a;e(1)`` style; ``0`` is the zero module."""
        text = text.strip()
        if text in ("", "0"):
            return cls()
        counts: dict = Counter()
        for tok in text.split(";"):
            tok = tok.strip()
            mult = 1
            head, star, rest = tok.partition("*")
            if star and head.strip().isdigit():
                mult, tok = int(head), rest
            counts[parse_string(tok)] += mult
        return cls.of(dict(counts))

    def __str__(self):
        if not self.parts:
            return "0"
        return ";".join(format_string(w) if m == 1 else f"{m}*{format_string(w)}"
                        for w, m in self.parts)

    def strings(self) -> list[StringWord]:
        return [w for w, m in self.parts for _ in range(m)]

    def dim_vector(self, p: GentlePresentation) -> tuple[int, ...]:
        total = Counter()
        for w, m in self.parts:
            for v, d in dimension_vector(p, w).items():
                total[v] += m * d
        return tuple(total[v] for v in p.vertices)

    def __add__(self, other: "IsoClass") -> "IsoClass":
        return IsoClass.of(dict(Counter(dict(self.parts)) + Counter(dict(other.parts))))

    def realize(self, p: GentlePresentation, q) -> Representation:
        return direct_sum([string_module(p, w, q) for w in self.strings()], p, q)


@lru_cache(maxsize=None)
def _indecomposables(p: GentlePresentation, q: int):
    indecs = tuple(enumerate_strings(p))
    mods = tuple(string_module(p, w, q) for w in indecs)
    h = [[hom_dimension(mj, mi) for mi in mods] for mj in mods]
    try:
        h_inv = inverse(h)
    except SingularMatrixError as exc:
        raise SingularMatrixError("Hom matrix of the indecomposables is singular") from exc
    return indecs, mods, h_inv


def decompose(x: Representation, indecs: list[StringWord] | None = None) -> IsoClass:
    """Multiplicities from dim Hom(M_j, X) = sum_i m_i dim Hom(M_j, M_i)."""
    p, q = x.presentation, x.q
    all_indecs, mods, h_inv = _indecomposables(p, q)
    if indecs is not None and [canonical_string(w) for w in indecs] != list(all_indecs):
        raise DomainError("indecomposable list differs from the enumerated strings")
    rhs = [hom_dimension(m, x) for m in mods]
    mult = [sum((r * c for r, c in zip(row, rhs)), Fraction(0)) for row in h_inv]
    if any(m.denominator != 1 or m < 0 for m in mult):
        raise DomainError(f"inconsistent multiplicities {mult}")
    iso = IsoClass.of({w: int(m) for w, m in zip(all_indecs, mult)})
    if iso.dim_vector(p) != x.dim_vector():
        raise DomainError("decomposition does not account for the whole dimension vector")
    return iso


# ---------------------------------------------------------------------------
# submodules


@lru_cache(maxsize=None)
def _subspaces(d: int, q: int, k: int | None = None) -> tuple[tuple[np.ndarray, tuple[int, ...]], ...]:
    """All subspaces of F_q^d (of dimension k if given) as RREF bases with pivots."""
    out = []
    for kk in range(d + 1) if k is None else [k]:
        for pivots in itertools.combinations(range(d), kk):
            free = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, d) if c not in pivots]
            for values in itertools.product(range(q), repeat=len(free)):
                b = np.zeros((kk, d), dtype=np.int64)
                for r, pc in enumerate(pivots):
                    b[r, pc] = 1
                for (r, c), val in zip(free, values):
                    b[r, c] = val
                b.setflags(write=False)
                out.append((b, pivots))
    return tuple(out)


@dataclass(frozen=True, eq=False)
class Submodule:
    """One RREF basis (rows) per vertex, with its pivot columns."""

    bases: dict[str, np.ndarray]
    pivots: dict[str, tuple[int, ...]]

    def dim_vector(self, p: GentlePresentation) -> tuple[int, ...]:
        return tuple(self.bases[v].shape[0] for v in p.vertices)


def _maps_into(l: Representation, a, bs, ps, bt, pt) -> bool:
    images = (bs @ l.maps[a.name].T) % l.q
    return all(not _reduce(row, bt, list(pt), l.q).any() for row in images)


def enumerate_submodules(l: Representation, dims: tuple[int, ...] | None = None,
                         dim_cap: int = DEFAULT_DIM_CAP) -> list[Submodule]:
    """All arrow-stable vertex-graded subspaces of ``l``, optionally of one dimension vector."""
    p, q = l.presentation, l.q
    if l.total_dim > dim_cap:
        raise ResourceCapError(f"total dimension {l.total_dim} exceeds the cap {dim_cap}")
    if q > MAX_FIELD:
        raise ResourceCapError(f"field size {q} exceeds {MAX_FIELD}")
    vs = p.vertices
    choices = [_subspaces(l.dims[v], q, None if dims is None else dims[i]) for i, v in enumerate(vs)]
    pos = {v: i for i, v in enumerate(vs)}
    # arrows checked as soon as both ends are assigned
    due: list[list] = [[] for _ in vs]
    for a in p.arrows:
        due[max(pos[a.source], pos[a.target])].append(a)
    out: list[Submodule] = []
    chosen: list = [None] * len(vs)

    def extend(i: int):
        if i == len(vs):
            out.append(Submodule({v: chosen[j][0] for j, v in enumerate(vs)},
                                 {v: chosen[j][1] for j, v in enumerate(vs)}))
            return
        for opt in choices[i]:
            chosen[i] = opt
            if all(_maps_into(l, a, chosen[pos[a.source]][0], chosen[pos[a.source]][1],
                              chosen[pos[a.target]][0], chosen[pos[a.target]][1]) for a in due[i]):
                extend(i + 1)
        chosen[i] = None

    extend(0)
    return out


def _check_submodule(l: Representation, u: Submodule) -> None:
    for a in l.presentation.arrows:
        if not _maps_into(l, a, u.bases[a.source], u.pivots[a.source],
                          u.bases[a.target], u.pivots[a.target]):
            raise DomainError(f"subspace is not stable under arrow {a.name}")


def submodule_representation(l: Representation, u: Submodule) -> Representation:
    _check_submodule(l, u)
    p = l.presentation
    maps = {}
    for a in p.arrows:
        images = (u.bases[a.source] @ l.maps[a.name].T) % l.q
        coords = images[:, list(u.pivots[a.target])] if len(u.pivots[a.target]) else \
            np.zeros((images.shape[0], 0), dtype=np.int64)
        maps[a.name] = coords.T
    return Representation(p, l.q, {v: u.bases[v].shape[0] for v in p.vertices}, maps)


def quotient(l: Representation, u: Submodule) -> Representation:
    """L/U on the pivot-column complement of each echelon basis."""
    _check_submodule(l, u)
    p, q = l.presentation, l.q
    keep = {v: [c for c in range(l.dims[v]) if c not in u.pivots[v]] for v in p.vertices}
    maps = {}
    for a in p.arrows:
        s, t = a.source, a.target
        m = np.zeros((len(keep[t]), len(keep[s])), dtype=np.int64)
        for j, c in enumerate(keep[s]):
            img = _reduce(l.maps[a.name][:, c], u.bases[t], list(u.pivots[t]), q)
            m[:, j] = img[keep[t]]
        maps[a.name] = m
    return Representation(p, q, {v: len(keep[v]) for v in p.vertices}, maps)


def zero_submodule(l: Representation) -> Submodule:
    return Submodule({v: np.zeros((0, l.dims[v]), dtype=np.int64) for v in l.presentation.vertices},
                     {v: () for v in l.presentation.vertices})


def full_submodule(l: Representation) -> Submodule:
    return Submodule({v: np.eye(l.dims[v], dtype=np.int64) for v in l.presentation.vertices},
                     {v: tuple(range(l.dims[v])) for v in l.presentation.vertices})


# ---------------------------------------------------------------------------
# Hall numbers


def hall_number_of(l: Representation, m: IsoClass, n: IsoClass, dim_cap: int = DEFAULT_DIM_CAP) -> int:
    """Submodules U of the given realization with U = N and L/U = M."""
    p = l.presentation
    dn, dm = n.dim_vector(p), m.dim_vector(p)
    if tuple(a + b for a, b in zip(dm, dn)) != l.dim_vector():
        return 0
    count = 0
    for u in enumerate_submodules(l, dn, dim_cap):
        if decompose(submodule_representation(l, u)) == n and decompose(quotient(l, u)) == m:
            count += 1
    return count


@lru_cache(maxsize=None)
def _hall_cached(p: GentlePresentation, l: IsoClass, m: IsoClass, n: IsoClass, q: int, dim_cap: int) -> int:
    return hall_number_of(l.realize(p, q), m, n, dim_cap)


def hall_number(p: GentlePresentation, l: IsoClass, m: IsoClass, n: IsoClass, q,
                dim_cap: int = DEFAULT_DIM_CAP) -> int:
    return _hall_cached(p, l, m, n, _field(q).q, dim_cap)


def hall_polynomial(p: GentlePresentation, l: IsoClass, m: IsoClass, n: IsoClass,
                    fit_primes=FIT_PRIMES, check_primes=CHECK_PRIMES,
                    dim_cap: int = DEFAULT_DIM_CAP) -> tuple[Poly, dict[int, int]]:
    """Interpolated Hall polynomial and the counts it was built and checked from."""
    values = {q: hall_number(p, l, m, n, q, dim_cap) for q in (*fit_primes, *check_primes)}
    poly = lagrange_fit([(q, values[q]) for q in fit_primes])
    bad = [q for q in check_primes if poly(q) != values[q]]
    if bad:
        raise DomainError(f"insufficient sample degree: fit disagrees at {bad}; add fit primes")
    return poly, values


def modules_with_dim(p: GentlePresentation, target: tuple[int, ...]) -> list[IsoClass]:
    """Every multiset of indecomposables with the given total dimension vector."""
    indecs = enumerate_strings(p)
    vecs = [IsoClass.of([w]).dim_vector(p) for w in indecs]
    out = []

    def rec(i, remaining, acc):
        if not any(remaining):
            out.append(IsoClass.of(dict(acc)))
            return
        if i == len(indecs):
            return
        rec(i + 1, remaining, acc)
        v = vecs[i]
        k = 0
        rem = remaining
        while True:
            rem = tuple(a - b for a, b in zip(rem, v))
            if min(rem) < 0:
                break
            k += 1
            acc[indecs[i]] = k
            rec(i + 1, rem, acc)
        acc.pop(indecs[i], None)

    rec(0, tuple(target), {})
    return sorted(out)


def hall_product(p: GentlePresentation, m: IsoClass, n: IsoClass, q,
                 dim_cap: int = DEFAULT_DIM_CAP) -> dict[IsoClass, int]:
    """u_M * u_N as {L: F^L_MN}, zero coefficients dropped."""
    q = _field(q).q
    target = tuple(a + b for a, b in zip(m.dim_vector(p), n.dim_vector(p)))
    out = {}
    for l in modules_with_dim(p, target):
        f = hall_number(p, l, m, n, q, dim_cap)
        if f:
            out[l] = f
    return out


def hall_multiply(p: GentlePresentation, x: dict[IsoClass, int], y: dict[IsoClass, int], q,
                  dim_cap: int = DEFAULT_DIM_CAP) -> dict[IsoClass, int]:
    """Product of formal sums in the Hall algebra."""
    out: Counter = Counter()
    for m, a in x.items():
        for n, b in y.items():
            for l, f in hall_product(p, m, n, q, dim_cap).items():
                out[l] += a * b * f
    return {k: v for k, v in sorted(out.items()) if v}


@dataclass
class VanishingReport:
    checked: int
    violations: list[tuple[IsoClass, IsoClass, IsoClass, int, int]]

    @property
    def ok(self) -> bool:
        return not self.violations


def one_sided_vanishing_report(p: GentlePresentation, q, dim_cap: int = 4) -> VanishingReport:
    """For indecomposable M, L and nonzero N with dim M = dim L + dim N,
    check that F^M_{N L} or F^M_{L N} vanishes."""
    q = _field(q).q
    indecs = [IsoClass.of([w]) for w in enumerate_strings(p)]
    small = [x for x in indecs if sum(x.dim_vector(p)) <= dim_cap]
    checked, bad = 0, []
    for m in small:
        dm = m.dim_vector(p)
        for l in small:
            rest = tuple(a - b for a, b in zip(dm, l.dim_vector(p)))
            if min(rest) < 0 or not any(rest):
                continue
            for n in modules_with_dim(p, rest):
                checked += 1
                f1 = hall_number(p, m, n, l, q, dim_cap)
                f2 = hall_number(p, m, l, n, q, dim_cap)
                if f1 and f2:
                    bad.append((m, l, n, f1, f2))
    return VanishingReport(checked, bad)
