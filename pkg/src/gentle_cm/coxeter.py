"""Cartan matrices, asymmetry matrices and Coxeter polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bound_quiver import GentlePresentation, path_counts
from .errors import DomainError, NonIntegralError
from .exact_linalg import Matrix, Poly, char_poly, det, inverse, matmul, scale, transpose


@dataclass(frozen=True)
class CartanData:
    """C[i][j] counts nonzero paths from vertex i to vertex j (declared order)."""

    labels: tuple[str, ...]
    matrix: tuple[tuple[int, ...], ...]
    det: Fraction

    @property
    def is_schurian(self) -> bool:
        return all(x <= 1 for row in self.matrix for x in row)

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.matrix]


def cartan_matrix(p: GentlePresentation) -> CartanData:
    counts = path_counts(p)
    vs = p.vertices
    m = tuple(tuple(counts[(i, j)] for j in vs) for i in vs)
    return CartanData(tuple(vs), m, det(m))


def asymmetry_matrix(c: CartanData) -> Matrix:
    """S = -C^T C^{-1}, exact."""
    return scale(matmul(transpose(c.matrix), inverse(c.matrix)), -1)


def coxeter_polynomial(p: GentlePresentation, strict: bool = True) -> Poly:
    """Characteristic polynomial of the asymmetry matrix.

    With ``strict`` a non-integral result raises; otherwise it is returned as is
    and callers can inspect ``Poly.is_integral``.
    """
    chi = char_poly(asymmetry_matrix(cartan_matrix(p)))
    assert chi.degree == len(p.vertices) and chi.coeffs[-1] == 1
    if strict and not chi.is_integral:
        raise NonIntegralError(f"Coxeter polynomial {chi} has non-integral coefficients")
    return chi


def coxeter_closed_form(t: int, s: int) -> Poly:
    """(x^3+1)^t (x-1)^(t-1) (x^(t+2+s) + (-1)^(t+1)); for t = 0 the A_(s+1) value."""
    if t < 0 or s < 0:
        raise DomainError("t and s must be nonnegative")
    if t == 0:
        return Poly([1] * (s + 2))
    x = Poly.x()
    return (x ** 3 + 1) ** t * (x - 1) ** (t - 1) * (x ** (t + 2 + s) + (-1) ** (t + 1))


def closed_form_factors(t: int, s: int) -> list[tuple[str, int]]:
    """Factors of the closed form as (text, exponent), identical factors merged."""
    if t == 0:
        return [(f"(x^{s + 2}-1)/(x-1)", 1)]
    out: dict[str, int] = {}
    out["(x^3+1)"] = t
    if t > 1:
        out["(x-1)"] = t - 1
    last = f"(x^{t + 2 + s}{'+' if t % 2 else '-'}1)"
    out[last] = out.get(last, 0) + 1
    return list(out.items())


def format_factors(factors: list[tuple[str, int]]) -> str:
    return "".join(f if e == 1 else f"{f}^{e}" for f, e in factors)


def match_closed_form(chi: Poly) -> tuple[int, int] | None:
    """The (t, s) whose closed form equals ``chi``, smallest t first."""
    d = chi.degree
    candidates = [(0, d - 1)] if d >= 1 else []
    candidates += [(t, d - 1 - 5 * t) for t in range(1, d // 5 + 1) if d - 1 - 5 * t >= 0]
    for t, s in candidates:
        if s >= 0 and coxeter_closed_form(t, s) == chi:
            return t, s
    return None


def reciprocity_sign(chi: Poly) -> int | None:
    """epsilon with x^n chi(1/x) = epsilon chi(x), or None."""
    r = chi.reciprocal()
    if r == chi:
        return 1
    if r == -chi:
        return -1
    return None


def _chi_or_one(p: GentlePresentation | None) -> Poly:
    if p is None or not p.vertices:
        return Poly([1])
    return coxeter_polynomial(p, strict=False)


def split_coxeter_check(
    whole: GentlePresentation,
    gamma1: GentlePresentation,
    gamma2: GentlePresentation,
    b: GentlePresentation | None,
    c: GentlePresentation | None,
) -> bool:
    """chi(whole) == chi(gamma1) chi(gamma2) - x chi(b) chi(c); empty parts count as 1."""
    lhs = _chi_or_one(whole)
    rhs = _chi_or_one(gamma1) * _chi_or_one(gamma2) - Poly.x() * _chi_or_one(b) * _chi_or_one(c)
    return lhs == rhs
