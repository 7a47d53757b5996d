"""Exact rational matrices and integer polynomials.

Matrices are plain row-major lists of lists; entries are converted to
:class:`fractions.Fraction` on the way in.  Nothing here ever touches a float.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError, NonIntegralError, SingularMatrixError

Matrix = list[list[Fraction]]


def as_matrix(rows: Iterable[Iterable]) -> Matrix:
    m = [[Fraction(x) for x in row] for row in rows]
    if m and any(len(r) != len(m[0]) for r in m):
        raise DomainError("ragged matrix")
    return m


def shape(m: Sequence[Sequence]) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> Matrix:
    return [[Fraction(0)] * c for _ in range(r)]


def transpose(m: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*m)] if m else []


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise DomainError(f"shape mismatch {ra}x{ca} * {rb}x{cb}")
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def scale(m: Sequence[Sequence], c) -> Matrix:
    c = Fraction(c)
    return [[c * x for x in row] for row in m]


def is_integral(m: Sequence[Sequence]) -> bool:
    return all(Fraction(x).denominator == 1 for row in m for x in row)


def _require_square(m: Sequence[Sequence]) -> int:
    r, c = shape(m)
    if r != c:
        raise DomainError(f"matrix is not square ({r}x{c})")
    return r


def det(m: Sequence[Sequence]) -> Fraction:
    """Determinant by Bareiss elimination (fraction-free on integer input)."""
    n = _require_square(m)
    if n == 0:
        return Fraction(1)
    a = as_matrix(m)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inverse(m: Sequence[Sequence]) -> Matrix:
    """Gauss-Jordan inverse over Q; the product with ``m`` is checked."""
    n = _require_square(m)
    a = as_matrix(m)
    inv = identity(n)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        inv[col] = [x / p for x in inv[col]]
        for r in range(n):
            f = a[r][col]
            if r != col and f != 0:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    assert matmul(m, inv) == identity(n)
    return inv


class Poly:
    """Polynomial with exact rational coefficients, stored in ascending degree.

    ``Poly.is_integral`` tells whether it is an integer polynomial; most of the
    package only ever produces integral ones.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, degree: int, c=1) -> "Poly":
        return cls([0] * degree + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral:
            raise NonIntegralError(f"non-integral polynomial {self}")
        return [int(c) for c in self.coeffs]

    def is_zero(self) -> bool:
        return not self.coeffs

    def _coerce(self, other) -> "Poly":
        return other if isinstance(other, Poly) else Poly([other])

    def __add__(self, other):
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = o.coeffs + (Fraction(0),) * (n - len(o.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if not self.coeffs or not o.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Poly([1])
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.coeffs[-1]
        for i in range(len(q) - 1, -1, -1):
            c = rem[i + other.degree] / lead
            q[i] = c
            for j, b in enumerate(other.coeffs):
                rem[i + j] -= c * b
        return Poly(q), Poly(rem)

    def __floordiv__(self, other):
        return self.divmod(self._coerce(other))[0]

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, Poly) else Poly()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reciprocal(self) -> "Poly":
        """x^deg * p(1/x), i.e. the reversed coefficient list."""
        return Poly(reversed(self.coeffs))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({[str(c) if c.denominator != 1 else int(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                var = "x" if d == 1 else f"x^{d}"
                body = var if mag == 1 else f"{mag}*{var}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def char_poly(m: Sequence[Sequence]) -> Poly:
    """det(xI - m) by Faddeev-LeVerrier over Q."""
    n = _require_square(m)
    a = as_matrix(m)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    am = zeros(n, n)
    for k in range(1, n + 1):
        mk = [[am[i][j] + (coeffs[n - k + 1] if i == j else 0) for j in range(n)] for i in range(n)]
        am = matmul(a, mk)
        coeffs[n - k] = -sum((am[i][i] for i in range(n)), Fraction(0)) / k
    return Poly(coeffs)


def lagrange_fit(points: Sequence[tuple[int, int]], require_integral: bool = True) -> Poly:
    """Interpolating polynomial of degree < len(points), exact over Q."""
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise DomainError("duplicate abscissae in interpolation data")
    out = Poly()
    for i, (xi, yi) in enumerate(points):
        basis = Poly([1])
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j != i:
                basis = basis * Poly([-xj, 1])
                denom *= Fraction(xi) - Fraction(xj)
        out = out + basis * (Fraction(yi) / denom)
    if require_integral and not out.is_integral:
        raise NonIntegralError(f"interpolant {out!r} has non-integer coefficients")
    return out


def matrix_to_json(m: Sequence[Sequence], labels: Sequence[str] | None = None) -> dict:
    def enc(x):
        x = Fraction(x)
        return int(x) if x.denominator == 1 else str(x)

    return {"labels": list(labels) if labels is not None else None,
            "rows": [[enc(x) for x in row] for row in m]}


def matrix_from_json(obj: dict) -> tuple[Matrix, list[str] | None]:
    return as_matrix(obj["rows"]), obj.get("labels")


def poly_to_json(p: Poly) -> list:
    return [int(c) if c.denominator == 1 else str(c) for c in p.coeffs]


def poly_from_json(coeffs: Sequence) -> Poly:
    return Poly(Fraction(c) for c in coeffs)
