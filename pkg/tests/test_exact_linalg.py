from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gentle_cm.errors import DomainError, NonIntegralError, SingularMatrixError
from gentle_cm.exact_linalg import (
    Poly,
    as_matrix,
    char_poly,
    det,
    identity,
    inverse,
    lagrange_fit,
    matmul,
    matrix_from_json,
    matrix_to_json,
    poly_from_json,
    poly_to_json,
    zeros,
)

C3_CARTAN = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]

small = st.integers(-4, 4)


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)


def test_det_examples():
    assert det(identity(3)) == 1
    assert det(C3_CARTAN) == 2
    assert det([[1, 1], [1, 1]]) == 0
    assert det([]) == 1


def test_det_rejects_non_square():
    with pytest.raises(DomainError):
        det([[1, 2, 3]])


def test_inverse_examples():
    assert inverse(identity(3)) == identity(3)
    assert inverse([[1, 1], [0, 1]]) == as_matrix([[1, -1], [0, 1]])
    inv = inverse(C3_CARTAN)
    assert matmul(C3_CARTAN, inv) == identity(3)
    assert all(x.denominator in (1, 2) for row in inv for x in row)


def test_inverse_singular():
    with pytest.raises(SingularMatrixError):
        inverse([[1, 1], [1, 1]])


def test_char_poly_examples():
    assert char_poly(identity(2)) == Poly([1, -2, 1])
    assert char_poly([[-1, 1], [-1, 0]]) == Poly([1, 1, 1])
    assert char_poly(zeros(3, 3)) == Poly.monomial(3)


def test_lagrange_examples():
    assert lagrange_fit([(2, 1), (3, 1), (5, 1)]) == Poly([1])
    assert lagrange_fit([(2, 2), (3, 3), (5, 5)]) == Poly.x()
    assert lagrange_fit([(2, 4), (3, 9), (5, 25), (7, 49)]) == Poly.x() ** 2


def test_lagrange_errors():
    with pytest.raises(DomainError):
        lagrange_fit([(2, 1), (2, 3)])
    with pytest.raises(NonIntegralError):
        lagrange_fit([(0, 0), (2, 1)])
    assert lagrange_fit([(0, 0), (2, 1)], require_integral=False) == Poly([0, Fraction(1, 2)])


def test_poly_arithmetic_and_printing():
    x = Poly.x()
    p = (x ** 3 + 1) ** 2
    assert p == Poly([1, 0, 0, 2, 0, 0, 1])
    assert str(p) == "x^6 + 2*x^3 + 1"
    assert str(x - 1) == "x - 1"
    assert str(-x ** 2 + 3) == "-x^2 + 3"
    assert str(Poly()) == "0"
    q, r = p.divmod(x ** 3 + 1)
    assert q == x ** 3 + 1 and r.is_zero()
    assert p(2) == 81
    assert (x - 1).reciprocal() == -x + 1


def test_json_round_trip():
    m = as_matrix([[1, Fraction(1, 2)], [0, -3]])
    assert matrix_from_json(matrix_to_json(m, ["a", "b"])) == (m, ["a", "b"])
    p = Poly([1, Fraction(-2, 3), 5])
    assert poly_from_json(poly_to_json(p)) == p


@settings(max_examples=60, deadline=None)
@given(square(3), square(3))
def test_det_multiplicative(a, b):
    assert det(matmul(a, b)) == det(a) * det(b)


@settings(max_examples=60, deadline=None)
@given(square(4))
def test_inverse_involution(a):
    if det(a) == 0:
        with pytest.raises(SingularMatrixError):
            inverse(a)
    else:
        assert inverse(inverse(a)) == as_matrix(a)


def test_char_poly_matches_determinant_oracle():
    rng = random.Random(3)
    for _ in range(50):
        m = [[Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(6)] for _ in range(6)]
        chi = char_poly(m)
        for r in (Fraction(0), Fraction(1), Fraction(-2, 3), Fraction(5)):
            shifted = [[(r if i == j else 0) - m[i][j] for j in range(6)] for i in range(6)]
            assert chi(r) == det(shifted)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=1, max_size=5))
def test_lagrange_reproduces_samples(coeffs):
    p = Poly(coeffs)
    pts = [(x, int(p(x))) for x in (2, 3, 5, 7, 11)]
    fit = lagrange_fit(pts)
    assert fit == p
    assert all(fit(x) == y for x, y in pts)
