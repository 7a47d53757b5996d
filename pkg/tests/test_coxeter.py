from __future__ import annotations

import pytest

from gentle_cm import fixture
from gentle_cm.bound_quiver import parse_presentation
from gentle_cm.cluster_a import cluster_relations, quiver_from_edges, random_cluster_quiver
from gentle_cm.cm_construct import cm_auslander
from gentle_cm.corpus import triangle_with_tail_split, triangles_with_line_split
from gentle_cm.coxeter import (
    asymmetry_matrix,
    cartan_matrix,
    closed_form_factors,
    coxeter_closed_form,
    coxeter_polynomial,
    format_factors,
    match_closed_form,
    reciprocity_sign,
    split_coxeter_check,
)
from gentle_cm.errors import SingularMatrixError
from gentle_cm.exact_linalg import Poly, as_matrix, identity, is_integral

x = Poly.x()


def test_cartan_examples():
    semisimple = parse_presentation("vertex 1 2 3")
    assert cartan_matrix(semisimple).matrix == tuple(map(tuple, identity(3)))
    assert cartan_matrix(fixture("C3")).matrix == ((1, 1, 0), (0, 1, 1), (1, 0, 1))
    hexagon = cartan_matrix(fixture("HEX"))
    assert sum(map(sum, hexagon.matrix)) == 15 and hexagon.is_schurian


def test_asymmetry_examples():
    assert asymmetry_matrix(cartan_matrix(parse_presentation("vertex 1 2"))) == as_matrix([[-1, 0], [0, -1]])
    assert asymmetry_matrix(cartan_matrix(fixture("A2"))) == as_matrix([[-1, 1], [-1, 0]])
    assert is_integral(asymmetry_matrix(cartan_matrix(fixture("HEX"))))


def test_coxeter_examples():
    assert coxeter_polynomial(fixture("A2")) == x ** 2 + x + 1
    assert coxeter_polynomial(fixture("HEX")) == (x ** 3 + 1) ** 2
    a4 = quiver_from_edges("1234", [("1", "2"), ("2", "3"), ("3", "4")])
    assert coxeter_polynomial(cluster_relations(a4)) == Poly([1] * 5)


def test_singular_cartan():
    with pytest.raises(SingularMatrixError):
        coxeter_polynomial(fixture("TWOCYC"))


def test_closed_form_examples():
    assert coxeter_closed_form(1, 0) == (x ** 3 + 1) ** 2
    assert coxeter_closed_form(1, 4) == (x ** 3 + 1) * (x ** 7 + 1)
    for s in range(5):
        assert coxeter_closed_form(0, s) == Poly([1] * (s + 2))


def test_closed_form_factors():
    assert format_factors(closed_form_factors(1, 0)) == "(x^3+1)^2"
    assert format_factors(closed_form_factors(1, 4)) == "(x^3+1)(x^7+1)"
    assert format_factors(closed_form_factors(2, 1)) == "(x^3+1)^2(x-1)(x^5-1)"
    assert match_closed_form((x ** 3 + 1) ** 2) == (1, 0)
    assert match_closed_form(x ** 3 + 1) is None


def test_split_identity():
    for cfg in (triangle_with_tail_split(), triangles_with_line_split(1), triangles_with_line_split(2)):
        assert split_coxeter_check(cfg.whole, cfg.gamma1, cfg.gamma2, cfg.b, cfg.c)
    cfg = triangle_with_tail_split()
    assert not split_coxeter_check(cfg.whole, cfg.gamma1, cfg.gamma2, cfg.gamma1, cfg.c)


def test_split_values():
    cfg = triangle_with_tail_split()
    assert coxeter_polynomial(cfg.whole) == coxeter_closed_form(1, 3)
    assert coxeter_polynomial(cfg.b) == (x ** 3 + 1) ** 2


@pytest.mark.parametrize("t,s", [(t, s) for t in range(0, 3) for s in range(0, 4)])
def test_corpus_invariants(t, s):
    for seed in range(3):
        cq = random_cluster_quiver(t, s, seed)
        lam = cluster_relations(cq)
        gam = cm_auslander(lam)
        assert cartan_matrix(lam).det != 0
        assert cartan_matrix(gam).det != 0
        assert is_integral(asymmetry_matrix(cartan_matrix(gam)))
        chi = coxeter_polynomial(gam)
        assert chi == coxeter_closed_form(t, s)
        assert reciprocity_sign(chi) == 1
