from __future__ import annotations

import pytest

from gentle_cm import fixture
from gentle_cm.bound_quiver import GentlePresentation, parse_presentation, serialize_presentation, validate_gentle
from gentle_cm.cluster_a import (
    as_cluster_quiver,
    canonical_form,
    cluster_relations,
    count_hexagons,
    count_lines_triangles,
    defined_mutations,
    derived_equivalent,
    fz_mutate,
    good_mutation_sequence,
    is_cluster_tilted_a,
    is_good_mutation,
    mutation_defined,
    neighborhood_type,
    quiver_from_edges,
    random_cluster_quiver,
    table_rows,
)
from gentle_cm.cm_construct import cm_auslander
from gentle_cm.corpus import cluster_corpus
from gentle_cm.coxeter import coxeter_polynomial
from gentle_cm.errors import DomainError, ResourceCapError

q = quiver_from_edges
TRIANGLE = q("123", [("1", "2"), ("2", "3"), ("3", "1")])
A3 = q("123", [("1", "2"), ("2", "3")])


def test_recognition_examples():
    assert is_cluster_tilted_a(TRIANGLE)[0]
    assert is_cluster_tilted_a(A3)[0]
    ok, report = is_cluster_tilted_a(q("1234", [("1", "2"), ("2", "3"), ("3", "4"), ("4", "1")]))
    assert not ok and "oriented triangle" in str(report)


@pytest.mark.parametrize("edges, clause", [
    ([("1", "2"), ("2", "3"), ("1", "3")], "oriented triangle"),
    ([("1", "2"), ("2", "1")], "2-cycle"),
    ([("1", "1")], "loop"),
    ([("1", "2"), ("1", "3"), ("1", "4")], "more than two blocks"),
])
def test_recognition_violations(edges, clause):
    vs = sorted({v for e in edges for v in e})
    ok, report = is_cluster_tilted_a(q(vs, edges))
    assert not ok and clause in str(report)


def test_disconnected_rejected():
    ok, report = is_cluster_tilted_a(q("123", [("1", "2")]))
    assert not ok and "not connected" in str(report)


def test_cluster_relations_examples():
    c3 = cluster_relations(TRIANGLE)
    assert len(c3.relations) == 3 and validate_gentle(c3).ok
    assert not cluster_relations(A3).relations
    tri_line = q("1234", [("1", "2"), ("2", "3"), ("3", "1"), ("3", "4")])
    assert len(cluster_relations(tri_line).relations) == 3


def test_count_examples():
    assert count_lines_triangles(TRIANGLE) == (0, 1)
    assert count_lines_triangles(q("1234", [("1", "2"), ("2", "3"), ("4", "3")])) == (3, 0)
    bowtie = q("12345", [("1", "2"), ("2", "3"), ("3", "1"), ("3", "4"), ("4", "5"), ("5", "3")])
    assert count_lines_triangles(bowtie) == (0, 2)


def test_fz_mutate_examples():
    sink = fz_mutate(q("12", [("1", "2")]), "2")
    assert [(a.source, a.target) for a in sink.arrows] == [("2", "1")]
    cyc = fz_mutate(A3, "2")
    assert {(a.source, a.target) for a in cyc.arrows} == {("2", "1"), ("3", "2"), ("1", "3")}
    for k in "123":
        back = as_cluster_quiver(fz_mutate(TRIANGLE, k))
        assert (back.s, back.t) == (2, 0)


def test_fz_mutate_errors():
    with pytest.raises(DomainError):
        fz_mutate(q("1", [("1", "1")]), "1")
    with pytest.raises(DomainError):
        fz_mutate(q("12", [("1", "2"), ("2", "1")]), "1")


def test_fz_mutate_multiplicity_round_trip():
    m = fz_mutate(q("123", [("1", "2"), ("2", "3"), ("1", "3")]), "2")
    assert sorted(a.name for a in m.arrows if (a.source, a.target) == ("1", "3")) == ["1>3", "1>3.2"]
    p = GentlePresentation(m)
    assert parse_presentation(serialize_presentation(p)) == p


def test_mutation_defined_examples():
    sink = cluster_relations(q("ak", [("a", "k")]))
    assert mutation_defined(sink, "k", "-")
    source = cluster_relations(q("ak", [("k", "a")]))
    assert not mutation_defined(source, "k", "-")
    path = cluster_relations(q("akb", [("a", "k"), ("k", "b")]))
    assert defined_mutations(path, "k") == ("-", "+")
    with pytest.raises(DomainError):
        mutation_defined(fixture("LOOP"), "1", "-")


@pytest.mark.parametrize("row", table_rows(), ids=lambda r: r.name)
def test_table_rows(row):
    assert defined_mutations(cluster_relations(row.left), row.vertex) == row.left_defined
    assert defined_mutations(cluster_relations(row.right), row.vertex) == row.right_defined
    assert is_good_mutation(row.left, row.vertex) == row.good
    assert canonical_form(fz_mutate(row.left, row.vertex)) == canonical_form(row.right)
    assert neighborhood_type(row.left, row.vertex) == row.name


def test_derived_equivalent_examples():
    a4 = q("1234", [("1", "2"), ("2", "3"), ("3", "4")])
    a4b = q("1234", [("2", "1"), ("2", "3"), ("4", "3")])
    tri_line = q("1234", [("1", "2"), ("2", "3"), ("3", "1"), ("3", "4")])
    assert derived_equivalent(a4, a4b)
    assert not derived_equivalent(tri_line, a4)
    assert derived_equivalent(tri_line, tri_line)
    with pytest.raises(DomainError):
        derived_equivalent(A3, a4)


def test_canonical_form_is_exact():
    a = q("123", [("1", "2"), ("2", "3")])
    b = q("abc", [("c", "b"), ("b", "a")])
    c = q("123", [("1", "2"), ("3", "2")])
    assert canonical_form(a) == canonical_form(b)
    assert canonical_form(a) != canonical_form(c)
    for cq in cluster_corpus(range(4, 9), 10, seed=3):
        vs = list(cq.quiver.vertices)
        perm = dict(zip(vs, reversed(vs)))
        edges = [(perm[x.source], perm[x.target]) for x in cq.quiver.arrows]
        assert canonical_form(q(vs, edges)) == canonical_form(cq.quiver)


def test_good_mutation_sequence():
    assert good_mutation_sequence(A3, A3) == []
    other = q("123", [("1", "2"), ("3", "2")])
    seq = good_mutation_sequence(A3, other)
    assert seq is not None and len(seq) == 1
    cur = A3
    for k in seq:
        cur = fz_mutate(cur, k)
    assert canonical_form(cur) == canonical_form(other)
    with pytest.raises(DomainError):
        good_mutation_sequence(TRIANGLE, A3)
    with pytest.raises(ResourceCapError):
        good_mutation_sequence(random_cluster_quiver(0, 9, 1), random_cluster_quiver(0, 9, 2))


def test_good_mutation_sequence_with_triangles():
    q1, q2 = random_cluster_quiver(2, 2, 1), random_cluster_quiver(2, 2, 2)
    seq = good_mutation_sequence(q1, q2)
    assert seq is not None
    cur = q1.quiver
    for k in seq:
        assert is_good_mutation(cur, k)
        cur = fz_mutate(cur, k)
    assert canonical_form(cur) == canonical_form(q2.quiver)


def test_count_hexagons_examples():
    assert count_hexagons(fixture("HEX")) == 1
    assert count_hexagons(cm_auslander(cluster_relations(A3))) == 0
    two = q("1234567", [("1", "2"), ("2", "3"), ("3", "1"), ("3", "4"),
                        ("4", "5"), ("5", "6"), ("6", "4"), ("7", "5")])
    assert count_hexagons(cm_auslander(cluster_relations(two))) == 2


def test_random_cluster_quiver_examples():
    tri = random_cluster_quiver(1, 0, 99)
    assert (tri.s, tri.t, tri.n) == (0, 1, 3)
    assert count_lines_triangles(random_cluster_quiver(0, 2, 5)) == (2, 0)
    cq = random_cluster_quiver(2, 1, 7)
    assert is_cluster_tilted_a(cq.quiver)[0] and (cq.s, cq.t) == (1, 2)
    assert random_cluster_quiver(3, 3, 42) == random_cluster_quiver(3, 3, 42)


def test_corpus_mutation_invariants():
    for cq in cluster_corpus(range(2, 8), 15, seed=9):
        chi = coxeter_polynomial(cm_auslander(cluster_relations(cq)))
        for k in cq.quiver.vertices:
            mutated = as_cluster_quiver(fz_mutate(cq.quiver, k))
            assert canonical_form(fz_mutate(mutated.quiver, k)) == canonical_form(cq.quiver)
            if is_good_mutation(cq, k):
                assert mutated.t == cq.t
                assert coxeter_polynomial(cm_auslander(cluster_relations(mutated))) == chi
            if neighborhood_type(cq, k) == "2b":
                assert abs(mutated.t - cq.t) == 1
