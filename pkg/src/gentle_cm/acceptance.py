"""The acceptance suite: one function per criterion, shared by the tests and the CLI."""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable

from . import fixture
from .bound_quiver import enumerate_nonzero_paths, is_schurian, serialize_presentation
from .cluster_a import (
    as_cluster_quiver,
    cluster_relations,
    count_hexagons,
    defined_mutations,
    derived_equivalent,
    fz_mutate,
    is_good_mutation,
    neighborhood_type,
    quiver_from_edges,
    random_cluster_quiver,
    table_rows,
)
from .cm_construct import cm_auslander
from .corpus import (
    cluster_corpus,
    random_gentle_presentation,
    triangle_with_tail_split,
    triangles_with_line_split,
)
from .coxeter import asymmetry_matrix, cartan_matrix, coxeter_closed_form, coxeter_polynomial, split_coxeter_check
from .exact_linalg import Poly, as_matrix
from .hall_fq import IsoClass, hall_multiply, hall_number, hall_polynomial, one_sided_vanishing_report
from .strings import (
    dim_vector_uniqueness,
    enumerate_strings,
    find_band,
    has_loop,
    has_two_cycle,
    iota,
    is_representation_finite,
    pi_minus,
    pi_plus,
)


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float
    budget: float | None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        budget = f" (budget {self.budget:g}s)" if self.budget else ""
        return f"[{status}] {self.number}. {self.title}: {self.detail} [{self.seconds:.2f}s{budget}]"


def _run(number: int, title: str, budget: float | None, body: Callable[[], tuple[bool, str]]) -> CriterionResult:
    start = time.perf_counter()
    ok, detail = body()
    elapsed = time.perf_counter() - start
    if budget is not None and elapsed >= budget:
        ok, detail = False, f"{detail}; over time budget"
    return CriterionResult(number, title, ok, detail, elapsed, budget)


EXPECTED_CMAUS = {
    "C3": """vertex 1 2 3 [a] [b] [c]
arrow a+: 1 -> [a]
arrow a-: [a] -> 2
arrow b+: 2 -> [b]
arrow b-: [b] -> 3
arrow c+: 3 -> [c]
arrow c-: [c] -> 1
rel b+ a-
rel c+ b-
rel a+ c-
""",
    "TWOCYC": """vertex 1 2 [a] [b]
arrow a+: 1 -> [a]
arrow a-: [a] -> 2
arrow b+: 2 -> [b]
arrow b-: [b] -> 1
rel b+ a-
rel a+ b-
""",
    "LOOP": """vertex 1 [a]
arrow a+: 1 -> [a]
arrow a-: [a] -> 1
rel a+ a-
""",
}


def criterion_1() -> CriterionResult:
    def body():
        bad = [n for n, text in EXPECTED_CMAUS.items()
               if serialize_presentation(cm_auslander(fixture(n))) != text]
        return not bad, "C3, TWOCYC, LOOP reproduced" if not bad else f"mismatch on {bad}"
    return _run(1, "CM-Auslander examples", 1.0, body)


def criterion_2(per_pair: int = 5, seed: int = 2024) -> CriterionResult:
    def body():
        rng = random.Random(seed)
        bad, total = [], 0
        for t in range(1, 4):
            for s in range(5):
                want = coxeter_closed_form(t, s)
                for _ in range(per_pair):
                    sd = rng.randrange(2 ** 32)
                    cq = random_cluster_quiver(t, s, sd)
                    total += 1
                    if coxeter_polynomial(cm_auslander(cluster_relations(cq))) != want:
                        bad.append((t, s, sd))
        return not bad, f"{total - len(bad)}/{total} quivers match the closed form"
    return _run(2, "Closed-form Coxeter sweep", 60.0, body)


def linear_orientations(n: int):
    vs = [str(i) for i in range(1, n + 1)]
    for flips in itertools.product((False, True), repeat=n - 1):
        edges = [(vs[i + 1], vs[i]) if f else (vs[i], vs[i + 1]) for i, f in enumerate(flips)]
        yield quiver_from_edges(vs, edges)


def criterion_3() -> CriterionResult:
    def body():
        checked, bad = 0, []
        for n in range(1, 7):
            want = Poly([1] * (n + 1))
            for q in linear_orientations(n):
                checked += 1
                if coxeter_polynomial(cluster_relations(q)) != want:
                    bad.append(q)
        s_ok = asymmetry_matrix(cartan_matrix(fixture("A2"))) == as_matrix([[-1, 1], [-1, 0]])
        ok = not bad and s_ok
        return ok, f"{checked - len(bad)}/{checked} orientations; A2 asymmetry exact={s_ok}"
    return _run(3, "Hereditary anchors", None, body)


def criterion_4() -> CriterionResult:
    def body():
        tail = triangle_with_tail_split()
        line = triangles_with_line_split(2)
        r1 = split_coxeter_check(tail.whole, tail.gamma1, tail.gamma2, tail.b, tail.c)
        r2 = split_coxeter_check(line.whole, line.gamma1, line.gamma2, line.b, line.c)
        # mismatched B: gamma1 in place of B
        neg = split_coxeter_check(tail.whole, tail.gamma1, tail.gamma2, tail.gamma1, tail.c)
        return r1 and r2 and not neg, f"tail split={r1}, C-empty split={r2}, negative control={neg}"
    return _run(4, "Split identity", None, body)


def criterion_5(count: int = 200, seed: int = 7) -> CriterionResult:
    def body():
        rng = random.Random(seed)
        problems: list[str] = []
        stats = {"finite": 0, "strings": 0, "dimvec": 0, "schurian": 0}
        for i in range(count):
            lam = random_gentle_presentation(rng)
            gam = cm_auslander(lam)
            if (find_band(lam) is None) != (find_band(gam) is None):
                problems.append(f"#{i} band existence")
            fin = is_representation_finite(lam)
            if fin != is_representation_finite(gam):
                problems.append(f"#{i} representation-finiteness")
            if fin:
                stats["finite"] += 1
                for w in enumerate_strings(lam):
                    v = iota(lam, gam, w)
                    stats["strings"] += 1
                    if pi_minus(lam, gam, v) != w or pi_plus(lam, gam, v) != w:
                        problems.append(f"#{i} pi(iota({w}))")
                if not has_loop(lam) and dim_vector_uniqueness(lam):
                    stats["dimvec"] += 1
                    if has_two_cycle(lam):
                        problems.append(f"#{i} 2-cycle despite dimension-vector uniqueness")
                    if not dim_vector_uniqueness(gam):
                        problems.append(f"#{i} dimension-vector uniqueness")
            if is_schurian(lam):
                stats["schurian"] += 1
                if not is_schurian(gam):
                    problems.append(f"#{i} schurian")
        detail = (f"{count} presentations, {stats['finite']} rep-finite, {stats['strings']} strings, "
                  f"{stats['dimvec']} dim-vector cases, {stats['schurian']} schurian; "
                  f"{len(problems)} failures")
        return not problems, detail
    return _run(5, "Transfer properties", None, body)


def criterion_6(count: int = 30, seed: int = 11) -> CriterionResult:
    def body():
        corpus = cluster_corpus(range(7, 11), count, seed)
        data = []
        for cq in corpus:
            gam = cm_auslander(cluster_relations(cq))
            data.append((cq, coxeter_polynomial(gam), count_hexagons(gam)))
        pairs = agree = same = 0
        for (q1, c1, h1), (q2, c2, h2) in itertools.combinations(data, 2):
            if q1.n != q2.n:
                continue
            pairs += 1
            d = derived_equivalent(q1, q2)
            same += d
            agree += d == (c1 == c2) == (h1 == h2)
        return agree == pairs and pairs > 0, f"{agree}/{pairs} same-size pairs agree ({same} equivalent)"
    return _run(6, "Derived-equivalence criteria", 120.0, body)


def criterion_7(count: int = 40, seed: int = 5) -> CriterionResult:
    def body():
        problems = []
        for row in table_rows():
            left = defined_mutations(cluster_relations(row.left), row.vertex)
            right = defined_mutations(cluster_relations(row.right), row.vertex)
            good = is_good_mutation(row.left, row.vertex)
            if (left, right, good) != (row.left_defined, row.right_defined, row.good):
                problems.append(f"row {row.name}")
        good_count = bad_count = 0
        for cq in cluster_corpus(range(2, 9), count, seed):
            chi = coxeter_polynomial(cm_auslander(cluster_relations(cq)))
            for k in cq.quiver.vertices:
                mutated = as_cluster_quiver(fz_mutate(cq.quiver, k))
                if is_good_mutation(cq, k):
                    good_count += 1
                    if coxeter_polynomial(cm_auslander(cluster_relations(mutated))) != chi:
                        problems.append(f"good mutation at {k} changed chi")
                    if mutated.t != cq.t:
                        problems.append(f"good mutation at {k} changed t")
                if neighborhood_type(cq, k) == "2b":
                    bad_count += 1
                    if abs(mutated.t - cq.t) != 1:
                        problems.append(f"2b mutation at {k} kept t")
        detail = f"5 table rows, {good_count} good and {bad_count} type-2b corpus mutations; {len(problems)} failures"
        return not problems, detail
    return _run(7, "Good-mutation table", None, body)


def _associativity(p, q: int, max_dim: int) -> tuple[int, list]:
    indecs = [IsoClass.of([w]) for w in enumerate_strings(p)]
    dims = {x: sum(x.dim_vector(p)) for x in indecs}
    checked, bad = 0, []
    for m, n, r in itertools.product(indecs, repeat=3):
        if dims[m] + dims[n] + dims[r] > max_dim:
            continue
        checked += 1
        left = hall_multiply(p, hall_multiply(p, {m: 1}, {n: 1}, q), {r: 1}, q)
        right = hall_multiply(p, {m: 1}, hall_multiply(p, {n: 1}, {r: 1}, q), q)
        if left != right:
            bad.append((m, n, r))
    return checked, bad


def criterion_8() -> CriterionResult:
    def body():
        a2 = fixture("A2")
        p1, s1, s2 = IsoClass.parse("a"), IsoClass.parse("e(1)"), IsoClass.parse("e(2)")
        problems = []
        for q in (2, 3, 5, 7):
            if hall_number(a2, p1, s1, s2, q) != 1 or hall_number(a2, p1, s2, s1, q) != 0:
                problems.append(f"A2 socle counts at q={q}")
        poly, _ = hall_polynomial(a2, p1 + s2, p1, s2, (2, 3, 5, 7), (11, 13))
        if poly != Poly.x():
            problems.append(f"Hall polynomial {poly}")
        checked = 0
        for name in ("C3", "HEX"):
            for q in (2, 3):
                rep = one_sided_vanishing_report(fixture(name), q, 4)
                checked += rep.checked
                if not rep.ok:
                    problems.append(f"vanishing on {name} q={q}")
        triples = 0
        for name in ("A2", "HEX"):
            n, bad = _associativity(fixture(name), 2, 5)
            triples += n
            if bad:
                problems.append(f"associativity on {name}: {len(bad)} triples")
        detail = (f"polynomial {poly}, {checked} vanishing checks, {triples} associativity triples; "
                  f"{len(problems)} failures")
        return not problems, detail
    return _run(8, "Hall suite", 600.0, body)


def criterion_9() -> CriterionResult:
    def body():
        hexa, c3 = fixture("HEX"), fixture("C3")
        got = (len(enumerate_nonzero_paths(hexa)), len(enumerate_strings(hexa)),
               len(enumerate_strings(c3)), len(cm_auslander(c3).vertices))
        return got == (15, 15, 6, 6), "paths(HEX), strings(HEX), strings(C3), |Q0 Aus(C3)| = %s" % (got,)
    return _run(9, "Structural counts", None, body)


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
}


def run_all(only=None) -> list[CriterionResult]:
    return [CRITERIA[i]() for i in sorted(CRITERIA) if only is None or i in only]
