from __future__ import annotations

import json
from importlib import resources

import pytest

from gentle_cm.bound_quiver import parse_presentation, presentation_from_json
from gentle_cm.cli import main
from gentle_cm.exact_linalg import poly_from_json, Poly

DATA = resources.files("gentle_cm") / "data"


def path(name):
    return str(DATA / f"{name}.quiver")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate(capsys, tmp_path):
    assert run(capsys, "validate", path("C3"))[:2] == (0, "ok\n")
    bad = tmp_path / "bad.quiver"
    bad.write_text("vertex 1\narrow a 1 1\n")
    code, _, err = run(capsys, "validate", str(bad))
    assert code == 2 and "line 2" in err
    star = tmp_path / "star.quiver"
    star.write_text("vertex 0 1 2 3\narrow a: 0 -> 1\narrow b: 0 -> 2\narrow c: 0 -> 3\n")
    code, out, _ = run(capsys, "validate", str(star))
    assert code == 1 and "too many outgoing" in out
    assert run(capsys, "validate", str(tmp_path / "missing.quiver"))[0] == 2


def test_cmaus(capsys):
    code, out, _ = run(capsys, "cmaus", path("C3"))
    assert code == 0 and parse_presentation(out) == parse_presentation((DATA / "HEX.quiver").read_text())
    code, out, _ = run(capsys, "cmaus", path("A2"))
    assert parse_presentation(out) == parse_presentation((DATA / "A2.quiver").read_text())
    code, out, _ = run(capsys, "cmaus", "--json", path("LOOP"))
    obj = json.loads(out)
    assert obj["vertices"] == ["1", "[a]"] and obj["cycles"] == [["a"]]
    assert len(presentation_from_json(obj).vertices) == 2


def test_coxeter(capsys):
    code, out, _ = run(capsys, "coxeter", path("HEX"))
    assert code == 0 and out.splitlines()[0] == "(x^3+1)^2"
    code, out, _ = run(capsys, "coxeter", "--json", path("A2"))
    assert poly_from_json(json.loads(out)["coefficients"]) == Poly([1, 1, 1])
    assert run(capsys, "coxeter", path("TWOCYC"))[0] == 1


def test_closed_form_and_gen(capsys):
    code, out, _ = run(capsys, "closed-form", "1", "4")
    assert out.splitlines()[0] == "(x^3+1)(x^7+1)"
    code, out, _ = run(capsys, "gen", "1", "0", "--seed", "5")
    p = parse_presentation(out)
    assert len(p.vertices) == 3 and len(p.relations) == 3
    assert run(capsys, "gen", "1", "0", "--seed", "5")[1] == out


def test_strings_bands_repfinite(capsys):
    code, out, _ = run(capsys, "strings", path("HEX"))
    assert out.startswith("15 strings")
    assert run(capsys, "bands", path("KRON"))[1].strip() == "a,b^-1"
    assert run(capsys, "repfinite", path("C3"))[1].strip() == "representation-finite"
    assert run(capsys, "strings", path("KRON"))[0] == 1
    assert run(capsys, "strings", "--string-cap", "3", path("HEX"))[0] == 3


def test_cartan_hexagons_mutations(capsys):
    code, out, _ = run(capsys, "cartan", "--json", path("C3"))
    assert json.loads(out)["rows"] == [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
    assert run(capsys, "hexagons", path("HEX"))[1].strip() == "1"
    code, out, _ = run(capsys, "mutate", path("C3"), "1")
    assert code == 0 and not parse_presentation(out).relations
    code, out, _ = run(capsys, "good-mutations", path("A2"))
    assert code == 0 and "good" in out
    code, out, _ = run(capsys, "derived-class", path("A2"), path("A2"), "--witness")
    assert "derived equivalent" in out and "(none needed)" in out


def test_hall(capsys):
    code, out, _ = run(capsys, "hall", "number", path("A2"), "a", "e(1)", "e(2)", "--primes", "2,3")
    assert out.split() == ["q=2:", "1", "q=3:", "1"]
    code, out, _ = run(capsys, "hall", "poly", "--json", path("A2"), "a;e(2)", "a", "e(2)")
    obj = json.loads(out)
    assert obj["polynomial"] == [0, 1] and obj["verified_at"] == [11, 13]
    code, out, _ = run(capsys, "hall", "product", path("A2"), "e(1)", "e(2)", "--primes", "2")
    assert sorted(out.splitlines()) == ["1 * [a]", "1 * [e(1);e(2)]"]
    code, out, _ = run(capsys, "hall", "vanishing-report", path("C3"), "--primes", "2", "--dim-cap", "3")
    assert code == 0 and "0 violations" in out


def test_resource_cap_exit_code(capsys):
    code, _, err = run(capsys, "hall", "number", path("A2"), "3*a", "2*a", "a", "--dim-cap", "4", "--primes", "2")
    assert code == 3 and "cap" in err


def test_bad_arguments(capsys):
    assert main(["nope"]) == 2
    assert main(["hall", "number", path("A2"), "a", "e(1)", "e(2)", "--primes", "4"]) == 1


def test_reproduce_subset(capsys):
    code, out, _ = run(capsys, "reproduce", "--only", "1,9")
    assert code == 0 and "2/2 criteria passed" in out
