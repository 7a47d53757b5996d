"""Command-line front end.

Exit codes: 0 success, 1 domain violation, 2 I/O or syntax error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bound_quiver import (
    GentlePresentation,
    load_presentation,
    presentation_to_json,
    serialize_presentation,
    validate_gentle,
)
from .cluster_a import (
    as_cluster_quiver,
    cluster_relations,
    count_hexagons,
    defined_mutations,
    derived_equivalent,
    fz_mutate,
    good_mutation_sequence,
    is_cluster_tilted_a,
    is_good_mutation,
    neighborhood_type,
    random_cluster_quiver,
)
from .cm_construct import cm_auslander, critical_cycles, gorenstein_projectives
from .coxeter import (
    cartan_matrix,
    closed_form_factors,
    coxeter_closed_form,
    coxeter_polynomial,
    format_factors,
    match_closed_form,
)
from .errors import DomainError, GentleError, QuiverFormatError
from .exact_linalg import matrix_to_json, poly_to_json
from .hall_fq import (
    DEFAULT_DIM_CAP,
    IsoClass,
    hall_number,
    hall_polynomial,
    hall_product,
    one_sided_vanishing_report,
)
from .strings import (
    DEFAULT_STRING_CAP,
    dimension_vector,
    enumerate_strings,
    find_band,
    format_string,
    is_representation_finite,
)


def _primes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}") from exc


def _positive(text: str) -> int:
    n = int(text)
    if n <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _load(path: str) -> GentlePresentation:
    try:
        return load_presentation(path)
    except OSError as exc:
        raise QuiverFormatError(f"cannot read {path}: {exc.strerror}") from exc


def _load_cluster(path: str):
    return as_cluster_quiver(_load(path).quiver)


def cmd_validate(args) -> int:
    p = _load(args.file)
    report = validate_gentle(p)
    payload = {"ok": report.ok, "violations": [{"clause": v.clause, "witness": v.witness}
                                               for v in report.violations]}
    _emit(args, payload, "ok" if report.ok else str(report))
    return 0 if report.ok else 1


def _require_gentle(p: GentlePresentation) -> None:
    report = validate_gentle(p)
    if not report.ok:
        raise DomainError("presentation is not gentle:\n" + str(report))


def cmd_cmaus(args) -> int:
    p = _load(args.file)
    _require_gentle(p)
    aus = cm_auslander(p)
    payload = presentation_to_json(aus)
    payload["cycles"] = [list(c.arrows) for c in critical_cycles(p)]
    payload["gorenstein_projectives"] = list(gorenstein_projectives(p).labels)
    _emit(args, payload, serialize_presentation(aus).rstrip("\n"))
    return 0


def cmd_strings(args) -> int:
    p = _load(args.file)
    _require_gentle(p)
    strings = enumerate_strings(p, args.string_cap)
    rows = [(format_string(w), dimension_vector(p, w)) for w in strings]
    payload = {"count": len(rows), "strings": [{"string": s, "dim": d} for s, d in rows]}
    text = "\n".join(f"{s}\t{' '.join(f'{v}:{k}' for v, k in d.items())}" for s, d in rows)
    _emit(args, payload, f"{len(rows)} strings\n{text}")
    return 0


def cmd_bands(args) -> int:
    p = _load(args.file)
    _require_gentle(p)
    band = find_band(p)
    shown = format_string(band) if band is not None else None
    _emit(args, {"band": shown}, shown or "no band")
    return 0


def cmd_repfinite(args) -> int:
    p = _load(args.file)
    _require_gentle(p)
    fin = is_representation_finite(p)
    _emit(args, {"representation_finite": fin}, "representation-finite" if fin else "representation-infinite")
    return 0


def cmd_cartan(args) -> int:
    p = _load(args.file)
    c = cartan_matrix(p)
    text = "\n".join(" ".join(str(x) for x in row) for row in c.matrix) + f"\ndet = {c.det}"
    payload = matrix_to_json(c.matrix, c.labels)
    payload["det"] = str(c.det)
    _emit(args, payload, text)
    return 0


def cmd_coxeter(args) -> int:
    p = _load(args.file)
    chi = coxeter_polynomial(p, strict=False)
    match = match_closed_form(chi)
    factored = format_factors(closed_form_factors(*match)) if match else None
    payload = {"coefficients": poly_to_json(chi), "integral": chi.is_integral,
               "closed_form": {"t": match[0], "s": match[1], "factored": factored} if match else None}
    text = factored if factored else str(chi)
    if factored:
        text += f"\n= {chi}"
    if not chi.is_integral:
        text += "\n(non-integral coefficients)"
    _emit(args, payload, text)
    return 0


def cmd_closed_form(args) -> int:
    chi = coxeter_closed_form(args.t, args.s)
    factored = format_factors(closed_form_factors(args.t, args.s))
    _emit(args, {"t": args.t, "s": args.s, "coefficients": poly_to_json(chi), "factored": factored},
          f"{factored}\n= {chi}")
    return 0


def cmd_mutate(args) -> int:
    p = _load(args.file)
    mutated = fz_mutate(p.quiver, args.vertex)
    ok, _ = is_cluster_tilted_a(mutated)
    out = cluster_relations(mutated) if ok else GentlePresentation(mutated)
    _emit(args, presentation_to_json(out), serialize_presentation(out).rstrip("\n"))
    return 0


def cmd_good_mutations(args) -> int:
    cq = _load_cluster(args.file)
    p = cluster_relations(cq)
    rows = []
    for k in cq.quiver.vertices:
        rows.append({"vertex": k, "type": neighborhood_type(cq, k),
                     "defined": list(defined_mutations(p, k)), "good": is_good_mutation(cq, k)})
    text = "\n".join(f"{r['vertex']}\ttype {r['type']}\tdefined {''.join(r['defined']) or 'none'}\t"
                     f"{'good' if r['good'] else 'bad'}" for r in rows)
    _emit(args, {"vertices": rows}, text)
    return 0


def cmd_derived_class(args) -> int:
    q1 = _load_cluster(args.file)
    q2 = _load_cluster(args.other)
    eq = derived_equivalent(q1, q2)
    payload = {"derived_equivalent": eq, "t": [q1.t, q2.t]}
    text = f"t = {q1.t} vs {q2.t}: {'derived equivalent' if eq else 'not derived equivalent'}"
    if eq and args.witness:
        seq = good_mutation_sequence(q1, q2)
        payload["good_mutation_sequence"] = seq
        if seq is None:
            text += "\nno good-mutation sequence found"
        else:
            text += "\ngood mutations: " + (" ".join(seq) or "(none needed)")
    _emit(args, payload, text)
    return 0


def cmd_hexagons(args) -> int:
    p = _load(args.file)
    n = count_hexagons(p)
    _emit(args, {"hexagons": n}, str(n))
    return 0


def cmd_gen(args) -> int:
    cq = random_cluster_quiver(args.t, args.s, args.seed)
    p = cluster_relations(cq)
    payload = presentation_to_json(p)
    payload["seed"] = args.seed
    _emit(args, payload, f"# t={args.t} s={args.s} seed={args.seed}\n" + serialize_presentation(p).rstrip("\n"))
    return 0


def _iso(text: str) -> IsoClass:
    return IsoClass.parse(text)


def cmd_hall(args) -> int:
    p = _load(args.file)
    _require_gentle(p)
    kind = args.hall_command
    if kind == "number":
        values = {q: hall_number(p, _iso(args.L), _iso(args.M), _iso(args.N), q, args.dim_cap)
                  for q in args.primes}
        payload = {"triple": [args.L, args.M, args.N], "values": values}
        text = "\n".join(f"q={q}: {v}" for q, v in values.items())
    elif kind == "poly":
        poly, values = hall_polynomial(p, _iso(args.L), _iso(args.M), _iso(args.N),
                                       args.primes, args.check_primes, args.dim_cap)
        payload = {"triple": [args.L, args.M, args.N], "values": values,
                   "polynomial": poly_to_json(poly), "verified_at": list(args.check_primes)}
        text = f"{str(poly).replace('x', 'T')}\nverified at q = {', '.join(map(str, args.check_primes))}"
    elif kind == "product":
        q = args.primes[0]
        prod = hall_product(p, _iso(args.M), _iso(args.N), q, args.dim_cap)
        payload = {"q": q, "product": {str(k): v for k, v in prod.items()}}
        text = "\n".join(f"{v} * [{k}]" for k, v in prod.items()) or "0"
    else:
        lines, payload = [], {"reports": []}
        bad = False
        for q in args.primes:
            rep = one_sided_vanishing_report(p, q, args.dim_cap)
            bad |= not rep.ok
            viol = [[str(x) for x in v[:3]] + list(v[3:]) for v in rep.violations]
            payload["reports"].append({"q": q, "checked": rep.checked, "violations": viol})
            lines.append(f"q={q}: {rep.checked} checks, {len(viol)} violations")
        text = "\n".join(lines)
        _emit(args, payload, text)
        return 1 if bad else 0
    _emit(args, payload, text)
    return 0


def cmd_reproduce(args) -> int:
    from .acceptance import run_all

    results = []
    for r in run_all(args.only):
        results.append(r)
        if not args.json:
            print(r.line(), flush=True)
    if args.json:
        print(json.dumps([{"criterion": r.number, "title": r.title, "passed": r.passed,
                           "detail": r.detail, "seconds": round(r.seconds, 3)} for r in results],
                         indent=2))
    else:
        print(f"{sum(r.passed for r in results)}/{len(results)} criteria passed")
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--dim-cap", type=_positive, default=DEFAULT_DIM_CAP)
    common.add_argument("--string-cap", type=_positive, default=DEFAULT_STRING_CAP)
    common.add_argument("--primes", type=_primes, default=(2, 3, 5, 7))
    common.add_argument("--check-primes", type=_primes, default=(11, 13))

    parser = argparse.ArgumentParser(prog="gentle-cm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, file=True):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        if file:
            sp.add_argument("file", help=".quiver file")
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check the gentle axioms")
    add("cmaus", cmd_cmaus, "CM-Auslander presentation")
    add("strings", cmd_strings, "list strings up to inversion")
    add("bands", cmd_bands, "find a band")
    add("repfinite", cmd_repfinite, "decide representation-finiteness")
    add("cartan", cmd_cartan, "Cartan matrix")
    add("coxeter", cmd_coxeter, "Coxeter polynomial")
    sp = add("closed-form", cmd_closed_form, "closed-form Coxeter polynomial for (t, s)", file=False)
    sp.add_argument("t", type=int)
    sp.add_argument("s", type=int)
    sp = add("mutate", cmd_mutate, "Fomin-Zelevinsky mutation")
    sp.add_argument("vertex")
    add("good-mutations", cmd_good_mutations, "classify mutations at every vertex")
    sp = add("derived-class", cmd_derived_class, "compare two cluster-tilted type A quivers")
    sp.add_argument("other", help="second .quiver file")
    sp.add_argument("--witness", action="store_true", help="search a good-mutation sequence")
    add("hexagons", cmd_hexagons, "count oriented chordless 6-cycles")
    sp = add("gen", cmd_gen, "random cluster-tilted type A quiver", file=False)
    sp.add_argument("t", type=int)
    sp.add_argument("s", type=int)

    hall = sub.add_parser("hall", help="Hall numbers over prime fields")
    hsub = hall.add_subparsers(dest="hall_command", required=True)
    for name, operands in (("number", "LMN"), ("poly", "LMN"), ("product", "MN"), ("vanishing-report", "")):
        hp = hsub.add_parser(name, parents=[common])
        hp.add_argument("file")
        for op in operands:
            hp.add_argument(op, help="module as strings separated by ';', e.g. '2*a;e(1)'")
        hp.set_defaults(func=cmd_hall)

    sp = add("reproduce", cmd_reproduce, "run the acceptance suite", file=False)
    sp.add_argument("--only", type=lambda s: {int(x) for x in s.split(",")}, default=None,
                    help="comma-separated criterion numbers")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except GentleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
