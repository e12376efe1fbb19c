"""Command-line surface.

Exit codes: 0 the command succeeded and any checked property holds, 1 a
checked property fails, 2 the input was invalid or a precondition is not met,
3 an internal cross-check found two theoretically equal values disagreeing
(the payload then carries both).

With ``--json`` every command prints ``{"command", "ok", "payload"}``; without
it a plain text rendering of the same payload.  Commands that produce a
document (build-triple, extract-triple, opposite, ext, gen) print the document
itself in text mode.  File arguments that do not name an existing file are
looked up in the bundled fixture corpus (overridable through the
``QUIVALG_FIXTURES`` environment variable).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import fixtures
from .algebra import (MonomialPresentation, check_radicals,
                      check_radicals_quadratic, finiteness, opposite)
from .dsl import (parse_document, serialize_presentation, serialize_triple)
from .errors import (AdmissibilityError, CrossCheckError, DslError,
                     InfiniteDimensionalError, InvalidTripleError,
                     NotQuadraticError, QuivalgError, RadicalConditionError,
                     UndetectedPeriodicityError)
from .ext import ext_presentation, noetherian_report
from .generate import random_triple
from .resolution import (compare_resolution_routes, default_degree_bound,
                         global_dimension, projective_dimension,
                         resolution_minimality, resolution_sequence)
from .sequences import (INFINITY, EventuallyPeriodic, equivalent, is_admissible,
                        parse_sequence, precedes)
from .triples import (Triple, build_algebra, extract_triple,
                      opposite_radical_check, triple_iso, validate_triple)


@dataclass(frozen=True)
class CommandResult:
    command: str
    exit_code: int
    payload: dict


def _dim(value) -> int | str:
    return "infinity" if value == INFINITY else int(value)


def _word(w) -> list[str] | str:
    return list(w.arrows) if w.arrows else f"e({w.base})"


def _seq(seq: EventuallyPeriodic) -> dict:
    return {"prefix": list(seq.prefix), "cycle": list(seq.cycle),
            "literal": str(seq), "dim": _dim(seq.dimension)}


def _read_document(spec: str):
    path = Path(spec)
    if path.is_file():
        return parse_document(path.read_text(encoding="utf-8"))
    if path.name == spec:
        bundled = fixtures.fixtures_dir() / spec
        if bundled.is_file():
            return parse_document(bundled.read_text(encoding="utf-8"))
    raise FileNotFoundError(f"no such file: {spec}")


def _load_presentation(spec: str) -> MonomialPresentation:
    doc = _read_document(spec)
    if not isinstance(doc, MonomialPresentation):
        raise ValueError(f"{spec}: expected a quiver document, got a triple")
    return doc


def _load_triple(spec: str) -> Triple:
    doc = _read_document(spec)
    if not isinstance(doc, Triple):
        raise ValueError(f"{spec}: expected a triple document, got a quiver")
    return doc


def _load_triple_or_extract(spec: str) -> Triple:
    doc = _read_document(spec)
    return doc if isinstance(doc, Triple) else extract_triple(doc)


# ---------------------------------------------------------------- commands

def _cmd_validate(ns) -> tuple[int, dict]:
    doc = _read_document(ns.file)
    if isinstance(doc, MonomialPresentation):
        fin = finiteness(doc)
        return 0, {"kind": "presentation", "name": doc.name,
                   "vertices": len(doc.quiver.vertices),
                   "arrows": len(doc.quiver.arrows),
                   "relations": len(doc.relations),
                   "quadratic": doc.is_quadratic,
                   "finite_dimensional": fin.finite,
                   "total_dimension": fin.total_dimension}
    verdict = validate_triple(doc)
    payload = {"kind": "triple", "name": doc.name, "valid": verdict.valid,
               "clause": verdict.clause, "clause_name": verdict.clause_name,
               "witness": (_word(verdict.witness) if verdict.clause == 1
                           else verdict.witness)}
    return (0 if verdict.valid else 1), payload


def _cmd_check_f(ns) -> tuple[int, dict]:
    pres = _load_presentation(ns.file)
    payload: dict = {"name": pres.name, "method": ns.method}
    holds = None
    if ns.method in ("profile", "both"):
        verdict = check_radicals(pres)
        holds = verdict.holds
        payload["profile"] = {"holds": verdict.holds, "witness": verdict.witness,
                              "total_dimension": verdict.total_dimension}
    if ns.method in ("quadratic", "both"):
        report = check_radicals_quadratic(pres)
        payload["quadratic"] = {
            "holds": report.holds,
            "relation_sources": list(report.relation_sources),
            "unique_exit": {"holds": report.unique_exit,
                            "witness": report.unique_exit_witness},
            "saturated": {"holds": report.saturated,
                          "witness": (list(report.saturated_witness)
                                      if report.saturated_witness else None)},
            "cycles_covered": {"holds": report.cycles_covered,
                               "witness": (_word(report.cycle_witness)
                                           if report.cycle_witness else None)}}
        if holds is not None and holds != report.holds:
            raise CrossCheckError("radical checks disagree", holds, report.holds)
        holds = report.holds
    payload["holds"] = holds
    return (0 if holds else 1), payload


def _cmd_star(ns) -> tuple[int, dict]:
    pres = _load_presentation(ns.file)
    report = resolution_minimality(pres, ns.r)
    payload = {"name": pres.name, "r": report.r, "holds": report.holds,
               "witness": report.witness,
               "simples": [{"vertex": row.vertex, "pd": _dim(row.dimension),
                            "cover_length": row.cover_length, "ok": row.ok}
                           for row in report.rows]}
    return (0 if report.holds else 1), payload


def _cmd_resolve(ns) -> tuple[int, dict]:
    pres = _load_presentation(ns.file)
    result = resolution_sequence(pres, ns.vertex, ns.max_degree)
    orbit = result.orbit
    if orbit.terminated:
        orbit_payload = {"kind": "terminated"}
    elif orbit.truncated:
        orbit_payload = {"kind": "undetected within bound",
                         "bound": len(orbit.states) - 1}
    else:
        orbit_payload = {"kind": "periodic", "entry": orbit.entry,
                         "period": orbit.period}
    payload = {"name": pres.name, "vertex": ns.vertex,
               "prefix": list(result.sequence.prefix) if result.sequence else None,
               "cycle": list(result.sequence.cycle) if result.sequence else None,
               "literal": str(result.sequence) if result.sequence else None,
               "pd": _dim(result.dimension) if result.sequence else None,
               "entries": list(result.entries),
               "truncated": result.truncated,
               "orbit": orbit_payload}
    if ns.verify:
        degree = ns.max_degree if ns.max_degree is not None else default_degree_bound(pres)
        compare_resolution_routes(pres, ns.vertex, degree)
        payload["verified_to_degree"] = degree
    return 0, payload


def _cmd_pdim(ns) -> tuple[int, dict]:
    pres = _load_presentation(ns.file)
    targets = [ns.vertex] if ns.vertex else list(pres.quiver.vertices)
    values = {v: _dim(projective_dimension(pres, v, ns.max_degree)) for v in targets}
    return 0, {"name": pres.name, "pd": values}


def _cmd_gldim(ns) -> tuple[int, dict]:
    pres = _load_presentation(ns.file)
    report = global_dimension(pres, ns.max_degree)
    return 0, {"name": pres.name, "value": _dim(report.value),
               "hereditary": report.hereditary,
               "link_vertices": list(report.link_vertices),
               "link_depth": (None if report.link_depth is None
                              else _dim(report.link_depth)),
               "pd": {v: _dim(d) for v, d in report.per_vertex.items()}}


def _cmd_build_triple(ns) -> tuple[int, dict]:
    t = _load_triple(ns.file)
    pres = build_algebra(t)
    return 0, {"name": pres.name, "document": serialize_presentation(pres),
               "relations": [list(r.arrows) for r in pres.relations]}


def _cmd_extract_triple(ns) -> tuple[int, dict]:
    pres = _load_presentation(ns.file)
    t = extract_triple(pres)
    return 0, {"name": t.name, "document": serialize_triple(t),
               "marked": list(t.marked),
               "rho": {d: v for d, v in t.assignments}}


def _cmd_triple_iso(ns) -> tuple[int, dict]:
    t1 = _load_triple(ns.file)
    t2 = _load_triple(ns.other)
    iso = triple_iso(t1, t2)
    if iso is None:
        return 1, {"isomorphic": False, "vertex_map": None, "arrow_map": None}
    return 0, {"isomorphic": True, "vertex_map": iso.vertex_map,
               "arrow_map": iso.arrow_map}


def _cmd_opposite(ns) -> tuple[int, dict]:
    pres = opposite(_load_presentation(ns.file))
    return 0, {"name": pres.name, "document": serialize_presentation(pres)}


def _cmd_opposite_f(ns) -> tuple[int, dict]:
    t = _load_triple_or_extract(ns.file)
    report = opposite_radical_check(t)
    payload = {"name": t.name, "holds": report.holds,
               "clauses": {c.tag: {"holds": c.holds, "witness": c.witness}
                           for c in report.clauses}}
    return (0 if report.holds else 1), payload


def _cmd_ext(ns) -> tuple[int, dict]:
    pres = _load_presentation(ns.file)
    ext = ext_presentation(pres)
    composable = sum(1 for a in pres.quiver.arrows
                     for b in pres.quiver.outgoing[a.target])
    return 0, {"name": ext.presentation.name,
               "document": serialize_presentation(ext.presentation),
               "relations": [list(r.arrows) for r in ext.relations],
               "companion_arrows": [a.name for a in ext.companion.arrows],
               "counts": {"ext_relations": len(ext.relations),
                          "source_relations": len(pres.relations),
                          "composable_pairs": composable}}


def _cmd_noetherian(ns) -> tuple[int, dict]:
    pres = _load_presentation(ns.file)
    report = noetherian_report(pres)
    return 0, {"name": pres.name,
               "left": {"holds": report.left_holds,
                        "criterion": {"holds": report.left_criterion.holds,
                                      "witness": report.left_criterion.witness}},
               "right": {"kind": report.right_kind,
                         "criterion": (None if report.right_criterion is None
                                       else {"holds": report.right_criterion.holds,
                                             "witness": report.right_criterion.witness}),
                         "decided_not_noetherian": report.decided_not_noetherian},
               "ext_finite_dimensional": report.ext_finite_dimensional}


def _cmd_compare_seq(ns) -> tuple[int, dict]:
    try:
        a = parse_sequence(ns.a)
        b = parse_sequence(ns.b)
    except ValueError as exc:
        raise AdmissibilityError(str(exc)) from exc
    for label, seq in (("a", a), ("b", b)):
        report = is_admissible(seq)
        if not report.admissible:
            raise AdmissibilityError(
                f"sequence {label}={seq} is not admissible "
                f"(violation at index {report.violation})")
    ab = precedes(a, b, ns.r)
    ba = precedes(b, a, ns.r)
    payload = {"a": _seq(a), "b": _seq(b), "r": ns.r,
               "precedes_ab": ab, "precedes_ba": ba,
               "equivalent": equivalent(a, b, ns.r)}
    return (0 if ab else 1), payload


def _cmd_gen(ns) -> tuple[int, dict]:
    t = random_triple(ns.seed, ns.vertices, ns.arrows, name=f"gen_{ns.seed}")
    return 0, {"name": t.name, "seed": ns.seed,
               "document": serialize_triple(t)}


# ---------------------------------------------------------------- plumbing

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quivalg",
        description="Quadratic monomial quiver algebras: radical structure, "
                    "minimal resolutions, triples, Ext presentations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, *, files=1, json_flag=True):
        p = sub.add_parser(name, help=help_text)
        if files >= 1:
            p.add_argument("file", help="document path or bundled fixture name")
        if files >= 2:
            p.add_argument("other", help="second document")
        if json_flag:
            p.add_argument("--json", action="store_true",
                           help="print a JSON envelope")
        p.set_defaults(func=func)
        return p

    add("validate", _cmd_validate, "parse a document and report its shape")

    p = add("check-f", _cmd_check_f,
            "is every projective radical projective or simple?")
    p.add_argument("--method", choices=["profile", "quadratic", "both"],
                   default="profile")

    p = add("star", _cmd_star,
            "is every simple's resolution as small as the slack-r preorder allows?")
    p.add_argument("--r", type=int, default=2)

    p = add("resolve", _cmd_resolve,
            "length sequence of the minimal resolution of a simple")
    p.add_argument("--vertex", required=True)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--verify", action="store_true",
                   help="cross-check the chain route against the explicit route")

    p = add("pdim", _cmd_pdim, "projective dimension of simples")
    p.add_argument("--vertex", default=None)
    p.add_argument("--max-degree", type=int, default=None)

    p = add("gldim", _cmd_gldim, "global dimension with the method report")
    p.add_argument("--max-degree", type=int, default=None)

    add("build-triple", _cmd_build_triple,
        "attach assignment arrows and relations to a triple")
    add("extract-triple", _cmd_extract_triple,
        "recover the triple of a presentation")
    add("triple-iso", _cmd_triple_iso, "search for a triple isomorphism", files=2)
    add("opposite", _cmd_opposite, "reverse all arrows and relations")
    add("opposite-f", _cmd_opposite_f,
        "does the opposite algebra keep radicals projective or simple?")
    add("ext", _cmd_ext, "presentation of the Ext algebra")
    add("noetherian", _cmd_noetherian, "noetherian verdicts for the Ext algebra")

    p = add("compare-seq", _cmd_compare_seq,
            "compare two sequence literals in the slack-r preorder", files=0)
    p.add_argument("a", help="sequence literal, e.g. [2,2,1] or [2|2,3]")
    p.add_argument("b", help="sequence literal")
    p.add_argument("--r", type=int, default=2)

    p = add("gen", _cmd_gen, "emit a random valid triple document", files=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--arrows", type=int, default=None)

    return parser


def run(argv: list[str]) -> CommandResult:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return CommandResult("(usage)", code, {"error": {"kind": "usage"}})
    command = ns.command
    try:
        exit_code, payload = ns.func(ns)
    except DslError as exc:
        return CommandResult(command, 2, {"error": {
            "kind": "syntax", "message": exc.message,
            "line": exc.line, "column": exc.column}})
    except InfiniteDimensionalError as exc:
        return CommandResult(command, 2, {"error": {
            "kind": "infinite_dimensional", "cycle": _word(exc.cycle),
            "message": str(exc)}})
    except RadicalConditionError as exc:
        return CommandResult(command, 2, {"error": {
            "kind": "radical_condition", "witness": exc.witness,
            "message": str(exc)}})
    except InvalidTripleError as exc:
        return CommandResult(command, 2, {"error": {
            "kind": "invalid_triple", "clause": exc.clause,
            "witness": exc.witness if isinstance(exc.witness, str)
            else _word(exc.witness), "message": str(exc)}})
    except NotQuadraticError as exc:
        return CommandResult(command, 2, {"error": {
            "kind": "not_quadratic", "message": str(exc)}})
    except AdmissibilityError as exc:
        return CommandResult(command, 2, {"error": {
            "kind": "not_admissible", "message": str(exc)}})
    except UndetectedPeriodicityError as exc:
        return CommandResult(command, 2, {"error": {
            "kind": "undetected_periodicity", "vertex": exc.vertex,
            "bound": exc.bound, "entries": list(exc.entries),
            "message": str(exc)}})
    except CrossCheckError as exc:
        return CommandResult(command, 3, {"error": {
            "kind": "cross_check", "message": str(exc),
            "first": repr(exc.first), "second": repr(exc.second)}})
    except (FileNotFoundError, ValueError, QuivalgError) as exc:
        return CommandResult(command, 2, {"error": {
            "kind": "invalid_input", "message": str(exc)}})
    return CommandResult(command, exit_code, payload)


def _text_lines(value, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}{key}:")
                lines.extend(_text_lines(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {json.dumps(item)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_text_lines(item, indent + 1))
            else:
                lines.append(f"{pad}- {json.dumps(item)}")
    else:
        lines.append(f"{pad}{json.dumps(value)}")
    return lines


def main(argv: list[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    wants_json = "--json" in (sys.argv[1:] if argv is None else argv)
    if wants_json:
        print(json.dumps({"command": result.command,
                          "ok": result.exit_code == 0,
                          "payload": result.payload},
                         indent=2, sort_keys=False))
    else:
        document = result.payload.get("document")
        if document is not None:
            sys.stdout.write(document)
        else:
            print("\n".join(_text_lines(result.payload)))
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
