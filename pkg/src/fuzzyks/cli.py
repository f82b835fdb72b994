"""Command-line interface: ``fuzzyks <command> ...``.

Exit status is 0 on success, 1 for bad input and 2 when an internal
consistency check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path
from typing import Any, Sequence

from . import classifiers as cl
from .delineation import DEFAULT_MAX_COMPETENCIES, DelineationResult, InvariantViolation, check_witnesses, delineate
from .distributed import check_consistency, cond_gg, cond_ggg, is_mesh, merge, submultimap, zero_restrict
from .fuzzy_core import FuzzySet
from .io import (
    DocumentError,
    document_kind,
    fuzzy_set_to_dict,
    parse_multimap,
    parse_structure,
    serialize_multimap,
    structure_to_dict,
)
from .multimap import (
    FuzzySkillMultimap,
    InvalidMultimapError,
    is_conjunctive,
    is_disjunctive,
    is_fuzzy_skill_function,
)
from .structure import (
    KnowledgeStructure,
    fringes,
    is_accessible,
    is_bi_discriminative,
    is_discriminative,
    is_intersection_closed,
    is_learning_space,
    is_quasi_ordinal,
    is_t0,
    is_t1,
    is_union_closed,
    is_well_graded,
    quotient,
    trace,
)


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# --- conversion to plain data --------------------------------------------


def plain(value: Any) -> Any:
    """Convert results to JSON-ready values with a stable order."""
    if isinstance(value, FuzzySet):
        return fuzzy_set_to_dict(value)
    if isinstance(value, frozenset):
        return sorted(plain(v) for v in value) if all(isinstance(v, str) for v in value) else [plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    return value


def _state(ks: KnowledgeStructure, k) -> list[str]:
    return ks.ordered(k)


def structure_summary(ks: KnowledgeStructure) -> dict[str, Any]:
    return {
        "items": list(ks.items),
        "states": ks.as_lists(),
        "union_closed": is_union_closed(ks),
        "intersection_closed": is_intersection_closed(ks),
        "quasi_ordinal": is_quasi_ordinal(ks),
        "well_graded": is_well_graded(ks),
        "accessible": is_accessible(ks),
        "learning_space": is_learning_space(ks),
        "discriminative": is_discriminative(ks),
        "bi_discriminative": is_bi_discriminative(ks),
        "t0": is_t0(ks),
        "t1": is_t1(ks),
    }


def delineation_doc(result: DelineationResult) -> dict[str, Any]:
    ks = result.structure
    return {
        "items": list(ks.items),
        "states": [
            {"state": _state(ks, k), "witness": fuzzy_set_to_dict(result.witness[k])}
            for k in ks.sorted_states()
        ],
    }


def classification_doc(mm: FuzzySkillMultimap, result: DelineationResult) -> dict[str, Any]:
    return {
        "multimap": {
            "fuzzy_skill_function": is_fuzzy_skill_function(mm),
            "conjunctive": is_conjunctive(mm),
            "disjunctive": is_disjunctive(mm),
        },
        "structure": structure_summary(result.structure),
        "criteria": [
            {
                "criterion": c.name,
                "kind": c.kind,
                "hypothesis_met": True,
                "holds": c.condition,
                "oracle_value": c.oracle,
                "consistent": not c.violated,
                "witness": plain(c.witness),
            }
            for c in cl.classify(mm, result)
        ],
    }


def separability_doc(mm: FuzzySkillMultimap, result: DelineationResult) -> dict[str, Any]:
    return {
        "discriminative": is_discriminative(result.structure),
        "bi_discriminative": is_bi_discriminative(result.structure),
        "reports": [
            {
                "theorem": r.theorem,
                "hypothesis_met": r.hypothesis_met,
                "statements": r.statements,
                "oracle": r.oracle,
                "violations": r.violations,
                "witnesses": plain(r.witnesses),
            }
            for r in cl.separability_reports(mm, result)
        ],
    }


def quotient_doc(ks: KnowledgeStructure) -> dict[str, Any]:
    qr = quotient(ks)
    return {
        "classes": {name: ks.ordered(members) for name, members in qr.classes.items()},
        "structure": structure_to_dict(qr.structure),
        "discriminative": is_discriminative(qr.structure),
    }


# --- file handling --------------------------------------------------------


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def load_multimap(path: str) -> FuzzySkillMultimap:
    try:
        return parse_multimap(_read(path))
    except (DocumentError, InvalidMultimapError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None


def load_structure(path: str, max_competencies: int) -> KnowledgeStructure:
    """A structure document, or the delineation of a multimap document."""
    text = _read(path)
    try:
        if document_kind(text) == "structure":
            return parse_structure(text)
        return delineate(parse_multimap(text), max_competencies).structure
    except (DocumentError, InvalidMultimapError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _delineate(mm: FuzzySkillMultimap, args) -> DelineationResult:
    try:
        result = delineate(mm, args.max_competencies)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    check_witnesses(mm, result)
    return result


def _names(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


# --- commands -------------------------------------------------------------


def cmd_validate(args) -> tuple[dict, int]:
    text = _read(args.file)
    try:
        parse_multimap(text)
    except InvalidMultimapError as exc:
        return {"valid": False, "problems": exc.problems}, 1
    except (DocumentError, ValueError) as exc:
        return {"valid": False, "problems": [str(exc)]}, 1
    return {"valid": True, "problems": []}, 0


def cmd_delineate(args):
    return delineation_doc(_delineate(load_multimap(args.file), args)), 0


def cmd_classify(args):
    mm = load_multimap(args.file)
    return classification_doc(mm, _delineate(mm, args)), 0


def cmd_separability(args):
    mm = load_multimap(args.file)
    return separability_doc(mm, _delineate(mm, args)), 0


def cmd_quotient(args):
    if (args.file is None) == (args.structure is None):
        raise InputError("give either a multimap FILE or --structure FILE")
    if args.structure is not None:
        try:
            ks = parse_structure(_read(args.structure))
        except (DocumentError, ValueError) as exc:
            raise InputError(f"{args.structure}: {exc}") from None
    else:
        ks = _delineate(load_multimap(args.file), args).structure
    return quotient_doc(ks), 0


def cmd_fringes(args):
    mm = load_multimap(args.file)
    result = _delineate(mm, args)
    ks = result.structure
    state = frozenset(_names(args.state))
    if state not in ks.states:
        raise InputError(f"{sorted(state)} is not a state of the delineated structure")
    report = fringes(ks, state)
    doc: dict[str, Any] = {
        "state": ks.ordered(state),
        "inner": ks.ordered(report.inner),
        "outer": ks.ordered(report.outer),
        "fringe": ks.ordered(report.fringe),
    }
    if cl.cond_ks_molecule(mm):
        doc["outer_witnesses"] = {
            q: plain(cl.outer_fringe_witness(mm, result, state, q)) for q in ks.items if q not in state
        }
        doc["inner_witnesses"] = {
            q: plain(cl.inner_fringe_witness(mm, result, state, q)) for q in ks.items if q in state
        }
    return doc, 0


def cmd_merge(args):
    parts = [load_multimap(p) for p in args.files]
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            mr = merge(parts, permissive=args.permissive)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    return serialize_multimap(mr.merged), 0


def cmd_mesh(args):
    parent = load_structure(args.parent, args.max_competencies)
    parts = [load_structure(p, args.max_competencies) for p in args.part]
    traces = []
    for p in parts:
        if not p.domain <= parent.domain:
            raise InputError(f"part items {sorted(p.domain - parent.domain)} are not in the parent")
        traces.append(structure_to_dict(trace(parent, p.items)))
    return {
        "mesh": is_mesh(parent, parts),
        "parts": [structure_to_dict(p) for p in parts],
        "traces": traces,
    }, 0


def cmd_restrict(args):
    mm = load_multimap(args.file)
    if (args.skills is None) == (args.items is None):
        raise InputError("give exactly one of --skills or --items")
    try:
        if args.skills is not None:
            out = zero_restrict(mm, _names(args.skills), strict=args.strict)
        else:
            out = submultimap(mm, _names(args.items))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return serialize_multimap(out), 0


def cmd_report(args):
    mm = load_multimap(args.file)
    result = _delineate(mm, args)
    return {
        "delineation": delineation_doc(result),
        "classification": classification_doc(mm, result),
        "separability": separability_doc(mm, result),
        "quotient": quotient_doc(result.structure),
    }, 0


def cmd_consistency(args):
    parts = [load_multimap(p) for p in args.files]
    try:
        cr = check_consistency(parts, permissive=args.permissive, max_competencies=args.max_competencies)
        mr = merge(parts, permissive=True) if args.permissive else merge(parts)
    except ValueError as exc:
        raise InputError(str(exc)) from None

    def merge_report(rep):
        return {
            "distributed": rep.distributed,
            "parts": [
                {"statement1": c.statement1, "statement2": c.statement2, "trace_relation": c.trace_relation}
                for c in rep.components
            ],
            "violations": rep.violations,
        }

    return {
        "consistent": cr.consistent,
        "merged": structure_to_dict(cr.merged),
        "parts": [structure_to_dict(p) for p in cr.parts],
        "traces": [structure_to_dict(t) for t in cr.traces],
        "local_agreement": merge_report(cond_gg(mr, cr.merged)),
        "skill_confinement": merge_report(cond_ggg(mr, cr.merged)),
    }, 0


# --- output ---------------------------------------------------------------


def render_table(doc: Any, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(doc, dict):
        for key, value in doc.items():
            if isinstance(value, (dict, list)) and value and not _flat(value):
                lines.append(f"{pad}{key}:")
                lines.append(render_table(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_cell(value)}")
    elif isinstance(doc, list):
        for value in doc:
            if isinstance(value, (dict, list)) and not _flat(value):
                lines.append(f"{pad}-")
                lines.append(render_table(value, indent + 1))
            else:
                lines.append(f"{pad}- {_cell(value)}")
    else:
        lines.append(f"{pad}{_cell(doc)}")
    return "\n".join(lines)


def _flat(value) -> bool:
    if isinstance(value, dict):
        return all(not isinstance(v, (dict, list)) for v in value.values())
    return all(not isinstance(v, (dict, list)) or _flat(v) and isinstance(v, list) for v in value)


def _cell(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "-"
    if isinstance(value, list):
        return "{" + ", ".join(_cell(v) for v in value) + "}"
    if isinstance(value, dict):
        return ", ".join(f"{k}={_cell(v)}" for k, v in value.items()) or "{}"
    return str(value)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fuzzyks", description="Knowledge structures delineated by fuzzy skill multimaps.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--max-competencies", type=int, default=DEFAULT_MAX_COMPETENCIES)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check a multimap document").add_argument("file")
    add("delineate", cmd_delineate, "list the delineated states with witnesses").add_argument("file")
    add("classify", cmd_classify, "structural-class criteria against the delineation").add_argument("file")
    add("separability", cmd_separability, "item separability criteria").add_argument("file")
    p = add("quotient", cmd_quotient, "merge items carrying the same information")
    p.add_argument("file", nargs="?")
    p.add_argument("--structure")
    p = add("fringes", cmd_fringes, "inner and outer fringe of a state")
    p.add_argument("file")
    p.add_argument("--state", required=True, help="comma-separated items; empty for the empty state")
    p = add("merge", cmd_merge, "merge component multimaps into one document")
    p.add_argument("files", nargs="+")
    p.add_argument("--permissive", action="store_true", help="accept parts that are not fuzzy skill functions")
    p = add("consistency", cmd_consistency, "compare the merged delineation with the parts")
    p.add_argument("files", nargs="+")
    p.add_argument("--permissive", action="store_true")
    p = add("mesh", cmd_mesh, "check that a parent structure traces to each part")
    p.add_argument("--parent", required=True)
    p.add_argument("--part", required=True, action="append")
    p = add("restrict", cmd_restrict, "restrict a multimap to some skills or items")
    p.add_argument("file")
    p.add_argument("--skills")
    p.add_argument("--items")
    p.add_argument("--strict", action="store_true", help="fail if a competency vanishes")
    add("report", cmd_report, "every analysis of a multimap").add_argument("file")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc, code = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    if isinstance(doc, str):
        sys.stdout.write(doc)
    elif args.format == "json":
        print(json.dumps(plain(doc), indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print(render_table(plain(doc)))
    return code


if __name__ == "__main__":
    sys.exit(main())
