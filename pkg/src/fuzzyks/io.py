"""JSON documents for multimaps and knowledge structures.

A multimap document is ``{"items": [...], "skills": [...], "mu": {item:
[{skill: "grade"}, ...]}}``; omitted skills have grade 0.  A structure
document is ``{"items": [...], "states": [[...], ...]}``.  Grades are
decimal strings so documents round-trip exactly.
"""

from __future__ import annotations

import json
from typing import Any

from .fuzzy_core import FuzzySet, SkillDomain, format_grade, parse_grade
from .multimap import FuzzySkillMultimap
from .structure import KnowledgeStructure


class DocumentError(ValueError):
    pass


def _load(text: str) -> dict[str, Any]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise DocumentError("document must be a single JSON object")
    return doc


def _string_list(doc: dict, key: str) -> list[str]:
    value = doc.get(key)
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise DocumentError(f'"{key}" must be a list of strings')
    return value


def document_kind(text: str) -> str:
    """``"multimap"`` or ``"structure"``, by which keys the document carries."""
    doc = _load(text)
    if "mu" in doc:
        return "multimap"
    if "states" in doc:
        return "structure"
    raise DocumentError('document has neither "mu" nor "states"')


def multimap_from_dict(doc: dict[str, Any]) -> FuzzySkillMultimap:
    extra = set(doc) - {"items", "skills", "mu"}
    if extra:
        raise DocumentError(f"unexpected keys {sorted(extra)}")
    items = _string_list(doc, "items")
    skills = _string_list(doc, "skills")
    mu = doc.get("mu")
    if not isinstance(mu, dict):
        raise DocumentError('"mu" must map items to lists of competencies')
    try:
        domain = SkillDomain(tuple(skills))
    except ValueError as exc:
        raise DocumentError(str(exc)) from None
    families = {}
    for q, fam in mu.items():
        if not isinstance(fam, list):
            raise DocumentError(f"competencies of {q} must be a list")
        comps = []
        for comp in fam:
            if not isinstance(comp, dict):
                raise DocumentError(f"competency of {q} must be an object")
            for s in comp:
                if s not in domain:
                    raise DocumentError(f"unknown skill {s!r} in a competency of {q}")
            try:
                comps.append(FuzzySet.from_mapping(domain, {s: parse_grade(g) for s, g in comp.items()}))
            except ValueError as exc:
                raise DocumentError(f"{exc} in a competency of {q}") from None
        families[q] = tuple(comps)
    return FuzzySkillMultimap(tuple(items), domain, families)


def parse_multimap(text: str) -> FuzzySkillMultimap:
    return multimap_from_dict(_load(text))


def multimap_to_dict(mm: FuzzySkillMultimap) -> dict[str, Any]:
    return {
        "items": list(mm.items),
        "skills": list(mm.skills),
        "mu": {
            q: [{s: format_grade(g) for s, g in c.as_mapping().items() if g} for c in mm.mu[q]]
            for q in mm.items
        },
    }


def serialize_multimap(mm: FuzzySkillMultimap) -> str:
    return json.dumps(multimap_to_dict(mm), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def structure_from_dict(doc: dict[str, Any]) -> KnowledgeStructure:
    items = _string_list(doc, "items")
    states = doc.get("states")
    if not isinstance(states, list) or not all(
        isinstance(k, list) and all(isinstance(q, str) for q in k) for k in states
    ):
        raise DocumentError('"states" must be a list of lists of item names')
    known = set(items)
    for k in states:
        unknown = set(k) - known
        if unknown:
            raise DocumentError(f"state mentions unknown items {sorted(unknown)}")
    try:
        return KnowledgeStructure(tuple(items), frozenset(frozenset(k) for k in states))
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def parse_structure(text: str) -> KnowledgeStructure:
    return structure_from_dict(_load(text))


def structure_to_dict(ks: KnowledgeStructure) -> dict[str, Any]:
    return {"items": list(ks.items), "states": ks.as_lists()}


def serialize_structure(ks: KnowledgeStructure) -> str:
    return json.dumps(structure_to_dict(ks), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def fuzzy_set_to_dict(fs: FuzzySet) -> dict[str, str]:
    return {s: format_grade(g) for s, g in fs.as_mapping().items() if g}
