"""Restriction, merging and mesh checks for multimaps spread over components.

Statements quantified over every fuzzy set T are decided on finite probe
families.  For a mask M and a pool of competencies, write J(T) for the join
of the pool members below T.  A competency lies below T (resp. T ∧ M) iff it
lies below J(T) (resp. J(T) ∧ M), so both sides of each identity take the
same value at T and at J(T); the joins of pool sub-families are therefore
an exact probe family.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .delineation import DEFAULT_MAX_COMPETENCIES, Encoded, delineate, problem_function
from .fuzzy_core import FuzzySet, SkillDomain
from .multimap import FuzzySkillMultimap, InvalidMultimapError, comparable_pair, is_fuzzy_skill_function
from .structure import KnowledgeStructure, trace


class MergeError(ValueError):
    pass


def skill_mask(domain: SkillDomain, skills: Iterable[str]) -> FuzzySet:
    """Grade 1 on ``skills`` and 0 elsewhere."""
    skills = set(skills)
    unknown = skills - set(domain.skills)
    if unknown:
        raise ValueError(f"unknown skills {sorted(unknown)}")
    return FuzzySet.crisp(domain, skills)


def zero_restrict(mm: FuzzySkillMultimap, skills: Iterable[str], strict: bool = False) -> FuzzySkillMultimap:
    """Cut every competency down to ``skills`` and re-base it on that sub-domain.

    Competencies that become zero are dropped and duplicates merged.  With
    ``strict`` any competency vanishing is an error.
    """
    keep = set(skills)
    if not keep:
        raise ValueError("restriction needs at least one skill")
    unknown = keep - set(mm.skills)
    if unknown:
        raise ValueError(f"unknown skills {sorted(unknown)}")
    sub = SkillDomain(tuple(s for s in mm.skills if s in keep))
    families = {}
    for q in mm.items:
        cut = [FuzzySet(sub, tuple(c[s] for s in sub.skills)) for c in mm.mu[q]]
        if strict and any(c.is_zero() for c in cut):
            raise ValueError(f"a competency of {q} vanishes on the retained skills")
        families[q] = tuple(dict.fromkeys(c for c in cut if not c.is_zero()))
        if not families[q]:
            raise InvalidMultimapError([f"every competency of {q} vanishes on the retained skills"])
    return FuzzySkillMultimap(mm.items, sub, families)


def submultimap(mm: FuzzySkillMultimap, items: Iterable[str]) -> FuzzySkillMultimap:
    keep = set(items)
    if not keep:
        raise ValueError("submultimap needs at least one item")
    unknown = keep - set(mm.items)
    if unknown:
        raise ValueError(f"unknown items {sorted(unknown)}")
    order = tuple(q for q in mm.items if q in keep)
    return FuzzySkillMultimap(order, mm.domain, {q: mm.mu[q] for q in order})


def extend_by_zeros(family: Iterable[FuzzySet], domain: SkillDomain) -> tuple[FuzzySet, ...]:
    """Re-base each competency on a larger domain, grade 0 on the new skills."""
    family = tuple(family)
    for c in family:
        missing = set(c.domain.skills) - set(domain.skills)
        if missing:
            raise ValueError(f"target domain lacks skills {sorted(missing)}")
    return tuple(c.rebase(domain) for c in family)


@dataclass(frozen=True, eq=False)
class MergeResult:
    merged: FuzzySkillMultimap
    parts: tuple[FuzzySkillMultimap, ...]
    extended: tuple[dict[str, tuple[FuzzySet, ...]], ...]
    masks: tuple[FuzzySet, ...]

    @property
    def is_distributed(self) -> bool:
        """Whether the merge is itself a fuzzy skill function."""
        return is_fuzzy_skill_function(self.merged)

    def items_of(self, i: int) -> tuple[str, ...]:
        return self.parts[i].items


def merge(parts: Sequence[FuzzySkillMultimap], permissive: bool = False) -> MergeResult:
    """Union of the zero-extended competency families of the parts.

    Skills are identified by name across parts.  Each part must be a fuzzy
    skill function; ``permissive`` downgrades that check to a warning.
    """
    parts = tuple(parts)
    if not parts:
        raise MergeError("nothing to merge")
    for i, part in enumerate(parts):
        bad = comparable_pair(part)
        if bad is not None:
            q, c, d = bad
            msg = f"part {i + 1} is not a fuzzy skill function: competencies {c} and {d} of {q} are comparable"
            if not permissive:
                raise MergeError(msg)
            warnings.warn(msg, stacklevel=2)
    items = tuple(dict.fromkeys(q for p in parts for q in p.items))
    domain = SkillDomain(tuple(dict.fromkeys(s for p in parts for s in p.skills)))
    extended = tuple({q: extend_by_zeros(p.mu[q], domain) for q in p.items} for p in parts)
    families = {q: tuple(dict.fromkeys(c for ext in extended for c in ext.get(q, ()))) for q in items}
    masks = tuple(skill_mask(domain, p.skills) for p in parts)
    return MergeResult(FuzzySkillMultimap(items, domain, families), parts, extended, masks)


def component_problem_function(mr: MergeResult, i: int, skills: FuzzySet) -> frozenset[str]:
    """Items of part i having an extended competency of that part below ``skills``."""
    if skills.domain != mr.merged.domain:
        raise ValueError("incompatible skill domains")
    ext = mr.extended[i]
    return frozenset(q for q in ext if any(c <= skills for c in ext[q]))


def component_structure(mr: MergeResult, i: int, max_competencies: int = DEFAULT_MAX_COMPETENCIES) -> KnowledgeStructure:
    return delineate(mr.parts[i], max_competencies).structure


def is_mesh(parent: KnowledgeStructure, parts: Sequence[KnowledgeStructure]) -> bool:
    """Items are the union of the parts' items and every part is a trace of the parent."""
    if parent.domain != frozenset().union(*(p.domain for p in parts)):
        return False
    return all(trace(parent, p.items).states == p.states for p in parts)


@dataclass
class ConsistencyReport:
    merged: KnowledgeStructure
    parts: list[KnowledgeStructure]
    traces: list[KnowledgeStructure]

    @property
    def consistent(self) -> bool:
        return all(t.states == p.states for t, p in zip(self.traces, self.parts))


def check_consistency(
    parts: Sequence[FuzzySkillMultimap],
    permissive: bool = False,
    max_competencies: int = DEFAULT_MAX_COMPETENCIES,
) -> ConsistencyReport:
    """Whether the delineation of the merge is a mesh of the parts' delineations."""
    mr = merge(parts, permissive=permissive)
    ks = delineate(mr.merged, max_competencies).structure
    structures = [delineate(p, max_competencies).structure for p in mr.parts]
    return ConsistencyReport(ks, structures, [trace(ks, s.items) for s in structures])


# --- local versus global problem functions --------------------------------


def _probe_codes(enc: Encoded, mask_code: tuple[int, ...] | None = None):
    pool = range(len(enc.codes))
    if mask_code is not None:
        pool = [k for k in pool if all(a <= b for a, b in zip(enc.codes[k], mask_code))]
    return list(enc.joins(pool))


def _meet(a, b):
    return tuple(x if x <= y else y for x, y in zip(a, b))


@dataclass
class ComponentCheck:
    part: int
    statement1: bool
    statement2: bool
    trace_relation: bool
    witness1: object = None
    witness2: object = None


@dataclass
class MergeReport:
    proposition: str
    distributed: bool
    components: list[ComponentCheck] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)


def gg_statement1(mr: MergeResult, i: int):
    """``(q, C)`` with q in part i, C ≤ mask_i in mu(q) but C not an extended competency of part i."""
    mask = mr.masks[i]
    for q in mr.items_of(i):
        for c in mr.merged.mu[q]:
            if c <= mask and c not in mr.extended[i][q]:
                return q, c
    return None


def ggg_statement1(mr: MergeResult, i: int):
    """``(q, C)`` with q in part i and C in mu(q) not below mask_i."""
    mask = mr.masks[i]
    for q in mr.items_of(i):
        for c in mr.merged.mu[q]:
            if not c <= mask:
                return q, c
    return None


def _scan(mr: MergeResult, i: int, codes, predicate):
    """First probe T where ``predicate(T)`` fails."""
    enc = Encoded(mr.merged)
    for code in codes:
        t = enc.decode(code)
        if not predicate(t):
            return t
    return None


def gg_statement2(mr: MergeResult, i: int):
    """A T with ``p*_i(T ∧ M_i) != p(T ∧ M_i) ∩ Q_i``; probes are joins of pool members below M_i."""
    enc = Encoded(mr.merged)
    mask = mr.masks[i]
    qi = frozenset(mr.items_of(i))
    codes = _probe_codes(enc, enc.encode(mask))
    return _scan(
        mr, i, codes,
        lambda t: component_problem_function(mr, i, t & mask) == problem_function(mr.merged, t & mask) & qi,
    )


def ggg_statement2(mr: MergeResult, i: int):
    """A T with ``p(T ∧ M_i) ∩ Q_i != p(T) ∩ Q_i``; probes are joins of pool sub-families."""
    enc = Encoded(mr.merged)
    mask = mr.masks[i]
    qi = frozenset(mr.items_of(i))
    return _scan(
        mr, i, _probe_codes(enc),
        lambda t: problem_function(mr.merged, t & mask) & qi == problem_function(mr.merged, t) & qi,
    )


def cond_gg(mr: MergeResult, structure: KnowledgeStructure | None = None) -> MergeReport:
    """Local problem functions agreeing with the global one below each mask.

    The two statements are claimed equivalent, and either is claimed to give
    ``K_i ⊆ K|Q_i``.  The reverse direction needs the merge to be a fuzzy
    skill function, so it is only checked there.
    """
    ks = structure or delineate(mr.merged).structure
    report = MergeReport("gg", mr.is_distributed)
    for i in range(len(mr.parts)):
        w1, w2 = gg_statement1(mr, i), gg_statement2(mr, i)
        local = component_structure(mr, i)
        included = local.states <= trace(ks, local.items).states
        report.components.append(ComponentCheck(i, w1 is None, w2 is None, included, w1, w2))
        if w1 is None and w2 is not None:
            report.violations.append(f"part {i + 1}: (1) holds but (2) fails")
        if report.distributed and w2 is None and w1 is not None:
            report.violations.append(f"part {i + 1}: (2) holds but (1) fails")
        if (w1 is None or w2 is None) and not included:
            report.violations.append(f"part {i + 1}: structure not included in the trace")
    return report


def cond_ggg(mr: MergeResult, structure: KnowledgeStructure | None = None) -> MergeReport:
    """Global problem function on Q_i only seeing the skills of part i.

    The statements are checked for equivalence (reverse direction on fuzzy
    skill functions only).  ``trace_relation`` records whether
    ``K_i == K|Q_i``; a mismatch while the statements hold is reported as a
    violation of the claimed consequence.
    """
    ks = structure or delineate(mr.merged).structure
    report = MergeReport("ggg", mr.is_distributed)
    for i in range(len(mr.parts)):
        w1, w2 = ggg_statement1(mr, i), ggg_statement2(mr, i)
        local = component_structure(mr, i)
        equal = local.states == trace(ks, local.items).states
        report.components.append(ComponentCheck(i, w1 is None, w2 is None, equal, w1, w2))
        if w1 is None and w2 is not None:
            report.violations.append(f"part {i + 1}: (1) holds but (2) fails")
        if report.distributed and w2 is None and w1 is not None:
            report.violations.append(f"part {i + 1}: (2) holds but (1) fails")
        if (w1 is None or w2 is None) and not equal:
            report.violations.append(f"part {i + 1}: structure differs from the trace")
    return report


def component_union_violation(mr: MergeResult, extra: Iterable[FuzzySet] = ()):
    """First T breaking the chain of inclusions or the union identity for the component problem functions."""
    extra = list(extra)
    mm = mr.merged
    for i, mask in enumerate(mr.masks):
        for q in mr.items_of(i):
            for c in mm.mu[q]:
                if not (c & mask) <= c:
                    return "mask below competency", i, None
    enc = Encoded(mm, [g for t in extra for g in t.grades])
    position = {q: k for k, q in enumerate(mm.items)}
    parts = []
    for i, mask in enumerate(mr.masks):
        qi = 0
        ext = []
        for q, family in mr.extended[i].items():
            qi |= 1 << position[q]
            ext.append((1 << position[q], [enc.encode(c) for c in family]))
        parts.append((enc.encode(mask), qi, ext))
    probes = list(_probe_codes(enc)) + [enc.encode(t) for t in extra]
    for t in probes:
        whole = enc.state_mask(t)
        union = 0
        for i, (m, qi, ext) in enumerate(parts):
            tm = _meet(t, m)
            local = 0
            for bit, codes in ext:
                if any(all(a <= b for a, b in zip(c, tm)) for c in codes):
                    local |= bit
            masked = enc.state_mask(tm) & qi
            if local & ~masked or masked & ~whole:
                return "inclusions", i, enc.decode(t)
            union |= local
        if union != whole:
            return "union", None, enc.decode(t)
    return None
