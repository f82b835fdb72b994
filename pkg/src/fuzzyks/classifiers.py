"""Multimap-side criteria for structural class and item separability.

Each criterion is evaluated on the multimap alone and reported next to the
value computed on the delineated structure (the oracle).  Relationships the
criteria are claimed to have with the oracle are checked per instance; any
that fail are listed as violations instead of being trusted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Any

from .delineation import DelineationResult, Encoded, delineate, problem_function
from .fuzzy_core import FuzzySet
from .multimap import (
    FuzzySkillMultimap,
    global_minimum,
    is_fuzzy_skill_function,
    min_below,
    minimal_competencies,
    molecules_of,
    refines,
)
from .structure import (
    KnowledgeStructure,
    fringes,
    is_bi_discriminative,
    is_discriminative,
    is_intersection_closed,
    is_learning_space,
    is_union_closed,
)

__all__ = [
    "Criterion",
    "SeparabilityReport",
    "refines",
    "classify",
    "cond_ks_molecule",
    "cond_union_base",
    "cond_star",
    "cond_scs_meet",
    "cond_learning_space",
    "separability_fff",
    "separability_ttt",
    "biseparability_tttt",
    "biseparability_13",
    "separability_ccc",
    "separability_reports",
    "fringe_witness_mismatch",
    "outer_fringe_witness",
    "inner_fringe_witness",
]


# --- structural-class criteria -------------------------------------------


def ks_molecule_counterexample(mm: FuzzySkillMultimap):
    """``(q, C)`` with no molecule of mu(q) below C."""
    for q in mm.items:
        mols = [m for m in mm.mu[q] if m.is_molecule()]
        for c in mm.mu[q]:
            if not any(m <= c for m in mols):
                return q, c
    return None


def cond_ks_molecule(mm: FuzzySkillMultimap) -> bool:
    """Every competency of every item contains a molecule competency of the same item."""
    return ks_molecule_counterexample(mm) is None


def union_base_counterexample(mm: FuzzySkillMultimap, ks: KnowledgeStructure | None = None):
    """A state that is no union of ``p(D)`` for minimal D, or such a union that is no state."""
    ks = ks or delineate(mm).structure
    base = {problem_function(mm, d) for fam in minimal_competencies(mm).values() for d in fam}
    spans = _unions(base)
    for k in ks.sorted_states():
        if k not in spans:
            return ("state not a union of minimal-competency states", k)
    for k in sorted(spans - ks.states, key=len):
        return ("union of minimal-competency states is not a state", k)
    return None


def _unions(base) -> set[frozenset]:
    family = {frozenset()}
    for g in base:
        family |= {k | g for k in family}
    return family


def cond_union_base(mm: FuzzySkillMultimap, ks: KnowledgeStructure | None = None) -> bool:
    """States are exactly the unions of ``p(D)`` over minimal competencies D."""
    return union_base_counterexample(mm, ks) is None


def star_counterexample(mm: FuzzySkillMultimap):
    """``(g, P)``: no minimal competency of g lies below any member of P, yet one lies below join(P).

    Only sub-families of the whole minimal pool are enumerated: the condition
    over every sub-domain Q' quantifies over sub-families of that same pool.
    """
    minimal = minimal_competencies(mm)
    pool = list(dict.fromkeys(d for q in mm.items for d in minimal[q]))
    enc = Encoded(mm)
    codes = [enc.encode(d) for d in pool]
    min_codes = [[enc.encode(c) for c in minimal[q]] for q in mm.items]

    def below_mask(code):
        mask = 0
        for i, fam in enumerate(min_codes):
            if any(all(a <= b for a, b in zip(c, code)) for c in fam):
                mask |= 1 << i
        return mask

    single = [below_mask(c) for c in codes]
    n = len(pool)
    joins = [enc.zero] * (1 << n)
    covered = [0] * (1 << n)
    for subset in range(1, 1 << n):
        low = (subset & -subset).bit_length() - 1
        rest = subset & (subset - 1)
        joins[subset] = tuple(a if a >= b else b for a, b in zip(joins[rest], codes[low]))
        covered[subset] = covered[rest] | single[low]
        bad = below_mask(joins[subset]) & ~covered[subset]
        if bad:
            g = mm.items[(bad & -bad).bit_length() - 1]
            return g, tuple(pool[i] for i in range(n) if subset >> i & 1)
    return None


def cond_star(mm: FuzzySkillMultimap) -> bool:
    return star_counterexample(mm) is None


def scs_meet_counterexample(mm: FuzzySkillMultimap):
    """``(q, C1, C2)`` with no competency of q inside ``C1 ∩ C2``."""
    for q in mm.items:
        fam = mm.mu[q]
        for c1, c2 in combinations(fam, 2):
            m = c1 & c2
            if not any(c3 <= m for c3 in fam):
                return q, c1, c2
    return None


def cond_scs_meet(mm: FuzzySkillMultimap) -> bool:
    """Any two competencies of an item have a common lower bound among that item's competencies."""
    return scs_meet_counterexample(mm) is None


def learning_space_counterexample(mm: FuzzySkillMultimap):
    """Why the molecule-based learning-space condition fails, or None.

    Part (3) is decided exactly: for a molecule T and an item x of [T], the
    largest union of brackets inside [T] avoiding x is the union of every
    bracket contained in ``[T] - {x}``.
    """
    bad = ks_molecule_counterexample(mm)
    if bad is not None:
        return ("no molecule below competency", bad)
    mols = molecules_of(mm)
    brackets = {m: problem_function(mm, m) for m in mols}
    for t in mols:
        bt = brackets[t]
        if len(bt) < 2:
            continue
        if not any(
            frozenset().union(*(b for b in brackets.values() if b <= bt - {x})) == bt - {x}
            for x in bt
        ):
            return ("molecule bracket has no one-smaller sub-union", t)
    return None


def cond_learning_space(mm: FuzzySkillMultimap) -> bool:
    return learning_space_counterexample(mm) is None


# --- reports --------------------------------------------------------------


@dataclass
class Criterion:
    name: str
    condition: bool
    oracle: bool
    kind: str  # "equivalence" or "sufficient"
    witness: Any = None

    @property
    def violated(self) -> bool:
        if self.kind == "equivalence":
            return self.condition != self.oracle
        return self.condition and not self.oracle


def classify(mm: FuzzySkillMultimap, result: DelineationResult | None = None) -> list[Criterion]:
    """Every structural-class criterion next to its oracle value."""
    ks = (result or delineate(mm)).structure
    union = is_union_closed(ks)
    rows = [
        ("union_base", union_base_counterexample(mm, ks), union, "equivalence"),
        ("ks_molecule", ks_molecule_counterexample(mm), union, "sufficient"),
        ("star", star_counterexample(mm), union, "sufficient"),
        ("scs_meet", scs_meet_counterexample(mm), is_intersection_closed(ks), "sufficient"),
        ("learning_space", learning_space_counterexample(mm), is_learning_space(ks), "sufficient"),
    ]
    return [Criterion(name, w is None, oracle, kind, w) for name, w, oracle, kind in rows]


@dataclass
class SeparabilityReport:
    """Statement values of one separability theorem on one multimap.

    ``statements`` maps statement labels to truth values (None when the
    theorem's hypothesis fails).  ``violations`` lists the claimed
    relationships between statements that this instance refutes.
    """

    theorem: str
    hypothesis_met: bool
    statements: dict[str, bool | None]
    oracle: dict[str, bool]
    witnesses: dict[str, Any] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)

    @property
    def holds(self) -> bool | None:
        return not self.violations if self.hypothesis_met else None


def _check(report: SeparabilityReport, claims: list[tuple[str, str, str]]) -> SeparabilityReport:
    """Record violated claims of the form (lhs, "<=>" | "=>", rhs)."""
    values = {**report.statements, **report.oracle}
    for lhs, rel, rhs in claims:
        a, b = values[lhs], values[rhs]
        if (rel == "<=>" and a != b) or (rel == "=>" and a and not b):
            report.violations.append(f"{lhs} {rel} {rhs}")
    return report


def _pairs_all(mm, predicate):
    """First unordered pair failing ``predicate(q, r)``, or None."""
    for q, r in combinations(mm.items, 2):
        if not predicate(q, r):
            return q, r
    return None


def _structures(mm, result):
    ks = (result or delineate(mm)).structure
    return {"discriminative": is_discriminative(ks), "bi_discriminative": is_bi_discriminative(ks)}


def separability_fff(mm: FuzzySkillMultimap, result: DelineationResult | None = None) -> SeparabilityReport:
    """Discriminativeness via inclusion, equality and refinement of competency families.

    (2) mu(r) ⊄ mu(q) or mu(q) ⊄ mu(r); (3) mu(q) != mu(r);
    (4) mu(r) ⋠ mu(q) or mu(q) ⋠ mu(r); all over distinct pairs.
    """
    fam = {q: set(mm.mu[q]) for q in mm.items}
    w2 = _pairs_all(mm, lambda q, r: not fam[r] <= fam[q] or not fam[q] <= fam[r])
    w3 = _pairs_all(mm, lambda q, r: fam[q] != fam[r])
    w4 = _pairs_all(mm, lambda q, r: not refines(mm.mu[r], mm.mu[q]) or not refines(mm.mu[q], mm.mu[r]))
    skill_function = is_fuzzy_skill_function(mm)
    report = SeparabilityReport(
        "fff",
        True,
        {"(2)": w2 is None, "(3)": w3 is None, "(4)": w4 is None, "skill_function": skill_function},
        _structures(mm, result),
        {k: w for k, w in (("(2)", w2), ("(3)", w3), ("(4)", w4)) if w is not None},
    )
    claims = [("discriminative", "<=>", "(4)"), ("(4)", "=>", "(2)"), ("(2)", "<=>", "(3)")]
    if skill_function:
        claims += [("(2)", "<=>", "discriminative"), ("(3)", "<=>", "discriminative")]
    return _check(report, claims)


def _minima_table(mm: FuzzySkillMultimap):
    """``{q: [M_{q,C} for C in mu(q)]}``, or None when some least element is missing."""
    table = {}
    for q in mm.items:
        row = [min_below(mm, q, c) for c in mm.mu[q]]
        if any(m is None for m in row):
            return None
        table[q] = row
    return table


def separability_ttt(mm: FuzzySkillMultimap, result: DelineationResult | None = None) -> SeparabilityReport:
    """Discriminativeness through the least competencies below each competency.

    (2) some M_{q,C} differs from every M_{r,D}, or some M_{r,D} differs from every M_{q,C};
    (3) the same with "is not refined by" in place of "differs from".
    """
    oracle = _structures(mm, result)
    table = _minima_table(mm)
    if table is None:
        return SeparabilityReport("ttt", False, {"(2)": None, "(3)": None}, oracle)

    def differs(q, r):
        return any(all(m != n for n in table[r]) for m in table[q])

    def unrefined(q, r):
        return any(not refines([m], table[r]) for m in table[q])

    w2 = _pairs_all(mm, lambda q, r: differs(q, r) or differs(r, q))
    w3 = _pairs_all(mm, lambda q, r: unrefined(q, r) or unrefined(r, q))
    report = SeparabilityReport(
        "ttt", True, {"(2)": w2 is None, "(3)": w3 is None}, oracle,
        {k: w for k, w in (("(2)", w2), ("(3)", w3)) if w is not None},
    )
    return _check(report, [("discriminative", "<=>", "(2)"), ("discriminative", "<=>", "(3)")])


def biseparability_tttt(mm: FuzzySkillMultimap, result: DelineationResult | None = None) -> SeparabilityReport:
    """Bi-discriminativeness through the least competencies below each competency.

    (2) some M_{q,C} differs from every M_{r,E} and some M_{r,D} differs from every M_{q,F};
    (3) the same with "is not refined by".
    """
    oracle = _structures(mm, result)
    table = _minima_table(mm)
    if table is None:
        return SeparabilityReport("tttt", False, {"(2)": None, "(3)": None}, oracle)

    def differs(q, r):
        return any(all(m != n for n in table[r]) for m in table[q])

    def unrefined(q, r):
        return any(not refines([m], table[r]) for m in table[q])

    w2 = _pairs_all(mm, lambda q, r: differs(q, r) and differs(r, q))
    w3 = _pairs_all(mm, lambda q, r: unrefined(q, r) and unrefined(r, q))
    report = SeparabilityReport(
        "tttt", True, {"(2)": w2 is None, "(3)": w3 is None}, oracle,
        {k: w for k, w in (("(2)", w2), ("(3)", w3)) if w is not None},
    )
    return _check(report, [("bi_discriminative", "<=>", "(2)"), ("bi_discriminative", "<=>", "(3)")])


def biseparability_13(mm: FuzzySkillMultimap, result: DelineationResult | None = None) -> SeparabilityReport:
    """Bi-discriminative iff no family refines another: (2) mu(q) ⋠ mu(r) and mu(r) ⋠ mu(q)."""
    w = None
    for q, r in permutations(mm.items, 2):
        if refines(mm.mu[q], mm.mu[r]):
            w = (q, r)  # mu(q) ≼ mu(r)
            break
    report = SeparabilityReport(
        "1-3", True, {"(2)": w is None}, _structures(mm, result), {"(2)": w} if w else {}
    )
    return _check(report, [("bi_discriminative", "<=>", "(2)")])


def separability_ccc(mm: FuzzySkillMultimap, result: DelineationResult | None = None) -> SeparabilityReport:
    """Four-way claim when every family has a least element M_q.

    (3) the M_q are pairwise distinct; (4) the M_q are pairwise incomparable.
    The claimed equivalence of discriminative, bi-discriminative, (3) and (4)
    is checked, not assumed.
    """
    oracle = _structures(mm, result)
    least = {q: global_minimum(mm, q) for q in mm.items}
    if any(m is None for m in least.values()):
        return SeparabilityReport("ccc", False, {"(3)": None, "(4)": None}, oracle)
    w3 = _pairs_all(mm, lambda q, r: least[q] != least[r])
    w4 = _pairs_all(mm, lambda q, r: not least[q] <= least[r] and not least[r] <= least[q])
    report = SeparabilityReport(
        "ccc", True, {"(3)": w3 is None, "(4)": w4 is None}, oracle,
        {k: w for k, w in (("(3)", w3), ("(4)", w4)) if w is not None},
    )
    return _check(
        report,
        [
            ("discriminative", "<=>", "bi_discriminative"),
            ("discriminative", "<=>", "(3)"),
            ("discriminative", "<=>", "(4)"),
            ("bi_discriminative", "<=>", "(3)"),
            ("bi_discriminative", "<=>", "(4)"),
            ("(3)", "<=>", "(4)"),
        ],
    )


def separability_reports(mm: FuzzySkillMultimap, result: DelineationResult | None = None) -> list[SeparabilityReport]:
    result = result or delineate(mm)
    return [f(mm, result) for f in (separability_fff, separability_ttt, biseparability_tttt, biseparability_13, separability_ccc)]


# --- fringes through molecules --------------------------------------------


def _fringe_setup(mm: FuzzySkillMultimap, result: DelineationResult, state):
    if not cond_ks_molecule(mm):
        raise ValueError("fringe witnesses need every competency to contain a molecule competency")
    k = frozenset(state)
    if k not in result.structure.states:
        raise ValueError(f"{sorted(k)} is not a state")
    return k


def outer_fringe_witness(mm: FuzzySkillMultimap, result: DelineationResult, state, item: str) -> FuzzySet | None:
    """A molecule T in mu(item) with ``[T] - K == {item}``; exists iff item is in the outer fringe."""
    k = _fringe_setup(mm, result, state)
    if item in k:
        raise ValueError(f"{item!r} already belongs to the state")
    for m in mm.mu[item]:
        if m.is_molecule() and problem_function(mm, m) - k == {item}:
            return m
    return None


def inner_fringe_witness(mm: FuzzySkillMultimap, result: DelineationResult, state, item: str) -> dict[str, FuzzySet] | None:
    """For each other item of K a molecule whose bracket stays inside ``K - {item}``.

    Exists iff item is in the inner fringe of K; an empty mapping when K == {item}.
    """
    k = _fringe_setup(mm, result, state)
    if item not in k:
        raise ValueError(f"{item!r} does not belong to the state")
    rest = k - {item}
    found = {}
    for q in result.structure.ordered(rest):
        for m in mm.mu[q]:
            if m.is_molecule() and problem_function(mm, m) <= rest:
                found[q] = m
                break
        else:
            return None
    return found


def fringe_witness_mismatch(mm: FuzzySkillMultimap, result: DelineationResult):
    """First state/item where a molecule witness disagrees with the definitional fringe."""
    ks = result.structure
    for k in ks.sorted_states():
        report = fringes(ks, k)
        for q in ks.items:
            if q in k:
                if (inner_fringe_witness(mm, result, k, q) is not None) != (q in report.inner):
                    return "inner", k, q
            elif (outer_fringe_witness(mm, result, k, q) is not None) != (q in report.outer):
                return "outer", k, q
    return None
