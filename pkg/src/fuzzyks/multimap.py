"""Fuzzy skill multimaps (Q, S, mu) and the predicates quantified over them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .fuzzy_core import FuzzySet, GradeLike, SkillDomain


class InvalidMultimapError(ValueError):
    def __init__(self, problems: Sequence[str]):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


def validate(items: Sequence[str], domain: SkillDomain, mu: Mapping[str, Sequence[FuzzySet]]) -> list[str]:
    """List every violated multimap invariant; an empty list means valid."""
    problems = []
    if not items:
        problems.append("empty item set")
    seen = set()
    for q in items:
        if q in seen:
            problems.append(f"duplicate item {q!r}")
        seen.add(q)
    for q in mu:
        if q not in seen:
            problems.append(f"competencies given for unknown item {q!r}")
    for q in items:
        family = mu.get(q, ())
        if not family:
            problems.append(f"empty competency family at {q}")
            continue
        for c in family:
            if c.domain != domain:
                problems.append(f"competency {c} of {q} has a different skill domain")
            elif c.is_zero():
                problems.append(f"zero competency at {q}")
        if len(set(family)) != len(family):
            problems.append(f"duplicate competency at {q}")
    return problems


@dataclass(frozen=True, eq=False)
class FuzzySkillMultimap:
    """Items, a skill domain, and a non-empty family of non-zero competencies per item.

    Families keep their declaration order; equality ignores it.
    """

    items: tuple[str, ...]
    domain: SkillDomain
    mu: Mapping[str, tuple[FuzzySet, ...]]

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))
        mu = {q: tuple(f) for q, f in self.mu.items()}
        problems = validate(self.items, self.domain, mu)
        if problems:
            raise InvalidMultimapError(problems)
        object.__setattr__(self, "mu", {q: mu[q] for q in self.items})

    @classmethod
    def build(
        cls,
        items: Iterable[str],
        skills: Iterable[str],
        mu: Mapping[str, Iterable[Mapping[str, GradeLike]]],
    ) -> FuzzySkillMultimap:
        """Convenience constructor from ``{item: [{skill: grade, ...}, ...]}``."""
        domain = SkillDomain(tuple(skills))
        families = {q: tuple(FuzzySet.from_mapping(domain, c) for c in fam) for q, fam in mu.items()}
        return cls(tuple(items), domain, families)

    @property
    def skills(self) -> tuple[str, ...]:
        return self.domain.skills

    def __getitem__(self, item: str) -> tuple[FuzzySet, ...]:
        return self.mu[item]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FuzzySkillMultimap):
            return NotImplemented
        return (
            set(self.items) == set(other.items)
            and set(self.skills) == set(other.skills)
            and all(
                {c.rebase(self.domain) for c in other.mu[q]} == set(self.mu[q]) for q in self.items
            )
        )

    __hash__ = None  # type: ignore[assignment]

    def pool(self) -> tuple[FuzzySet, ...]:
        """Distinct competencies over all items, in first-appearance order."""
        return tuple(dict.fromkeys(c for q in self.items for c in self.mu[q]))

    def grade_values(self) -> set:
        return {g for c in self.pool() for g in c.grades}

    def __repr__(self) -> str:
        fams = ", ".join(f"{q}: [{', '.join(map(str, self.mu[q]))}]" for q in self.items)
        return f"FuzzySkillMultimap(skills={list(self.skills)}, {fams})"


def is_fuzzy_skill_function(mm: FuzzySkillMultimap) -> bool:
    return comparable_pair(mm) is None


def comparable_pair(mm: FuzzySkillMultimap) -> tuple[str, FuzzySet, FuzzySet] | None:
    """First ``(q, C, D)`` with distinct comparable ``C <= D`` in mu(q), if any."""
    for q in mm.items:
        fam = mm.mu[q]
        for c in fam:
            for d in fam:
                if c != d and c <= d:
                    return q, c, d
    return None


def is_disjunctive(mm: FuzzySkillMultimap) -> bool:
    return all(c.is_molecule() for q in mm.items for c in mm.mu[q])


def is_conjunctive(mm: FuzzySkillMultimap) -> bool:
    return all(len(mm.mu[q]) == 1 for q in mm.items)


def minimal_elements(family: Iterable[FuzzySet]) -> tuple[FuzzySet, ...]:
    family = tuple(dict.fromkeys(family))
    return tuple(c for c in family if not any(d < c for d in family))


def minimal_competencies(mm: FuzzySkillMultimap) -> dict[str, tuple[FuzzySet, ...]]:
    """Per item, the inclusion-minimal competencies (an antichain, possibly several)."""
    return {q: minimal_elements(mm.mu[q]) for q in mm.items}


def min_below(mm: FuzzySkillMultimap, item: str, competency: FuzzySet) -> FuzzySet | None:
    """The least element of ``{D in mu(item) : D <= competency}``, or None if there is none."""
    fam = mm.mu[item]
    if competency not in fam:
        raise ValueError(f"{competency} is not a competency of {item!r}")
    below = [d for d in fam if d <= competency]
    least = [m for m in below if all(m <= d for d in below)]
    return least[0] if least else None


def global_minimum(mm: FuzzySkillMultimap, item: str) -> FuzzySet | None:
    """The least element of mu(item), if it exists."""
    fam = mm.mu[item]
    least = [m for m in fam if all(m <= d for d in fam)]
    return least[0] if least else None


def molecules_of(mm: FuzzySkillMultimap) -> tuple[FuzzySet, ...]:
    return tuple(c for c in mm.pool() if c.is_molecule())


def refines(family_u: Iterable[FuzzySet], family_v: Iterable[FuzzySet]) -> bool:
    """``U ≼ V``: every member of U contains some member of V."""
    family_v = tuple(family_v)
    return all(any(v <= u for v in family_v) for u in family_u)
