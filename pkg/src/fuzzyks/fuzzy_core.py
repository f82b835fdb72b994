"""Exact fuzzy sets over a finite, ordered skill domain.

Grades are :class:`fractions.Fraction` values in ``[0, 1]``.  A fuzzy set is
stored densely, one grade per skill in domain order, so equality, inclusion,
join and meet are plain linear scans.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Union

GradeLike = Union[str, int, float, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


class IncompatibleDomainsError(ValueError):
    def __init__(self, message: str = "incompatible skill domains"):
        super().__init__(message)


def parse_grade(value: GradeLike) -> Fraction:
    """Parse a membership grade exactly.

    Accepts decimal or ``num/den`` strings, ints and Fractions.  Floats are
    read through their shortest repr, so ``0.1`` becomes ``1/10``.
    """
    if isinstance(value, bool):
        raise ValueError(f"invalid grade {value!r}")
    try:
        if isinstance(value, float):
            grade = Fraction(repr(value))
        else:
            grade = Fraction(value.strip() if isinstance(value, str) else value)
    except (ValueError, ZeroDivisionError, TypeError):
        raise ValueError(f"invalid grade {value!r}") from None
    if not ZERO <= grade <= ONE:
        raise ValueError(f"grade out of range: {value!r}")
    return grade


def format_grade(grade: Fraction) -> str:
    """Render a grade as an exact decimal when it terminates, else ``num/den``."""
    grade = Fraction(grade)
    den = grade.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{grade.numerator}/{grade.denominator}"
    digits = max(twos, fives)
    if digits == 0:
        return str(grade.numerator)
    scaled = grade.numerator * 10**digits // grade.denominator
    sign = "-" if scaled < 0 else ""
    text = str(abs(scaled)).rjust(digits + 1, "0")
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


@dataclass(frozen=True)
class SkillDomain:
    skills: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "skills", tuple(self.skills))
        if not self.skills:
            raise ValueError("skill domain must be non-empty")
        if len(set(self.skills)) != len(self.skills):
            raise ValueError("duplicate skill identifiers")

    @cached_property
    def index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.skills)}

    def __len__(self) -> int:
        return len(self.skills)

    def __iter__(self):
        return iter(self.skills)

    def __contains__(self, skill: object) -> bool:
        return skill in self.index


@dataclass(frozen=True)
class FuzzySet:
    """A total map from the skills of ``domain`` to grades.

    ``a <= b`` is fuzzy inclusion (a partial order), ``a | b`` the pointwise
    maximum and ``a & b`` the pointwise minimum.
    """

    domain: SkillDomain
    grades: tuple[Fraction, ...]

    def __post_init__(self):
        grades = tuple(Fraction(g) for g in self.grades)
        if len(grades) != len(self.domain):
            raise ValueError("one grade per skill required")
        if any(not ZERO <= g <= ONE for g in grades):
            raise ValueError("grade out of range")
        object.__setattr__(self, "grades", grades)

    @classmethod
    def zero(cls, domain: SkillDomain) -> FuzzySet:
        return cls(domain, (ZERO,) * len(domain))

    @classmethod
    def ones(cls, domain: SkillDomain) -> FuzzySet:
        return cls(domain, (ONE,) * len(domain))

    @classmethod
    def from_mapping(cls, domain: SkillDomain, grades: Mapping[str, GradeLike]) -> FuzzySet:
        """Build from ``{skill: grade}``; omitted skills get grade 0."""
        dense = [ZERO] * len(domain)
        for skill, value in grades.items():
            if skill not in domain:
                raise ValueError(f"unknown skill {skill!r}")
            dense[domain.index[skill]] = parse_grade(value)
        return cls(domain, tuple(dense))

    @classmethod
    def crisp(cls, domain: SkillDomain, skills: Iterable[str]) -> FuzzySet:
        """The 0/1 indicator of ``skills``."""
        return cls.from_mapping(domain, {s: ONE for s in skills})

    def __getitem__(self, skill: str) -> Fraction:
        return self.grades[self.domain.index[skill]]

    @property
    def support(self) -> tuple[str, ...]:
        return tuple(s for s, g in zip(self.domain.skills, self.grades) if g)

    def as_mapping(self) -> dict[str, Fraction]:
        """Non-zero grades only, in domain order."""
        return {s: g for s, g in zip(self.domain.skills, self.grades) if g}

    def is_zero(self) -> bool:
        return not any(self.grades)

    def is_molecule(self) -> bool:
        return sum(1 for g in self.grades if g) == 1

    def _check(self, other: FuzzySet) -> None:
        if self.domain != other.domain:
            raise IncompatibleDomainsError()

    def issubset(self, other: FuzzySet) -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.grades, other.grades))

    def join(self, other: FuzzySet) -> FuzzySet:
        self._check(other)
        return FuzzySet(self.domain, tuple(max(a, b) for a, b in zip(self.grades, other.grades)))

    def meet(self, other: FuzzySet) -> FuzzySet:
        self._check(other)
        return FuzzySet(self.domain, tuple(min(a, b) for a, b in zip(self.grades, other.grades)))

    __le__ = issubset
    __or__ = join
    __and__ = meet

    def __lt__(self, other: FuzzySet) -> bool:
        return self.issubset(other) and self != other

    def sort_key(self) -> tuple:
        # a total order for deterministic output; unrelated to inclusion
        return tuple(-g for g in self.grades)

    def rebase(self, domain: SkillDomain) -> FuzzySet:
        """Re-express over another domain by skill name, grade 0 on new skills.

        Skills carrying a non-zero grade must exist in the target domain.
        """
        dense = [ZERO] * len(domain)
        for skill, grade in zip(self.domain.skills, self.grades):
            if skill in domain:
                dense[domain.index[skill]] = grade
            elif grade:
                raise ValueError(f"skill {skill!r} with non-zero grade missing from target domain")
        return FuzzySet(domain, tuple(dense))

    def __str__(self) -> str:
        body = ", ".join(f"{format_grade(g)}/{s}" for s, g in self.as_mapping().items())
        return "{" + body + "}"

    def __repr__(self) -> str:
        return f"FuzzySet({self})"


def subseteq(a: FuzzySet, b: FuzzySet) -> bool:
    return a.issubset(b)


def join(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    return a.join(b)


def meet(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    return a.meet(b)


def join_all(domain: SkillDomain, sets: Iterable[FuzzySet]) -> FuzzySet:
    """Join of a (possibly empty) family; the empty join is the zero set."""
    result = FuzzySet.zero(domain)
    for s in sets:
        result = result.join(s)
    return result


def is_molecule(a: FuzzySet) -> bool:
    return a.is_molecule()


def is_zero(a: FuzzySet) -> bool:
    return a.is_zero()
