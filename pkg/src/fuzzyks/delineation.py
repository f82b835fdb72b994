"""The problem function and the knowledge structure delineated under the competency model.

The family ``{p(T) : T fuzzy}`` is computed exactly from the finite competency
pool: for any T, with ``A = {C in pool : C <= T}`` we have ``p(T) = p(join(A))``,
since a competency lies below ``join(A)`` iff it lies below T.  So the states
are exactly the values of p on joins of sub-families of the pool.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .fuzzy_core import FuzzySet
from .multimap import FuzzySkillMultimap
from .structure import KnowledgeStructure

DEFAULT_MAX_COMPETENCIES = 22


class DelineationLimitError(ValueError):
    pass


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


def problem_function(mm: FuzzySkillMultimap, skills: FuzzySet) -> frozenset[str]:
    """Items having some competency contained in ``skills``."""
    if skills.domain != mm.domain:
        raise ValueError("incompatible skill domains")
    return frozenset(q for q in mm.items if any(c <= skills for c in mm.mu[q]))


bracket = problem_function


class Encoded:
    """A multimap with every grade scaled to a common integer denominator.

    Inclusion and join on the scaled tuples agree with the exact Fraction
    operations; used by every exhaustive search in the package.
    """

    def __init__(self, mm: FuzzySkillMultimap, extra: Sequence[Fraction] = ()):
        self.mm = mm
        grades = {g for c in mm.pool() for g in c.grades} | set(extra) | {Fraction(1)}
        self.scale = lcm(*(g.denominator for g in grades))
        self.pool = mm.pool()
        self.codes = [self.encode(c) for c in self.pool]
        index = {c: i for i, c in enumerate(self.pool)}
        self.families = [[index[c] for c in mm.mu[q]] for q in mm.items]
        self.zero = (0,) * len(mm.domain)

    def encode(self, fs: FuzzySet) -> tuple[int, ...]:
        return tuple(int(g * self.scale) for g in fs.grades)

    def decode(self, code: tuple[int, ...]) -> FuzzySet:
        return FuzzySet(self.mm.domain, tuple(Fraction(v, self.scale) for v in code))

    def below(self, code: tuple[int, ...]) -> list[bool]:
        """For each pool competency, whether it lies below ``code``."""
        return [all(a <= b for a, b in zip(c, code)) for c in self.codes]

    def state_mask(self, code: tuple[int, ...]) -> int:
        """p(code) as a bitmask over item positions."""
        below = self.below(code)
        mask = 0
        for i, fam in enumerate(self.families):
            if any(below[k] for k in fam):
                mask |= 1 << i
        return mask

    def items_of(self, mask: int) -> frozenset[str]:
        return frozenset(q for i, q in enumerate(self.mm.items) if mask >> i & 1)

    def joins(self, indices: Sequence[int] | None = None) -> dict[tuple[int, ...], tuple[int, ...]]:
        """Every distinct join of a sub-family of the pool (or of ``indices``).

        Maps each join to the smallest generating subset, smallest by size and
        then lexicographically on pool indices.
        """
        indices = range(len(self.codes)) if indices is None else indices
        found: dict[tuple[int, ...], tuple[int, ...]] = {self.zero: ()}
        for k in indices:
            c = self.codes[k]
            for code, subset in list(found.items()):
                new = tuple(a if a >= b else b for a, b in zip(code, c))
                key = subset + (k,)
                old = found.get(new)
                if old is None or (len(key), key) < (len(old), old):
                    found[new] = key
        return found


def probe_sets(mm: FuzzySkillMultimap, max_competencies: int = DEFAULT_MAX_COMPETENCIES) -> list[FuzzySet]:
    """The finite family of fuzzy sets on which every ``for all T`` claim is decided."""
    enc = _guarded(mm, max_competencies)
    return [enc.decode(code) for code in enc.joins()]


def _guarded(mm: FuzzySkillMultimap, max_competencies: int) -> Encoded:
    n = len(mm.pool())
    if n > max_competencies:
        raise DelineationLimitError(
            f"{n} distinct competencies exceed the limit of {max_competencies}"
        )
    return Encoded(mm)


@dataclass(frozen=True)
class DelineationResult:
    structure: KnowledgeStructure
    witness: dict[frozenset[str], FuzzySet]


def delineate(mm: FuzzySkillMultimap, max_competencies: int = DEFAULT_MAX_COMPETENCIES) -> DelineationResult:
    """All states ``p(T)``, each with a fuzzy set that produces it.

    Raises DelineationLimitError when the competency pool exceeds
    ``max_competencies``; the enumeration is never truncated.
    """
    enc = _guarded(mm, max_competencies)
    best: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = {}
    for code, subset in enc.joins().items():
        mask = enc.state_mask(code)
        key = (len(subset), subset)
        if mask not in best or key < (len(best[mask][1]), best[mask][1]):
            best[mask] = (code, subset)
    witness = {enc.items_of(mask): enc.decode(code) for mask, (code, _) in best.items()}
    structure = KnowledgeStructure(mm.items, frozenset(witness))
    return DelineationResult(structure, witness)


def delineated_structure(mm: FuzzySkillMultimap, max_competencies: int = DEFAULT_MAX_COMPETENCIES) -> KnowledgeStructure:
    return delineate(mm, max_competencies).structure


def check_witnesses(mm: FuzzySkillMultimap, result: DelineationResult) -> None:
    for state, t in result.witness.items():
        if problem_function(mm, t) != state:
            raise InvariantViolation(f"witness {t} does not reproduce state {sorted(state)}")
