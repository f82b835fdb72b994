"""Seeded generators of small multimaps, merges, structures and fuzzy sets."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .fuzzy_core import FuzzySet, SkillDomain
from .multimap import FuzzySkillMultimap, minimal_elements
from .structure import KnowledgeStructure, union_closure

TENTHS = tuple(Fraction(k, 10) for k in range(11))
ITEM_NAMES = tuple("abcdefgh")
SKILL_NAMES = tuple(f"s{k}" for k in range(1, 9))


@dataclass(frozen=True)
class MultimapConfig:
    max_items: int = 4
    max_skills: int = 3
    max_competencies: int = 3
    zero_rate: float = 0.45  # chance a skill is absent from a competency
    reuse_rate: float = 0.3  # chance to copy a competency already used by another item
    skill_function: bool = False


@dataclass(frozen=True)
class MergeConfig:
    min_parts: int = 2
    max_parts: int = 3
    max_items_per_part: int = 3
    max_skills_per_part: int = 3
    max_competencies: int = 2
    item_pool: int = 5
    skill_pool: int = 5
    zero_rate: float = 0.45


def random_fuzzy_set(
    rng: random.Random,
    domain: SkillDomain,
    grades: Sequence[Fraction] = TENTHS,
    zero_rate: float = 0.3,
) -> FuzzySet:
    return FuzzySet(
        domain, tuple(Fraction(0) if rng.random() < zero_rate else rng.choice(grades) for _ in domain.skills)
    )


def random_competency(rng: random.Random, domain: SkillDomain, zero_rate: float) -> FuzzySet:
    """A non-zero fuzzy set with grades in tenths."""
    while True:
        c = random_fuzzy_set(rng, domain, TENTHS[1:], zero_rate)
        if not c.is_zero():
            return c


def random_multimap(rng: random.Random, config: MultimapConfig = MultimapConfig()) -> FuzzySkillMultimap:
    n_items = rng.randint(1, config.max_items)
    n_skills = rng.randint(1, config.max_skills)
    domain = SkillDomain(SKILL_NAMES[:n_skills])
    items = ITEM_NAMES[:n_items]
    used: list[FuzzySet] = []
    families = {}
    for q in items:
        fam: list[FuzzySet] = []
        for _ in range(rng.randint(1, config.max_competencies)):
            if used and rng.random() < config.reuse_rate:
                c = rng.choice(used)
            else:
                c = random_competency(rng, domain, config.zero_rate)
            if c not in fam:
                fam.append(c)
        if config.skill_function:
            fam = list(minimal_elements(fam))
        used.extend(fam)
        families[q] = tuple(fam)
    return FuzzySkillMultimap(items, domain, families)


def random_skill_function(rng: random.Random, config: MultimapConfig = MultimapConfig()) -> FuzzySkillMultimap:
    return random_multimap(rng, MultimapConfig(**{**config.__dict__, "skill_function": True}))


def _part(rng: random.Random, items: Sequence[str], skills: Sequence[str], config: MergeConfig) -> FuzzySkillMultimap:
    domain = SkillDomain(tuple(skills))
    families = {}
    for q in items:
        fam = {random_competency(rng, domain, config.zero_rate) for _ in range(rng.randint(1, config.max_competencies))}
        families[q] = minimal_elements(sorted(fam, key=FuzzySet.sort_key))
    return FuzzySkillMultimap(tuple(items), domain, families)


def _subset(rng: random.Random, pool: Sequence[str], k: int) -> list[str]:
    return sorted(rng.sample(list(pool), k), key=list(pool).index)


def random_merge_parts(
    rng: random.Random, mode: str = "any", config: MergeConfig = MergeConfig()
) -> list[FuzzySkillMultimap]:
    """Component fuzzy skill functions for a merge.

    ``mode`` is ``"any"``, ``"disjoint_items"``, ``"disjoint_skills"`` or
    ``"disjoint_both"``; the named sets are pairwise disjoint across parts.
    """
    if mode not in ("any", "disjoint_items", "disjoint_skills", "disjoint_both"):
        raise ValueError(f"unknown merge mode {mode!r}")
    n = rng.randint(config.min_parts, config.max_parts)
    items_pool = list(ITEM_NAMES[: max(config.item_pool, n)])
    skills_pool = list(SKILL_NAMES[: max(config.skill_pool, n)])
    split_items = mode in ("disjoint_items", "disjoint_both")
    split_skills = mode in ("disjoint_skills", "disjoint_both")
    item_groups = _split(rng, items_pool, n, config.max_items_per_part) if split_items else None
    skill_groups = _split(rng, skills_pool, n, config.max_skills_per_part) if split_skills else None
    parts = []
    for i in range(n):
        items = item_groups[i] if item_groups else _subset(rng, items_pool, rng.randint(1, config.max_items_per_part))
        skills = skill_groups[i] if skill_groups else _subset(rng, skills_pool, rng.randint(1, config.max_skills_per_part))
        parts.append(_part(rng, items, skills, config))
    return parts


def _split(rng: random.Random, pool: list[str], n: int, cap: int) -> list[list[str]]:
    """n disjoint non-empty groups of at most ``cap`` names each."""
    shuffled = pool[:]
    rng.shuffle(shuffled)
    groups = [[name] for name in shuffled[:n]]
    for name in shuffled[n:]:
        i = rng.randrange(n + 1)  # n means "leave unused"
        if i < n and len(groups[i]) < cap:
            groups[i].append(name)
    return [sorted(g, key=pool.index) for g in groups]


def random_structure(rng: random.Random, n_items: int, union_closed: bool | None = None) -> KnowledgeStructure:
    """A random structure on ``n_items`` items.

    ``union_closed=True`` returns the union closure of random generators;
    ``None`` picks either kind at random.
    """
    items = ITEM_NAMES[:n_items]
    if union_closed is None:
        union_closed = rng.random() < 0.5
    subsets = [frozenset(q for q in items if rng.random() < 0.5) for _ in range(rng.randint(0, 2 * n_items))]
    if union_closed:
        return union_closure(items, subsets)
    return KnowledgeStructure(items, frozenset(subsets) | {frozenset(), frozenset(items)})


def all_structures(n_items: int):
    """Every knowledge structure on ``n_items`` items (feasible for n <= 4)."""
    items = ITEM_NAMES[:n_items]
    full = (1 << n_items) - 1
    middle = [m for m in range(1, full)]
    for choice in range(1 << len(middle)):
        masks = [0, full] + [m for j, m in enumerate(middle) if choice >> j & 1]
        yield KnowledgeStructure(
            items, frozenset(frozenset(items[i] for i in range(n_items) if m >> i & 1) for m in masks)
        )


def probe_grades(mm: FuzzySkillMultimap) -> list[Fraction]:
    """The multimap's grades together with 0 and 1."""
    return sorted(mm.grade_values() | {Fraction(0), Fraction(1)})
