"""Definitional predicates and constructions on finite knowledge structures."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

ItemSet = frozenset


@dataclass(frozen=True)
class KnowledgeStructure:
    items: tuple[str, ...]
    states: frozenset[frozenset[str]]

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))
        object.__setattr__(self, "states", frozenset(frozenset(k) for k in self.states))
        if not self.items:
            raise ValueError("empty item domain")
        if len(set(self.items)) != len(self.items):
            raise ValueError("duplicate items")
        domain = self.domain
        for k in self.states:
            if not k <= domain:
                raise ValueError(f"state {sorted(k)} is not a subset of the domain")
        if frozenset() not in self.states:
            raise ValueError("structure must contain the empty state")
        if domain not in self.states:
            raise ValueError("structure must contain the full domain")

    @property
    def domain(self) -> frozenset[str]:
        return frozenset(self.items)

    def __contains__(self, state: Iterable[str]) -> bool:
        return frozenset(state) in self.states

    def __len__(self) -> int:
        return len(self.states)

    def ordered(self, state: Iterable[str]) -> list[str]:
        state = set(state)
        return [q for q in self.items if q in state]

    def sorted_states(self) -> list[frozenset[str]]:
        pos = {q: i for i, q in enumerate(self.items)}
        return sorted(self.states, key=lambda k: (len(k), sorted(pos[q] for q in k)))

    def as_lists(self) -> list[list[str]]:
        return [self.ordered(k) for k in self.sorted_states()]

    def __str__(self) -> str:
        return "{" + ", ".join("{" + ",".join(s) + "}" for s in self.as_lists()) + "}"


def states_containing(ks: KnowledgeStructure, item: str) -> frozenset[frozenset[str]]:
    return frozenset(k for k in ks.states if item in k)


def distance(a: Iterable[str], b: Iterable[str]) -> int:
    return len(frozenset(a) ^ frozenset(b))


def union_violation(ks: KnowledgeStructure):
    for a, b in combinations(ks.states, 2):
        if a | b not in ks.states:
            return a, b
    return None


def intersection_violation(ks: KnowledgeStructure):
    for a, b in combinations(ks.states, 2):
        if a & b not in ks.states:
            return a, b
    return None


def is_union_closed(ks: KnowledgeStructure) -> bool:
    # pairwise closure of a finite family gives closure under arbitrary unions
    return union_violation(ks) is None


def is_intersection_closed(ks: KnowledgeStructure) -> bool:
    return intersection_violation(ks) is None


is_knowledge_space = is_union_closed
is_simple_closure_space = is_intersection_closed


def is_quasi_ordinal(ks: KnowledgeStructure) -> bool:
    return is_union_closed(ks) and is_intersection_closed(ks)


def _neighbours(states: frozenset[frozenset[str]], items: tuple[str, ...], k: frozenset[str]):
    for q in items:
        n = k - {q} if q in k else k | {q}
        if n in states:
            yield n


def well_graded_violation(ks: KnowledgeStructure):
    """A pair of states whose step distance inside the family exceeds ``|K Δ L|``."""
    for source in ks.states:
        dist = {source: 0}
        queue = deque([source])
        while queue:
            k = queue.popleft()
            for n in _neighbours(ks.states, ks.items, k):
                if n not in dist:
                    dist[n] = dist[k] + 1
                    queue.append(n)
        for target in ks.states:
            if dist.get(target) != len(source ^ target):
                return source, target
    return None


def is_well_graded(ks: KnowledgeStructure) -> bool:
    return well_graded_violation(ks) is None


def is_learning_space(ks: KnowledgeStructure) -> bool:
    return is_union_closed(ks) and is_well_graded(ks)


def is_accessible(ks: KnowledgeStructure) -> bool:
    """Every non-empty state loses some single item and stays a state."""
    return all(any(k - {q} in ks.states for q in k) for k in ks.states if k)


def _separates(ks: KnowledgeStructure, q: str, r: str) -> bool:
    """Some state contains q but not r."""
    return any(q in k and r not in k for k in ks.states)


def is_t0(ks: KnowledgeStructure) -> bool:
    return all(_separates(ks, q, r) or _separates(ks, r, q) for q, r in combinations(ks.items, 2))


def is_t1(ks: KnowledgeStructure) -> bool:
    return all(_separates(ks, q, r) and _separates(ks, r, q) for q, r in combinations(ks.items, 2))


def discrimination_violation(ks: KnowledgeStructure):
    """First pair of distinct items contained in exactly the same states."""
    for q, r in combinations(ks.items, 2):
        if states_containing(ks, q) == states_containing(ks, r):
            return q, r
    return None


def bi_discrimination_violation(ks: KnowledgeStructure):
    """First ``(q, r)`` such that every state containing q also contains r."""
    for q, r in combinations(ks.items, 2):
        kq, kr = states_containing(ks, q), states_containing(ks, r)
        if kq <= kr:
            return q, r
        if kr <= kq:
            return r, q
    return None


def is_discriminative(ks: KnowledgeStructure) -> bool:
    return discrimination_violation(ks) is None


def is_bi_discriminative(ks: KnowledgeStructure) -> bool:
    return bi_discrimination_violation(ks) is None


def trace(ks: KnowledgeStructure, subdomain: Iterable[str]) -> KnowledgeStructure:
    """The substructure ``{K ∩ Q' : K in ks}`` on a non-empty ``Q' ⊆ Q``."""
    sub = frozenset(subdomain)
    if not sub:
        raise ValueError("trace domain must be non-empty")
    if not sub <= ks.domain:
        raise ValueError(f"trace domain has unknown items {sorted(sub - ks.domain)}")
    items = tuple(q for q in ks.items if q in sub)
    return KnowledgeStructure(items, frozenset(k & sub for k in ks.states))


@dataclass(frozen=True)
class QuotientResult:
    classes: dict[str, frozenset[str]]
    structure: KnowledgeStructure

    def class_of(self, item: str) -> str:
        for name, members in self.classes.items():
            if item in members:
                return name
        raise KeyError(item)


def quotient(ks: KnowledgeStructure) -> QuotientResult:
    """Merge items contained in exactly the same states into one class.

    A class is named by its members joined with ``+`` in sorted order.
    """
    groups: dict[frozenset, list[str]] = {}
    for q in ks.items:
        groups.setdefault(states_containing(ks, q), []).append(q)
    classes = {"+".join(sorted(members)): frozenset(members) for members in groups.values()}
    owner = {q: name for name, members in classes.items() for q in members}
    states = frozenset(frozenset(owner[q] for q in k) for k in ks.states)
    return QuotientResult(classes, KnowledgeStructure(tuple(classes), states))


@dataclass(frozen=True)
class FringeReport:
    state: frozenset[str]
    inner: frozenset[str]
    outer: frozenset[str]

    @property
    def fringe(self) -> frozenset[str]:
        return self.inner | self.outer


def fringes(ks: KnowledgeStructure, state: Iterable[str]) -> FringeReport:
    k = frozenset(state)
    if k not in ks.states:
        raise ValueError(f"{sorted(k)} is not a state")
    inner = frozenset(t for t in k if k - {t} in ks.states)
    outer = frozenset(t for t in ks.domain - k if k | {t} in ks.states)
    return FringeReport(k, inner, outer)


def union_closure(items: Iterable[str], generators: Iterable[Iterable[str]]) -> KnowledgeStructure:
    """The smallest knowledge space containing ``generators``."""
    items = tuple(items)
    family = {frozenset()}
    for g in map(frozenset, generators):
        family |= {k | g for k in family}
    family.add(frozenset(items))
    return KnowledgeStructure(items, frozenset(family))
