"""Named worked examples: small multimaps and structures with known behaviour.

Grades are written as decimal strings so they are read exactly.
"""

from __future__ import annotations

from .multimap import FuzzySkillMultimap
from .structure import KnowledgeStructure

S12 = ("s1", "s2")
S123 = ("s1", "s2", "s3")


def all_ones_pair() -> FuzzySkillMultimap:
    """Two items both requiring every skill at full grade."""
    ones = {"s1": "1", "s2": "1"}
    return FuzzySkillMultimap.build(["q1", "q2"], S12, {"q1": [ones], "q2": [ones]})


def closure_not_meet() -> FuzzySkillMultimap:
    """Intersection-closed delineation although q1's two competencies have no common lower bound in mu(q1)."""
    return FuzzySkillMultimap.build(
        ["q1", "q2", "q3"],
        S12,
        {
            "q1": [{"s1": "0.2"}, {"s1": "0.1", "s2": "0.3"}],
            "q2": [{"s1": "0.6", "s2": "0.7"}],
            "q3": [{"s1": "0.4"}],
        },
    )


def learning_without_molecules() -> FuzzySkillMultimap:
    return FuzzySkillMultimap.build(
        ["q1", "q2"],
        S123,
        {
            "q1": [{"s1": "0.1", "s2": "0.3"}, {"s2": "0.4", "s3": "0.6"}],
            "q2": [{"s2": "0.4", "s3": "0.6"}],
        },
    )


def learning_without_molecules_crisp() -> FuzzySkillMultimap:
    return FuzzySkillMultimap.build(
        ["q1", "q2"],
        S123,
        {
            "q1": [{"s1": "1", "s2": "1"}, {"s2": "1", "s3": "1"}],
            "q2": [{"s2": "1", "s3": "1"}],
        },
    )


def mutually_refining() -> FuzzySkillMultimap:
    """Distinct families that refine each other: not discriminative."""
    return FuzzySkillMultimap.build(
        ["a", "b"],
        S123,
        {
            "a": [{"s1": "0.3"}, {"s2": "0.4"}, {"s2": "0.7", "s3": "0.4"}],
            "b": [{"s1": "0.3"}, {"s2": "0.4"}],
        },
    )


def injective_disjunctive() -> FuzzySkillMultimap:
    return FuzzySkillMultimap.build(
        ["a", "b"],
        S12,
        {
            "a": [{"s1": "0.6"}, {"s1": "0.8"}, {"s2": "0.7"}],
            "b": [{"s1": "0.3"}, {"s2": "0.4"}],
        },
    )


def shared_minima() -> FuzzySkillMultimap:
    """Three items sharing the molecules 0.2/s1 and 0.1/s2."""
    return FuzzySkillMultimap.build(
        ["a", "b", "c"],
        S123,
        {
            "a": [{"s1": "0.2"}, {"s2": "0.1"}, {"s1": "0.3", "s2": "0.4"}],
            "b": [{"s1": "0.2"}, {"s2": "0.1"}, {"s1": "0.5", "s3": "0.2"}, {"s2": "0.3", "s3": "0.3"}],
            "c": [{"s1": "0.2"}, {"s2": "0.1"}, {"s1": "0.3", "s2": "0.5", "s3": "0.6"}],
        },
    )


def prerequisite_pair() -> FuzzySkillMultimap:
    """Delineates {∅, {b}, {a, b}}: a presupposes b."""
    return FuzzySkillMultimap.build(
        ["a", "b"],
        S123,
        {
            "a": [{"s1": "0.2"}, {"s2": "0.1"}, {"s1": "0.3", "s2": "0.4"}],
            "b": [{"s1": "0.2"}, {"s2": "0.1"}, {"s3": "0.6"}, {"s1": "0.5", "s2": "0.2"}],
        },
    )


def dominated_conjunctive() -> FuzzySkillMultimap:
    """Conjunctive skill function whose two competencies are comparable."""
    return FuzzySkillMultimap.build(
        ["a", "b"],
        S12,
        {"a": [{"s1": "0.2"}], "b": [{"s1": "0.3", "s2": "0.7"}]},
    )


def disjunctive_pair() -> FuzzySkillMultimap:
    return FuzzySkillMultimap.build(
        ["q", "r"],
        S12,
        {"q": [{"s1": "0.2"}], "r": [{"s1": "0.1"}, {"s2": "0.7"}]},
    )


def prolonged_pair() -> FuzzySkillMultimap:
    """Restricting to s1 makes both items identical."""
    return FuzzySkillMultimap.build(
        ["q", "r"],
        S123,
        {"q": [{"s1": "0.2", "s2": "0.3"}], "r": [{"s1": "0.2", "s3": "0.5"}]},
    )


def merge_disjoint_items() -> list[FuzzySkillMultimap]:
    """Two bi-discriminative parts on disjoint items whose merge is not discriminative."""
    part1 = FuzzySkillMultimap.build(
        ["a", "b"],
        ("s1", "s2", "s3", "s4"),
        {
            "a": [{"s1": "0.1", "s2": "0.7"}, {"s2": "0.4", "s3": "0.6"}],
            "b": [{"s1": "0.2", "s3": "0.5"}, {"s3": "0.5", "s4": "0.5"}],
        },
    )
    part2 = FuzzySkillMultimap.build(
        ["c", "d"],
        ("s1", "s3", "s4", "s5"),
        {
            "c": [{"s1": "0.2", "s3": "0.5"}, {"s3": "0.5", "s4": "0.5"}],
            "d": [{"s1": "0.2", "s4": "0.5"}, {"s3": "0.5", "s5": "0.5"}],
        },
    )
    return [part1, part2]


def merge_disjoint_skills() -> list[FuzzySkillMultimap]:
    """Three non-discriminative single-skill parts whose merge is bi-discriminative."""
    return [
        FuzzySkillMultimap.build(["a", "b"], ["s1"], {"a": [{"s1": "0.2"}], "b": [{"s1": "0.2"}]}),
        FuzzySkillMultimap.build(["b", "c"], ["s2"], {"b": [{"s2": "0.4"}], "c": [{"s2": "0.4"}]}),
        FuzzySkillMultimap.build(["a", "c"], ["s3"], {"a": [{"s3": "0.6"}], "c": [{"s3": "0.6"}]}),
    ]


def redundant_items_structure() -> KnowledgeStructure:
    """Items a and c belong to exactly the same states."""
    items = ("a", "b", "c", "d")
    states = [(), ("d",), ("a", "c"), ("a", "b", "c"), ("a", "c", "d"), items]
    return KnowledgeStructure(items, frozenset(frozenset(s) for s in states))


MULTIMAPS = {
    "all_ones_pair": all_ones_pair,
    "closure_not_meet": closure_not_meet,
    "learning_without_molecules": learning_without_molecules,
    "learning_without_molecules_crisp": learning_without_molecules_crisp,
    "mutually_refining": mutually_refining,
    "injective_disjunctive": injective_disjunctive,
    "shared_minima": shared_minima,
    "prerequisite_pair": prerequisite_pair,
    "dominated_conjunctive": dominated_conjunctive,
    "disjunctive_pair": disjunctive_pair,
    "prolonged_pair": prolonged_pair,
}

MERGES = {
    "merge_disjoint_items": merge_disjoint_items,
    "merge_disjoint_skills": merge_disjoint_skills,
}
