import pytest
from hypothesis import given

from fuzzyks import catalog
from fuzzyks.fuzzy_core import FuzzySet, SkillDomain
from fuzzyks.multimap import (
    FuzzySkillMultimap,
    InvalidMultimapError,
    comparable_pair,
    global_minimum,
    is_conjunctive,
    is_disjunctive,
    is_fuzzy_skill_function,
    min_below,
    minimal_competencies,
    molecules_of,
    validate,
)
from strategies import multimaps


def C(mm, **grades):
    return FuzzySet.from_mapping(mm.domain, grades)


def test_validate_accepts_fixture():
    mm = catalog.closure_not_meet()
    assert validate(mm.items, mm.domain, mm.mu) == []


def test_empty_family_is_reported():
    mm = catalog.closure_not_meet()
    mu = dict(mm.mu)
    mu["q3"] = ()
    assert "empty competency family at q3" in validate(mm.items, mm.domain, mu)
    with pytest.raises(InvalidMultimapError, match="empty competency family at q3"):
        FuzzySkillMultimap(mm.items, mm.domain, mu)


def test_zero_competency_is_reported():
    mm = catalog.closure_not_meet()
    mu = dict(mm.mu)
    mu["q2"] = mu["q2"] + (FuzzySet.zero(mm.domain),)
    problems = validate(mm.items, mm.domain, mu)
    assert any(p.startswith("zero competency") for p in problems)


def test_other_invariants():
    d = SkillDomain(("s1",))
    c = FuzzySet.from_mapping(d, {"s1": "0.5"})
    assert any("duplicate item" in p for p in validate(("a", "a"), d, {"a": (c,)}))
    assert any("duplicate competency" in p for p in validate(("a",), d, {"a": (c, c)}))
    assert any("unknown item" in p for p in validate(("a",), d, {"a": (c,), "b": (c,)}))
    other = FuzzySet.from_mapping(SkillDomain(("s2",)), {"s2": "0.5"})
    assert any("different skill domain" in p for p in validate(("a",), d, {"a": (other,)}))


def test_skill_function_predicate():
    assert is_fuzzy_skill_function(catalog.dominated_conjunctive())
    # q1's competencies differ in opposite directions on s1 and s2
    assert is_fuzzy_skill_function(catalog.closure_not_meet())
    mm = catalog.mutually_refining()
    assert not is_fuzzy_skill_function(mm)
    q, c, d = comparable_pair(mm)
    assert q == "a" and c <= d and c != d


def test_comparable_pair_by_construction():
    d = SkillDomain(("s1", "s2"))
    c = FuzzySet.from_mapping(d, {"s1": "0.3"})
    joined = c | FuzzySet.from_mapping(d, {"s2": "0.4"})
    mm = FuzzySkillMultimap(("q",), d, {"q": (c, joined)})
    assert not is_fuzzy_skill_function(mm)


def test_disjunctive_and_conjunctive():
    assert is_disjunctive(catalog.disjunctive_pair())
    assert not is_disjunctive(catalog.closure_not_meet())
    assert is_disjunctive(catalog.injective_disjunctive())
    assert is_conjunctive(catalog.dominated_conjunctive())
    assert not is_conjunctive(catalog.closure_not_meet())
    assert is_conjunctive(catalog.all_ones_pair())


def test_minimal_competencies():
    nd = catalog.mutually_refining()
    assert set(minimal_competencies(nd)["a"]) == {C(nd, s1="0.3"), C(nd, s2="0.4")}
    f14 = catalog.dominated_conjunctive()
    assert minimal_competencies(f14)["a"] == (C(f14, s1="0.2"),)
    dj = catalog.disjunctive_pair()
    assert set(minimal_competencies(dj)["r"]) == {C(dj, s1="0.1"), C(dj, s2="0.7")}


def test_min_below():
    nd = catalog.mutually_refining()
    assert min_below(nd, "a", C(nd, s2="0.7", s3="0.4")) == C(nd, s2="0.4")
    f14 = catalog.dominated_conjunctive()
    assert min_below(f14, "a", C(f14, s1="0.2")) == C(f14, s1="0.2")
    d = SkillDomain(("s1", "s2"))
    m1, m2 = FuzzySet.from_mapping(d, {"s1": "0.2"}), FuzzySet.from_mapping(d, {"s2": "0.3"})
    mm = FuzzySkillMultimap(("q",), d, {"q": (m1, m2, m1 | m2)})
    assert min_below(mm, "q", m1 | m2) is None
    with pytest.raises(ValueError):
        min_below(mm, "q", FuzzySet.ones(d))


def test_global_minimum():
    f14 = catalog.dominated_conjunctive()
    assert global_minimum(f14, "b") == C(f14, s1="0.3", s2="0.7")
    assert global_minimum(catalog.disjunctive_pair(), "r") is None


def test_molecules_of():
    scs = catalog.closure_not_meet()
    assert set(molecules_of(scs)) == {C(scs, s1="0.2"), C(scs, s1="0.4")}
    assert molecules_of(catalog.all_ones_pair()) == ()
    dj = catalog.disjunctive_pair()
    assert set(molecules_of(dj)) == {C(dj, s1="0.2"), C(dj, s1="0.1"), C(dj, s2="0.7")}


def test_equality_ignores_order():
    a = FuzzySkillMultimap.build(["x", "y"], ["s1", "s2"], {"x": [{"s1": "0.1"}, {"s2": "0.2"}], "y": [{"s2": "1"}]})
    b = FuzzySkillMultimap.build(["y", "x"], ["s2", "s1"], {"x": [{"s2": "0.2"}, {"s1": "0.1"}], "y": [{"s2": "1"}]})
    assert a == b


@given(multimaps())
def test_conjunctive_maps_are_skill_functions(mm):
    if is_conjunctive(mm):
        assert is_fuzzy_skill_function(mm)


@given(multimaps())
def test_min_below_is_a_least_lower_element(mm):
    for q in mm.items:
        for c in mm.mu[q]:
            m = min_below(mm, q, c)
            if m is not None:
                assert m in mm.mu[q] and m <= c
                assert all(m <= d for d in mm.mu[q] if d <= c)


@given(multimaps())
def test_minimal_competencies_cover_the_family(mm):
    minimal = minimal_competencies(mm)
    for q in mm.items:
        assert set(minimal[q]) <= set(mm.mu[q])
        assert all(any(m <= c for m in minimal[q]) for c in mm.mu[q])
        assert not any(d < m for m in minimal[q] for d in mm.mu[q])
