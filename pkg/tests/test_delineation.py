import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fuzzyks import catalog
from fuzzyks.delineation import (
    DelineationLimitError,
    InvariantViolation,
    DelineationResult,
    bracket,
    check_witnesses,
    delineate,
    problem_function,
    probe_sets,
)
from fuzzyks.fuzzy_core import FuzzySet, SkillDomain
from fuzzyks.multimap import FuzzySkillMultimap
from fuzzyks.random_models import probe_grades, random_fuzzy_set
from strategies import fuzzy_sets, multimaps


def states(*sets):
    return frozenset(frozenset(s) for s in sets)


def test_problem_function_examples():
    mm = catalog.closure_not_meet()
    assert problem_function(mm, FuzzySet.ones(mm.domain)) == {"q1", "q2", "q3"}
    assert problem_function(mm, FuzzySet.zero(mm.domain)) == frozenset()
    t = FuzzySet.from_mapping(mm.domain, {"s1": "0.4"})
    assert problem_function(mm, t) == {"q1", "q3"}
    assert bracket(mm, t) == problem_function(mm, t)


def test_problem_function_domain_mismatch():
    mm = catalog.closure_not_meet()
    with pytest.raises(ValueError, match="incompatible skill domains"):
        problem_function(mm, FuzzySet.zero(SkillDomain(("x",))))


@pytest.mark.parametrize(
    "name, expected",
    [
        ("all_ones_pair", states((), ("q1", "q2"))),
        ("closure_not_meet", states((), ("q1",), ("q1", "q3"), ("q1", "q2", "q3"))),
        ("learning_without_molecules", states((), ("q1",), ("q1", "q2"))),
        ("learning_without_molecules_crisp", states((), ("q1",), ("q1", "q2"))),
        ("mutually_refining", states((), ("a", "b"))),
        ("injective_disjunctive", states((), ("b",), ("a", "b"))),
        ("shared_minima", states((), ("a", "b", "c"))),
        ("prerequisite_pair", states((), ("b",), ("a", "b"))),
        ("dominated_conjunctive", states((), ("a",), ("a", "b"))),
        ("disjunctive_pair", states((), ("r",), ("q", "r"))),
        ("prolonged_pair", states((), ("q",), ("r",), ("q", "r"))),
    ],
)
def test_catalog_delineations(name, expected):
    mm = catalog.MULTIMAPS[name]()
    result = delineate(mm)
    assert result.structure.states == expected
    check_witnesses(mm, result)


def test_injective_disjunctive_has_a_singleton_state():
    # 0.3/s1 suffices for b but not for a, whose least s1 demand is 0.6
    mm = catalog.injective_disjunctive()
    t = FuzzySet.from_mapping(mm.domain, {"s1": "0.3"})
    assert problem_function(mm, t) == {"b"}


def test_witness_is_smallest_join():
    mm = catalog.closure_not_meet()
    w = delineate(mm).witness
    assert w[frozenset()] == FuzzySet.zero(mm.domain)
    assert w[frozenset({"q1", "q3"})] == FuzzySet.from_mapping(mm.domain, {"s1": "0.4"})


def test_guard():
    d = SkillDomain(("s1",))
    fam = tuple(FuzzySet.from_mapping(d, {"s1": f"0.{k}"}) for k in range(1, 10))
    mm = FuzzySkillMultimap(tuple(f"q{k}" for k in range(9)), d, {f"q{k}": (fam[k],) for k in range(9)})
    with pytest.raises(DelineationLimitError, match="9 distinct competencies exceed the limit of 5"):
        delineate(mm, max_competencies=5)
    assert len(delineate(mm, max_competencies=9).structure) == 10


def test_check_witnesses_detects_corruption():
    mm = catalog.closure_not_meet()
    result = delineate(mm)
    bad = dict(result.witness)
    bad[frozenset({"q1"})] = FuzzySet.ones(mm.domain)
    with pytest.raises(InvariantViolation):
        check_witnesses(mm, DelineationResult(result.structure, bad))


def test_order_independence():
    a = catalog.shared_minima()
    b = FuzzySkillMultimap.build(
        ["c", "a", "b"],
        ["s3", "s2", "s1"],
        {q: [c.as_mapping() for c in reversed(a.mu[q])] for q in a.items},
    )
    assert delineate(a).structure.states == delineate(b).structure.states


def test_probe_sets_contain_zero_and_pool_joins():
    mm = catalog.closure_not_meet()
    probes = probe_sets(mm)
    assert FuzzySet.zero(mm.domain) in probes
    assert all(c in probes for c in mm.pool())
    assert len(set(probes)) == len(probes)


@given(multimaps(), st.randoms(use_true_random=False))
def test_random_sets_land_on_states(mm, rng):
    result = delineate(mm)
    grades = probe_grades(mm)
    for _ in range(30):
        t = random_fuzzy_set(rng, mm.domain, grades)
        assert problem_function(mm, t) in result.structure.states


@given(multimaps(), st.data())
def test_monotone(mm, data):
    t1 = data.draw(fuzzy_sets(mm.domain))
    t2 = t1 | data.draw(fuzzy_sets(mm.domain))
    assert problem_function(mm, t1) <= problem_function(mm, t2)


@given(multimaps())
def test_reduction_to_pool_joins(mm):
    # p(T) = p(join of the pool members below T)
    rng = random.Random(0)
    for _ in range(10):
        t = random_fuzzy_set(rng, mm.domain, probe_grades(mm))
        below = [c for c in mm.pool() if c <= t]
        j = FuzzySet.zero(mm.domain)
        for c in below:
            j = j | c
        assert problem_function(mm, t) == problem_function(mm, j)


@given(multimaps())
def test_structure_always_has_bounds(mm):
    result = delineate(mm)
    ks = result.structure
    assert frozenset() in ks.states and frozenset(mm.items) in ks.states
    check_witnesses(mm, result)
