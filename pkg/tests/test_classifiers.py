import pytest
from hypothesis import given

from fuzzyks import catalog
from fuzzyks.classifiers import (
    biseparability_13,
    biseparability_tttt,
    classify,
    cond_ks_molecule,
    cond_learning_space,
    cond_scs_meet,
    cond_star,
    cond_union_base,
    fringe_witness_mismatch,
    inner_fringe_witness,
    outer_fringe_witness,
    refines,
    separability_ccc,
    separability_fff,
    separability_reports,
    separability_ttt,
)
from fuzzyks.delineation import delineate
from fuzzyks.distributed import merge
from fuzzyks.fuzzy_core import FuzzySet
from fuzzyks.structure import (
    is_bi_discriminative,
    is_discriminative,
    is_intersection_closed,
    is_learning_space,
    is_union_closed,
)
from strategies import multimaps


def C(mm, **grades):
    return FuzzySet.from_mapping(mm.domain, grades)


def by_name(mm):
    return {c.name: c for c in classify(mm)}


def test_refines():
    nd = catalog.mutually_refining()
    assert refines(nd.mu["a"], nd.mu["b"]) and refines(nd.mu["b"], nd.mu["a"])
    inj = catalog.injective_disjunctive()
    assert refines(inj.mu["a"], inj.mu["b"])
    assert not refines(inj.mu["b"], inj.mu["a"])


def test_molecule_condition_is_not_necessary():
    # union-closed although q1 has a competency above no molecule
    mm = catalog.closure_not_meet()
    assert not cond_ks_molecule(mm)
    assert is_union_closed(delineate(mm).structure)


def test_meet_condition_is_not_necessary():
    mm = catalog.closure_not_meet()
    assert not cond_scs_meet(mm)
    assert is_intersection_closed(delineate(mm).structure)
    w = by_name(mm)["scs_meet"].witness
    assert w == ("q1", C(mm, s1="0.2"), C(mm, s1="0.1", s2="0.3"))


@pytest.mark.parametrize("name", ["learning_without_molecules", "learning_without_molecules_crisp"])
def test_learning_space_condition_is_not_necessary(name):
    mm = catalog.MULTIMAPS[name]()
    assert not cond_learning_space(mm)
    assert is_learning_space(delineate(mm).structure)


def test_learning_space_condition_on_disjunctive_maps():
    for name in ("injective_disjunctive", "prerequisite_pair", "disjunctive_pair"):
        mm = catalog.MULTIMAPS[name]()
        assert cond_learning_space(mm)
        assert is_learning_space(delineate(mm).structure)
    # a molecule bracket {a,b} with no one-smaller sub-union
    assert not cond_learning_space(catalog.mutually_refining())


def test_union_base_on_merge():
    merged = merge(catalog.merge_disjoint_items()).merged
    assert cond_union_base(merged)
    assert not cond_star(merged)
    assert is_union_closed(delineate(merged).structure)


def test_classify_rows():
    rows = by_name(catalog.all_ones_pair())
    assert list(rows) == ["union_base", "ks_molecule", "star", "scs_meet", "learning_space"]
    assert rows["union_base"].kind == "equivalence" and rows["star"].kind == "sufficient"
    assert not rows["ks_molecule"].condition and rows["ks_molecule"].oracle
    assert not any(c.violated for c in rows.values())


@pytest.mark.parametrize("name", sorted(catalog.MULTIMAPS))
def test_catalog_has_no_violations(name):
    mm = catalog.MULTIMAPS[name]()
    assert not [c.name for c in classify(mm) if c.violated]


def test_refinement_separability():
    nd = catalog.mutually_refining()
    r = separability_fff(nd)
    assert r.statements["(2)"] and r.statements["(3)"] and not r.statements["(4)"]
    assert not r.statements["skill_function"]
    assert not r.oracle["discriminative"] and r.holds
    assert r.witnesses["(4)"] == ("a", "b")


def test_injective_disjunctive_is_discriminative():
    mm = catalog.injective_disjunctive()
    r = separability_fff(mm)
    assert r.statements["(4)"] and r.oracle["discriminative"]
    assert not r.oracle["bi_discriminative"]


def test_least_below_separability():
    f14 = catalog.dominated_conjunctive()
    r = separability_ttt(f14)
    assert r.hypothesis_met and r.statements == {"(2)": True, "(3)": True} and r.holds


def test_least_below_hypothesis_can_fail():
    for name in ("shared_minima", "prerequisite_pair"):
        mm = catalog.MULTIMAPS[name]()
        for r in (separability_ttt(mm), biseparability_tttt(mm)):
            assert not r.hypothesis_met and r.holds is None
            assert set(r.statements.values()) == {None}
    assert not separability_ttt(catalog.shared_minima()).oracle["discriminative"]
    assert not biseparability_tttt(catalog.prerequisite_pair()).oracle["bi_discriminative"]


def test_difference_does_not_give_bi_discrimination():
    f14 = catalog.dominated_conjunctive()
    r = biseparability_tttt(f14)
    assert r.statements == {"(2)": True, "(3)": False}
    assert not r.oracle["bi_discriminative"]
    assert r.violations == ["bi_discriminative <=> (2)"]


def test_no_refinement_separability():
    assert not biseparability_13(catalog.disjunctive_pair()).statements["(2)"]
    assert biseparability_13(catalog.disjunctive_pair()).holds
    r = biseparability_13(merge(catalog.merge_disjoint_skills()).merged)
    assert r.statements["(2)"] and r.oracle["bi_discriminative"]
    assert biseparability_13(catalog.dominated_conjunctive()).witnesses["(2)"] == ("b", "a")


def test_least_element_four_way_claim_is_refuted():
    r = separability_ccc(catalog.dominated_conjunctive())
    assert r.statements == {"(3)": True, "(4)": False}
    assert r.oracle == {"discriminative": True, "bi_discriminative": False}
    assert "discriminative <=> bi_discriminative" in r.violations
    assert "discriminative <=> (3)" not in r.violations
    assert not separability_ccc(catalog.disjunctive_pair()).hypothesis_met


def test_fringe_witnesses():
    mm = catalog.disjunctive_pair()
    res = delineate(mm)
    assert outer_fringe_witness(mm, res, (), "r") in {C(mm, s1="0.1"), C(mm, s2="0.7")}
    assert outer_fringe_witness(mm, res, (), "q") is None
    assert outer_fringe_witness(mm, res, {"r"}, "q") == C(mm, s1="0.2")
    assert inner_fringe_witness(mm, res, {"q", "r"}, "q") == {"r": C(mm, s1="0.1")}
    assert inner_fringe_witness(mm, res, {"q", "r"}, "r") is None
    assert inner_fringe_witness(mm, res, {"r"}, "r") == {}
    assert fringe_witness_mismatch(mm, res) is None


def test_fringe_witness_guards():
    mm = catalog.disjunctive_pair()
    res = delineate(mm)
    with pytest.raises(ValueError, match="not a state"):
        outer_fringe_witness(mm, res, {"q"}, "r")
    with pytest.raises(ValueError, match="already belongs"):
        outer_fringe_witness(mm, res, {"r"}, "r")
    f14 = catalog.dominated_conjunctive()
    with pytest.raises(ValueError, match="molecule"):
        outer_fringe_witness(f14, delineate(f14), (), "a")


@given(multimaps())
def test_structural_criteria_agree_with_oracle(mm):
    assert not [c for c in classify(mm) if c.violated]


@given(multimaps())
def test_family_separability(mm):
    r = separability_fff(mm)
    assert r.holds, r.violations


@given(multimaps())
def test_least_below_equivalences(mm):
    r = separability_ttt(mm)
    assert r.holds in (True, None), r.violations
    t = biseparability_tttt(mm)
    if t.hypothesis_met:
        assert t.statements["(3)"] == t.oracle["bi_discriminative"]


@given(multimaps())
def test_least_element_valid_equivalences(mm):
    r = separability_ccc(mm)
    if r.hypothesis_met:
        assert r.statements["(3)"] == r.oracle["discriminative"]
        assert r.statements["(4)"] == r.oracle["bi_discriminative"]


@given(multimaps())
def test_no_refinement_equivalence(mm):
    assert biseparability_13(mm).holds


@given(multimaps())
def test_fringe_witnesses_match_fringes(mm):
    if cond_ks_molecule(mm):
        assert fringe_witness_mismatch(mm, delineate(mm)) is None


@given(multimaps())
def test_reports_share_one_oracle(mm):
    ks = delineate(mm).structure
    for r in separability_reports(mm):
        assert r.oracle == {"discriminative": is_discriminative(ks), "bi_discriminative": is_bi_discriminative(ks)}
