from fractions import Fraction

from comaxlab.classify import membership
from comaxlab.seq_comonotone import comonotone
from comaxlab.seqspace import constant, join, ramp
from comaxlab.suites import (
    ALL_BRANCHES,
    BRANCH_PEAK_ONE,
    branch_tag,
    counterexample_suite,
    named_witness_pairs,
    normalized_search,
    structured_family,
)

F = Fraction

GRID3 = (F(0), F(1, 2), F(1))


def test_named_pairs_cover_all_branches_and_are_comonotone():
    tags = set()
    for tag, f, g in named_witness_pairs():
        assert comonotone(f, g), tag
        assert branch_tag(membership(f), membership(g)) == tag
        tags.add(tag)
    assert tags == set(ALL_BRANCHES)


def test_branch_tag_of_full_peak_pair():
    f, g = ramp(F(1, 2)), constant(F(0))
    assert branch_tag(membership(f), membership(g)) == BRANCH_PEAK_ONE
    # The join keeps the full peak along the sequence and stays below 1 at iso.
    assert membership(join(f, g)).in_zero_class is False


def test_structured_family_contains_key_functions():
    family = structured_family(GRID3, 2)
    assert ramp(F(0)) in family
    assert ramp(F(1)) in family
    assert constant(F(0)) in family
    assert constant(F(1, 2)) in family
    assert len(family) == len(set(family))
    # deterministic ordering
    assert family == structured_family(GRID3, 2)


def test_counterexample_suite_passes_and_hits_every_branch():
    report = counterexample_suite(seed=3, samples=150, grid=GRID3, prefix_max=2)
    assert report.status == "pass"
    assert report.counts["maxitivity_violations"] == 0
    assert report.counts["ordered_violations"] == 0
    for branch in ALL_BRANCHES:
        assert report.counts[f"branch_{branch}"] >= 1, branch
    assert report.counts["generated_pairs"] == 150
    assert report.counts["fact_ramp0_below_ramp1"] == 1
    assert report.counts["fact_step_of_ramp1_is_zero"] == 1
    assert report.counts["fact_step_of_ramp0_is_one"] == 1


def test_counterexample_suite_deterministic_across_jobs():
    a = counterexample_suite(seed=5, samples=64, grid=GRID3, prefix_max=1, jobs=1)
    b = counterexample_suite(seed=5, samples=64, grid=GRID3, prefix_max=1, jobs=3)
    assert a.to_dict() == b.to_dict()


def test_counterexample_suite_seed_changes_nothing_about_verdict():
    a = counterexample_suite(seed=11, samples=40, grid=GRID3, prefix_max=1)
    b = counterexample_suite(seed=12, samples=40, grid=GRID3, prefix_max=1)
    assert a.status == b.status == "pass"


def test_normalized_search_is_inconclusive_and_explains_rejections():
    report = normalized_search(seed=0, samples=60, grid=GRID3, prefix_max=1)
    assert report.status == "inconclusive"
    assert report.counts["candidates_found"] == 0
    outcomes = {w["candidate"]: w["outcome"] for w in report.witnesses}
    assert outcomes["step-functional"] == "rejected_not_normalized"
    assert outcomes["eval-isolated"] == "monotone_at_this_scale"
    assert outcomes["eval-limit"] == "monotone_at_this_scale"
    assert any(v == "rejected_not_normalized" for k, v in outcomes.items() if "step" in k)


def test_normalized_search_rejects_step_functional_on_a_constant():
    report = normalized_search(seed=0, samples=20, grid=GRID3, prefix_max=1)
    record = next(w for w in report.witnesses if w["candidate"] == "step-functional")
    c = Fraction(record["constant"])
    assert 0 < c <= 1
    assert Fraction(record["value"]) == 1
