"""Constants search: formulas, enumeration, brute force, and suite checks."""

import json

import pytest

from zerosum import (
    BudgetExceeded,
    ConstantReport,
    SearchBudget,
    brute_force_modified_constant,
    check_all_have_witness,
    check_lemma_3n,
    check_lemma_por2p,
    conjecture_value,
    count_zero_sum_subseqs,
    enumerate_multisets,
    enumerate_zero_sum_multisets,
    formula_modified_cyclic,
    formula_modified_square,
    harborth_bounds,
    has_zero_sum_of_length,
    make_enumeration_tasks,
    make_group,
    parse_sequence,
    reports_to_csv,
    run_enumeration_task,
    verify_theorem,
)


def test_formula_cyclic_examples():
    assert formula_modified_cyclic(6, 1) == 9
    assert formula_modified_cyclic(2, 1) == 2
    assert formula_modified_cyclic(10, 2) == 28
    with pytest.raises(ValueError):
        formula_modified_cyclic(0, 1)


def test_formula_square_examples():
    assert formula_modified_square(2) == 5
    assert formula_modified_square(3) == 9
    assert formula_modified_square(4) == 12


def test_harborth_examples_and_monotonicity():
    assert harborth_bounds(3, 3) == (17, 55)
    assert harborth_bounds(2, 2) == (5, 5)
    assert harborth_bounds(3, 2) == (9, 19)
    for n in range(1, 101):
        for r in range(1, 7):
            lo, hi = harborth_bounds(n, r)
            assert lo <= hi
            assert (lo == hi) == (n <= 2)


def test_conjecture_value_examples():
    assert conjecture_value(2, 3) == 9
    assert conjecture_value(2, 2) == 5 == formula_modified_square(2)
    assert conjecture_value(4, 2) == 12 == formula_modified_square(4)
    with pytest.raises(ValueError):
        conjecture_value(3, 2)


def collect(group, length, **kw):
    seen = []
    stats = enumerate_zero_sum_multisets(group, length, seen.append, **kw)
    return seen, stats


def test_enumerate_examples():
    seen, stats = collect(make_group([2]), 2)
    assert [s.counts for s in seen] == [{(0,): 2}, {(1,): 2}]
    assert stats.visited == 2

    seen, _ = collect(make_group([3]), 1)
    assert [s.counts for s in seen] == [{(0,): 1}]

    seen, _ = collect(make_group([2, 2]), 2)
    assert len(seen) == 4
    assert all(len(s.counts) == 1 for s in seen)  # each is a doubled element


def test_enumerate_colex_order():
    # Multiplicity vectors ascend in colex order: the last element's
    # multiplicity is the slowest index.
    seen = []
    enumerate_multisets(make_group([3]), 2, seen.append, zero_sum_only=False)
    vectors = []
    for s in seen:
        vec = [s.counts.get((i,), 0) for i in range(3)]
        vectors.append(tuple(vec))
    assert vectors == sorted(vectors, key=lambda v: v[::-1])
    assert len(vectors) == 6  # C(2 + 2, 2)


def test_enumerate_symmetry_reduction():
    g = make_group([3])
    full, _ = collect(g, 3)
    reduced, _ = collect(g, 3, symmetry=True)
    assert len(reduced) < len(full)
    # Verdicts per length agree between full and symmetry-reduced runs.
    for target in (2, 3):
        assert all(has_zero_sum_of_length(s, target) for s in full) == all(
            has_zero_sum_of_length(s, target) for s in reduced
        )


def test_enumerate_budget_abort():
    g = make_group([5])
    with pytest.raises(BudgetExceeded):
        enumerate_multisets(
            g, 10, lambda s: None, zero_sum_only=False, budget=SearchBudget(max_nodes=50)
        )


def test_enumeration_tasks_partition():
    g = make_group([3, 3])
    tasks = make_enumeration_tasks(g, 5, 4, zero_sum_only=True)
    ranges = [t.outer_range for t in tasks]
    covered = sorted(v for lo, hi in ranges for v in range(lo, hi + 1))
    assert covered == list(range(6))  # disjoint cover of 0..L
    parts: list = []
    for t in tasks:
        run_enumeration_task(t, parts.append)
    whole, _ = collect(g, 5)
    assert [s.counts for s in parts] == [s.counts for s in whole]


def test_brute_force_spec_cases():
    r = brute_force_modified_constant(make_group([2]), 2, window=2)
    assert r.computed_value == 2
    assert r.extremal_witness == "Z/2: 0"
    assert r.window == (2, 4)

    r = brute_force_modified_constant(make_group([3]), 3, window=2)
    assert r.computed_value == 5
    assert r.extremal_witness == "Z/3: 1^2 2^2"

    r = brute_force_modified_constant(make_group([2, 2]), 2, window=2)
    assert r.computed_value == 5
    assert r.extremal_witness == "Z/2^2: (0,0) (0,1) (1,0) (1,1)"


def test_brute_force_report_fields():
    r = brute_force_modified_constant(
        make_group([4]), 4, window=2, claimed_value=formula_modified_cyclic(4, 1)
    )
    assert r.computed_value == 6 and not r.discrepancy
    payload = r.to_jsonable()
    assert payload["status"] == "OK"
    assert payload["window_lo"] == 6 and payload["window_hi"] == 8
    witness = parse_sequence(r.extremal_witness)
    assert witness.length == r.computed_value - 1
    assert witness.is_zero_sum()
    assert not has_zero_sum_of_length(witness, 4)
    assert r.stats.sequences_checked > 0

    fake = ConstantReport(
        group="Z/4", target=4, claimed_value=7, computed_value=6,
        extremal_witness="Z/4:", window=(6, 8), stats=r.stats,
    )
    assert fake.discrepancy and fake.to_jsonable()["status"] == "DISCREPANCY"


def test_brute_force_trivial_group():
    r = brute_force_modified_constant(make_group([1]), 1, window=2)
    assert r.computed_value == 1
    assert r.extremal_witness == "Z/1:"


def test_brute_force_budget_exhaustion():
    # No length-1 zero-sum subsequence ever appears in 0-free sequences, so
    # the constant does not exist and the budget must trip.
    with pytest.raises(BudgetExceeded):
        brute_force_modified_constant(
            make_group([2]), 1, window=2, budget=SearchBudget(max_nodes=2000)
        )


def test_check_all_have_witness():
    rep = check_all_have_witness(
        make_group([3]), 5, 3, zero_sum_only=False, name="egz"
    )
    assert rep.passed and rep.violations == 0

    rep = check_all_have_witness(
        make_group([3]), 4, 3, zero_sum_only=False, name="egz-negative"
    )
    assert not rep.passed
    counter = parse_sequence(rep.counterexample)
    assert counter.length == 4
    assert not has_zero_sum_of_length(counter, 3)


def test_por2p_exhaustive_p2():
    rep = check_lemma_por2p(2, mode="exhaustive")
    assert rep.passed and rep.violations == 0
    # C(7,3) + C(8,3) multisets of sizes 4 and 5 over a 4-element group.
    assert rep.checked + rep.vacuous == 35 + 56


def test_por2p_hand_example():
    j = parse_sequence("Z/2^2: (0,0) (0,1) (1,0) (1,1)")
    assert count_zero_sum_subseqs(j, 2) == 0
    assert count_zero_sum_subseqs(j, 4) % 2 == 1  # -1 mod 2


def test_por2p_sampled_small():
    rep = check_lemma_por2p(3, mode="sample", count=50, seed=1)
    assert rep.passed and rep.checked >= 100  # 50 hypothesis cases per size


def test_por2p_mode_validation():
    with pytest.raises(ValueError):
        check_lemma_por2p(3, mode="exhaustive")
    with pytest.raises(ValueError):
        check_lemma_por2p(2, mode="nonsense")


def test_lemma3n_exhaustive_small():
    rep = check_lemma_3n(2)
    assert rep.passed and rep.params["mode"] == "exhaustive"
    assert rep.checked > 0


def test_lemma3n_sampled_small():
    rep = check_lemma_3n(4, samples=25, seed=2)
    assert rep.passed and rep.params["mode"] == "sample"
    assert rep.checked == 25


def test_verify_cyclic_suite():
    reports = verify_theorem("cyclic", n_values=[2, 3, 4], t_values=[1])
    assert len(reports) == 3
    for r in reports:
        assert not r.discrepancy
        assert r.claimed_value == r.computed_value


def test_verify_conjecture_suite():
    reports = verify_theorem("conjecture", n_values=[1, 2])
    for r, expect in zip(reports, (2, 5)):
        assert r.computed_value == expect == r.claimed_value


def test_verify_unknown_suite():
    with pytest.raises(ValueError):
        verify_theorem("nope")


def test_reports_csv_columns():
    reports = verify_theorem("cyclic", n_values=[2, 3], t_values=[1])
    csv_text = reports_to_csv(reports)
    lines = csv_text.strip().splitlines()
    assert lines[0] == "group,t,claimed,computed,window_lo,window_hi,witness,wall_ms,sequences_checked"
    assert len(lines) == 3
    assert lines[1].startswith("Z/2,2,2,2,2,4,")


def test_report_jsonable_is_json_serializable():
    reports = verify_theorem("egz", n_values=[2, 3])
    blob = json.dumps([r.to_jsonable() for r in reports], sort_keys=True)
    assert "egz" in blob


def test_bruteforce_witness_matches_construction_length():
    # The searched extremal and the built one certify the same bound.
    from zerosum import build_cyclic_extremal, build_square_extremal

    for n, t in ((3, 1), (4, 1), (6, 1), (3, 2)):
        report = brute_force_modified_constant(
            make_group([n]), n * t, window=1, claimed_value=formula_modified_cyclic(n, t)
        )
        assert not report.discrepancy
        searched = parse_sequence(report.extremal_witness)
        built = build_cyclic_extremal(n, t)
        assert searched.length == built.length == report.computed_value - 1
        assert not has_zero_sum_of_length(searched, n * t)
        assert not has_zero_sum_of_length(built, n * t)

    report = brute_force_modified_constant(make_group([3, 3]), 3, window=1)
    assert parse_sequence(report.extremal_witness).length == build_square_extremal(3).length
