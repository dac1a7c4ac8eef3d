#!/usr/bin/env python3
##
# @file test_harness.py
#
# @brief Tests of the ratio table, the sweep, the augmentation experiment
# and the Monte Carlo estimates.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/11.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Standard library
import time
from fractions import Fraction

# External library
import pytest

# Internal library
from harness.augmentation import augmentation_experiment, augmentation_ratio
from harness.experiment import run_experiment
from harness.monte_carlo import SCENARIOS, monte_carlo_ratio, \
    scenario_closed_form, scenario_probability
from harness.plan import ExperimentPlan
from harness.ratio import BEST_ONLINE, EXACT, CellReference, RatioRow, \
    RatioTable, ratio_lower_bound
from harness.seeding import cell_seed
from models.errors import ConfigurationError
from models.profit import augmentation_lower_bound
from schedulers.decision import SchedulerConfig
from traces.adversarial import adversarial_instance


def small_plan(settings, **fields):
    values = dict(utilizations=(Fraction(1, 10),), repetitions=1,
                  policies=("ff",), uniform_jobs=True,
                  settings=settings.replace(machines=16, horizon_slots=24))

    values.update(fields)

    return ExperimentPlan(**values)


def test_ratio_lower_bound_normalizes_by_the_best_policy():
    table = RatioTable([RatioRow(Fraction(1), Fraction(1), "a", Fraction(10)),
                        RatioRow(Fraction(1), Fraction(1), "b", Fraction(8))])

    ratio_lower_bound(table)

    assert table.row(1, 1, "a").ratio == 1

    assert table.row(1, 1, "b").ratio == Fraction(5, 4)

    assert table.references[(1, 1)].kind == BEST_ONLINE


def test_exact_reference_raises_every_ratio():
    cell = (Fraction(1), Fraction(1))

    table = RatioTable([RatioRow(*cell, "a", Fraction(10)),
                        RatioRow(*cell, "b", Fraction(8))],
                       {cell: CellReference(exact_profit=Fraction(12))})

    ratio_lower_bound(table)

    assert table.references[cell].kind == EXACT

    assert all(row.ratio > 1 for row in table.rows)


def test_undefined_ratios():
    table = RatioTable([RatioRow(Fraction(1), Fraction(1), "a", Fraction(0)),
                        RatioRow(Fraction(1), Fraction(1), "b",
                                 Fraction(-1))])

    ratio_lower_bound(table)

    assert all(row.ratio is None for row in table.rows)


def test_ratio_table_csv(tmp_path):
    table = ratio_lower_bound(RatioTable([
        RatioRow(Fraction(1, 10), Fraction(1, 5), "ff", Fraction(8)),
        RatioRow(Fraction(1, 10), Fraction(1, 5), "bf", Fraction(10))]))

    path = tmp_path / "table.csv"

    table.to_csv(path)

    again = ratio_lower_bound(RatioTable.read_csv(path))

    assert again.row(Fraction(1, 10), Fraction(1, 5), "ff").ratio == \
        Fraction(5, 4)

    assert list(again.to_frame()["policy"]) == ["ff", "bf"]


def test_empty_downgraded_cells_are_not_flags(tmp_path):
    path = tmp_path / "table.csv"

    path.write_text("utilization,least_quality,policy,mean_profit,downgraded\n"
                    "0.1,0.2,ff,8,\n0.5,0.2,ff,8,True\n")

    table = RatioTable.read_csv(path)

    assert (Fraction(1, 10), Fraction(1, 5)) not in table.references

    assert table.references[(Fraction(1, 2), Fraction(1, 5))].downgraded


def test_cell_seeds_depend_only_on_their_labels():
    first = cell_seed(0, "policy", Fraction(1, 10), Fraction(1, 5), 3)

    assert first == cell_seed(0, "policy", Fraction(1, 10), Fraction(1, 5), 3)

    assert first != cell_seed(0, "policy", Fraction(1, 10), Fraction(1, 5), 4)

    assert first != cell_seed(1, "policy", Fraction(1, 10), Fraction(1, 5), 3)

    assert 0 <= first < 2 ** 64


def test_plan_validation(settings, tmp_path):
    with pytest.raises(ConfigurationError):
        ExperimentPlan(repetitions=0)

    with pytest.raises(ConfigurationError):
        ExperimentPlan(utilizations=())

    with pytest.raises(ConfigurationError):
        ExperimentPlan(policies=("ff", "first-fit"))

    path = tmp_path / "plan.yaml"

    path.write_text("settings: {machines: 16}\nutilizations: [0.1, 0.5]\n"
                    "policies: [ff, {policy: rf, randomfit_p_override: 1}]\n")

    plan = ExperimentPlan.from_yaml(path, settings, repetitions=2)

    assert plan.settings.machines == 16

    assert plan.utilizations == (Fraction(1, 10), Fraction(1, 2))

    assert [config.label for config in plan.policies] == ["ff", "rf(p=1)"]

    assert plan.repetitions == 2

    path.write_text("colour: blue\n")

    with pytest.raises(ConfigurationError):
        ExperimentPlan.from_yaml(path)


def test_single_policy_is_its_own_reference(settings):
    table = run_experiment(small_plan(settings))

    assert len(table.rows) == 1

    assert table.rows[0].ratio == 1


def test_sweep_reports_workload_and_green_use(settings, tmp_path):
    table = run_experiment(small_plan(settings, policies=("ff", "bf")))

    for row in table.rows:
        assert row.mean_workload > 0

        assert 0 <= row.green_utilization <= 1

    path = tmp_path / "table.csv"

    table.to_csv(path)

    again = RatioTable.read_csv(path)

    assert [float(row.mean_workload) for row in again.rows] == \
        pytest.approx([float(row.mean_workload) for row in table.rows])


def test_deterministic_policies_do_not_vary_on_a_fixed_workload(settings):
    table = run_experiment(small_plan(settings, repetitions=3,
                                      policies=("ff", "bf"),
                                      fixed_workload=True))

    assert all(row.std_profit == 0 for row in table.rows)


def test_offline_reference_dominates(settings):
    table = run_experiment(small_plan(settings, repetitions=2,
                                      policies=("ff", "bf", "rf", "gs"),
                                      offline=True))

    reference = table.references[(Fraction(1, 10), Fraction(1, 5))]

    assert reference.kind == EXACT and not reference.downgraded

    assert all(row.mean_profit <= reference.exact_profit
               for row in table.rows)

    assert all(row.ratio >= 1 for row in table.rows)


def test_exhausted_budget_downgrades_the_reference(settings):
    table = run_experiment(small_plan(settings, offline=True, node_limit=1))

    reference = table.references[(Fraction(1, 10), Fraction(1, 5))]

    assert reference.downgraded and reference.kind == BEST_ONLINE


def test_workers_do_not_change_the_table(settings):
    plan = small_plan(settings, repetitions=2, policies=("ff", "rf"))

    serial = run_experiment(plan).to_frame()

    parallel = run_experiment(ExperimentPlan(**{
        **{name: getattr(plan, name) for name in plan.__dataclass_fields__},
        "workers": 2})).to_frame()

    assert serial.equals(parallel)


@pytest.mark.parametrize("alpha", [1, 2, 4])
@pytest.mark.parametrize("family, policy, expected", [
    ("thm1-on-green", "ff", lambda v: v.v_g / v.v_on),
    ("thm1-on-off", "ff", lambda v: v.v_off / v.v_on),
    ("thm2-on-off", "bf", lambda v: 1 + v.v_on / v.v_off),
    ("thm2-off-green", "bf", lambda v: 1 + v.v_off / v.v_g),
])
def test_augmentation_keeps_the_ratios(settings, values, alpha, family,
                                       policy, expected):
    instance = adversarial_instance(family, 4, settings)

    online, exact = augmentation_experiment(
        instance, alpha, SchedulerConfig.from_settings(policy, settings))

    assert augmentation_ratio(online, exact) == expected(values)


def test_augmentation_bound_and_factor(settings, values):
    assert augmentation_lower_bound(values) == values.v_g / values.v_on

    instance = adversarial_instance("thm1-on-green", 4, settings)

    with pytest.raises(ConfigurationError):
        augmentation_experiment(instance, Fraction(1, 2),
                                SchedulerConfig(policy="ff"))


def test_closed_forms_meet_the_bound(values):
    expected = {"1.1": Fraction(3581, 2916), "1.2": Fraction(3581, 2916),
                "2.1": Fraction(3781, 3025), "2.2": Fraction(3781, 3025)}

    for scenario in SCENARIOS:
        p = scenario_probability(scenario, values)

        assert scenario_closed_form(scenario, values, p) == expected[scenario]

    with pytest.raises(ConfigurationError):
        scenario_closed_form("3.1", values, Fraction(1, 2))


def test_monte_carlo_with_a_certain_probability(settings, values):
    result = monte_carlo_ratio("1.1", settings, trials=10 ** 4,
                               p_override=1)

    assert result.ratio == values.v_off / values.v_on

    assert result.standard_error == 0


def test_monte_carlo_needs_enough_trials(settings):
    with pytest.raises(ConfigurationError):
        monte_carlo_ratio("1.1", settings, trials=100)


@pytest.mark.slow
def test_monte_carlo_matches_the_closed_forms(settings):
    began = time.perf_counter()

    results = [monte_carlo_ratio(scenario, settings, trials=10 ** 5, seed=17)
               for scenario in SCENARIOS]

    assert time.perf_counter() - began < 30

    for result in results:
        assert abs(float(result.ratio) - float(result.closed_form)) <= \
            3 * result.standard_error

    worst = max(results, key=lambda result: result.ratio)

    assert float(worst.ratio) <= 1.25 + 3 * worst.standard_error


@pytest.mark.slow
def test_monte_carlo_error_shrinks(settings):
    few = monte_carlo_ratio("2.2", settings, trials=10 ** 4, seed=1)

    many = monte_carlo_ratio("2.2", settings, trials=10 ** 6, seed=1)

    assert 8 < few.standard_error / many.standard_error < 12.5


@pytest.mark.slow
def test_utilization_reverses_first_fit_and_best_fit(settings):
    low, high = Fraction(1, 10), Fraction(1)

    plan = ExperimentPlan(
        utilizations=(low, high), least_qualities=(Fraction(1, 5),),
        policies=("ff", "bf", "rf"), repetitions=30, uniform_jobs=True,
        settings=settings.replace(machines=16))

    table = run_experiment(plan)

    def ratio(utilization, policy):
        return table.row(utilization, Fraction(1, 5), policy).ratio

    assert ratio(low, "ff") > ratio(low, "bf")

    assert ratio(low, "bf") <= ratio(low, "rf") <= ratio(low, "ff")

    assert ratio(high, "bf") > ratio(high, "ff")

    assert ratio(low, "rf") <= Fraction(5, 4)

    assert ratio(high, "rf") <= Fraction(5, 4)
