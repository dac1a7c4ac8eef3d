#!/usr/bin/env python3
##
# @file test_schedulers.py
#
# @brief Tests of the online policies and the simulation loop.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/09.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Standard library
from fractions import Fraction

# External library
import pytest

# Internal library
from conftest import ON_PEAK
from models.errors import ConfigurationError
from models.job import Job
from models.schedule_state import ScheduleState, feasible_starts
from schedulers.decision import Policy, SchedulerConfig
from schedulers.factory import make_scheduler
from schedulers.green_slot import GreenSlot
from schedulers.random_fit import (Transition, optimal_probability,
                                   sufficient_green)
from simulators.time_stepping import TimeStepping, replay, run_online
from traces.adversarial import adversarial_instance


def decisions_of(instance, config):
    _, _, decisions = run_online(instance, config)

    return decisions


def profit_of(instance, config):
    _, report, _ = run_online(instance, config)

    return report.net_profit


@pytest.mark.parametrize("name, policy", [
    ("ff", Policy.FIRST_FIT), ("best-fit", Policy.BEST_FIT),
    ("GREEN_SLOT", Policy.GREEN_SLOT), ("rf", Policy.RANDOM_FIT),
])
def test_policy_names(name, policy):
    assert Policy.parse(name) is policy


def test_unknown_policy_and_bad_knobs():
    with pytest.raises(ConfigurationError):
        Policy.parse("worst-fit")

    with pytest.raises(ConfigurationError):
        SchedulerConfig(policy="rf", randomfit_p_override=2)

    with pytest.raises(ConfigurationError):
        SchedulerConfig(policy="gs", greenslot_penalty=-1)


def test_config_label():
    assert SchedulerConfig(policy="rf", randomfit_p_override=1).label == \
        "rf(p=1)"

    assert SchedulerConfig(policy="best-fit").label == "bf"


def test_first_fit_ratio_on_green_family(settings, values):
    instance = adversarial_instance("thm1-on-green", 4, settings)

    first_fit = profit_of(instance, SchedulerConfig(policy="ff"))

    assert first_fit == 4 * (settings.charge_rate - ON_PEAK)

    optimum = 4 * settings.charge_rate

    assert optimum / first_fit == values.v_g / values.v_on


def test_best_fit_ratios_on_two_job_families(settings, values):
    on_off = adversarial_instance("thm2-on-off", 4, settings)

    optimum = 4 * (2 * settings.charge_rate - settings.on_peak_cost
                   - settings.off_peak_cost)

    best_fit = profit_of(on_off, SchedulerConfig(policy="bf"))

    assert optimum / best_fit == 1 + values.v_on / values.v_off

    off_green = adversarial_instance("thm2-off-green", 4, settings)

    optimum = 4 * (2 * settings.charge_rate - settings.off_peak_cost)

    best_fit = profit_of(off_green, SchedulerConfig(policy="bf"))

    assert optimum / best_fit == 1 + values.v_off / values.v_g


def test_policy_equivalences(tiny_instances, zero_green_instances):
    for seed, instance in enumerate(tiny_instances):
        first_fit = decisions_of(instance, SchedulerConfig(policy="ff"))

        random_fit = decisions_of(instance, SchedulerConfig(
            policy="rf", randomfit_p_override=1, rng_seed=seed))

        assert random_fit == first_fit

        best_fit = decisions_of(instance, SchedulerConfig(policy="bf"))

        green_slot = decisions_of(instance, SchedulerConfig(
            policy="gs", greenslot_penalty=0))

        assert green_slot == best_fit

    for seed, instance in enumerate(zero_green_instances):
        best_fit = decisions_of(instance, SchedulerConfig(policy="bf"))

        random_fit = decisions_of(instance, SchedulerConfig(
            policy="rf", randomfit_p_override=0, rng_seed=seed))

        assert random_fit == best_fit


def test_green_slot_penalizes_late_starts(settings, instance_factory):
    job = Job(1, 0, 2, 1, Fraction("0.2"))

    instance = instance_factory([job], 1, [0] * 8 + [1, 1], [ON_PEAK] * 10)

    config = SchedulerConfig.from_settings("gs", settings)

    green_slot = GreenSlot(instance, config)

    assert green_slot.penalty(job, 7) == 0

    assert green_slot.penalty(job, 8) == 2 * settings.on_peak_cost * 2

    state = ScheduleState.for_instance(instance)

    assert green_slot.decide(state, job, 0).start == 7

    state = ScheduleState.for_instance(instance)

    best_fit = make_scheduler(instance, SchedulerConfig(policy="bf"))

    assert best_fit.decide(state, job, 0).start == 8


def test_random_fit_probabilities(settings, values):
    assert optimal_probability(values, Transition.ON_TO_OFF) == \
        Fraction(1026, 3581)

    assert optimal_probability(values, Transition.OFF_TO_ON) == \
        Fraction(1485, 3781)

    instance = adversarial_instance("thm3-1.1", 1, settings)

    random_fit = make_scheduler(
        instance, SchedulerConfig.from_settings("rf", settings))

    assert random_fit.probability(0) == pytest.approx(1026 / 3581)

    assert random_fit.transition(1) is Transition.OFF_TO_ON


@pytest.mark.parametrize("family, p", [("thm3-1.1", Fraction(1026, 3581)),
                                       ("thm3-2.1", Fraction(1485, 3781))])
def test_random_fit_branches(settings, family, p):
    instance = adversarial_instance(family, 1, settings)

    random_fit = make_scheduler(
        instance, SchedulerConfig.from_settings("rf", settings))

    state = ScheduleState.for_instance(instance)

    job = instance.jobs[0]

    (earliest_p, earliest), (economic_p, economic) = random_fit.branches(
        state, job, feasible_starts(instance, state, job, job.release))

    assert (earliest, economic) == (0, 1)

    assert earliest_p == pytest.approx(float(p))

    assert earliest_p + economic_p == pytest.approx(1)


def test_random_fit_green_branch_is_certain(settings):
    instance = adversarial_instance("thm3-2.1", 1, settings)

    random_fit = make_scheduler(
        instance, SchedulerConfig.from_settings("rf", settings))

    late = Job(2, 1, 1, 1, Fraction(1))

    state = ScheduleState.for_instance(instance)

    assert random_fit.branches(state, late, [1]) == [(1.0, 1)]


def test_random_fit_needs_ordered_values(settings):
    instance = adversarial_instance("thm1-on-green", 1, settings)

    config = SchedulerConfig(policy="rf", on_peak_cost=ON_PEAK,
                             off_peak_cost=ON_PEAK)

    with pytest.raises(ConfigurationError):
        make_scheduler(instance, config)


def test_random_fit_takes_green_at_the_earliest_start(settings,
                                                      instance_factory):
    job = Job(1, 0, 1, 1, Fraction(1, 2))

    instance = instance_factory([job], 1, [1, 0], [ON_PEAK, ON_PEAK])

    state = ScheduleState.for_instance(instance)

    assert sufficient_green(instance, state, job, 0)

    config = SchedulerConfig.from_settings("rf", settings,
                                           randomfit_p_override=0)

    assert decisions_of(instance, config)[0].start == 0


def test_simulation_is_reproducible(tiny_instances, settings):
    for seed, instance in enumerate(tiny_instances[:30]):
        config = SchedulerConfig(policy="rf", rng_seed=seed,
                                 randomfit_p_override=Fraction(1, 2))

        state, report, decisions = run_online(instance, config)

        assert decisions_of(instance, config) == decisions

        assert replay(instance, decisions).assignments == state.assignments

        assert len(decisions) == len(instance.jobs)

        assert report.jobs_completed + report.jobs_rejected == \
            len(instance.jobs)


def test_time_stepping_records_arrivals(settings):
    instance = adversarial_instance("thm2-on-off", 2, settings)

    simulator = TimeStepping(instance, SchedulerConfig(policy="ff"))

    state, _, decisions = simulator.run()

    assert list(simulator.arrivals_out) == [1, 1]

    assert state.assignments == {1: 0, 2: 1}

    assert [decision.scheduled for decision in decisions] == [True, True]
