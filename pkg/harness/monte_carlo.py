#!/usr/bin/env python3
##
# @file monte_carlo.py
#
# @brief Provide the Monte Carlo estimate of Random-Fit's expected ratio on
# its two-slot scenarios.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/07.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Standard library
import collections
import dataclasses
import logging
import math
from fractions import Fraction

# Internal library
from harness.seeding import cell_seed
from models.errors import ConfigurationError
from models.profit import profit_report, values_from_settings
from models.schedule_state import ScheduleState, feasible_starts
from models.settings import to_fraction
from schedulers.decision import Policy, SchedulerConfig
from schedulers.factory import make_scheduler
from schedulers.random_fit import Transition, optimal_probability
from simulators.rng import run_stream
from solvers.branch_and_bound import solve_exact
from traces.adversarial import Family, adversarial_instance

LOG = logging.getLogger(__name__)

MIN_TRIALS = 10 ** 4

BLOCK_TRIALS = 10 ** 5

SCENARIOS = ("1.1", "1.2", "2.1", "2.2")


@dataclasses.dataclass(frozen=True)
class MonteCarloResult:
    scenario: str

    trials: int

    probability: Fraction

    optimum: Fraction

    mean_profit: Fraction

    ratio: Fraction

    standard_error: float

    closed_form: Fraction

    def as_dict(self):
        return {key: value if isinstance(value, (int, float, str))
                else str(value)
                for key, value in dataclasses.asdict(self).items()}


def scenario_probability(scenario, values, p_override=None):
    """! The probability Random-Fit uses on a scenario.

    Scenarios 1.x start on-peak with off-peak next, scenarios 2.x start
    off-peak with green next.
    """
    if p_override is not None:
        return to_fraction(p_override)

    transition = Transition.ON_TO_OFF if scenario.startswith("1") else \
        Transition.OFF_TO_ON

    return optimal_probability(values, transition)


def scenario_closed_form(scenario, values, p):
    """! The expected ratio OPT / E[RF] of a scenario.
    @param scenario<str>: One of 1.1, 1.2, 2.1, 2.2.
    @param values<NormalizedValues>: The normalized values.
    @param p<Fraction>: The probability of taking the earliest start.
    """
    p = to_fraction(p)

    v_on, v_off, v_g = values.v_on, values.v_off, values.v_g

    forms = {
        "1.1": lambda: v_off / (p * v_on + (1 - p) * v_off),
        "1.2": lambda: (v_on + v_off) / (p * v_on + v_off),
        "2.1": lambda: v_g / (p * v_off + (1 - p) * v_g),
        "2.2": lambda: (v_off + v_g) / (p * v_off + v_g),
    }

    if scenario not in forms:
        raise ConfigurationError(f"unknown scenario: {scenario}")

    return forms[scenario]()


def monte_carlo_ratio(scenario, settings, trials=10 ** 5, seed=0,
                      p_override=None, machines=1):
    """! Estimate Random-Fit's expected ratio on a scenario instance.

    The scenario instance is fixed, so Random-Fit's choices form a small
    tree with one coin per randomized job. Trials draw their coins in bulk,
    one uniform per job, and are routed down the tree in blocks. The ratio
    is OPT over the mean profit, its standard error follows from the exact
    sample variance by the delta method.
    @param scenario<str>: One of 1.1, 1.2, 2.1, 2.2.
    @param settings<Settings>: Tariff and charge rate.
    @param trials<int>: At least MIN_TRIALS.
    @param seed<int>: The base seed.
    @param p_override<Fraction>: A fixed probability instead of the optimal one.
    @param machines<int>: The cluster size M.
    @return The MonteCarloResult.
    """
    if trials < MIN_TRIALS:
        raise ConfigurationError(f"need at least {MIN_TRIALS} trials")

    scenario = str(scenario)

    instance = adversarial_instance(Family.scenario(scenario), machines,
                                    settings)

    values = values_from_settings(settings)

    optimum = solve_exact(instance).net_profit

    scheduler = make_scheduler(instance, SchedulerConfig.from_settings(
        Policy.RANDOM_FIT, settings, randomfit_p_override=p_override))

    rng = run_stream(cell_seed(seed, "trials", scenario))

    outcomes = collections.Counter()

    for first in range(0, trials, BLOCK_TRIALS):
        coins = rng.random((min(BLOCK_TRIALS, trials - first),
                            len(instance.jobs)))

        _tally(instance, scheduler, ScheduleState.for_instance(instance), 0,
               coins, outcomes)

    profits = {outcome: _profit(instance, outcome) for outcome in outcomes}

    mean = sum((profits[outcome] * count for outcome, count in
                outcomes.items()), Fraction(0)) / trials

    variance = sum((count * (profits[outcome] - mean) ** 2 for outcome, count
                    in outcomes.items()), Fraction(0)) / (trials - 1)

    ratio = optimum / mean

    probability = scenario_probability(scenario, values, p_override)

    LOG.info("scenario %s: ratio %.5f over %d trials, %d outcomes", scenario,
             float(ratio), trials, len(outcomes))

    return MonteCarloResult(
        scenario=scenario,
        trials=trials,
        probability=probability,
        optimum=optimum,
        mean_profit=mean,
        ratio=ratio,
        standard_error=float(optimum / mean ** 2) *
        math.sqrt(variance / trials),
        closed_form=scenario_closed_form(scenario, values, probability))


def _tally(instance, scheduler, state, index, coins, outcomes):
    """! Count the outcomes of the trials that reach a schedule.
    @param instance<Instance>: The scenario instance.
    @param scheduler<RandomFit>: The policy.
    @param state<ScheduleState>: The schedule after the first `index` jobs.
    @param index<int>: The next job in release order.
    @param coins<ndarray>: One row of uniforms per trial, one column per job.
    @param outcomes<Counter>: Sorted assignments to trial counts.
    """
    if not len(coins):
        return

    if index == len(instance.jobs):
        outcomes[tuple(sorted(state.assignments.items()))] += len(coins)

        return

    job = instance.jobs[index]

    starts = feasible_starts(instance, state, job, job.release)

    if not starts:
        _tally(instance, scheduler, state, index + 1, coins, outcomes)

        return

    branches = scheduler.branches(state, job, starts)

    if len(branches) == 1:
        routed = [(branches[0][1], coins)]

    else:
        earliest = coins[:, index] < branches[0][0]

        routed = [(branches[0][1], coins[earliest]),
                  (branches[1][1], coins[~earliest])]

    for start, subset in routed:
        child = state.copy()

        child.assign(job, start)

        _tally(instance, scheduler, child, index + 1, subset, outcomes)


def _profit(instance, outcome):
    """! Net profit of an assignment outcome."""
    state = ScheduleState.for_instance(instance)

    for job_id, start in outcome:
        state.assign(instance.job(job_id), start)

    return profit_report(instance, state).net_profit
