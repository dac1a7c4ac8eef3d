#!/usr/bin/env python3
##
# @file experiment.py
#
# @brief Provide the utilization sweep that feeds the ratio table.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/06.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Standard library
import functools
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

# External library
import numpy as np

# Internal library
from harness.ratio import CellReference, RatioRow, RatioTable, \
    ratio_lower_bound
from harness.seeding import cell_seed
from models.instance import Instance
from simulators.time_stepping import run_online
from solvers.branch_and_bound import solve_exact
from traces.pricing import PricingSchedule, pricing_series
from traces.solar import parse_solar, scale_solar
from traces.synthetic import diurnal_solar, grid_like_trace, \
    uniform_workload
from traces.workload import parse_workload, scale_workload

LOG = logging.getLogger(__name__)


def build_instance(plan, utilization, least_quality, seed):
    """! The instance of one repetition of one cell.
    @param plan<ExperimentPlan>: The plan.
    @param utilization<Fraction>: Target demand over M * T.
    @param least_quality<Fraction>: L of every job.
    @param seed<int>: The workload seed.
    @return The Instance.
    """
    settings = plan.settings

    machines, horizon = settings.machines, settings.horizon_slots

    if plan.uniform_jobs:
        jobs = uniform_workload(machines, horizon, utilization,
                                plan.job_length, plan.job_nodes,
                                least_quality, seed)

    else:
        jobs = scale_workload(_workload(plan), machines,
                              settings.slot_minutes, utilization,
                              least_quality, seed, horizon)

    green = scale_solar(_solar(plan), machines, settings.power_per_machine_w,
                        settings.slot_minutes, horizon)

    price = pricing_series(PricingSchedule.from_settings(settings), horizon,
                           settings.slot_minutes,
                           settings.energy_per_machine_slot)

    return Instance(tuple(jobs), machines, horizon, green, price,
                    settings.charge_rate)


def run_experiment(plan):
    """! Run every policy over every cell and repetition of a plan.

    Repetitions run on `plan.workers` processes; their results are merged
    in (cell, repetition) order, so the table does not depend on the
    worker count.
    @param plan<ExperimentPlan>: The plan.
    @return The RatioTable with ratios filled in.
    """
    tasks = [(plan, utilization, least_quality, repetition)
             for utilization in plan.utilizations
             for least_quality in plan.least_qualities
             for repetition in range(plan.repetitions)]

    LOG.info("running %d repetitions of %d policies on %d workers",
             len(tasks), len(plan.policies), plan.workers)

    if plan.workers > 1:
        with ProcessPoolExecutor(max_workers=plan.workers) as pool:
            results = list(pool.map(_run_repetition, tasks))

    else:
        results = [_run_repetition(task) for task in tasks]

    table = RatioTable()

    for utilization in plan.utilizations:
        for least_quality in plan.least_qualities:
            cell = [result for task, result in zip(tasks, results)
                    if task[1:3] == (utilization, least_quality)]

            _add_cell(table, plan, utilization, least_quality, cell)

    return ratio_lower_bound(table)


# ==================================================================
# PRIVATE METHODS
# ==================================================================
def _run_repetition(task):
    """! Reports of the policies, and the exact profit when asked."""
    plan, utilization, least_quality, repetition = task

    labels = ("workload", utilization, least_quality) if \
        plan.fixed_workload else \
        ("workload", utilization, least_quality, repetition)

    instance = build_instance(plan, utilization, least_quality,
                              cell_seed(plan.base_seed, *labels))

    seed = cell_seed(plan.base_seed, "policy", utilization, least_quality,
                     repetition)

    reports = {}

    for config in plan.policies:
        _, report, _ = run_online(instance, config.replace(rng_seed=seed))

        reports[config.label] = report

    exact = None

    if plan.offline:
        solution = solve_exact(instance, plan.node_limit, plan.time_limit_s)

        exact = (solution.net_profit, solution.optimal)

    return reports, exact


def _add_cell(table, plan, utilization, least_quality, results):
    """! Average one cell's repetitions into the table."""
    for config in plan.policies:
        reports = [reports[config.label] for reports, _ in results]

        profits = [report.net_profit for report in reports]

        table.rows.append(RatioRow(
            utilization, least_quality, config.label,
            _mean(profits),
            float(np.std([float(profit) for profit in profits])),
            mean_workload=_mean(
                [report.workload_completed for report in reports]),
            green_utilization=_mean(
                [report.green_utilization for report in reports])))

    if not plan.offline:
        return

    exacts = [exact for _, exact in results]

    cell = (utilization, least_quality)

    if all(optimal for _, optimal in exacts):
        table.references[cell] = CellReference(
            exact_profit=_mean([profit for profit, _ in exacts]))

    else:
        LOG.warning("exact search over budget at utilization %s, L %s; "
                    "falling back to the best online profit", *cell)

        table.references[cell] = CellReference(downgraded=True)


def _mean(values):
    return sum(values, Fraction(0)) / len(values)


def _workload(plan):
    if plan.workload_path is not None:
        return _parsed_workload(plan.workload_path)

    return _grid_like(plan.grid_records, plan.base_seed,
                      math.ceil(plan.settings.horizon_slots
                                * plan.settings.slot_minutes / 1440))


def _solar(plan):
    if plan.solar_path is not None:
        return _parsed_solar(plan.solar_path)

    days = math.ceil(plan.settings.horizon_slots
                     * plan.settings.slot_minutes / 1440)

    return _diurnal(days, plan.cloudiness, plan.base_seed)


@functools.lru_cache(maxsize=8)
def _parsed_workload(path):
    return parse_workload(path)


@functools.lru_cache(maxsize=8)
def _parsed_solar(path):
    return parse_solar(path)


@functools.lru_cache(maxsize=8)
def _grid_like(count, seed, span_days):
    return grid_like_trace(count, seed, span_days)


@functools.lru_cache(maxsize=8)
def _diurnal(days, cloudiness, seed):
    return diurnal_solar(days=days, cloudiness=float(cloudiness), seed=seed)
