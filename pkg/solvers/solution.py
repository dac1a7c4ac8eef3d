#!/usr/bin/env python3
##
# @file solution.py
#
# @brief Provide the result record of the offline solvers.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/04.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Standard library
import dataclasses

# Internal library
from models.errors import AccountingError
from models.profit import profit_report
from models.schedule_state import ScheduleState


@dataclasses.dataclass
class ExactSolution:
    """! An offline schedule and how it was found.

    `optimal` is False when the search stopped on its node or time budget;
    the schedule is then the best one found so far.
    """
    state: ScheduleState

    report: object

    optimal: bool

    nodes_explored: int

    wall_time: float

    @property
    def net_profit(self):
        return self.report.net_profit


def build_solution(instance, assignments, expected_profit, optimal, nodes,
                   wall_time):
    """! Materialize an assignment map into a checked solution.
    @param instance<Instance>: The problem input.
    @param assignments<dict>: Job id to start slot.
    @param expected_profit<Fraction>: The profit the search accounted.
    @param optimal<bool>: Whether optimality was proven.
    @param nodes<int>: Search nodes visited.
    @param wall_time<float>: Seconds spent.
    """
    state = ScheduleState.for_instance(instance)

    for job in instance.jobs:
        if job.id in assignments:
            state.assign(job, assignments[job.id])

    report = profit_report(instance, state)

    if report.net_profit != expected_profit:
        raise AccountingError(
            f"search accounted {expected_profit}, schedule yields "
            f"{report.net_profit}")

    return ExactSolution(state, report, optimal, nodes, wall_time)
