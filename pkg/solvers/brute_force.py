#!/usr/bin/env python3
##
# @file brute_force.py
#
# @brief Provide the exhaustive enumeration used to validate the exact
# optimizer on tiny instances.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/04.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Standard library
import time
from fractions import Fraction

# Internal library
from models.errors import EnumerationBudgetError
from models.schedule_state import ScheduleState, placement_cost
from solvers.solution import build_solution

MAX_JOBS = 6

MAX_SLOTS = 12

MAX_MACHINES = 4


class BruteForce:
    """! Enumerate every capacity-feasible choice of start or rejection.

    Jobs are walked in release order with starts ascending and rejection
    last, and only a strictly better profit replaces the incumbent, so ties
    resolve to the lexicographically smallest start vector. Combinations are
    abandoned only when they overload a slot, never on profit grounds.
    """
    def __init__(self, instance):
        """! The constructor of the class.
        @param instance<Instance>: The problem input.
        """
        if len(instance.jobs) > MAX_JOBS or instance.horizon > MAX_SLOTS \
                or instance.machines > MAX_MACHINES:
            raise EnumerationBudgetError(
                f"brute force is limited to {MAX_JOBS} jobs, {MAX_SLOTS} "
                f"slots and {MAX_MACHINES} machines, got "
                f"{len(instance.jobs)}/{instance.horizon}/"
                f"{instance.machines}")

        self._instance = instance

    def solve(self):
        started = time.perf_counter()

        self._state = ScheduleState.for_instance(self._instance)

        self._best_profit = Fraction(0)

        self._best = {}

        self._leaves = 0

        self._enumerate(0, Fraction(0))

        return build_solution(self._instance, self._best, self._best_profit,
                              True, self._leaves,
                              time.perf_counter() - started)

    def _enumerate(self, index, profit):
        jobs = self._instance.jobs

        if index == len(jobs):
            self._leaves += 1

            if profit > self._best_profit:
                self._best_profit = profit

                self._best = dict(self._state.assignments)

            return

        job = jobs[index]

        revenue = self._instance.charge_rate * job.demand

        for start in range(job.release, job.deadline - job.length + 1):
            if not self._state.fits(job, start):
                continue

            cost = placement_cost(self._instance, self._state, job, start)

            self._state.assign(job, start)

            self._enumerate(index + 1, profit + revenue - cost)

            self._state.unassign(job)

        self._enumerate(index + 1, profit)


def brute_force(instance):
    """! The optimal schedule by exhaustive enumeration.
    @param instance<Instance>: An instance within the enumeration budget.
    @return The ExactSolution, always optimal.
    """
    return BruteForce(instance).solve()
