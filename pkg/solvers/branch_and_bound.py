#!/usr/bin/env python3
##
# @file branch_and_bound.py
#
# @brief Provide the exact offline optimizer of the net profit.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/04.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Standard library
import logging
import time
from fractions import Fraction

# Internal library
from models.schedule_state import (ScheduleState, feasible_starts,
                                   placement_cost)
from solvers.solution import build_solution

LOG = logging.getLogger(__name__)

DEFAULT_NODE_LIMIT = 10 ** 8

DEFAULT_TIME_LIMIT_S = 300.0

_CLOCK_EVERY = 256


class BranchAndBound:
    """! Depth-first search over the start slot (or rejection) of each job.

    Every job takes at most one start inside [r_j, d_j - p_j] and the
    busy machines never exceed M, brown energy costs
    sum max(0, e(t) - g(t)) b(t). Jobs need not be uniform.

    The search runs twice. The first pass branches on jobs by decreasing
    revenue and tries starts by increasing marginal cost, pruning any node
    whose profit plus the revenue of all undecided jobs cannot beat the
    incumbent; brown costs are non-negative so the bound never
    underestimates. The second pass knows the optimum and walks jobs in
    release order with ascending starts, stopping at the first schedule
    that reaches it, which is the lexicographically smallest optimal start
    vector (rejection ranks after every start).

    Jobs with equal release, length, nodes and deadline are interchangeable,
    so the later one is never started before the earlier one.
    """
    # ==================================================================
    # PUBLIC METHODS
    # ==================================================================
    def __init__(self, instance, node_limit=DEFAULT_NODE_LIMIT,
                 time_limit_s=DEFAULT_TIME_LIMIT_S):
        """! The constructor of the class.
        @param instance<Instance>: The problem input.
        @param node_limit<int>: Search nodes allowed over both passes.
        @param time_limit_s<float>: Seconds allowed over both passes.
        """
        self._instance = instance

        self._node_limit = node_limit

        self._time_limit_s = time_limit_s

        self._revenue = {job.id: instance.charge_rate * job.demand
                         for job in instance.jobs}

    def solve(self):
        """! Search for a schedule of maximum net profit.
        @return The ExactSolution.
        """
        self._started = time.perf_counter()

        self._nodes = 0

        self._exhausted = False

        self._best_profit = Fraction(0)

        self._best = {}

        by_revenue = sorted(self._instance.jobs, key=lambda job: (
            -self._revenue[job.id], job.release, job.deadline, job.length,
            job.nodes, job.id))

        self._run_pass(by_revenue, target=None)

        optimal = not self._exhausted

        if optimal:
            self._run_pass(list(self._instance.jobs), target=self._best_profit)

            if self._exhausted:
                LOG.warning("tie-break pass ran out of budget, keeping the "
                            "first optimal schedule found")

        else:
            LOG.warning("search budget exhausted after %d nodes, best profit "
                        "%s is not proven optimal", self._nodes,
                        self._best_profit)

        wall_time = time.perf_counter() - self._started

        LOG.info("branch and bound: profit %s, %d nodes, %.3f s",
                 self._best_profit, self._nodes, wall_time)

        return build_solution(self._instance, self._best, self._best_profit,
                              optimal, self._nodes, wall_time)

    # ==================================================================
    # PRIVATE METHODS
    # ==================================================================
    def _run_pass(self, order, target):
        """! One depth-first pass over the jobs in the given order.
        @param order<list>: The branching order.
        @param target<Fraction>: The known optimum, or None when searching
        for it.
        """
        self._order = order

        self._target = target

        self._stop = False

        self._state = ScheduleState.for_instance(self._instance)

        self._suffix = [Fraction(0)] * (len(order) + 1)

        for depth in range(len(order) - 1, -1, -1):
            self._suffix[depth] = self._suffix[depth + 1] + \
                self._revenue[order[depth].id]

        self._twins = []

        for depth, job in enumerate(order):
            twin = None

            for earlier in order[:depth]:
                if self._interchangeable(earlier, job):
                    twin = earlier

            self._twins.append(twin)

        self._descend(0, Fraction(0))

    def _descend(self, depth, profit):
        """! Branch on the job at the given depth."""
        self._nodes += 1

        if self._over_budget():
            self._exhausted = True

            self._stop = True

            return

        if depth == len(self._order):
            self._leaf(profit)

            return

        if self._pruned(profit + self._suffix[depth]):
            return

        job = self._order[depth]

        for start, cost in self._options(depth, job):
            self._state.assign(job, start)

            self._descend(depth + 1, profit + self._revenue[job.id] - cost)

            self._state.unassign(job)

            if self._stop:
                return

        self._descend(depth + 1, profit)

    def _options(self, depth, job):
        """! The start slots to try, each with its marginal cost."""
        starts = feasible_starts(self._instance, self._state, job,
                                 job.release)

        twin = self._twins[depth]

        if twin is not None:
            twin_start = self._state.assignments.get(twin.id)

            if twin_start is None:
                return []

            starts = [start for start in starts if start >= twin_start]

        options = [(start, placement_cost(self._instance, self._state, job,
                                          start)) for start in starts]

        if self._target is None:
            options.sort(key=lambda option: (option[1], option[0]))

        return options

    def _pruned(self, bound):
        if self._target is None:
            return bound <= self._best_profit

        return bound < self._target

    def _leaf(self, profit):
        if self._target is None:
            if profit > self._best_profit:
                self._best_profit = profit

                self._best = dict(self._state.assignments)

        elif profit == self._target:
            self._best = dict(self._state.assignments)

            self._stop = True

    def _over_budget(self):
        if self._nodes > self._node_limit:
            return True

        if self._nodes % _CLOCK_EVERY == 0:
            elapsed = time.perf_counter() - self._started

            return elapsed > self._time_limit_s

        return False

    @staticmethod
    def _interchangeable(first, second):
        return (first.release, first.length, first.nodes, first.deadline) == \
            (second.release, second.length, second.nodes, second.deadline)


def solve_exact(instance, node_limit=DEFAULT_NODE_LIMIT,
                time_limit_s=DEFAULT_TIME_LIMIT_S):
    """! Maximize revenue minus brown cost over all offline schedules.
    @param instance<Instance>: The problem input.
    @param node_limit<int>: Search nodes allowed.
    @param time_limit_s<float>: Seconds allowed.
    @return The ExactSolution, `optimal` False when a budget ran out.
    """
    return BranchAndBound(instance, node_limit, time_limit_s).solve()
