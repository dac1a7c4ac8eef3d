#!/usr/bin/env python3
##
# @file schedule_state.py
#
# @brief Provide the occupancy record of a schedule and the placement
# queries every scheduler builds on.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/02.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Standard library
from fractions import Fraction

# External library
import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

# Internal library
from models.errors import AccountingError, InfeasiblePlacementError


class ScheduleState:
    """! Start slots of the admitted jobs and the per-slot machine usage.

    `occupancy[t]` is e(t), the busy machines at slot t, and `starts[t]` is
    n(t), the jobs started at slot t. A job absent from `assignments` is
    rejected or still pending.
    """
    # ==================================================================
    # PUBLIC METHODS
    # ==================================================================
    def __init__(self, machines, horizon):
        """! Constructor
        @param machines<int>: The cluster size M.
        @param horizon<int>: The slot count T.
        """
        self.machines = machines

        self.horizon = horizon

        self.assignments = {}

        self.occupancy = np.zeros(horizon, dtype=np.int64)

        self.starts = np.zeros(horizon, dtype=np.int64)

    @classmethod
    def for_instance(cls, instance):
        return cls(instance.machines, instance.horizon)

    def copy(self):
        other = ScheduleState(self.machines, self.horizon)

        other.assignments = dict(self.assignments)

        other.occupancy = self.occupancy.copy()

        other.starts = self.starts.copy()

        return other

    def fits(self, job, start):
        """! Whether the job may start at the slot.
        @param job<Job>: The job.
        @param start<int>: The start slot.
        """
        if start < job.release or start + job.length > job.deadline:
            return False

        if start + job.length > self.horizon:
            return False

        window = self.occupancy[start:start + job.length]

        return bool(np.all(window + job.nodes <= self.machines))

    def assign(self, job, start):
        """! Commit the job to the start slot.
        @param job<Job>: The job.
        @param start<int>: The start slot.
        """
        if job.id in self.assignments:
            raise InfeasiblePlacementError(f"job {job.id} already assigned")

        if not self.fits(job, start):
            raise InfeasiblePlacementError(
                f"job {job.id} cannot start at slot {start}")

        self.assignments[job.id] = start

        self.occupancy[start:start + job.length] += job.nodes

        self.starts[start] += 1

    def unassign(self, job):
        """! Remove a committed job, used when backtracking offline.
        @param job<Job>: The job.
        """
        start = self.assignments.pop(job.id)

        self.occupancy[start:start + job.length] -= job.nodes

        self.starts[start] -= 1

    def completion(self, job):
        """! c_j = s_j + p_j of an assigned job."""
        return self.assignments[job.id] + job.length

    def verify(self, jobs):
        """! Recompute e(t) and n(t) from the assignments and compare.
        @param jobs<list>: The jobs of the instance.
        """
        occupancy = np.zeros(self.horizon, dtype=np.int64)

        starts = np.zeros(self.horizon, dtype=np.int64)

        by_id = {job.id: job for job in jobs}

        for job_id, start in self.assignments.items():
            job = by_id.get(job_id)

            if job is None:
                raise AccountingError(f"unknown job {job_id} assigned")

            if start < job.release or start + job.length > job.deadline:
                raise AccountingError(f"job {job_id} outside its window")

            occupancy[start:start + job.length] += job.nodes

            starts[start] += 1

        if not np.array_equal(occupancy, self.occupancy) or \
                not np.array_equal(starts, self.starts):
            raise AccountingError("stored occupancy disagrees with assignments")

        if np.any(occupancy > self.machines) or np.any(occupancy < 0):
            raise AccountingError("capacity violated")


def feasible_starts(instance, state, job, now):
    """! Every start slot the job can still take, in ascending order.
    @param instance<Instance>: The problem input.
    @param state<ScheduleState>: The committed schedule.
    @param job<Job>: The job.
    @param now<int>: The decision time.
    @return The list of start slots, empty when the job must be rejected.
    """
    first = max(now, job.release)

    last = min(job.deadline, instance.horizon) - job.length

    if last < first:
        return []

    window = state.occupancy[first:last + job.length]

    peaks = sliding_window_view(window, job.length).max(axis=1)

    free = np.flatnonzero(peaks + job.nodes <= instance.machines)

    return [first + int(offset) for offset in free]


def placement_cost(instance, state, job, start):
    """! The extra brown-energy cost of adding the job at the start slot.

    Green energy covers the first g(t) busy machines of every slot, so the
    job only pays for the machines it pushes above the green supply.
    @param instance<Instance>: The problem input.
    @param state<ScheduleState>: The committed schedule.
    @param job<Job>: The job.
    @param start<int>: The start slot.
    @return The marginal cost.
    """
    if not state.fits(job, start):
        raise InfeasiblePlacementError(
            f"job {job.id} cannot start at slot {start}")

    cost = Fraction(0)

    for t in range(start, start + job.length):
        busy = int(state.occupancy[t])

        green = instance.green[t]

        extra = max(0, busy + job.nodes - green) - max(0, busy - green)

        cost += instance.price[t] * extra

    return cost
