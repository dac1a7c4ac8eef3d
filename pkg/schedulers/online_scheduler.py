#!/usr/bin/env python3
##
# @file online_scheduler.py
#
# @brief Provide the shared machinery of the online scheduling policies.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/03.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Standard library
import logging

# Internal library
from models.schedule_state import feasible_starts, placement_cost
from schedulers.decision import Decision

LOG = logging.getLogger(__name__)


class OnlineScheduler:
    """! Base class of the policies.

    A policy sees one released job at a time, picks a start slot among the
    feasible ones or rejects the job, and commits the choice to the shared
    schedule state. Decisions are never revisited.
    """
    # ==================================================================
    # PUBLIC METHODS
    # ==================================================================
    def __init__(self, instance, config):
        """! The constructor of the class.
        @param instance<Instance>: The problem input.
        @param config<SchedulerConfig>: The policy configuration.
        """
        self._instance = instance

        self._config = config

    def decide(self, state, job, now, rng=None):
        """! Decide and commit the start slot of an arriving job.
        @param state<ScheduleState>: The committed schedule.
        @param job<Job>: The released job.
        @param now<int>: The decision time, at least the release.
        @param rng<Generator>: The job's random stream, for randomized
        policies.
        @return The decision.
        """
        starts = feasible_starts(self._instance, state, job, now)

        if not starts:
            LOG.debug("job %s rejected at slot %d", job.id, now)

            return Decision.rejected(job.id)

        start = self._choose(state, job, starts, rng)

        state.assign(job, start)

        LOG.debug("job %s scheduled at slot %d", job.id, start)

        return Decision(job.id, start)

    # ==================================================================
    # PRIVATE METHODS
    # ==================================================================
    def _choose(self, state, job, starts, rng):
        """! Pick one slot of a non-empty feasible list."""
        raise NotImplementedError

    def _most_economic(self, state, job, starts, penalty=None):
        """! The feasible start of least cost, earliest on ties.
        @param state<ScheduleState>: The committed schedule.
        @param job<Job>: The job.
        @param starts<list>: The feasible starts, ascending.
        @param penalty<callable>: Extra cost per start slot, if any.
        """
        def score(start):
            cost = placement_cost(self._instance, state, job, start)

            if penalty is not None:
                cost += penalty(start)

            return cost, start

        return min(starts, key=score)
