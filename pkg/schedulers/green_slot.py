#!/usr/bin/env python3
##
# @file green_slot.py
#
# @brief Provide the GreenSlot policy, Best-Fit with a lateness penalty.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/03.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Standard library
import math

# Internal library
from schedulers.online_scheduler import OnlineScheduler


class GreenSlot(OnlineScheduler):
    """! Best-Fit that charges a penalty for starts close to the deadline.

    A start later than d - p - ceil(slack * p) pays penalty * p * q on top of
    its energy cost, so jobs are not pushed to the edge of their window
    unless green energy there outweighs the penalty. The penalty defaults to
    twice the on-peak cost of a machine-slot.
    """
    # ==================================================================
    # PUBLIC METHODS
    # ==================================================================
    def __init__(self, instance, config):
        """! The constructor of the class.
        @param instance<Instance>: The problem input.
        @param config<SchedulerConfig>: The policy configuration.
        """
        super().__init__(instance, config)

        penalty = config.greenslot_penalty

        if penalty is None:
            on_peak = config.on_peak_cost

            if on_peak is None:
                on_peak = max(instance.price, default=0)

            penalty = 2 * on_peak

        self._penalty = penalty

        self._slack_fraction = config.greenslot_slack_fraction

    def penalty(self, job, start):
        """! The lateness penalty of a start slot.
        @param job<Job>: The job.
        @param start<int>: The start slot.
        """
        slack = math.ceil(self._slack_fraction * job.length)

        if start > job.deadline - job.length - slack:
            return self._penalty * job.demand

        return 0

    # ==================================================================
    # PRIVATE METHODS
    # ==================================================================
    def _choose(self, state, job, starts, rng):
        return self._most_economic(
            state, job, starts, lambda start: self.penalty(job, start))
