#!/usr/bin/env python3
##
# @file time_stepping.py
#
# @brief Provide the slot-by-slot simulation of an online scheduler.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/03.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Standard library
import logging

# External library
import numpy as np

# Internal library
from models.profit import profit_report
from models.schedule_state import ScheduleState
from schedulers.factory import make_scheduler
from simulators.rng import job_stream

LOG = logging.getLogger(__name__)


class TimeStepping:
    """! Step through the horizon and hand each arriving job to the policy.

    At slot t the jobs released at t arrive in id order and are decided at
    once. The per-slot traces of busy machines and arrivals are kept for
    inspection after the run.
    """
    # ==================================================================
    # PUBLIC METHODS
    # ==================================================================
    def __init__(self, instance, config):
        """! Constructor
        @param instance<Instance>: The problem input.
        @param config<SchedulerConfig>: The policy configuration.
        """
        self.t_out = np.arange(instance.horizon)

        self.arrivals_out = np.zeros(instance.horizon, dtype=np.int64)

        self.decisions = []

        self.state = None

        self.report = None

        self._instance = instance

        self._config = config

        self._scheduler = make_scheduler(instance, config)

    def run(self):
        """! Run the simulation.
        @return The final state, its profit report, and the decision log.
        """
        self.state = ScheduleState.for_instance(self._instance)

        self.decisions = []

        arrivals = {}

        for sequence, job in enumerate(self._instance.jobs):
            arrivals.setdefault(job.release, []).append((sequence, job))

        for now in self.t_out:
            now = int(now)

            for sequence, job in arrivals.get(now, []):
                rng = job_stream(self._config.rng_seed, sequence)

                decision = self._scheduler.decide(self.state, job, now, rng)

                self.decisions.append(decision)

                self.arrivals_out[now] += 1

        self.report = profit_report(self._instance, self.state)

        LOG.info("%s: %d of %d jobs scheduled, net profit %s",
                 self._config.label, self.report.jobs_completed,
                 len(self._instance.jobs), self.report.net_profit)

        return self.state, self.report, self.decisions


def run_online(instance, config):
    """! Run one policy over an instance.
    @param instance<Instance>: The problem input.
    @param config<SchedulerConfig>: The policy configuration.
    @return (ScheduleState, ProfitReport, list of Decision).
    """
    return TimeStepping(instance, config).run()


def replay(instance, decisions):
    """! Rebuild a schedule state from a decision log.
    @param instance<Instance>: The problem input.
    @param decisions<list>: The decisions.
    """
    state = ScheduleState.for_instance(instance)

    for decision in decisions:
        if decision.scheduled:
            state.assign(instance.job(decision.job_id), decision.start)

    return state
