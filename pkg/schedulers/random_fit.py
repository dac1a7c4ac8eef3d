#!/usr/bin/env python3
##
# @file random_fit.py
#
# @brief Provide the Random-Fit policy and its optimal randomness.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/03.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Standard library
import enum
import logging

# Internal library
from models.errors import ConfigurationError
from models.profit import NormalizedValues
from models.schedule_state import feasible_starts, placement_cost
from schedulers.online_scheduler import OnlineScheduler

LOG = logging.getLogger(__name__)


class Transition(enum.Enum):
    """! Energy class of the slot the earliest start would use."""
    ON_TO_OFF = "on-to-off"
    OFF_TO_ON = "off-to-on"


def optimal_probability(values, transition):
    """! The probability of taking the earliest start that minimizes the
    worst-case expected ratio.

    From on-peak towards off-peak it is x / (1 + x - x^2) with
    x = v_on / v_off; from off-peak towards green it is y / (1 + y - y^2)
    with y = v_off / v_g.
    @param values<NormalizedValues>: The normalized values.
    @param transition<Transition>: The energy class.
    @return The exact probability in (0, 1).
    """
    values.check_ordering()

    ratio = values.x if transition is Transition.ON_TO_OFF else values.y

    return ratio / (1 + ratio - ratio * ratio)


def earliest_green_start(instance, state, job, now, starts=None):
    """! The earliest feasible start that needs no brown energy, if any.
    @param instance<Instance>: The problem input.
    @param state<ScheduleState>: The committed schedule.
    @param job<Job>: The job.
    @param now<int>: The decision time.
    @param starts<list>: The feasible starts, when already known.
    """
    if starts is None:
        starts = feasible_starts(instance, state, job, now)

    for start in starts:
        if placement_cost(instance, state, job, start) == 0:
            return start

    return None


def sufficient_green(instance, state, job, now):
    """! Whether free green energy can host the whole job somewhere in its
    remaining window.
    """
    return earliest_green_start(instance, state, job, now) is not None


class RandomFit(OnlineScheduler):
    """! Randomize between First-Fit and Best-Fit.

    When the earliest feasible start runs entirely on free green energy the
    job goes there. Otherwise the job takes its earliest start with
    probability p and its most economic start with probability 1 - p, where
    p depends on whether the earliest start is on-peak or off-peak.
    """
    # ==================================================================
    # PUBLIC METHODS
    # ==================================================================
    def __init__(self, instance, config):
        """! The constructor of the class.
        @param instance<Instance>: The problem input.
        @param config<SchedulerConfig>: The policy configuration.
        @note Without a probability override the tariff must satisfy
        0 < v_on < v_off < 1, otherwise a ConfigurationError is raised.
        """
        super().__init__(instance, config)

        self._override = config.randomfit_p_override

        on_peak = config.on_peak_cost

        off_peak = config.off_peak_cost

        if on_peak is None:
            on_peak = max(instance.price, default=0)

        if off_peak is None:
            off_peak = min(instance.price, default=0)

        self._on_peak_cost = on_peak

        self._probabilities = {}

        if self._override is None:
            beta = instance.charge_rate

            values = NormalizedValues(1 - on_peak / beta, 1 - off_peak / beta)

            try:
                values.check_ordering()

            except ConfigurationError as error:
                raise ConfigurationError(
                    f"random-fit needs a probability override: {error}"
                ) from error

            self._probabilities = {
                transition: float(optimal_probability(values, transition))
                for transition in Transition}

    def probability(self, start):
        """! The probability of taking the earliest start.
        @param start<int>: The earliest feasible start slot.
        """
        if self._override is not None:
            return float(self._override)

        return self._probabilities[self.transition(start)]

    def transition(self, start):
        """! On-peak slots lead towards off-peak, the rest towards green."""
        if self._instance.price[start] >= self._on_peak_cost:
            return Transition.ON_TO_OFF

        return Transition.OFF_TO_ON

    def branches(self, state, job, starts):
        """! The starts the job may take, with their probabilities.

        One certain branch when the earliest start runs on free green
        energy, otherwise the earliest start with probability p followed by
        the most economic start with probability 1 - p.
        @param state<ScheduleState>: The committed schedule.
        @param job<Job>: The job.
        @param starts<list>: The feasible starts, ascending and non-empty.
        @return A list of (probability, start) pairs.
        """
        earliest = starts[0]

        if earliest_green_start(self._instance, state, job, earliest,
                                starts) == earliest:
            return [(1.0, earliest)]

        p = self.probability(earliest)

        return [(p, earliest),
                (1 - p, self._most_economic(state, job, starts))]

    # ==================================================================
    # PRIVATE METHODS
    # ==================================================================
    def _choose(self, state, job, starts, rng):
        branches = self.branches(state, job, starts)

        if len(branches) == 1:
            return branches[0][1]

        if rng is None:
            raise ConfigurationError("random-fit needs a random stream")

        (p, earliest), (_, economic) = branches

        if rng.random() < p:
            LOG.debug("job %s takes the earliest start", job.id)

            return earliest

        LOG.debug("job %s takes the most economic start", job.id)

        return economic
