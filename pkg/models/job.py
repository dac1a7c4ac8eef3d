#!/usr/bin/env python3
##
# @file job.py
#
# @brief Provide the batch job model and its deadline rule.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/02.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Standard library
import dataclasses
import math
from fractions import Fraction

# Internal library
from models.errors import InvalidJobError
from models.settings import to_fraction


def deadline_of(release, length, least_quality):
    """! The last slot boundary at which a job still earns its payment.

    The exact bound r + p / L may be fractional, taking the floor keeps
    p / (c - r) >= L for every completion c up to the deadline.
    @param release<int>: The release slot.
    @param length<int>: The processing time in slots.
    @param least_quality<Fraction>: The least service quality in (0, 1].
    @return The deadline slot.
    """
    return math.floor(release + Fraction(length) / to_fraction(least_quality))


@dataclasses.dataclass(frozen=True)
class Job:
    """! A batch request (r, p, q) with its least service quality.

    The job must run without interruption on `nodes` machines for `length`
    slots, starting no earlier than `release` and completing no later than
    `deadline`.
    """
    id: int

    release: int

    length: int

    nodes: int

    least_quality: Fraction = Fraction(1)

    deadline: int = dataclasses.field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "least_quality",
                           to_fraction(self.least_quality))

        if self.release < 0:
            raise InvalidJobError(f"job {self.id}: negative release")

        if self.length < 1:
            raise InvalidJobError(f"job {self.id}: length must be >= 1")

        if self.nodes < 1:
            raise InvalidJobError(f"job {self.id}: nodes must be >= 1")

        if not 0 < self.least_quality <= 1:
            raise InvalidJobError(
                f"job {self.id}: least quality must lie in (0, 1]")

        object.__setattr__(self, "deadline", deadline_of(
            self.release, self.length, self.least_quality))

    @property
    def demand(self):
        """! Machine-slots the job occupies, p * q."""
        return self.length * self.nodes

    @property
    def latest_start(self):
        return self.deadline - self.length

    def service_quality(self, completion):
        """! The stretch-based quality p / (c - r) of a completion slot.
        @param completion<int>: The completion slot c >= r + p.
        """
        return Fraction(self.length, completion - self.release)
