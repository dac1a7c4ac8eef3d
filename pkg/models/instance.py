#!/usr/bin/env python3
##
# @file instance.py
#
# @brief Provide the immutable problem input of the scheduler.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/02.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Standard library
import dataclasses
from fractions import Fraction

# Internal library
from models.errors import InvalidInstanceError
from models.settings import to_fraction


@dataclasses.dataclass(frozen=True)
class Instance:
    """! Jobs, cluster size, and the per-slot energy series.

    `green` holds g(t) in machine-slots, `price` holds b(t) in money per
    machine-slot of brown energy, and `charge_rate` is the money earned per
    machine-slot of completed work. Jobs are kept in release order, ties
    broken by id.
    """
    jobs: tuple

    machines: int

    horizon: int

    green: tuple

    price: tuple

    charge_rate: Fraction

    def __post_init__(self):
        object.__setattr__(self, "jobs", tuple(
            sorted(self.jobs, key=lambda job: (job.release, job.id))))

        object.__setattr__(self, "green",
                           tuple(to_fraction(value) for value in self.green))

        object.__setattr__(self, "price",
                           tuple(to_fraction(value) for value in self.price))

        object.__setattr__(self, "charge_rate", to_fraction(self.charge_rate))

        self._validate()

    # ==================================================================
    # PUBLIC METHODS
    # ==================================================================
    def job(self, job_id):
        """! Look a job up by its id.
        @param job_id<int>: The id.
        """
        for job in self.jobs:
            if job.id == job_id:
                return job

        raise KeyError(job_id)

    def with_green(self, green):
        """! Copy the instance with another green series.
        @param green<list>: The replacement g(t).
        """
        return dataclasses.replace(self, green=tuple(green))

    def scale_green(self, factor):
        """! Copy the instance with every g(t) multiplied by a factor.
        @param factor<Fraction>: The augmentation factor.
        """
        factor = to_fraction(factor)

        return self.with_green(value * factor for value in self.green)

    @property
    def total_green(self):
        return sum(self.green, Fraction(0))

    # ==================================================================
    # PRIVATE METHODS
    # ==================================================================
    def _validate(self):
        """! Check the series lengths, signs, and job windows."""
        if self.machines < 1:
            raise InvalidInstanceError("machines must be at least 1")

        if self.horizon < 0:
            raise InvalidInstanceError("horizon must be non-negative")

        if len(self.green) != self.horizon or len(self.price) != self.horizon:
            raise InvalidInstanceError(
                f"series must have exactly {self.horizon} entries "
                f"(green={len(self.green)}, price={len(self.price)})")

        if any(value < 0 for value in self.green):
            raise InvalidInstanceError("green supply must be non-negative")

        if any(value <= 0 for value in self.price):
            raise InvalidInstanceError("brown price must be positive")

        if self.charge_rate <= 0:
            raise InvalidInstanceError("charge rate must be positive")

        seen = set()

        for job in self.jobs:
            if job.id in seen:
                raise InvalidInstanceError(f"duplicate job id {job.id}")

            seen.add(job.id)

            if job.nodes > self.machines:
                raise InvalidInstanceError(
                    f"job {job.id} needs {job.nodes} of {self.machines} "
                    "machines")

            if job.deadline > self.horizon:
                raise InvalidInstanceError(
                    f"job {job.id} deadline {job.deadline} exceeds horizon "
                    f"{self.horizon}")
