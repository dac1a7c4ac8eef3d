#!/usr/bin/env python3
##
# @file adversarial.py
#
# @brief Provide the two-slot instances on which the online policies meet
# their worst-case ratios.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/05.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Standard library
import enum
from fractions import Fraction

# Internal library
from models.errors import ConfigurationError
from models.instance import Instance
from models.job import Job
from models.profit import values_from_settings


class Family(enum.Enum):
    """! Instance families; the value is the command-line name."""
    THM1_ON_GREEN = "thm1-on-green"
    THM1_ON_OFF = "thm1-on-off"
    THM2_ON_OFF = "thm2-on-off"
    THM2_OFF_GREEN = "thm2-off-green"
    THM3_1_1 = "thm3-1.1"
    THM3_1_2 = "thm3-1.2"
    THM3_2_1 = "thm3-2.1"
    THM3_2_2 = "thm3-2.2"

    @classmethod
    def parse(cls, name):
        if isinstance(name, cls):
            return name

        try:
            return cls(str(name).strip().lower())

        except ValueError as error:
            raise ConfigurationError(f"unknown family: {name}") from error

    @classmethod
    def scenario(cls, name):
        """! The randomized-policy family of a scenario such as "2.1"."""
        return cls.parse(f"thm3-{name}")


# (slot classes, green units as a multiple of M, both jobs or just the first)
_LAYOUTS = {
    Family.THM1_ON_GREEN: (("on", "on"), (0, 1), False),
    Family.THM1_ON_OFF: (("on", "off"), (0, 0), False),
    Family.THM2_ON_OFF: (("on", "off"), (0, 0), True),
    Family.THM2_OFF_GREEN: (("off", "on"), (0, 1), True),
    Family.THM3_1_1: (("on", "off"), (0, 0), False),
    Family.THM3_1_2: (("on", "off"), (0, 0), True),
    Family.THM3_2_1: (("off", "on"), (0, 1), False),
    Family.THM3_2_2: (("off", "on"), (0, 1), True),
}


def adversarial_instance(family, machines, settings):
    """! The two-slot instance of a family.

    Both jobs are unit-length and need all M machines, so no two of them
    share a slot. Job 1 may start at t1 or t2 (L = 1/2), job 2 is released
    at t2 and must start there (L = 1).
    @param family<Family|str>: The family.
    @param machines<int>: The cluster size M.
    @param settings<Settings>: Tariff and charge rate; the configured
    values must satisfy 0 < v_on < v_off < 1.
    @return The Instance.
    """
    family = Family.parse(family)

    values_from_settings(settings).check_ordering()

    classes, green, two_jobs = _LAYOUTS[family]

    costs = {"on": settings.on_peak_cost, "off": settings.off_peak_cost}

    jobs = [Job(1, 0, 1, machines, Fraction(1, 2))]

    if two_jobs:
        jobs.append(Job(2, 1, 1, machines, Fraction(1)))

    return Instance(
        jobs=tuple(jobs),
        machines=machines,
        horizon=2,
        green=tuple(units * machines for units in green),
        price=tuple(costs[name] for name in classes),
        charge_rate=settings.charge_rate)
