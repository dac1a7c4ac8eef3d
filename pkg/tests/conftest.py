#!/usr/bin/env python3
##
# @file conftest.py
#
# @brief Provide the shared fixtures of the test suite.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/09.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Standard library
from fractions import Fraction

# External library
import numpy as np
import pytest

# Internal library
from models.instance import Instance
from models.job import Job
from models.profit import values_from_settings
from models.settings import Settings

ON_PEAK = Fraction("0.0182")

OFF_PEAK = Fraction("0.0112")

BETA = Fraction("0.022")


@pytest.fixture
def settings():
    return Settings()


@pytest.fixture
def values(settings):
    return values_from_settings(settings)


def make_instance(jobs, machines, green, price, charge_rate=BETA):
    """! An instance from plain lists."""
    return Instance(tuple(jobs), machines, len(green), tuple(green),
                    tuple(price), charge_rate)


def random_instance(rng, max_jobs=6, max_slots=12, max_machines=4,
                    zero_green=False):
    """! A tiny random instance within the brute-force budget.

    Prices are on-peak or off-peak, green supply lies in [0, M], and job
    windows are kept short so enumeration stays fast.
    """
    horizon = int(rng.integers(2, max_slots + 1))

    machines = int(rng.integers(1, max_machines + 1))

    jobs = []

    for job_id in range(int(rng.integers(1, max_jobs + 1))):
        length = int(rng.integers(1, min(3, horizon) + 1))

        release = int(rng.integers(0, horizon - length + 1))

        slack = int(rng.integers(0, 3))

        deadline = min(horizon, release + length + slack)

        jobs.append(Job(job_id, release, length,
                        int(rng.integers(1, machines + 1)),
                        Fraction(length, deadline - release)))

    if zero_green:
        green = [0] * horizon

    else:
        green = [int(value) for value in
                 rng.integers(0, machines + 1, size=horizon)]

    price = [ON_PEAK if on else OFF_PEAK for on in
             rng.integers(0, 2, size=horizon)]

    return make_instance(jobs, machines, green, price)


@pytest.fixture
def instance_factory():
    return make_instance


@pytest.fixture
def tiny_instances():
    """! A seeded corpus of tiny instances with green energy."""
    rng = np.random.default_rng(2024)

    return [random_instance(rng) for _ in range(100)]


@pytest.fixture
def zero_green_instances():
    rng = np.random.default_rng(7)

    return [random_instance(rng, zero_green=True) for _ in range(60)]
