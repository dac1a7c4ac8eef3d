#!/usr/bin/env python3
##
# @file synthetic.py
#
# @brief Provide synthetic solar and workload inputs for desk-scale runs.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/05.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Standard library
import math

# External library
import numpy as np

# Internal library
from models.errors import ConfigurationError
from models.job import Job
from models.settings import to_fraction
from simulators.rng import run_stream
from traces.solar import SolarTrace
from traces.workload import WorkloadRecord, WorkloadTrace


def diurnal_solar(days=5, interval_minutes=5, peak_watts=1000,
                  sunrise_hour=6, sunset_hour=18, cloudiness=0.0, seed=0):
    """! A clear-sky half-sine solar profile, optionally dimmed by clouds.
    @param days<int>: Days to cover, starting at midnight.
    @param interval_minutes<int>: The sampling interval.
    @param peak_watts<float>: Noon power on a clear day.
    @param sunrise_hour<float>: Hour the output becomes positive.
    @param sunset_hour<float>: Hour the output returns to zero.
    @param cloudiness<float>: Largest fraction a sample may lose, in [0, 1].
    @param seed<int>: The cloud seed.
    @return The SolarTrace.
    """
    if not 0 <= cloudiness <= 1:
        raise ConfigurationError("cloudiness must lie in [0, 1]")

    interval_s = interval_minutes * 60

    seconds = np.arange(0, days * 86400, interval_s)

    hours = (seconds % 86400) / 3600

    phase = (hours - sunrise_hour) / (sunset_hour - sunrise_hour)

    watts = np.where((phase > 0) & (phase < 1),
                     peak_watts * np.sin(np.pi * phase), 0.0)

    if cloudiness > 0:
        watts = watts * (1 - cloudiness * run_stream(seed).random(len(watts)))

    samples = tuple((int(second), to_fraction(round(float(power), 3)))
                    for second, power in zip(seconds, watts))

    return SolarTrace(samples, interval_s, "diurnal")


def grid_like_trace(count, seed, span_days=5):
    """! Records shaped like a grid batch log: uniform arrivals, log-normal
    runtimes around an hour, power-of-two node counts.
    @param count<int>: Records to draw.
    @param seed<int>: The seed.
    @param span_days<int>: Arrival span.
    """
    rng = run_stream(seed)

    arrivals = np.sort(rng.uniform(0, span_days * 86400, count))

    runtimes = np.clip(rng.lognormal(math.log(3600), 1.0, count), 60, 86400)

    nodes = rng.choice([1, 2, 4, 8, 16, 32], size=count,
                       p=[0.35, 0.25, 0.15, 0.12, 0.08, 0.05])

    records = tuple(
        WorkloadRecord(to_fraction(round(float(arrival))),
                       to_fraction(round(float(runtime))), int(node))
        for arrival, runtime, node in zip(arrivals, runtimes, nodes))

    return WorkloadTrace(records, "grid-like")


def uniform_workload(machines, horizon, utilization, length, nodes,
                     least_quality, seed):
    """! Identical jobs with random releases filling a utilization.

    round(u * M * T / (p * q)) jobs are released uniformly over the slots
    that still leave room for their whole window.
    @param machines<int>: The cluster size M.
    @param horizon<int>: The slot count T.
    @param utilization<Fraction>: Target demand over M * T.
    @param length<int>: p of every job.
    @param nodes<int>: q of every job.
    @param least_quality<Fraction>: L of every job.
    @param seed<int>: The seed.
    @return The list of jobs.
    """
    utilization = to_fraction(utilization)

    if nodes > machines:
        raise ConfigurationError(f"jobs need {nodes} of {machines} machines")

    span = Job(0, 0, length, nodes, least_quality).deadline

    if span > horizon:
        raise ConfigurationError(
            f"job window of {span} slots exceeds the {horizon}-slot horizon")

    count = round(utilization * machines * horizon / (length * nodes))

    releases = np.sort(run_stream(seed).integers(0, horizon - span + 1,
                                                 size=count))

    return [Job(index, int(release), length, nodes, least_quality)
            for index, release in enumerate(releases)]
