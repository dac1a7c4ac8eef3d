#!/usr/bin/env python3
##
# @file workload.py
#
# @brief Provide the workload trace reader and its rescaling into jobs.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/05.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Standard library
import dataclasses
import logging
import math
from fractions import Fraction

# External library
import pandas as pd

# Internal library
from models.errors import (ConfigurationError, TraceFormatError,
                           TraceShortfallError)
from models.job import Job
from models.settings import to_fraction
from simulators.rng import run_stream

LOG = logging.getLogger(__name__)

COLUMNS = ["arrival_s", "runtime_s", "nodes"]

MAX_UTILIZATION = Fraction(3, 2)

TOLERANCE = Fraction(2, 100)


@dataclasses.dataclass(frozen=True)
class WorkloadRecord:
    arrival_s: Fraction

    runtime_s: Fraction

    nodes: int


@dataclasses.dataclass(frozen=True)
class WorkloadTrace:
    """! Job records sorted by arrival, with where they came from."""
    records: tuple

    source: str = ""

    def __len__(self):
        return len(self.records)


def parse_workload(path):
    """! Read a `arrival_s,runtime_s,nodes` CSV file.
    @param path<str>: The CSV path.
    @return The WorkloadTrace.
    @note Every malformed line is reported, with its line number, in the
    raised TraceFormatError.
    """
    try:
        frame = pd.read_csv(path, dtype=str, skip_blank_lines=False)

    except pd.errors.EmptyDataError:
        LOG.warning("%s: empty workload trace", path)

        return WorkloadTrace((), str(path))

    except pd.errors.ParserError as error:
        raise TraceFormatError(f"{path}: {error}") from error

    columns = [column.strip() for column in frame.columns]

    if columns != COLUMNS:
        raise TraceFormatError(
            f"{path}: header must be {','.join(COLUMNS)}", line=1)

    frame.columns = columns

    # blank lines stay in the index so it maps back to file lines
    frame = frame.dropna(how="all")

    records = []

    problems = []

    for index, row in frame.iterrows():
        line = index + 2

        try:
            records.append(_record(row))

        except (TypeError, ValueError, ZeroDivisionError,
                ConfigurationError) as error:
            problems.append(f"line {line}: {error}")

    if problems:
        for problem in problems:
            LOG.warning("%s: %s", path, problem)

        raise TraceFormatError(f"{path}: " + "; ".join(problems),
                               line=None)

    if not records:
        LOG.warning("%s: workload trace has no records", path)

    records.sort(key=lambda record: record.arrival_s)

    return WorkloadTrace(tuple(records), str(path))


def scale_workload(trace, machines, slot_minutes, utilization, least_quality,
                   seed, horizon):
    """! Sample trace records into jobs filling a target utilization.

    Records are visited in a seeded random order and kept while the demand
    stays within 2% above the target, until it is within 2% below. Runtimes
    round up to whole slots, node counts clamp to [1, M], and arrivals fold
    into the horizon. Records whose deadline would pass the horizon are
    skipped.
    @param trace<WorkloadTrace>: The records.
    @param machines<int>: The cluster size M.
    @param slot_minutes<int>: The slot duration.
    @param utilization<Fraction>: Target demand as a fraction of M * T.
    @param least_quality<Fraction>: L of every job.
    @param seed<int>: The sampling seed.
    @param horizon<int>: The slot count T.
    @return The list of jobs.
    """
    utilization = to_fraction(utilization)

    if not 0 <= utilization <= MAX_UTILIZATION:
        raise ConfigurationError(
            f"utilization {utilization} outside [0, {MAX_UTILIZATION}]")

    target = utilization * machines * horizon

    if target == 0:
        return []

    low, high = target * (1 - TOLERANCE), target * (1 + TOLERANCE)

    slot_seconds = slot_minutes * 60

    first_arrival = trace.records[0].arrival_s if trace.records else 0

    rng = run_stream(seed)

    jobs = []

    total = 0

    for index in rng.permutation(len(trace.records)):
        record = trace.records[int(index)]

        release = math.floor(
            (record.arrival_s - first_arrival) / slot_seconds) % horizon

        job = Job(len(jobs), release,
                  max(1, math.ceil(record.runtime_s / slot_seconds)),
                  min(max(1, record.nodes), machines), least_quality)

        if job.deadline > horizon or total + job.demand > high:
            continue

        jobs.append(job)

        total += job.demand

        if total >= low:
            break

    if total < low:
        raise TraceShortfallError(math.ceil(low), total)

    LOG.info("sampled %d jobs, %d machine-slots for target %s", len(jobs),
             total, target)

    return jobs


def _record(row):
    """! Validate one CSV row."""
    if any(pd.isna(row[column]) for column in COLUMNS):
        raise ValueError("expected 3 fields")

    arrival = to_fraction(row["arrival_s"].strip())

    runtime = to_fraction(row["runtime_s"].strip())

    nodes = int(row["nodes"].strip())

    if arrival < 0:
        raise ValueError(f"negative arrival {arrival}")

    if runtime <= 0:
        raise ValueError(f"runtime must be positive, got {runtime}")

    if nodes < 1:
        raise ValueError(f"node count must be >= 1, got {nodes}")

    return WorkloadRecord(arrival, runtime, nodes)
