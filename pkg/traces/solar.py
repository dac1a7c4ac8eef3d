#!/usr/bin/env python3
##
# @file solar.py
#
# @brief Provide the solar power trace reader and its conversion into a
# per-slot green energy series.
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
from models.errors import ConfigurationError, TraceFormatError
from models.settings import to_fraction

LOG = logging.getLogger(__name__)

COLUMNS = ["timestamp", "watts"]


@dataclasses.dataclass(frozen=True)
class SolarTrace:
    """! Power samples (seconds, watts) taken every `interval_s` seconds.

    Each sample stands for the power over [timestamp, timestamp + interval).
    """
    samples: tuple

    interval_s: int

    source: str = ""

    @property
    def peak(self):
        return max((watts for _, watts in self.samples), default=Fraction(0))


def parse_solar(path):
    """! Read a `timestamp,watts` CSV file.

    Timestamps are epoch seconds or anything pandas reads as a date.
    @param path<str>: The CSV path.
    @return The SolarTrace.
    """
    try:
        frame = pd.read_csv(path, dtype=str, skip_blank_lines=False)

    except (pd.errors.EmptyDataError, pd.errors.ParserError) as error:
        raise TraceFormatError(f"{path}: {error}") from error

    frame.columns = [column.strip() for column in frame.columns]

    if list(frame.columns) != COLUMNS:
        raise TraceFormatError(
            f"{path}: header must be {','.join(COLUMNS)}", line=1)

    frame = frame.dropna(how="all")

    if frame.empty:
        raise TraceFormatError(f"{path}: solar trace has no samples")

    stamps = frame["timestamp"].str.strip()

    numeric = pd.to_numeric(stamps, errors="coerce")

    if numeric.notna().all():
        seconds = [int(value) for value in numeric]

    else:
        try:
            parsed = pd.to_datetime(stamps)

        except (ValueError, TypeError) as error:
            raise TraceFormatError(f"{path}: {error}") from error

        seconds = [int(value.timestamp()) for value in parsed]

    samples = []

    for index, second, watts in zip(frame.index, seconds, frame["watts"]):
        try:
            power = to_fraction(str(watts).strip())

        except ConfigurationError as error:
            raise TraceFormatError(str(error), line=index + 2) from error

        if power < 0:
            raise TraceFormatError(f"negative power {power}", line=index + 2)

        samples.append((second, power))

    return SolarTrace(tuple(samples), _interval(samples, path), str(path))


def scale_solar(trace, machines, power_per_machine, slot_minutes,
                horizon=None):
    """! Green supply g(t) in machine-slots.

    The trace is rescaled so its peak sample equals the draw of M busy
    machines, then the energy of the samples falling in each slot is
    divided by the energy one busy machine draws in a slot.
    @param trace<SolarTrace>: The samples.
    @param machines<int>: The cluster size M.
    @param power_per_machine<Fraction>: Watts of one busy machine.
    @param slot_minutes<int>: The slot duration.
    @param horizon<int>: Slots to emit, default the span of the trace.
    @return The tuple of per-slot green supplies, each at most M.
    """
    if not trace.samples:
        raise TraceFormatError("solar trace has no samples")

    peak = trace.peak

    if peak == 0:
        raise TraceFormatError("solar trace is all zero, scaling undefined")

    power_per_machine = to_fraction(power_per_machine)

    slot_seconds = slot_minutes * 60

    if slot_seconds % trace.interval_s != 0:
        raise TraceFormatError(
            f"sampling interval {trace.interval_s} s does not divide the "
            f"{slot_seconds} s slot")

    first = trace.samples[0][0]

    if horizon is None:
        span = trace.samples[-1][0] + trace.interval_s - first

        horizon = math.ceil(span / slot_seconds)

    scale = machines * power_per_machine / peak

    per_slot = Fraction(trace.interval_s) / (power_per_machine * slot_seconds)

    frame = pd.DataFrame(trace.samples, columns=["second", "watts"])

    frame["slot"] = (frame["second"] - first) // slot_seconds

    green = [Fraction(0)] * horizon

    for slot, group in frame.groupby("slot"):
        if not 0 <= slot < horizon:
            continue

        energy = sum(group["watts"], Fraction(0)) * scale * per_slot

        green[int(slot)] = min(Fraction(machines), energy)

    return tuple(green)


def _interval(samples, path):
    """! The common spacing of the samples."""
    if len(samples) < 2:
        raise TraceFormatError(f"{path}: need two samples to fix the interval")

    gaps = {later[0] - earlier[0] for earlier, later in
            zip(samples, samples[1:])}

    if len(gaps) != 1 or min(gaps) <= 0:
        raise TraceFormatError(f"{path}: samples are not evenly spaced")

    return gaps.pop()
