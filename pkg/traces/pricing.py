#!/usr/bin/env python3
##
# @file pricing.py
#
# @brief Provide the on-peak/off-peak brown energy tariff.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/05.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Standard library
import dataclasses
from fractions import Fraction

# Internal library
from models.errors import ConfigurationError
from models.settings import to_fraction


@dataclasses.dataclass(frozen=True)
class PricingSchedule:
    """! Two-level time-of-use tariff in money per kWh.

    The on-peak window is the daily interval [start hour, end hour); a
    window that wraps past midnight has start > end, and start == end means
    there is no on-peak period.
    """
    on_peak_price: Fraction

    off_peak_price: Fraction

    on_peak_start_hour: int = 9

    on_peak_end_hour: int = 23

    def __post_init__(self):
        object.__setattr__(self, "on_peak_price",
                           to_fraction(self.on_peak_price))

        object.__setattr__(self, "off_peak_price",
                           to_fraction(self.off_peak_price))

        if not self.on_peak_price >= self.off_peak_price > 0:
            raise ConfigurationError(
                "need on-peak price >= off-peak price > 0")

    @classmethod
    def from_settings(cls, settings):
        return cls(settings.on_peak_price_kwh, settings.off_peak_price_kwh,
                   settings.on_peak_start_hour, settings.on_peak_end_hour)

    def is_on_peak(self, hour):
        """! Whether an hour of day (possibly fractional) is on-peak.
        @param hour<Fraction>: Hours since midnight, in [0, 24).
        """
        start, end = self.on_peak_start_hour, self.on_peak_end_hour

        if start == end:
            return False

        if start < end:
            return start <= hour < end

        return hour >= start or hour < end


def slot_hour(slot, slot_minutes, start_hour=0):
    """! Hour of day at which a slot begins."""
    return (Fraction(start_hour) + Fraction(slot * slot_minutes, 60)) % 24


def pricing_series(schedule, horizon, slot_minutes, energy_per_machine_slot,
                   start_hour=0):
    """! Brown price b(t) per machine-slot for every slot of the horizon.
    @param schedule<PricingSchedule>: The tariff.
    @param horizon<int>: The slot count T.
    @param slot_minutes<int>: The slot duration.
    @param energy_per_machine_slot<Fraction>: kWh of one busy machine-slot.
    @param start_hour<int>: Hour of day at which slot 0 begins.
    @return The tuple of prices.
    """
    energy = to_fraction(energy_per_machine_slot)

    on_peak = schedule.on_peak_price * energy

    off_peak = schedule.off_peak_price * energy

    return tuple(
        on_peak if schedule.is_on_peak(slot_hour(t, slot_minutes, start_hour))
        else off_peak for t in range(horizon))
