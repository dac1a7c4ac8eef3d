#!/usr/bin/env python3
##
# @file settings.py
#
# @brief Provide the data center constants and their YAML overlay.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/02.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Standard library
import dataclasses
from fractions import Fraction

# External library
import yaml

# Internal library
from models.errors import ConfigurationError


def to_fraction(value):
    """! Convert a number to an exact fraction.

    Floats go through their shortest decimal form, so 0.022 becomes 11/500
    instead of the nearest binary double.
    @param value<int|str|float|Fraction>: The number.
    @return The exact fraction.
    """
    if isinstance(value, Fraction):
        return value

    if isinstance(value, bool):
        raise ConfigurationError(f"not a number: {value!r}")

    if isinstance(value, float):
        value = repr(value)

    try:
        return Fraction(value)

    except (TypeError, ValueError, ZeroDivisionError) as error:
        raise ConfigurationError(f"not a number: {value!r}") from error


@dataclasses.dataclass(frozen=True)
class Settings:
    """! The data center configuration.

    Defaults describe a 100-machine cluster of 140 W nodes billed at
    $0.022 per machine-hour, with a 9:00-23:00 on-peak tariff of $0.13/kWh
    and $0.08/kWh otherwise, simulated over five days of hourly slots.
    """
    machines: int = 100

    power_per_machine_w: Fraction = Fraction(140)

    charge_rate_per_machine_hour: Fraction = Fraction("0.022")

    on_peak_price_kwh: Fraction = Fraction("0.13")

    off_peak_price_kwh: Fraction = Fraction("0.08")

    on_peak_start_hour: int = 9

    on_peak_end_hour: int = 23

    slot_minutes: int = 60

    horizon_slots: int = 120

    _FRACTION_FIELDS = ("power_per_machine_w", "charge_rate_per_machine_hour",
                        "on_peak_price_kwh", "off_peak_price_kwh")

    def __post_init__(self):
        for name in self._FRACTION_FIELDS:
            object.__setattr__(self, name, to_fraction(getattr(self, name)))

        if self.machines < 1:
            raise ConfigurationError("machines must be at least 1")

        if self.slot_minutes < 1 or self.horizon_slots < 1:
            raise ConfigurationError("slot and horizon must be positive")

        if self.power_per_machine_w <= 0 or \
                self.charge_rate_per_machine_hour <= 0:
            raise ConfigurationError("power and charge rate must be positive")

        if not self.on_peak_price_kwh >= self.off_peak_price_kwh > 0:
            raise ConfigurationError(
                "need on-peak price >= off-peak price > 0")

        for hour in (self.on_peak_start_hour, self.on_peak_end_hour):
            if not 0 <= hour <= 24:
                raise ConfigurationError(f"hour out of range: {hour}")

    # ==================================================================
    # PUBLIC METHODS
    # ==================================================================
    @classmethod
    def from_yaml(cls, path, **overrides):
        """! Load settings from a YAML mapping, then apply overrides.
        @param path<str>: The YAML file; keys are field names.
        @param overrides: Field values that win over the file.
        @return The settings.
        """
        with open(path, encoding="utf-8") as stream:
            values = yaml.safe_load(stream) or {}

        if not isinstance(values, dict):
            raise ConfigurationError(f"{path}: expected a mapping")

        values.update(overrides)

        return cls.from_mapping(values)

    @classmethod
    def from_mapping(cls, values):
        """! Build settings from a plain mapping.
        @param values<dict>: Field names to values.
        @return The settings.
        """
        known = {field.name for field in dataclasses.fields(cls)}

        unknown = sorted(set(values) - known)

        if unknown:
            raise ConfigurationError(f"unknown settings: {', '.join(unknown)}")

        return cls(**values)

    def replace(self, **overrides):
        """! Copy the settings with some fields changed.
        @param overrides: Field values, None values are ignored.
        """
        overrides = {key: value for key, value in overrides.items()
                     if value is not None}

        known = {field.name for field in dataclasses.fields(self)}

        unknown = sorted(set(overrides) - known)

        if unknown:
            raise ConfigurationError(f"unknown settings: {', '.join(unknown)}")

        return dataclasses.replace(self, **overrides)

    def as_dict(self):
        """! The settings as plain strings and integers, for echoing."""
        return {key: value if isinstance(value, int) else str(value)
                for key, value in dataclasses.asdict(self).items()}

    @property
    def slot_hours(self):
        return Fraction(self.slot_minutes, 60)

    @property
    def energy_per_machine_slot(self):
        """! kWh drawn by one busy machine during one slot."""
        return self.power_per_machine_w / 1000 * self.slot_hours

    @property
    def charge_rate(self):
        """! Money earned per machine-slot of completed work."""
        return self.charge_rate_per_machine_hour * self.slot_hours

    @property
    def on_peak_cost(self):
        """! Money per machine-slot of on-peak brown energy."""
        return self.on_peak_price_kwh * self.energy_per_machine_slot

    @property
    def off_peak_cost(self):
        """! Money per machine-slot of off-peak brown energy."""
        return self.off_peak_price_kwh * self.energy_per_machine_slot
