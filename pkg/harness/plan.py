#!/usr/bin/env python3
##
# @file plan.py
#
# @brief Provide the experiment plan and its YAML form.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/06.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Standard library
import dataclasses
from fractions import Fraction

# External library
import yaml

# Internal library
from models.errors import ConfigurationError
from models.settings import Settings, to_fraction
from schedulers.decision import SchedulerConfig
from solvers.branch_and_bound import DEFAULT_NODE_LIMIT, DEFAULT_TIME_LIMIT_S

DEFAULT_POLICIES = ("ff", "bf", "rf", "gs")


@dataclasses.dataclass(frozen=True)
class ExperimentPlan:
    """! A sweep over utilizations and least service qualities.

    Without a workload path, jobs come from a synthetic grid-like trace, or
    are identical (`uniform_jobs`) as in the offline comparison; without a
    solar path, green energy follows a synthetic diurnal profile. With
    `fixed_workload` every repetition reuses the same instance and only the
    randomized policy varies.
    """
    utilizations: tuple = (Fraction(1, 10), Fraction(1))

    least_qualities: tuple = (Fraction(1, 5),)

    policies: tuple = ()

    repetitions: int = 30

    base_seed: int = 0

    settings: Settings = Settings()

    workload_path: str = None

    solar_path: str = None

    uniform_jobs: bool = False

    job_length: int = 2

    job_nodes: int = 4

    grid_records: int = 4000

    cloudiness: Fraction = Fraction(3, 10)

    fixed_workload: bool = False

    offline: bool = False

    node_limit: int = DEFAULT_NODE_LIMIT

    time_limit_s: float = DEFAULT_TIME_LIMIT_S

    workers: int = 1

    def __post_init__(self):
        object.__setattr__(self, "utilizations", tuple(
            to_fraction(value) for value in self.utilizations))

        object.__setattr__(self, "least_qualities", tuple(
            to_fraction(value) for value in self.least_qualities))

        object.__setattr__(self, "cloudiness", to_fraction(self.cloudiness))

        policies = self.policies or DEFAULT_POLICIES

        object.__setattr__(self, "policies", tuple(
            _policy(entry, self.settings) for entry in policies))

        if self.repetitions < 1:
            raise ConfigurationError("repetitions must be at least 1")

        if not self.utilizations or not self.least_qualities:
            raise ConfigurationError("utilizations and L values must be given")

        labels = [config.label for config in self.policies]

        if len(set(labels)) != len(labels):
            raise ConfigurationError(f"duplicate policies: {labels}")

        if self.workers < 1:
            raise ConfigurationError("workers must be at least 1")

    # ==================================================================
    # PUBLIC METHODS
    # ==================================================================
    @classmethod
    def from_yaml(cls, path, settings=None, **overrides):
        """! Load a plan; `settings` may be a nested mapping in the file.
        @param path<str>: The YAML file.
        @param settings<Settings>: Settings used when the file has none.
        @param overrides: Plan fields that win over the file, None ignored.
        """
        with open(path, encoding="utf-8") as stream:
            values = yaml.safe_load(stream) or {}

        if not isinstance(values, dict):
            raise ConfigurationError(f"{path}: expected a mapping")

        return cls.from_mapping(values, settings, **overrides)

    @classmethod
    def from_mapping(cls, values, settings=None, **overrides):
        values = dict(values)

        base = settings or Settings()

        if "settings" in values:
            base = base.replace(**values.pop("settings"))

        values["settings"] = base

        values.update({key: value for key, value in overrides.items()
                       if value is not None})

        known = {field.name for field in dataclasses.fields(cls)}

        unknown = sorted(set(values) - known)

        if unknown:
            raise ConfigurationError(f"unknown plan fields: {unknown}")

        return cls(**values)

    def as_dict(self):
        values = {}

        for field in dataclasses.fields(self):
            value = getattr(self, field.name)

            if field.name == "settings":
                value = value.as_dict()

            elif field.name == "policies":
                value = [config.as_dict() for config in value]

            elif isinstance(value, tuple):
                value = [str(item) for item in value]

            elif isinstance(value, Fraction):
                value = str(value)

            values[field.name] = value

        return values


def _policy(entry, settings):
    """! A SchedulerConfig from a name, a mapping, or a config."""
    if isinstance(entry, SchedulerConfig):
        return entry

    if isinstance(entry, str):
        return SchedulerConfig.from_settings(entry, settings)

    if isinstance(entry, dict):
        entry = dict(entry)

        return SchedulerConfig.from_settings(entry.pop("policy"), settings,
                                             **entry)

    raise ConfigurationError(f"cannot read policy {entry!r}")
