#!/usr/bin/env python3
##
# @file decision.py
#
# @brief Provide the scheduler configuration and the decision record.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/03.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Standard library
import dataclasses
import enum
from fractions import Fraction

# Internal library
from models.errors import ConfigurationError
from models.settings import to_fraction

NO_FEASIBLE_START = "no-feasible-start"


class Policy(enum.Enum):
    FIRST_FIT = "first-fit"
    BEST_FIT = "best-fit"
    GREEN_SLOT = "green-slot"
    RANDOM_FIT = "random-fit"

    @classmethod
    def parse(cls, name):
        """! Accept the full name or the short alias (ff, bf, gs, rf).
        @param name<str>: The policy name.
        """
        if isinstance(name, cls):
            return name

        aliases = {"ff": cls.FIRST_FIT, "bf": cls.BEST_FIT,
                   "gs": cls.GREEN_SLOT, "rf": cls.RANDOM_FIT}

        key = str(name).strip().lower().replace("_", "-")

        if key in aliases:
            return aliases[key]

        try:
            return cls(key)

        except ValueError as error:
            raise ConfigurationError(f"unknown policy: {name}") from error

    @property
    def alias(self):
        return {"first-fit": "ff", "best-fit": "bf", "green-slot": "gs",
                "random-fit": "rf"}[self.value]


@dataclasses.dataclass(frozen=True)
class Decision:
    """! The irrevocable outcome for one job: a start slot or a rejection."""
    job_id: int

    start: int = None

    reason: str = None

    @property
    def scheduled(self):
        return self.start is not None

    @classmethod
    def rejected(cls, job_id):
        return cls(job_id, None, NO_FEASIBLE_START)


@dataclasses.dataclass(frozen=True)
class SchedulerConfig:
    """! Policy selection and its tuning knobs.

    `on_peak_cost` and `off_peak_cost` are brown prices per machine-slot;
    Random-Fit derives its probabilities from them and GreenSlot's default
    penalty is twice the on-peak cost. Left as None they are read off the
    instance's price series (its maximum and minimum).
    """
    policy: Policy = Policy.FIRST_FIT

    greenslot_penalty: Fraction = None

    greenslot_slack_fraction: Fraction = Fraction("0.2")

    randomfit_p_override: Fraction = None

    rng_seed: int = 0

    on_peak_cost: Fraction = None

    off_peak_cost: Fraction = None

    def __post_init__(self):
        object.__setattr__(self, "policy", Policy.parse(self.policy))

        for name in ("greenslot_penalty", "greenslot_slack_fraction",
                     "randomfit_p_override", "on_peak_cost", "off_peak_cost"):
            value = getattr(self, name)

            if value is not None:
                object.__setattr__(self, name, to_fraction(value))

        if self.greenslot_penalty is not None and self.greenslot_penalty < 0:
            raise ConfigurationError("greenslot penalty must be >= 0")

        if not 0 <= self.greenslot_slack_fraction <= 1:
            raise ConfigurationError("greenslot slack fraction not in [0, 1]")

        if self.randomfit_p_override is not None and \
                not 0 <= self.randomfit_p_override <= 1:
            raise ConfigurationError("probability override not in [0, 1]")

        if not 0 <= int(self.rng_seed) < 2 ** 64:
            raise ConfigurationError("rng seed must fit in 64 unsigned bits")

    @classmethod
    def from_settings(cls, policy, settings, **knobs):
        """! A configuration whose tariff costs come from the settings.
        @param policy<Policy|str>: The policy.
        @param settings<Settings>: The data center settings.
        @param knobs: Further SchedulerConfig fields.
        """
        return cls(policy=policy, on_peak_cost=settings.on_peak_cost,
                   off_peak_cost=settings.off_peak_cost, **knobs)

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)

    @property
    def label(self):
        """! Short name used in tables, e.g. rf or rf(p=1)."""
        label = self.policy.alias

        if self.randomfit_p_override is not None and \
                self.policy is Policy.RANDOM_FIT:
            label += f"(p={self.randomfit_p_override})"

        return label

    def as_dict(self):
        return {key: (value.value if isinstance(value, Policy) else
                      value if value is None or isinstance(value, int)
                      else str(value))
                for key, value in dataclasses.asdict(self).items()}
