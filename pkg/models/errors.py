#!/usr/bin/env python3
##
# @file errors.py
#
# @brief Provide the exception hierarchy shared by every package.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/02.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.


class GreenSchedulingError(Exception):
    """! Base class of every error raised by the library."""


class ConfigurationError(GreenSchedulingError):
    """! Constants, probabilities or plans that cannot be used."""


class InvalidJobError(GreenSchedulingError):
    """! A job violates its field invariants."""


class InvalidInstanceError(GreenSchedulingError):
    """! An instance violates its series or deadline invariants."""


class InfeasiblePlacementError(GreenSchedulingError):
    """! A start slot breaks the capacity or window constraint."""


class AccountingError(GreenSchedulingError):
    """! A schedule state no longer matches its own assignments."""


class TraceFormatError(GreenSchedulingError):
    """! A trace or instance file cannot be parsed."""

    def __init__(self, message, line=None):
        """! The constructor of the class.
        @param message<str>: The diagnostic.
        @param line<int>: The 1-based line number, when known.
        """
        if line is not None:
            message = f"line {line}: {message}"

        super().__init__(message)

        self.line = line


class TraceShortfallError(GreenSchedulingError):
    """! A workload trace is too small to reach a target utilization."""

    def __init__(self, target, reached):
        """! The constructor of the class.
        @param target<int>: The demanded machine-slots.
        @param reached<int>: The machine-slots the trace could supply.
        """
        super().__init__(
            f"trace reaches {reached} of {target} machine-slots "
            f"(short by {target - reached})")

        self.target = target

        self.reached = reached


class EnumerationBudgetError(GreenSchedulingError):
    """! An instance is too large for exhaustive enumeration."""
