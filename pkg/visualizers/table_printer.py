#!/usr/bin/env python3
##
# @file table_printer.py
#
# @brief Provide aligned-text rendering of simulation and experiment results.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/08.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Standard library
import sys

# External library
import pandas as pd


class TablePrinter:
    def __init__(self, stream=None):
        """! The constructor of the class.
        @param stream<file>: Where tables go, standard output by default.
        """
        self._stream = stream or sys.stdout

    def print_report(self, report, title=None):
        """! Print a profit report as a two-column table.
        @param report<ProfitReport>: The report.
        @param title<str>: An optional heading line.
        """
        frame = pd.DataFrame(
            [(key, _format(value)) for key, value in report.as_dict().items()],
            columns=["quantity", "value"])

        self._write(frame, title)

    def print_trace(self, simulator, instance):
        """! Print the per-slot history of a finished simulation.
        @param simulator<TimeStepping>: The simulator after run().
        @param instance<Instance>: Its problem input.
        """
        frame = pd.DataFrame({
            "slot": simulator.t_out,
            "arrivals": simulator.arrivals_out,
            "busy": simulator.state.occupancy,
            "green": [float(value) for value in instance.green],
            "price": [float(value) for value in instance.price],
        })

        self._write(frame, "per-slot trace")

    def print_table(self, table):
        """! Print a ratio table.
        @param table<RatioTable>: The table.
        """
        self._write(table.to_frame(), None)

    def print_mapping(self, values, title=None):
        """! Print any flat mapping, such as a Monte Carlo result."""
        frame = pd.DataFrame(
            [(key, _format(value)) for key, value in values.items()],
            columns=["quantity", "value"])

        self._write(frame, title)

    # ==================================================================
    # PRIVATE METHODS
    # ==================================================================
    def _write(self, frame, title):
        if title:
            print(f"# {title}", file=self._stream)

        print(frame.to_string(index=False, float_format=lambda value:
                              f"{value:.6g}"), file=self._stream)


def _format(value):
    """! Fractions print as their decimal value and exact form."""
    if hasattr(value, "denominator") and not isinstance(value, int):
        if value.denominator == 1:
            return str(value.numerator)

        return f"{float(value):.6g} ({value})"

    return str(value)
