#!/usr/bin/env python3
##
# @file ratio.py
#
# @brief Provide the ratio table and the empirical competitive-ratio lower
# bounds computed from it.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/06.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Standard library
import dataclasses
import logging
from fractions import Fraction

# External library
import pandas as pd

# Internal library
from models.errors import TraceFormatError
from models.settings import to_fraction

LOG = logging.getLogger(__name__)

EXACT = "OPT"

BEST_ONLINE = "OPT'"

COLUMNS = ["utilization", "least_quality", "policy", "mean_profit",
           "std_profit", "mean_workload", "green_utilization", "ratio",
           "reference", "reference_kind", "downgraded"]


@dataclasses.dataclass
class RatioRow:
    """! One policy in one (utilization, L) cell.

    Besides the profit, a row keeps the mean machine-slots of completed work
    and the mean share of the green supply the policy used.
    """
    utilization: Fraction

    least_quality: Fraction

    policy: str

    mean_profit: Fraction

    std_profit: float = 0.0

    ratio: Fraction = None

    mean_workload: Fraction = None

    green_utilization: Fraction = None

    @property
    def cell(self):
        return self.utilization, self.least_quality


@dataclasses.dataclass
class CellReference:
    """! The profit the policies of a cell are compared against.

    `exact_profit` is the mean exact optimum over the repetitions, set only
    when every repetition was solved to proven optimality; `downgraded`
    records that an exact run was attempted but hit its budget.
    """
    exact_profit: Fraction = None

    downgraded: bool = False

    reference: Fraction = None

    kind: str = BEST_ONLINE


@dataclasses.dataclass
class RatioTable:
    rows: list = dataclasses.field(default_factory=list)

    references: dict = dataclasses.field(default_factory=dict)

    def cells(self):
        """! Cells in first-appearance order."""
        return list(dict.fromkeys(row.cell for row in self.rows))

    def row(self, utilization, least_quality, policy):
        cell = (to_fraction(utilization), to_fraction(least_quality))

        for row in self.rows:
            if row.cell == cell and row.policy == policy:
                return row

        raise KeyError((cell, policy))

    def to_frame(self):
        """! The table as a pandas DataFrame, numbers as floats."""
        records = []

        for row in self.rows:
            reference = self.references.get(row.cell, CellReference())

            records.append({
                "utilization": float(row.utilization),
                "least_quality": float(row.least_quality),
                "policy": row.policy,
                "mean_profit": float(row.mean_profit),
                "std_profit": row.std_profit,
                "mean_workload": _float(row.mean_workload),
                "green_utilization": _float(row.green_utilization),
                "ratio": _float(row.ratio),
                "reference": _float(reference.reference),
                "reference_kind": reference.kind,
                "downgraded": reference.downgraded,
            })

        return pd.DataFrame.from_records(records, columns=COLUMNS)

    def to_csv(self, path_or_buffer):
        self.to_frame().to_csv(path_or_buffer, index=False,
                               float_format="%.9g")

    @classmethod
    def read_csv(cls, path):
        """! Load the policy rows of a table written by to_csv.

        Exact references survive only as the `reference` of rows whose kind
        is OPT; ratios are recomputed by ratio_lower_bound.
        @param path<str>: The CSV path.
        """
        try:
            frame = pd.read_csv(path)

        except (pd.errors.EmptyDataError, pd.errors.ParserError) as error:
            raise TraceFormatError(f"{path}: {error}") from error

        missing = {"utilization", "least_quality", "policy",
                   "mean_profit"} - set(frame.columns)

        if missing:
            raise TraceFormatError(f"{path}: missing columns {sorted(missing)}")

        if "downgraded" in frame.columns:
            frame["downgraded"] = frame["downgraded"].eq(True)

        table = cls()

        for record in frame.to_dict("records"):
            std_profit = _optional(record, "std_profit")

            row = RatioRow(to_fraction(float(record["utilization"])),
                           to_fraction(float(record["least_quality"])),
                           str(record["policy"]),
                           to_fraction(float(record["mean_profit"])),
                           0.0 if std_profit is None else float(std_profit),
                           mean_workload=_optional(record, "mean_workload"),
                           green_utilization=_optional(
                               record, "green_utilization"))

            table.rows.append(row)

            if record.get("reference_kind") == EXACT:
                table.references[row.cell] = CellReference(
                    exact_profit=to_fraction(float(record["reference"])))

            elif record.get("downgraded", False):
                table.references.setdefault(
                    row.cell, CellReference(downgraded=True))

        return table


def ratio_lower_bound(table):
    """! Fill in each cell's reference and every policy's ratio.

    The reference is the exact optimum when the cell has one, otherwise the
    best policy mean (OPT'), which makes the ratio a lower bound of the true
    one. The additive constant of the competitive ratio is taken as 0. A
    ratio is left undefined (None) when the reference or the policy mean is
    not positive.
    @param table<RatioTable>: The table with mean profits.
    @return The same table, completed.
    """
    for cell in table.cells():
        rows = [row for row in table.rows if row.cell == cell]

        reference = table.references.setdefault(cell, CellReference())

        best_online = max(row.mean_profit for row in rows)

        if reference.exact_profit is not None:
            reference.reference = max(reference.exact_profit, best_online)

            reference.kind = EXACT

        else:
            reference.reference = best_online

            reference.kind = BEST_ONLINE

        for row in rows:
            if reference.reference > 0 and row.mean_profit > 0:
                row.ratio = reference.reference / row.mean_profit

            else:
                row.ratio = None

                LOG.warning("ratio undefined for %s at utilization %s, L %s",
                            row.policy, *cell)

    return table


def _float(value):
    return None if value is None else float(value)


def _optional(record, name):
    """! A numeric cell as a fraction, None when the column or value is
    missing.
    """
    value = record.get(name)

    if value is None or pd.isna(value):
        return None

    return to_fraction(float(value))
