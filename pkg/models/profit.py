#!/usr/bin/env python3
##
# @file profit.py
#
# @brief Provide revenue, brown-energy cost and net-profit accounting, and
# the normalized per-job values used by the competitive analysis.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/02.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Standard library
import dataclasses
from fractions import Fraction

# Internal library
from models.errors import ConfigurationError, InfeasiblePlacementError
from models.settings import to_fraction


@dataclasses.dataclass(frozen=True)
class ProfitReport:
    """! Money and energy totals of one schedule."""
    revenue: Fraction

    brown_cost: Fraction

    net_profit: Fraction

    green_used: Fraction

    green_available: Fraction

    jobs_completed: int

    workload_completed: int

    jobs_rejected: int = 0

    @property
    def green_utilization(self):
        if self.green_available == 0:
            return Fraction(0)

        return self.green_used / self.green_available

    def as_dict(self):
        values = dataclasses.asdict(self)

        values["green_utilization"] = self.green_utilization

        return values


@dataclasses.dataclass(frozen=True)
class NormalizedValues:
    """! Profit of a uniform job per unit of revenue, by energy class.

    Each value is 1 - P / (beta p q), where P is the energy bill of the job
    when it runs entirely in that class. Green energy is free, so v_g = 1.
    """
    v_on: Fraction

    v_off: Fraction

    v_g: Fraction = Fraction(1)

    def check_ordering(self):
        """! Require 0 < v_on < v_off < v_g = 1."""
        if not 0 < self.v_on < self.v_off < self.v_g == 1:
            raise ConfigurationError(
                "normalized values must satisfy 0 < v_on < v_off < v_g = 1, "
                f"got ({self.v_on}, {self.v_off}, {self.v_g})")

        return self

    @property
    def x(self):
        return self.v_on / self.v_off

    @property
    def y(self):
        return self.v_off / self.v_g


def revenue_of(job, completion, charge_rate):
    """! Payment of a job completing at a slot.
    @param job<Job>: The job.
    @param completion<int>: The completion slot, at least r + p.
    @param charge_rate<Fraction>: Money per machine-slot.
    @return beta * p * q when the service quality is met, else 0.
    """
    if completion < job.release + job.length:
        raise InfeasiblePlacementError(
            f"job {job.id} cannot complete at slot {completion}")

    if job.service_quality(completion) >= job.least_quality:
        return to_fraction(charge_rate) * job.demand

    return Fraction(0)


def brown_usage(instance, occupancy):
    """! Brown machine-slots max(0, e(t) - g(t)) per slot.
    @param instance<Instance>: The problem input.
    @param occupancy<array>: The busy machines per slot.
    """
    return [max(Fraction(0), int(busy) - green)
            for busy, green in zip(occupancy, instance.green)]


def profit_report(instance, state):
    """! Account revenue, brown cost and green usage of a schedule.
    @param instance<Instance>: The problem input.
    @param state<ScheduleState>: The schedule; its invariants are verified.
    @return The profit report.
    """
    state.verify(instance.jobs)

    revenue = Fraction(0)

    workload = 0

    for job in instance.jobs:
        if job.id not in state.assignments:
            continue

        revenue += revenue_of(job, state.completion(job), instance.charge_rate)

        workload += job.demand

    brown = brown_usage(instance, state.occupancy)

    brown_cost = sum((used * price for used, price in
                      zip(brown, instance.price)), Fraction(0))

    green_used = sum((min(Fraction(int(busy)), green) for busy, green in
                      zip(state.occupancy, instance.green)), Fraction(0))

    completed = len(state.assignments)

    return ProfitReport(
        revenue=revenue,
        brown_cost=brown_cost,
        net_profit=revenue - brown_cost,
        green_used=green_used,
        green_available=instance.total_green,
        jobs_completed=completed,
        workload_completed=workload,
        jobs_rejected=len(instance.jobs) - completed)


def normalized_values(length, nodes, charge_rate, on_price, off_price,
                      energy_per_machine_slot):
    """! The (v_on, v_off, v_g) triple of a uniform job class.
    @param length<int>: The processing time p.
    @param nodes<int>: The machine requirement q.
    @param charge_rate<Fraction>: beta, money per machine-slot.
    @param on_price<Fraction>: On-peak money per kWh.
    @param off_price<Fraction>: Off-peak money per kWh.
    @param energy_per_machine_slot<Fraction>: kWh per machine-slot.
    @return The normalized values.
    """
    charge_rate = to_fraction(charge_rate)

    energy = to_fraction(energy_per_machine_slot)

    revenue = charge_rate * length * nodes

    def value(price):
        return 1 - to_fraction(price) * energy * length * nodes / revenue

    values = NormalizedValues(value(on_price), value(off_price))

    if values.v_on <= 0:
        raise ConfigurationError(
            f"on-peak energy cost {to_fraction(on_price) * energy} per "
            f"machine-slot is not below the charge rate {charge_rate}")

    return values


def values_from_settings(settings):
    """! Normalized values of the configured tariff and charge rate."""
    return normalized_values(1, 1, settings.charge_rate,
                             settings.on_peak_price_kwh,
                             settings.off_peak_price_kwh,
                             settings.energy_per_machine_slot)


def first_fit_lower_bound(values):
    """! max(v_off / v_on, v_g / v_on)."""
    return max(values.v_off / values.v_on, values.v_g / values.v_on)


def best_fit_lower_bound(values):
    """! max(1 + v_on / v_off, 1 + v_off / v_g)."""
    return max(1 + values.v_on / values.v_off, 1 + values.v_off / values.v_g)


def random_fit_ratio(values):
    """! max(1 + x - x^2, 1 + y - y^2), never above 5/4."""
    x, y = values.x, values.y

    return max(1 + x - x * x, 1 + y - y * y)


def augmentation_lower_bound(values):
    """! max(v_g / v_on, 1 + v_on / v_off, 1 + v_off / v_g)."""
    return max(values.v_g / values.v_on, 1 + values.v_on / values.v_off,
               1 + values.v_off / values.v_g)


def worst_case_bound(policy, values):
    """! The worst-case ratio of a policy, by its full name.
    @param policy<str>: first-fit, best-fit or random-fit.
    @param values<NormalizedValues>: The normalized values.
    @return The bound, or None for other policies and for values outside
    0 < v_on < v_off < v_g.
    """
    bounds = {"first-fit": first_fit_lower_bound,
              "best-fit": best_fit_lower_bound,
              "random-fit": random_fit_ratio}

    if policy not in bounds:
        return None

    try:
        values.check_ordering()

    except ConfigurationError:
        return None

    return bounds[policy](values)
