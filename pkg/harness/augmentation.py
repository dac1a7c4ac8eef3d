#!/usr/bin/env python3
##
# @file augmentation.py
#
# @brief Provide the green energy augmentation experiment.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/07.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Standard library
import logging

# Internal library
from models.errors import ConfigurationError
from models.settings import to_fraction
from simulators.time_stepping import run_online
from solvers.branch_and_bound import solve_exact

LOG = logging.getLogger(__name__)


def augmentation_experiment(instance, alpha, config):
    """! Run a policy with alpha times the green supply against the exact
    optimum of the original instance.
    @param instance<Instance>: The original problem input.
    @param alpha<Fraction>: The augmentation factor, at least 1.
    @param config<SchedulerConfig>: The policy configuration.
    @return (policy ProfitReport on the augmented instance,
             exact ProfitReport on the original one).
    """
    alpha = to_fraction(alpha)

    if alpha < 1:
        raise ConfigurationError(f"augmentation factor {alpha} is below 1")

    _, online, _ = run_online(instance.scale_green(alpha), config)

    exact = solve_exact(instance)

    if not exact.optimal:
        LOG.warning("exact search over budget; reference is a lower bound")

    return online, exact.report


def augmentation_ratio(online, exact):
    """! OPT over the augmented policy profit, None when undefined.
    @param online<ProfitReport>: The augmented policy report.
    @param exact<ProfitReport>: The exact report.
    """
    if online.net_profit <= 0 or exact.net_profit <= 0:
        return None

    return exact.net_profit / online.net_profit
