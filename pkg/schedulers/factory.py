#!/usr/bin/env python3
##
# @file factory.py
#
# @brief Provide the policy lookup.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/03.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Internal library
from schedulers.best_fit import BestFit
from schedulers.decision import Policy
from schedulers.first_fit import FirstFit
from schedulers.green_slot import GreenSlot
from schedulers.random_fit import RandomFit

SCHEDULERS = {
    Policy.FIRST_FIT: FirstFit,
    Policy.BEST_FIT: BestFit,
    Policy.GREEN_SLOT: GreenSlot,
    Policy.RANDOM_FIT: RandomFit,
}


def make_scheduler(instance, config):
    """! Instantiate the configured policy for an instance.
    @param instance<Instance>: The problem input.
    @param config<SchedulerConfig>: The configuration.
    """
    return SCHEDULERS[config.policy](instance, config)
