#!/usr/bin/env python3
##
# @file first_fit.py
#
# @brief Provide the First-Fit policy.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/03.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Internal library
from schedulers.online_scheduler import OnlineScheduler


class FirstFit(OnlineScheduler):
    """! Start every job at its earliest feasible slot, whatever the energy
    costs there.
    """
    def _choose(self, state, job, starts, rng):
        return starts[0]
