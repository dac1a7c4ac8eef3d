#!/usr/bin/env python3
##
# @file best_fit.py
#
# @brief Provide the Best-Fit policy.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/03.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Internal library
from schedulers.online_scheduler import OnlineScheduler


class BestFit(OnlineScheduler):
    """! Start every job where it adds the least brown-energy cost.

    The cost is measured against the jobs already committed; later arrivals
    are not anticipated. Ties go to the earliest slot.
    """
    def _choose(self, state, job, starts, rng):
        return self._most_economic(state, job, starts)
