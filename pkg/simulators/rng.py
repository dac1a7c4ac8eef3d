#!/usr/bin/env python3
##
# @file rng.py
#
# @brief Provide the reproducible random streams of a simulation.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/03.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# External library
import numpy as np

SEED_MASK = 2 ** 64 - 1


def job_stream(seed, sequence):
    """! The random stream of one job.

    Streams are PCG64 generators whose SeedSequence is keyed by the 64-bit
    run seed and spawned by the job's sequence number, so a job's draws do
    not depend on how many draws earlier jobs made.
    @param seed<int>: The run seed.
    @param sequence<int>: The job's position in release order.
    @return A numpy Generator.
    """
    entropy = np.random.SeedSequence(int(seed) & SEED_MASK,
                                     spawn_key=(int(sequence),))

    return np.random.Generator(np.random.PCG64(entropy))


def run_stream(seed):
    """! A generator for run-level sampling (workloads, trials).
    @param seed<int>: The seed.
    """
    return np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(int(seed) & SEED_MASK)))
