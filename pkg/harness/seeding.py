#!/usr/bin/env python3
##
# @file seeding.py
#
# @brief Provide stable per-cell seeds.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/06.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Standard library
import hashlib

SEED_MASK = 2 ** 64 - 1


def cell_seed(base, *parts):
    """! base XOR a 64-bit digest of the parts.

    The digest only depends on the parts' text, so adding cells or policies
    to a plan leaves the seeds of the others unchanged.
    @param base<int>: The plan's base seed.
    @param parts: Labels of the cell, e.g. ("policy", "0.1", "1/5", 3).
    """
    text = "|".join(str(part) for part in parts).encode("utf-8")

    digest = hashlib.blake2b(text, digest_size=8).digest()

    return (int(base) ^ int.from_bytes(digest, "big")) & SEED_MASK
