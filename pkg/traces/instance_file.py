#!/usr/bin/env python3
##
# @file instance_file.py
#
# @brief Provide the canonical instance document (YAML, UTF-8).
#
# The document has four sections, every quantity carries its unit in its
# key, and every rational is written as a string such as "11/500" so a
# dump followed by a load reproduces the instance exactly:
#
#   format: green-instance/1
#   cluster:
#     machines: 4
#     horizon_slots: 2
#     charge_rate_per_machine_slot: "11/500"
#   pricing:
#     brown_price_per_machine_slot: ["91/5000", "91/5000"]
#   green:
#     supply_machine_slots: ["0", "4"]
#   jobs:
#     - {id: 1, release_slot: 0, length_slots: 1, nodes: 4,
#        least_quality: "1/2"}
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/05.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# External library
import yaml

# Internal library
from models.errors import ConfigurationError, TraceFormatError
from models.instance import Instance
from models.job import Job
from models.settings import to_fraction

FORMAT = "green-instance/1"


def dumps_instance(instance):
    """! The instance as a YAML document.
    @param instance<Instance>: The instance.
    """
    document = {
        "format": FORMAT,
        "cluster": {
            "machines": instance.machines,
            "horizon_slots": instance.horizon,
            "charge_rate_per_machine_slot": str(instance.charge_rate),
        },
        "pricing": {
            "brown_price_per_machine_slot": [str(value) for value in
                                             instance.price],
        },
        "green": {
            "supply_machine_slots": [str(value) for value in instance.green],
        },
        "jobs": [
            {"id": job.id, "release_slot": job.release,
             "length_slots": job.length, "nodes": job.nodes,
             "least_quality": str(job.least_quality)}
            for job in instance.jobs],
    }

    return yaml.safe_dump(document, sort_keys=False, allow_unicode=True,
                          default_flow_style=None, width=100)


def loads_instance(text):
    """! Parse a YAML instance document.
    @param text<str>: The document.
    @return The Instance.
    """
    try:
        document = yaml.safe_load(text)

    except yaml.YAMLError as error:
        mark = getattr(error, "problem_mark", None)

        raise TraceFormatError(
            f"invalid YAML: {getattr(error, 'problem', error)}",
            line=mark.line + 1 if mark is not None else None) from error

    if not isinstance(document, dict) or document.get("format") != FORMAT:
        raise TraceFormatError(f"not a {FORMAT} document")

    try:
        cluster = document["cluster"]

        jobs = [Job(int(entry["id"]), int(entry["release_slot"]),
                    int(entry["length_slots"]), int(entry["nodes"]),
                    to_fraction(str(entry["least_quality"])))
                for entry in document.get("jobs") or []]

        return Instance(
            jobs=tuple(jobs),
            machines=int(cluster["machines"]),
            horizon=int(cluster["horizon_slots"]),
            green=tuple(to_fraction(str(value)) for value in
                        document["green"]["supply_machine_slots"]),
            price=tuple(to_fraction(str(value)) for value in
                        document["pricing"]["brown_price_per_machine_slot"]),
            charge_rate=to_fraction(
                str(cluster["charge_rate_per_machine_slot"])))

    except (KeyError, TypeError, ValueError) as error:
        raise TraceFormatError(f"missing or malformed field: {error}") \
            from error

    except ConfigurationError as error:
        raise TraceFormatError(str(error)) from error


def dump_instance(instance, path):
    """! Write the instance document to a file."""
    with open(path, "w", encoding="utf-8") as stream:
        stream.write(dumps_instance(instance))


def load_instance(path):
    """! Read an instance document from a file."""
    with open(path, encoding="utf-8") as stream:
        return loads_instance(stream.read())
