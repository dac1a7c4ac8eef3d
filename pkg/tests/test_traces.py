#!/usr/bin/env python3
##
# @file test_traces.py
#
# @brief Tests of trace ingestion, pricing, synthetic generators,
# adversarial families and the instance document.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/10.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Standard library
from fractions import Fraction

# External library
import pytest

# Internal library
from conftest import OFF_PEAK, ON_PEAK
from models.errors import (ConfigurationError, TraceFormatError,
                           TraceShortfallError)
from traces.adversarial import Family, adversarial_instance
from traces.instance_file import dumps_instance, load_instance, \
    loads_instance, dump_instance
from traces.pricing import PricingSchedule, pricing_series
from traces.solar import parse_solar, scale_solar
from traces.synthetic import diurnal_solar, grid_like_trace, \
    uniform_workload
from traces.workload import WorkloadRecord, WorkloadTrace, parse_workload, \
    scale_workload


def write(tmp_path, name, text):
    path = tmp_path / name

    path.write_text(text)

    return path


def test_parse_workload(tmp_path):
    path = write(tmp_path, "jobs.csv",
                 "arrival_s,runtime_s,nodes\n0,3600,4\n600,1800,1\n"
                 "300,7200,2\n")

    trace = parse_workload(path)

    assert len(trace) == 3

    assert [record.arrival_s for record in trace.records] == [0, 300, 600]


def test_parse_workload_reports_bad_lines(tmp_path):
    path = write(tmp_path, "jobs.csv",
                 "arrival_s,runtime_s,nodes\n0,3600,4\n600,0,1\n")

    with pytest.raises(TraceFormatError, match="line 3"):
        parse_workload(path)

    path = write(tmp_path, "header.csv", "arrival,runtime,nodes\n0,1,1\n")

    with pytest.raises(TraceFormatError):
        parse_workload(path)


def test_bad_lines_keep_their_numbers_after_blank_lines(tmp_path):
    path = write(tmp_path, "jobs.csv",
                 "arrival_s,runtime_s,nodes\n0,60,1\n\n\n10,0,1\n")

    with pytest.raises(TraceFormatError, match="line 5: runtime"):
        parse_workload(path)

    path = write(tmp_path, "solar.csv", "timestamp,watts\n0,10\n\n3600,-5\n")

    with pytest.raises(TraceFormatError) as error:
        parse_solar(path)

    assert error.value.line == 4


def test_parse_empty_workload(tmp_path):
    assert len(parse_workload(write(tmp_path, "empty.csv", ""))) == 0


def test_scale_workload_reaches_its_target():
    trace = grid_like_trace(4000, seed=3)

    jobs = scale_workload(trace, 100, 60, 1, Fraction("0.2"), seed=5,
                          horizon=120)

    total = sum(job.demand for job in jobs)

    assert 12000 * 0.98 <= total <= 12000 * 1.02

    assert all(job.deadline <= 120 and job.nodes <= 100 for job in jobs)

    again = scale_workload(trace, 100, 60, 1, Fraction("0.2"), seed=5,
                           horizon=120)

    assert again == jobs

    assert scale_workload(trace, 100, 60, 0, Fraction("0.2"), seed=5,
                          horizon=120) == []


def test_scale_workload_shortfall():
    trace = WorkloadTrace((WorkloadRecord(Fraction(0), Fraction(3600), 1),))

    with pytest.raises(TraceShortfallError):
        scale_workload(trace, 10, 60, 1, Fraction(1, 2), seed=0, horizon=24)

    with pytest.raises(ConfigurationError):
        scale_workload(trace, 10, 60, 2, Fraction(1, 2), seed=0, horizon=24)


def test_scale_solar(tmp_path):
    path = write(tmp_path, "solar.csv",
                 "timestamp,watts\n0,1000\n3600,500\n7200,500\n10800,0\n")

    green = scale_solar(parse_solar(path), 16, 140, 60)

    assert green == (16, 8, 8, 0)


def test_scale_solar_aggregates_samples(tmp_path):
    path = write(tmp_path, "solar.csv",
                 "timestamp,watts\n"
                 "2024-06-01 00:00:00,0\n2024-06-01 00:30:00,280\n"
                 "2024-06-01 01:00:00,140\n2024-06-01 01:30:00,140\n")

    green = scale_solar(parse_solar(path), 2, 140, 60)

    assert green == (1, 1)


def test_scale_solar_errors(tmp_path):
    zero = write(tmp_path, "zero.csv", "timestamp,watts\n0,0\n300,0\n")

    with pytest.raises(TraceFormatError):
        scale_solar(parse_solar(zero), 4, 140, 60)

    odd = write(tmp_path, "odd.csv", "timestamp,watts\n0,10\n420,10\n")

    with pytest.raises(TraceFormatError):
        scale_solar(parse_solar(odd), 4, 140, 60)

    uneven = write(tmp_path, "uneven.csv",
                   "timestamp,watts\n0,1\n300,1\n900,1\n")

    with pytest.raises(TraceFormatError):
        parse_solar(uneven)


def test_pricing_series(settings):
    schedule = PricingSchedule.from_settings(settings)

    prices = pricing_series(schedule, 48, 60,
                            settings.energy_per_machine_slot)

    assert prices[10] == ON_PEAK

    assert prices[2] == OFF_PEAK

    assert prices[9] == ON_PEAK and prices[23] == OFF_PEAK

    assert prices[34] == ON_PEAK


def test_pricing_windows():
    flat = PricingSchedule(Fraction("0.13"), Fraction("0.08"), 9, 9)

    assert not any(flat.is_on_peak(hour) for hour in range(24))

    night = PricingSchedule(Fraction("0.13"), Fraction("0.08"), 22, 6)

    assert night.is_on_peak(23) and night.is_on_peak(3)

    assert not night.is_on_peak(12)


def test_uniform_workload():
    jobs = uniform_workload(16, 48, Fraction(1, 10), 2, 4, Fraction("0.2"), 1)

    assert len(jobs) == round(Fraction(1, 10) * 16 * 48 / 8)

    assert all(job.deadline <= 48 for job in jobs)

    with pytest.raises(ConfigurationError):
        uniform_workload(2, 48, 1, 2, 4, Fraction("0.2"), 1)


def test_diurnal_solar():
    trace = diurnal_solar(days=1, interval_minutes=5, peak_watts=1000)

    green = scale_solar(trace, 10, 140, 60)

    assert len(green) == 24

    assert green[0] == 0 and green[23] == 0

    assert green[12] > 0 and max(green) <= 10


@pytest.mark.parametrize("family, classes, green, releases", [
    ("thm1-on-green", ("on", "on"), (0, 4), [0]),
    ("thm1-on-off", ("on", "off"), (0, 0), [0]),
    ("thm2-on-off", ("on", "off"), (0, 0), [0, 1]),
    ("thm2-off-green", ("off", "on"), (0, 4), [0, 1]),
    ("thm3-2.2", ("off", "on"), (0, 4), [0, 1]),
])
def test_adversarial_families(settings, family, classes, green, releases):
    instance = adversarial_instance(family, 4, settings)

    costs = {"on": ON_PEAK, "off": OFF_PEAK}

    assert instance.price == tuple(costs[name] for name in classes)

    assert instance.green == green

    assert [job.release for job in instance.jobs] == releases

    assert all(job.deadline == 2 and job.nodes == 4
               for job in instance.jobs)


def test_adversarial_family_errors(settings):
    with pytest.raises(ConfigurationError):
        Family.parse("thm9")

    flat = settings.replace(off_peak_price_kwh=Fraction("0.13"))

    with pytest.raises(ConfigurationError):
        adversarial_instance("thm1-on-green", 4, flat)

    assert Family.scenario("1.2") is Family.THM3_1_2


def test_instance_document_is_exact(settings, tmp_path):
    instance = adversarial_instance("thm2-off-green", 4, settings)

    text = dumps_instance(instance)

    assert "91/5000" in text or "7/625" in text

    path = tmp_path / "instance.yaml"

    dump_instance(instance, path)

    assert load_instance(path) == instance


@pytest.mark.parametrize("text", [
    "format: other\n",
    "format: green-instance/1\ncluster: {machines: 1}\n",
    "jobs: [\n",
])
def test_instance_document_errors(text):
    with pytest.raises(TraceFormatError):
        loads_instance(text)
