#!/usr/bin/env python3
##
# @file run.py
#
# @brief Provide the command-line entry point of the simulator.
#
# Subcommands: simulate, sweep, exact, adversary, ratio and mc-ratio. Exit
# codes are 0 on success, 1 on a usage error, 2 on an input or parse error
# and 3 when the exact search ran out of budget.
#
# @section author_doxygen_example Author(s)
# - Created on 2024/09/08.
#
# Copyright (c) 2024 System Engineering Laboratory.  All rights reserved.

# Standard library
import argparse
import dataclasses
import json
import logging
import sys

# Internal library
from harness.augmentation import augmentation_experiment, augmentation_ratio
from harness.experiment import run_experiment
from harness.monte_carlo import SCENARIOS, monte_carlo_ratio
from harness.plan import ExperimentPlan
from harness.ratio import RatioTable, ratio_lower_bound
from models.errors import ConfigurationError, GreenSchedulingError
from models.profit import augmentation_lower_bound, values_from_settings, \
    worst_case_bound
from models.settings import Settings, to_fraction
from schedulers.decision import Policy, SchedulerConfig
from simulators.time_stepping import TimeStepping
from solvers.branch_and_bound import DEFAULT_NODE_LIMIT, \
    DEFAULT_TIME_LIMIT_S, solve_exact
from traces.adversarial import Family, adversarial_instance
from traces.instance_file import dump_instance, dumps_instance, \
    load_instance
from visualizers.table_printer import TablePrinter

EXIT_OK = 0

EXIT_USAGE = 1

EXIT_INPUT = 2

EXIT_BUDGET = 3


class UsageError(Exception):
    """! A command line that argparse rejected."""


class Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def main(argv=None):
    """! Run one subcommand.
    @param argv<list>: The arguments, sys.argv[1:] by default.
    @return The exit code.
    """
    parser = _build_parser()

    try:
        args = parser.parse_args(argv)

    except UsageError as error:
        print(error, file=sys.stderr)

        return EXIT_USAGE

    except SystemExit as error:
        return EXIT_OK if not error.code else EXIT_USAGE

    logging.basicConfig(level=getattr(logging, args.log_level),
                        stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")

    try:
        settings = Settings.from_yaml(args.config) if args.config else \
            Settings()

        return COMMANDS[args.command](args, settings)

    except (GreenSchedulingError, OSError) as error:
        print(f"error: {error}", file=sys.stderr)

        return EXIT_INPUT


# ==================================================================
# SUBCOMMANDS
# ==================================================================
def simulate(args, settings):
    instance = load_instance(args.instance)

    knobs = {"rng_seed": args.seed,
             "randomfit_p_override": args.p_override,
             "greenslot_penalty": args.greenslot_penalty,
             "greenslot_slack_fraction": args.greenslot_slack_fraction}

    config = SchedulerConfig.from_settings(
        args.policy, settings,
        **{key: value for key, value in knobs.items() if value is not None})

    _echo(args, settings, scheduler=config.as_dict())

    if args.augment is not None:
        return _augment(instance, config, args.augment, settings)

    simulator = TimeStepping(instance, config)

    _, report, _ = simulator.run()

    printer = TablePrinter()

    printer.print_report(report, config.label)

    if args.trace:
        printer.print_trace(simulator, instance)

    if not args.compare_exact:
        return EXIT_OK

    solution = solve_exact(instance)

    _print_ratio("ratio", solution.net_profit / report.net_profit
                 if report.net_profit > 0 else None)

    bound = worst_case_bound(config.policy.value,
                             values_from_settings(settings))

    if bound is not None:
        _print_ratio("worst-case bound", bound)

    return EXIT_OK if solution.optimal else EXIT_BUDGET


def sweep(args, settings):
    overrides = {
        "utilizations": _fractions(args.utilizations),
        "least_qualities": _fractions(args.L),
        "repetitions": args.reps,
        "policies": args.policies.split(",") if args.policies else None,
        "base_seed": args.seed,
        "workload_path": args.workload,
        "solar_path": args.solar,
        "uniform_jobs": args.uniform_jobs,
        "job_length": args.job_length,
        "job_nodes": args.job_nodes,
        "grid_records": args.grid_records,
        "cloudiness": args.cloudiness,
        "fixed_workload": args.fixed_workload,
        "offline": args.offline,
        "node_limit": args.node_limit,
        "time_limit_s": args.time_limit_s,
        "workers": args.workers,
    }

    if args.plan:
        plan = ExperimentPlan.from_yaml(args.plan, settings, **overrides)

    else:
        plan = ExperimentPlan.from_mapping({}, settings, **overrides)

    plan = dataclasses.replace(plan, settings=plan.settings.replace(
        machines=args.machines, horizon_slots=args.horizon_slots))

    _echo(args, plan.settings, plan=plan.as_dict())

    table = run_experiment(plan)

    if args.output:
        table.to_csv(args.output)

        TablePrinter().print_table(table)

    else:
        table.to_csv(sys.stdout)

    return EXIT_OK


def exact(args, settings):
    instance = load_instance(args.instance)

    _echo(args, settings)

    solution = solve_exact(instance, args.node_limit, args.time_limit_s)

    TablePrinter().print_report(
        solution.report, "optimal" if solution.optimal else "best found")

    starts = ", ".join(
        f"{job.id}:{solution.state.assignments.get(job.id, 'rejected')}"
        for job in instance.jobs)

    print(f"starts: {starts}")

    print(f"nodes: {solution.nodes_explored}, "
          f"wall time: {solution.wall_time:.3f} s")

    if not solution.optimal:
        print("error: search budget exhausted before proving optimality",
              file=sys.stderr)

        return EXIT_BUDGET

    return EXIT_OK


def adversary(args, settings):
    _echo(args, settings)

    instance = adversarial_instance(args.family, args.machines, settings)

    if args.output:
        dump_instance(instance, args.output)

    else:
        sys.stdout.write(dumps_instance(instance))

    return EXIT_OK


def ratio(args, settings):
    _echo(args, settings)

    table = ratio_lower_bound(RatioTable.read_csv(args.input))

    if args.output:
        table.to_csv(args.output)

        TablePrinter().print_table(table)

    else:
        table.to_csv(sys.stdout)

    return EXIT_OK


def mc_ratio(args, settings):
    _echo(args, settings)

    result = monte_carlo_ratio(args.scenario, settings, args.trials,
                               args.seed, args.p_override, args.machines)

    TablePrinter().print_mapping(result.as_dict(),
                                 f"scenario {result.scenario}")

    return EXIT_OK


COMMANDS = {
    "simulate": simulate,
    "sweep": sweep,
    "exact": exact,
    "adversary": adversary,
    "ratio": ratio,
    "mc-ratio": mc_ratio,
}


# ==================================================================
# PRIVATE METHODS
# ==================================================================
def _build_parser():
    parser = Parser(prog="run.py")

    parser.add_argument("--config", help="settings YAML file")

    parser.add_argument("--log-level", default="WARNING",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"])

    commands = parser.add_subparsers(dest="command", required=True,
                                     parser_class=Parser)

    command = commands.add_parser("simulate", help="run one online policy")

    command.add_argument("--instance", required=True)

    command.add_argument("--policy", required=True,
                         choices=[policy.value for policy in Policy])

    command.add_argument("--seed", type=int, default=0)

    command.add_argument("--p-override", type=_fraction)

    command.add_argument("--greenslot-penalty", type=_fraction)

    command.add_argument("--greenslot-slack-fraction", type=_fraction)

    command.add_argument("--compare-exact", action="store_true")

    command.add_argument("--augment", type=_fraction, metavar="ALPHA",
                         help="run with ALPHA times the green supply "
                              "against the unaugmented optimum")

    command.add_argument("--trace", action="store_true",
                         help="also print the per-slot history")

    command = commands.add_parser("sweep", help="run an experiment plan")

    command.add_argument("--plan", help="plan YAML file")

    command.add_argument("--utilizations", help="e.g. 0.1,1.0")

    command.add_argument("--L", help="least service qualities, e.g. 0.2")

    command.add_argument("--reps", type=int)

    command.add_argument("--policies", help="e.g. ff,bf,rf,gs")

    command.add_argument("--machines", type=int)

    command.add_argument("--horizon-slots", type=int)

    command.add_argument("--seed", type=int)

    command.add_argument("--workers", type=int)

    command.add_argument("--workload", help="workload CSV, synthetic if unset")

    command.add_argument("--solar", help="solar CSV, synthetic if unset")

    command.add_argument("--uniform-jobs",
                         action=argparse.BooleanOptionalAction)

    command.add_argument("--job-length", type=int)

    command.add_argument("--job-nodes", type=int)

    command.add_argument("--grid-records", type=int)

    command.add_argument("--cloudiness", type=_fraction)

    command.add_argument("--fixed-workload",
                         action=argparse.BooleanOptionalAction)

    command.add_argument("--offline", action=argparse.BooleanOptionalAction)

    command.add_argument("--node-limit", type=int)

    command.add_argument("--time-limit-s", type=float)

    command.add_argument("--output", help="CSV path, stdout by default")

    command = commands.add_parser("exact", help="solve an instance exactly")

    command.add_argument("--instance", required=True)

    command.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)

    command.add_argument("--time-limit-s", type=float,
                         default=DEFAULT_TIME_LIMIT_S)

    command = commands.add_parser("adversary",
                                  help="write an adversarial instance")

    command.add_argument("--family", required=True,
                         choices=[family.value for family in Family])

    command.add_argument("--machines", type=int, required=True)

    command.add_argument("--output", help="instance path, stdout by default")

    command = commands.add_parser("ratio", help="recompute ratio columns")

    command.add_argument("--input", required=True)

    command.add_argument("--output")

    command = commands.add_parser("mc-ratio",
                                  help="Monte Carlo ratio of random-fit")

    command.add_argument("--scenario", required=True, choices=SCENARIOS)

    command.add_argument("--trials", type=int, default=10 ** 5)

    command.add_argument("--seed", type=int, default=0)

    command.add_argument("--p-override", type=_fraction)

    command.add_argument("--machines", type=int, default=1)

    return parser


def _augment(instance, config, alpha, settings):
    online, exact = augmentation_experiment(instance, alpha, config)

    printer = TablePrinter()

    printer.print_report(online, f"{config.label} with {alpha}x green")

    printer.print_report(exact, "optimal without augmentation")

    _print_ratio("augmented ratio", augmentation_ratio(online, exact))

    try:
        bound = augmentation_lower_bound(
            values_from_settings(settings).check_ordering())

    except ConfigurationError:
        bound = None

    _print_ratio("augmentation bound", bound)

    return EXIT_OK


def _print_ratio(name, value):
    if value is None:
        print(f"{name}: undefined")

    else:
        print(f"{name}: {float(value):.6g} ({value})")


def _echo(args, settings, **extra):
    """! Print the resolved configuration as one JSON line on stderr."""
    resolved = {key: value if isinstance(value, (int, float, str, bool,
                                                 type(None)))
                else str(value) for key, value in vars(args).items()}

    resolved["settings"] = settings.as_dict()

    resolved.update(extra)

    print(f"# resolved-config: {json.dumps(resolved, sort_keys=True)}",
          file=sys.stderr)


def _fraction(text):
    """! argparse type of exact rational flags."""
    try:
        return to_fraction(text)

    except GreenSchedulingError as error:
        raise argparse.ArgumentTypeError(str(error)) from error


def _fractions(text):
    if text is None:
        return None

    return tuple(to_fraction(item.strip()) for item in text.split(",")
                 if item.strip())


if __name__ == "__main__":
    sys.exit(main())
