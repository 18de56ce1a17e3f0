# -*- coding: utf-8 -*-

"""The zpoly command line front end.

    zpoly compute z --family uniform:1 --d 3
    zpoly compute kl --matroid k4.json --all-methods
    zpoly verify narayana --dmax 12
    zpoly bench braid --d 8 --reps 3

Exit codes: 0 when every check passes, 1 when a mathematical check fails
(the report carries the certificate or witness), 2 on usage or input errors.
"""

# This file is part of zpoly
#
# zpoly is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# zpoly is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with zpoly.  If not, see <http://www.gnu.org/licenses/>.

import sys

import zpoly._version

from zpoly.argparser_groups import (EXIT_USAGE, ArgParser, JobConfig, UsageError,
    execute)
from zpoly.lib import logger
from zpoly.zpoly_bench import add_bench_arguments, cmd_bench
from zpoly.zpoly_compute import add_compute_arguments, cmd_compute
from zpoly.zpoly_verify import add_verify_arguments, cmd_verify

__all__ = ["COMMANDS", "JobConfig", "UsageError", "build_parser", "job_from_args", "run", "main"]

COMMANDS = {
    "compute": cmd_compute,
    "verify": cmd_verify,
    "bench": cmd_bench,
}


def build_parser():
    arg_parser = ArgParser("zpoly")
    arg_parser.arg_parser.add_argument("--version", action="version",
        version="%(prog)s " + zpoly._version.__version__)
    add_compute_arguments(arg_parser.add_subcommand("compute", "compute one quantity of one matroid"))
    add_verify_arguments(arg_parser.add_subcommand("verify", "run a verification suite"))
    add_bench_arguments(arg_parser.add_subcommand("bench", "time the family recursion against the lattice"))
    return arg_parser


def job_from_args(args):
    """The JobConfig of a parsed zpoly command line."""
    if args.command == "compute":
        return JobConfig.from_args("compute", args.quantity, args)
    if args.command == "verify":
        return JobConfig.from_args("verify", args.suite, args, default_format="json")
    if args.command == "bench":
        return JobConfig.from_args("bench", args.bench_family, args, default_format="json")
    raise UsageError("unknown command %r, expected one of %s" % (args.command, ", ".join(COMMANDS)))


def run(cfg):
    """Runs a job and returns its exit code."""
    return execute(COMMANDS[cfg.command], cfg)


def main(argv=None):
    """configures the cli argument parser and dispatches to the sub-command"""
    args = build_parser().finalize(argv)
    try:
        cfg = job_from_args(args)
    except UsageError as error:
        sys.stderr.write("error: %s\n" % error)
        return EXIT_USAGE
    logger.debug("zpoly-%s %s %s", zpoly._version.__version__, cfg.command, cfg.target)
    return run(cfg)


if __name__ == '__main__':
    sys.exit(main())
