# -*- coding: utf-8 -*-

'''Command line plumbing of the zpoly tools: the ArgParser wrapper with its
flag groups and defaults file, the validated JobConfig and the error to exit
code mapping shared by every entry point.'''

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

import argparse
import configparser
import logging
import os
import os.path
import sys

from dataclasses import dataclass
from typing import Optional, Tuple

from zpoly.families import FamilyError, NiceFamily
from zpoly.klz import KlMethod
from zpoly.lib import ZPolyError, fmt, logger
from zpoly.matroid import DEFAULT_MAX_FLATS, MatroidSpecError
from zpoly.roots import RootError

__all__ = ["ArgParser", "JobConfig", "UsageError", "execute", "FORMATS",
    "EXIT_OK", "EXIT_CHECK_FAILED", "EXIT_USAGE"]

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

FORMATS = ("plain", "json", "csv")


class UsageError(ZPolyError):
    """Bad command line or job configuration
    """
    pass


class ArgParser(object):
    """argparse wrapper recording each flag's type and default, so values
    from the defaults file can be merged under the command line.

    Sub-commands get their own ArgParser sharing the flag registry of the
    parent.
    """

    def __init__(self, prog_name, arg_parser=None, parent=None):
        super(ArgParser, self).__init__()
        self.prog_name = prog_name
        self.arg_parser = arg_parser or argparse.ArgumentParser(prog=prog_name)
        self.flags = parent.flags if parent else dict()
        self.defaults = parent.defaults if parent else dict()
        self._subparsers = None

    def add_argument(self, group, *args, **kwargs):
        argument = group.add_argument(*args, **kwargs)
        self.defaults[argument.dest] = argument.default

        if "type" in kwargs:
            _type = kwargs["type"]
        elif "action" in kwargs:
            _type = bool
            action = kwargs["action"]
            if action == "store_true":
                action_default = False
            elif action == "store_false":
                action_default = True
            else:
                raise NotImplementedError("only store_true and store_false actions are implemented")
            self.defaults[argument.dest] = action_default
        else:
            _type = str
        self.flags[argument.dest] = _type
        return argument

    def add_argument_group(self, *args, **kwargs):
        return self.arg_parser.add_argument_group(*args, **kwargs)

    def add_subcommand(self, name, help):
        if self._subparsers is None:
            self._subparsers = self.arg_parser.add_subparsers(dest="command", metavar="command")
            self._subparsers.required = True
        return ArgParser(self.prog_name, self._subparsers.add_parser(name, help=help), parent=self)

    def add_global_group(self):
        global_group = self.add_argument_group('global', 'flags relevant for logging, configuration and parallelism')
        self.add_argument(global_group, '-L', "--logging", action="store_true",
            help='turns on logging to stderr')
        self.add_argument(global_group, "--log_file",
            help='also log to this file')
        self.add_argument(global_group, '-d', "--defaults_file", default="~/.zpoly/zpoly.conf",
            help='the tool config file, defaults to "~/.zpoly/zpoly.conf"')
        self.add_argument(global_group, "--threads", type=int, default=0,
            help='worker processes for sweeps, defaults to $ZPOLY_THREADS or 1')
        return global_group

    def add_matroid_group(self):
        matroid_group = self.add_argument_group('matroid', 'flags selecting the matroid')
        self.add_argument(matroid_group, '-m', "--matroid",
            help='matroid JSON, as a file path or inline document')
        self.add_argument(matroid_group, '-f', "--family",
            help='family descriptor: braid, typeb, uniform:<m> or qvec:<q>')
        self.add_argument(matroid_group, "--d", type=int,
            help='rank of the family member')
        self.add_argument(matroid_group, "--method", choices=[m.value for m in KlMethod],
            help='Kazhdan-Lusztig method, defaults to the family recursion for families and "defining" otherwise')
        self.add_argument(matroid_group, "--all-methods", dest="all_methods", action="store_true",
            help='run every method and report agreement')
        self.add_argument(matroid_group, "--profile",
            help='comma separated corank profile i_r,...,i_1 for whitney')
        self.add_argument(matroid_group, "--max_flats", type=int, default=DEFAULT_MAX_FLATS,
            help='refuse lattices with more flats, defaults to %d' % DEFAULT_MAX_FLATS)
        return matroid_group

    def add_output_group(self):
        output_group = self.add_argument_group('output', 'flags controlling the report')
        self.add_argument(output_group, '-o', "--format", choices=FORMATS,
            help='report format, defaults to plain for compute and json otherwise')
        self.add_argument(output_group, "--certificates", action="store_true",
            help='include Sturm certificates and isolating intervals')
        return output_group

    def add_sweep_group(self):
        sweep_group = self.add_argument_group('sweep', 'flags bounding verification sweeps')
        self.add_argument(sweep_group, "--dmax", type=int,
            help='largest rank to check')
        self.add_argument(sweep_group, "--q", type=int,
            help='field size for gaussian, qshift and gap checks, defaults to 2,3,4,5')
        self.add_argument(sweep_group, "--corpus", default="small", choices=("small", "full"),
            help='matroid corpus for lattice based suites, defaults to "small"')
        self.add_argument(sweep_group, "--order", type=int,
            help='truncation order of series checks')
        return sweep_group

    def add_bench_group(self):
        bench_group = self.add_argument_group('bench', 'flags for benchmark runs')
        self.add_argument(bench_group, "--dmin", type=int,
            help='smallest rank to time, defaults to --d')
        self.add_argument(bench_group, "--reps", type=int, default=3,
            help='repetitions per measurement, the median is reported')
        self.add_argument(bench_group, "--fast-only", dest="fast_only", action="store_true",
            help='skip the lattice baseline')
        self.add_argument(bench_group, "--baseline_max_flats", type=int, default=50000,
            help='skip the lattice baseline above this many flats, defaults to 50000')
        return bench_group

    def finalize(self, argv=None):
        self.args = self.arg_parser.parse_args(sys.argv[1:] if argv is None else argv)

        self._load_config_args()

        self._merge_config_with_cli()

        if self.args.logging:
            ch = logging.StreamHandler()
            ch.setLevel(logging.DEBUG)
            ch.setFormatter(fmt)
            logger.addHandler(ch)
        if self.args.log_file:
            fh = logging.FileHandler(os.path.expanduser(self.args.log_file))
            fh.setLevel(logging.DEBUG)
            fh.setFormatter(fmt)
            logger.addHandler(fh)

        logger.info("#" * 30)
        logger.info("configuration:")
        for key, value in sorted(vars(self.args).items()):
            logger.info("%s: %r", key, value)
        logger.info("#" * 30)

        return self.args

    def _load_config_args(self):
        self.config_args = dict()
        config_parser = configparser.ConfigParser()
        path = os.path.expanduser(self.args.defaults_file)
        if not os.path.isfile(path):
            return

        config_parser.read(path)

        if not config_parser.has_section(self.prog_name):
            return

        for key in config_parser.options(self.prog_name):
            try:
                _type = self.flags[key]
            except KeyError:
                logger.warning("unknown config key %r in %s", key, path)
                continue

            if _type == bool:
                config_value = config_parser.getboolean(self.prog_name, key)
            elif _type == int:
                config_value = config_parser.getint(self.prog_name, key)
            elif _type == float:
                config_value = config_parser.getfloat(self.prog_name, key)
            else:
                config_value = config_parser.get(self.prog_name, key)

            self.config_args[key] = config_value

    def _merge_config_with_cli(self):
        for key, value in vars(self.args).items():
            if key not in self.config_args:
                continue
            if key not in self.defaults:
                continue
            default_value = self.defaults[key]
            conf_value = self.config_args[key]
            if value == default_value and value != conf_value:
                setattr(self.args, key, conf_value)


def _parse_profile(text):
    if text is None or text.strip() == "":
        return None
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError("profile must be comma separated integers, got %r" % text)


@dataclass
class JobConfig:
    """One validated job of a zpoly tool.

    Exactly one matroid source (JSON or family) is set where the command
    needs one; every bound is nonnegative.
    """
    command: str
    target: str
    matroid: Optional[str] = None
    family: Optional[NiceFamily] = None
    d: Optional[int] = None
    method: Optional[KlMethod] = None
    all_methods: bool = False
    profile: Optional[Tuple[int, ...]] = None
    format: str = "plain"
    certificates: bool = False
    dmax: Optional[int] = None
    dmin: Optional[int] = None
    q: Optional[int] = None
    corpus: str = "small"
    order: Optional[int] = None
    reps: int = 3
    fast_only: bool = False
    baseline_max_flats: int = 50000
    max_flats: int = DEFAULT_MAX_FLATS
    threads: int = 0

    def __post_init__(self):
        if self.format not in FORMATS:
            raise UsageError("unknown format %r, expected one of %s" % (self.format, ", ".join(FORMATS)))
        for name in ("d", "dmax", "dmin", "order", "reps", "max_flats", "baseline_max_flats", "threads"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise UsageError("--%s must be nonnegative, got %d" % (name, value))
        if self.q is not None and self.q < 2:
            raise UsageError("--q must be at least 2, got %d" % self.q)

    @property
    def has_source(self):
        return self.matroid is not None or self.family is not None

    def require_source(self):
        """Checks that exactly one matroid source is given and that a family
        comes with its rank."""
        if self.matroid is not None and self.family is not None:
            raise UsageError("give either --matroid or --family, not both")
        if not self.has_source:
            raise UsageError("%s %s needs --matroid or --family" % (self.command, self.target))
        if self.family is not None and self.d is None:
            raise UsageError("--family needs --d")

    @classmethod
    def from_args(cls, command, target, args, default_format="plain"):
        """Builds a JobConfig from a parsed argparse namespace.

        :raises UsageError: on invalid values
        """
        def get(name, default=None):
            return getattr(args, name, default)

        family = None
        if get("family"):
            try:
                family = NiceFamily.parse(get("family"))
            except FamilyError as error:
                raise UsageError(str(error))
        method = KlMethod(get("method")) if get("method") else None
        values = dict(command=command, target=target, matroid=get("matroid"), family=family,
            d=get("d"), method=method, all_methods=bool(get("all_methods")),
            profile=_parse_profile(get("profile")), format=get("format") or default_format,
            certificates=bool(get("certificates")), dmax=get("dmax"), dmin=get("dmin"),
            q=get("q"), corpus=get("corpus") or "small", order=get("order"))
        for name in ("reps", "baseline_max_flats", "max_flats", "threads"):
            if get(name) is not None:
                values[name] = get(name)
        values["fast_only"] = bool(get("fast_only"))
        return cls(**values)


def execute(handler, cfg):
    """Runs a command handler, prints its report and maps the outcome to the
    exit code: 0 pass, 1 failed check, 2 usage or input error.

    :param handler: callable JobConfig -> (passed, rendered report)
    :rtype: int
    """
    try:
        passed, report = handler(cfg)
    except (UsageError, MatroidSpecError, FamilyError) as error:
        witness = getattr(error, "witness", None)
        logger.error("%s", error)
        sys.stderr.write("error: %s\n" % error)
        if witness is not None:
            sys.stderr.write("witness: %r\n" % (witness,))
        return EXIT_USAGE
    except RootError as error:
        logger.error("root certification failed: %s", error)
        sys.stderr.write("check failed: %s\n" % error)
        return EXIT_CHECK_FAILED
    except ZPolyError as error:
        logger.error("%s", error)
        sys.stderr.write("error: %s\n" % error)
        return EXIT_USAGE
    sys.stdout.write(report)
    if report and not report.endswith("\n"):
        sys.stdout.write("\n")
    return EXIT_OK if passed else EXIT_CHECK_FAILED
