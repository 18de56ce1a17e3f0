# -*- coding: utf-8 -*-

"""The bench command: times the family recursion for P_d against the
defining recursion on the enumerated lattice of flats, and checks that both
produce the same polynomial.

Each row reports the median wall time over the repetitions and a checksum of
the polynomial. The lattice baseline is skipped, with a marker row, when the
family's flat count is above --baseline_max_flats.
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

import hashlib
import json
import sys
import time

import numpy

from zpoly.argparser_groups import (EXIT_USAGE, ArgParser, JobConfig, UsageError,
    execute)
from zpoly.families import NiceFamily, build_tables, family_lattice, kl_family
from zpoly.klz import kl_defining
from zpoly.lib import logger, render_json

__all__ = ["cmd_bench", "checksum", "time_family", "time_baseline", "main"]


def checksum(p):
    """Short digest of a polynomial's coefficient list."""
    return hashlib.sha1(json.dumps(p.to_json()).encode("ascii")).hexdigest()[:12]


def _median_run(func, reps):
    timings = []
    result = None
    for _ in range(max(1, reps)):
        started = time.perf_counter()
        result = func()
        timings.append(time.perf_counter() - started)
    return float(numpy.median(timings)), result


def time_family(family, d, reps):
    """Times table construction plus the family recursion, on fresh tables
    each repetition."""
    def run():
        return kl_family(family, d, build_tables.__wrapped__(family, d))
    return _median_run(run, reps)


def time_baseline(family, d, reps, max_flats):
    """Times lattice enumeration plus the defining recursion."""
    def run():
        return kl_defining(family_lattice(family, d, max_flats=max_flats))
    return _median_run(run, reps)


def _family_of(cfg):
    if cfg.family is not None:
        return cfg.family
    return NiceFamily.parse(cfg.target)


def cmd_bench(cfg):
    """Benchmarks the family recursion against the lattice baseline for
    dmin <= d <= cfg.d.

    :returns: (all outputs agree, rendered rows)
    """
    family = _family_of(cfg)
    if cfg.d is None:
        raise UsageError("bench needs --d")
    d_min = cfg.dmin if cfg.dmin is not None else cfg.d
    if d_min > cfg.d:
        raise UsageError("--dmin %d above --d %d" % (d_min, cfg.d))
    rows = []
    agree = True
    for d in range(d_min, cfg.d + 1):
        flats = build_tables(family, d).flat_count(d)
        seconds, fast = time_family(family, d, cfg.reps)
        rows.append({"method": "family", "d": d, "seconds": seconds, "checksum": checksum(fast), "flats": flats})
        logger.info("bench %s d=%d family: %.6fs", family, d, seconds)
        if cfg.fast_only:
            continue
        if flats > cfg.baseline_max_flats:
            rows.append({"method": "defining", "d": d, "seconds": None, "checksum": None, "flats": flats,
                "skipped": "%d flats above baseline cap %d" % (flats, cfg.baseline_max_flats)})
            logger.info("bench %s d=%d defining skipped: %d flats", family, d, flats)
            continue
        base_seconds, slow = time_baseline(family, d, cfg.reps, cfg.max_flats)
        same = slow == fast
        agree = agree and same
        row = {"method": "defining", "d": d, "seconds": base_seconds, "checksum": checksum(slow), "flats": flats,
            "agree": same}
        if seconds > 0:
            row["speedup"] = base_seconds / seconds
        rows.append(row)
        logger.info("bench %s d=%d defining: %.6fs agree=%s", family, d, base_seconds, same)
    if cfg.format == "plain":
        lines = []
        for row in rows:
            if row.get("skipped"):
                lines.append("d=%d %-8s skipped (%s)" % (row["d"], row["method"], row["skipped"]))
                continue
            extra = ""
            if "speedup" in row:
                extra = " speedup %.1fx%s" % (row["speedup"], "" if row["agree"] else " MISMATCH")
            lines.append("d=%d %-8s %.6fs %s flats=%d%s" % (row["d"], row["method"], row["seconds"],
                row["checksum"], row["flats"], extra))
        return agree, "\n".join(lines)
    return agree, render_json({"family": str(family), "reps": cfg.reps, "agree": agree, "rows": rows})


def add_bench_arguments(arg_parser):
    arg_parser.add_global_group()
    main_group = arg_parser.add_matroid_group()
    arg_parser.add_argument(main_group, "bench_family", metavar="family", default="braid", nargs="?",
        help="family descriptor to benchmark, defaults to braid")
    arg_parser.add_bench_group()
    arg_parser.add_output_group()


def main(argv=None):
    """configures the cli argument parser and runs one benchmark"""
    arg_parser = ArgParser("zpoly_bench")
    add_bench_arguments(arg_parser)
    args = arg_parser.finalize(argv)
    try:
        cfg = JobConfig.from_args("bench", args.bench_family, args, default_format="json")
    except UsageError as error:
        sys.stderr.write("error: %s\n" % error)
        return EXIT_USAGE
    return execute(cmd_bench, cfg)


if __name__ == '__main__':
    sys.exit(main())
