# -*- coding: utf-8 -*-

"""The compute command: prints Kazhdan-Lusztig and Z-polynomials,
characteristic polynomials, Whitney numbers, Möbius values, family tables
and flat counts of a single matroid.

The matroid comes either as JSON (file path or inline document) or as a
family descriptor with its rank. Family members use the table recursion
unless a lattice method is requested.
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

import csv
import io
import sys

from zpoly.argparser_groups import (EXIT_USAGE, ArgParser, JobConfig, UsageError,
    execute)
from zpoly.families import (build_tables, family_lattice, kl_family,
    tables_csv, whitney_multi_family, z_family)
from zpoly.klz import KlMethod, kl_all_methods, kl_polynomial, z_polynomial
from zpoly.lib import logger, render_json
from zpoly.matroid import elements_of, enumerate_flats, load_spec
from zpoly.polyarith import IntPolynomial

__all__ = ["QUANTITIES", "cmd_compute", "load_lattice", "main"]

QUANTITIES = ("kl", "z", "chi", "whitney", "mobius", "tables", "flats")


def load_lattice(cfg):
    """Enumerates the lattice of the configured matroid source."""
    cfg.require_source()
    if cfg.family is not None:
        return family_lattice(cfg.family, cfg.d, max_flats=cfg.max_flats)
    return enumerate_flats(load_spec(cfg.matroid), max_flats=cfg.max_flats)


def _csv(header, rows):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return out.getvalue()


def _polynomials(cfg):
    """(label -> IntPolynomial, agree) for kl and z."""
    polynomial = kl_polynomial if cfg.target == "kl" else z_polynomial
    if cfg.all_methods:
        lat = load_lattice(cfg)
        if cfg.target == "kl":
            results, agree = kl_all_methods(lat)
        else:
            results = dict((method, z_polynomial(lat, method)) for method in KlMethod)
            agree = len(set(results.values())) == 1
        found = dict((method.value, p) for method, p in results.items())
        if cfg.family is not None:
            found["family"] = (kl_family if cfg.target == "kl" else z_family)(cfg.family, cfg.d)
            agree = agree and len(set(found.values())) == 1
        return found, agree
    if cfg.family is not None and cfg.method is None:
        cfg.require_source()
        fast = kl_family if cfg.target == "kl" else z_family
        return {"family": fast(cfg.family, cfg.d)}, True
    method = cfg.method or KlMethod.DEFINING
    return {method.value: polynomial(load_lattice(cfg), method)}, True


def _render_polynomials(cfg, found, agree):
    if cfg.format == "json":
        report = {"quantity": cfg.target, "results": dict((k, p.to_json()) for k, p in found.items())}
        if len(found) > 1:
            report["agree"] = agree
        return render_json(report)
    if cfg.format == "csv":
        return _csv(["method", "power", "coeff"],
            [(label, power, c) for label, p in found.items() for power, c in enumerate(p.coeffs)])
    lines = [str(p) for p in found.values()]
    if len(found) > 1:
        lines.append("AGREE" if agree else "DISAGREE")
    return "\n".join(lines)


def _render_polynomial(cfg, p):
    if cfg.format == "json":
        return render_json({"quantity": cfg.target, "coeffs": p.to_json()})
    if cfg.format == "csv":
        return _csv(["power", "coeff"], enumerate(p.coeffs))
    return str(p)


def _render_value(cfg, value):
    if cfg.format == "json":
        return render_json({"quantity": cfg.target, "profile": list(cfg.profile), "value": value})
    if cfg.format == "csv":
        return _csv(["profile", "value"], [(",".join(map(str, cfg.profile)), value)])
    return str(value)


def _characteristic(cfg):
    cfg.require_source()
    if cfg.family is not None:
        tables = build_tables(cfg.family, cfg.d)
        return IntPolynomial([tables.w[cfg.d, k] for k in range(cfg.d + 1)])
    return load_lattice(cfg).characteristic_polynomial()


def _whitney(cfg):
    if cfg.profile is None:
        raise UsageError("compute whitney needs --profile i_r,...,i_1")
    cfg.require_source()
    if cfg.family is not None:
        return whitney_multi_family(cfg.family, cfg.d, cfg.profile)
    return load_lattice(cfg).whitney_multi(cfg.profile)


def _mobius(cfg):
    lat = load_lattice(cfg)
    mu = lat.mobius_from_bottom()
    rows = [(elements_of(lat.flats[f]), lat.rank[f], mu[f]) for f in range(len(lat))]
    if cfg.format == "json":
        return render_json({"quantity": "mobius",
            "flats": [{"flat": flat, "rank": rank, "mobius": value} for flat, rank, value in rows]})
    if cfg.format == "csv":
        return _csv(["flat", "rank", "mobius"], [(" ".join(map(str, f)), r, v) for f, r, v in rows])
    return "\n".join("%s\t%d\t%d" % ("{%s}" % ",".join(map(str, f)), r, v) for f, r, v in rows)


def _tables(cfg):
    if cfg.family is None or cfg.d is None:
        raise UsageError("compute tables needs --family and --d")
    tables = build_tables(cfg.family, cfg.d)
    if cfg.format == "json":
        return render_json({"quantity": "tables", "family": str(cfg.family), "d_max": cfg.d,
            "W": [[tables.W[d, k] for k in range(d + 1)] for d in range(cfg.d + 1)],
            "w": [[tables.w[d, k] for k in range(d + 1)] for d in range(cfg.d + 1)]})
    return tables_csv(tables)


def _flat_counts(cfg):
    """Number of flats per rank 0..rk."""
    cfg.require_source()
    if cfg.family is not None:
        tables = build_tables(cfg.family, cfg.d)
        counts = [tables.W[cfg.d, cfg.d - r] for r in range(cfg.d + 1)]
    else:
        counts = list(reversed(load_lattice(cfg).whitney_numbers()))
    if cfg.format == "json":
        return render_json({"quantity": "flats", "by_rank": counts, "total": sum(counts)})
    if cfg.format == "csv":
        return _csv(["rank", "flats"], enumerate(counts))
    return "\n".join("rank %d: %d" % (r, c) for r, c in enumerate(counts))


def cmd_compute(cfg):
    """Computes one quantity of one matroid.

    :param cfg: the job, `cfg.target` names the quantity
    :type cfg: JobConfig

    :returns: (passed, rendered report); passed is False only when
        --all-methods finds a disagreement
    :raises UsageError: on an unknown quantity or missing flags
    """
    logger.debug("compute %s", cfg.target)
    if cfg.target in ("kl", "z"):
        found, agree = _polynomials(cfg)
        return agree, _render_polynomials(cfg, found, agree)
    if cfg.target == "chi":
        return True, _render_polynomial(cfg, _characteristic(cfg))
    if cfg.target == "whitney":
        return True, _render_value(cfg, _whitney(cfg))
    if cfg.target == "mobius":
        return True, _mobius(cfg)
    if cfg.target == "tables":
        return True, _tables(cfg)
    if cfg.target == "flats":
        return True, _flat_counts(cfg)
    raise UsageError("unknown quantity %r, expected one of %s" % (cfg.target, ", ".join(QUANTITIES)))


def add_compute_arguments(arg_parser):
    arg_parser.add_global_group()
    main_group = arg_parser.add_matroid_group()
    arg_parser.add_argument(main_group, "quantity", choices=QUANTITIES,
        help="what to compute")
    arg_parser.add_output_group()


def main(argv=None):
    """configures the cli argument parser and runs one compute job"""
    arg_parser = ArgParser("zpoly_compute")
    add_compute_arguments(arg_parser)
    args = arg_parser.finalize(argv)
    try:
        cfg = JobConfig.from_args("compute", args.quantity, args)
    except UsageError as error:
        sys.stderr.write("error: %s\n" % error)
        return EXIT_USAGE
    return execute(cmd_compute, cfg)


if __name__ == '__main__':
    sys.exit(main())
