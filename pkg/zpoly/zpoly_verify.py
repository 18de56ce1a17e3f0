# -*- coding: utf-8 -*-

"""The verify command: named verification suites over the matroid corpus and
the nice families.

Every suite returns a list of checks, each a dict with at least "name" and
"pass"; failing checks carry what is needed to reproduce them (the
disagreeing polynomials, the interlacing witness, the uncertified gap).
Suites are individually addressable so they can be run as separate jobs.
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

from collections import OrderedDict

from zpoly.argparser_groups import (EXIT_USAGE, ArgParser, JobConfig, UsageError,
    execute)
from zpoly.corpus import CorpusEntry, corpus, equivariant_corpus
from zpoly.equivariant import (MAX_SCHUR_DEGREE, SymFunction, dimension,
    equivariant_c_character, equivariant_c_uniform, h_to_schur, is_schur_positive)
from zpoly.families import (NiceFamily, family_lattice, gaussian_identity_holds,
    generating_series_check, kl_closed_family, kl_family, narayana_identity_holds,
    palindromic_up_to, q_shift_check, series_identity_check, w_inversion_holds,
    z_family)
from zpoly.klz import (KlMethod, defining_identity_holds, empty_flat_term_vanishes,
    enumerate_index_tuples, kl_all_methods, kl_coeff_closed, kl_polynomial,
    mobius_inversion_holds, z_is_palindromic, z_polynomial)
from zpoly.lib import fraction_to_json, logger, parallel_map, render_json
from zpoly.matroid import enumerate_flats, load_spec
from zpoly.roots import conjecture_sweep, qvec_gap_property

__all__ = ["SUITES", "cmd_verify", "main", "run_suite", "sweep_families"]

FIELD_SIZES = (2, 3, 4, 5)
# conjugating by every element is quadratic in the order; above this the
# generators are used, which is equivalent
FULL_CONJUGATION_ORDER = 120


def sweep_families(cfg):
    """The families of a sweep: the configured one, or braid, typeb and
    uniform:1..5."""
    if cfg.family is not None:
        return [cfg.family]
    return [NiceFamily.braid(), NiceFamily.type_b()] + [NiceFamily.uniform(m) for m in range(1, 6)]


def _field_sizes(cfg):
    return [cfg.q] if cfg.q else list(FIELD_SIZES)


def _check(name, passed, **details):
    out = OrderedDict([("name", name), ("pass", bool(passed))])
    out.update(details)
    return out


def _lattice_entries(cfg):
    """A single matroid given by --matroid / --family, or the corpus."""
    if cfg.matroid is not None:
        return [CorpusEntry("matroid", load_spec(cfg.matroid))]
    if cfg.family is not None and cfg.d is not None:
        return [CorpusEntry("%s:d=%d" % (cfg.family, cfg.d), None)]
    return corpus(cfg.corpus)


def _lattice_of(cfg, entry):
    if entry.spec is None:
        return family_lattice(cfg.family, cfg.d, max_flats=cfg.max_flats)
    return enumerate_flats(entry.spec, max_flats=cfg.max_flats)


def _palindrome_item(job):
    name, spec, max_flats = job
    lat = enumerate_flats(spec, max_flats=max_flats)
    z = z_polynomial(lat)
    return _check("palindrome %s" % name, z_is_palindromic(lat), rank=lat.rk_total, z=z.to_json())


def _crossmethod_item(job):
    name, spec, max_flats = job
    lat = enumerate_flats(spec, max_flats=max_flats)
    checks = _crossmethod_lattice(name, lat)
    checks.append(_check("defining identity %s" % name,
        all(defining_identity_holds(lat, method) for method in KlMethod)))
    checks.append(_check("mobius inversion %s" % name, mobius_inversion_holds(lat)))
    checks.append(_check("empty flat term %s" % name, empty_flat_term_vanishes(lat)))
    return checks


def _jobs(cfg):
    entries = _lattice_entries(cfg)
    if len(entries) == 1 and entries[0].spec is None:
        lat = _lattice_of(cfg, entries[0])
        return entries, lat
    return entries, None


def suite_palindrome(cfg):
    entries, lat = _jobs(cfg)
    if lat is not None:
        return [_check("palindrome %s" % entries[0].name, z_is_palindromic(lat), rank=lat.rk_total)]
    checks = parallel_map(_palindrome_item, [(e.name, e.spec, cfg.max_flats) for e in entries], cfg.threads)
    if cfg.matroid is None:
        d_max = cfg.dmax if cfg.dmax is not None else 40
        for family in (NiceFamily.braid(), NiceFamily.type_b(), NiceFamily.uniform(1), NiceFamily.qvec(2)):
            checks.append(_check("palindrome %s d<=%d" % (family, d_max), palindromic_up_to(family, d_max)))
    return checks


def suite_crossmethod(cfg):
    entries, lat = _jobs(cfg)
    if lat is not None:
        return _crossmethod_lattice(entries[0].name, lat)
    return [c for checks in parallel_map(_crossmethod_item,
        [(e.name, e.spec, cfg.max_flats) for e in entries], cfg.threads)
        for c in checks]


def _crossmethod_lattice(name, lat):
    results, agree = kl_all_methods(lat)
    details = {} if agree else {"results": dict((m.value, p.to_json()) for m, p in results.items())}
    return [_check("crossmethod %s" % name, agree, **details)]


def suite_narayana(cfg):
    d_max = cfg.dmax if cfg.dmax is not None else 12
    return [_check("narayana d<=%d" % d_max, narayana_identity_holds(d_max))]


def suite_gaussian(cfg):
    d_max = cfg.dmax if cfg.dmax is not None else 10
    return [_check("gaussian q=%d d<=%d" % (q, d_max), gaussian_identity_holds(q, d_max))
        for q in _field_sizes(cfg)]


def suite_qshift(cfg):
    d_max = cfg.dmax if cfg.dmax is not None else 10
    checks = []
    for q in _field_sizes(cfg):
        checks.append(_check("qshift q=%d d<=%d" % (q, d_max), q_shift_check(q, d_max)))
        for d in range(2, d_max + 1):
            holds, gaps = qvec_gap_property(q, d)
            details = {"gaps": [[fraction_to_json(lo), fraction_to_json(hi)] for lo, hi in gaps]} \
                if cfg.certificates or not holds else {}
            checks.append(_check("root gaps q=%d d=%d" % (q, d), holds, **details))
    return checks


def _sweeps(cfg):
    d_max = cfg.dmax if cfg.dmax is not None else 20
    rows = []
    for family in sweep_families(cfg):
        rows.extend(conjecture_sweep(family, d_max, certificates=cfg.certificates, workers=cfg.threads))
    return rows


def _row_details(row, keys):
    details = dict((k, row[k]) for k in keys if k in row)
    if "certificate" in row:
        details["certificate"] = row["certificate"]
    return details


def suite_roots(cfg):
    return [_check("negative real roots %s d=%d" % (row["family"], row["d"]), row["negative_real_rooted"],
        **_row_details(row, ("kl_negative_real_rooted", "max_coeff_digits", "millis")))
        for row in _sweeps(cfg)]


def suite_interlace(cfg):
    return [_check("interlace %s d=%d" % (row["family"], row["d"]),
        row["interlace"] is None or row["interlace"]["verdict"] != "none",
        **_row_details(row, ("interlace",)))
        for row in _sweeps(cfg)]


def suite_logconcave(cfg):
    return [_check("log-concave %s d=%d" % (row["family"], row["d"]), row["log_concave"])
        for row in _sweeps(cfg)]


def suite_schur(cfg):
    d_max = cfg.dmax if cfg.dmax is not None else 8
    checks = []
    expected = SymFunction("s", {(2, 2): 1}, 4)
    found = h_to_schur(equivariant_c_uniform(1, 3, 1))
    checks.append(_check("schur U(1,3) i=1", found == expected, schur=found.render()))
    for m in range(1, 4):
        for d in range(1, d_max + 1):
            for i in range(1, (d + 1) // 2):
                f = equivariant_c_uniform(m, d, i)
                if f.degree > MAX_SCHUR_DEGREE:
                    continue
                positive = is_schur_positive(f)
                details = {} if positive else {"schur": h_to_schur(f).render()}
                checks.append(_check("schur positive U(%d,%d) i=%d" % (m, d, i), positive, **details))
    return checks


def suite_series(cfg):
    checks = []
    order = cfg.order
    for family in (NiceFamily.braid(), NiceFamily.type_b(), NiceFamily.uniform(1), NiceFamily.qvec(2)):
        checks.append(_check("generating series %s" % family, generating_series_check(family, order or 10)))
    checks.append(_check("closed series braid order=%d" % (order or 12),
        series_identity_check(NiceFamily.braid(), order or 12)))
    checks.append(_check("closed series typeb order=%d" % (order or 10),
        series_identity_check(NiceFamily.type_b(), order or 10)))
    return checks


def suite_termcount(cfg):
    top = cfg.dmax if cfg.dmax is not None else 8
    checks = []
    for i in range(1, top + 1):
        count = len(enumerate_index_tuples(i, 2 * i + 1))
        checks.append(_check("term count i=%d" % i, count == 2 * 3 ** (i - 1), count=count))
    return checks


def _family_bounds(cfg):
    if cfg.corpus == "full":
        bounds = [(NiceFamily.braid(), 6), (NiceFamily.type_b(), 4), (NiceFamily.qvec(2), 3)]
        bounds += [(NiceFamily.uniform(m), 9 - m) for m in range(1, 4)]
    else:
        bounds = [(NiceFamily.braid(), 4), (NiceFamily.type_b(), 3), (NiceFamily.qvec(2), 3)]
        bounds += [(NiceFamily.uniform(m), 5 - m) for m in range(1, 4)]
    return bounds


def _family_item(job):
    family, d, max_flats = job
    lat = family_lattice(family, d, max_flats=max_flats)
    p, z = kl_family(family, d), z_family(family, d)
    lattice_p, lattice_z = kl_polynomial(lat), z_polynomial(lat)
    closed = [kl_closed_family(family, d, i) for i in range(1, (d + 1) // 2)]
    passed = p == lattice_p and z == lattice_z and closed == [p[i] for i in range(1, (d + 1) // 2)]
    details = {} if passed else {"family": [p.to_json(), z.to_json()],
        "lattice": [lattice_p.to_json(), lattice_z.to_json()]}
    return _check("family %s d=%d" % (family, d), passed, **details)


def suite_families(cfg):
    bounds = _family_bounds(cfg)
    checks = parallel_map(_family_item,
        [(f, d, cfg.max_flats) for f, top in bounds for d in range(1, top + 1)], cfg.threads)
    for family, top in bounds:
        checks.append(_check("w inversion %s d<=%d" % (family, top), w_inversion_holds(family, top)))
    return checks


def _uniform_dimension_checks(d_max):
    checks = []
    for m in range(1, 4):
        family = NiceFamily.uniform(m)
        for d in range(1, d_max + 1):
            p = kl_family(family, d)
            for i in range(1, (d + 1) // 2):
                value = dimension(equivariant_c_uniform(m, d, i), m + d)
                checks.append(_check("dimension U(%d,%d) i=%d" % (m, d, i), value == p[i], dimension=value,
                    coefficient=p[i]))
    return checks


def _character_item(entry, max_flats):
    lat = enumerate_flats(entry.spec, max_flats=max_flats)
    checks = []
    for i in range(1, (lat.rk_total + 1) // 2):
        character = equivariant_c_character(lat, entry.group, i)
        by_element = equivariant_c_character(lat, entry.group, i, per_element=True)
        expected = kl_coeff_closed(lat, i)
        full = entry.group.order <= FULL_CONJUGATION_ORDER
        passed = (character.identity_value == expected and by_element.is_class_function(full=full)
            and by_element.values == character.values)
        checks.append(_check("character %s i=%d" % (entry.name, i), passed,
            identity=character.identity_value, coefficient=expected, group_order=entry.group.order))
    return checks


def suite_equivariant(cfg):
    d_max = cfg.dmax if cfg.dmax is not None else 8
    checks = _uniform_dimension_checks(d_max)
    for entry in equivariant_corpus(cfg.corpus):
        checks.extend(_character_item(entry, cfg.max_flats))
    return checks


SUITES = OrderedDict([
    ("palindrome", suite_palindrome),
    ("crossmethod", suite_crossmethod),
    ("narayana", suite_narayana),
    ("gaussian", suite_gaussian),
    ("qshift", suite_qshift),
    ("roots", suite_roots),
    ("interlace", suite_interlace),
    ("logconcave", suite_logconcave),
    ("schur", suite_schur),
    ("series", suite_series),
    ("termcount", suite_termcount),
    ("families", suite_families),
    ("equivariant", suite_equivariant),
])


def run_suite(cfg):
    """Runs the suite named by cfg.target.

    :raises UsageError: on an unknown suite name
    """
    try:
        suite = SUITES[cfg.target]
    except KeyError:
        raise UsageError("unknown suite %r, expected one of %s" % (cfg.target, ", ".join(SUITES)))
    checks = suite(cfg)
    logger.info("suite %s: %d checks, %d failed", cfg.target, len(checks), sum(1 for c in checks if not c["pass"]))
    return checks


def cmd_verify(cfg):
    """Runs a verification suite.

    :returns: (all checks passed, rendered report)
    """
    checks = run_suite(cfg)
    passed = all(c["pass"] for c in checks)
    if cfg.format == "plain":
        lines = ["%s %s" % ("PASS" if c["pass"] else "FAIL", c["name"]) for c in checks]
        lines.append("%s: %d/%d passed" % (cfg.target, sum(1 for c in checks if c["pass"]), len(checks)))
        return passed, "\n".join(lines)
    if cfg.format == "csv":
        return passed, "name,pass\n" + "".join("%s,%s\n" % (c["name"], c["pass"]) for c in checks)
    return passed, render_json({"suite": cfg.target, "pass": passed, "checks": checks})


def add_verify_arguments(arg_parser):
    arg_parser.add_global_group()
    main_group = arg_parser.add_matroid_group()
    arg_parser.add_argument(main_group, "suite", choices=list(SUITES),
        help="the verification suite")
    arg_parser.add_sweep_group()
    arg_parser.add_output_group()


def main(argv=None):
    """configures the cli argument parser and runs one verification suite"""
    arg_parser = ArgParser("zpoly_verify")
    add_verify_arguments(arg_parser)
    args = arg_parser.finalize(argv)
    try:
        cfg = JobConfig.from_args("verify", args.suite, args, default_format="json")
    except UsageError as error:
        sys.stderr.write("error: %s\n" % error)
        return EXIT_USAGE
    return execute(cmd_verify, cfg)


if __name__ == '__main__':
    sys.exit(main())
