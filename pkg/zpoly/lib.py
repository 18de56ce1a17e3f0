# -*- coding: utf-8 -*-

'''Shared plumbing of zpoly: the package logger, the error base class, the
worker count and the output renderers used by the command line tools.'''

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

__all__ = ["logger", "fmt", "ZPolyError", "worker_count", "parallel_map",
    "render_json", "fraction_to_json"]

import json
import logging
import os

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

logger = logging.getLogger('zpoly')
logger.setLevel(logging.DEBUG)
logger.addHandler(logging.NullHandler())

fmt = logging.Formatter("%(asctime)s: %(message)s")

THREADS_ENV = "ZPOLY_THREADS"


class ZPolyError(Exception):
    """Base class for all zpoly errors
    """
    pass


def worker_count(override=None):
    """Returns the number of worker processes for parallel fan-out.

    An explicit override wins, then the ZPOLY_THREADS environment variable,
    then 1 (run in process).
    """
    if override:
        return max(1, int(override))
    value = os.environ.get(THREADS_ENV, "")
    try:
        return max(1, int(value))
    except ValueError:
        if value:
            logger.warning("ignoring non-integer %s=%r", THREADS_ENV, value)
        return 1


def parallel_map(func, items, workers=None):
    """Maps a picklable function over items, preserving order.

    With one worker the map runs in process.
    """
    items = list(items)
    workers = worker_count(workers)
    if workers == 1 or len(items) < 2:
        return [func(item) for item in items]
    logger.debug("fanning out %d jobs over %d workers", len(items), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


def fraction_to_json(value):
    """Exact rationals travel as "num/den" strings, integers stay integers."""
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return "%d/%d" % (value.numerator, value.denominator)


def render_json(obj):
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False)
