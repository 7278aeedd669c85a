#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
#    Project: Cascading binary hypothesis testing
#
#    Copyright (C) the pyCBT developers
#
#    This program is free software: you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#    the Free Software Foundation, either version 3 of the License, or
#    (at your option) any later version.
#
#    This program is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU General Public License for more details.
#
#    You should have received a copy of the GNU General Public License
#    along with this program.  If not, see <http://www.gnu.org/licenses/>.
#

__author__ = "pyCBT developers"
__license__ = "GPLv3+"
__copyright__ = "the pyCBT developers"
__date__ = "18/10/2026"
__status__ = "stable"
__docformat__ = 'restructuredtext'
__doc__ = """
Utilities shared by the sweeps: timing decorator, ordered parallel map
and grid helpers.
"""

import functools
import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor

import numpy

from .likelihoods import DomainError

logger = logging.getLogger("pyCBT.utils")
timelog = logging.getLogger("pyCBT.timeit")


def timeit(func):
    """
    Decorator that logs the execution time of long-running sweeps
    """
    @functools.wraps(func)
    def wrapper(*arg, **kw):
        t1 = time.time()
        res = func(*arg, **kw)
        timelog.info("%s took %.3fs", func.__name__, time.time() - t1)
        return res
    return wrapper


def parallel_map(func, items, workers=1):
    """
    Apply func to every item, possibly in a thread pool.

    @param func: callable of one argument
    @param items: iterable of arguments
    @param workers: number of threads, 1 means inline evaluation
    @return: list of results, in the order of items
    """
    items = list(items)
    if workers is None or workers <= 1 or len(items) <= 1:
        return [func(i) for i in items]
    with ThreadPoolExecutor(max_workers=int(workers)) as pool:
        return list(pool.map(func, items))


def probability_grid(step, lower=0.0, upper=1.0):
    """
    Points lower + k * step, k >= 1, lying strictly inside (lower, upper)

    @param step: grid step, e.g. 0.01 gives 0.01, 0.02, ..., 0.99
    @return: numpy array, rounded to 12 decimals
    """
    step = float(step)
    if not (step > 0 and math.isfinite(step)):
        raise DomainError("grid step must be strictly positive, got %s" % step)
    count = int(math.floor((upper - lower) / step * (1.0 + 1e-12)))
    grid = numpy.round(lower + step * numpy.arange(1, count + 1), 12)
    grid = grid[grid < upper]
    if grid.size == 0:
        raise DomainError("grid step %s leaves no point inside (%s, %s)" % (step, lower, upper))
    return grid


def closed_grid(start, stop, step):
    """
    Points start, start + step, ... up to stop included (within rounding)
    """
    step = float(step)
    if not (step > 0 and math.isfinite(step)):
        raise DomainError("grid step must be strictly positive, got %s" % step)
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return numpy.round(start + step * numpy.arange(count), 12)
