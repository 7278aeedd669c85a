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
Special functions of the standard Gaussian:

* density phi(x)
* tail Q(x) = P[Z > x] and its logarithm
* inverse Mills ratio eta(x) = phi(x) / Q(x)
* probability of an interval P[lo <= Z <= hi]
* log-odds conversions

All functions accept scalars or numpy arrays and return the same kind.
"""

import logging
import numpy
from scipy import special

logger = logging.getLogger("pyCBT.special")

SQRT2 = numpy.sqrt(2.0)
LOG_SQRT2PI = 0.5 * numpy.log(2.0 * numpy.pi)
SQRT2_OVER_PI = numpy.sqrt(2.0 / numpy.pi)


def as_result(res):
    res = numpy.asarray(res, dtype=numpy.float64)
    if res.ndim == 0:
        return float(res)
    return res


def phi(x):
    """
    Standard Gaussian density

    @param x: abscissa
    @return: exp(-x^2/2) / sqrt(2 pi)
    """
    x = numpy.asarray(x, dtype=numpy.float64)
    return as_result(numpy.exp(-0.5 * x * x - LOG_SQRT2PI))


def log_phi(x):
    x = numpy.asarray(x, dtype=numpy.float64)
    return as_result(-0.5 * x * x - LOG_SQRT2PI)


def q_tail(x):
    """
    Complementary cumulative distribution function of the standard Gaussian

    Evaluated through the complementary error function, which keeps full
    relative precision in the upper tail.

    @param x: abscissa
    @return: Q(x) = integral of phi from x to infinity
    """
    x = numpy.asarray(x, dtype=numpy.float64)
    return as_result(0.5 * special.erfc(x / SQRT2))


def log_q_tail(x):
    """
    Natural logarithm of Q(x), accurate far in both tails

    @param x: abscissa
    @return: log(Q(x))
    """
    x = numpy.asarray(x, dtype=numpy.float64)
    return as_result(special.log_ndtr(-x))


def mills_eta(x):
    """
    Inverse of the Mills ratio, eta(x) = phi(x) / Q(x)

    Q(x) = exp(-x^2/2) erfcx(x/sqrt(2)) / 2, so the Gaussian factors cancel
    exactly and eta = sqrt(2/pi) / erfcx(x/sqrt(2)) for every x.

    @param x: abscissa
    @return: strictly positive value of eta
    """
    x = numpy.asarray(x, dtype=numpy.float64)
    return as_result(SQRT2_OVER_PI / special.erfcx(x / SQRT2))


def normal_interval(lo, hi):
    """
    Probability that a standard Gaussian falls in [lo, hi]

    The tail difference is taken on the side of zero where both tails are
    small, to avoid cancellation between two numbers close to 1.

    @param lo: lower bound
    @param hi: upper bound (hi >= lo)
    @return: P[lo <= Z <= hi]
    """
    lo = numpy.asarray(lo, dtype=numpy.float64)
    hi = numpy.asarray(hi, dtype=numpy.float64)
    upper = 0.5 * special.erfc(lo / SQRT2) - 0.5 * special.erfc(hi / SQRT2)
    lower = 0.5 * special.erfc(-hi / SQRT2) - 0.5 * special.erfc(-lo / SQRT2)
    middle = 1.0 - 0.5 * special.erfc(hi / SQRT2) - 0.5 * special.erfc(-lo / SQRT2)
    res = numpy.where(lo >= 0, upper, numpy.where(hi <= 0, lower, middle))
    return as_result(res)


def logit(q):
    """
    Log-odds of a probability: log(q / (1 - q))
    """
    return as_result(special.logit(numpy.asarray(q, dtype=numpy.float64)))


def expit(ell):
    """
    Probability from log-odds: 1 / (1 + exp(-ell))
    """
    return as_result(special.expit(numpy.asarray(ell, dtype=numpy.float64)))
