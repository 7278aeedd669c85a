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
"test suite for the Gaussian special functions"

__author__ = "pyCBT developers"
__license__ = "GPLv3+"
__copyright__ = "the pyCBT developers"
__date__ = "18/10/2026"

import math
import sys
import unittest
import numpy
from utilstest import UtilsTest, getLogger
logger = getLogger(__file__)
pyCBT = sys.modules["pyCBT"]
from pyCBT import special


class test_tail(unittest.TestCase):
    def test_values(self):
        self.assertEqual(special.q_tail(0), 0.5, "Q(0) = 1/2")
        self.assertTrue(special.q_tail(8) < 1e-15, "Q(8) is tiny")
        self.assertAlmostEqual(special.q_tail(0.5), 0.308537538725987, places=14)

    def test_accuracy(self):
        x = numpy.linspace(-8, 8, 3201)
        ref = numpy.array([0.5 * math.erfc(i / math.sqrt(2.0)) for i in x])
        rel = abs(special.q_tail(x) - ref) / ref
        logger.info("max relative error of Q: %s", rel.max())
        self.assertTrue(rel.max() <= 1e-12, "relative error %s" % rel.max())

    def test_symmetry(self):
        x = numpy.linspace(-8, 8, 1601)
        err = abs(special.q_tail(x) + special.q_tail(-x) - 1.0).max()
        self.assertTrue(err <= 1e-14, "Q(x) + Q(-x) = 1, error %s" % err)

    def test_log(self):
        x = numpy.array([-3.0, 0.0, 2.0, 7.5])
        self.assertTrue(numpy.allclose(special.log_q_tail(x), numpy.log(special.q_tail(x)), rtol=1e-12, atol=1e-15))
        self.assertTrue(numpy.isfinite(special.log_q_tail(60.0)), "far tail stays finite")


class test_mills(unittest.TestCase):
    def test_values(self):
        self.assertAlmostEqual(special.mills_eta(0), 0.7978845608028654, places=13)
        self.assertAlmostEqual(special.mills_eta(-6) / 6.0758829e-9, 1.0, places=6)

    def test_large_argument(self):
        for x in (30.0, 40.0, 1e3, 1e8):
            eta = special.mills_eta(x)
            self.assertTrue(numpy.isfinite(eta), "eta(%s)=%s" % (x, eta))
            if x < 1e4:
                self.assertTrue(eta > x, "eta(%s)=%s" % (x, eta))
            self.assertAlmostEqual(eta / (x + 1.0 / x), 1.0, places=4)

    def test_monotony(self):
        h = 1e-3
        x = numpy.arange(-6.0, 6.0, h)
        eta = special.mills_eta(x)
        d1 = numpy.diff(eta)
        d2 = numpy.diff(eta, 2)
        self.assertTrue((eta > 0).all(), "strictly positive")
        self.assertTrue((d1 > 0).all() and (d1 < h).all(), "0 < eta' < 1")
        self.assertTrue((d2 > 0).all(), "eta is convex")

    def test_far_tail(self):
        h = 1e-2
        x = numpy.arange(30.0, 50.0, h)
        eta = special.mills_eta(x)
        d1 = numpy.diff(eta)
        d2 = numpy.diff(eta, 2)
        self.assertTrue((d1 > 0).all() and (d1 < h).all(), "0 < eta' < 1 far in the tail")
        self.assertTrue((d2 > 0).all(), "eta stays convex far in the tail, min %s" % d2.min())
        # no seam: one step across 38 follows the local slope
        left, mid, right = special.mills_eta(numpy.array([37.99, 38.0, 38.01]))
        self.assertAlmostEqual((right - mid) / (mid - left), 1.0, places=4)


class test_interval(unittest.TestCase):
    def test_interval(self):
        for lo, hi in ((-1.0, 1.0), (0.5, 3.0), (-4.0, -2.0), (2.0, 2.0)):
            ref = special.q_tail(lo) - special.q_tail(hi)
            self.assertAlmostEqual(special.normal_interval(lo, hi), ref, places=15)
        far = special.normal_interval(9.0, 10.0)
        self.assertTrue(far > 0, "no cancellation in the far tail")
        self.assertAlmostEqual(far / (special.q_tail(9.0) - special.q_tail(10.0)), 1.0, places=9)
        self.assertAlmostEqual(special.normal_interval(-10.0, -9.0), far, delta=1e-30)

    def test_logodds(self):
        q = numpy.array([1e-9, 0.3, 0.5, 0.9])
        self.assertTrue(numpy.allclose(special.expit(special.logit(q)), q, rtol=1e-12))
        self.assertEqual(special.logit(0.5), 0.0)


def test_suite_all_Special():
    testSuite = unittest.TestSuite()
    testSuite.addTest(test_tail("test_values"))
    testSuite.addTest(test_tail("test_accuracy"))
    testSuite.addTest(test_tail("test_symmetry"))
    testSuite.addTest(test_tail("test_log"))
    testSuite.addTest(test_mills("test_values"))
    testSuite.addTest(test_mills("test_large_argument"))
    testSuite.addTest(test_mills("test_monotony"))
    testSuite.addTest(test_mills("test_far_tail"))
    testSuite.addTest(test_interval("test_interval"))
    testSuite.addTest(test_interval("test_logodds"))
    return testSuite

if __name__ == '__main__':
    mysuite = test_suite_all_Special()
    runner = unittest.TextTestRunner()
    runner.run(mysuite)
