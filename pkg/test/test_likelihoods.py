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
"test suite for costs, likelihoods and the single agent Bayes test"

__author__ = "pyCBT developers"
__license__ = "GPLv3+"
__copyright__ = "the pyCBT developers"
__date__ = "18/10/2026"

import sys
import unittest
import numpy
from utilstest import UtilsTest, getLogger
logger = getLogger(__file__)
pyCBT = sys.modules["pyCBT"]
from pyCBT import likelihoods
from pyCBT.likelihoods import CostModel, GaussianLikelihood, Likelihood, DomainError, ConfigError

Q05 = 0.30853753872598688


class test_costs(unittest.TestCase):
    def test_validation(self):
        for bad in (0, -1, float("inf"), float("nan"), "a", None):
            self.assertRaises(DomainError, CostModel, bad, 1)
            self.assertRaises(DomainError, CostModel, 1, bad)

    def test_properties(self):
        costs = CostModel(1, 3)
        self.assertAlmostEqual(costs.balance, 0.75)
        self.assertAlmostEqual(costs.log_ratio, -numpy.log(3.0))
        self.assertEqual(costs, CostModel(1.0, 3.0))
        self.assertEqual(costs.get_config(), {"c10": 1.0, "c01": 3.0})


class test_gaussian(unittest.TestCase):
    def test_factory(self):
        for name in ("gaussian", "GaussianLikelihood", "normal", "AWGN"):
            lik = Likelihood.factory(name, {"sigma": 2})
            self.assertTrue(isinstance(lik, GaussianLikelihood), name)
            self.assertEqual(lik.sigma, 2.0)
        self.assertEqual(Likelihood.factory("gaussian", {"variance": 0.25}).sigma, 0.5)
        self.assertRaises(ConfigError, Likelihood.factory, "laplace", {"sigma": 1})

    def test_sigma(self):
        self.assertRaises(DomainError, GaussianLikelihood, 0)
        self.assertRaises(DomainError, GaussianLikelihood, -0.5)
        self.assertAlmostEqual(GaussianLikelihood.from_variance(0.25).sigma, 0.5)

    def test_likelihood_ratio(self):
        for sigma in (0.3, 1.0, 2.0):
            lik = GaussianLikelihood(sigma)
            y = numpy.linspace(-2, 3, 101)
            ratio = lik.density(y, 1) / lik.density(y, 0)
            self.assertTrue(numpy.allclose(ratio, lik.likelihood_ratio(y), rtol=1e-10, atol=0))
            # the test at lambda is the likelihood ratio test against its value at lambda
            costs = CostModel(1, 2)
            for q in (0.2, 0.5, 0.9):
                lam = likelihoods.threshold(lik, q, costs)
                target = costs.c10 * q / (costs.c01 * (1 - q))
                self.assertAlmostEqual(lik.likelihood_ratio(lam) / target, 1.0, places=10)

    def test_sample(self):
        rng = numpy.random.default_rng(0)
        lik = GaussianLikelihood(0.5)
        y = lik.sample(numpy.ones(100000, dtype=int), rng)
        self.assertTrue(abs(y.mean() - 1.0) < 0.01, "mean %s" % y.mean())
        self.assertTrue(abs(y.std() - 0.5) < 0.01, "std %s" % y.std())


class test_threshold(unittest.TestCase):
    def test_values(self):
        one = GaussianLikelihood(1.0)
        equal = CostModel()
        self.assertAlmostEqual(likelihoods.threshold(one, 0.5, equal), 0.5, places=14)
        self.assertAlmostEqual(likelihoods.threshold(one, 0.3, equal), -0.34729786, places=7)
        self.assertAlmostEqual(likelihoods.threshold(GaussianLikelihood(0.5), 0.75, CostModel(1, 3)), 0.5, places=14)

    def test_domain(self):
        lik = GaussianLikelihood()
        for q in (0, 1, -0.1, 1.5):
            self.assertRaises(DomainError, likelihoods.threshold, lik, q, CostModel())

    def test_monotony(self):
        q = numpy.linspace(0.001, 0.999, 999)
        for sigma in (0.5, 1.0, 2.0):
            lam = likelihoods.threshold(GaussianLikelihood(sigma), q, CostModel(1, 2))
            self.assertTrue((numpy.diff(lam) > 0).all(), "threshold increases with q")

    def test_error_probs(self):
        err = likelihoods.error_probs(GaussianLikelihood(1.0), 0.5)
        self.assertAlmostEqual(err.type1, Q05, places=14)
        self.assertAlmostEqual(err.type2, Q05, places=14)
        err = likelihoods.error_probs(GaussianLikelihood(1.0), -0.34729786)
        self.assertTrue(err.type1 > Q05 > err.type2, "lower threshold, more false alarms")


class test_updates(unittest.TestCase):
    def test_g_values(self):
        lik = GaussianLikelihood(1.0)
        costs = CostModel()
        self.assertAlmostEqual(likelihoods.g1(0.5, lik, costs), (1 - Q05) / Q05, places=12)
        self.assertAlmostEqual(likelihoods.g1(0.5, lik, costs), 2.2411, places=4)
        self.assertAlmostEqual(likelihoods.g2(0.5, lik, costs), Q05 / (1 - Q05), places=12)

    def test_monotony(self):
        q = numpy.arange(0.001, 0.9995, 0.001)
        for sigma in (0.5, 1.0, 2.0):
            lik = GaussianLikelihood(sigma)
            for costs in (CostModel(), CostModel(1, 3)):
                g1 = likelihoods.g1(q, lik, costs)
                g2 = likelihoods.g2(q, lik, costs)
                self.assertTrue((numpy.diff(g1) > 0).all(), "g1 increasing, sigma=%s" % sigma)
                self.assertTrue((numpy.diff(g2) > 0).all(), "g2 increasing, sigma=%s" % sigma)
                # decision 0 raises the belief in H=0, decision 1 lowers it;
                # for sigma = 2 near q = 0 or 1 the update is below one ulp of the odds
                odds = q / (1 - q)
                if sigma <= 1.0:
                    self.assertTrue((g1 > odds).all() and (g2 < odds).all(), "sigma=%s" % sigma)
                else:
                    self.assertTrue((g1 >= odds).all() and (g2 <= odds).all(), "sigma=%s" % sigma)
                    resolved = (q >= 0.1) & (q <= 0.9)
                    self.assertTrue((g1[resolved] > odds[resolved]).all() and
                                    (g2[resolved] < odds[resolved]).all(), "sigma=%s" % sigma)

    def test_duality(self):
        q = numpy.linspace(0.01, 0.99, 99)
        for sigma in (0.5, 1.0, 1.5):
            lik = GaussianLikelihood(sigma)
            prod = likelihoods.g1(q, lik, CostModel()) * likelihoods.g2(1 - q, lik, CostModel())
            self.assertTrue(numpy.allclose(prod, 1.0, rtol=1e-10), "g1(q) g2(1-q) = 1")


def test_suite_all_Likelihoods():
    testSuite = unittest.TestSuite()
    testSuite.addTest(test_costs("test_validation"))
    testSuite.addTest(test_costs("test_properties"))
    testSuite.addTest(test_gaussian("test_factory"))
    testSuite.addTest(test_gaussian("test_sigma"))
    testSuite.addTest(test_gaussian("test_likelihood_ratio"))
    testSuite.addTest(test_gaussian("test_sample"))
    testSuite.addTest(test_threshold("test_values"))
    testSuite.addTest(test_threshold("test_domain"))
    testSuite.addTest(test_threshold("test_monotony"))
    testSuite.addTest(test_threshold("test_error_probs"))
    testSuite.addTest(test_updates("test_g_values"))
    testSuite.addTest(test_updates("test_monotony"))
    testSuite.addTest(test_updates("test_duality"))
    return testSuite

if __name__ == '__main__':
    mysuite = test_suite_all_Likelihoods()
    runner = unittest.TextTestRunner()
    runner.run(mysuite)
