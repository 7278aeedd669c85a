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
"test suite for the Monte Carlo simulation of cascades"

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
from pyCBT import montecarlo, cascade
from pyCBT.cascade import AgentSpec, CascadeConfig
from pyCBT.likelihoods import CostModel, DomainError

Q05 = 0.30853753872598688


class test_simulate(unittest.TestCase):
    def test_two_agents(self):
        config = CascadeConfig.two_agents(0.3, 0.38, 0.23)
        res = montecarlo.simulate(config, 1000000, seed=1)
        exact = cascade.bayes_risk(config)
        logger.info("simulated %s +/- %s, exact %s", res.risk, res.stderr, exact)
        self.assertEqual(res.samples, 1000000)
        self.assertTrue(abs(res.risk - exact) <= 3 * res.stderr)
        self.assertTrue(abs(res.risk - 0.2186) <= 3 * res.stderr + 5e-4)

    def test_single_agent(self):
        res = montecarlo.simulate(CascadeConfig(0.5, [AgentSpec(0.5)]), 200000, seed=5)
        self.assertTrue(abs(res.risk - Q05) <= 3 * res.stderr, "%s vs %s" % (res, Q05))

    def test_determinism(self):
        config = CascadeConfig(0.4, [AgentSpec(0.3, sigma=0.8), AgentSpec(0.6), AgentSpec(0.45, sigma=1.5)],
                               CostModel(1, 2))
        first = montecarlo.simulate(config, 50000, seed=11, batch_size=10000)
        self.assertEqual(first, montecarlo.simulate(config, 50000, seed=11, batch_size=10000))
        self.assertEqual(first, montecarlo.simulate(config, 50000, seed=11, batch_size=10000, workers=3))
        self.assertNotEqual(first.risk, montecarlo.simulate(config, 50000, seed=12, batch_size=10000).risk)

    def test_enumeration(self):
        "agreement with the exact risk on random cascades"
        rng = numpy.random.default_rng(2026)
        inside = 0
        for i in range(20):
            n = int(rng.integers(1, 5))
            agents = [AgentSpec(rng.uniform(0.1, 0.9), sigma=rng.uniform(0.4, 2)) for _ in range(n)]
            config = CascadeConfig(rng.uniform(0.1, 0.9), agents, CostModel(1, rng.uniform(0.5, 2)))
            res = montecarlo.simulate(config, 1000000, seed=i, workers=2)
            exact = cascade.bayes_risk(config)
            if abs(res.risk - exact) <= 3 * res.stderr:
                inside += 1
            else:
                logger.warning("outside 3 sigma: %r %s vs %s", config, res, exact)
        self.assertTrue(inside >= 19, "%s/20 within 3 standard errors" % inside)

    def test_errors(self):
        config = CascadeConfig(0.5, [AgentSpec(0.5)])
        self.assertRaises(DomainError, montecarlo.simulate, config, 0)
        one = montecarlo.simulate(config, 1)
        self.assertEqual(one.stderr, 0.0)

    def test_long_cascade(self):
        config = CascadeConfig(0.3, [AgentSpec(0.3) for _ in range(25)])
        self.assertRaises(DomainError, cascade.bayes_risk, config)
        res = montecarlo.simulate(config, 20000, seed=3)
        self.assertTrue(0 <= res.risk <= 0.7)
        self.assertTrue(res.stderr > 0)


def test_suite_all_MonteCarlo():
    testSuite = unittest.TestSuite()
    testSuite.addTest(test_simulate("test_two_agents"))
    testSuite.addTest(test_simulate("test_single_agent"))
    testSuite.addTest(test_simulate("test_determinism"))
    testSuite.addTest(test_simulate("test_enumeration"))
    testSuite.addTest(test_simulate("test_errors"))
    testSuite.addTest(test_simulate("test_long_cascade"))
    return testSuite

if __name__ == '__main__':
    mysuite = test_suite_all_MonteCarlo()
    runner = unittest.TextTestRunner()
    runner.run(mysuite)
