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
Monte Carlo simulation of the cascade, for validation of the exact
enumeration and for cascades too long to enumerate.

Samples are drawn in fixed-size batches; batch i uses the i-th child of
SeedSequence(seed), so the estimate does not depend on the number of workers.
"""

import collections
import logging
import math
import numpy

from . import special
from .likelihoods import DomainError
from .utils import parallel_map, timeit

logger = logging.getLogger("pyCBT.montecarlo")

BATCH_SIZE = 1 << 16

SimResult = collections.namedtuple("SimResult", "risk stderr samples seed")


def simulate_batch(config, size, seed_sequence):
    """
    Run the cascade on one batch of samples

    @param config: CascadeConfig
    @param size: number of samples
    @param seed_sequence: numpy.random.SeedSequence owned by this batch
    @return: (sum of losses, sum of squared losses)
    """
    rng = numpy.random.Generator(numpy.random.PCG64(seed_sequence))
    costs = config.costs
    truth = (rng.random(size) >= config.prior).astype(numpy.int8)
    decisions = numpy.empty((size, config.n_agents), dtype=numpy.int8)
    for k, agent in enumerate(config.agents):
        likelihood = agent.likelihood
        ell = numpy.full(size, special.logit(agent.belief))
        for j in range(k):
            lam = likelihood.threshold_logodds(ell, costs)
            ell = ell + likelihood.log_perceived_ratio(lam, decisions[:, j])
        lam = likelihood.threshold_logodds(ell, costs)
        signal = likelihood.sample(truth, rng)
        decisions[:, k] = signal >= lam
    last = decisions[:, -1]
    loss = (costs.c10 * ((last == 1) & (truth == 0)) +
            costs.c01 * ((last == 0) & (truth == 1)))
    return float(loss.sum()), float((loss * loss).sum())


@timeit
def simulate(config, samples, seed=0, batch_size=BATCH_SIZE, workers=1):
    """
    Estimate the Bayes risk of the last agent by simulation

    @param config: CascadeConfig, any number of agents
    @param samples: number of simulated cascades (>= 1)
    @param seed: integer seed
    @param workers: number of threads running batches
    @return: SimResult(risk, stderr, samples, seed)
    """
    samples = int(samples)
    if samples < 1:
        raise DomainError("at least one sample is needed, got %s" % samples)
    n_batches = int(math.ceil(samples / float(batch_size)))
    children = numpy.random.SeedSequence(seed).spawn(n_batches)
    sizes = [min(batch_size, samples - i * batch_size) for i in range(n_batches)]

    def one_batch(i):
        logger.debug("batch %s/%s: %s samples", i + 1, n_batches, sizes[i])
        return simulate_batch(config, sizes[i], children[i])

    total = total_sq = 0.0
    for s, s2 in parallel_map(one_batch, range(n_batches), workers):
        total += s
        total_sq += s2
    mean = total / samples
    if samples > 1:
        var = max(total_sq - samples * mean * mean, 0.0) / (samples - 1)
    else:
        var = 0.0
    stderr = math.sqrt(var / samples)
    logger.info("simulated risk %.6f +/- %.6f over %s samples", mean, stderr, samples)
    return SimResult(mean, stderr, samples, seed)
