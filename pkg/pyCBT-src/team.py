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
__status__ = "development"
__docformat__ = 'restructuredtext'
__doc__ = """
Choice of the predecessor of the last agent among two candidates.

The candidate with belief q1 beats the one with belief q1' > q1 iff

    P1[Y1 in [l1, l1'], Y2 in [l2^1, l2^0]] / P0[...] >= c10 p0 / (c01 (1 - p0))

A planner knowing p0 uses it as context; a last agent without context uses
her own belief q2 instead.
"""

import logging
import math
import numpy

from .beliefRefinement import optimal_beliefs_two, best_response_belief
from .cascade import bayes_risk_two, last_agent_terms
from .likelihoods import (GaussianLikelihood, CostModel, DomainError, DegenerateError,
                          ConvergenceError, check_probability)
from . import special
from .utils import parallel_map, timeit

logger = logging.getLogger("pyCBT.team")


class SelectionProblem(object):
    """
    Two candidate predecessors with beliefs q1 < q1_prime, sharing the noise
    of likelihood1, in front of a last agent (q2, likelihood2).
    """
    def __init__(self, prior, q1, q1_prime, q2, likelihood1=None, likelihood2=None, costs=None):
        self.prior = check_probability(prior, "prior")
        self.q1 = check_probability(q1, "q1")
        self.q1_prime = check_probability(q1_prime, "q1_prime")
        self.q2 = check_probability(q2, "q2")
        if self.q1 > self.q1_prime:
            raise DomainError("candidates must satisfy q1 <= q1', got %s and %s" % (q1, q1_prime))
        self.likelihood1 = likelihood1 or GaussianLikelihood()
        self.likelihood2 = likelihood2 or GaussianLikelihood()
        self.costs = costs or CostModel()

    def __repr__(self):
        return "SelectionProblem(prior=%s, q1=%s, q1'=%s, q2=%s)" % (self.prior, self.q1, self.q1_prime, self.q2)

    @classmethod
    def from_candidates(cls, prior, a, b, q2, likelihood1=None, likelihood2=None, costs=None):
        """Sorts the two candidate beliefs"""
        return cls(prior, min(a, b), max(a, b), q2, likelihood1, likelihood2, costs)

    def rectangle(self, h):
        """
        P_h[Y1 in [l1, l1'], Y2 in [l2^1, l2^0]]
        """
        lam1 = threshold_of(self.likelihood1, self.q1, self.costs)
        lam1p = threshold_of(self.likelihood1, self.q1_prime, self.costs)
        t = last_agent_terms(self.q2, self.likelihood2, self.costs)
        if t.threshold1 > t.threshold0:
            raise DegenerateError("empty decision interval of the last agent: [%s, %s]" %
                                  (t.threshold1, t.threshold0))
        return rectangle_probability(lam1, lam1p, t.threshold1, t.threshold0,
                                     self.likelihood1, self.likelihood2, h)


def threshold_of(likelihood, q, costs):
    return likelihood.threshold_logodds(special.logit(q), costs)


def rectangle_probability(lo1, hi1, lo2, hi2, likelihood1, likelihood2, h):
    """
    Probability that Y1 in [lo1, hi1] and Y2 in [lo2, hi2] under H = h,
    the signals being independent given H
    """
    return (likelihood1.interval_probability(lo1, hi1, h) *
            likelihood2.interval_probability(lo2, hi2, h))


def risk_difference(problem):
    """
    R_2(q1, q2) - R_2(q1', q2)

    = c10 p0 P0[rectangle] - c01 (1 - p0) P1[rectangle]
    """
    c = problem.costs
    return (c.c10 * problem.prior * problem.rectangle(0) -
            c.c01 * (1.0 - problem.prior) * problem.rectangle(1))


def select_predecessor(problem, context):
    """
    Likelihood-ratio choice between the two candidates

    @param problem: SelectionProblem
    @param context: p0 for an informed planner, q2 for the last agent alone
    @return: problem.q1 or problem.q1_prime; ties go to q1
    """
    context = check_probability(context, "context")
    p0, p1 = problem.rectangle(0), problem.rectangle(1)
    c = problem.costs
    if p0 <= 0.0:
        return problem.q1
    if p1 <= 0.0:
        return problem.q1_prime
    lhs = math.log(p1) - math.log(p0)
    rhs = math.log(c.c10 * context) - math.log(c.c01 * (1.0 - context))
    return problem.q1 if lhs >= rhs else problem.q1_prime


def context_unaware_predecessor(q2, p0, likelihood1, likelihood2, costs):
    """
    Belief of the predecessor best suited to a last agent holding q2, which
    is generally not q2*(p0).
    """
    return best_response_belief(p0, q2, likelihood1, likelihood2, costs)


class SelectionRegion(object):
    """
    Outcome of the context-unaware choice on a (p0, q2) grid.

    correct[i, j] is True when the last agent with belief q2_grid[j] picks
    the same predecessor as the planner knowing p0_grid[i]; the candidates
    are q1*(p0) and p0.
    """
    def __init__(self, p0_grid, q2_grid, correct, risk_chosen, risk_best, failed=None):
        self.p0_grid = numpy.asarray(p0_grid)
        self.q2_grid = numpy.asarray(q2_grid)
        self.correct = numpy.asarray(correct, dtype=bool)
        self.risk_chosen = numpy.asarray(risk_chosen)
        self.risk_best = numpy.asarray(risk_best)
        if failed is None:
            failed = numpy.zeros(self.correct.shape, dtype=bool)
        self.failed = numpy.asarray(failed, dtype=bool)

    def __repr__(self):
        return "SelectionRegion %sx%s, %.1f%% correct" % (self.correct.shape + (100.0 * self.correct.mean(),))

    def is_correct(self, p0, q2):
        """Correctness of the cell nearest to (p0, q2)"""
        i = abs(self.p0_grid - p0).argmin()
        j = abs(self.q2_grid - q2).argmin()
        return bool(self.correct[i, j])

    def to_table(self):
        p0, q2 = numpy.meshgrid(self.p0_grid, self.q2_grid, indexing="ij")
        return (["p0", "q2", "chose_correctly", "risk_chosen", "risk_best"],
                numpy.column_stack((p0.ravel(), q2.ravel(), self.correct.ravel().astype(int),
                                    self.risk_chosen.ravel(), self.risk_best.ravel())))


@timeit
def selection_region(p0_grid, q2_grid, likelihood1, likelihood2, costs, workers=1):
    """
    Compare the context-unaware and the informed choices of predecessor.

    @return: SelectionRegion
    """
    p0_grid = numpy.atleast_1d(check_probability(p0_grid, "p0"))
    q2_grid = numpy.atleast_1d(check_probability(q2_grid, "q2"))

    def one_row(p0):
        n = q2_grid.size
        correct = numpy.zeros(n, dtype=bool)
        chosen = numpy.empty(n)
        best = numpy.empty(n)
        try:
            q1_star = optimal_beliefs_two(p0, likelihood1, likelihood2, costs)[0]
        except (ConvergenceError, DegenerateError) as err:
            logger.warning("selection row p0=%s failed: %s", p0, err)
            return correct, chosen * numpy.nan, best * numpy.nan, numpy.ones(n, dtype=bool)
        lo, hi = min(q1_star, p0), max(q1_star, p0)
        for j, q2 in enumerate(q2_grid):
            if hi - lo < 1e-12:
                aware = unaware = lo
            else:
                problem = SelectionProblem(p0, lo, hi, q2, likelihood1, likelihood2, costs)
                aware = select_predecessor(problem, p0)
                unaware = select_predecessor(problem, q2)
            correct[j] = (aware == unaware)
            chosen[j] = bayes_risk_two(p0, unaware, q2, likelihood1, likelihood2, costs)
            best[j] = bayes_risk_two(p0, aware, q2, likelihood1, likelihood2, costs)
        return correct, chosen, best, numpy.zeros(n, dtype=bool)

    rows = parallel_map(one_row, p0_grid, workers)
    return SelectionRegion(p0_grid, q2_grid, *[numpy.vstack(i) for i in zip(*rows)])


def context_unaware_curve(p0_grid, likelihood1, likelihood2, costs, q2_of=None, workers=1):
    """
    Risk penalty of a last agent who picks their predecessor from her own
    belief q2_of(p0) (the true prior by default) instead of q2*(p0).

    @return: dict of arrays p0, q1_opt, q2_opt, q1_unaware, penalty
    """
    p0_grid = numpy.atleast_1d(check_probability(p0_grid, "p0"))
    if q2_of is None:
        q2_of = lambda p0: p0

    def one_point(p0):
        q1s, q2s, rs = optimal_beliefs_two(p0, likelihood1, likelihood2, costs)
        qt = context_unaware_predecessor(q2_of(p0), p0, likelihood1, likelihood2, costs)
        return q1s, q2s, qt, bayes_risk_two(p0, qt, q2s, likelihood1, likelihood2, costs) - rs

    res = numpy.array(parallel_map(one_point, p0_grid, workers))
    return {"p0": p0_grid, "q1_opt": res[:, 0], "q2_opt": res[:, 1],
            "q1_unaware": res[:, 2], "penalty": res[:, 3]}
