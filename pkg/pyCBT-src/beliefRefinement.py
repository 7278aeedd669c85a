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
Risk-minimizing beliefs.

* BeliefRefinement: grid search then refinement of the two-agent beliefs at a
  given prior, using the closed-form best response of the first agent
* optimal_beliefs_n: grid plus coordinate refinement for up to 4 agents
* belief_curves: optimal beliefs sampled over the prior
* FixedPointProblem / fixed_point_roots: priors where the optimal first agent
  belief equals the prior
"""

import itertools
import logging
import math
import numpy
from scipy.optimize import minimize_scalar, minimize, bisect

from . import special
from .cascade import bayes_risk_two, last_agent_terms, risk_batch
from .likelihoods import (GaussianLikelihood, CostModel, DomainError,
                          DegenerateError, ConvergenceError, check_probability)
from .utils import parallel_map, probability_grid, timeit

logger = logging.getLogger("pyCBT.beliefRefinement")

# beliefs are searched in [MARGIN, 1 - MARGIN]
MARGIN = 1e-4
# grid minima closer than this are considered equal
TIE = 1e-12
# refinement window edge proximity and stationarity tolerance
EDGE = 1e-6
GRADIENT_TOL = 1e-6
MAX_AGENTS = 4
COARSE_STEP = {3: 0.02, 4: 0.05}


def best_response_belief(p0, q2, likelihood1, likelihood2, costs):
    """
    Belief of the first agent minimizing R_2 for a fixed second agent.

    odds(q1) = odds(p0) * (P^I1 - P^I0) / (P^II0 - P^II1), the costs cancel.

    @param p0: true prior
    @param q2: belief of the second agent
    @return: q1 in (0, 1)
    """
    p0 = check_probability(p0, "p0")
    t = last_agent_terms(q2, likelihood2, costs)
    if not (t.delta_type1 > 0 and t.delta_type2 > 0):
        raise DegenerateError("vanishing decision interval of the second agent at q2=%s "
                              "(delta type1=%s, delta type2=%s)" % (q2, t.delta_type1, t.delta_type2))
    ell = special.logit(p0) + math.log(t.delta_type1) - math.log(t.delta_type2)
    return special.expit(ell)


def stationarity_residual(p0, q1, q2, likelihood1, likelihood2, costs):
    """
    log-odds(q1) - log[p0 (P^I1 - P^I0) / ((1 - p0)(P^II0 - P^II1))]

    Vanishes when q1 is the best response to q2.
    """
    q1 = check_probability(q1, "q1")
    return special.logit(q1) - special.logit(best_response_belief(p0, q2, likelihood1, likelihood2, costs))


def risk_gradient(p0, q1, q2, likelihood1, likelihood2, costs, step=1e-5):
    """
    Central finite differences of R_2 with respect to q1 and q2
    """
    def r(a, b):
        return bayes_risk_two(p0, a, b, likelihood1, likelihood2, costs)
    return ((r(q1 + step, q2) - r(q1 - step, q2)) / (2.0 * step),
            (r(q1, q2 + step) - r(q1, q2 - step)) / (2.0 * step))


class BeliefRefinement(object):
    """
    Search of the beliefs (q1, q2) minimizing the two-agent Bayes risk at a
    given true prior.

    The grid minimum identifies the basin; the refinement then minimizes
    the profile q2 -> R_2(best_response(q2), q2) which is exact in q1.
    """
    def __init__(self, p0, likelihood1=None, likelihood2=None, costs=None, step=0.01):
        self.p0 = check_probability(p0, "p0")
        self.likelihood1 = likelihood1 or GaussianLikelihood()
        self.likelihood2 = likelihood2 or GaussianLikelihood()
        self.costs = costs or CostModel()
        self.step = float(step)
        self.q1 = None
        self.q2 = None
        self.risk = None
        self.converged = False

    def __repr__(self):
        return "BeliefRefinement p0=%s q1=%s q2=%s risk=%s" % (self.p0, self.q1, self.q2, self.risk)

    def risk2(self, param=None):
        if param is None:
            param = (self.q1, self.q2)
        return bayes_risk_two(self.p0, param[0], param[1],
                              self.likelihood1, self.likelihood2, self.costs)

    def best_response(self, q2):
        return best_response_belief(self.p0, q2, self.likelihood1, self.likelihood2, self.costs)

    def profile(self, q2):
        try:
            return self.risk2((self.best_response(q2), q2))
        except DegenerateError:
            return self.risk2((self.q1, q2))

    def refine_grid(self):
        """
        Evaluate R_2 on the grid of the given step; ties are resolved to the
        lexicographically smallest (q1, q2).

        @return: minimum risk on the grid
        """
        grid = probability_grid(self.step)
        risk = bayes_risk_two(self.p0, grid[:, None], grid[None, :],
                              self.likelihood1, self.likelihood2, self.costs)
        best = risk.min()
        ties = numpy.argwhere(risk <= best + TIE)
        if numpy.ptp(ties, axis=0).max() > 1:
            logger.warning("%s separated grid minima at p0=%s: %s", len(ties), self.p0,
                           [(float(grid[a]), float(grid[b])) for a, b in ties])
        i, j = ties[0]
        self.q1, self.q2, self.risk = float(grid[i]), float(grid[j]), float(risk[i, j])
        logger.debug("grid minimum at p0=%s: q1=%s q2=%s risk=%s", self.p0, self.q1, self.q2, self.risk)
        return self.risk

    def refine(self, xtol=1e-10, max_shift=50):
        """
        Bounded scalar minimization of the profile risk around the current q2.

        The window follows the minimum while it lands on an inner edge; the
        result is flagged converged only once the gradient of R_2 vanishes.

        @param max_shift: maximum number of window moves
        @return: refined risk
        """
        if self.q2 is None:
            self.refine_grid()
        q2 = self.q2
        for shift in range(max_shift):
            lo = max(MARGIN, q2 - self.step)
            hi = min(1.0 - MARGIN, q2 + self.step)
            res = minimize_scalar(self.profile, bounds=(lo, hi), method="bounded",
                                  options={"xatol": xtol, "maxiter": 500})
            if not res.success:
                raise ConvergenceError("refinement of q2 did not converge at p0=%s: %s" % (self.p0, res.message))
            q2 = float(res.x)
            at_edge = (lo > MARGIN and q2 - lo < EDGE) or (hi < 1.0 - MARGIN and hi - q2 < EDGE)
            if not at_edge:
                break
            logger.debug("refinement at p0=%s reached the window edge at q2=%s, moving", self.p0, q2)
        else:
            raise ConvergenceError("refinement at p0=%s kept drifting after %s window moves, q2=%s" %
                                   (self.p0, max_shift, q2))
        q1 = float(self.best_response(q2))
        new_risk = float(self.risk2((q1, q2)))
        logger.debug("refinement at p0=%s: %s --> %s", self.p0, self.risk, new_risk)
        if new_risk > self.risk + 1e-9:
            raise ConvergenceError("refinement at p0=%s increased the risk: %s --> %s" %
                                   (self.p0, self.risk, new_risk))
        self.q1, self.q2, self.risk = q1, q2, new_risk
        grad = self.gradient()
        if max(abs(grad[0]), abs(grad[1])) > GRADIENT_TOL:
            self.converged = False
            raise ConvergenceError("refined beliefs at p0=%s are not stationary: q1=%s q2=%s gradient=%s" %
                                   (self.p0, q1, q2, grad))
        self.converged = True
        return self.risk

    def residual(self):
        return stationarity_residual(self.p0, self.q1, self.q2,
                                     self.likelihood1, self.likelihood2, self.costs)

    def gradient(self, step=1e-5):
        return risk_gradient(self.p0, self.q1, self.q2,
                             self.likelihood1, self.likelihood2, self.costs, step)


def optimal_beliefs_two(p0, likelihood1, likelihood2, costs, step=0.01):
    """
    Global minimizer of the two-agent Bayes risk

    @param p0: true prior
    @param step: step of the initial grid
    @return: (q1*, q2*, R_2*)
    """
    ref = BeliefRefinement(p0, likelihood1, likelihood2, costs, step)
    ref.refine_grid()
    ref.refine()
    return ref.q1, ref.q2, ref.risk


def _coordinate_refine(func, q, width, rounds=20, xtol=1e-10):
    q = numpy.array(q, dtype=numpy.float64)
    for rnd in range(rounds):
        start = q.copy()
        for k in range(q.size):
            def along(value, k=k):
                trial = q.copy()
                trial[k] = value
                return func(trial)
            lo = max(MARGIN, q[k] - width)
            hi = min(1.0 - MARGIN, q[k] + width)
            q[k] = minimize_scalar(along, bounds=(lo, hi), method="bounded",
                                   options={"xatol": xtol}).x
        change = abs(q - start).max()
        logger.debug("coordinate round %s: max change %s", rnd, change)
        if change < 1e-9:
            break
    return q


def optimal_beliefs_n(config, step=None):
    """
    Beliefs of all agents minimizing the Bayes risk of the last agent.

    The beliefs stored in config are ignored; only prior, costs and
    likelihoods are used.

    @param config: CascadeConfig with at most 4 agents
    @param step: step of the initial grid
    @return: tuple (q1*, ..., qN*, R_N*)
    """
    n = config.n_agents
    if n > MAX_AGENTS:
        raise DomainError("joint optimisation is limited to %s agents, got %s" % (MAX_AGENTS, n))
    likelihoods = config.likelihoods
    if n == 1:
        # single Bayes test: the true prior is optimal
        risk = risk_batch(config.prior, [[config.prior]], likelihoods, config.costs)[0]
        return (config.prior, float(risk))
    if n == 2:
        return optimal_beliefs_two(config.prior, likelihoods[0], likelihoods[1],
                                   config.costs, step or 0.01)
    step = step or COARSE_STEP[n]
    grid = probability_grid(step)
    candidates = numpy.array(list(itertools.product(grid, repeat=n)))
    risk = numpy.concatenate([risk_batch(config.prior, candidates[i:i + 65536], likelihoods, config.costs)
                              for i in range(0, len(candidates), 65536)])
    start = candidates[numpy.nonzero(risk <= risk.min() + TIE)[0][0]]
    logger.debug("grid minimum for %s agents: %s risk=%s", n, start, risk.min())

    def func(q):
        return risk_batch(config.prior, [q], likelihoods, config.costs)[0]
    q = _coordinate_refine(func, start, step)

    def func_logit(ell):
        return func(special.expit(ell))
    res = minimize(func_logit, special.logit(q), method="Nelder-Mead",
                   options={"xatol": 1e-10, "fatol": 1e-15, "maxiter": 4000})
    if res.fun < func(q):
        q = special.expit(res.x)
    elif not res.success:
        logger.warning("polishing of %s beliefs stopped: %s", n, res.message)
    q = numpy.clip(q, MARGIN, 1.0 - MARGIN)
    return tuple(float(i) for i in q) + (float(func(q)),)


class BeliefCurve(object):
    """
    Optimal beliefs sampled over the true prior

    @param p0_grid: priors
    @param q_opt: array (len(p0_grid), n_agents)
    @param risk_opt: minimized risk
    @param risk_at_true_prior: risk when every agent believes p0
    @param residual: stationarity residual of the first agent
    @param converged: per-point success flag
    """
    def __init__(self, p0_grid, q_opt, risk_opt, risk_at_true_prior, residual, converged):
        self.p0_grid = numpy.asarray(p0_grid, dtype=numpy.float64)
        self.q_opt = numpy.asarray(q_opt, dtype=numpy.float64)
        self.risk_opt = numpy.asarray(risk_opt, dtype=numpy.float64)
        self.risk_at_true_prior = numpy.asarray(risk_at_true_prior, dtype=numpy.float64)
        self.residual = numpy.asarray(residual, dtype=numpy.float64)
        self.converged = numpy.asarray(converged, dtype=bool)

    def __len__(self):
        return self.p0_grid.size

    def __repr__(self):
        return "BeliefCurve of %s points, %s failed" % (len(self), (~self.converged).sum())

    @property
    def q1(self):
        return self.q_opt[:, 0]

    @property
    def q2(self):
        return self.q_opt[:, -1]

    def to_table(self):
        """
        @return: (column names, 2D array) as written to CSV
        """
        columns = ["p0", "q1_opt", "q2_opt", "risk_opt", "risk_at_true_prior", "residual"]
        data = numpy.column_stack((self.p0_grid, self.q_opt[:, 0], self.q_opt[:, 1], self.risk_opt,
                                   self.risk_at_true_prior, self.residual))
        return columns, data


@timeit
def belief_curves(p0_grid, likelihood1, likelihood2, costs, step=0.01, workers=1):
    """
    Optimal two-agent beliefs at every prior of the grid.

    Points where the optimizer fails are logged and reported with NaN and a
    False converged flag.
    """
    p0_grid = numpy.atleast_1d(check_probability(p0_grid, "p0"))

    def one_point(p0):
        baseline = bayes_risk_two(p0, p0, p0, likelihood1, likelihood2, costs)
        try:
            q1, q2, risk = optimal_beliefs_two(p0, likelihood1, likelihood2, costs, step)
            residual = stationarity_residual(p0, q1, q2, likelihood1, likelihood2, costs)
        except (ConvergenceError, DegenerateError) as err:
            logger.warning("optimal beliefs at p0=%s failed: %s", p0, err)
            return (numpy.nan, numpy.nan, numpy.nan, baseline, numpy.nan, False)
        return (q1, q2, risk, baseline, residual, True)

    res = parallel_map(one_point, p0_grid, workers)
    cols = list(zip(*res))
    return BeliefCurve(p0_grid, numpy.column_stack(cols[:2]), cols[2], cols[3], cols[4], cols[5])


class RiskSurface(object):
    """
    Two-agent risk sampled on a (q1, q2) grid at a given prior
    """
    def __init__(self, p0, q1_grid, q2_grid, risk, risk_at_prior):
        self.p0 = p0
        self.q1_grid = q1_grid
        self.q2_grid = q2_grid
        self.risk = risk
        self.risk_at_prior = risk_at_prior

    @property
    def argmin(self):
        """Lexicographically smallest grid minimizer"""
        i, j = numpy.argwhere(self.risk <= self.risk.min() + TIE)[0]
        return float(self.q1_grid[i]), float(self.q2_grid[j])

    @property
    def min_risk(self):
        return float(self.risk.min())

    def to_table(self):
        q1, q2 = numpy.meshgrid(self.q1_grid, self.q2_grid, indexing="ij")
        return ["q1", "q2", "risk"], numpy.column_stack((q1.ravel(), q2.ravel(), self.risk.ravel()))


def risk_surface(p0, likelihood1, likelihood2, costs, step=0.01):
    p0 = check_probability(p0, "p0")
    grid = probability_grid(step)
    risk = numpy.atleast_2d(bayes_risk_two(p0, grid[:, None], grid[None, :],
                                           likelihood1, likelihood2, costs))
    return RiskSurface(p0, grid, grid, risk,
                       bayes_risk_two(p0, p0, p0, likelihood1, likelihood2, costs))


class FixedPointProblem(object):
    """
    Priors p0 at which the optimal first agent is unbiased, q1*(p0) = p0.

    With x = log(c10 p0 / (c01 (1 - p0))), alpha = 1 / (2 sigma1) and
    beta = 1 - Q(1 / (2 sigma2)) / Q(-1 / (2 sigma2)), they solve

        e^x = (1 - beta Q(-alpha + sigma1 x)) / (1 - beta Q(-alpha - sigma1 x))
    """
    def __init__(self, sigma1=1.0, sigma2=1.0, costs=None):
        self.sigma1 = GaussianLikelihood(sigma1).sigma
        self.sigma2 = GaussianLikelihood(sigma2).sigma
        self.costs = costs or CostModel()

    def __repr__(self):
        return "FixedPointProblem(sigma1=%s, sigma2=%s, costs=%r)" % (self.sigma1, self.sigma2, self.costs)

    @property
    def alpha(self):
        return 0.5 / self.sigma1

    @property
    def beta(self):
        h = 0.5 / self.sigma2
        return 1.0 - special.q_tail(h) / special.q_tail(-h)

    def x_of_p0(self, p0):
        return self.costs.log_ratio + special.logit(p0)

    def p0_of_x(self, x):
        return special.expit(numpy.asarray(x) - self.costs.log_ratio)

    def equation(self, x):
        """
        x - log r(x); vanishes at the solutions
        """
        x = numpy.asarray(x, dtype=numpy.float64)
        a, b, s = self.alpha, self.beta, self.sigma1
        return special.as_result(x - numpy.log1p(-b * special.q_tail(-a + s * x)) +
                                 numpy.log1p(-b * special.q_tail(-a - s * x)))


def sufficient_condition(problem):
    """
    2 beta sigma1 phi(alpha) / (1 - beta Q(-alpha)); above 1 there are at
    least three fixed points
    """
    a, b = problem.alpha, problem.beta
    return 2.0 * b * problem.sigma1 * special.phi(a) / (1.0 - b * special.q_tail(-a))


def fixed_point_roots(problem, samples=2000, margin=MARGIN):
    """
    All priors solving the fixed-point equation.

    x = 0 is always a solution; the others are bracketed by a sign scan of
    equation(x) / x on both sides of 0 and refined by bisection.

    @param problem: FixedPointProblem
    @param samples: number of scan points
    @param margin: the scan covers p0 in [margin, 1 - margin]
    @return: sorted array of p0
    """
    x_lo = float(problem.x_of_p0(margin))
    x_hi = float(problem.x_of_p0(1.0 - margin))
    roots = [0.0]
    span = x_hi - x_lo
    for lo, hi in ((x_lo, min(x_hi, 0.0)), (max(x_lo, 0.0), x_hi)):
        if hi <= lo:
            continue
        n = max(int(round(samples * (hi - lo) / span)), 2)
        x = numpy.linspace(lo, hi, n + 1)
        x = x[x != 0.0]
        g = problem.equation(x) / x
        sign = numpy.sign(g)
        for i in numpy.nonzero(sign[:-1] * sign[1:] < 0)[0]:
            root = bisect(problem.equation, x[i], x[i + 1], xtol=1e-14, maxiter=200)
            logger.debug("fixed point bracket [%s, %s] --> %s", x[i], x[i + 1], root)
            if abs(problem.equation(root)) > 1e-10:
                logger.warning("fixed point at x=%s only reached |f|=%s", root, abs(problem.equation(root)))
            roots.append(root)
        for i in numpy.nonzero(g == 0)[0]:
            roots.append(float(x[i]))
    roots = numpy.unique(numpy.round(roots, 12))
    return numpy.atleast_1d(problem.p0_of_x(roots))


def condition_map(sigma1_grid, sigma2_grid, costs=None, workers=1):
    """
    Sufficient condition and number of fixed points on a (sigma1, sigma2) grid

    @return: (condition, n_roots), arrays of shape (len(sigma1_grid), len(sigma2_grid))
    """
    cells = list(itertools.product(sigma1_grid, sigma2_grid))

    def one_cell(cell):
        problem = FixedPointProblem(cell[0], cell[1], costs)
        return sufficient_condition(problem), len(fixed_point_roots(problem))

    res = parallel_map(one_cell, cells, workers)
    shape = (len(sigma1_grid), len(sigma2_grid))
    return (numpy.array([i[0] for i in res]).reshape(shape),
            numpy.array([i[1] for i in res]).reshape(shape))
