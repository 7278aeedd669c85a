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
Prelec probability weighting w(p) = exp(-beta (-log p)^alpha), minimax fit of
weighting functions to optimal belief curves and the Bayes risk lost by
replacing optimal beliefs with another belief function.
"""

import collections
import logging
import numpy
from scipy.optimize import minimize_scalar

from .beliefRefinement import belief_curves
from .cascade import bayes_risk_two
from .likelihoods import DomainError, check_probability
from .utils import closed_grid

logger = logging.getLogger("pyCBT.prospect")

ALPHA_BOUNDS = (0.05, 5.0)
# priors 0.02, 0.04, ..., 0.98
FIT_GRID = closed_grid(0.02, 0.98, 0.02)


class PrelecParams(object):
    """
    @param alpha: curvature, alpha < 1 overweights small probabilities
    @param beta: elevation
    """
    def __init__(self, alpha=1.0, beta=1.0):
        self.alpha = float(alpha)
        self.beta = float(beta)
        if not (self.alpha > 0 and self.beta > 0):
            raise DomainError("Prelec parameters must be strictly positive, got alpha=%s beta=%s" %
                              (alpha, beta))

    def __repr__(self):
        return "PrelecParams(alpha=%s, beta=%s)" % (self.alpha, self.beta)

    @property
    def fixed_point(self):
        """p such that w(p) = p, None for alpha = 1"""
        return prelec_fixed_point(self)

    def __call__(self, p):
        return prelec(p, self)


def prelec(p, params):
    """
    Prelec weighting function

    @param p: probability in (0, 1), scalar or array
    @param params: PrelecParams
    @return: exp(-beta (-log p)^alpha)
    """
    p = check_probability(p, "p")
    return numpy.exp(-params.beta * (-numpy.log(p)) ** params.alpha)


def prelec_fixed_point(params):
    if params.alpha == 1.0:
        return None
    return float(numpy.exp(-numpy.exp(numpy.log(params.beta) / (1.0 - params.alpha))))


def constrained_beta(alpha, fixed_point):
    """
    beta such that w(fixed_point) = fixed_point: (-log p*)^(1 - alpha)
    """
    fixed_point = check_probability(fixed_point, "fixed point")
    return (-numpy.log(fixed_point)) ** (1.0 - alpha)


class FitResult(object):
    def __init__(self, params, minimax_error, boundary=False, risk_loss_curve=None, max_risk_loss=None):
        self.params = params
        self.minimax_error = float(minimax_error)
        self.boundary = bool(boundary)
        self.risk_loss_curve = risk_loss_curve
        self.max_risk_loss = max_risk_loss

    def __repr__(self):
        return "FitResult(%r, minimax_error=%s%s)" % (self.params, self.minimax_error,
                                                      ", on the alpha boundary" if self.boundary else "")

    def get_config(self):
        return {"alpha": self.params.alpha,
                "beta": self.params.beta,
                "minimax_error": self.minimax_error,
                "max_risk_loss": None if self.max_risk_loss is None else float(self.max_risk_loss),
                "boundary": self.boundary}


def fit_prelec(p0_grid, curve, fixed_point, alpha_bounds=ALPHA_BOUNDS, n_coarse=61, xtol=1e-10):
    """
    Minimax fit of a Prelec function through a given fixed point.

    The error max |curve - w(p0)| is scanned on a log-spaced alpha grid, then
    minimized by golden-section search around the best sample.

    @param p0_grid: abscissa of the curve
    @param curve: optimal beliefs sampled on p0_grid
    @param fixed_point: imposed fixed point of w
    @return: FitResult, with boundary=True if alpha sticks to a search bound
    """
    p0_grid = check_probability(p0_grid, "p0")
    curve = numpy.asarray(curve, dtype=numpy.float64)
    valid = numpy.isfinite(curve)
    p0_grid, curve = numpy.asarray(p0_grid)[valid], curve[valid]
    if curve.size == 0:
        raise DomainError("nothing to fit")
    fixed_point = check_probability(fixed_point, "fixed point")

    def error(alpha):
        params = PrelecParams(alpha, constrained_beta(alpha, fixed_point))
        return abs(curve - prelec(p0_grid, params)).max()

    alphas = numpy.geomspace(alpha_bounds[0], alpha_bounds[1], n_coarse)
    errors = numpy.array([error(a) for a in alphas])
    i = int(errors.argmin())
    boundary = i in (0, n_coarse - 1)
    if boundary:
        lo, hi = (alphas[0], alphas[1]) if i == 0 else (alphas[-2], alphas[-1])
        res = minimize_scalar(error, bounds=(lo, hi), method="bounded", options={"xatol": xtol})
        boundary = min(abs(res.x - alpha_bounds[0]), abs(res.x - alpha_bounds[1])) < 1e-3
    else:
        try:
            res = minimize_scalar(error, bracket=(alphas[i - 1], alphas[i], alphas[i + 1]),
                                  method="golden", options={"xtol": xtol})
        except ValueError:
            res = minimize_scalar(error, bounds=(alphas[i - 1], alphas[i + 1]), method="bounded",
                                  options={"xatol": xtol})
    alpha = float(res.x)
    if boundary:
        logger.warning("Prelec fit reached the alpha search bound: alpha=%s", alpha)
    params = PrelecParams(alpha, constrained_beta(alpha, fixed_point))
    logger.debug("Prelec fit %r: max error %s", params, res.fun)
    return FitResult(params, error(alpha), boundary)


def _evaluate(belief_fn, p0_grid):
    if callable(belief_fn):
        return numpy.array([belief_fn(p) for p in p0_grid], dtype=numpy.float64)
    return numpy.asarray(belief_fn, dtype=numpy.float64)


def risk_loss(belief_fn1, belief_fn2, p0_grid, likelihood1, likelihood2, costs, optimal=None):
    """
    Excess Bayes risk of the belief functions over the optimal beliefs

    @param belief_fn1: callable p0 -> q1, or values on p0_grid
    @param belief_fn2: callable p0 -> q2, or values on p0_grid
    @param optimal: BeliefCurve on p0_grid, computed when missing
    @return: (losses, max loss)
    """
    p0_grid = numpy.atleast_1d(check_probability(p0_grid, "p0"))
    if optimal is None:
        optimal = belief_curves(p0_grid, likelihood1, likelihood2, costs)
    q1 = _evaluate(belief_fn1, p0_grid)
    q2 = _evaluate(belief_fn2, p0_grid)
    loss = (bayes_risk_two(p0_grid, q1, q2, likelihood1, likelihood2, costs) - optimal.risk_opt)
    return loss, float(numpy.nanmax(loss))


LossReport = collections.namedtuple("LossReport", "curve fit1 fit2 prelec_loss correct_loss")


def compare_losses(likelihood1, likelihood2, costs, p0_grid=None, workers=1):
    """
    Fit both optimal belief curves by Prelec functions through the balance
    point c01 / (c01 + c10) and compare their risk loss with the one of the
    correct beliefs q1 = q2 = p0.

    @return: LossReport
    """
    p0_grid = FIT_GRID if p0_grid is None else numpy.atleast_1d(p0_grid)
    curve = belief_curves(p0_grid, likelihood1, likelihood2, costs, workers=workers)
    fixed_point = costs.balance
    fit1 = fit_prelec(p0_grid, curve.q1, fixed_point)
    fit2 = fit_prelec(p0_grid, curve.q2, fixed_point)
    prelec_loss, prelec_max = risk_loss(fit1.params, fit2.params, p0_grid,
                                        likelihood1, likelihood2, costs, curve)
    correct_loss, correct_max = risk_loss(p0_grid, p0_grid, p0_grid,
                                          likelihood1, likelihood2, costs, curve)
    for fit in (fit1, fit2):
        fit.risk_loss_curve = prelec_loss
        fit.max_risk_loss = prelec_max
    logger.info("max risk loss: Prelec %.6f, correct beliefs %.6f", prelec_max, correct_max)
    return LossReport(curve, fit1, fit2, prelec_loss, correct_loss)
