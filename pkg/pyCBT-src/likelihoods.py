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
Costs, signal likelihoods and the single-agent Bayes test.

A Likelihood describes the distribution of the private signal under both
hypotheses. Every concrete likelihood registers itself by class name (and
aliases) so that it can be instanciated from a configuration file through
Likelihood.factory.
"""

import collections
import json
import logging
import math
import numpy

from . import special

logger = logging.getLogger("pyCBT.likelihoods")

ErrorPair = collections.namedtuple("ErrorPair", "type1 type2")


class DomainError(ValueError):
    """Argument outside its admissible domain"""
    pass


class ConfigError(ValueError):
    """
    Invalid configuration file or flag

    @param msg: description of the problem
    @param source: file name, if any
    @param line: line number of the offending token, if known
    @param col: column number of the offending token, if known
    """
    def __init__(self, msg, source=None, line=None, col=None):
        self.msg = msg
        self.source = source
        self.line = line
        self.col = col
        location = [str(i) for i in (source, line, col) if i is not None]
        if location:
            msg = "%s: %s" % (":".join(location), msg)
        ValueError.__init__(self, msg)


class EnumerationLimitError(DomainError):
    """Exhaustive enumeration of decision histories requested for too many agents"""
    pass


class DegenerateError(ArithmeticError):
    """A probability difference vanished where a strictly positive value is expected"""
    pass


class ConvergenceError(RuntimeError):
    """An iterative solver did not reach its tolerance"""
    pass


def check_probability(q, name="q"):
    """
    Validate a probability in the open interval (0, 1)

    @param q: scalar or array
    @param name: name used in the error message
    @return: q as float or float64 array
    """
    arr = numpy.asarray(q, dtype=numpy.float64)
    if not numpy.all((arr > 0.0) & (arr < 1.0)):
        raise DomainError("%s must lie in the open interval (0, 1), got %s" % (name, q))
    if arr.ndim == 0:
        return float(arr)
    return arr


class CostModel(object):
    """
    Costs of the two kinds of error, the cost of a correct decision being 0.

    @param c10: cost of deciding 1 when H = 0 (false alarm)
    @param c01: cost of deciding 0 when H = 1 (missed detection)
    """
    def __init__(self, c10=1.0, c01=1.0):
        self.c10 = self._check(c10, "c10")
        self.c01 = self._check(c01, "c01")

    @staticmethod
    def _check(value, name):
        try:
            value = float(value)
        except (TypeError, ValueError):
            raise DomainError("cost %s must be a number, got %r" % (name, value))
        if not (math.isfinite(value) and value > 0):
            raise DomainError("cost %s must be finite and strictly positive, got %s" % (name, value))
        return value

    def __repr__(self):
        return "CostModel(c10=%s, c01=%s)" % (self.c10, self.c01)

    def __eq__(self, other):
        return isinstance(other, CostModel) and (self.c10, self.c01) == (other.c10, other.c01)

    def __hash__(self):
        return hash((self.c10, self.c01))

    @property
    def log_ratio(self):
        """log(c10 / c01)"""
        return math.log(self.c10) - math.log(self.c01)

    @property
    def balance(self):
        """Belief c01 / (c01 + c10) at which the Bayes threshold sits at the midpoint"""
        return self.c01 / (self.c01 + self.c10)

    def get_config(self):
        return {"c10": self.c10, "c01": self.c01}


class LikelihoodMeta(type):
    """
    Metaclass used to register all likelihood classes inheriting from Likelihood
    """
    def __init__(cls, name, bases, dct):
        cls.registry[name.lower()] = cls
        for alias in dct.get("aliases", []):
            cls.registry[alias.lower()] = cls
        super(LikelihoodMeta, cls).__init__(name, bases, dct)


class Likelihood(object, metaclass=LikelihoodMeta):
    """
    Generic pair of signal densities f(y|H=0), f(y|H=1) with an increasing
    likelihood ratio, so that every Bayes test is a threshold test on y.
    """
    aliases = []
    registry = {}

    @classmethod
    def factory(cls, name, config=None):
        """
        Instanciate a registered likelihood

        @param name: name of the likelihood class or one of its aliases
        @param config: dict with the parameters of the likelihood
        @return: configured instance
        """
        key = str(name).lower()
        if key not in cls.registry or cls.registry[key] is Likelihood:
            msg = "Likelihood %s is unknown, please select one from %s" % \
                  (name, sorted(k for k, v in cls.registry.items() if v is not Likelihood))
            logger.error(msg)
            raise ConfigError(msg)
        instance = cls.registry[key]()
        if config:
            instance.set_config(config)
        return instance

    @property
    def name(self):
        return self.__class__.__name__

    def get_config(self):
        raise NotImplementedError

    def set_config(self, config):
        raise NotImplementedError

    def threshold_logodds(self, ell, costs):
        """
        Bayes threshold for a belief given as log-odds

        @param ell: log(q / (1 - q)), scalar or array
        @param costs: CostModel
        @return: threshold lambda; decide 1 when y >= lambda
        """
        raise NotImplementedError

    def prob_decide(self, lam, h, decision=1):
        """
        Probability P[decision | H = h] of a threshold test at lam
        """
        raise NotImplementedError

    def interval_probability(self, lo, hi, h):
        """
        Probability P[lo <= Y <= hi | H = h]
        """
        raise NotImplementedError

    def log_perceived_ratio(self, lam, decision):
        """
        log(P[decision | H = 0] / P[decision | H = 1]) for a predecessor using threshold lam

        @param lam: threshold, scalar or array
        @param decision: 0 or 1, scalar or array broadcastable with lam
        """
        raise NotImplementedError

    def sample(self, h, rng):
        """
        Draw one signal per entry of h

        @param h: integer array of true hypotheses
        @param rng: numpy.random.Generator
        """
        raise NotImplementedError


class GaussianLikelihood(Likelihood):
    """
    Additive white Gaussian noise: Y = H + sigma * Z with Z standard normal

    @param sigma: standard deviation of the noise
    """
    aliases = ["gaussian", "normal", "awgn"]

    def __init__(self, sigma=1.0):
        self._sigma = None
        self.sigma = sigma

    def __repr__(self):
        return "GaussianLikelihood(sigma=%s)" % self._sigma

    def __eq__(self, other):
        return isinstance(other, GaussianLikelihood) and other.sigma == self.sigma

    def __hash__(self):
        return hash(("gaussian", self._sigma))

    @classmethod
    def from_variance(cls, variance):
        return cls(math.sqrt(float(variance)))

    def get_sigma(self):
        return self._sigma

    def set_sigma(self, value):
        try:
            value = float(value)
        except (TypeError, ValueError):
            raise DomainError("sigma must be a number, got %r" % (value,))
        if not (math.isfinite(value) and value > 0):
            raise DomainError("sigma must be finite and strictly positive, got %s" % value)
        self._sigma = value
    sigma = property(get_sigma, set_sigma)

    def get_config(self):
        return {"sigma": self._sigma}

    def set_config(self, config):
        if isinstance(config, str):
            config = json.loads(config)
        if "sigma" in config:
            self.sigma = config["sigma"]
        elif "variance" in config:
            self.sigma = math.sqrt(float(config["variance"]))

    def density(self, y, h):
        """
        f(y | H = h)
        """
        return special.phi((numpy.asarray(y, dtype=numpy.float64) - h) / self._sigma) / self._sigma

    def likelihood_ratio(self, y):
        """
        f(y | H = 1) / f(y | H = 0) = exp((y - 1/2) / sigma^2)
        """
        return numpy.exp((numpy.asarray(y, dtype=numpy.float64) - 0.5) / (self._sigma * self._sigma))

    def threshold_logodds(self, ell, costs):
        return 0.5 + self._sigma * self._sigma * (costs.log_ratio + numpy.asarray(ell, dtype=numpy.float64))

    def prob_decide(self, lam, h, decision=1):
        z = (numpy.asarray(lam, dtype=numpy.float64) - h) / self._sigma
        if numpy.ndim(decision) == 0:
            return special.q_tail(z if decision else -z)
        return special.q_tail(numpy.where(numpy.asarray(decision) == 1, z, -z))

    def interval_probability(self, lo, hi, h):
        s = self._sigma
        return special.normal_interval((numpy.asarray(lo, dtype=numpy.float64) - h) / s,
                                       (numpy.asarray(hi, dtype=numpy.float64) - h) / s)

    def log_perceived_ratio(self, lam, decision):
        z = numpy.asarray(lam, dtype=numpy.float64) / self._sigma
        w = z - 1.0 / self._sigma
        # decision 0: log Q(-lam/s) - log Q((1-lam)/s)
        # decision 1: log Q(lam/s)  - log Q((lam-1)/s)
        if numpy.ndim(decision) == 0:
            if decision:
                return special.log_q_tail(z) - special.log_q_tail(w)
            return special.log_q_tail(-z) - special.log_q_tail(-w)
        one = numpy.asarray(decision) == 1
        sign = numpy.where(one, 1.0, -1.0)
        return special.log_q_tail(sign * z) - special.log_q_tail(sign * w)

    def sample(self, h, rng):
        h = numpy.asarray(h)
        return h + self._sigma * rng.standard_normal(h.shape)


def threshold(likelihood, q, costs):
    """
    Bayes threshold of an agent with belief q on P(H = 0)

    Solves f(y|1) / f(y|0) = c10 q / (c01 (1 - q)); for Gaussian signals
    lambda = 1/2 + sigma^2 (log(c10/c01) + log(q/(1-q))).

    @param likelihood: Likelihood instance
    @param q: belief in (0, 1)
    @param costs: CostModel
    @return: threshold; the agent decides 1 when y >= lambda
    """
    q = check_probability(q)
    return likelihood.threshold_logodds(special.logit(q), costs)


def error_probs(likelihood, lam):
    """
    Error probabilities of the threshold test at lam

    @return: ErrorPair(type1=P[Y >= lam | H=0], type2=P[Y < lam | H=1])
    """
    return ErrorPair(likelihood.prob_decide(lam, 0, 1), likelihood.prob_decide(lam, 1, 0))


def g1(q, likelihood, costs):
    """
    Odds of the updated belief after observing decision 0 from an agent with belief q:
    q/(1-q) * (1 - P^I) / P^II
    """
    q = check_probability(q)
    ell = special.logit(q)
    lam = likelihood.threshold_logodds(ell, costs)
    return special.as_result(numpy.exp(ell + likelihood.log_perceived_ratio(lam, 0)))


def g2(q, likelihood, costs):
    """
    Odds of the updated belief after observing decision 1 from an agent with belief q:
    q/(1-q) * P^I / (1 - P^II)
    """
    q = check_probability(q)
    ell = special.logit(q)
    lam = likelihood.threshold_logodds(ell, costs)
    return special.as_result(numpy.exp(ell + likelihood.log_perceived_ratio(lam, 1)))
