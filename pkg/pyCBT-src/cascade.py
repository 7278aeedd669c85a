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
The N-agent decision cascade.

Agent n observes the decisions of agents 1 ... n-1 and a private signal. She
presumes every predecessor shares her own belief and likelihood, updates her
belief once per observed decision and finally runs a Bayes threshold test.
The last agent's Bayes risk is obtained exactly by enumerating the decision
histories level by level, each prefix being evaluated once.
"""

import collections
import copy
import json
import logging
import os
import numpy

from . import special
from .likelihoods import (Likelihood, GaussianLikelihood, CostModel, ConfigError,
                          DomainError, EnumerationLimitError, check_probability)

logger = logging.getLogger("pyCBT.cascade")

# 2**20 decision histories per hypothesis
ENUMERATION_LIMIT = 20

PosteriorTrace = collections.namedtuple("PosteriorTrace", "beliefs threshold")

LastAgentTerms = collections.namedtuple("LastAgentTerms",
        "threshold threshold0 threshold1 type1_0 type1_1 type2_0 type2_1 delta_type1 delta_type2")
LastAgentTerms.__doc__ = """
Perceived quantities of the second agent of a two-agent cascade.

threshold is computed at her prior belief, threshold0/threshold1 after
observing decision 0/1. type1_d = P[decide 1 | H=0, predecessor said d],
type2_d = P[decide 0 | H=1, predecessor said d].
delta_type1 = type1_1 - type1_0 and delta_type2 = type2_0 - type2_1 are
evaluated as interval probabilities.
"""


class AgentSpec(object):
    """
    One agent of the cascade: her belief on P(H=0) and the likelihood of her
    private signal.

    @param belief: q_n in (0, 1)
    @param likelihood: Likelihood instance, GaussianLikelihood(sigma) by default
    @param sigma: shortcut for a Gaussian likelihood of this standard deviation
    """
    def __init__(self, belief, likelihood=None, sigma=None):
        self.belief = check_probability(belief, "belief")
        if likelihood is None:
            likelihood = GaussianLikelihood(1.0 if sigma is None else sigma)
        elif sigma is not None:
            raise DomainError("give either a likelihood or sigma, not both")
        self.likelihood = likelihood

    def __repr__(self):
        return "AgentSpec(belief=%s, likelihood=%r)" % (self.belief, self.likelihood)

    def __eq__(self, other):
        return (isinstance(other, AgentSpec) and other.belief == self.belief and
                other.likelihood == self.likelihood)

    @property
    def sigma(self):
        return getattr(self.likelihood, "sigma", None)

    def get_config(self):
        res = {"belief": self.belief}
        res.update(self.likelihood.get_config())
        if not isinstance(self.likelihood, GaussianLikelihood):
            res["likelihood"] = self.likelihood.name
        return res

    @classmethod
    def from_config(cls, config):
        if not isinstance(config, dict):
            raise ConfigError("agent entry must be an object, got %r" % (config,))
        if "belief" not in config:
            raise ConfigError("agent entry without 'belief': %r" % (config,))
        params = dict((k, v) for k, v in config.items() if k not in ("belief", "likelihood"))
        likelihood = Likelihood.factory(config.get("likelihood", "gaussian"), params)
        return cls(config["belief"], likelihood)


class CascadeConfig(object):
    """
    Complete N-agent scenario: true prior, costs and agents in acting order.

    The JSON representation is::

        {"prior": 0.3,
         "costs": {"c10": 1, "c01": 1},
         "agents": [{"belief": 0.38, "sigma": 1}, {"belief": 0.23, "sigma": 1}]}
    """
    def __init__(self, prior, agents, costs=None):
        self.prior = check_probability(prior, "prior")
        self.costs = costs if costs is not None else CostModel()
        self.agents = list(agents)
        if not self.agents:
            raise DomainError("a cascade needs at least one agent")

    def __repr__(self):
        return "CascadeConfig(prior=%s, costs=%r, agents=%r)" % (self.prior, self.costs, self.agents)

    def __eq__(self, other):
        return (isinstance(other, CascadeConfig) and other.prior == self.prior and
                other.costs == self.costs and other.agents == self.agents)

    @property
    def n_agents(self):
        return len(self.agents)

    @property
    def beliefs(self):
        return [agent.belief for agent in self.agents]

    @property
    def likelihoods(self):
        return [agent.likelihood for agent in self.agents]

    def with_beliefs(self, beliefs):
        """
        Copy of the scenario where the agents hold other beliefs

        @param beliefs: one belief per agent
        """
        if len(beliefs) != self.n_agents:
            raise DomainError("expected %s beliefs, got %s" % (self.n_agents, len(beliefs)))
        agents = [AgentSpec(q, copy.deepcopy(a.likelihood)) for q, a in zip(beliefs, self.agents)]
        return CascadeConfig(self.prior, agents, self.costs)

    @classmethod
    def two_agents(cls, prior, q1, q2, sigma1=1.0, sigma2=1.0, costs=None):
        return cls(prior, [AgentSpec(q1, sigma=sigma1), AgentSpec(q2, sigma=sigma2)], costs)

    def get_config(self):
        return {"prior": self.prior,
                "costs": self.costs.get_config(),
                "agents": [agent.get_config() for agent in self.agents]}

    @classmethod
    def from_config(cls, config, source=None):
        """
        Build a scenario from its dict representation

        @param config: dict as produced by get_config
        @param source: file name used in error messages
        """
        try:
            if not isinstance(config, dict):
                raise ConfigError("top level must be an object")
            for key in ("prior", "agents"):
                if key not in config:
                    raise ConfigError("missing key '%s'" % key)
            costs = config.get("costs", {})
            if not isinstance(costs, dict):
                raise ConfigError("'costs' must be an object")
            costs = CostModel(costs.get("c10", 1.0), costs.get("c01", 1.0))
            if not isinstance(config["agents"], list):
                raise ConfigError("'agents' must be a list")
            agents = [AgentSpec.from_config(i) for i in config["agents"]]
            return cls(config["prior"], agents, costs)
        except ConfigError as err:
            if source is not None and err.source is None:
                raise ConfigError(err.msg, source)
            raise
        except DomainError as err:
            raise ConfigError(str(err), source)

    def dumps(self):
        return json.dumps(self.get_config(), indent=4, sort_keys=True)

    @classmethod
    def loads(cls, text, source=None):
        try:
            config = json.loads(text)
        except ValueError as err:
            raise ConfigError(getattr(err, "msg", str(err)), source,
                              getattr(err, "lineno", None), getattr(err, "colno", None))
        return cls.from_config(config, source)

    def save(self, filename):
        with open(filename, "w") as f:
            f.write(self.dumps())

    @classmethod
    def load(cls, filename):
        """
        Read a scenario from a JSON file

        @param filename: path of the JSON document
        @return: CascadeConfig
        """
        if not os.path.isfile(filename):
            raise ConfigError("no such configuration file", filename)
        with open(filename) as f:
            text = f.read()
        return cls.loads(text, source=filename)


class DecisionHistory(tuple):
    """
    Ordered decisions (h_1, ..., h_k) of the predecessors, each 0 or 1.

    Accepts an iterable of bits or a string such as "010" or "h010".
    """
    def __new__(cls, bits=()):
        if isinstance(bits, str):
            bits = bits[1:] if bits.startswith("h") else bits
        try:
            bits = tuple(int(b) for b in bits)
        except (TypeError, ValueError):
            raise DomainError("decision history must contain bits, got %r" % (bits,))
        if any(b not in (0, 1) for b in bits):
            raise DomainError("decision history must contain bits, got %r" % (bits,))
        return tuple.__new__(cls, bits)

    @classmethod
    def from_index(cls, index, length):
        """Inverse of the index property: first decision is the most significant bit"""
        return cls((index >> (length - 1 - j)) & 1 for j in range(length))

    @property
    def index(self):
        res = 0
        for b in self:
            res = 2 * res + b
        return res

    @property
    def label(self):
        return "h" + "".join(str(b) for b in self)

    def __repr__(self):
        return "DecisionHistory(%s)" % self.label


def all_histories(length):
    """All 2**length decision histories, in index order"""
    return [DecisionHistory.from_index(i, length) for i in range(1 << length)]


def update_once(q, decision, likelihood, costs):
    """
    One belief update after observing a predecessor's decision.

    The updater presumes the predecessor used her own belief q and likelihood:
    decision 0 multiplies the odds by (1 - P^I) / P^II, decision 1 by
    P^I / (1 - P^II), with the error probabilities taken at threshold(q).

    @param q: current belief in (0, 1)
    @param decision: observed decision, 0 or 1
    @param likelihood: the updater's likelihood
    @param costs: CostModel
    @return: updated belief
    """
    q = check_probability(q)
    if decision not in (0, 1):
        raise DomainError("decision must be 0 or 1, got %r" % (decision,))
    ell = special.logit(q)
    lam = likelihood.threshold_logodds(ell, costs)
    return special.expit(ell + likelihood.log_perceived_ratio(lam, decision))


def posterior(agent_index, own, history, costs):
    """
    Posterior belief of agent n after folding the decisions of agents 1 ... n-1

    @param agent_index: n, 1-based position of the agent in the cascade
    @param own: AgentSpec of agent n
    @param history: DecisionHistory (or bits) of length n-1
    @param costs: CostModel
    @return: PosteriorTrace with the n intermediate beliefs and the final threshold
    """
    history = DecisionHistory(history)
    if agent_index < 1:
        raise DomainError("agent index is 1-based, got %s" % agent_index)
    if len(history) != agent_index - 1:
        raise DomainError("agent %s observes %s decisions, history has %s" %
                          (agent_index, agent_index - 1, len(history)))
    likelihood = own.likelihood
    ell = special.logit(own.belief)
    beliefs = [own.belief]
    for decision in history:
        lam = likelihood.threshold_logodds(ell, costs)
        ell = ell + likelihood.log_perceived_ratio(lam, decision)
        beliefs.append(special.expit(ell))
    return PosteriorTrace(beliefs, float(likelihood.threshold_logodds(ell, costs)))


def prefix_logodds(ell, likelihood, costs, depth):
    """
    Log-odds reached from ell after every decision prefix of the given depth

    @param ell: initial log-odds, array of shape (M,)
    @param depth: prefix length
    @return: array of shape (M, 2**depth), column index given by DecisionHistory.index
    """
    ell = numpy.asarray(ell, dtype=numpy.float64).reshape(-1, 1)
    for _ in range(depth):
        lam = likelihood.threshold_logodds(ell, costs)
        ell = numpy.stack((ell + likelihood.log_perceived_ratio(lam, 0),
                           ell + likelihood.log_perceived_ratio(lam, 1)),
                          axis=-1).reshape(ell.shape[0], -1)
    return ell


def _check_enumerable(n_agents):
    if n_agents > ENUMERATION_LIMIT:
        raise EnumerationLimitError("exact enumeration is limited to %s agents, got %s; "
                                    "use pyCBT.montecarlo.simulate instead" %
                                    (ENUMERATION_LIMIT, n_agents))


def sequence_probabilities(beliefs, likelihoods, costs, h):
    """
    True probabilities of all full decision sequences under hypothesis h,
    for a batch of belief vectors sharing the same likelihoods.

    @param beliefs: array (M, N) of beliefs
    @param likelihoods: N Likelihood instances
    @param h: hypothesis, 0 or 1
    @return: array (M, 2**N)
    """
    beliefs = numpy.atleast_2d(numpy.asarray(beliefs, dtype=numpy.float64))
    n_agents = beliefs.shape[1]
    _check_enumerable(n_agents)
    probs = numpy.ones((beliefs.shape[0], 1))
    for k in range(n_agents):
        likelihood = likelihoods[k]
        ell = prefix_logodds(special.logit(beliefs[:, k]), likelihood, costs, k)
        lam = likelihood.threshold_logodds(ell, costs)
        probs = numpy.stack((probs * likelihood.prob_decide(lam, h, 0),
                             probs * likelihood.prob_decide(lam, h, 1)),
                            axis=-1).reshape(beliefs.shape[0], -1)
    return probs


def history_probabilities(config, h):
    """
    Probability of every full decision sequence under hypothesis h.

    Each agent k thresholds at her own posterior on the observed prefix, so the
    true probability of her decision is Q((lambda_k - h) / sigma_k).

    @param config: CascadeConfig with at most ENUMERATION_LIMIT agents
    @param h: hypothesis, 0 or 1
    @return: dict DecisionHistory -> probability
    """
    if h not in (0, 1):
        raise DomainError("hypothesis must be 0 or 1, got %r" % (h,))
    _check_enumerable(config.n_agents)
    probs = sequence_probabilities([config.beliefs], config.likelihoods, config.costs, h)[0]
    n = config.n_agents
    return dict((DecisionHistory.from_index(i, n), float(p)) for i, p in enumerate(probs))


def risk_batch(prior, beliefs, likelihoods, costs):
    """
    Bayes risk of the last agent for a batch of belief vectors

    @param prior: true prior p0, scalar or array (M,)
    @param beliefs: array (M, N)
    @return: array (M,)
    """
    beliefs = numpy.atleast_2d(numpy.asarray(beliefs, dtype=numpy.float64))
    false_alarm = sequence_probabilities(beliefs, likelihoods, costs, 0)[:, 1::2].sum(axis=1)
    missed = sequence_probabilities(beliefs, likelihoods, costs, 1)[:, 0::2].sum(axis=1)
    prior = numpy.asarray(prior, dtype=numpy.float64)
    return costs.c10 * prior * false_alarm + costs.c01 * (1.0 - prior) * missed


def bayes_risk(config):
    """
    Exact Bayes risk of the last agent

    R_N = c10 p0 P(h_N = 1 | H = 0) + c01 (1 - p0) P(h_N = 0 | H = 1)

    @param config: CascadeConfig with at most ENUMERATION_LIMIT agents
    @return: risk as float
    """
    _check_enumerable(config.n_agents)
    return float(risk_batch(config.prior, [config.beliefs], config.likelihoods, config.costs)[0])


def last_agent_terms(q2, likelihood2, costs):
    """
    Perceived thresholds and error probabilities of the second of two agents

    @param q2: belief of the second agent, scalar or array
    @param likelihood2: her likelihood
    @return: LastAgentTerms
    """
    ell = special.logit(check_probability(q2, "q2"))
    lam = likelihood2.threshold_logodds(ell, costs)
    lam0 = likelihood2.threshold_logodds(ell + likelihood2.log_perceived_ratio(lam, 0), costs)
    lam1 = likelihood2.threshold_logodds(ell + likelihood2.log_perceived_ratio(lam, 1), costs)
    return LastAgentTerms(lam, lam0, lam1,
                          likelihood2.prob_decide(lam0, 0, 1),
                          likelihood2.prob_decide(lam1, 0, 1),
                          likelihood2.prob_decide(lam0, 1, 0),
                          likelihood2.prob_decide(lam1, 1, 0),
                          likelihood2.interval_probability(lam1, lam0, 0),
                          likelihood2.interval_probability(lam1, lam0, 1))


def two_agent_terms(q1, q2, likelihood1, likelihood2, costs):
    """
    @return: (P^I_1, P^II_1, LastAgentTerms) for the two-agent cascade
    """
    lam1 = likelihood1.threshold_logodds(special.logit(check_probability(q1, "q1")), costs)
    return (likelihood1.prob_decide(lam1, 0, 1), likelihood1.prob_decide(lam1, 1, 0),
            last_agent_terms(q2, likelihood2, costs))


def bayes_risk_two(p0, q1, q2, likelihood1, likelihood2, costs):
    """
    Closed-form Bayes risk of a two-agent cascade, broadcasting over arrays:

    R_2 = c10 p0 [P^I0 (1 - P^I_1) + P^I1 P^I_1]
        + c01 (1 - p0) [P^II0 P^II_1 + P^II1 (1 - P^II_1)]

    @param p0: true prior
    @param q1: belief of the first agent
    @param q2: belief of the second agent
    @return: risk, float or array
    """
    p0 = check_probability(p0, "p0")
    lam1 = likelihood1.threshold_logodds(special.logit(check_probability(q1, "q1")), costs)
    t = last_agent_terms(q2, likelihood2, costs)
    p1_type1 = likelihood1.prob_decide(lam1, 0, 1)
    p1_type2 = likelihood1.prob_decide(lam1, 1, 0)
    res = (costs.c10 * p0 * (t.type1_0 * likelihood1.prob_decide(lam1, 0, 0) + t.type1_1 * p1_type1) +
           costs.c01 * (1.0 - p0) * (t.type2_0 * p1_type2 + t.type2_1 * likelihood1.prob_decide(lam1, 1, 1)))
    return special.as_result(res)


def posterior_curves(q_grid, likelihood, costs, n_agents=4):
    """
    Final belief of agent n_agents for every prior belief and every history

    @param q_grid: beliefs of the agent
    @return: (labels, array of shape (len(q_grid), 2**(n_agents-1)))
    """
    if n_agents < 1:
        raise DomainError("n_agents must be at least 1")
    _check_enumerable(n_agents)
    q_grid = numpy.atleast_1d(check_probability(q_grid, "q"))
    depth = n_agents - 1
    ell = prefix_logodds(special.logit(q_grid), likelihood, costs, depth)
    labels = [i.label for i in all_histories(depth)]
    return labels, numpy.atleast_2d(special.expit(ell))
