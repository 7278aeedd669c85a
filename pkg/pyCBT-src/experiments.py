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
Command line experiments. Each class drives one script of scripts/:

=================  =====================  ==========================================
script             class                  output
=================  =====================  ==========================================
pyCBT-risk         RiskSurface            risk_surface.csv
pyCBT-curves       OptimalCurves          optimal_curves.csv
pyCBT-fixedpoints  FixedPoints            fixed_points.json
pyCBT-selection    SelectionMap           selection_region.csv
pyCBT-prelec       PrelecFit              prelec_fit.json, prelec_losses.csv
pyCBT-simulate     Simulate               simulate.json
pyCBT-posterior    PosteriorCurves        posterior_curves.csv
pyCBT-condition    ConditionMap           condition_map.csv
=================  =====================  ==========================================

Every run also writes <command>.manifest.json. Exit codes: 0 success,
2 configuration error, 3 numerical failure or unwritable output.
"""

import argparse
import logging
import os
import numpy

from . import version as PyCBT_VERSION
from .beliefRefinement import (belief_curves, risk_surface, optimal_beliefs_n, FixedPointProblem,
                               fixed_point_roots, sufficient_condition, condition_map)
from .cascade import CascadeConfig, AgentSpec, bayes_risk, posterior_curves, ENUMERATION_LIMIT
from .io import CsvWriter, JsonWriter, RunManifest
from .likelihoods import (CostModel, GaussianLikelihood, ConfigError, DomainError,
                          ConvergenceError, DegenerateError)
from .montecarlo import simulate
from .prospect import compare_losses
from .team import selection_region
from .utils import parallel_map, probability_grid, closed_grid

logger = logging.getLogger("pyCBT.experiments")

DEFAULT_P0 = 0.3

EXIT_SUCCESS = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


def probability_list(text):
    """argparse type: comma separated beliefs"""
    try:
        values = [float(i) for i in text.split(",") if i.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma separated numbers, got %r" % text)
    if not values:
        raise argparse.ArgumentTypeError("empty list of beliefs")
    return values


class AbstractExperiment(object):
    """
    Common command line handling: scenario flags, output directory,
    manifest and exit codes.
    """
    command = None
    description = None
    default_step = 0.01
    epilog = """Flags override the values of the JSON scenario given with --config.
    Outputs are written in the directory given by --out."""

    def __init__(self):
        self.parser = None
        self.options = None
        self.config = None
        self.manifest = None
        self.outdir = "."

    def __repr__(self):
        return "%s experiment writing in %s" % (self.command, self.outdir)

    def configure_parser(self):
        """Common configuration for parsers"""
        parser = argparse.ArgumentParser(prog=self.command, description=self.description,
                                         epilog=self.epilog)
        parser.add_argument("-V", "--version", action="version",
                            version="%(prog)s from pyCBT version " + PyCBT_VERSION)
        parser.add_argument("-v", "--verbose", action="store_true", default=False,
                            help="switch to debug/verbose mode")
        parser.add_argument("--config", metavar="PATH", default=None,
                            help="JSON scenario: prior, costs and agents")
        parser.add_argument("--out", metavar="DIR", default=".",
                            help="directory receiving the outputs (default: current)")
        parser.add_argument("--grid-step", dest="grid_step", type=float, default=self.default_step,
                            help="step of the sampling grid (default: %(default)s)")
        parser.add_argument("--p0", type=float, default=None,
                            help="true prior of H=0 (default: from config, else %s)" % DEFAULT_P0)
        parser.add_argument("--sigma1", type=float, default=None,
                            help="noise standard deviation of the predecessors (default: 1)")
        parser.add_argument("--sigma2", type=float, default=None,
                            help="noise standard deviation of the last agent (default: 1)")
        parser.add_argument("--c10", type=float, default=None, help="cost of a false alarm (default: 1)")
        parser.add_argument("--c01", type=float, default=None, help="cost of a missed detection (default: 1)")
        parser.add_argument("--samples", type=int, default=100000,
                            help="number of Monte Carlo samples (default: %(default)s)")
        parser.add_argument("--seed", type=int, default=0, help="random seed (default: %(default)s)")
        parser.add_argument("--workers", type=int, default=1,
                            help="number of threads for the sweeps (default: %(default)s)")
        self.add_options(parser)
        self.parser = parser
        return parser

    def add_options(self, parser):
        """Hook for command specific flags"""
        pass

    def analyse_options(self, argv=None):
        """
        Parse the command line and build the scenario

        @param argv: list of arguments, sys.argv[1:] by default
        """
        if self.parser is None:
            self.configure_parser()
        options = self.parser.parse_args(argv)
        self.options = options
        if options.verbose:
            logging.getLogger("pyCBT").setLevel(logging.DEBUG)
        self.outdir = options.out
        if options.config:
            self.config = CascadeConfig.load(options.config)
        self.manifest = RunManifest(self.command, options.config, seed=options.seed,
                                    version=PyCBT_VERSION,
                                    parameters={"grid_step": options.grid_step,
                                                "p0": options.p0,
                                                "sigma1": options.sigma1,
                                                "sigma2": options.sigma2,
                                                "c10": options.c10,
                                                "c01": options.c01,
                                                "samples": options.samples,
                                                "workers": options.workers})
        return options

    @property
    def prior(self):
        if self.options.p0 is not None:
            return self.options.p0
        if self.config is not None:
            return self.config.prior
        return DEFAULT_P0

    @property
    def costs(self):
        base = self.config.costs if self.config is not None else CostModel()
        c10 = base.c10 if self.options.c10 is None else self.options.c10
        c01 = base.c01 if self.options.c01 is None else self.options.c01
        return CostModel(c10, c01)

    def _sigma(self, flag, index):
        if flag is not None:
            return flag
        if self.config is not None:
            sigma = self.config.agents[index].sigma
            if sigma is None:
                raise ConfigError("agent %s does not have a Gaussian likelihood" % (index + 1),
                                  self.options.config)
            return sigma
        return 1.0

    @property
    def likelihood1(self):
        return GaussianLikelihood(self._sigma(self.options.sigma1, 0))

    @property
    def likelihood2(self):
        return GaussianLikelihood(self._sigma(self.options.sigma2, -1))

    def scenario(self, beliefs=None):
        """
        CascadeConfig combining the configuration file and the flags;
        without file, a two-agent cascade whose agents believe p0.
        """
        prior = self.prior
        if self.config is None:
            beliefs = beliefs or [prior, prior]
            agents = [AgentSpec(q, GaussianLikelihood(self._sigma(self.options.sigma1, 0)))
                      for q in beliefs[:-1]]
            agents.append(AgentSpec(beliefs[-1], self.likelihood2))
            return CascadeConfig(prior, agents, self.costs)
        agents = []
        n = self.config.n_agents
        for i, agent in enumerate(self.config.agents):
            belief = beliefs[i] if beliefs else agent.belief
            flag = self.options.sigma2 if (i == n - 1 and n > 1) else self.options.sigma1
            likelihood = agent.likelihood if flag is None else GaussianLikelihood(flag)
            agents.append(AgentSpec(belief, likelihood))
        return CascadeConfig(prior, agents, self.costs)

    def two_agent_scenario(self):
        if self.config is not None and self.config.n_agents != 2:
            raise ConfigError("%s needs a two-agent scenario, got %s agents" %
                              (self.command, self.config.n_agents), self.options.config)
        return self.prior, self.likelihood1, self.likelihood2, self.costs

    def output(self, basename):
        return os.path.join(self.outdir, basename)

    def write_csv(self, basename, columns, data):
        filename = self.output(basename)
        CsvWriter(filename, columns).write(data)
        self.manifest.add_output(filename)
        return filename

    def write_json(self, basename, data):
        filename = self.output(basename)
        JsonWriter(filename).write(data)
        self.manifest.add_output(filename)
        return filename

    def process(self):
        raise NotImplementedError

    def run(self, argv=None):
        """
        Parse, process, write the manifest

        @return: exit code
        """
        try:
            self.configure_parser()
            self.analyse_options(argv)
            self.process()
            self.manifest.save(self.outdir)
        except SystemExit as err:
            return err.code
        except ConfigError as err:
            logger.error("Configuration error: %s", err)
            return EXIT_CONFIG
        except (ConvergenceError, DegenerateError, FloatingPointError) as err:
            logger.error("Numerical failure: %s", err)
            return EXIT_NUMERICAL
        except DomainError as err:
            logger.error("Invalid parameter: %s", err)
            return EXIT_CONFIG
        except OSError as err:
            logger.error("Cannot write results: %s", err)
            return EXIT_NUMERICAL
        return EXIT_SUCCESS


class RiskSurface(AbstractExperiment):
    command = "risk_surface"
    description = "Bayes risk of a two-agent cascade on a grid of beliefs (q1, q2)"

    def process(self):
        p0, lik1, lik2, costs = self.two_agent_scenario()
        surface = risk_surface(p0, lik1, lik2, costs, self.options.grid_step)
        self.write_csv("risk_surface.csv", *surface.to_table())
        q1, q2 = surface.argmin
        print("argmin q1=%.6g q2=%.6g  minimum risk %.6g  risk at (p0, p0) %.6g" %
              (q1, q2, surface.min_risk, surface.risk_at_prior))
        return surface


class OptimalCurves(AbstractExperiment):
    command = "optimal_curves"
    description = "Risk-minimizing beliefs as functions of the true prior"

    def add_options(self, parser):
        parser.add_argument("--agents", type=int, default=2,
                            help="number of agents, 2 to 4 (default: %(default)s)")

    def process(self):
        grid = probability_grid(self.options.grid_step)
        n = self.options.agents
        if n == 2:
            _, lik1, lik2, costs = self.two_agent_scenario()
            curve = belief_curves(grid, lik1, lik2, costs, workers=self.options.workers)
            if not curve.converged.all():
                logger.warning("%s points failed to converge", (~curve.converged).sum())
            self.write_csv("optimal_curves.csv", *curve.to_table())
            return curve
        if not 2 < n <= 4:
            raise ConfigError("--agents must be between 2 and 4, got %s" % n)
        lik1, lik2, costs = self.likelihood1, self.likelihood2, self.costs

        def one_point(p0):
            agents = [AgentSpec(p0, lik1) for _ in range(n - 1)] + [AgentSpec(p0, lik2)]
            config = CascadeConfig(p0, agents, costs)
            baseline = bayes_risk(config)
            try:
                res = optimal_beliefs_n(config)
            except (ConvergenceError, DegenerateError) as err:
                logger.warning("optimal beliefs at p0=%s failed: %s", p0, err)
                return (numpy.nan,) * (n + 1) + (baseline, 0)
            return res + (baseline, 1)

        rows = numpy.array(parallel_map(one_point, grid, self.options.workers))
        failed = (rows[:, -1] == 0).sum()
        if failed:
            logger.warning("%s points failed to converge", failed)
        columns = (["p0"] + ["q%s_opt" % (i + 1) for i in range(n)] +
                   ["risk_opt", "risk_at_true_prior", "converged"])
        data = numpy.column_stack((grid, rows))
        self.write_csv("optimal_curves.csv", columns, data)
        return data


class FixedPoints(AbstractExperiment):
    command = "fixed_points"
    description = "Priors at which the optimal predecessor belief equals the prior"

    def process(self):
        problem = FixedPointProblem(self.likelihood1.sigma, self.likelihood2.sigma, self.costs)
        roots = fixed_point_roots(problem)
        condition = sufficient_condition(problem)
        self.write_json("fixed_points.json", {"alpha": problem.alpha,
                                              "beta": problem.beta,
                                              "sufficient_condition": condition,
                                              "roots": [float(i) for i in roots]})
        print("%s fixed point(s): %s  (sufficient condition %.6g)" %
              (len(roots), ", ".join("%.6g" % i for i in roots), condition))
        return roots


class SelectionMap(AbstractExperiment):
    command = "selection_region"
    description = "Where a last agent without context chooses the right predecessor"

    def process(self):
        _, lik1, lik2, costs = self.two_agent_scenario()
        grid = probability_grid(self.options.grid_step)
        region = selection_region(grid, grid, lik1, lik2, costs, workers=self.options.workers)
        self.write_csv("selection_region.csv", *region.to_table())
        print(repr(region))
        return region


class PrelecFit(AbstractExperiment):
    command = "prelec_fit"
    description = "Prelec approximation of the optimal belief curves and its risk loss"
    default_step = 0.02

    def process(self):
        _, lik1, lik2, costs = self.two_agent_scenario()
        grid = probability_grid(self.options.grid_step)
        report = compare_losses(lik1, lik2, costs, grid, workers=self.options.workers)
        curve = report.curve
        self.write_json("prelec_fit.json",
                        {"predecessor": report.fit1.get_config(),
                         "last_agent": report.fit2.get_config(),
                         "correct_beliefs_max_loss": float(numpy.nanmax(report.correct_loss))})
        data = numpy.column_stack((grid, curve.q1, curve.q2,
                                   report.fit1.params(grid), report.fit2.params(grid),
                                   report.prelec_loss, report.correct_loss))
        self.write_csv("prelec_losses.csv",
                       ["p0", "q1_opt", "q2_opt", "q1_prelec", "q2_prelec", "loss_prelec", "loss_correct"],
                       data)
        print("max risk loss: Prelec %.6g, correct beliefs %.6g" %
              (report.fit1.max_risk_loss, numpy.nanmax(report.correct_loss)))
        return report


class Simulate(AbstractExperiment):
    command = "simulate"
    description = "Monte Carlo estimate of the Bayes risk of the last agent"

    def add_options(self, parser):
        parser.add_argument("--beliefs", type=probability_list, default=None,
                            help="comma separated beliefs of the agents, overriding the scenario")

    def process(self):
        config = self.scenario(self.options.beliefs)
        self.manifest.parameters["beliefs"] = config.beliefs
        res = simulate(config, self.options.samples, self.options.seed, workers=self.options.workers)
        out = {"risk": res.risk, "stderr": res.stderr, "samples": res.samples, "seed": res.seed}
        if config.n_agents <= ENUMERATION_LIMIT:
            out["exact_risk"] = bayes_risk(config)
        self.write_json("simulate.json", out)
        print("simulated risk %.6g +/- %.2g" % (res.risk, res.stderr))
        return res


class PosteriorCurves(AbstractExperiment):
    command = "posterior_curves"
    description = "Posterior belief of the last agent for every decision history"

    def add_options(self, parser):
        parser.add_argument("--agents", type=int, default=4,
                            help="position of the agent in the cascade (default: %(default)s)")

    def process(self):
        grid = probability_grid(self.options.grid_step)
        labels, curves = posterior_curves(grid, self.likelihood1, self.costs, self.options.agents)
        self.write_csv("posterior_curves.csv", ["q"] + labels, numpy.column_stack((grid, curves)))
        return curves


class ConditionMap(AbstractExperiment):
    command = "condition_map"
    description = "Multiplicity condition of the fixed points on a (sigma1, sigma2) grid"
    default_step = 0.05

    def process(self):
        sigmas = closed_grid(0.25, 2.0, self.options.grid_step)
        condition, n_roots = condition_map(sigmas, sigmas, self.costs, self.options.workers)
        s1, s2 = numpy.meshgrid(sigmas, sigmas, indexing="ij")
        self.write_csv("condition_map.csv", ["sigma1", "sigma2", "condition", "n_roots"],
                       numpy.column_stack((s1.ravel(), s2.ravel(), condition.ravel(), n_roots.ravel())))
        return condition, n_roots
