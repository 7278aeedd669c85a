version = "0.1.0"
date = "2026-10"
import sys, logging
logging.basicConfig()

if sys.version_info < (3, 8):
    logger = logging.getLogger("pyCBT.__init__")
    logger.error("pyCBT requires a python version >= 3.8")
    raise RuntimeError("pyCBT requires a python version >= 3.8, now we are running: %s" % sys.version)
from .cascade import CascadeConfig, AgentSpec, bayes_risk
from .likelihoods import CostModel, GaussianLikelihood
load = CascadeConfig.load
