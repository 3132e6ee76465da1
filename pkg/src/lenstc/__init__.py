"""Certified bounds for the topological complexity of lens spaces."""

from .bounds import TCBoundReport, tc_report, tc_table, upper_bound
from .cohomology import LensParams, RingElement, TensorElement
from .errors import ConsistencyError
from .padic import alpha_p, binomial_valuation, expand, legendre_valuation

__all__ = [
    "ConsistencyError",
    "LensParams",
    "RingElement",
    "TCBoundReport",
    "TensorElement",
    "alpha_p",
    "binomial_valuation",
    "expand",
    "legendre_valuation",
    "tc_report",
    "tc_table",
    "upper_bound",
]
