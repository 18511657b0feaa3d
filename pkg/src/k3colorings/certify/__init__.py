"""Certified interval arithmetic, exact log-linear numbers, and the inequality suite."""

from .bounds import (
    AppendixBound,
    Parameters,
    appendix_bound,
    check_parameters,
    edge_accounting,
    entropy,
    entropy_expr,
    feasible_parameters,
    inside_edges,
    irregular_edges,
    n2_coefficient,
    regularity_bound_log,
    sparse_edges,
)
from .interval import CertValue, Verdict, certify, decide, exp, log, log2, power, prove, sqrt
from .lognum import LogNumber, PowerProduct
from .suite import CERTIFICATE_NAMES, Certificate, evaluate, run_certificate_suite

__all__ = [
    "AppendixBound", "CERTIFICATE_NAMES", "CertValue", "Certificate", "LogNumber", "Parameters",
    "PowerProduct", "Verdict", "appendix_bound", "certify", "check_parameters", "decide",
    "edge_accounting", "entropy", "entropy_expr", "evaluate", "exp", "feasible_parameters",
    "inside_edges", "irregular_edges", "log", "log2", "n2_coefficient", "power", "prove",
    "regularity_bound_log", "run_certificate_suite", "sparse_edges", "sqrt",
]
