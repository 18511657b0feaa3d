"""Exact linear programs and integer product maximization."""

from .lp import LpProblem, LpSolution, ObjectiveTerm, Status, solve_lp, verify_optimality
from .params import a_of_r, b_of_r, floor_r_minus_2sqrt_r, r0_r1
from .products import CbarValue, c_k, c_k_star, cbar_k, ctilde_k, int_product_max
from .programs import appendix_coefficient, build_appendix_lp, build_s1_lp, solve_s1, table1_value

__all__ = [
    "CbarValue", "LpProblem", "LpSolution", "ObjectiveTerm", "Status",
    "a_of_r", "appendix_coefficient", "b_of_r", "build_appendix_lp", "build_s1_lp",
    "c_k", "c_k_star", "cbar_k", "ctilde_k", "floor_r_minus_2sqrt_r", "int_product_max",
    "r0_r1", "solve_lp", "solve_s1", "table1_value", "verify_optimality",
]
