"""The two concrete linear programs: the small-r appendix LP and the one for 13 <= r <= 26."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from ..certify.lognum import PowerProduct
from ..errors import RangeError
from .lp import LpProblem, LpSolution, ObjectiveTerm, solve_lp
from .params import r0_r1


def appendix_coefficient(r: int, j: int) -> Fraction:
    return Fraction(comb(r, 2) - comb(r - j, 2), comb(r, 2))


def build_appendix_lp(r: int) -> LpProblem:
    if not 6 <= r <= 12:
        raise RangeError(f"appendix LP defined for 6 <= r <= 12, got {r}")
    js = range(2, r - 3)
    return LpProblem.build(
        [ObjectiveTerm.log(j) for j in js],
        [[appendix_coefficient(r, j) for j in js]],
        [1],
        [f"x{j}" for j in js],
    )


def table1_value(r: int) -> PowerProduct:
    """``Y(r)``: the exponential of the appendix LP optimum, as ``prod j^(x_j)``."""
    return solve_lp(build_appendix_lp(r)).symbolic_optimum()


def build_s1_lp(r: int) -> LpProblem:
    r0, _ = r0_r1(r)
    js = list(range(2, r0 + 1))
    return LpProblem.build(
        [ObjectiveTerm.log(j) for j in js],
        [[1 if j >= 4 else 0 for j in js], [1] * len(js)],
        [Fraction(1, 4), Fraction(1, 3)],
        [f"x{j}" for j in js],
    )


def solve_s1(r: int) -> LpSolution:
    return solve_lp(build_s1_lp(r))
