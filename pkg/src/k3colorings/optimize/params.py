"""The integer thresholds r_0, r_1, A(r), B(r) for 13 <= r <= 26."""

from __future__ import annotations

from math import isqrt

from ..errors import InvariantViolation, RangeError

R_MIN, R_MAX = 13, 26


def _check(r: int) -> None:
    if not R_MIN <= r <= R_MAX:
        raise RangeError(f"r must lie in [{R_MIN}, {R_MAX}], got {r}")


def floor_r_minus_2sqrt_r(r: int) -> int:
    """``floor(r - 2*sqrt(r))`` in integer arithmetic.

    ``k <= r - 2 sqrt(r)`` iff ``(r - k)^2 >= 4r`` with ``r - k >= 0``, so the
    answer is ``r - ceil(sqrt(4r))``.
    """
    if r < 1:
        raise ValueError("r must be positive")
    return r - (isqrt(4 * r - 1) + 1)


def r0_r1(r: int) -> tuple[int, int]:
    _check(r)
    r0 = 6 if r == 13 else floor_r_minus_2sqrt_r(r)
    return r0, r0 + 1


def a_of_r(r: int) -> int:
    _, r1 = r0_r1(r)
    d = r - r1
    value = (d // 2) * (-(-d // 2))
    if not value < r:
        raise InvariantViolation(f"A({r}) = {value} is not below r")
    if not 2 * r1 >= r:
        raise InvariantViolation(f"2*r_1 < r at r = {r}")
    return value


def b_of_r(r: int) -> int:
    r0, _ = r0_r1(r)
    return max(r0, a_of_r(r))
