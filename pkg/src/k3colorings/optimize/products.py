"""Maximum products of bounded integer multisets, and their closed-form bounds."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from ..certify.interval import CertValue
from ..errors import BudgetExceeded

MAX_P = 10**4
DEFAULT_WORK = 5 * 10**7


def _table(p: int, L: int, work_budget: int) -> list[list[int]]:
    """``f[c][s]``: best product of at most ``c`` positive factors with sum at most ``s``."""
    L = min(L, p)
    work = L * p * (p + 1) // 2
    if work > work_budget:
        raise BudgetExceeded(f"product table needs about {work} steps", 0)
    f = [[1] * (p + 1)]
    for _ in range(L):
        prev = f[-1]
        cur = prev[:]
        for s in range(1, p + 1):
            best = cur[s]
            for x in range(1, s + 1):
                v = x * prev[s - x]
                if v > best:
                    best = v
            cur[s] = best
        f.append(cur)
    return f


def int_product_max(p: int, L: int, *, work_budget: int = DEFAULT_WORK) -> tuple[int, tuple[int, ...]]:
    """Largest ``x_1 * ... * x_c`` with ``c <= L`` and ``x_1 + ... + x_c <= p``.

    The witness is the lexicographically least nonincreasing optimal multiset.
    """
    if p < 1 or L < 1:
        raise ValueError("p and L must be positive")
    if p > MAX_P:
        raise BudgetExceeded(f"p = {p} exceeds {MAX_P}", 0)
    f = _table(p, L, work_budget)
    c_max = len(f) - 1
    best = f[c_max][p]
    if best == 1:
        return 1, (1,)

    def search(cap: int, c: int, s: int, target: int) -> tuple[int, ...] | None:
        if target == 1:
            return ()
        if c == 0:
            return None
        for x in range(2, min(cap, s) + 1):
            if target % x:
                continue
            rest = target // x
            if f[c - 1][s - x] < rest or x ** (c - 1) < rest:
                continue
            tail = search(x, c - 1, s - x, rest)
            if tail is not None:
                return (x,) + tail
        return None

    witness = search(p, c_max, p, best)
    assert witness is not None
    return best, witness


def c_k_star(k: int, r: int, **kw) -> int:
    _check(k, r)
    return int_product_max(r, k, **kw)[0]


def c_k(k: int, r: int, **kw) -> int:
    _check(k, r)
    return int_product_max(r * (k // 2), comb(k, 2), **kw)[0]


@dataclass(frozen=True)
class CbarValue:
    value: Fraction
    argmax: int

    @property
    def cert(self) -> CertValue:
        return CertValue.exact_value(self.value)


def cbar_k(k: int, r: int) -> CbarValue:
    """``max_j (r/j)^j`` over ``1 <= j <= k``; exact, with the least maximizing ``j``."""
    _check(k, r)
    best = max(range(1, k + 1), key=lambda j: (Fraction(r, j) ** j, -j))
    return CbarValue(Fraction(r, best) ** best, best)


def ctilde_k(k: int, r: int) -> Fraction:
    _check(k, r)
    pairs = comb(k, 2)
    return Fraction(r * (k // 2), pairs) ** pairs


def _check(k: int, r: int) -> None:
    if k < 2 or r < 2:
        raise ValueError("need k >= 2 and r >= 2")
