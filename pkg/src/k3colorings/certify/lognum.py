"""Exact numbers of the form ``q0 + sum_p q_p * ln(p)`` over primes ``p``.

Logarithms of distinct primes are linearly independent over the rationals
(and independent of 1), so such a number is zero exactly when every
coefficient is zero.  Nonzero signs are found with interval evaluation at
increasing precision, which always terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from ..errors import PrecisionExhausted
from .interval import MAX_BITS, START_BITS, CertValue, Const, Expr, as_expr, exp, log


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    if n < 1:
        raise ValueError("factorize needs a positive integer")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            k = 0
            while n % d == 0:
                n //= d
                k += 1
            out.append((d, k))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@dataclass(frozen=True)
class LogNumber:
    rational: Fraction
    logs: tuple[tuple[int, Fraction], ...]  # sorted (prime, coefficient), no zeros

    @classmethod
    def make(cls, rational=0, logs: Mapping[int, Fraction] | Iterable = ()) -> "LogNumber":
        items = logs.items() if isinstance(logs, Mapping) else logs
        acc: dict[int, Fraction] = {}
        for p, c in items:
            acc[p] = acc.get(p, Fraction(0)) + Fraction(c)
        return cls(Fraction(rational), tuple(sorted((p, c) for p, c in acc.items() if c)))

    @classmethod
    def zero(cls) -> "LogNumber":
        return cls(Fraction(0), ())

    @classmethod
    def log_of(cls, x, coeff=1) -> "LogNumber":
        """``coeff * ln(x)`` for a positive rational ``x``."""
        x = Fraction(x)
        if x <= 0:
            raise ValueError("log of a nonpositive number")
        c = Fraction(coeff)
        terms = [(p, c * k) for p, k in factorize(x.numerator)]
        terms += [(p, -c * k) for p, k in factorize(x.denominator)]
        return cls.make(0, terms)

    def __add__(self, other: "LogNumber | int | Fraction") -> "LogNumber":
        other = _lift(other)
        return LogNumber.make(self.rational + other.rational, list(self.logs) + list(other.logs))

    __radd__ = __add__

    def __neg__(self) -> "LogNumber":
        return LogNumber(-self.rational, tuple((p, -c) for p, c in self.logs))

    def __sub__(self, other) -> "LogNumber":
        return self + (-_lift(other))

    def __rsub__(self, other) -> "LogNumber":
        return _lift(other) - self

    def __mul__(self, k) -> "LogNumber":
        k = Fraction(k)
        return LogNumber.make(self.rational * k, [(p, c * k) for p, c in self.logs])

    __rmul__ = __mul__

    def __truediv__(self, k) -> "LogNumber":
        return self * (1 / Fraction(k))

    def is_zero(self) -> bool:
        return self.rational == 0 and not self.logs

    def is_rational(self) -> bool:
        return not self.logs

    def to_expr(self) -> Expr:
        e: Expr = Const(self.rational)
        for p, c in self.logs:
            e = e + Const(c) * log(p)
        return e

    def exp_expr(self) -> Expr:
        """``exp(self)``, kept exact when the result is rational."""
        e: Expr = exp(self.rational) if self.rational else Const(Fraction(1))
        for p, c in self.logs:
            e = e * (as_expr(p) ** Const(c))
        return e

    def interval(self, bits: int = START_BITS) -> CertValue:
        if self.is_rational():
            return CertValue.exact_value(self.rational)
        return self.to_expr().interval(bits)

    def sign(self, max_bits: int = 1 << 14) -> int:
        if self.is_zero():
            return 0
        if self.is_rational():
            return 1 if self.rational > 0 else -1
        bits = START_BITS
        while bits <= max_bits:
            v = self.to_expr().interval(bits)
            if v.lo > 0:
                return 1
            if v.hi < 0:
                return -1
            bits *= 2
        raise PrecisionExhausted(f"sign of {self} unresolved at {max_bits} bits")

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        return self.interval(START_BITS).mid()

    def __str__(self):
        parts = [str(self.rational)] if self.rational or not self.logs else []
        parts += [f"{c}*ln{p}" for p, c in self.logs]
        return " + ".join(parts)


def _lift(x) -> LogNumber:
    if isinstance(x, LogNumber):
        return x
    return LogNumber(Fraction(x), ())


@dataclass(frozen=True)
class PowerProduct:
    """Symbolic ``prod base^exp`` with the factors kept as written (for display)."""

    factors: tuple[tuple[int, Fraction], ...]

    @classmethod
    def of(cls, factors: Iterable[tuple[int, Fraction]]) -> "PowerProduct":
        return cls(tuple((int(b), Fraction(e)) for b, e in factors if Fraction(e) != 0))

    def log(self) -> LogNumber:
        total = LogNumber.zero()
        for b, e in self.factors:
            total = total + LogNumber.log_of(b, e)
        return total

    def value(self, bits: int = START_BITS) -> CertValue:
        expr = self.log().exp_expr()
        q = expr.exact()
        return CertValue.exact_value(q) if q is not None else expr.interval(bits)

    def equals(self, other: "PowerProduct") -> bool:
        """Exact equality of the represented reals (via prime-exponent vectors)."""
        return (self.log() - other.log()).is_zero()

    def to_json(self) -> list[dict]:
        return [{"base": b, "exp": _q(e)} for b, e in self.factors]

    def __str__(self):
        if not self.factors:
            return "1"
        return " * ".join(f"{b}^{e}" if e.denominator == 1 else f"{b}^({e})" for b, e in self.factors)


def _q(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"
