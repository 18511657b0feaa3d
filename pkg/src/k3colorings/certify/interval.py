"""Certified real arithmetic on small expression trees.

Expressions are built from exact rationals with ``+ - * /``, powers, ``log``,
``exp`` and ``sqrt``.  Evaluation goes through mpmath's interval context,
which rounds every endpoint outward, so the returned enclosure always holds
the true value.  Rational-only subtrees are also evaluated exactly, and
comparisons use the exact value whenever both sides have one.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

import mpmath
from mpmath import iv, libmp

from ..errors import DomainError, PrecisionExhausted

START_BITS = 64
MAX_BITS = 1024

Number = Union[int, Fraction]

_prec_lock = threading.RLock()


class _precision:
    """Set ``iv.prec`` for a block; the interval context is process-global."""

    def __init__(self, bits: int):
        self.bits = bits

    def __enter__(self):
        _prec_lock.acquire()
        self.saved = iv.prec
        iv.prec = self.bits

    def __exit__(self, *exc):
        iv.prec = self.saved
        _prec_lock.release()


def _to_fraction(x) -> Fraction | float:
    t = x._mpi_[0] if hasattr(x, "_mpi_") else x._mpf_
    if t == libmp.finf:
        return float("inf")
    if t == libmp.fninf:
        return float("-inf")
    p, q = libmp.to_rational(t)
    return Fraction(int(p), int(q))


def _lo(v):
    return _to_fraction(v.a)


def _hi(v):
    return _to_fraction(v.b)


def _iv_const(q: Fraction):
    if q.denominator == 1:
        return iv.mpf(q.numerator)
    return iv.mpf(q.numerator) / iv.mpf(q.denominator)


class Expr:
    """Node of a real-valued expression; subclasses implement ``_iv`` and ``exact``."""

    def _iv(self):
        raise NotImplementedError

    def exact(self) -> Fraction | None:
        return None

    def interval(self, bits: int = START_BITS) -> "CertValue":
        with _precision(bits):
            v = self._iv()
        return CertValue(_to_fraction(v.a), _to_fraction(v.b), bits, self)

    def __add__(self, other):
        return BinOp("+", self, as_expr(other))

    def __radd__(self, other):
        return BinOp("+", as_expr(other), self)

    def __sub__(self, other):
        return BinOp("-", self, as_expr(other))

    def __rsub__(self, other):
        return BinOp("-", as_expr(other), self)

    def __mul__(self, other):
        return BinOp("*", self, as_expr(other))

    def __rmul__(self, other):
        return BinOp("*", as_expr(other), self)

    def __truediv__(self, other):
        return BinOp("/", self, as_expr(other))

    def __rtruediv__(self, other):
        return BinOp("/", as_expr(other), self)

    def __pow__(self, other):
        return Pow(self, as_expr(other))

    def __rpow__(self, other):
        return Pow(as_expr(other), self)

    def __neg__(self):
        return BinOp("-", Const(0), self)


def as_expr(x) -> Expr:
    if isinstance(x, Expr):
        return x
    if isinstance(x, (int, Fraction)):
        return Const(Fraction(x))
    if isinstance(x, str):
        return Const(Fraction(x))
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or decimal string")
    raise TypeError(f"cannot build an expression from {type(x).__name__}")


@dataclass(frozen=True, eq=False)
class Const(Expr):
    value: Fraction

    def _iv(self):
        return _iv_const(self.value)

    def exact(self):
        return self.value

    def __str__(self):
        return str(self.value)


_OPS = {
    "+": lambda a, b: a + b,
    "-": lambda a, b: a - b,
    "*": lambda a, b: a * b,
    "/": lambda a, b: a / b,
}


@dataclass(frozen=True, eq=False)
class BinOp(Expr):
    op: str
    a: Expr
    b: Expr

    def _iv(self):
        if self.op == "/":
            d = self.b._iv()
            if _lo(d) <= 0 <= _hi(d):
                raise DomainError(f"division by an interval containing zero: {self.b}")
            return self.a._iv() / d
        return _OPS[self.op](self.a._iv(), self.b._iv())

    def exact(self):
        x, y = self.a.exact(), self.b.exact()
        if x is None or y is None:
            return None
        if self.op == "/" and y == 0:
            raise DomainError("division by zero")
        return _OPS[self.op](x, y)

    def __str__(self):
        return f"({self.a} {self.op} {self.b})"


@dataclass(frozen=True, eq=False)
class Pow(Expr):
    base: Expr
    exponent: Expr

    def _iv(self):
        e = self.exponent.exact()
        if e is not None and e.denominator == 1:
            return self.base._iv() ** int(e)
        b = self.base._iv()
        if _lo(b) <= 0:
            if self.base.exact() == 0 and e is not None and e > 0:
                return iv.mpf(0)
            raise DomainError(f"non-integer power of a base not known positive: {self.base}")
        return iv.exp(self.exponent._iv() * iv.log(b))

    def exact(self):
        b, e = self.base.exact(), self.exponent.exact()
        if b is None or e is None or e.denominator != 1:
            return None
        if b == 0 and e < 0:
            raise DomainError("zero to a negative power")
        return b ** int(e)

    def __str__(self):
        return f"{self.base}^{self.exponent}"


@dataclass(frozen=True, eq=False)
class Func(Expr):
    name: str
    arg: Expr

    def _iv(self):
        x = self.arg._iv()
        if self.name == "log":
            if _hi(x) <= 0:
                raise DomainError(f"log of a nonpositive value: {self.arg}")
            return iv.log(x)
        if self.name == "exp":
            return iv.exp(x)
        if self.name == "sqrt":
            if _hi(x) < 0:
                raise DomainError(f"sqrt of a negative value: {self.arg}")
            return iv.sqrt(x)
        raise ValueError(self.name)

    def exact(self):
        x = self.arg.exact()
        if x is None:
            return None
        if self.name == "log" and x == 1:
            return Fraction(0)
        if self.name == "exp" and x == 0:
            return Fraction(1)
        if self.name == "sqrt":
            r = _exact_sqrt(x)
            return r
        return None

    def __str__(self):
        return f"{self.name}({self.arg})"


def _exact_sqrt(x: Fraction) -> Fraction | None:
    from math import isqrt

    if x < 0:
        raise DomainError("sqrt of a negative value")
    p, q = x.numerator, x.denominator
    sp, sq = isqrt(p), isqrt(q)
    if sp * sp == p and sq * sq == q:
        return Fraction(sp, sq)
    return None


def const(x) -> Expr:
    return as_expr(x)


def power(base, exponent) -> Expr:
    return Pow(as_expr(base), as_expr(exponent))


def log(x) -> Expr:
    return Func("log", as_expr(x))


def exp(x) -> Expr:
    return Func("exp", as_expr(x))


def sqrt(x) -> Expr:
    return Func("sqrt", as_expr(x))


def log2(x) -> Expr:
    return log(x) / log(2)


@dataclass(frozen=True)
class CertValue:
    """Enclosure ``lo <= value <= hi`` at ``bits`` of working precision."""

    lo: Fraction | float
    hi: Fraction | float
    bits: int
    expr: Expr | None = field(default=None, compare=False, repr=False)

    @classmethod
    def exact_value(cls, q: Number) -> "CertValue":
        q = Fraction(q)
        return cls(q, q, 0, Const(q))

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self):
        return self.hi - self.lo

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def refine(self, bits: int | None = None) -> "CertValue":
        """Re-evaluate at higher precision, intersected with the current enclosure."""
        if self.expr is None or self.is_exact:
            return self
        bits = bits or 2 * max(self.bits, START_BITS)
        new = self.expr.interval(bits)
        return CertValue(max(self.lo, new.lo), min(self.hi, new.hi), bits, self.expr)

    def mid(self) -> float:
        """Midpoint as a float (may be ``inf`` for huge enclosures)."""
        m = (Fraction(self.lo) + Fraction(self.hi)) / 2
        try:
            return float(m)
        except OverflowError:
            return float("inf") if m > 0 else float("-inf")

    def to_dict(self) -> dict:
        return {"lo": _fmt(self.lo), "hi": _fmt(self.hi), "bits": self.bits}

    def __str__(self):
        return f"[{_short(self.lo)}, {_short(self.hi)}]"


def _short(x) -> str:
    if isinstance(x, float):
        return str(x)
    return mpmath.nstr(mpmath.mpf(x.numerator) / x.denominator, 12)


def _fmt(x) -> str:
    if isinstance(x, float):
        return str(x)
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def certify(x, bits: int = START_BITS) -> CertValue:
    """Enclosure of ``x``; exact when the expression is rational."""
    e = as_expr(x)
    q = e.exact()
    if q is not None:
        return CertValue(q, q, 0, e)
    return e.interval(bits)


class Verdict(enum.Enum):
    PROVED = "PROVED"
    REFUTED = "REFUTED"
    UNDECIDED = "UNDECIDED"


def decide(lhs, rel: str, rhs, start_bits: int = START_BITS, max_bits: int = MAX_BITS) -> tuple[Verdict, int]:
    """Decide ``lhs rel rhs`` for ``rel`` in ``<``, ``<=``; returns the verdict and bits used.

    Precision doubles from ``start_bits`` to ``max_bits``.  Ties between
    transcendental values can only be settled when both sides are exact.
    """
    if rel not in ("<", "<="):
        raise ValueError("rel must be '<' or '<='")
    a, b = as_expr(lhs), as_expr(rhs)
    qa, qb = a.exact(), b.exact()
    if qa is not None and qb is not None:
        holds = qa < qb if rel == "<" else qa <= qb
        return (Verdict.PROVED if holds else Verdict.REFUTED), 0
    bits = start_bits
    while bits <= max_bits:
        x, y = a.interval(bits), b.interval(bits)
        if x.hi < y.lo:
            return Verdict.PROVED, bits
        if (rel == "<=" and x.lo > y.hi) or (rel == "<" and x.lo >= y.hi):
            return Verdict.REFUTED, bits
        bits *= 2
    return Verdict.UNDECIDED, max_bits


def prove(lhs, rel: str, rhs, **kw) -> tuple[Verdict, int]:
    """Like ``decide`` but raises ``PrecisionExhausted`` instead of returning UNDECIDED."""
    v, bits = decide(lhs, rel, rhs, **kw)
    if v is Verdict.UNDECIDED:
        raise PrecisionExhausted(f"could not decide {as_expr(lhs)} {rel} {as_expr(rhs)} at {bits} bits")
    return v, bits
