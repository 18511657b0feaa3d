"""Exact two-phase simplex for small LPs ``max c.x  s.t.  A x <= b, x >= 0``.

Constraint data are rationals.  Objective coefficients are ``LogNumber``s
(a rational plus rational multiples of logarithms), so reduced-cost signs are
decided exactly: zero is detected symbolically and nonzero signs by certified
intervals.  Pivoting follows Bland's smallest-index rule.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..certify.lognum import LogNumber, PowerProduct
from ..errors import DimensionLimit, Infeasible, Unbounded

MAX_DIM = 64


class Status(enum.Enum):
    OPTIMAL = "OPTIMAL"
    INFEASIBLE = "INFEASIBLE"
    UNBOUNDED = "UNBOUNDED"


@dataclass(frozen=True)
class ObjectiveTerm:
    """``rational + sum(mult * ln(base))`` for one variable."""

    rational: Fraction = Fraction(0)
    logs: tuple[tuple[int, Fraction], ...] = ()

    @classmethod
    def log(cls, base: int, mult=1) -> "ObjectiveTerm":
        return cls(Fraction(0), ((base, Fraction(mult)),))

    @classmethod
    def const(cls, q) -> "ObjectiveTerm":
        return cls(Fraction(q), ())

    def value(self) -> LogNumber:
        total = LogNumber.make(self.rational)
        for b, m in self.logs:
            total = total + LogNumber.log_of(b, m)
        return total


@dataclass(frozen=True)
class LpProblem:
    objective: tuple[ObjectiveTerm, ...]
    rows: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        n = len(self.objective)
        if any(len(row) != n for row in self.rows):
            raise ValueError("every constraint row needs one coefficient per variable")
        if len(self.rhs) != len(self.rows):
            raise ValueError("one right-hand side per row")
        if not self.names:
            object.__setattr__(self, "names", tuple(f"x{k}" for k in range(n)))

    @classmethod
    def build(cls, objective: Sequence[ObjectiveTerm], rows, rhs, names=()) -> "LpProblem":
        return cls(
            tuple(objective),
            tuple(tuple(Fraction(a) for a in row) for row in rows),
            tuple(Fraction(b) for b in rhs),
            tuple(names),
        )

    @property
    def num_vars(self) -> int:
        return len(self.objective)

    def to_json(self) -> dict:
        return {
            "names": list(self.names),
            "objective": [
                {"rational": _q(t.rational), "logs": [{"base": b, "mult": _q(m)} for b, m in t.logs]}
                for t in self.objective
            ],
            "rows": [[_q(a) for a in row] for row in self.rows],
            "rhs": [_q(b) for b in self.rhs],
        }

    @classmethod
    def from_json(cls, d: dict | str) -> "LpProblem":
        d = json.loads(d) if isinstance(d, str) else d
        obj = [
            ObjectiveTerm(Fraction(t["rational"]), tuple((int(x["base"]), Fraction(x["mult"])) for x in t["logs"]))
            for t in d["objective"]
        ]
        return cls.build(obj, [[Fraction(a) for a in row] for row in d["rows"]], [Fraction(b) for b in d["rhs"]], d.get("names", ()))


@dataclass(frozen=True)
class LpSolution:
    status: Status
    values: tuple[Fraction, ...] = ()
    optimum: LogNumber | None = None
    duals: tuple[LogNumber, ...] = ()
    problem: LpProblem | None = field(default=None, repr=False, compare=False)
    pivots: int = 0

    def value_of(self, name: str) -> Fraction:
        return self.values[self.problem.names.index(name)]

    def symbolic_optimum(self) -> PowerProduct:
        """``exp(optimum)`` as ``prod base^(mult * x)`` over the log terms (rational parts dropped)."""
        factors = []
        for x, term in zip(self.values, self.problem.objective):
            if x:
                factors.extend((b, m * x) for b, m in term.logs)
        return PowerProduct.of(factors)

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "values": {n: _q(v) for n, v in zip(self.problem.names, self.values) if v} if self.values else {},
            "optimum": str(self.optimum) if self.optimum is not None else None,
            "symbolic": self.symbolic_optimum().to_json() if self.values else [],
        }


def _q(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _pivot(T: list[list[Fraction]], rhs: list[Fraction], row: int, col: int) -> None:
    p = T[row][col]
    T[row] = [a / p for a in T[row]]
    rhs[row] /= p
    for i in range(len(T)):
        if i != row and T[i][col]:
            f = T[i][col]
            T[i] = [a - f * b for a, b in zip(T[i], T[row])]
            rhs[i] -= f * rhs[row]


def _simplex(T, rhs, basis, costs: list[LogNumber], allowed: list[bool], max_pivots: int) -> int:
    """Bland's rule on an already feasible tableau; mutates in place, returns pivot count."""
    pivots = 0
    ncols = len(costs)
    while True:
        entering = None
        for j in range(ncols):
            if not allowed[j] or j in basis:
                continue
            rc = costs[j]
            for i, b in enumerate(basis):
                if T[i][j]:
                    rc = rc - costs[b] * T[i][j]
            if rc.sign() > 0:
                entering = j
                break
        if entering is None:
            return pivots
        leave, best = None, None
        for i in range(len(T)):
            if T[i][entering] > 0:
                ratio = rhs[i] / T[i][entering]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:
            raise Unbounded(f"objective unbounded along column {entering}")
        _pivot(T, rhs, leave, entering)
        basis[leave] = entering
        pivots += 1
        if pivots > max_pivots:
            raise RuntimeError("pivot limit reached")


def _solve_dual(problem: LpProblem, basis: list[int], costs: list[LogNumber]) -> tuple[LogNumber, ...]:
    """Solve ``y^T B = c_B`` against the original ``[A | I]`` columns."""
    m, n = len(problem.rows), problem.num_vars

    def column(j: int) -> list[Fraction]:
        if j < n:
            return [problem.rows[i][j] for i in range(m)]
        return [Fraction(1 if i == j - n else 0) for i in range(m)]

    # rows of B^T are the basic columns
    M = [column(j) for j in basis]
    rhs: list[LogNumber] = [costs[j] for j in basis]
    for c in range(m):
        piv = next(r for r in range(c, m) if M[r][c] != 0)
        M[c], M[piv] = M[piv], M[c]
        rhs[c], rhs[piv] = rhs[piv], rhs[c]
        p = M[c][c]
        M[c] = [a / p for a in M[c]]
        rhs[c] = rhs[c] / p
        for r in range(m):
            if r != c and M[r][c]:
                f = M[r][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
                rhs[r] = rhs[r] - rhs[c] * f
    return tuple(rhs)


def solve_lp(problem: LpProblem, *, max_pivots: int = 10_000) -> LpSolution:
    m, n = len(problem.rows), problem.num_vars
    if n > MAX_DIM or m > MAX_DIM:
        raise DimensionLimit(f"LP limited to {MAX_DIM} variables and rows")
    if n == 0:
        return LpSolution(Status.OPTIMAL, (), LogNumber.zero(), (), problem)

    # columns: x_0..x_{n-1}, slacks s_0..s_{m-1}, artificials
    T: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    basis: list[int] = []
    art_rows = [i for i in range(m) if problem.rhs[i] < 0]
    ncols = n + m + len(art_rows)
    for i in range(m):
        row = list(problem.rows[i]) + [Fraction(1 if k == i else 0) for k in range(m)] + [Fraction(0)] * len(art_rows)
        b = problem.rhs[i]
        if b < 0:
            row = [-a for a in row]
            b = -b
            a_col = n + m + art_rows.index(i)
            row[a_col] = Fraction(1)
            basis.append(a_col)
        else:
            basis.append(n + i)
        T.append(row)
        rhs.append(b)

    pivots = 0
    if art_rows:
        phase1 = [LogNumber.zero()] * (n + m) + [LogNumber.make(-1)] * len(art_rows)
        pivots += _simplex(T, rhs, basis, phase1, [True] * ncols, max_pivots)
        infeas = sum((rhs[i] for i, b in enumerate(basis) if b >= n + m), Fraction(0))
        if infeas > 0:
            raise Infeasible("no point satisfies all constraints")
        # drive degenerate artificials out of the basis
        for i, b in enumerate(basis):
            if b >= n + m:
                j = next((j for j in range(n + m) if T[i][j] != 0 and j not in basis), None)
                if j is not None:
                    _pivot(T, rhs, i, j)
                    basis[i] = j
        keep = [i for i, b in enumerate(basis) if b < n + m]
        T = [T[i][: n + m] for i in keep]
        rhs = [rhs[i] for i in keep]
        basis = [basis[i] for i in keep]

    costs = [t.value() for t in problem.objective] + [LogNumber.zero()] * m
    pivots += _simplex(T, rhs, basis, costs, [True] * (n + m), max_pivots)

    x = [Fraction(0)] * (n + m)
    for i, b in enumerate(basis):
        x[b] = rhs[i]
    values = tuple(x[:n])
    optimum = LogNumber.zero()
    for v, c in zip(values, costs):
        if v:
            optimum = optimum + c * v
    if len(basis) == m:
        duals = _solve_dual(problem, basis, costs)
    else:
        duals = ()
    return LpSolution(Status.OPTIMAL, values, optimum, duals, problem, pivots)


def verify_optimality(problem: LpProblem, sol: LpSolution) -> bool:
    """Independent check: primal feasible, dual feasible, equal objective values."""
    x, y = sol.values, sol.duals
    if any(v < 0 for v in x):
        return False
    for row, b in zip(problem.rows, problem.rhs):
        if sum((a * v for a, v in zip(row, x)), Fraction(0)) > b:
            return False
    if len(y) != len(problem.rows):
        return False
    if any(yi.sign() < 0 for yi in y):
        return False
    costs = [t.value() for t in problem.objective]
    for j in range(problem.num_vars):
        lhs = LogNumber.zero()
        for i, row in enumerate(problem.rows):
            if row[j]:
                lhs = lhs + y[i] * row[j]
        if (lhs - costs[j]).sign() < 0:
            return False
    primal = LogNumber.zero()
    for v, c in zip(x, costs):
        primal = primal + c * v
    dual = LogNumber.zero()
    for yi, b in zip(y, problem.rhs):
        dual = dual + yi * b
    return (primal - dual).is_zero()
