"""Parameter conditions and bound formulas, evaluated with certified intervals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from ..errors import DomainError, Infeasible, PreconditionViolation, RangeError
from ..graph import ex_k3
from .interval import START_BITS, CertValue, Const, Expr, Verdict, as_expr, certify, decide, log, log2
from .lognum import LogNumber, PowerProduct

ALPHA = Fraction(1, 1000)
BIG = 10**4


def entropy_expr(x) -> Expr:
    """Binary entropy as an expression; exact at 0, 1/2 and 1."""
    q = Fraction(x) if not isinstance(x, Expr) else x.exact()
    if q is not None:
        if not 0 <= q <= 1:
            raise DomainError(f"entropy needs 0 <= x <= 1, got {q}")
        if q in (0, 1):
            return Const(Fraction(0))
        if q == Fraction(1, 2):
            return Const(Fraction(1))
    x = as_expr(x)
    return -(x * log2(x)) - (1 - x) * log2(1 - x)


def entropy(x, bits: int = START_BITS) -> CertValue:
    return certify(entropy_expr(Fraction(x)), bits)


# parameter choice


@dataclass(frozen=True)
class Parameters:
    alpha: Fraction
    xi: Fraction
    eta: Fraction
    checks: tuple[tuple[str, Verdict], ...]

    @property
    def ok(self) -> bool:
        return all(v is Verdict.PROVED for _, v in self.checks)

    def to_dict(self) -> dict:
        return {
            "alpha": _q(self.alpha), "xi": _q(self.xi), "eta": _q(self.eta),
            "checks": {name: v.value for name, v in self.checks},
        }


def check_parameters(delta, r: int, alpha, xi, eta, start_bits: int = START_BITS) -> tuple[tuple[str, Verdict], ...]:
    """Verdict for each of the four parameter conditions (plus the entropy-domain side condition)."""
    delta, alpha, xi, eta = (Fraction(v) for v in (delta, alpha, xi, eta))
    out = [
        ("alpha", Verdict.PROVED if alpha == ALPHA else Verdict.REFUTED),
        ("xi<delta/22", decide(xi, "<", delta / 22)[0]),
        ("eta<delta/(2r)", decide(eta, "<", delta / (2 * r))[0]),
    ]
    x = (r + 1) * eta
    if not 0 < x <= 1:
        out.append(("(r+1)eta in (0,1]", Verdict.REFUTED))
        out.append(("xi>entropy bound", Verdict.REFUTED))
        return tuple(out)
    out.append(("(r+1)eta in (0,1]", Verdict.PROVED))
    rhs = BIG * entropy_expr(x) + (BIG + 1) * x
    out.append(("xi>entropy bound", decide(rhs, "<", xi, start_bits=start_bits, max_bits=max(1024, start_bits))[0]))
    return tuple(out)


def feasible_parameters(delta, r: int, *, refine_steps: int = 24, max_halvings: int = 400) -> Parameters:
    """``alpha = 1/1000``, ``xi = delta/23`` and a dyadic ``eta`` meeting every condition.

    ``eta`` is halved from ``delta/(4r)`` until the entropy condition
    certifies, then bisected towards the first failing value.
    """
    delta = Fraction(delta)
    if delta <= 0:
        raise PreconditionViolation("delta must be positive")
    if not 2 <= r <= 26:
        raise PreconditionViolation("r must lie in [2, 26]")
    xi = delta / 23

    def good(eta: Fraction) -> bool:
        return all(v is Verdict.PROVED for _, v in check_parameters(delta, r, ALPHA, xi, eta))

    hi = delta / (2 * r)  # excluded by strictness
    lo = hi / 2
    for _ in range(max_halvings):
        if good(lo):
            break
        hi, lo = lo, lo / 2
    else:
        raise Infeasible("no admissible eta found")
    for _ in range(refine_steps):
        mid = (lo + hi) / 2
        if good(mid):
            lo = mid
        else:
            hi = mid
    return Parameters(ALPHA, xi, lo, check_parameters(delta, r, ALPHA, xi, lo))


# the regularity-based upper bound and its edge accounting


def irregular_edges(r: int, eps, m: int, n: int) -> Fraction:
    return r * Fraction(eps) * comb(m, 2) * Fraction(n, m) ** 2


def inside_edges(m: int, n: int) -> Fraction:
    return m * Fraction(n, m) ** 2


def sparse_edges(r: int, eta, m: int, n: int) -> Fraction:
    return r * Fraction(eta) * comb(m, 2) * Fraction(n, m) ** 2


def edge_accounting(r: int, eps, eta, m: int, n: int) -> dict[str, bool]:
    """Exact checks of each link in the three edge-count chains."""
    eps, eta = Fraction(eps), Fraction(eta)
    n2 = n * n
    irr, ins, sp = irregular_edges(r, eps, m, n), inside_edges(m, n), sparse_edges(r, eta, m, n)
    return {
        "irregular<=r*eps*n^2": irr <= r * eps * n2,
        "r*eps*n^2<=r*eta/2*n^2": r * eps * n2 <= r * eta / 2 * n2,
        "inside==n^2/m": ins == Fraction(n2, m),
        "n^2/m<=eps*n^2": Fraction(n2, m) <= eps * n2,
        "eps*n^2<=eta/2*n^2": eps <= eta / 2,
        "sparse<=r*eta/2*n^2": sp <= r * eta / 2 * n2,
        "total<=(r+1)*eta*n^2": irr + ins + sp <= (r + 1) * eta * n2,
    }


def _log_expr(x) -> Expr:
    if isinstance(x, LogNumber):
        return x.to_expr()
    return as_expr(x)


def n2_coefficient(r: int, eta, max_c_log, bits: int = START_BITS) -> CertValue:
    """Coefficient of ``n^2`` in the base-``r`` log of the regularity bound."""
    x = (r + 1) * Fraction(eta)
    lnr = log(r)
    e = entropy_expr(x) * log(2) / lnr + x + _log_expr(max_c_log) / lnr
    return certify(e, bits)


def regularity_bound_log(n: int, M: int, r: int, eta, max_c_log, bits: int = START_BITS) -> CertValue:
    """``log_r`` of ``M^n 2^(rM^2/2) 2^(H((r+1)eta) n^2) r^((r+1)eta n^2) (max c)^(n^2)``.

    ``max_c_log`` is the natural log of ``max c(H)``.
    """
    if min(n, M, r) <= 0 or Fraction(eta) <= 0:
        raise PreconditionViolation("all inputs must be positive")
    x = (r + 1) * Fraction(eta)
    lnr, ln2 = log(r), log(2)
    e = (
        n * log(M) / lnr
        + Fraction(r * M * M, 2) * ln2 / lnr
        + entropy_expr(x) * (n * n) * ln2 / lnr
        + x * (n * n)
        + _log_expr(max_c_log) * (n * n) / lnr
    )
    return certify(e, bits)


# the small-r appendix bound


@dataclass(frozen=True)
class AppendixBound:
    r: int
    xi: Fraction
    m: int
    product: PowerProduct
    value: CertValue
    below_turan: bool

    def to_dict(self) -> dict:
        return {"r": self.r, "xi": _q(self.xi), "m": self.m, "product": self.product.to_json(),
                "value": self.value.to_dict(), "below_turan": self.below_turan}


def appendix_bound(r: int, xi, m: int, bits: int = START_BITS) -> AppendixBound:
    """``Y(r)^(xi m^2) * r^(ex(m,K3) - xi m^2)`` and whether it is below ``r^ex(m,K3)``."""
    from ..optimize.programs import table1_value

    if not 6 <= r <= 12:
        raise RangeError(f"appendix bound defined for 6 <= r <= 12, got {r}")
    xi = Fraction(xi)
    if xi < 0:
        raise PreconditionViolation("xi must be nonnegative")
    y = table1_value(r)
    w = xi * m * m
    ex = ex_k3(m)
    prod = PowerProduct.of([(b, e * w) for b, e in y.factors] + [(r, ex - w)])
    gap = prod.log() - LogNumber.log_of(r, ex)
    below = gap.sign() < 0
    if xi > 0 and not below:
        raise AssertionError("bound not below r^ex(m,K3) although xi > 0")
    return AppendixBound(r, xi, m, prod, prod.value(bits), below)


def _q(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"
