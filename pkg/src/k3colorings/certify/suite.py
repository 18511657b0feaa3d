"""The named numeric inequalities behind the upper-bound argument, checked one by one.

Each entry is checked three ways: at its printed decimal threshold, at the
caller's ``alpha`` and at a larger probe that must fail.  For thresholds that
truncate a closed-form root, the root itself is enclosed and the printed
decimal is shown to lie strictly below it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from ..errors import PreconditionViolation
from ..optimize.params import a_of_r, b_of_r, floor_r_minus_2sqrt_r, r0_r1
from ..optimize.products import cbar_k
from ..optimize.programs import table1_value
from .interval import MAX_BITS, START_BITS, CertValue, Const, Expr, Verdict, as_expr, certify, decide, exp, log, power, sqrt

Claim = tuple[object, str, object]  # (lhs, "<" or "<=", rhs)

R_UPPER = range(13, 27)
R_ALL = range(2, 27)


@dataclass(frozen=True)
class Certificate:
    name: str
    claim: str
    verdict: Verdict
    bits: int
    expected: Verdict
    threshold: Fraction | None = None
    threshold_verdict: Verdict | None = None
    probe: str | None = None
    probe_verdict: Verdict | None = None
    root: CertValue | None = None
    root_verdict: Verdict | None = None

    @property
    def ok(self) -> bool:
        return (
            self.verdict is self.expected
            and self.threshold_verdict in (None, Verdict.PROVED)
            and self.probe_verdict in (None, Verdict.REFUTED)
            and self.root_verdict in (None, Verdict.PROVED)
        )

    def to_dict(self) -> dict:
        d = {"name": self.name, "claim": self.claim, "verdict": self.verdict.value, "bits": self.bits,
             "expected": self.expected.value, "ok": self.ok}
        if self.threshold is not None:
            d["threshold"] = str(self.threshold)
            d["threshold_verdict"] = self.threshold_verdict.value
        if self.probe is not None:
            d["probe"] = self.probe
            d["probe_verdict"] = self.probe_verdict.value
        if self.root is not None:
            d["root"] = self.root.to_dict()
            d["root_verdict"] = self.root_verdict.value
        return d


def evaluate(claims: Sequence[Claim], max_bits: int = MAX_BITS) -> tuple[Verdict, int]:
    """Conjunction of claims: REFUTED if any fails, PROVED if all hold."""
    bits_used, undecided = 0, False
    for lhs, rel, rhs in claims:
        v, bits = decide(lhs, rel, rhs, max_bits=max_bits)
        bits_used = max(bits_used, bits)
        if v is Verdict.REFUTED:
            return Verdict.REFUTED, bits_used
        undecided |= v is Verdict.UNDECIDED
    return (Verdict.UNDECIDED if undecided else Verdict.PROVED), bits_used


@dataclass(frozen=True)
class _Entry:
    name: str
    claim: str
    build: Callable[[Fraction], list[Claim]]
    threshold: Fraction | None = None
    probe_alpha: Fraction | None = None
    root: Callable[[], Expr] | None = None
    probe_build: Callable[[], list[Claim]] | None = None
    probe_label: str | None = None
    expected: Verdict = Verdict.PROVED


def _ln(x) -> Expr:
    return log(x)


def _entries() -> list[_Entry]:
    F = Fraction
    return [
        _Entry(
            "C-AR", "A(r) < r and 2*r_1 >= r for 13 <= r <= 26",
            lambda a: [c for r in R_UPPER for c in ((a_of_r(r), "<", r), (r, "<=", 2 * r0_r1(r)[1]))],
            probe_build=lambda: [(a_of_r(r), "<=", r - 2) for r in R_UPPER],
            probe_label="A(r) <= r - 2",
        ),
        _Entry(
            "C-B", "(r-1)/r <= r^(-alpha) for 2 <= r <= 26",
            lambda a: [(F(r - 1, r), "<=", power(r, -a)) for r in R_ALL],
            F("0.0118"), F(1, 10), lambda: 1 / (26 * _ln(26)),
        ),
        _Entry(
            "C-M2-13", "6 <= 13^(1-alpha)",
            lambda a: [(6, "<=", power(13, 1 - a))],
            F("0.3014"), F(31, 100), lambda: (_ln(13) - _ln(6)) / _ln(13),
        ),
        _Entry(
            "C-M2-GEN", "r_0 <= r^(1-alpha) for 14 <= r <= 26",
            lambda a: [(r0_r1(r)[0], "<=", power(r, 1 - a)) for r in range(14, 27)],
            F("0.1203"), F(1, 5), lambda: 2 / (sqrt(26) * _ln(26)),
        ),
        _Entry(
            "C-FINAL", "26^alpha (1-2/sqrt26)^(1/4) 3^(1/12) <= 1 and 13^alpha (6/13)^(1/4) 3^(1/12) <= 1",
            lambda a: [
                (power(26, a) * power(1 - 2 / sqrt(26), F(1, 4)) * power(3, F(1, 12)), "<=", 1),
                (power(13, a) * power(F(6, 13), F(1, 4)) * power(3, F(1, 12)), "<=", 1),
            ],
            F("0.0101"), F(2, 100),
            lambda: _min_expr(
                -(_ln(1 - 2 / sqrt(26)) / 4 + _ln(3) / 12) / _ln(26),
                -(_ln(F(6, 13)) / 4 + _ln(3) / 12) / _ln(13),
            ),
        ),
        _Entry(
            "C-K3", "((r/3)^3)^(1/9) <= r^(1/4-alpha) for 13 <= r <= 26",
            lambda a: [(power(F(r, 3), F(1, 3)), "<=", power(r, F(1, 4) - a)) for r in R_UPPER],
            F("0.02906"), F(5, 100), lambda: (4 * _ln(3) - _ln(26)) / (12 * _ln(26)),
        ),
        _Entry(
            "C-K4", "((r/3)^6)^(1/16) <= r^(1/4-alpha) for 13 <= r <= 26",
            lambda a: [(power(F(r, 3), F(6, 16)), "<=", power(r, F(1, 4) - a)) for r in R_UPPER],
            F("0.00144"), F(1, 100), lambda: (3 * _ln(3) - _ln(26)) / (8 * _ln(26)),
        ),
        _Entry(
            "C-K5", "(r/5)^(2/5) < r^(1/4-alpha) for 13 <= r <= 26",
            lambda a: [(power(F(r, 5), F(2, 5)), "<", power(r, F(1, 4) - a)) for r in R_UPPER],
            F("0.04759"), F(1, 10), lambda: (8 * _ln(5) - 3 * _ln(26)) / (20 * _ln(26)),
        ),
        _Entry(
            "C-K6", "(r/5)^(15/36) <= r^(1/4-alpha) for 13 <= r <= 26",
            lambda a: [(power(F(r, 5), F(15, 36)), "<=", power(r, F(1, 4) - a)) for r in R_UPPER],
            F("0.03915"), F(1, 10), lambda: (15 * _ln(5) - 6 * _ln(26)) / (36 * _ln(26)),
        ),
        _Entry(
            "C-W6", "cbar_6(r) < r^(3-12alpha) for 13 <= r <= 26",
            lambda a: [(cbar_k(6, r).value, "<", power(r, 3 - 12 * a)) for r in R_UPPER],
            F("0.0249"), F(5, 100), lambda: (2 * _ln(6) - _ln(26)) / (4 * _ln(26)),
        ),
        _Entry(
            "C-W5", "(r/4)^4 < r^(5/2-10alpha) for 2 <= r <= 26",
            lambda a: [(F(r, 4) ** 4, "<", power(r, F(5, 2) - 10 * a)) for r in R_ALL],
            F("0.0201"), F(5, 100), lambda: (8 * _ln(4) - 3 * _ln(26)) / (20 * _ln(26)),
        ),
        _Entry(
            "C-W4", "(r/3)^3 < r^(2-8alpha) for 2 <= r <= 26",
            lambda a: [(F(r, 3) ** 3, "<", power(r, 2 - 8 * a)) for r in R_ALL],
            F("0.0014"), F(1, 100), lambda: (3 * _ln(3) - _ln(26)) / (8 * _ln(26)),
        ),
        _Entry(
            "C-W4-R27", "(27/3)^3 < 27^(2-8alpha) fails for every alpha > 0",
            lambda a: [(F(27, 3) ** 3, "<", power(27, 2 - 8 * a))],
            expected=Verdict.REFUTED,
        ),
        _Entry(
            "C-SSTAR", "r_0 < (r-4)^2/4 for r >= 13 and (r-4)^2 <= 4 r^(3/2-6alpha) for 13 <= r <= 26",
            lambda a: [(r0_r1(r)[0], "<", F((r - 4) ** 2, 4)) for r in R_UPPER]
            + [(floor_r_minus_2sqrt_r(r), "<", F((r - 4) ** 2, 4)) for r in range(27, 1001)]
            + [((r - 4) ** 2, "<=", 4 * power(r, F(3, 2) - 6 * a)) for r in R_UPPER],
            F("0.0046"), F(1, 100),
            lambda: (_ln(4) - 2 * _ln(F(22, 26)) - _ln(26) / 2) / (6 * _ln(26)),
        ),
        _Entry(
            "C-Q34", "(B(r)/r)^(15/16) r^(1/10^4) <= 1 for 2 <= r <= 26",
            lambda a: _q34(F(1, 10**4)),
            probe_build=lambda: _q34(F(1, 50)),
            probe_label="exponent 1/50 in place of 1/10^4",
        ),
        _Entry(
            "C-PIGEON", "3*floor(r/3) + 3 > r for 2 <= r <= 12",
            lambda a: [(r, "<", 3 * (r // 3) + 3) for r in range(2, 13)],
            probe_build=lambda: [(r, "<", 3 * (r // 3) + 2) for r in range(2, 13)],
            probe_label="3*floor(r/3) + 2 > r",
        ),
        _Entry(
            "C-YR", "Y(r) < r for 6 <= r <= 12",
            lambda a: [(table1_value(r).log().exp_expr(), "<", r) for r in range(6, 13)],
            probe_build=lambda: [(table1_value(r).log().exp_expr(), "<", r - 1) for r in range(6, 13)],
            probe_label="Y(r) < r - 1",
        ),
    ]


def _q34(eps: Fraction) -> list[Claim]:
    out: list[Claim] = []
    for r in R_ALL:
        if r in R_UPPER:
            out.append((b_of_r(r), "<=", r - 1))
            out.append((power(Fraction(b_of_r(r), r), Fraction(15, 16)) * power(r, eps), "<=", 1))
        out.append((power(Fraction(r - 1, r), Fraction(15, 16)) * power(r, eps), "<=",
                    exp(Fraction(-15, 16 * r) + eps * log(r))))
        out.append((Fraction(-15, 16 * r) + eps * log(r), "<=", 0))
    return out


def _min_expr(*exprs: Expr) -> Expr:
    """The least of several expressions, chosen by certified comparison."""
    best = exprs[0]
    for e in exprs[1:]:
        v, _ = decide(e, "<", best)
        if v is Verdict.PROVED:
            best = e
    return best


CERTIFICATE_NAMES = tuple(sorted(s.name for s in _entries()))


def run_certificate_suite(alpha=Fraction(1, 1000), names: Sequence[str] | None = None,
                          max_bits: int = MAX_BITS) -> list[Certificate]:
    alpha = Fraction(alpha)
    if not 0 < alpha <= Fraction(1, 1000):
        raise PreconditionViolation("alpha must lie in (0, 1/1000]")
    specs = sorted(_entries(), key=lambda s: s.name)
    if names is not None:
        unknown = set(names) - {s.name for s in specs}
        if unknown:
            raise KeyError(f"unknown certificates: {sorted(unknown)}")
        specs = [s for s in specs if s.name in names]
    return [_run(s, alpha, max_bits) for s in specs]


def _run(s: _Entry, alpha: Fraction, max_bits: int) -> Certificate:
    verdict, bits = evaluate(s.build(alpha), max_bits)
    kw: dict = {}
    if s.threshold is not None:
        kw["threshold"] = s.threshold
        kw["threshold_verdict"], tb = evaluate(s.build(s.threshold), max_bits)
        bits = max(bits, tb)
    if s.probe_alpha is not None:
        kw["probe"] = f"alpha={s.probe_alpha}"
        kw["probe_verdict"], _ = evaluate(s.build(s.probe_alpha), max_bits)
    elif s.probe_build is not None:
        kw["probe"] = s.probe_label
        kw["probe_verdict"], _ = evaluate(s.probe_build(), max_bits)
    if s.root is not None:
        root = s.root()
        kw["root"] = root.interval(START_BITS)
        kw["root_verdict"], _ = decide(s.threshold, "<", root, max_bits=max_bits)
    return Certificate(s.name, s.claim, verdict, bits, s.expected, **kw)
