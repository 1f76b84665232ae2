"""Combinatorial counts, factorial bounds, and threshold-root analysis.

The quantities here back the gap-counting argument: lattice-tuple counts,
Robbins-refined Stirling bounds on scaled binomials, and the one-root
threshold functions whose positive root separates the n with a provable
prime-count lower bound from the rest.

Transcendental evaluations run in mpmath interval arithmetic and are
converted to CertifiedLog values with outward padding, so every verdict that
leaves this module is backed by a rigorous enclosure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import isqrt
from typing import Callable

from mpmath import iv

from .bigmath import (
    EPS,
    TINY,
    CertifiedLog,
    binomial,
    ln_factorial,
    log_binomial_certified,
    totient_primorial,
)
from .errors import DomainError, NoRootError, PrecisionError, ResourceLimitError
from .primes import PrimeEngine

_DPS_SCHEDULE = (40, 120, 400)


def _iv_eval(builder: Callable[[], "iv.mpf"], dps: int):
    saved = iv.dps
    try:
        iv.dps = dps
        return builder()
    finally:
        iv.dps = saved


def _cert_from_iv(x) -> CertifiedLog:
    """Outward-padded CertifiedLog from an interval."""
    mid = float(x.mid)
    rad = float(x.delta) / 2 * (1 + 8 * EPS) + 2 * EPS * abs(mid) + TINY
    return CertifiedLog(mid, rad)


def _iv_sign(builder: Callable[[], "iv.mpf"]) -> int:
    """Certified sign of an interval expression, escalating precision."""
    for dps in _DPS_SCHEDULE:
        x = _iv_eval(builder, dps)
        if x.a > 0:
            return 1
        if x.b < 0:
            return -1
    raise PrecisionError("interval sign undecided after precision escalation")


def _certified_less(lhs: CertifiedLog, rhs_builder: Callable[[], "iv.mpf"]) -> bool:
    """Decide lhs < rhs where rhs can be re-evaluated at higher precision."""
    for dps in _DPS_SCHEDULE:
        rhs = _cert_from_iv(_iv_eval(rhs_builder, dps))
        if lhs.upper < rhs.lower:
            return True
        if rhs.upper < lhs.lower:
            return False
    raise PrecisionError("certified comparison undecided after escalation")


# ---- lattice tuple counts ----


def count_tuples_closed(k: int, n: int) -> int:
    """Number of k-tuples of nonnegative integers with sum at most n."""
    if k < 0 or n < 0:
        raise DomainError("count_tuples_closed needs k, n >= 0")
    return binomial(n + k, k)


def count_tuples_bruteforce(k: int, n: int) -> int:
    """Count the same tuples by explicit enumeration.

    Deliberately formula-free so it can serve as an oracle; the recursion
    visits one leaf per tuple, so the guard keeps the walk around 10^5 nodes.
    """
    if k < 0 or n < 0:
        raise DomainError("count_tuples_bruteforce needs k, n >= 0")
    if k > 8 or n > 12:
        raise ResourceLimitError("count_tuples_bruteforce guarded to k <= 8, n <= 12")

    def walk(coords: int, budget: int) -> int:
        if coords == 0:
            return 1
        return sum(walk(coords - 1, budget - v) for v in range(budget + 1))

    return walk(k, n)


# ---- Robbins-refined Stirling terms ----


@dataclass(frozen=True)
class RobbinsTerm:
    """gamma_n = ln n! - ln sqrt(2 pi n) - n ln(n/e), with certification.

    inside is True when interval arithmetic proves the strict containment
    1/(12n+1) < gamma_n < 1/(12n). The margins shrink like 1/n^3 on the
    upper side, far below double precision at n near 2000, which is why the
    evaluation is interval-based rather than a compensated float sum.
    """

    n: int
    gamma: float
    err: float
    lower: float
    upper: float
    inside: bool


def robbins_gamma(n: int) -> RobbinsTerm:
    if not 1 <= n <= 10**4:
        raise DomainError("robbins_gamma supported for 1 <= n <= 1e4")

    def build():
        x = iv.mpf(n)
        return iv.loggamma(x + 1) - iv.log(iv.sqrt(2 * iv.pi * x)) - x * (iv.log(x) - 1)

    g = _iv_eval(build, 40)
    lo = _iv_eval(lambda: 1 / iv.mpf(12 * n + 1), 40)
    hi = _iv_eval(lambda: 1 / iv.mpf(12 * n), 40)
    inside = bool(lo.b < g.a and g.b < hi.a)
    cert = _cert_from_iv(g)
    return RobbinsTerm(
        n=n,
        gamma=cert.ln_value,
        err=cert.err,
        lower=1.0 / (12 * n + 1),
        upper=1.0 / (12 * n),
        inside=inside,
    )


# ---- certified integer power floors ----


def _integer_root(x: int, q: int) -> int:
    """Largest r with r^q <= x, exact."""
    if x < 0 or q < 1:
        raise DomainError("_integer_root needs x >= 0, q >= 1")
    if q == 1 or x < 2:
        return x
    if q == 2:
        return isqrt(x)
    r = 1 << -(-x.bit_length() // q)
    while True:
        nxt = ((q - 1) * r + x // r ** (q - 1)) // q
        if nxt >= r:
            break
        r = nxt
    while r ** q > x:
        r -= 1
    while (r + 1) ** q <= x:
        r += 1
    return r


def floor_power(n: int, alpha: float) -> int:
    """Certified floor of n^alpha.

    Floats are exact dyadic rationals, so when the reduced exponent p/q has
    a small numerator the floor is the exact integer q-th root of n^p; this
    covers every case (such as alpha 1.5 at square n) where n^alpha is an
    integer or indistinguishably close to one. Otherwise interval evaluation
    brackets the value and escalates precision until the floor is pinned.
    """
    if n < 1:
        raise DomainError("floor_power needs n >= 1")
    if alpha <= 0:
        raise DomainError("floor_power needs alpha > 0")
    frac = Fraction(alpha)
    p, q = frac.numerator, frac.denominator
    if q == 1:
        return n ** p
    if p * n.bit_length() <= 40000:
        return _integer_root(n ** p, q)
    for dps in (40, 160, 640):
        x = _iv_eval(lambda: iv.exp(iv.mpf(alpha) * iv.log(iv.mpf(n))), dps)
        fl = math.floor(x.a)
        fh = math.floor(x.b)
        if fl == fh:
            return int(fl)
    raise PrecisionError(f"floor of {n}^{alpha} undecided after escalation")


# ---- scaled-binomial upper bounds ----


def stirling_bound_power(
    n: int, alpha: float, dps: int = 40
) -> tuple[CertifiedLog, CertifiedLog]:
    """Certified logs of both sides of the power-form binomial bound.

    lhs is (1/n!) C([n^alpha] + n, n); rhs is the Robbins-derived bound
    e^(2n) (n^(alpha-1) + 1)^n sqrt(3) / (2 n^(n+1) pi). Strict for every
    n >= 1 and alpha in (1, 2]; alpha = 2 is admitted for diagnostics.
    """
    if n < 1:
        raise DomainError("stirling_bound_power needs n >= 1")
    if not 1.0 < alpha <= 2.0:
        raise DomainError("stirling_bound_power needs alpha in (1, 2]")
    a = floor_power(n, alpha)
    lhs = log_binomial_certified(a + n, n) - ln_factorial(n)

    def build():
        x = iv.mpf(n)
        t = iv.exp((iv.mpf(alpha) - 1) * iv.log(x)) + 1
        return (
            2 * x
            + x * iv.log(t)
            + iv.log(iv.sqrt(iv.mpf(3)))
            - iv.log(iv.mpf(2))
            - (x + 1) * iv.log(x)
            - iv.log(iv.pi)
        )

    rhs = _cert_from_iv(_iv_eval(build, dps))
    return lhs, rhs


def stirling_bound_central(n: int, dps: int = 40) -> tuple[CertifiedLog, CertifiedLog]:
    """Certified logs of both sides of the central binomial bound.

    lhs is (1/n!) C(2n, n); rhs is 2^(2n - 1/2) e^n / (n^(n+1) pi). The gap
    decays like 1/n (it equals 3 gamma_n - gamma_2n), so the certified
    radii around 1e-12 still leave orders of magnitude of headroom.
    """
    if n < 1:
        raise DomainError("stirling_bound_central needs n >= 1")
    lhs = log_binomial_certified(2 * n, n) - ln_factorial(n)

    def build():
        x = iv.mpf(n)
        return (2 * x - iv.mpf(1) / 2) * iv.log(iv.mpf(2)) + x - (x + 1) * iv.log(x) - iv.log(iv.pi)

    rhs = _cert_from_iv(_iv_eval(build, dps))
    return lhs, rhs


def _bound_holds(pair_builder: Callable[[int], tuple[CertifiedLog, CertifiedLog]]) -> bool:
    """Certified strict lhs < rhs for a dps-parameterized bound pair."""
    for dps in _DPS_SCHEDULE:
        lhs, rhs = pair_builder(dps)
        if lhs.upper < rhs.lower:
            return True
        if rhs.upper < lhs.lower:
            return False
    raise PrecisionError("bound comparison undecided after precision escalation")


# ---- threshold functions and their positive root ----


class ThresholdForm(Enum):
    """Two normalizations of the same root-threshold equation.

    UNIT has leading coefficient one on the power term; SCALED multiplies
    the power term by e^2 sqrt(3) instead of dividing the linear term. They
    share the stationary point but have different positive roots; UNIT is
    what the gap verifier thresholds on, SCALED is kept for the side-by-side
    profile because the two are easy to conflate.
    """

    UNIT = "unit"
    SCALED = "scaled"


_E2S3 = math.exp(2) * math.sqrt(3)


def eval_threshold(x: float, alpha: float, form: ThresholdForm = ThresholdForm.UNIT) -> float:
    """Threshold function value; positive left of the root, negative right."""
    if x <= 0:
        raise DomainError("eval_threshold needs x > 0")
    if not 1.0 < alpha < 2.0:
        raise DomainError("eval_threshold needs alpha in (1, 2)")
    if form is ThresholdForm.UNIT:
        return x ** (alpha - 1) - (math.pi / _E2S3) * x + 1
    return _E2S3 * x ** (alpha - 1) - math.pi * x + 1


def x1_closed_form(alpha: float) -> float:
    """Stationary point (e^2 sqrt(3) (alpha-1) / pi)^(1/(2-alpha)), shared by both forms."""
    if not 1.0 < alpha < 2.0:
        raise DomainError("x1_closed_form needs alpha in (1, 2)")
    try:
        return (_E2S3 * (alpha - 1) / math.pi) ** (1.0 / (2.0 - alpha))
    except OverflowError as exc:
        raise ResourceLimitError(
            f"stationary point exceeds float range for alpha = {alpha}; "
            "the root grows like exp(c / (2 - alpha))"
        ) from exc


@dataclass(frozen=True)
class AlphaProfile:
    """Root-finding record for one (alpha, form) pair."""

    alpha: float
    form: ThresholdForm
    x1: float
    x0: float
    bracket: tuple[float, float]
    tol: float


def solve_x0(
    alpha: float,
    form: ThresholdForm = ThresholdForm.UNIT,
    tol: float = 1e-9,
) -> AlphaProfile:
    """Bisect for the unique positive root right of the stationary point.

    The function is positive at x1 and strictly decreasing beyond it, so
    doubling finds a sign change and bisection cannot lose the root. The
    loop also stops once the bracket endpoints are adjacent floats, which
    matters when the root is large enough that tol is below one ulp.
    """
    if tol <= 0:
        raise DomainError("solve_x0 needs tol > 0")
    x1 = x1_closed_form(alpha)

    def f(x: float) -> float:
        return eval_threshold(x, alpha, form)

    if not f(x1) > 0:
        raise NoRootError(f"threshold function not positive at stationary point x1={x1}")
    hi = 2 * x1
    while f(hi) > 0:
        hi *= 2
        if hi > 1e300:
            raise NoRootError("no sign change found while doubling the bracket")
    lo = x1
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid
    return AlphaProfile(
        alpha=alpha,
        form=form,
        x1=x1,
        x0=0.5 * (lo + hi),
        bracket=(lo, hi),
        tol=tol,
    )


# ---- the contradiction chain ----


@dataclass(frozen=True)
class ChainLink:
    """One evaluated inequality; holds is None outside the link's domain."""

    name: str
    holds: bool | None
    note: str = ""


@dataclass(frozen=True)
class ChainReport:
    m: int
    alpha: float
    k: int
    power_floor: int
    links: tuple[ChainLink, ...]

    def link(self, name: str) -> ChainLink:
        for item in self.links:
            if item.name == name:
                return item
        raise KeyError(name)


def contradiction_chain(
    m: int,
    alpha: float,
    k: int | None = None,
    engine: PrimeEngine | None = None,
) -> ChainReport:
    """Evaluate each inequality of the counting argument at (m, alpha, k).

    k defaults to [m^alpha] - 1, the largest gap-prime count consistent with
    the hypothesis being contradicted. Links over the integers are decided
    exactly (fractional constants cleared by scaling); transcendental links
    use interval enclosures. Past the threshold root, threshold_positivity
    must come out False, which is the whole point of the argument.
    """
    if m < 1:
        raise DomainError("contradiction_chain needs m >= 1")
    if not 1.0 < alpha <= 2.0:
        raise DomainError("contradiction_chain needs alpha in (1, 2]")
    a = floor_power(m, alpha)
    if k is None:
        k = a - 1
    if k < 0 or k > a - 1:
        raise DomainError("contradiction_chain needs 0 <= k <= [m^alpha] - 1")

    c_mk = binomial(m + k, m)
    phi = totient_primorial(m + 1, engine)
    fact_m = math.factorial(m)
    fact_m1 = math.factorial(m + 1)

    links = [
        ChainLink(
            "tuple_count_vs_totient",
            c_mk >= phi,
            "C(m+k, m) >= phi(primorial(m+1))",
        ),
        ChainLink(
            "totient_factorial_bound",
            (4 * phi >= 2**m * fact_m1) if m >= 3 else None,
            "phi(primorial(m+1)) >= 2^(m-2) (m+1)!, stated for m >= 3",
        ),
        ChainLink(
            "combined_lower_bound",
            2**m * (m + 1) * fact_m <= 4 * c_mk,
            "2^(m-2) (m+1) <= C(m+k, m) / m!",
        ),
    ]

    monotone = binomial(m + k, m) < binomial(a + m, m)
    links.append(
        ChainLink(
            "stirling_upper_bound",
            monotone and _bound_holds(lambda dps: stirling_bound_power(m, alpha, dps)),
            "C(m+k, m)/m! below the power-form bound via monotonicity in k",
        )
    )

    def weak_root():
        x = iv.mpf(m)
        al = iv.mpf(alpha)
        rhs = (2 / iv.exp(iv.mpf(2))) * iv.exp(
            iv.log(x * (x + 1) * iv.pi / (2 * iv.sqrt(iv.mpf(3)))) / x
        ) * x
        return iv.exp((al - 1) * iv.log(x)) + 1 - rhs

    links.append(
        ChainLink(
            "root_inequality_weak",
            _iv_sign(weak_root) > 0,
            "m^(alpha-1) + 1 > (2/e^2) (m(m+1)pi / (2 sqrt 3))^(1/m) m",
        )
    )

    def positivity():
        x = iv.mpf(m)
        al = iv.mpf(alpha)
        return iv.exp((al - 1) * iv.log(x)) + 1 - iv.pi * x / (iv.exp(iv.mpf(2)) * iv.sqrt(iv.mpf(3)))

    links.append(
        ChainLink(
            "threshold_positivity",
            _iv_sign(positivity) > 0,
            "m^(alpha-1) + 1 - pi m / (e^2 sqrt 3) > 0; False past the root",
        )
    )

    links.append(
        ChainLink(
            "central_variant_bound",
            2**m * (m + 1) * fact_m <= 2 * binomial(2 * m, m),
            "2^(m-2) (m+1) <= (1/2) C(2m, m) / m!",
        )
    )

    return ChainReport(m=m, alpha=alpha, k=k, power_floor=a, links=tuple(links))
