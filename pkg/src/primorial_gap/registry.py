"""Registry of prime and primorial inequalities, with range verification.

Each spec wraps one classical inequality as a total predicate on n. Scans
decide every n with a certified comparison: big quantities are ordered in
log space with rigorous radii, and any contact between the intervals forces
an exact big-integer comparison, so a reported verdict is never a rounding
artifact. Specs carry two thresholds: claimed_from is the bound asserted in
the literature (None when only existence is claimed, or when our own scan
refutes the published bound), while the observed onset comes out of verify()
as first_hold_onward.
"""

from __future__ import annotations

import math
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from mpmath import iv

from .bigmath import (
    EPS,
    TINY,
    CertifiedLog,
    PrimorialLogs,
    binomial,
    compare_certified,
    log_binomial_certified,
    log_certified,
)
from .bounds import ThresholdForm, floor_power, solve_x0, _iv_eval
from .errors import DomainError, PrecisionError, ResourceLimitError
from .primes import PrimeEngine, default_engine

_STAT_KEYS = ("pi_fast_calls", "exact_fallbacks", "sieve_extensions")


@dataclass(frozen=True)
class InequalitySpec:
    """One verifiable inequality family indexed by n."""

    id: str
    description: str
    claimed_from: int | None
    feasible_max: int
    predicate: Callable[[int], bool]
    min_n: int = 1
    prepare: Callable[[int], None] | None = field(default=None, repr=False)
    context: "RegistryContext" = field(default=None, repr=False, compare=False)


@dataclass
class VerificationReport:
    id: str
    range_checked: tuple[int, int]
    all_hold: bool
    failures: list[int]
    first_hold_onward: int | None
    elapsed: float
    engine_stats: dict[str, int]
    detail: dict | None = None
    status: str = "ok"

    def to_json_dict(self) -> dict:
        doc = {
            "id": self.id,
            "range": [self.range_checked[0], self.range_checked[1]],
            "all_hold": self.all_hold,
            "failures": list(self.failures),
            "first_hold_onward": self.first_hold_onward,
            "elapsed_ms": round(self.elapsed * 1000.0, 3),
            "engine": {k: int(self.engine_stats.get(k, 0)) for k in _STAT_KEYS},
            "status": self.status,
        }
        if self.detail is not None:
            doc["detail"] = self.detail
        return doc


class RegistryContext:
    """Shared engine access, certified-log tables, and fallback counters."""

    def __init__(self, engine: PrimeEngine):
        self.engine = engine
        self.counters: Counter = Counter()
        self._logs: PrimorialLogs | None = None
        self._prim_n = 0
        self._prim_value = 1
        self._tot_n = 0
        self._tot_value = 1

    def need(self, index: int) -> None:
        if index > self.engine.table.count:
            self.engine.nth_prime(index)

    def prime(self, index: int) -> int:
        self.need(index)
        return int(self.engine.table.primes[index - 1])

    def logs(self, index: int) -> PrimorialLogs:
        if self._logs is None or self._logs.size < index:
            self.need(index)
            size = min(self.engine.table.count, max(index, 2 * (self._logs.size if self._logs else 0)))
            self._logs = PrimorialLogs(self.engine.table.primes[:size])
        return self._logs

    def theta(self, n: int) -> CertifiedLog:
        return self.logs(n).theta(n)

    def log_prime(self, index: int) -> CertifiedLog:
        return self.logs(index).log_prime(index)

    def primorial_exact(self, n: int) -> int:
        """Incremental product; ascending scans extend one prime at a time."""
        if n < 1:
            raise DomainError("primorial_exact needs n >= 1")
        if n < self._prim_n:
            self._prim_n, self._prim_value = 0, 1
        while self._prim_n < n:
            self._prim_n += 1
            self._prim_value *= self.prime(self._prim_n)
        return self._prim_value

    def totient_exact(self, n: int) -> int:
        if n < 1:
            raise DomainError("totient_exact needs n >= 1")
        if n < self._tot_n:
            self._tot_n, self._tot_value = 0, 1
        while self._tot_n < n:
            self._tot_n += 1
            self._tot_value *= self.prime(self._tot_n) - 1
        return self._tot_value

    def theta_interval(self, n: int, dps: int):
        """High-precision ln primorial for rare near-tie escalations."""
        self.need(n)
        primes = self.engine.table.primes[:n]

        def build():
            total = iv.mpf(0)
            for p in primes:
                total += iv.log(iv.mpf(int(p)))
            return total

        return _iv_eval(build, dps)

    def pi_small(self, x: int) -> int:
        return self.engine.pi_exact(x)


def _float_cert(value: float, ulps: float = 8.0) -> CertifiedLog:
    """CertifiedLog around a float computed in a few operations."""
    return CertifiedLog(value, ulps * EPS * abs(value) + TINY)


def _less(ctx: RegistryContext, a: CertifiedLog, b: CertifiedLog, ea, eb) -> bool:
    return compare_certified(a, b, ea, eb, ctx.counters) < 0


def _less_refined(
    ctx: RegistryContext,
    a: CertifiedLog,
    b: CertifiedLog,
    refine: Callable[[int], tuple[CertifiedLog, CertifiedLog]],
) -> bool:
    """Strict a < b where no exact integers exist; escalate precision on contact."""
    if a.upper < b.lower:
        return True
    if b.upper < a.lower:
        return False
    ctx.counters["exact_fallbacks"] += 1
    for dps in (80, 240):
        a2, b2 = refine(dps)
        if a2.upper < b2.lower:
            return True
        if b2.upper < a2.lower:
            return False
    raise PrecisionError("comparison undecided after precision escalation")


def _cert_from_iv_local(x) -> CertifiedLog:
    mid = float(x.mid)
    return CertifiedLog(mid, float(x.delta) / 2 * (1 + 8 * EPS) + 2 * EPS * abs(mid) + TINY)


def registry(engine: PrimeEngine | None = None) -> list[InequalitySpec]:
    """Build the full spec list bound to one engine and counter context."""
    engine = engine or default_engine()
    ctx = RegistryContext(engine)
    specs: list[InequalitySpec] = []

    def add(spec_id, description, claimed_from, feasible_max, predicate, min_n=1, prepare=None):
        specs.append(
            InequalitySpec(
                id=spec_id,
                description=description,
                claimed_from=claimed_from,
                feasible_max=feasible_max,
                predicate=predicate,
                min_n=min_n,
                prepare=prepare,
                context=ctx,
            )
        )

    # ---- primorial dominance family ----

    def power_vs_primorial(n: int, k: int) -> bool:
        lp = ctx.log_prime(n + 1).scaled(k)
        return _less(
            ctx,
            lp,
            ctx.theta(n),
            lambda: ctx.prime(n + 1) ** k,
            lambda: ctx.primorial_exact(n),
        )

    add(
        "bonse2",
        "Bonse: p_{n+1}^2 < p_1 ... p_n",
        4,
        2000,
        lambda n: power_vs_primorial(n, 2),
        prepare=lambda hi: ctx.logs(hi + 1),
    )
    add(
        "bonse3",
        "Bonse: p_{n+1}^3 < p_1 ... p_n",
        5,
        2000,
        lambda n: power_vs_primorial(n, 3),
        prepare=lambda hi: ctx.logs(hi + 1),
    )
    add(
        "dalezman",
        "Dalezman: p_{n+1} p_{n+2} < p_1 ... p_n",
        4,
        2000,
        lambda n: _less(
            ctx,
            ctx.log_prime(n + 1) + ctx.log_prime(n + 2),
            ctx.theta(n),
            lambda: ctx.prime(n + 1) * ctx.prime(n + 2),
            lambda: ctx.primorial_exact(n),
        ),
        prepare=lambda hi: ctx.logs(hi + 2),
    )
    for kk in range(2, 7):
        add(
            f"posa_k{kk}",
            f"Posa: p_{{n+1}}^{kk} < p_1 ... p_n from some onset n_k",
            None,
            2000,
            lambda n, kk=kk: power_vs_primorial(n, kk),
            prepare=lambda hi: ctx.logs(hi + 1),
        )
    add(
        "panaitopol_form",
        "Posa improved form at the extremal admissible k: p_{n+1}^[n/2] < p_1 ... p_n",
        2,
        2000,
        lambda n: power_vs_primorial(n, n // 2) if n >= 2 else True,
        prepare=lambda hi: ctx.logs(hi + 1),
    )
    add(
        "mamangakis",
        "Mamangakis: p_{4n} < p_1 ... p_n",
        11,
        10**6,
        lambda n: _less(
            ctx,
            ctx.log_prime(4 * n),
            ctx.theta(n),
            lambda: ctx.prime(4 * n),
            lambda: ctx.primorial_exact(n),
        ),
        prepare=lambda hi: ctx.logs(4 * hi),
    )
    add(
        "gupta_khare",
        "Gupta-Khare: C(n^2, n) < p_1 ... p_n",
        1794,
        2000,
        lambda n: _less(
            ctx,
            log_binomial_certified(n * n, n),
            ctx.theta(n),
            lambda: binomial(n * n, n),
            lambda: ctx.primorial_exact(n),
        ),
        prepare=lambda hi: ctx.logs(hi),
    )
    add(
        "robin",
        "Robin: n^n < p_1 ... p_n",
        13,
        2000,
        lambda n: _less(
            ctx,
            _float_cert(n * math.log(n), 4.0) if n > 1 else CertifiedLog(0.0, 0.0),
            ctx.theta(n),
            lambda: n**n,
            lambda: ctx.primorial_exact(n),
        ),
        prepare=lambda hi: ctx.logs(hi),
    )
    add(
        "panaitopol",
        "Panaitopol: p_{n+1}^(n - pi(n)) < p_1 ... p_n",
        2,
        2000,
        lambda n: _less(
            ctx,
            ctx.log_prime(n + 1).scaled(n - ctx.pi_small(n)),
            ctx.theta(n),
            lambda: ctx.prime(n + 1) ** (n - ctx.pi_small(n)),
            lambda: ctx.primorial_exact(n),
        ),
        prepare=lambda hi: ctx.logs(hi + 1),
    )

    def hassani_pred(n: int) -> bool:
        if n < 2:
            return False
        expo = (1.0 - 1.0 / math.log(n)) * (n - ctx.pi_small(n))
        v = expo * ctx.log_prime(n + 1).ln_value
        lhs = CertifiedLog(v, 8 * EPS * abs(v) + TINY)

        def refine(dps):
            def build():
                x = iv.mpf(n)
                e = (1 - 1 / iv.log(x)) * (n - ctx.pi_small(n))
                return e * iv.log(iv.mpf(ctx.prime(n + 1)))

            return _cert_from_iv_local(_iv_eval(build, dps)), _cert_from_iv_local(
                ctx.theta_interval(n, dps)
            )

        return _less_refined(ctx, lhs, ctx.theta(n), refine)

    add(
        "hassani",
        "Hassani: p_{n+1}^((1 - 1/log n)(n - pi(n))) < p_1 ... p_n",
        101,
        2000,
        hassani_pred,
        min_n=2,
        prepare=lambda hi: ctx.logs(hi + 1),
    )
    add(
        "zhang",
        "Zhang: 2^(p_{n+1}) < p_1 ... p_n",
        10,
        2000,
        lambda n: _less(
            ctx,
            _float_cert(ctx.prime(n + 1) * math.log(2.0), 4.0),
            ctx.theta(n),
            lambda: 2 ** ctx.prime(n + 1),
            lambda: ctx.primorial_exact(n),
        ),
        prepare=lambda hi: ctx.logs(hi + 1),
    )

    # ---- additive and squared variants ----

    def sandor_sum_pred(n: int) -> bool:
        if n < 2:
            return False
        pn = ctx.prime(n)
        q = ctx.prime(pn - 2)
        # P_{n-1} + p_n + q <= P_n rearranged to avoid the larger product
        return pn + q <= ctx.primorial_exact(n - 1) * (pn - 1)

    add(
        "sandor_sum",
        "Sandor: p_1...p_{n-1} + p_n + p_(p_n - 2) <= p_1 ... p_n",
        3,
        2000,
        sandor_sum_pred,
        min_n=2,
        prepare=lambda hi: ctx.need(max(ctx.prime(hi) - 2, hi)),
    )

    def sandor_sq_pred(n: int) -> bool:
        if n < 2:
            return False
        lhs = ctx.prime(n + 5) ** 2 + ctx.prime(n // 2) ** 2
        return _less(
            ctx,
            log_certified(lhs),
            ctx.theta(n),
            lambda: lhs,
            lambda: ctx.primorial_exact(n),
        )

    add(
        "sandor_sq",
        "Sandor: p_{n+5}^2 + p_[n/2]^2 < p_1 ... p_n",
        24,
        2000,
        sandor_sq_pred,
        min_n=2,
        prepare=lambda hi: ctx.logs(hi + 5),
    )
    add(
        "remark_pn2",
        "Index-squaring gap: p_(n^2) < p_n^2",
        5,
        1000,
        lambda n: ctx.prime(n * n) < ctx.prime(n) ** 2,
        prepare=lambda hi: ctx.need(hi * hi),
    )

    def remark_2pn2_pred(n: int) -> bool:
        if n == 1:
            return True
        lhs = log_certified(2 * ctx.prime(n) ** 2)
        v = math.log(ctx.prime(n * n)) + math.log(math.log(n))
        rhs = CertifiedLog(v, 8 * EPS * (abs(v) + 1.0) + TINY)

        def refine(dps):
            def build():
                return iv.log(iv.mpf(ctx.prime(n * n))) + iv.log(iv.log(iv.mpf(n)))

            return _cert_from_iv_local(_iv_eval(build, dps)), None

        if rhs.upper < lhs.lower:
            return True
        if lhs.upper < rhs.lower:
            return False
        ctx.counters["exact_fallbacks"] += 1
        for dps in (80, 240):
            r2, _ = refine(dps)
            if r2.upper < lhs.lower:
                return True
            if lhs.upper < r2.lower:
                return False
        raise PrecisionError("remark_2pn2 undecided after escalation")

    add(
        "remark_2pn2",
        "Index-squaring gap: 2 p_n^2 > p_(n^2) log n",
        1,
        1020,
        remark_2pn2_pred,
        prepare=lambda hi: ctx.need(hi * hi),
    )

    # ---- growth of p_n itself ----

    def rosser_lower_pred(n: int) -> bool:
        if n == 1:
            return True
        lhs = log_certified(ctx.prime(n))
        v = math.log(n) + math.log(math.log(n))
        rhs = CertifiedLog(v, 8 * EPS * (abs(v) + 1.0) + TINY)

        def refine(dps):
            def build():
                return iv.log(iv.mpf(n)) + iv.log(iv.log(iv.mpf(n)))

            return _cert_from_iv_local(_iv_eval(build, dps)), lhs

        if rhs.upper < lhs.lower:
            return True
        if lhs.upper < rhs.lower:
            return False
        ctx.counters["exact_fallbacks"] += 1
        for dps in (80, 240):
            r2, _ = refine(dps)
            if r2.upper < lhs.lower:
                return True
            if lhs.upper < r2.lower:
                return False
        raise PrecisionError("rosser_lower undecided after escalation")

    add(
        "rosser_lower",
        "Rosser: p_n > n log n",
        1,
        10**6,
        rosser_lower_pred,
        prepare=lambda hi: ctx.need(hi),
    )

    def rosser_window_pred(n: int) -> bool:
        if n < 2:
            return False
        ratio = ctx.prime(n) / n
        w = math.log(n) + math.log(math.log(n))
        lo_margin = ratio - (w - 1.5)
        hi_margin = (w - 0.5) - ratio
        band = 64 * EPS * (abs(w) + abs(ratio) + 1.0)
        if min(lo_margin, hi_margin) > band:
            return True
        if lo_margin < -band or hi_margin < -band:
            return False
        ctx.counters["exact_fallbacks"] += 1

        def build():
            x = iv.mpf(n)
            wiv = iv.log(x) + iv.log(iv.log(x))
            riv = iv.mpf(ctx.prime(n)) / n
            return (riv - (wiv - iv.mpf(3) / 2), (wiv - iv.mpf(1) / 2) - riv)

        for dps in (80, 240):
            lo_iv, hi_iv = _iv_eval(build, dps)
            if lo_iv.a > 0 and hi_iv.a > 0:
                return True
            if lo_iv.b < 0 or hi_iv.b < 0:
                return False
        raise PrecisionError("rosser_window undecided after escalation")

    add(
        "rosser_window",
        "Two-sided window: log n + log log n - 3/2 < p_n / n < log n + log log n - 1/2 "
        "(published onset 6 is refuted by the scan; see first_hold_onward)",
        None,
        10**6,
        rosser_window_pred,
        min_n=2,
        prepare=lambda hi: ctx.need(hi),
    )

    def mono_pred(n: int) -> bool:
        if n < 2:
            return False
        a = ctx.prime(n + 1) * math.log(n)
        b = ctx.prime(n) * math.log(n + 1)
        band = 16 * EPS * max(abs(a), abs(b))
        if a - b > band:
            return True
        if b - a > band:
            return False
        ctx.counters["exact_fallbacks"] += 1

        def build():
            return iv.mpf(ctx.prime(n + 1)) * iv.log(iv.mpf(n)) - iv.mpf(
                ctx.prime(n)
            ) * iv.log(iv.mpf(n + 1))

        return _iv_eval(build, 80).a > 0

    add(
        "pn_logn_mono",
        "p_n / log n is strictly increasing",
        2,
        10**6,
        mono_pred,
        min_n=2,
        prepare=lambda hi: ctx.need(hi + 1),
    )
    add(
        "euler_totient",
        "phi(p_1 ... p_n) >= 2^(n-1)",
        1,
        2000,
        lambda n: ctx.totient_exact(n) >= 2 ** (n - 1),
        prepare=lambda hi: ctx.need(hi),
    )

    # ---- gap-counting results ----

    def linear_count(n: int) -> int:
        big = ctx.primorial_exact(n + 1)
        return engine.pi_fast(big - 1) - (n + 1)

    add(
        "theorem_linear",
        "At least n primes lie strictly between p_{n+1} and p_1 ... p_{n+1}",
        1,
        11,
        lambda n: linear_count(n) >= n,
        prepare=lambda hi: ctx.need(hi + 1),
    )

    alpha_default = 1.1
    profile = solve_x0(alpha_default, ThresholdForm.UNIT)
    alpha_onset = int(math.floor(profile.bracket[1])) + 1
    add(
        "theorem_alpha",
        f"At least [n^{alpha_default}] primes lie strictly between p_{{n+1}} and "
        f"p_1 ... p_{{n+1}}, claimed past the threshold root x0",
        alpha_onset,
        11,
        lambda n: linear_count(n) >= floor_power(n, alpha_default),
        prepare=lambda hi: ctx.need(hi + 1),
    )

    return specs


def get_spec(spec_id: str, engine: PrimeEngine | None = None) -> InequalitySpec:
    for spec in registry(engine):
        if spec.id == spec_id:
            return spec
    raise DomainError(f"unknown inequality spec id: {spec_id}")


def verify(
    spec: InequalitySpec | str,
    lo: int,
    hi: int,
    engine: PrimeEngine | None = None,
    deadline: float | None = None,
) -> VerificationReport:
    """Scan the predicate over [lo, hi] and report failures and onset.

    first_hold_onward is the least m in the range such that the predicate
    holds from m through hi (None when hi itself fails). A deadline (absolute
    perf_counter value) aborts the scan and yields a skipped report rather
    than a silently truncated one.
    """
    if isinstance(spec, str):
        spec = get_spec(spec, engine)
    if lo < 1 or hi < lo:
        raise DomainError(f"invalid range [{lo}, {hi}]")
    if hi > spec.feasible_max:
        raise ResourceLimitError(
            f"{spec.id} is feasible up to n = {spec.feasible_max}, requested {hi}"
        )
    ctx = spec.context
    stats_before = Counter(ctx.engine.stats) + Counter(ctx.counters)
    start = time.perf_counter()
    if spec.prepare is not None:
        spec.prepare(hi)
    failures: list[int] = []
    last_fail = None
    for n in range(lo, hi + 1):
        if deadline is not None and (n - lo) % 1024 == 0 and time.perf_counter() > deadline:
            return VerificationReport(
                id=spec.id,
                range_checked=(lo, hi),
                all_hold=False,
                failures=[],
                first_hold_onward=None,
                elapsed=time.perf_counter() - start,
                engine_stats=dict(
                    (Counter(ctx.engine.stats) + Counter(ctx.counters)) - stats_before
                ),
                detail={"reason": "budget exhausted before completing the range"},
                status="skipped",
            )
        if not spec.predicate(n):
            failures.append(n)
            last_fail = n
    elapsed = time.perf_counter() - start
    if last_fail is None:
        onset = lo
    elif last_fail < hi:
        onset = last_fail + 1
    else:
        onset = None
    stats_delta = (Counter(ctx.engine.stats) + Counter(ctx.counters)) - stats_before
    return VerificationReport(
        id=spec.id,
        range_checked=(lo, hi),
        all_hold=not failures,
        failures=failures,
        first_hold_onward=onset,
        elapsed=elapsed,
        engine_stats=dict(stats_delta),
    )


def verify_theorem_linear(
    n_max: int, engine: PrimeEngine | None = None
) -> VerificationReport:
    """Exact gap counts for the linear lower bound, n = 1 .. n_max.

    The count of primes strictly between p_{n+1} and the (n+1)-th primorial
    P is pi(P - 1) - (n + 1); the claim is count >= n for every n >= 1.
    """
    engine = engine or default_engine()
    if not 1 <= n_max <= 11:
        raise ResourceLimitError("theorem_linear counts are feasible for n_max in [1, 11]")
    from .bigmath import primorial

    stats_before = Counter(engine.stats)
    start = time.perf_counter()
    counts: dict[int, int] = {}
    failures = []
    for n in range(1, n_max + 1):
        big = primorial(n + 1, engine)
        counts[n] = engine.pi_fast(big - 1) - (n + 1)
        if counts[n] < n:
            failures.append(n)
    elapsed = time.perf_counter() - start
    last_fail = failures[-1] if failures else None
    return VerificationReport(
        id="theorem_linear",
        range_checked=(1, n_max),
        all_hold=not failures,
        failures=failures,
        first_hold_onward=(
            1 if last_fail is None else (last_fail + 1 if last_fail < n_max else None)
        ),
        elapsed=elapsed,
        engine_stats=dict(Counter(engine.stats) - stats_before),
        detail={"counts": {str(k): v for k, v in counts.items()}, "required": {
            str(k): k for k in counts
        }},
    )


def verify_theorem_alpha(
    alpha: float,
    n_max: int,
    engine: PrimeEngine | None = None,
    tol: float = 1e-9,
) -> VerificationReport:
    """Gap counts against the [n^alpha] bound for n past the threshold root.

    Only n strictly beyond the root x0 of the unit-form threshold function
    carry a claim; the onset is computed conservatively from the upper end
    of the bisection bracket. When no n in [1, n_max] clears it, the report
    says so explicitly instead of pretending an empty scan verified anything.
    """
    engine = engine or default_engine()
    if not 1 <= n_max <= 11:
        raise ResourceLimitError("theorem_alpha counts are feasible for n_max in [1, 11]")
    if not 1.0 < alpha < 2.0:
        raise DomainError("theorem_alpha needs alpha in (1, 2)")
    from .bigmath import primorial

    stats_before = Counter(engine.stats)
    start = time.perf_counter()
    profile = solve_x0(alpha, ThresholdForm.UNIT, tol=tol)
    onset = int(math.floor(profile.bracket[1])) + 1
    checkable = [n for n in range(1, n_max + 1) if n >= onset]
    counts: dict[int, int] = {}
    required: dict[int, int] = {}
    failures = []
    for n in checkable:
        big = primorial(n + 1, engine)
        counts[n] = engine.pi_fast(big - 1) - (n + 1)
        required[n] = floor_power(n, alpha)
        if counts[n] < required[n]:
            failures.append(n)
    elapsed = time.perf_counter() - start
    detail = {
        "alpha": alpha,
        "x0": profile.x0,
        "x0_bracket": [profile.bracket[0], profile.bracket[1]],
        "claim_onset": onset,
        "vacuous": not checkable,
        "counts": {str(k): v for k, v in counts.items()},
        "required": {str(k): v for k, v in required.items()},
    }
    if not checkable:
        detail["note"] = "no n in range exceeds the threshold root; nothing to check"
    last_fail = failures[-1] if failures else None
    return VerificationReport(
        id="theorem_alpha",
        range_checked=(1, n_max),
        all_hold=not failures,
        failures=failures,
        first_hold_onward=(
            (checkable[0] if checkable else None)
            if last_fail is None
            else (last_fail + 1 if last_fail < n_max else None)
        ),
        elapsed=elapsed,
        engine_stats=dict(Counter(engine.stats) - stats_before),
        detail=detail,
    )


def run_suite(
    engine: PrimeEngine | None = None,
    budget_secs: float = 300.0,
    spec_ids: list[str] | None = None,
) -> list[VerificationReport]:
    """Verify every spec over its full feasible range within a time budget.

    Specs whose turn arrives after the budget ran out, or whose scan hits
    the deadline midway, are reported with status skipped, never silently
    truncated.
    """
    engine = engine or default_engine()
    specs = registry(engine)
    if spec_ids is not None:
        known = {s.id: s for s in specs}
        missing = [sid for sid in spec_ids if sid not in known]
        if missing:
            raise DomainError(f"unknown inequality spec ids: {missing}")
        specs = [known[sid] for sid in spec_ids]
    deadline = time.perf_counter() + budget_secs
    reports = []
    for spec in specs:
        if time.perf_counter() > deadline:
            reports.append(
                VerificationReport(
                    id=spec.id,
                    range_checked=(1, spec.feasible_max),
                    all_hold=False,
                    failures=[],
                    first_hold_onward=None,
                    elapsed=0.0,
                    engine_stats={},
                    detail={"reason": "suite budget exhausted before this spec started"},
                    status="skipped",
                )
            )
            continue
        reports.append(verify(spec, 1, spec.feasible_max, engine, deadline=deadline))
    return reports
