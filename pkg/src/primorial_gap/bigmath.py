"""Exact big-integer products and certified logarithm arithmetic.

Big naturals are plain Python ints (arbitrary precision built in); they
round-trip through decimal strings for serialization. Inequalities between
numbers too large to compare digit by digit are decided in log space with a
tracked error radius, falling back to exact integer comparison whenever the
log intervals touch, so a verdict is never wrong by rounding.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError, ResourceLimitError
from .primes import PrimeEngine, default_engine

# One unit of relative float error, used in all documented bounds below.
EPS = 2.0 ** -52
# Absolute floor added to every radius so zero-magnitude results stay safe.
TINY = 1e-300

PRIMORIAL_CAP = 10**5


@dataclass(frozen=True)
class CertifiedLog:
    """A natural log with a rigorous absolute error radius.

    The true value lies in [ln_value - err, ln_value + err]. Arithmetic
    helpers correspond to operations on the underlying positive reals:
    adding CertifiedLogs multiplies them, subtracting divides, scaling
    raises to a power. Every float operation inflates the radius by an
    ulp-sized pad so the invariant survives rounding.
    """

    ln_value: float
    err: float

    @property
    def lower(self) -> float:
        return self.ln_value - self.err

    @property
    def upper(self) -> float:
        return self.ln_value + self.err

    def __add__(self, other: "CertifiedLog") -> "CertifiedLog":
        v = self.ln_value + other.ln_value
        return CertifiedLog(v, self.err + other.err + EPS * abs(v) + TINY)

    def __sub__(self, other: "CertifiedLog") -> "CertifiedLog":
        v = self.ln_value - other.ln_value
        return CertifiedLog(v, self.err + other.err + EPS * abs(v) + TINY)

    def scaled(self, k: float) -> "CertifiedLog":
        # k is treated as exact (integer counts and dyadic floats are).
        v = k * self.ln_value
        return CertifiedLog(v, abs(k) * self.err + EPS * abs(v) + TINY)


def log_certified(x: int) -> CertifiedLog:
    """Certified natural log of a positive integer.

    Limb-wise scaling: write x = m * 2^shift with m holding the top 53 bits,
    so ln x = ln m + shift * ln 2 + d where 0 <= d = ln(x / (m 2^shift)) <
    1/m <= 2^-52. The radius charges 2 ulp for libm's log, 2 ulp for the
    ln 2 constant and its product, 1 ulp for the final add, plus d.
    """
    if x <= 0:
        raise DomainError("log_certified needs a positive integer")
    if x == 1:
        return CertifiedLog(0.0, 0.0)
    bits = x.bit_length()
    if bits <= 53:
        v = math.log(x)
        return CertifiedLog(v, 2 * EPS * abs(v) + TINY)
    shift = bits - 53
    m = x >> shift
    lead = math.log(m)
    scaled = shift * math.log(2)
    v = lead + scaled
    err = 2 * EPS * lead + 2 * EPS * scaled + EPS * v + 2.3e-16
    return CertifiedLog(v, err)


def compare_certified(
    a: CertifiedLog,
    b: CertifiedLog,
    exact_a: Callable[[], int],
    exact_b: Callable[[], int],
    counter: Counter | None = None,
) -> int:
    """Order two positive quantities given certified logs and lazy exacts.

    Returns -1, 0, or 1. When the log intervals are disjoint the order is
    already proven; otherwise both exact integers are materialized and
    compared, so the result is the true ordering either way.
    """
    if a.upper < b.lower:
        return -1
    if b.upper < a.lower:
        return 1
    if counter is not None:
        counter["exact_fallbacks"] += 1
    va, vb = exact_a(), exact_b()
    return (va > vb) - (va < vb)


def _balanced_product(values: Sequence[int]) -> int:
    """Multiply bottom-up in pairs so operand bit-lengths stay matched."""
    items = [int(v) for v in values]
    if not items:
        return 1
    while len(items) > 1:
        nxt = [items[i] * items[i + 1] for i in range(0, len(items) - 1, 2)]
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    return items[0]


def primorial(n: int, engine: PrimeEngine | None = None) -> int:
    """Product of the first n primes, n >= 1.

    n = 0 is rejected rather than defined as 1: every downstream inequality
    starts at n = 1 and a silent empty product has hidden real index bugs.
    """
    if n < 1:
        raise DomainError("primorial is defined here for n >= 1")
    if n > PRIMORIAL_CAP:
        raise ResourceLimitError(f"primorial capped at n = {PRIMORIAL_CAP}")
    engine = engine or default_engine()
    engine.nth_prime(n)
    return _balanced_product(engine.table.primes[:n])


def totient_primorial(n: int, engine: PrimeEngine | None = None) -> int:
    """Euler phi of the n-th primorial, i.e. product of (p_i - 1)."""
    if n < 1:
        raise DomainError("totient_primorial is defined here for n >= 1")
    if n > PRIMORIAL_CAP:
        raise ResourceLimitError(f"totient_primorial capped at n = {PRIMORIAL_CAP}")
    engine = engine or default_engine()
    engine.nth_prime(n)
    return _balanced_product(engine.table.primes[:n] - 1)


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient with domain guards."""
    if n < 0 or k < 0:
        raise DomainError("binomial needs nonnegative arguments")
    if k > n:
        raise DomainError("binomial needs k <= n")
    return math.comb(n, k)


def ln_factorial(n: int) -> CertifiedLog:
    """Certified ln n! by compensated summation of ln k.

    math.fsum is exactly rounded over its inputs, so the radius is the
    per-term log error (2 ulp each, summing to 2 eps * ln n!) plus one final
    rounding. Stays below 1e-10 for n <= 1e4, ample for Stirling-type
    margins of order 1/n; the Robbins check, whose margins shrink like
    1/n^3, uses interval arithmetic instead (see bounds.robbins_gamma).
    """
    if n < 0:
        raise DomainError("ln_factorial needs n >= 0")
    if n <= 1:
        return CertifiedLog(0.0, 0.0)
    terms = np.log(np.arange(2, n + 1, dtype=np.float64))
    v = math.fsum(terms)
    return CertifiedLog(v, 3 * EPS * v + TINY)


def log_binomial_certified(top: int, k: int) -> CertifiedLog:
    """Certified ln C(top, k) as sum of ln(top-k+i) minus ln k!.

    Avoids materializing the (possibly huge) coefficient; every factor must
    stay exactly representable in a float64.
    """
    if top < 0 or k < 0 or k > top:
        raise DomainError("log_binomial_certified needs 0 <= k <= top")
    if top > 2**52:
        raise ResourceLimitError("log_binomial_certified factors capped at 2^52")
    if k == 0 or k == top:
        return CertifiedLog(0.0, 0.0)
    rising = np.log(np.arange(top - k + 1, top + 1, dtype=np.float64))
    num = math.fsum(rising)
    num_log = CertifiedLog(num, 3 * EPS * num + TINY)
    return num_log - ln_factorial(k)


class PrimorialLogs:
    """Certified running logs over a prime prefix: theta(i) = ln(p_1...p_i).

    Built once from an int64 prime array. Per-term logs carry at most 2 ulp;
    within 256-element blocks a cumulative sum adds at most 256 rounding
    steps on partials bounded by the block total; block totals are combined
    by compensated running summation (error at most 2 eps times theta) and
    one final addition. The documented radius 2e-15 * theta + 1e-9 covers
    all of that with slack at every index this package can reach.
    """

    BLOCK = 256

    def __init__(self, primes: np.ndarray):
        logs = np.log(primes.astype(np.float64))
        m = logs.size
        nblocks = -(-m // self.BLOCK) if m else 0
        padded = np.zeros(nblocks * self.BLOCK, dtype=np.float64)
        padded[:m] = logs
        mat = padded.reshape(nblocks, self.BLOCK) if nblocks else padded.reshape(0, self.BLOCK)
        self._inblock = np.cumsum(mat, axis=1)
        totals = mat.sum(axis=1)
        prefix = np.zeros(nblocks, dtype=np.float64)
        s = 0.0
        c = 0.0
        for b in range(nblocks):
            prefix[b] = s + c
            t = s + totals[b]
            if abs(s) >= abs(totals[b]):
                c += (s - t) + totals[b]
            else:
                c += (totals[b] - t) + s
            s = t
        self._prefix = prefix
        self._logs = logs
        self.size = m

    def theta(self, i: int) -> CertifiedLog:
        """Certified ln of the i-th primorial, 1-indexed."""
        if not 1 <= i <= self.size:
            raise DomainError(f"theta index {i} outside [1, {self.size}]")
        b, r = divmod(i - 1, self.BLOCK)
        v = float(self._prefix[b] + self._inblock[b, r])
        return CertifiedLog(v, 2e-15 * v + 1e-9)

    def log_prime(self, i: int) -> CertifiedLog:
        """Certified ln p_i, 1-indexed."""
        if not 1 <= i <= self.size:
            raise DomainError(f"log_prime index {i} outside [1, {self.size}]")
        v = float(self._logs[i - 1])
        return CertifiedLog(v, 2 * EPS * v + TINY)
