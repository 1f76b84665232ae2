"""Prime generation and counting engine.

Three independent code paths are kept on purpose so they can cross-check each
other: a segmented sieve of Eratosthenes (exact tables), a sublinear
Meissel-Lehmer style counting recurrence (pi at magnitudes far beyond any
sieve), and a windowed segment count (spot checks of the sublinear path over
a narrow range).
"""

from __future__ import annotations

import logging
import os
import struct
from collections import Counter
from dataclasses import dataclass, field
from math import isqrt, log
from pathlib import Path

import numpy as np

from .errors import DomainError, ResourceLimitError

log_ = logging.getLogger(__name__)

CACHE_ENV_VAR = "PRIMORIAL_GAP_CACHE"
CACHE_MAGIC = b"PRIMCACH"

# Odd-number slots marked per segment pass; one slot is one byte of flags.
SEGMENT_ODD_SLOTS = 1 << 20

# Dense (non-segmented) sieving is cheaper below this limit.
_DENSE_LIMIT = 1 << 22

# Witnesses 2..37 give a deterministic strong-pseudoprime test below this
# bound, which is far beyond anything this package needs.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_BELOW = 318665857834031151167461


@dataclass(frozen=True)
class PrimeTable:
    """All primes up to ``limit``, ascending, as an int64 array."""

    limit: int
    primes: np.ndarray

    @property
    def count(self) -> int:
        return int(self.primes.size)


def _dense_sieve(limit: int) -> np.ndarray:
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags).astype(np.int64)


def sieve_upto(limit: int) -> PrimeTable:
    """Sieve every prime up to ``limit`` inclusive.

    Segments of SEGMENT_ODD_SLOTS odd numbers cap the peak flag memory; the
    result array itself grows with pi(limit).
    """
    if limit < 0:
        raise DomainError("sieve limit must be nonnegative")
    if limit <= _DENSE_LIMIT:
        return PrimeTable(limit, _dense_sieve(limit))

    base = _dense_sieve(isqrt(limit))
    odd_base = [int(p) for p in base[1:]]
    chunks = [np.array([2], dtype=np.int64)]
    span = 2 * SEGMENT_ODD_SLOTS
    for lo in range(3, limit + 1, span):
        hi = min(lo + span, limit + 1)
        flags = np.ones((hi - lo + 1) // 2, dtype=bool)
        for p in odd_base:
            if p * p >= hi:
                break
            start = max(p * p, ((lo + p - 1) // p) * p)
            if start % 2 == 0:
                start += p
            if start < hi:
                flags[(start - lo) // 2 :: p] = False
        chunks.append(lo + 2 * np.flatnonzero(flags).astype(np.int64))
    return PrimeTable(limit, np.concatenate(chunks))


def save_prime_cache(table: PrimeTable, path: str | Path) -> None:
    """Write a table as a 16-byte header (magic, limit) plus u64-LE primes."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "wb") as fh:
        fh.write(CACHE_MAGIC)
        fh.write(struct.pack("<Q", table.limit))
        fh.write(table.primes.astype("<u8").tobytes())


def load_prime_cache(path: str | Path) -> PrimeTable:
    with open(path, "rb") as fh:
        header = fh.read(16)
        if len(header) != 16 or header[:8] != CACHE_MAGIC:
            raise DomainError(f"not a prime cache file: {path}")
        (limit,) = struct.unpack("<Q", header[8:])
        data = fh.read()
    if len(data) % 8 != 0:
        raise DomainError(f"truncated prime cache file: {path}")
    primes = np.frombuffer(data, dtype="<u8").astype(np.int64)
    if primes.size and (np.any(np.diff(primes) <= 0) or primes[0] != 2):
        raise DomainError(f"corrupt prime cache file: {path}")
    return PrimeTable(int(limit), primes)


def _miller_rabin(x: int) -> bool:
    d, s = x - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        if a >= x:
            continue
        v = pow(a, d, x)
        if v in (1, x - 1):
            continue
        for _ in range(s - 1):
            v = v * v % x
            if v == x - 1:
                break
        else:
            return False
    return True


class PrimeEngine:
    """Stateful facade over the sieve and counting paths.

    The engine owns one growing PrimeTable, a memo of sublinear pi results,
    and counters that verification reports surface as engine statistics.
    """

    def __init__(
        self,
        sieve_cap: int = 2 * 10**9,
        exact_cap: int = 10**9,
        fast_ceiling: int = 10**14,
        cache_dir: str | Path | None = None,
        persist_threshold: int = 10**8,
    ):
        self.sieve_cap = sieve_cap
        self.exact_cap = exact_cap
        self.fast_ceiling = fast_ceiling
        if cache_dir is None:
            cache_dir = os.environ.get(CACHE_ENV_VAR, "./.cache")
        self.cache_dir = Path(cache_dir)
        self.persist_threshold = persist_threshold
        self.table = PrimeTable(1, np.empty(0, dtype=np.int64))
        self.stats: Counter = Counter()
        self._pi_memo: dict[int, int] = {}

    # ---- table growth ----

    def _cached_candidates(self) -> list[tuple[int, Path]]:
        if not self.cache_dir.is_dir():
            return []
        found = []
        for path in sorted(self.cache_dir.glob("primes-*.bin")):
            try:
                with open(path, "rb") as fh:
                    header = fh.read(16)
                if len(header) == 16 and header[:8] == CACHE_MAGIC:
                    (limit,) = struct.unpack("<Q", header[8:])
                    found.append((int(limit), path))
            except OSError:
                continue
        return found

    def ensure_limit(self, limit: int) -> PrimeTable:
        """Grow the table to cover ``limit``, at least doubling each time."""
        if limit <= self.table.limit:
            return self.table
        if limit > self.sieve_cap:
            raise ResourceLimitError(
                f"sieve limit {limit} exceeds policy cap {self.sieve_cap}"
            )
        target = min(max(limit, 2 * self.table.limit, 1 << 16), self.sieve_cap)
        for cached_limit, path in sorted(self._cached_candidates()):
            if cached_limit >= limit:
                try:
                    table = load_prime_cache(path)
                except (DomainError, OSError) as exc:
                    log_.warning("ignoring unusable prime cache %s: %s", path, exc)
                    continue
                if table.limit >= limit:
                    self.table = table
                    self.stats["cache_hits"] += 1
                    return self.table
        self.table = sieve_upto(target)
        self.stats["sieve_extensions"] += 1
        if target > self.persist_threshold:
            path = self.cache_dir / f"primes-{target}.bin"
            try:
                save_prime_cache(self.table, path)
            except OSError as exc:
                log_.warning("could not persist prime cache %s: %s", path, exc)
        return self.table

    # ---- exact queries ----

    def nth_prime(self, n: int) -> int:
        if n < 1:
            raise DomainError("prime indexes start at 1")
        if n > self.table.count:
            # p_n <= n (ln n + ln ln n) for n >= 6; pad smaller requests.
            if n >= 6:
                guess = int(n * (log(n) + log(log(n)))) + 10
            else:
                guess = 15
            self.ensure_limit(guess)
            while self.table.count < n:
                self.ensure_limit(2 * self.table.limit)
        return int(self.table.primes[n - 1])

    def pi_exact(self, x: int) -> int:
        if x < 0:
            raise DomainError("pi is defined on nonnegative integers")
        if x > self.exact_cap:
            raise ResourceLimitError(
                f"pi_exact is capped at {self.exact_cap}; use pi_fast for {x}"
            )
        if x > self.table.limit:
            self.ensure_limit(x)
        return int(np.searchsorted(self.table.primes, x, side="right"))

    def is_prime(self, x: int) -> bool:
        if x < 2:
            return False
        if x <= self.table.limit:
            i = int(np.searchsorted(self.table.primes, x))
            return i < self.table.count and int(self.table.primes[i]) == x
        for p in _MR_WITNESSES:
            if x == p:
                return True
            if x % p == 0:
                return False
        if x >= _MR_DETERMINISTIC_BELOW:
            raise ResourceLimitError(
                f"deterministic primality witnesses cover x < {_MR_DETERMINISTIC_BELOW}"
            )
        return _miller_rabin(x)

    # ---- sublinear counting ----

    def pi_fast(self, x: int) -> int:
        """Count primes up to ``x`` without sieving past sqrt(x).

        Standard Meissel-Lehmer family recurrence over the O(sqrt x) distinct
        values of x//k: start from S(v) = v - 1 and, for each prime p up to
        sqrt(x) in turn, subtract the composites whose least prime factor is
        p, using S(v//p) from the previous round. Runs in roughly x^(3/4)
        array-element operations, vectorized over the value lists.
        """
        if x < 1:
            raise DomainError("pi_fast needs x >= 1")
        if x > self.fast_ceiling:
            raise ResourceLimitError(
                f"pi_fast is capped at {self.fast_ceiling} (configurable ceiling)"
            )
        if x in self._pi_memo:
            return self._pi_memo[x]
        self.stats["pi_fast_calls"] += 1
        if x <= self.table.limit:
            count = int(np.searchsorted(self.table.primes, x, side="right"))
            self._pi_memo[x] = count
            return count

        r = isqrt(x)
        table = self.ensure_limit(max(r, 4))
        nbase = int(np.searchsorted(table.primes, r, side="right"))
        base = table.primes[:nbase]

        idx = np.arange(r + 1, dtype=np.int64)
        small = idx - 1
        large = np.empty(r + 1, dtype=np.int64)
        large[0] = 0
        large[1:] = x // idx[1:] - 1
        for i in range(nbase):
            p = int(base[i])
            p2 = p * p
            kmax = min(r, x // p2)
            k0 = min(kmax, r // p)
            # S(x//k) updates read prior-round values; numpy materializes the
            # gathered right-hand sides before the in-place subtraction.
            if k0 >= 1:
                large[1 : k0 + 1] -= large[idx[1 : k0 + 1] * p] - i
            if kmax > k0:
                ks = idx[k0 + 1 : kmax + 1]
                large[k0 + 1 : kmax + 1] -= small[x // (ks * p)] - i
            if p2 <= r:
                small[p2:] -= small[idx[p2:] // p] - i
        count = int(large[1])
        self._pi_memo[x] = count
        return count

    def count_range(self, lo: int, hi: int) -> int:
        """Count primes in [lo, hi] by sieving just that window.

        Independent of pi_fast; used to spot-check it. Window width is capped
        because the flag array is materialized densely.
        """
        if lo < 0 or hi < lo:
            raise DomainError("need 0 <= lo <= hi")
        if hi - lo > 10**8:
            raise ResourceLimitError("count_range window capped at 1e8")
        if hi < 2:
            return 0
        lo = max(lo, 2)
        table = self.ensure_limit(max(isqrt(hi), 4))
        nbase = int(np.searchsorted(table.primes, isqrt(hi), side="right"))
        count = 1 if lo <= 2 else 0
        wlo = lo if lo % 2 == 1 else lo + 1
        if wlo > hi:
            return count
        flags = np.ones((hi - wlo) // 2 + 1, dtype=bool)
        for j in range(1, nbase):
            p = int(table.primes[j])
            start = max(p * p, ((wlo + p - 1) // p) * p)
            if start % 2 == 0:
                start += p
            if start <= hi:
                flags[(start - wlo) // 2 :: p] = False
        if wlo == 1:
            flags[0] = False
        return count + int(np.count_nonzero(flags))


_default_engine: PrimeEngine | None = None


def default_engine() -> PrimeEngine:
    """Shared engine for callers that do not manage their own."""
    global _default_engine
    if _default_engine is None:
        _default_engine = PrimeEngine()
    return _default_engine
