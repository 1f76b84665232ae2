"""Sieve, counting, and cache behavior against independent oracles."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from primorial_gap.errors import ResourceLimitError
from primorial_gap.primes import (
    CACHE_MAGIC,
    PrimeEngine,
    load_prime_cache,
    save_prime_cache,
    sieve_upto,
)


def trial_division_primes(limit: int) -> list[int]:
    """Slow, obviously-correct prime list used as the reference."""
    out = []
    for x in range(2, limit + 1):
        d = 2
        while d * d <= x:
            if x % d == 0:
                break
            d += 1
        else:
            out.append(x)
    return out


def test_sieve_matches_trial_division_to_10k():
    table = sieve_upto(10_000)
    assert table.primes.tolist() == trial_division_primes(10_000)


def test_sieve_crosses_segment_boundaries():
    # limits straddling the dense-sieve cutoff and one segment width
    for limit in (4_194_303, 4_194_305):
        table = sieve_upto(limit)
        assert table.limit == limit
        assert int(table.primes[-1]) <= limit
        # spot totals from an independent published table
        assert int(np.searchsorted(table.primes, 1_000_000, side="right")) == 78_498


def test_pi_exact_known_values(engine):
    assert engine.pi_exact(2) == 1
    assert engine.pi_exact(10) == 4
    assert engine.pi_exact(30_030) == 3_248
    assert engine.pi_exact(1_000_000) == 78_498


def test_nth_prime_known_values(engine):
    assert engine.nth_prime(1) == 2
    assert engine.nth_prime(25) == 97
    assert engine.nth_prime(1_000) == 7_919


def test_pi_exact_rejects_above_cap(cache_dir):
    small = PrimeEngine(exact_cap=1_000, cache_dir=cache_dir)
    with pytest.raises(ResourceLimitError):
        small.pi_exact(10_000)


def test_is_prime_table_and_witness_paths(engine):
    assert engine.is_prime(2)
    assert engine.is_prime(7_919)
    assert not engine.is_prime(1)
    assert not engine.is_prime(30_031)  # 59 * 509, Euclid-style composite
    assert engine.is_prime(2_147_483_647)  # Mersenne prime beyond the table


def test_pi_fast_agrees_with_exact(engine):
    for x in (10, 100, 7_919, 30_030, 123_456, 1_000_000):
        assert engine.pi_fast(x) == engine.pi_exact(x)


def test_pi_fast_large_known_value(engine):
    # 30029 is itself prime, so the count matches pi(30030)
    assert engine.pi_fast(30_030 - 1) == 3_248
    assert engine.pi_fast(100_000_000) == 5_761_455


def test_count_range_spot_checks(engine):
    assert engine.count_range(1, 100) == 25
    assert engine.count_range(100, 200) == 21
    # count_range is inclusive on both ends
    assert engine.count_range(7_919, 7_919) == 1


def test_count_range_matches_pi_difference(engine):
    lo, hi = 123_456, 234_567
    assert engine.count_range(lo, hi) == engine.pi_exact(hi) - engine.pi_exact(lo - 1)


def test_cache_roundtrip(tmp_path):
    table = sieve_upto(50_000)
    path = tmp_path / "primes-50000.bin"
    save_prime_cache(table, path)
    raw = path.read_bytes()
    assert raw[:8] == CACHE_MAGIC
    assert int.from_bytes(raw[8:16], "little") == 50_000
    loaded = load_prime_cache(path)
    assert loaded.limit == table.limit
    assert np.array_equal(loaded.primes, table.primes)


def test_engine_reuses_persisted_cache(tmp_path):
    first = PrimeEngine(cache_dir=tmp_path, persist_threshold=10_000)
    first.ensure_limit(200_000)
    assert first.stats["sieve_extensions"] >= 1
    second = PrimeEngine(cache_dir=tmp_path, persist_threshold=10_000)
    second.ensure_limit(150_000)
    assert second.stats["cache_hits"] >= 1
    assert second.pi_exact(100_000) == 9_592


@given(limit=st.integers(min_value=2, max_value=2_000))
def test_sieve_property_small_limits(limit):
    assert sieve_upto(limit).primes.tolist() == trial_division_primes(limit)
