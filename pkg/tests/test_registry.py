"""Spec registry semantics: onsets, failures, equivalence with naive math."""

import math
import time

import pytest

from primorial_gap.errors import DomainError, ResourceLimitError
from primorial_gap.registry import (
    get_spec,
    registry,
    run_suite,
    verify,
    verify_theorem_alpha,
    verify_theorem_linear,
)

EXPECTED_ONSETS = {
    # spec id -> onset a scan from n = 1 must discover
    "bonse2": 4,
    "bonse3": 5,
    "dalezman": 4,
    "posa_k2": 4,
    "posa_k3": 5,
    "posa_k4": 7,
    "posa_k5": 8,
    "posa_k6": 10,
    "panaitopol_form": 1,
    "mamangakis": 4,
    "gupta_khare": None,  # onset 1794 sits past the short window used here
    "robin": 13,
    "panaitopol": 2,
    "hassani": 2,
    "zhang": 10,
    "sandor_sum": 3,
    "sandor_sq": 5,
    "remark_pn2": 5,
    "remark_2pn2": 1,
    "rosser_lower": 1,
    "rosser_window": 20,
    "pn_logn_mono": 2,
    "euler_totient": 1,
}


def test_registry_ids_unique_and_complete(engine):
    specs = registry(engine)
    ids = [s.id for s in specs]
    assert len(ids) == len(set(ids))
    assert set(EXPECTED_ONSETS) <= set(ids)
    assert "theorem_linear" in ids and "theorem_alpha" in ids
    assert len(ids) >= 21


def test_short_scan_onsets(engine):
    for sid, onset in EXPECTED_ONSETS.items():
        if sid == "gupta_khare":
            continue
        report = verify(sid, 1, 40, engine)
        assert report.first_hold_onward == onset, sid
        assert report.status == "ok"


def test_gupta_khare_boundary(engine):
    report = verify("gupta_khare", 1790, 1800, engine)
    assert report.failures == [1790, 1791, 1792, 1793]
    assert report.first_hold_onward == 1794


def test_claimed_thresholds_not_contradicted_on_windows(engine):
    """Every claimed onset must hold on a window starting at the claim."""
    for spec in registry(engine):
        if spec.claimed_from is None or spec.id.startswith("theorem"):
            continue
        lo = spec.claimed_from
        hi = min(lo + 60, spec.feasible_max)
        report = verify(spec, lo, hi, engine)
        assert report.all_hold, spec.id


def test_predicates_match_naive_bigint_reimplementation(engine):
    """Independent re-derivation of five families with plain integers.

    Comparing in exact arithmetic on the first 50 applicable n guards the
    certified-log fast path against silent misrounding.
    """
    engine.nth_prime(300)
    primes = [int(p) for p in engine.table.primes[:300]]

    def prim(n):
        out = 1
        for p in primes[:n]:
            out *= p
        return out

    checks = {
        "bonse2": lambda n: primes[n] ** 2 < prim(n),
        "bonse3": lambda n: primes[n] ** 3 < prim(n),
        "dalezman": lambda n: primes[n] * primes[n + 1] < prim(n),
        "robin": lambda n: n**n < prim(n),
        "zhang": lambda n: 2 ** primes[n] < prim(n),
    }
    for sid, naive in checks.items():
        spec = get_spec(sid, engine)
        for n in range(1, 51):
            assert spec.predicate(n) == naive(n), (sid, n)


def test_sandor_sum_exactness(engine):
    spec = get_spec("sandor_sum", engine)
    # n = 2: P_1 + p_2 + p_(p_2 - 2) = 2 + 3 + 2 = 7 > P_2 = 6 fails
    assert not spec.predicate(2)
    # n = 3: P_2 + p_3 + p_3 = 6 + 5 + 5 = 16 <= 30 holds
    assert spec.predicate(3)


def test_verify_range_validation(engine):
    with pytest.raises(DomainError):
        verify("bonse2", 5, 4, engine)
    with pytest.raises(DomainError):
        verify("bonse2", 0, 4, engine)
    with pytest.raises(ResourceLimitError):
        verify("bonse2", 1, 10**7, engine)
    with pytest.raises(DomainError):
        get_spec("not_a_spec", engine)


def test_verify_onset_none_when_failing_at_top(engine):
    report = verify("zhang", 1, 9, engine)
    assert report.failures == [1, 2, 3, 4, 5, 6, 7, 9]
    assert report.first_hold_onward is None
    assert not report.all_hold


def test_verify_budget_skip(engine):
    deadline = time.perf_counter() - 1.0
    report = verify("bonse2", 1, 2000, engine, deadline=deadline)
    assert report.status == "skipped"
    assert report.first_hold_onward is None
    assert not report.all_hold


def test_report_json_shape(engine):
    doc = verify("bonse2", 1, 30, engine).to_json_dict()
    assert doc["range"] == [1, 30]
    assert doc["failures"] == [1, 2, 3]
    assert doc["first_hold_onward"] == 4
    assert set(doc["engine"]) == {"pi_fast_calls", "exact_fallbacks", "sieve_extensions"}
    assert doc["status"] == "ok"


def test_exact_fallback_fires_on_equality(engine):
    spec = get_spec("gupta_khare", engine)
    before = spec.context.counters["exact_fallbacks"]
    assert not spec.predicate(2)  # C(4, 2) = 6 equals the product 2 * 3
    assert spec.context.counters["exact_fallbacks"] == before + 1


def test_theorem_linear_counts(engine):
    report = verify_theorem_linear(5, engine)
    assert report.all_hold
    assert report.detail["counts"] == {"1": 1, "2": 7, "3": 42, "4": 338, "5": 3242}


def test_theorem_linear_guard(engine):
    with pytest.raises(ResourceLimitError):
        verify_theorem_linear(12, engine)


def test_theorem_alpha_vacuous_range_is_explicit(engine):
    report = verify_theorem_alpha(1.9, 11, engine)
    assert report.detail["vacuous"] is True
    assert report.all_hold
    assert report.first_hold_onward is None
    assert report.detail["counts"] == {}


def test_theorem_alpha_11_onset_and_requirements(engine):
    report = verify_theorem_alpha(1.1, 11, engine)
    assert report.detail["claim_onset"] == 10
    assert report.detail["required"] == {"10": 12, "11": 13}
    assert report.all_hold


def test_run_suite_subset_and_zero_budget(engine):
    reports = run_suite(engine, budget_secs=60.0, spec_ids=["bonse2", "dalezman"])
    assert [r.id for r in reports] == ["bonse2", "dalezman"]
    assert all(r.status == "ok" for r in reports)
    assert all(r.first_hold_onward == 4 for r in reports)
    starved = run_suite(engine, budget_secs=0.0, spec_ids=["bonse2"])
    assert starved[0].status == "skipped"
    with pytest.raises(DomainError):
        run_suite(engine, spec_ids=["bonse2", "bogus"])


def test_mamangakis_window_matches_prime_table(engine):
    spec = get_spec("mamangakis", engine)
    # direct check p_{4n} < P_n on a window around the onset
    for n in range(1, 12):
        p4n = engine.nth_prime(4 * n)
        naive = 1
        for i in range(1, n + 1):
            naive *= engine.nth_prime(i)
        assert spec.predicate(n) == (p4n < naive), n
