"""Acceptance criteria 1-10, each with its runtime bound.

Run under pytest (a PASS/FAIL line per criterion is added to the terminal
summary) or directly with ``python3 tests/test_acceptance.py``.
"""

import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from adian.engine import Equal, decompose, iterate, pair_run, run_divisibility, Outcome
from adian.oracle import dehn_function_at, shortest_chain
from adian.presentation import m0, pi
from adian.pi import (
    SequenceKit, closed_form, collatz_run, Terminated, lower_bound_check, macro_main, phase_charges, sigma,
    sigma_closed_form, t_prime_uncorrected, witness,
)
from adian.pi.sequences import NAMES
from helpers import b_prefix_law, lemma1_law, lemma8_law, macro_vs_naive, prefix_independence_law

TITLES = {
    1: "sigma tables",
    2: "sequence tables and closed forms",
    3: "witness pairs, naive engine",
    4: "witness pairs, macro engine at scale",
    5: "macro/naive cross-validation",
    6: "minimality against the search oracle",
    7: "worked examples",
    8: "lemma property suites",
    9: "Collatz termination sweep",
    10: "lower-bound consistency",
}

LIMITS = {1: 1, 2: 1, 3: 30, 4: 1, 5: 5, 6: 120, 7: 1, 8: 30, 9: 30, 10: 60}


def criterion_1():
    assert [sigma(2, k) for k in range(1, 8)] == [6, 26, 94, 354, 1382, 5482, 21870]
    assert sigma(4, 4) == 34966
    for N in (2, 4):
        for k in range(1, 8):
            assert sum(phase_charges(N, k)) == sigma_closed_form(N, k)


def criterion_2():
    reference = {
        "s": [2, 6, 22, 86, 342, 1366],
        "t": [0, 4, 16, 64, 256, 1024],
        "T": [0, 4, 20, 84, 340, 1364],
        "s'": [1, 3, 11, 43, 171, 683],
        "t'": [0, 4, 10, 34, 130, 514],
        "T'": [0, 4, 14, 48, 178, 692],
    }
    kit = SequenceKit(2)
    for name, values in reference.items():
        assert [kit.value(name, n) for n in range(6)] == values, name
    for N in range(2, 11):
        kit = SequenceKit(N)
        for n in range(51):
            for name in NAMES:
                assert closed_form(N, name, n) == kit.value(name, n)
            if n >= 1:
                # the uncorrected t' form must disagree
                assert t_prime_uncorrected(N, n) != kit.t_prime(n)


def criterion_3():
    for N, k in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2)]:
        w = witness(k)
        assert pair_run(pi(N), w.u, w.v, fuel=10**6) == Equal(sigma(N, k)), (N, k)


def criterion_4():
    for N in range(2, 11):
        kit = SequenceKit(N)
        for k in range(1, 31):
            state = macro_main(N, k)
            assert state.done and state.steps == sigma(N, k, kit)
            charges = state.phase_charges()
            assert (charges["lemma4"], charges["lemma7"], charges["lemma8"]) == phase_charges(N, k, kit)


def criterion_5():
    for N in (2, 3):
        for k in (1, 2):
            assert macro_vs_naive(N, k, entries="phases") == 3


def criterion_6():
    P2 = pi(2)
    w = witness(1)
    found = shortest_chain(P2, w.u, w.v, 8, 64)
    assert found is not None and found[0] == 6 == pair_run(P2, w.u, w.v).k
    # every equal pair with |u| + |v| <= 10 and distance <= 6 is cross-checked inside
    sample = dehn_function_at(P2, 10, depth=6)
    assert sample.cross_checked == sample.equal_pairs > 0


def criterion_7():
    M0 = m0()
    assert decompose(M0, "bbbbabbaabbab").render() == "bb | bba [bbaa] bbab"
    assert decompose(M0, "bbabbababab").render() == "bba | bba | b [a] bab"
    assert decompose(M0, "bbabbabb").render() == "bba | bba | bb"
    verdict = run_divisibility(M0, "bbbbabbaabbab", "a", fuel=10)
    assert (verdict.outcome, verdict.steps_used, verdict.final) == (Outcome.NO, 2, "bbabbab")
    assert iterate(M0, "bbbbabbaabbab", 2) == "bbabbab" and decompose(M0, "bbabbab").headless
    for i in range(1, 21):
        assert iterate(M0, "ba", i) == "b" * (2 * i + 1) + "a" * (i + 1)


def criterion_8():
    cases = lemma1_law() + lemma8_law() + prefix_independence_law() + b_prefix_law()
    assert cases >= 500, cases


def criterion_9():
    for N in (2, 3, 4):
        for m in range(201):
            for n in range(201):
                assert isinstance(collatz_run(N, m, n, fuel=10**6), Terminated), (N, m, n)


def criterion_10():
    for k in range(1, 8):
        assert lower_bound_check(2, 8 * k + 4) == sigma(2, k)
    sample = dehn_function_at(pi(2), 12)
    assert sample.value >= 6
    assert sample.witnesses == (witness(1).u, witness(1).v)


CRITERIA = {n: globals()[f"criterion_{n}"] for n in TITLES}


def timed(n):
    start = time.perf_counter()
    CRITERIA[n]()
    elapsed = time.perf_counter() - start
    assert elapsed < LIMITS[n], f"took {elapsed:.2f}s, limit {LIMITS[n]}s"
    return elapsed


@pytest.mark.parametrize("n", sorted(TITLES))
def test_criterion(n, record_property):
    record_property("criterion", n)
    record_property("elapsed", timed(n))


if __name__ == "__main__":
    failures = 0
    for n in sorted(TITLES):
        try:
            elapsed = timed(n)
            print(f"PASS criterion {n:2d} ({TITLES[n]}) in {elapsed:.2f}s")
        except AssertionError as exc:
            failures += 1
            print(f"FAIL criterion {n:2d} ({TITLES[n]}): {exc}")
    sys.exit(1 if failures else 0)
