"""Shared helpers for the test suite."""

from adian.engine import pair_states
from adian.presentation import pi
from adian.pi import macro_main, witness


def naive_states(N, k):
    w = witness(k)
    return list(pair_states(pi(N), w.u, w.v, fuel=10**6))


def macro_vs_naive(N, k, entries="all"):
    """Compare expanded macro states against naive pair states at the logged step indices.

    Returns the number of states compared.
    """
    naive = naive_states(N, k)
    state = macro_main(N, k)
    log = state.lemma_log
    if entries == "phases":
        checkpoints = [(at, first, second) for _, at, first, second in state.phase_snapshots()]
    else:
        checkpoints = [(e.at_step, e.first, e.second) for e in log]
    for at, first, second in checkpoints:
        got = (first.expand(), second.expand())
        want = (naive[at].u, naive[at].v)
        assert got == want, f"N={N} k={k} step {at}: macro {got} naive {want}"
    assert naive[-1].steps == state.steps and naive[-1].done
    return len(checkpoints)


# --- lemma laws -----------------------------------------------------------------

import itertools
import random

from adian.engine import decompose, iterate, pair_run, Equal
from adian.presentation import m0
from adian.pi import SequenceKit


def lemma1_law(seed=1):
    """X^p aa X^q S takes pN+p steps to aa X^(q+pN^2) S.  Returns the number of cases."""
    rng = random.Random(seed)
    cases = 0
    for N in (2, 3):
        pres = pi(N)
        for p in range(5):
            for q in range(5):
                for _ in range(4):
                    suffix = "".join(rng.choice("ab") for _ in range(rng.randint(0, 6)))
                    w = "ba" * p + "aa" + "ba" * q + suffix
                    want = "aa" + "ba" * (q + p * N * N) + suffix
                    assert iterate(pres, w, p * N + p) == want, (N, p, q, suffix)
                    cases += 1
    return cases


def lemma8_law():
    """(X^p a X^pN, a) reaches (ε, ε) in exactly p pair steps, for p = s(k−1)−1 and small p."""
    cases = 0
    for N in (2, 3, 4):
        kit = SequenceKit(N)
        ps = set(range(1, 9)) | {kit.s(k - 1) - 1 for k in range(1, 4)}
        for p in sorted(ps):
            u = "ba" * p + "a" + "ba" * (p * N)
            assert pair_run(pi(N), u, "a", fuel=p + 1) == Equal(p), (N, p)
            cases += 1
    return cases


def _random_piece_word(rng, pieces, count):
    return "".join(rng.choice(pieces) for _ in range(count))


def _steps_with_heads(pres, w, limit):
    """How many times 𝔄 can be applied to w in a row without meeting a headless word."""
    k = 0
    while k < limit and not decompose(pres, w).headless:
        w = iterate(pres, w, 1)
        k += 1
    return k


def prefix_independence_law(seed=2, cases=200):
    """If k steps on P never hit a headless word, then k steps on PQ give (k steps on P)·Q."""
    rng = random.Random(seed)
    presentations = [pi(2), pi(3), m0()]
    done = 0
    while done < cases:
        pres = rng.choice(presentations)
        P = _random_piece_word(rng, ["a", "b", "ba", "aa", "bb"], rng.randint(1, 6))
        k = _steps_with_heads(pres, P, 50)
        if k == 0:
            continue
        k = rng.randint(1, k)
        Q = "".join(rng.choice("ab") for _ in range(rng.randint(0, 8)))
        assert iterate(pres, P + Q, k) == iterate(pres, P, k) + Q, (pres, P, Q, k)
        done += 1
    return done


def b_prefix_law(seed=3, cases=200):
    """If ℓ steps on Y keep it beginning with b, then ℓ steps on b^s Y give b^s·(ℓ steps on Y)."""
    rng = random.Random(seed)
    done = 0
    while done < cases:
        N = rng.choice((2, 3))
        pres = pi(N)
        Y = "b" + _random_piece_word(rng, ["a", "b", "ba", "aa"], rng.randint(1, 6))
        ell = 0
        w = Y
        target = rng.randint(1, 50)
        while ell < target:
            nxt = iterate(pres, w, 1)
            if nxt is None or not nxt.startswith("b"):
                break
            w = nxt
            ell += 1
        if ell == 0:
            continue
        s = rng.randint(1, 4)
        assert iterate(pres, "b" * s + Y, ell) == "b" * s + w, (N, Y, s, ell)
        done += 1
    return done
