import pytest

from adian.engine import iterate, pair_states
from adian.errors import ShapeMismatch
from adian.presentation import pi
from adian.pi import (
    MacroState, SequenceKit, initial_state, macro_head_a, macro_head_lhs, macro_lemma1, macro_lemma2, macro_lemma5,
    macro_lemma8, macro_main, phase_charges, sigma,
)
from adian.pi.macro import PHASES
from adian.words import A, B, BlockWord, X

from helpers import macro_vs_naive


def state(N, *blocks, second=()):
    return MacroState(N, BlockWord.of(*blocks), BlockWord.of(*second))


def test_lemma1_examples():
    s = macro_lemma1(state(2, X(1), A(2)), 1, 0)
    assert (s.first, s.steps) == (BlockWord.of(A(2), X(4)), 3)
    s = macro_lemma1(state(2, X(2), A(2), X(1)), 2, 1)
    assert (s.first, s.steps) == (BlockWord.of(A(2), X(9)), 6)
    assert iterate(pi(2), "baba" + "aa" + "ba", 6) == "aa" + "ba" * 9
    s = macro_lemma1(state(3, A(2), X(5)), 0, 5)
    assert (s.first, s.steps) == (BlockWord.of(A(2), X(5)), 0)


def test_lemma1_shape_errors():
    with pytest.raises(ShapeMismatch):
        macro_lemma1(state(2, X(1), A(3)), 1, 0)
    with pytest.raises(ShapeMismatch):
        macro_lemma1(state(2, X(1), A(2), X(2)), 1, 0)
    with pytest.raises(ShapeMismatch):
        macro_lemma1(state(2, A(1), X(1), A(2)), 1, 0, at=1)
    with pytest.raises(ValueError):
        macro_lemma1(state(2, X(1), A(2)), -1, 0)


def test_lemma2_examples():
    s = state(2, X(2), second=(A(1),))
    assert macro_lemma2(s, 0).steps == 0
    first = BlockWord.of(X(2), A(1), X(2), A(1), X(2))
    s = macro_lemma2(MacroState(2, first, BlockWord.of(A(2), B(1))), 1)
    # X(6) against b is left-reduced at once
    assert (s.first, s.second, s.steps) == (BlockWord.of(A(1), X(5)), BlockWord(), 4)


def test_lemma2_naive_replay():
    first = BlockWord.of(X(2), A(1), X(2), A(1), X(2), A(1))
    second = BlockWord.of(A(2), B(2))
    s = macro_lemma2(MacroState(2, first, second), 1)
    naive = list(pair_states(pi(2), first.expand(), second.expand(), fuel=4))[4]
    assert (naive.u, naive.v) == s.expand()


def test_lemma2_shape_errors():
    first = BlockWord.of(X(2), A(1), X(2), A(1), X(2))
    with pytest.raises(ShapeMismatch):
        macro_lemma2(MacroState(2, first, BlockWord.of(A(1))), 1)
    with pytest.raises(ShapeMismatch):
        macro_lemma2(MacroState(3, first, BlockWord.of(A(2))), 1)


def test_lemma5_examples():
    s = macro_lemma5(state(2, B(3), X(1), A(4)), 1, 2)
    assert (s.first, s.steps) == (BlockWord.of(B(1), X(3), A(2)), 4)
    assert iterate(pi(2), "bbb" + "ba" + "aaaa", 4) == "b" + "ba" * 3 + "aa"
    s = macro_lemma5(state(2, B(3), X(3), A(4)), 3, 2)
    assert s.steps == 10 == SequenceKit(2).t_prime(2)
    with pytest.raises(ShapeMismatch):
        macro_lemma5(state(2, B(2), X(1), A(4)), 1, 2)
    with pytest.raises(ValueError):
        macro_lemma5(state(2, B(1), X(1), A(2)), 1, 1)


def test_lemma5_exponent_against_naive():
    # the exponent is pN^2 - N + 1, not pN^2 - N
    for N in (2, 3, 4):
        for p in range(1, 4):
            for q in range(2, 5):
                w = "b" * (2 * q - 1) + "ba" * p + "a" * (2 * q)
                got = iterate(pi(N), w, p * N + p + 1)
                assert got == "b" * (2 * q - 3) + "ba" * (p * N * N - N + 1) + "a" * (2 * q - 2)


def test_head_moves():
    s = macro_head_a(state(2, A(1), B(3)))
    assert (s.first, s.steps) == (BlockWord.of(B(1), A(2), X(2), B(3)), 1)
    s = macro_head_lhs(state(2, B(1), A(2), X(5)))
    assert (s.first, s.steps) == (BlockWord.of(A(1), X(3)), 1)
    with pytest.raises(ShapeMismatch):
        macro_head_lhs(state(3, B(1), A(2), X(2)))
    with pytest.raises(ShapeMismatch):
        macro_head_a(state(2, B(1)))


def test_lemma8():
    s = macro_lemma8(state(2, X(3), A(1), X(6), second=(A(1),)))
    assert s.done and s.steps == 3
    with pytest.raises(ShapeMismatch):
        macro_lemma8(state(2, X(3), A(1), X(5), second=(A(1),)))
    with pytest.raises(ShapeMismatch):
        macro_lemma8(state(2, X(3), A(1), X(6), second=(A(2),)))


def test_initial_state():
    s = initial_state(2, 3)
    assert s.expand() == ("a" + "b" * 6 + "a" * 7, "b" * 5 + "a" * 6 + "baa")


def test_macro_main_examples():
    s = macro_main(2, 4)
    assert s.steps == 354 and s.done
    assert s.phase_charges() == {"lemma4": 91, "lemma7": 178, "lemma8": 85}
    s = macro_main(2, 1)
    assert s.steps == 6 and tuple(s.phase_charges()[p] for p in PHASES) == (1, 4, 1)
    assert macro_main(4, 4).steps == 34966


def test_macro_main_sweep():
    for N in range(2, 11):
        kit = SequenceKit(N)
        for k in range(1, 31):
            s = macro_main(N, k)
            assert s.done and s.steps == sigma(N, k, kit)
            charges = s.phase_charges()
            assert (charges["lemma4"], charges["lemma7"], charges["lemma8"]) == phase_charges(N, k, kit)
            assert sum(e.steps for e in s.lemma_log) == s.steps


def test_huge_k_stays_exact():
    s = macro_main(10, 200)
    assert s.steps == sigma(10, 200) and s.steps.bit_length() > 1300


@pytest.mark.parametrize("N, k", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)])
def test_macro_matches_naive_at_every_logged_step(N, k):
    assert macro_vs_naive(N, k) >= 3


def test_phase_snapshots_cover_three_phases():
    names = [snap[0] for snap in macro_main(3, 2).phase_snapshots()]
    assert names == list(PHASES)
