"""Everything specific to Π_N = ⟨a, b | baa(ba)^N = a⟩."""

from .collatz import (
    CollatzOutOfFuel,
    CollatzState,
    Terminated,
    collatz_run,
    collatz_step,
    collatz_trajectory,
)
from .macro import (
    MacroState,
    initial_state,
    macro_head_a,
    macro_head_lhs,
    macro_lemma1,
    macro_lemma2,
    macro_lemma5,
    macro_lemma8,
    macro_main,
)
from .sequences import (
    SequenceKit,
    WitnessPair,
    closed_form,
    lower_bound_check,
    phase_charges,
    seq,
    sigma,
    sigma_closed_form,
    t_prime_uncorrected,
    witness,
)
