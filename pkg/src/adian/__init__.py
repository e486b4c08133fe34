"""Adian's algorithm for left cycle-free one-relation monoids on {a, b}."""

from .engine import (
    Equal,
    NotEqual,
    OutOfFuel,
    PairState,
    PrefixDecomposition,
    decompose,
    pair_run,
    pair_step,
    run_divisibility,
    step,
    trace,
)
from .presentation import Presentation, m0, parse_relation, pi, validate
from .words import BlockWord, compress, expand, parse_word

__version__ = "0.1.0"
