"""Adian's algorithm on explicit words.

Everything here works letter by letter on plain strings.  After each head
replacement the prefix decomposition is recomputed from scratch: replacing
one side of the relation by the other changes the letter at the head
position, which can lengthen the factor just before it.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, replace

from .errors import NotEqualEvidence
from .presentation import Presentation
from .words import EMPTY_SYMBOL, format_word


class Side(enum.Enum):
    LHS = "lhs"
    RHS = "rhs"


@dataclass(frozen=True)
class PrefixDecomposition:
    """ℜ(w): maximal proper prefixes of the relation sides, then an optional head and tail."""

    factors: tuple[str, ...]
    head: Side | None = None
    head_word: str = ""
    tail: str = ""

    @property
    def headless(self) -> bool:
        return self.head is None

    @property
    def head_position(self) -> int:
        return sum(map(len, self.factors))

    def word(self) -> str:
        return "".join(self.factors) + self.head_word + self.tail

    def render(self, compact: bool = False) -> str:
        """Bar/head notation, e.g. ``bb | bba [bbaa] bbab``.

        With ``compact``, runs of p equal leading factors u print as ``u^p``
        and words use power notation.
        """

        def fmt(w):
            return format_word(w, compact=True) if compact else w

        parts = []
        i = 0
        while i < len(self.factors):
            j = i + 1
            if compact:
                while j < len(self.factors) and self.factors[j] == self.factors[i]:
                    j += 1
            u = self.factors[i]
            if j - i == 1:
                parts.append(fmt(u))
            else:
                parts.append(f"{u}^{j - i}" if len(u) == 1 else f"({u})^{j - i}")
            i = j
        text = " | ".join(parts)
        if self.head is not None:
            pieces = [text] if text else []
            pieces.append(f"[{self.head_word}]")
            if self.tail:
                pieces.append(fmt(self.tail))
            text = " ".join(pieces)
        return text


def _match_length(w: str, start: int, side: str) -> int:
    if w.startswith(side, start):
        return len(side)
    n = 0
    limit = min(len(side), len(w) - start)
    while n < limit and w[start + n] == side[n]:
        n += 1
    return n


def decompose(pres: Presentation, w: str) -> PrefixDecomposition:
    """Factor ``w`` greedily into maximal prefixes of the relation sides.

    Each factor is matched against the side sharing its first letter.  The
    first factor that is a whole side becomes the head and the remainder of
    the word is the tail.

    >>> from adian.presentation import m0
    >>> decompose(m0(), "bbbbabbaabbab").render()
    'bb | bba [bbaa] bbab'
    """
    factors = []
    i = 0
    while i < len(w):
        side = pres.lhs if w[i] == "b" else pres.rhs
        n = _match_length(w, i, side)
        if n == len(side):
            head = Side.LHS if w[i] == "b" else Side.RHS
            return PrefixDecomposition(tuple(factors), head, side, w[i + n:])
        factors.append(w[i:i + n])
        i += n
    return PrefixDecomposition(tuple(factors))


def _rewrite(pres: Presentation, dec: PrefixDecomposition) -> str:
    other = pres.rhs if dec.head is Side.LHS else pres.lhs
    return "".join(dec.factors) + other + dec.tail


def step(pres: Presentation, w: str) -> str | None:
    """One step of 𝔄: replace the head of ℜ(w) by the other side, or ``None`` if headless."""
    dec = decompose(pres, w)
    if dec.headless:
        return None
    return _rewrite(pres, dec)


# --- single-word runs -------------------------------------------------------


class Outcome(enum.Enum):
    YES = "Yes"
    NO = "No"
    OUT_OF_FUEL = "OutOfFuel"


@dataclass(frozen=True)
class RunVerdict:
    outcome: Outcome
    steps_used: int
    final: object

    def __str__(self):
        return f"{self.outcome.value} after {self.steps_used} steps: {self.final}"


def _default_letter(w: str) -> str:
    return "b" if w.startswith("a") else "a"


def run_divisibility(pres: Presentation, w: str, x: str | None = None, fuel: int = 10_000) -> RunVerdict:
    """Decide whether ``w`` is left divisible by the letter ``x``, within ``fuel`` steps.

    ``x`` defaults to the letter ``w`` does not begin with.  ``Yes`` means
    some 𝔄-iterate begins with ``x``; ``No`` means a headless decomposition
    was reached.
    """
    if fuel < 0:
        raise ValueError("fuel must be nonnegative")
    if x is None:
        x = _default_letter(w)
    steps = 0
    while True:
        if w.startswith(x):
            return RunVerdict(Outcome.YES, steps, w)
        if steps >= fuel:
            return RunVerdict(Outcome.OUT_OF_FUEL, steps, w)
        nxt = step(pres, w)
        if nxt is None:
            return RunVerdict(Outcome.NO, steps, w)
        w = nxt
        steps += 1


# --- pairs ------------------------------------------------------------------


def p_reduce(u: str, v: str) -> tuple[str, str]:
    """Remove the longest common prefix of ``u`` and ``v``."""
    n = 0
    limit = min(len(u), len(v))
    while n < limit and u[n] == v[n]:
        n += 1
    return u[n:], v[n:]


@dataclass(frozen=True)
class PairState:
    u: str
    v: str
    steps: int = 0

    def __post_init__(self):
        if self.u[:1] and self.u[:1] == self.v[:1]:
            raise ValueError(f"pair ({self.u}, {self.v}) is not left-reduced")

    @property
    def done(self) -> bool:
        return not self.u and not self.v

    def __str__(self):
        return f"({self.u or EMPTY_SYMBOL}, {self.v or EMPTY_SYMBOL})"


def pair_step(pres: Presentation, s: PairState) -> PairState:
    """Rewrite the first component once and left-reduce against the second.

    Raises :class:`NotEqualEvidence` when the first component is headless.
    """
    if not s.u or not s.v:
        raise ValueError("pair_step needs two nonempty components")
    nxt = step(pres, s.u)
    if nxt is None:
        raise NotEqualEvidence(s)
    u, v = p_reduce(nxt, s.v)
    return PairState(u, v, s.steps + 1)


@dataclass(frozen=True)
class Equal:
    k: int

    def __str__(self):
        return f"Equal({self.k})"


@dataclass(frozen=True)
class NotEqual:
    state: PairState
    reason: str = "headless"

    def __str__(self):
        return "NotEqual"


@dataclass(frozen=True)
class OutOfFuel:
    state: PairState

    def __str__(self):
        return f"OutOfFuel{self.state}"


def _swap(s: PairState) -> PairState:
    return PairState(s.v, s.u, s.steps)


def pair_run(pres: Presentation, u: str, v: str, fuel: int = 10_000, rewrite: str = "first"):
    """Run pair-mode 𝔄 on ``(u, v)``.

    Returns ``Equal(k)`` when the pair reaches (ε, ε) after exactly ``k``
    steps, which is then the Dehn distance between ``u`` and ``v``;
    ``NotEqual`` when a headless decomposition appears or exactly one
    component empties; ``OutOfFuel`` with the frontier state otherwise.

    ``rewrite="second"`` is a diagnostic mode that rewrites the second
    component instead of the first.
    """
    if fuel < 0:
        raise ValueError("fuel must be nonnegative")
    if rewrite not in ("first", "second"):
        raise ValueError(f"rewrite must be 'first' or 'second', not {rewrite!r}")
    swapped = rewrite == "second"
    if swapped:
        u, v = v, u
    state = PairState(*p_reduce(u, v))
    result = None
    while result is None:
        if state.done:
            result = Equal(state.steps)
        elif not state.u or not state.v:
            result = NotEqual(state, "empty")
        elif state.steps >= fuel:
            result = OutOfFuel(state)
        else:
            try:
                state = pair_step(pres, state)
            except NotEqualEvidence:
                result = NotEqual(state, "headless")
    if swapped and not isinstance(result, Equal):
        result = replace(result, state=_swap(result.state))
    return result


def iterate(pres: Presentation, w: str, count: int) -> str | None:
    """𝔄^count(w) ignoring the divisibility stop rule; ``None`` if a headless word is hit first."""
    for _ in range(count):
        w = step(pres, w)
        if w is None:
            return None
    return w


def pair_states(pres: Presentation, u: str, v: str, fuel: int = 10_000):
    """Yield the successive pair states of pair-mode 𝔄, starting with the reduced input."""
    state = PairState(*p_reduce(u, v))
    yield state
    while state.u and state.v and state.steps < fuel:
        try:
            state = pair_step(pres, state)
        except NotEqualEvidence:
            return
        yield state


# --- traces -----------------------------------------------------------------


@dataclass(frozen=True)
class TraceRecord:
    step: int
    word: str | None = None
    pair: tuple[str, str] | None = None
    decomposition: PrefixDecomposition | None = None

    def format(self, compact: bool = False) -> str:
        if self.pair is not None:
            u, v = self.pair
            return f"{self.step}: ({u or EMPTY_SYMBOL}, {v or EMPTY_SYMBOL})"
        return f"{self.step}: {self.decomposition.render(compact)}"

    def to_dict(self) -> dict:
        dec = self.decomposition
        record = {"step": self.step}
        if self.pair is not None:
            record["pair"] = list(self.pair)
        else:
            record["word"] = self.word
        record["factors"] = list(dec.factors) if dec else []
        record["head"] = dec.head_word if dec and dec.head else None
        record["tail"] = dec.tail if dec else ""
        return record

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)


def trace_word(pres: Presentation, w: str, fuel: int = 10_000, x: str | None = None) -> list[TraceRecord]:
    """One record per decomposition 𝔄 computes while deciding divisibility of ``w``.

    The run stops, as :func:`run_divisibility` does, once the word begins
    with ``x``, turns headless, or ``fuel`` steps have been taken.
    """
    if not w:
        return []
    if x is None:
        x = _default_letter(w)
    records = []
    for i in range(fuel):
        if w.startswith(x):
            break
        dec = decompose(pres, w)
        records.append(TraceRecord(i, word=w, decomposition=dec))
        if dec.headless:
            break
        w = _rewrite(pres, dec)
    return records


def trace_pair(pres: Presentation, u: str, v: str, fuel: int = 10_000) -> list[TraceRecord]:
    """One record per pair state, including the terminal one.

    Records carry ℜ of the first component whenever a step is attempted
    from that state.
    """
    records = []
    for state in pair_states(pres, u, v, fuel):
        dec = decompose(pres, state.u) if state.u and state.v else None
        records.append(TraceRecord(state.steps, pair=(state.u, state.v), decomposition=dec))
    return records


def trace(pres: Presentation, target, fuel: int = 10_000) -> list[TraceRecord]:
    """Trace a word (``str``) or a pair (2-tuple of ``str``)."""
    if isinstance(target, str):
        return trace_word(pres, target, fuel)
    u, v = target
    return trace_pair(pres, u, v, fuel)
