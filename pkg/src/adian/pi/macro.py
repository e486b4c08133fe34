"""Lemma-certified macro engine for pair-mode 𝔄 on Π_N.

States are pairs of :class:`~adian.words.BlockWord` with exponents of any
size.  Each macro move checks that the first component has exactly the
block shape its lemma talks about, replaces it by the lemma's result and
charges the lemma's step count; afterwards the pair is left-reduced, so a
state always coincides with the naive engine's state at the same step
index.  Nothing is matched approximately: a wrong shape raises
:class:`~adian.errors.ShapeMismatch`.

The moves used by :func:`macro_main` are

* ``head-a``: a leading ``a`` is itself the head and becomes baa(ba)^N (1 step);
* ``lemma1``: X^p aa X^q → aa X^(q+pN²) in p(N+1) steps;
* ``lemma2``: (X^N (aX^N)^2q ·S, a^2q Q) → (X^s(q) ·S, Q) in T(q) steps;
* ``lemma5``: b^(2q−1) X^p a^2q → b^(2q−3) X^(pN²−N+1) a^(2q−2) in pN+p+1 steps;
* ``head-lhs``: b aa X^r → a X^(r−N), the head being the whole left side (1 step);
* ``lemma8``: (X^p a X^pN, a) → (ε, ε) in p steps.

Moves may act behind a prefix made only of ``X`` and ``B`` blocks: such a
prefix splits into factors ``ba`` and ``b`` that never contain a head, so
as long as the rewritten part keeps starting with ``b`` the prefix is never
touched.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from ..errors import InternalMismatch, ShapeMismatch
from ..words import A, B, BlockWord, X, common_prefix_length
from .sequences import SequenceKit, phase_charges, sigma, witness

PHASES = ("lemma4", "lemma7", "lemma8")


@dataclass(frozen=True)
class LemmaCharge:
    lemma: str
    params: tuple
    steps: int
    phase: str | None
    at_step: int
    first: BlockWord
    second: BlockWord


@dataclass(frozen=True)
class MacroState:
    n_param: int
    first: BlockWord
    second: BlockWord = field(default_factory=BlockWord)
    steps: int = 0
    lemma_log: tuple[LemmaCharge, ...] = ()
    phase: str | None = None

    @property
    def done(self) -> bool:
        return not self.first and not self.second

    def expand(self, cap: int = 1 << 24) -> tuple[str, str]:
        return self.first.expand(cap), self.second.expand(cap)

    def phase_charges(self) -> dict[str, int]:
        totals: dict[str, int] = {}
        for entry in self.lemma_log:
            key = entry.phase or entry.lemma
            totals[key] = totals.get(key, 0) + entry.steps
        return totals

    def phase_snapshots(self) -> list[tuple[str, int, BlockWord, BlockWord]]:
        """(phase, step index, first, second) at the end of each phase."""
        out = []
        for i, entry in enumerate(self.lemma_log):
            last = i + 1 == len(self.lemma_log) or self.lemma_log[i + 1].phase != entry.phase
            if entry.phase and last:
                out.append((entry.phase, entry.at_step, entry.first, entry.second))
        return out


def reduce_pair(first: BlockWord, second: BlockWord) -> tuple[BlockWord, BlockWord]:
    n = common_prefix_length(first, second)
    return first.drop(n), second.drop(n)


def _advance(state: MacroState, lemma: str, params: tuple, charge: int, first: BlockWord, second=None) -> MacroState:
    second = state.second if second is None else second
    first, second = reduce_pair(first, second)
    steps = state.steps + charge
    entry = LemmaCharge(lemma, params, charge, state.phase, steps, first, second)
    return replace(state, first=first, second=second, steps=steps, lemma_log=state.lemma_log + (entry,))


def _expect(blocks, index: int, kind: str, exp: int | None, lemma: str):
    if index >= len(blocks) or blocks[index].kind != kind or (exp is not None and blocks[index].exp != exp):
        found = blocks[index] if index < len(blocks) else "end of word"
        want = f"{kind}({exp})" if exp is not None else f"{kind}(·)"
        raise ShapeMismatch(f"{lemma}: expected {want} at block {index}, found {found}")
    return blocks[index]


def _check_prefix(blocks, at: int, lemma: str):
    for block in blocks[:at]:
        if block.kind not in ("X", "B"):
            raise ShapeMismatch(f"{lemma}: prefix block {block} is not inert (only X and B blocks are)")


def macro_head_a(state: MacroState) -> MacroState:
    """Rewrite a leading ``a`` of the first component (always the head) into baa(ba)^N."""
    blocks = state.first.blocks
    _expect(blocks, 0, "A", None, "head-a")
    rewritten = BlockWord.of(B(1), A(2), X(state.n_param), state.first.drop(1))
    return _advance(state, "head-a", (), 1, rewritten)


def macro_lemma1(state: MacroState, p: int, q: int, at: int = 0) -> MacroState:
    """X(p)·A(2)·X(q) → A(2)·X(q+pN²) starting at block ``at``, charging p(N+1).

    ``p = 0`` or ``q = 0`` means that block is absent.
    """
    N = state.n_param
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    if p == 0:
        return _advance(state, "lemma1", (0, q), 0, state.first)
    blocks = state.first.blocks
    _check_prefix(blocks, at, "lemma1")
    _expect(blocks, at, "X", p, "lemma1")
    _expect(blocks, at + 1, "A", 2, "lemma1")
    end = at + 2
    if q:
        _expect(blocks, end, "X", q, "lemma1")
        end += 1
    elif end < len(blocks) and blocks[end].kind == "X":
        raise ShapeMismatch(f"lemma1: q=0 but block {end} is {blocks[end]}")
    rewritten = BlockWord.of(*blocks[:at], A(2), X(q + p * N * N), *blocks[end:])
    return _advance(state, "lemma1", (p, q), p * (N + 1), rewritten)


def macro_lemma2(state: MacroState, q: int, kit: SequenceKit | None = None) -> MacroState:
    """(X(N)·(A(1)X(N))^2q·S, A(2q)·Q) → (X(s(q))·S, Q), charging T(q)."""
    N = state.n_param
    kit = kit or SequenceKit(N)
    if q < 0:
        raise ValueError("q must be nonnegative")
    blocks = state.first.blocks
    _expect(blocks, 0, "X", N, "lemma2")
    for i in range(2 * q):
        _expect(blocks, 2 * i + 1, "A", 1, "lemma2")
        _expect(blocks, 2 * i + 2, "X", N, "lemma2")
    if q == 0:
        return _advance(state, "lemma2", (0,), 0, state.first)
    lead = state.second.blocks[0] if state.second.blocks else None
    if lead is None or lead.kind != "A" or lead.exp < 2 * q:
        raise ShapeMismatch(f"lemma2: second component must start with A({2 * q}), found {lead}")
    first = BlockWord.of(X(kit.s(q)), *blocks[4 * q + 1:])
    return _advance(state, "lemma2", (q,), kit.T(q), first, state.second.drop(2 * q))


def macro_lemma5(state: MacroState, p: int, q: int, at: int = 0) -> MacroState:
    """B(2q−1)·X(p)·A(2q) → B(2q−3)·X(pN²−N+1)·A(2q−2) at block ``at``, charging pN+p+1."""
    N = state.n_param
    if p < 1 or q < 2:
        raise ValueError("lemma5 needs p >= 1 and q >= 2")
    blocks = state.first.blocks
    _check_prefix(blocks, at, "lemma5")
    _expect(blocks, at, "B", 2 * q - 1, "lemma5")
    _expect(blocks, at + 1, "X", p, "lemma5")
    _expect(blocks, at + 2, "A", 2 * q, "lemma5")
    rewritten = BlockWord.of(
        *blocks[:at], B(2 * q - 3), X(p * N * N - N + 1), A(2 * q - 2), *blocks[at + 3:]
    )
    return _advance(state, "lemma5", (p, q), p * N + p + 1, rewritten)


def macro_head_lhs(state: MacroState, at: int = 0) -> MacroState:
    """B(1)·A(2)·X(r) with r ≥ N at block ``at``: the whole left side is the head; → A(1)·X(r−N)."""
    N = state.n_param
    blocks = state.first.blocks
    _check_prefix(blocks, at, "head-lhs")
    _expect(blocks, at, "B", 1, "head-lhs")
    _expect(blocks, at + 1, "A", 2, "head-lhs")
    r = _expect(blocks, at + 2, "X", None, "head-lhs").exp
    if r < N:
        raise ShapeMismatch(f"head-lhs: X({r}) is shorter than X({N})")
    rewritten = BlockWord.of(*blocks[:at], A(1), X(r - N), *blocks[at + 3:])
    return _advance(state, "head-lhs", (r,), 1, rewritten)


def macro_lemma8(state: MacroState) -> MacroState:
    """(X(p)·A(1)·X(pN), A(1)) → (ε, ε), charging p."""
    N = state.n_param
    blocks = state.first.blocks
    p = _expect(blocks, 0, "X", None, "lemma8").exp
    _expect(blocks, 1, "A", 1, "lemma8")
    _expect(blocks, 2, "X", p * N, "lemma8")
    if len(blocks) != 3 or state.second != BlockWord.of(A(1)):
        raise ShapeMismatch(f"lemma8: expected (X(p)·A(1)·X(pN), A(1)), got ({state.first}, {state.second})")
    return _advance(state, "lemma8", (p,), p, BlockWord(), BlockWord())


# --- phases -----------------------------------------------------------------


def initial_state(N: int, k: int) -> MacroState:
    """(U_k, V_k) in block form: A(1)·B(2k−1)·X(1)·A(2k) and B(2k−1)·A(2k)·B(1)·A(2)."""
    witness(k)
    first = BlockWord.of(A(1), B(2 * k - 1), X(1), A(2 * k))
    second = BlockWord.of(B(2 * k - 1), A(2 * k), B(1), A(2))
    return MacroState(N, first, second)


def phase_one(state: MacroState, k: int, kit: SequenceKit) -> MacroState:
    """(aW, V_k) → (X^(s(k−1)−1) W, a) in T(k−1) + 2k − 1 steps."""
    state = replace(state, phase="lemma4")
    for _ in range(2 * k - 1):
        state = macro_head_a(state)
    if k > 1:
        state = macro_lemma2(state, k - 1, kit)
    return replace(state, phase=None)


def phase_two(state: MacroState, k: int, kit: SequenceKit) -> MacroState:
    """(X^m b^2k a^2k a, a) → (X^m a X^(s′(k)−1), a) in T′(k) steps, the prefix X^m untouched."""
    state = replace(state, phase="lemma7")
    at = 1 if state.first.blocks[0].kind == "X" else 0
    p = 1
    for q in range(k, 1, -1):
        state = macro_lemma5(state, p, q, at)
        p = state.first.blocks[at + 1].exp
    # now X^m · b · X^p · aa
    state = macro_lemma1(state, p, 0, at + 1)
    state = macro_head_lhs(state, at)
    return replace(state, phase=None)


def phase_three(state: MacroState) -> MacroState:
    state = replace(state, phase="lemma8")
    state = macro_lemma8(state)
    return replace(state, phase=None)


def macro_main(N: int, k: int) -> MacroState:
    """Drive (U_k, V_k) to (ε, ε) with certified moves; the step total must equal σ_N(k).

    >>> macro_main(2, 4).steps
    354
    """
    kit = SequenceKit(N)
    state = initial_state(N, k)
    state = phase_one(state, k, kit)
    state = phase_two(state, k, kit)
    state = phase_three(state)
    if not state.done:
        raise InternalMismatch(f"macro run for N={N}, k={k} ended at ({state.first}, {state.second})")
    expected = sigma(N, k, kit)
    if state.steps != expected:
        raise InternalMismatch(f"macro run charged {state.steps} steps, σ_{N}({k}) = {expected}")
    charges = state.phase_charges()
    if tuple(charges.get(p, 0) for p in PHASES) != phase_charges(N, k, kit):
        raise InternalMismatch(f"phase charges {charges} differ from {phase_charges(N, k, kit)}")
    return state
