"""Words over the alphabet {a, b}.

A word is an ordinary ``str`` built from the letters ``a`` and ``b``; the
empty string is the empty word.  Alongside that, :class:`BlockWord` is a
compressed form made of blocks ``a^i``, ``b^j`` and ``(ba)^p`` whose
exponents are unbounded Python ints, so words such as ``(ba)^(10**40)``
can be manipulated without ever being spelled out.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby

from .errors import ExpansionOverflow, WordSyntaxError

ALPHABET = "ab"
DEFAULT_CAP = 1 << 24
EMPTY_SYMBOL = "ε"


def check_word(w: str) -> str:
    """Return ``w`` unchanged, raising ``ValueError`` if it has a letter outside {a, b}."""
    if not isinstance(w, str):
        raise TypeError(f"word must be a str, not {type(w).__name__}")
    bad = set(w) - set(ALPHABET)
    if bad:
        raise ValueError(f"letters outside {{a, b}}: {''.join(sorted(bad))!r}")
    return w


# --- power notation ---------------------------------------------------------


class _Parser:
    def __init__(self, text, cap):
        self.text = text
        self.pos = 0
        self.cap = cap

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else None

    def word(self, closing=None):
        parts = []
        length = 0
        while True:
            c = self.peek()
            if c is None or c == closing:
                break
            atom = self.atom()
            length += len(atom)
            if length > self.cap:
                raise ExpansionOverflow(f"expanded length exceeds cap {self.cap}")
            parts.append(atom)
        return "".join(parts)

    def atom(self):
        c = self.peek()
        start = self.pos
        if c in ("a", "b"):
            self.pos += 1
            body = c
        elif c == "(":
            self.pos += 1
            body = self.word(closing=")")
            if self.peek() != ")":
                raise WordSyntaxError("unclosed '('", start)
            self.pos += 1
        else:
            raise WordSyntaxError(f"unexpected character {c!r}", self.pos)
        if self.peek() == "^":
            self.pos += 1
            exponent = self.exponent()
            if len(body) * exponent > self.cap:
                raise ExpansionOverflow(f"expanded length exceeds cap {self.cap}")
            body = body * exponent
        return body

    def exponent(self):
        start = self.pos
        while self.peek() is not None and self.peek().isdigit():
            self.pos += 1
        digits = self.text[start:self.pos]
        if not digits:
            raise WordSyntaxError("expected a positive integer after '^'", start)
        value = int(digits)
        if value < 1:
            raise WordSyntaxError("exponent must be positive", start)
        return value


def parse_word(text: str, cap: int = DEFAULT_CAP) -> str:
    """Expand power notation such as ``"baa(ba)^2"`` into a plain word.

    Grammar: a concatenation of atoms, where an atom is ``a``, ``b`` or a
    parenthesised word, optionally followed by ``^`` and a positive decimal
    exponent.  Exponents bind to the single preceding atom, so ``ab^2`` is
    ``abb``.

    >>> parse_word("baa(ba)^2")
    'baababa'
    >>> parse_word("b^2a^2")
    'bbaa'
    """
    parser = _Parser(text, cap)
    w = parser.word()
    if parser.pos != len(text):
        raise WordSyntaxError("unmatched ')'", parser.pos)
    return w


def format_word(w: str, compact: bool = False, empty: str = "") -> str:
    """Print a word; ``compact`` uses power notation (``ab^8a^9``, ``(ba)^3``)."""
    if not w:
        return empty
    if not compact:
        return w
    return compress(w).format()


# --- compressed words -------------------------------------------------------

_LETTER = {"A": "a", "B": "b"}
_KIND = {"a": "A", "b": "B"}


@dataclass(frozen=True, slots=True)
class Block:
    """One block of a :class:`BlockWord`: ``A`` is a^exp, ``B`` is b^exp, ``X`` is (ba)^exp."""

    kind: str
    exp: int

    def __post_init__(self):
        if self.kind not in ("A", "B", "X"):
            raise ValueError(f"unknown block kind {self.kind!r}")
        if self.exp < 1:
            raise ValueError(f"block exponent must be positive, got {self.exp}")

    @property
    def length(self) -> int:
        return 2 * self.exp if self.kind == "X" else self.exp

    def letter_at(self, offset: int) -> str:
        if self.kind == "X":
            return "b" if offset % 2 == 0 else "a"
        return _LETTER[self.kind]

    def expand(self) -> str:
        return ("ba" if self.kind == "X" else _LETTER[self.kind]) * self.exp

    def format(self) -> str:
        base = "(ba)" if self.kind == "X" else _LETTER[self.kind]
        if self.exp == 1:
            return base[1:-1] if self.kind == "X" else base
        return f"{base}^{self.exp}"

    def __repr__(self):
        return f"{self.kind}({self.exp})"


def A(i: int) -> Block:
    return Block("A", i)


def B(j: int) -> Block:
    return Block("B", j)


def X(p: int) -> Block:
    return Block("X", p)


@dataclass(frozen=True)
class BlockWord:
    """A normalized sequence of blocks.

    Normalized means every exponent is positive and no two neighbouring
    blocks have the same kind.  A ``B`` block followed by an ``A`` block is
    left alone; rewriting ``b·a`` into an ``X`` block only ever happens
    through :meth:`regroup`.
    """

    blocks: tuple[Block, ...] = ()

    def __post_init__(self):
        for left, right in zip(self.blocks, self.blocks[1:]):
            if left.kind == right.kind:
                raise ValueError(f"adjacent blocks of kind {left.kind} in {self.blocks}")

    @classmethod
    def of(cls, *parts) -> BlockWord:
        """Build a normalized block word, merging equal neighbours and dropping empty blocks.

        Parts may be :class:`Block` objects, ``(kind, exp)`` tuples or other
        block words.
        """
        out: list[Block] = []
        for part in parts:
            if isinstance(part, BlockWord):
                # already normalized: only the seam can need merging
                if not part.blocks:
                    continue
                first, rest = part.blocks[0], part.blocks[1:]
                if out and out[-1].kind == first.kind:
                    out[-1] = Block(first.kind, out[-1].exp + first.exp)
                else:
                    out.append(first)
                out.extend(rest)
                continue
            block = part if isinstance(part, Block) else None
            kind, exp = (part.kind, part.exp) if block else part
            if exp == 0:
                continue
            if out and out[-1].kind == kind:
                out[-1] = Block(kind, out[-1].exp + exp)
            else:
                out.append(block or Block(kind, exp))
        return cls(tuple(out))

    def __add__(self, other: BlockWord) -> BlockWord:
        return BlockWord.of(self, other)

    def __bool__(self):
        return bool(self.blocks)

    def __repr__(self):
        return "·".join(map(repr, self.blocks)) if self.blocks else "BlockWord()"

    @property
    def length(self) -> int:
        return sum(b.length for b in self.blocks)

    def first_letter(self) -> str | None:
        return self.blocks[0].letter_at(0) if self.blocks else None

    def drop(self, n: int) -> BlockWord:
        """Remove the first ``n`` letters."""
        if n < 0:
            raise ValueError("cannot drop a negative number of letters")
        if n == 0:
            return self
        for i, block in enumerate(self.blocks):
            if n < block.length:
                break
            n -= block.length
        else:
            if n:
                raise ValueError("cannot drop more letters than the word has")
            return BlockWord()
        rest = self.blocks[i + 1:]
        if block.kind != "X":
            head = [(block.kind, block.exp - n)]
        elif n % 2 == 0:
            head = [("X", block.exp - n // 2)]
        else:
            head = [("A", 1), ("X", block.exp - (n + 1) // 2)]
        head_word = BlockWord.of(*head)
        if not head_word.blocks or not rest or head_word.blocks[-1].kind != rest[0].kind:
            return BlockWord(head_word.blocks + rest)
        return BlockWord.of(head_word, BlockWord(rest))

    def regroup(self) -> BlockWord:
        """Re-express the word in the greedy form :func:`compress` would give.

        This is the only operation that folds ``b·a`` pairs meeting across
        block boundaries into ``X`` blocks (or splits ``X`` blocks whose end
        letters merge into neighbouring runs).  The interior of a long ``X``
        block is never spelled out.
        """
        runs: list[tuple[str, int]] = []
        for block in self.blocks:
            if block.kind != "X":
                runs.append((_LETTER[block.kind], block.exp))
            elif block.exp < 4:
                runs.extend([("b", 1), ("a", 1)] * block.exp)
            else:
                runs.extend([("b", 1), ("a", 1), ("X", block.exp - 2), ("b", 1), ("a", 1)])
        merged: list[tuple[str, int]] = []
        for kind, exp in runs:
            if merged and kind != "X" and merged[-1][0] == kind:
                merged[-1] = (kind, merged[-1][1] + exp)
            else:
                merged.append((kind, exp))
        return _merge_runs(merged)

    def expand(self, cap: int = DEFAULT_CAP) -> str:
        return expand(self, cap)

    def format(self) -> str:
        return "".join(b.format() for b in self.blocks)

    def letters(self):
        """Iterate over the letters lazily."""
        for block in self.blocks:
            unit = "ba" if block.kind == "X" else _LETTER[block.kind]
            for _ in range(block.exp):
                yield from unit


def _merge_runs(runs) -> BlockWord:
    """Turn maximal letter runs (plus ready-made X runs) into blocks.

    A ``b`` run of length one followed by an ``a`` run of length one folds
    into ``X(1)``; neighbouring ``X`` blocks then merge.
    """
    out: list[tuple[str, int]] = []
    i = 0
    while i < len(runs):
        kind, exp = runs[i]
        if kind == "b" and exp == 1 and i + 1 < len(runs) and runs[i + 1] == ("a", 1):
            out.append(("X", 1))
            i += 2
            continue
        out.append((_KIND.get(kind, kind), exp))
        i += 1
    return BlockWord.of(*out)


def compress(w: str) -> BlockWord:
    """Greedy block form of a word.

    Maximal letter runs become ``A``/``B`` blocks, and every stretch of
    alternating single ``b``, single ``a`` runs becomes one ``X`` block.

    >>> compress("babababa")
    X(4)
    >>> compress("bbaaa")
    B(2)·A(3)
    """
    check_word(w)
    return _merge_runs([(letter, len(list(group))) for letter, group in groupby(w)])


def expand(bw: BlockWord, cap: int = DEFAULT_CAP) -> str:
    length = bw.length
    if length > cap:
        raise ExpansionOverflow(f"expanded length {length} exceeds cap {cap}")
    return "".join(block.expand() for block in bw.blocks)


def common_prefix_length(x: BlockWord, y: BlockWord) -> int:
    """Length of the longest common prefix of two block words, without expanding them.

    Runs of equal periodic blocks are skipped in one move; where the
    patterns differ at most two letters can agree before a block ends or a
    mismatch shows up, so the cost is linear in the number of blocks.
    """
    i = j = 0
    oi = oj = 0
    total = 0
    xb, yb = x.blocks, y.blocks
    while i < len(xb) and j < len(yb):
        bx, by = xb[i], yb[j]
        if bx.kind == by.kind and (bx.kind != "X" or oi % 2 == oj % 2):
            n = min(bx.length - oi, by.length - oj)
        elif bx.letter_at(oi) == by.letter_at(oj):
            n = 1
        else:
            break
        total += n
        oi += n
        oj += n
        if oi == bx.length:
            i, oi = i + 1, 0
        if oj == by.length:
            j, oj = j + 1, 0
    return total
