"""One-relation presentations ⟨a, b | bP = aQ⟩ and simple classifiers."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby

from .errors import EmptyWord, IdenticalSides, NotLeftCycleFree
from .words import DEFAULT_CAP, check_word, parse_word


@dataclass(frozen=True)
class Presentation:
    """A left cycle-free relation: ``lhs`` starts with ``b``, ``rhs`` with ``a``.

    Build instances through :func:`validate` (or the constructors below),
    which reorient the relation and reject invalid ones.
    """

    lhs: str
    rhs: str

    def __post_init__(self):
        check_word(self.lhs)
        check_word(self.rhs)
        if not self.lhs or not self.rhs:
            raise NotLeftCycleFree("both sides of the relation must be nonempty")
        if self.lhs[0] != "b" or self.rhs[0] != "a":
            raise NotLeftCycleFree(
                f"relation {self.lhs} = {self.rhs} is not oriented as bP = aQ"
            )

    def side(self, letter: str) -> str:
        """The side of the relation that begins with ``letter``."""
        return self.lhs if letter == "b" else self.rhs

    def other(self, side: str) -> str:
        return self.rhs if side == self.lhs else self.lhs

    @property
    def is_monadic(self) -> bool:
        """True for relations of the form bUa = a."""
        return self.rhs == "a" and self.lhs.endswith("a")

    @property
    def middle(self) -> str:
        """The word U of a monadic relation bUa = a."""
        if not self.is_monadic:
            raise ValueError(f"{self} is not monadic")
        return self.lhs[1:-1]

    def __str__(self):
        return f"{self.lhs}={self.rhs}"


@dataclass(frozen=True)
class PiPresentation(Presentation):
    """The relation baa(ba)^N = a, i.e. X a X^N = a with X = ba."""

    n: int = 2

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"N must be at least 2, got {self.n}")
        if self.lhs != "baa" + "ba" * self.n or self.rhs != "a":
            raise ValueError(f"not the relation baa(ba)^{self.n} = a")
        super().__post_init__()


def validate(lhs: str, rhs: str) -> Presentation:
    """Return the presentation with sides oriented so that ``lhs`` starts with ``b``.

    >>> validate("a", "bbaa")
    Presentation(lhs='bbaa', rhs='a')
    """
    check_word(lhs)
    check_word(rhs)
    if not lhs or not rhs:
        raise NotLeftCycleFree("both sides of the relation must be nonempty")
    if lhs == rhs:
        raise IdenticalSides(f"both sides are {lhs}")
    if lhs[0] == rhs[0]:
        raise NotLeftCycleFree(f"both sides begin with {lhs[0]!r}")
    if lhs[0] == "a":
        lhs, rhs = rhs, lhs
    return Presentation(lhs, rhs)


def parse_relation(text: str, cap: int = DEFAULT_CAP) -> Presentation:
    """Parse ``"LHS=RHS"`` in power notation, e.g. ``"baa(ba)^2=a"``."""
    if text.count("=") != 1:
        raise ValueError(f"relation must contain exactly one '=': {text!r}")
    left, right = text.split("=")
    return validate(parse_word(left.strip(), cap), parse_word(right.strip(), cap))


def pi(n: int) -> PiPresentation:
    """The presentation of Π_N."""
    return PiPresentation("baa" + "ba" * n, "a", n)


def m0() -> Presentation:
    """⟨a, b | b²a² = a⟩, the running example for prefix decompositions."""
    return Presentation("bbaa", "a")


def relative_length(w: str) -> int:
    """Number of maximal single-letter runs; b^α a^β b^γ a^δ has relative length 4."""
    check_word(w)
    if not w:
        raise EmptyWord("relative length of the empty word is undefined")
    return sum(1 for _ in groupby(w))


def is_residually_finite_monadic(u: str) -> bool:
    """Residual finiteness of ⟨a, b | bUa = a⟩ by Bouwsma's classification: U must be b^k."""
    check_word(u)
    return "a" not in u
