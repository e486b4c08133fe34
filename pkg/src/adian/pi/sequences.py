"""Step-count sequences for Π_N, witness words, σ_N(k) and the resulting lower bound.

The recurrences are authoritative; closed forms are only used to check
them.  All arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

from ..errors import InternalMismatch, InvalidK

NAMES = ("s", "t", "T", "s'", "t'", "T'")
_ALIASES = {"sp": "s'", "tp": "t'", "Tp": "T'", "s_prime": "s'", "t_prime": "t'", "T_prime": "T'"}


def _canonical(which: str) -> str:
    which = _ALIASES.get(which, which)
    if which not in NAMES:
        raise ValueError(f"unknown sequence {which!r}; expected one of {NAMES}")
    return which


@dataclass
class SequenceKit:
    """Memoized s, t, T and s′, t′, T′ for a fixed N.

    >>> kit = SequenceKit(2)
    >>> [kit.s(n) for n in range(6)]
    [2, 6, 22, 86, 342, 1366]
    """

    n_param: int
    _tables: dict = field(default_factory=lambda: {name: [] for name in NAMES}, repr=False)

    def __post_init__(self):
        if self.n_param < 2:
            raise ValueError(f"N must be at least 2, got {self.n_param}")

    def _extend(self, upto: int):
        N = self.n_param
        s, t, T = self._tables["s"], self._tables["t"], self._tables["T"]
        sp, tp, Tp = self._tables["s'"], self._tables["t'"], self._tables["T'"]
        while len(s) <= upto:
            n = len(s)
            if n == 0:
                s.append(N)
                t.append(0)
                sp.append(1)
                tp.append(0)
            else:
                s.append(N * N * s[n - 1] - N * N + N)
                t.append((N + 1) * (s[n - 1] - 1) + 1)
                sp.append(N * N * sp[n - 1] - N + 1)
                tp.append((N + 1) * sp[n - 1] + 1)
            T.append(t[n] + (T[n - 1] if n else 0))
            Tp.append(tp[n] + (Tp[n - 1] if n else 0))

    def value(self, which: str, n: int) -> int:
        if n < 0:
            raise ValueError("sequence index must be nonnegative")
        self._extend(n)
        return self._tables[_canonical(which)][n]

    def s(self, n):
        return self.value("s", n)

    def t(self, n):
        return self.value("t", n)

    def T(self, n):
        return self.value("T", n)

    def s_prime(self, n):
        return self.value("s'", n)

    def t_prime(self, n):
        return self.value("t'", n)

    def T_prime(self, n):
        return self.value("T'", n)

    def row(self, n: int) -> tuple[int, ...]:
        return tuple(self.value(name, n) for name in NAMES)


def _exact(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise InternalMismatch(f"{num}/{den} is not an integer")
    return q


def closed_form(N: int, which: str, n: int) -> int:
    """Closed-form value of a sequence.

    ``t`` and ``t'`` have closed forms only for n ≥ 1; at n = 0 their
    defining value 0 is returned.  For ``t'`` the form N^(2n-1) + 2 is
    used, which is what the recurrence actually gives.
    """
    which = _canonical(which)
    if n < 0:
        raise ValueError("sequence index must be nonnegative")
    if which == "s":
        return _exact(N * (N ** (2 * n + 1) + 1), N + 1)
    if which == "t":
        return N ** (2 * n) if n > 0 else 0
    if which == "T":
        return _exact(N * N * (N ** (2 * n) - 1), N * N - 1)
    if which == "s'":
        # N/(N+1) * (N^(2n) + 1/N)
        return _exact(N ** (2 * n + 1) + 1, N + 1)
    if which == "t'":
        return N ** (2 * n - 1) + 2 if n > 0 else 0
    return _exact(N * (N ** (2 * n) - 1), N * N - 1) + 2 * n


def t_prime_uncorrected(N: int, n: int) -> int:
    """The form N^(2n) + 2 for t′, which the recurrence contradicts; kept for comparison only."""
    return N ** (2 * n) + 2


def seq(kit: SequenceKit, which: str, n: int, mode: str = "recurrence") -> int:
    if mode == "recurrence":
        return kit.value(which, n)
    if mode == "closed_form":
        return closed_form(kit.n_param, which, n)
    raise ValueError(f"mode must be 'recurrence' or 'closed_form', not {mode!r}")


def phase_charges(N: int, k: int, kit: SequenceKit | None = None) -> tuple[int, int, int]:
    """Steps spent in the three phases on (U_k, V_k): T(k−1)+2k−1, T′(k), s(k−1)−1."""
    if k < 1:
        raise InvalidK(f"k must be at least 1, got {k}")
    kit = kit or SequenceKit(N)
    return kit.T(k - 1) + 2 * k - 1, kit.T_prime(k), kit.s(k - 1) - 1


def sigma_closed_form(N: int, k: int) -> int:
    return _exact(2 * N * (N ** (2 * k) - 1), N * N - 1) + 4 * k - 2


def sigma(N: int, k: int, kit: SequenceKit | None = None) -> int:
    """σ_N(k), the number of 𝔄 steps taking (U_k, V_k) to (ε, ε).

    Computed both as the sum of the phase charges and from the closed form;
    the two must agree.

    >>> [sigma(2, k) for k in range(1, 8)]
    [6, 26, 94, 354, 1382, 5482, 21870]
    """
    if N < 2:
        raise ValueError(f"N must be at least 2, got {N}")
    total = sum(phase_charges(N, k, kit))
    closed = sigma_closed_form(N, k)
    if total != closed:
        raise InternalMismatch(f"σ_{N}({k}): component sum {total} != closed form {closed}")
    return total


def lower_bound_check(N: int, n: int) -> int:
    """A certified lower bound for ∂_N(n): σ_N(⌊(n−4)/8⌋), since |U_k| + |V_k| = 8k + 4."""
    if n < 12:
        raise ValueError("n must be at least 12")
    return sigma(N, (n - 4) // 8)


@dataclass(frozen=True)
class WitnessPair:
    k: int
    u: str
    v: str


def witness(k: int) -> WitnessPair:
    """U_k = a b^2k a^2k a and V_k = b^(2k−1) a^2k baa, equal in every Π_N."""
    if k < 1:
        raise InvalidK(f"k must be at least 1, got {k}")
    return WitnessPair(k, "a" + "b" * (2 * k) + "a" * (2 * k) + "a", "b" * (2 * k - 1) + "a" * (2 * k) + "baa")


def sequences_csv(N: int, count: int) -> str:
    kit = SequenceKit(N)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "s", "t", "T", "s'", "t'", "T'"])
    for n in range(count):
        writer.writerow([n, *kit.row(n)])
    return buf.getvalue()
