"""Brute-force ground truth: graph search over elementary transformations.

Nothing in here calls into Adian's algorithm except :func:`dehn_function_at`,
which needs it to find the equal pairs in the first place and can
cross-check every distance it reports against :func:`shortest_chain`.
"""

from __future__ import annotations

import csv
import enum
import io
import itertools
from dataclasses import dataclass, field

from .engine import Equal, OutOfFuel, pair_run
from .errors import SearchBoundExceeded
from .presentation import Presentation

DEFAULT_NODE_BUDGET = 10**7


class Direction(enum.Enum):
    LHS_TO_RHS = "lhs->rhs"
    RHS_TO_LHS = "rhs->lhs"


@dataclass(frozen=True, order=True)
class ElementaryMove:
    position: int
    direction: Direction = field(compare=False)

    def apply(self, pres: Presentation, w: str) -> str:
        src, dst = (pres.lhs, pres.rhs) if self.direction is Direction.LHS_TO_RHS else (pres.rhs, pres.lhs)
        if not w.startswith(src, self.position):
            raise ValueError(f"{src} does not occur in {w} at {self.position}")
        return w[:self.position] + dst + w[self.position + len(src):]


def _occurrences(w: str, sub: str):
    i = w.find(sub)
    while i != -1:
        yield i
        i = w.find(sub, i + 1)


def moves(pres: Presentation, w: str) -> list[ElementaryMove]:
    out = [ElementaryMove(i, Direction.LHS_TO_RHS) for i in _occurrences(w, pres.lhs)]
    out += [ElementaryMove(i, Direction.RHS_TO_LHS) for i in _occurrences(w, pres.rhs)]
    return out


def neighbors(pres: Presentation, w: str) -> frozenset[str]:
    """Every word one elementary transformation away from ``w``."""
    return frozenset(m.apply(pres, w) for m in moves(pres, w))


def is_elementary(pres: Presentation, w1: str, w2: str) -> bool:
    """True if ``w2`` arises from ``w1`` by replacing exactly one occurrence of a side."""
    return w2 in neighbors(pres, w1)


def default_length_cap(pres: Presentation, u: str, v: str, depth: int) -> int:
    return len(u) + len(v) + depth * (len(pres.lhs) - 1)


def shortest_chain(
    pres: Presentation,
    u: str,
    v: str,
    max_depth: int,
    length_cap: int | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> tuple[int, list[str]] | None:
    """Exact minimal number of elementary transformations from ``u`` to ``v``.

    Bidirectional breadth-first search restricted to words of length at most
    ``length_cap``.  Whole levels are expanded at a time, always on the side
    with the smaller frontier, so the first level at which the two searches
    meet yields the minimum.  Ties are broken lexicographically, which makes
    the returned chain deterministic.  Returns ``None`` when no chain of
    length at most ``max_depth`` exists within the cap.
    """
    if max_depth < 0:
        raise ValueError("max_depth must be nonnegative")
    if length_cap is None:
        length_cap = default_length_cap(pres, u, v, max_depth)
    if u == v:
        return 0, [u]
    if len(u) > length_cap or len(v) > length_cap:
        return None
    # parent maps: word -> predecessor towards the root of that side
    parents = ({u: None}, {v: None})
    frontiers = ([u], [v])
    depths = [0, 0]
    while depths[0] + depths[1] < max_depth and frontiers[0] and frontiers[1]:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        mine, theirs = parents[side], parents[1 - side]
        nxt = []
        meets = []
        for w in frontiers[side]:
            for n in sorted(neighbors(pres, w)):
                if len(n) > length_cap or n in mine:
                    continue
                mine[n] = w
                nxt.append(n)
                if n in theirs:
                    meets.append(n)
            if len(mine) + len(theirs) > node_budget:
                raise SearchBoundExceeded(f"more than {node_budget} words visited")
        depths[side] += 1
        frontiers = (nxt, frontiers[1]) if side == 0 else (frontiers[0], nxt)
        if meets:
            meet = min(meets)
            return depths[0] + depths[1], _chain(parents, meet)
    return None


def _chain(parents, meet: str) -> list[str]:
    forward = []
    w = meet
    while w is not None:
        forward.append(w)
        w = parents[0][w]
    forward.reverse()
    w = parents[1][meet]
    while w is not None:
        forward.append(w)
        w = parents[1][w]
    return forward


def words_up_to(n: int):
    """All words of length 0..n in shortlex order."""
    for length in range(n + 1):
        for letters in itertools.product("ab", repeat=length):
            yield "".join(letters)


@dataclass
class DehnSample:
    """∂(n) at a small n, as far as bounded computation can tell.

    ``value`` is the largest Dehn distance among pairs with |u| + |v| ≤ n
    that were proved equal; ``witnesses`` is the shortlex-least pair
    achieving it.  Pairs on which the fuel ran out are listed in
    ``inconclusive``, so ``value`` is always a sound lower bound.
    """

    n: int
    value: int
    witnesses: tuple[str, str]
    inconclusive: list[tuple[str, str]] = field(default_factory=list)
    equal_pairs: int = 0
    cross_checked: int = 0

    def csv_row(self) -> list:
        return [self.n, self.value, self.witnesses[0], self.witnesses[1]]


def dehn_function_at(
    pres: Presentation,
    n: int,
    depth: int = 8,
    cap: int | None = None,
    fuel: int = 100_000,
    cross_check: bool = True,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> DehnSample:
    """Evaluate the Dehn function at ``n`` by exhausting all pairs with |u| + |v| ≤ n.

    Equality is decided by pair-mode 𝔄 with the given ``fuel``.  With
    ``cross_check``, each distance k ≤ ``depth`` is recomputed by
    :func:`shortest_chain` and a disagreement raises ``AssertionError``.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    best = (0, ("", ""))
    sample = DehnSample(n, 0, ("", ""))
    for u in words_up_to(n):
        for v in words_up_to(n - len(u)):
            if (len(v), v) <= (len(u), u):
                continue
            result = pair_run(pres, u, v, fuel)
            if isinstance(result, OutOfFuel):
                sample.inconclusive.append((u, v))
                continue
            if not isinstance(result, Equal):
                continue
            sample.equal_pairs += 1
            k = result.k
            if cross_check and k <= depth:
                found = shortest_chain(pres, u, v, depth, cap, node_budget)
                sample.cross_checked += 1
                if found is None or found[0] != k:
                    raise AssertionError(f"oracle disagrees on ({u}, {v}): 𝔄 gives {k}, search gives {found}")
            if k > best[0]:
                best = (k, (u, v))
    sample.value, sample.witnesses = best
    return sample


def dehn_csv(samples) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "value", "witness_u", "witness_v"])
    for s in samples:
        writer.writerow(s.csv_row())
    return buf.getvalue()
