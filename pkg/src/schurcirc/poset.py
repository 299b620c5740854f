"""Strictly increasing columns ordered entrywise, and their chain shellings.

The ground set P(h, k) is all strictly increasing h-tuples over {1..k},
compared coordinate by coordinate; a cover raises exactly one coordinate by
one.  This module enumerates the maximal chains of an interval in their
lexicographic order, computes each chain's descent columns Q*, and
evaluates the multichain generating function those descents decompose.
Multichains of size m in an interval are exactly the h x m semistandard
fillings with prescribed border columns, which is what the Schur assembler
sums over.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .oracle import h_eval

Column = tuple[int, ...]


def column_leq(a: Column, b: Column) -> bool:
    return all(x <= y for x, y in zip(a, b))


def column_rank(col: Column) -> int:
    """Cover steps needed from the bottom column (1, ..., h)."""
    h = len(col)
    return sum(col) - h * (h + 1) // 2


def is_column(col, height: int, num_values: int) -> bool:
    return (
        len(col) == height
        and all(a < b for a, b in zip(col, col[1:]))
        and (height == 0 or (col[0] >= 1 and col[-1] <= num_values))
    )


def poset_elements(height: int, num_values: int) -> Iterator[Column]:
    """All C(k, h) columns of P(height, num_values), in lexicographic order."""
    if not 1 <= height <= num_values:
        raise ValueError(f"need 1 <= h <= k, got h={height}, k={num_values}")
    yield from itertools.combinations(range(1, num_values + 1), height)


@dataclass(frozen=True)
class Interval:
    """All columns sandwiched entrywise between ``bottom`` and ``top``."""

    height: int
    num_values: int
    bottom: Column
    top: Column

    def __post_init__(self):
        for name in ("bottom", "top"):
            col = getattr(self, name)
            if not is_column(col, self.height, self.num_values):
                raise ValueError(f"{name} {col} is not a valid column")
        if not column_leq(self.bottom, self.top):
            raise ValueError(f"bottom {self.bottom} not below top {self.top}")

    def __contains__(self, col) -> bool:
        return (
            is_column(col, self.height, self.num_values)
            and column_leq(self.bottom, col)
            and column_leq(col, self.top)
        )

    def elements(self) -> Iterator[Column]:
        """Member columns in lexicographic order."""

        def grow(i, prefix):
            if i == self.height:
                yield tuple(prefix)
                return
            lo = max(self.bottom[i], prefix[-1] + 1 if prefix else 1)
            for v in range(lo, self.top[i] + 1):
                yield from grow(i + 1, prefix + [v])

        yield from grow(0, [])

    def __iter__(self) -> Iterator[Column]:
        return self.elements()


def full_interval(height: int, num_values: int) -> Interval:
    """The whole of P(height, num_values), bottom (1..h) to top (k-h+1..k)."""
    if not 1 <= height <= num_values:
        raise ValueError(f"need 1 <= h <= k, got h={height}, k={num_values}")
    return Interval(
        height,
        num_values,
        tuple(range(1, height + 1)),
        tuple(range(num_values - height + 1, num_values + 1)),
    )


@dataclass(frozen=True)
class MaxChain:
    """Saturated chain bottom = c_0 < ... < c_{N-1} = top of an interval.

    ``steps[t]`` is the coordinate (0-based) raised going from column t to
    column t+1.
    """

    columns: tuple[Column, ...]
    steps: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.columns)


def _chain_sort_key(chain: MaxChain):
    # Left-to-right over columns; within a column the lowest coordinate
    # decides, so compare coordinate-reversed tuples.
    return tuple(tuple(reversed(c)) for c in chain.columns)


def enumerate_max_chains(iv: Interval) -> list[MaxChain]:
    """Every saturated bottom-to-top chain of ``iv``, lexicographically sorted.

    Chain order: at the first position where two chains differ, compare the
    lowest differing coordinate of the two columns there.
    """
    chains = []

    def extend(cols, steps):
        cur = cols[-1]
        if cur == iv.top:
            chains.append(MaxChain(tuple(cols), tuple(steps)))
            return
        for i in range(iv.height):
            v = cur[i] + 1
            if v > iv.top[i]:
                continue
            if i + 1 < iv.height and v == cur[i + 1]:
                continue
            extend(cols + [cur[:i] + (v,) + cur[i + 1 :]], steps + [i])

    extend([iv.bottom], [])
    chains.sort(key=_chain_sort_key)
    return chains


@dataclass(frozen=True)
class DescentSet:
    """Positions (within a chain) of the columns some smaller maximal chain
    can avoid only by missing them: the chain's descents Q*."""

    indices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.indices)

    def columns(self, chain: MaxChain) -> tuple[Column, ...]:
        return tuple(chain.columns[j] for j in self.indices)


def compute_q_star(iv: Interval, chain: MaxChain) -> DescentSet:
    """Descent columns of a maximal chain.

    Position j is a descent when the incoming step raised a strictly higher
    coordinate than the outgoing one and swapping the two steps still
    passes through a valid column.  A maximal chain Q is the lex-least one
    through a subchain C exactly when Q* is inside C and C inside Q; the
    brute-force tests pin that equivalence down.
    """
    found = []
    cols, steps = chain.columns, chain.steps
    for j in range(1, len(cols) - 1):
        if steps[j - 1] <= steps[j]:
            continue
        i = steps[j]
        prev = cols[j - 1]
        # Swapped order passes through prev + e_i; valid iff still strictly
        # increasing there (upper bound holds automatically).
        if i + 1 < len(prev) and prev[i] + 1 == prev[i + 1]:
            continue
        found.append(j)
    return DescentSet(tuple(found))


def is_smallest_containing(iv: Interval, chain: MaxChain, subchain) -> bool:
    """Brute force: is ``chain`` the lex-least maximal chain of ``iv`` whose
    columns contain every column of ``subchain``?  Test-suite helper."""
    want = set(subchain)
    for q in enumerate_max_chains(iv):
        if want.issubset(q.columns):
            return q == chain
    return False


def enumerate_chains(iv: Interval) -> list[tuple[Column, ...]]:
    """All chains of the interval (totally ordered subsets, empty included),
    each as a bottom-up tuple."""
    elems = sorted(iv.elements(), key=lambda c: (column_rank(c), c))
    out = []

    def walk(last, chain):
        out.append(tuple(chain))
        start = 0 if last is None else last + 1
        for nxt in range(start, len(elems)):
            if last is not None and not column_leq(elems[last], elems[nxt]):
                continue
            chain.append(elems[nxt])
            walk(nxt, chain)
            chain.pop()

    walk(None, [])
    return out


def enumerate_multichains(iv: Interval, size: int) -> Iterator[tuple[Column, ...]]:
    """Weakly increasing sequences of ``size`` interval elements: the brute
    side of the generating-function identity."""
    if size < 0:
        raise ValueError("size must be nonnegative")
    elems = sorted(iv.elements(), key=lambda c: (column_rank(c), c))

    def walk(seq):
        if len(seq) == size:
            yield tuple(seq)
            return
        for e in elems:
            if seq and not column_leq(seq[-1], e):
                continue
            seq.append(e)
            yield from walk(seq)
            seq.pop()

    yield from walk([])


def multichain_gf_eval(iv: Interval, size: int, weights: dict) -> int:
    """Weighted multichain count via the descent decomposition.

    Computes, over the maximal chains Q of the interval, the sum of
    (product of weights over Q*'s columns) * h_{size-|Q*|}(chain weights),
    skipping chains whose descent count exceeds ``size``.  Equals the
    brute-force sum over all size-``size`` multichains of the product of
    their members' weights; ``weights`` must cover every element.
    """
    if size < 0:
        raise ValueError("size must be nonnegative")
    for col in iv.elements():
        if col not in weights:
            raise ValueError(f"no weight for column {col}")
    total = 0
    for q in enumerate_max_chains(iv):
        q_star = compute_q_star(iv, q)
        rest = size - len(q_star)
        if rest < 0:
            continue
        z = 1
        for col in q_star.columns(q):
            z *= weights[col]
        vals = tuple(weights[c] for c in q.columns)
        total += z * h_eval(rest, len(vals), vals)
    return total
