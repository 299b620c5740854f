"""Brute-force reference values for symmetric polynomials.

Everything here enumerates tableaux or index tuples outright and sums exact
integers.  It stays deliberately independent of the circuit builders: the
two sides meet only inside test comparisons.  Desk scale by design; the
tableau expansion guards itself with a count cap.
"""

from __future__ import annotations

import itertools
from typing import Iterator


class OracleGuardError(RuntimeError):
    """An enumeration would exceed its configured cap."""


class Partition:
    """Weakly decreasing positive parts; trailing zeros are normalized away."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        if isinstance(parts, Partition):
            parts = parts.parts
        parts = tuple(int(p) for p in parts)
        for earlier, later in zip(parts, parts[1:]):
            if earlier < later:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"negative part in {parts}")
        self.parts = tuple(p for p in parts if p > 0)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition{self.parts}"

    @property
    def size(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """The i-th part, 1-based, zero beyond the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def conjugate(self) -> "Partition":
        """Transpose of the diagram: column lengths become parts."""
        if not self.parts:
            return Partition()
        return Partition(
            sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)
        )


def partitions(total: int) -> Iterator[Partition]:
    """All partitions of ``total``, largest part first within each."""

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for parts in rec(total, total):
        yield Partition(parts)


class Tableau:
    """A filling of a partition shape, rows stored as tuples."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)

    def __eq__(self, other) -> bool:
        if isinstance(other, Tableau):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Tableau{self.rows}"

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    def entries(self) -> Iterator[int]:
        return itertools.chain.from_iterable(self.rows)

    def columns(self) -> tuple[tuple[int, ...], ...]:
        if not self.rows:
            return ()
        return tuple(
            tuple(row[j] for row in self.rows if len(row) > j)
            for j in range(len(self.rows[0]))
        )

    def monomial(self, num_vars: int) -> tuple[int, ...]:
        """Exponent vector of x^T over ``num_vars`` variables."""
        exp = [0] * num_vars
        for v in self.entries():
            exp[v - 1] += 1
        return tuple(exp)

    def is_semistandard(self) -> bool:
        for row in self.rows:
            if any(a > b for a, b in zip(row, row[1:])):
                return False
        for upper, lower in zip(self.rows, self.rows[1:]):
            if len(lower) > len(upper):
                return False
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                return False
        return bool(all(v >= 1 for v in self.entries()))


def enumerate_ssyt(shape, max_entry: int) -> Iterator[Tableau]:
    """All semistandard fillings of ``shape`` with entries in 1..max_entry.

    Rows weakly increase, columns strictly increase.  Cells are filled in
    row-major order trying smaller entries first, so the stream is
    deterministic (lexicographic in the row-major reading word).  A shape
    with more rows than ``max_entry`` yields nothing.
    """
    shape = Partition(shape)
    if shape.size == 0:
        yield Tableau(())
        return
    if len(shape) > max_entry:
        return
    rows = [[0] * p for p in shape]
    cells = [(i, j) for i, p in enumerate(shape) for j in range(p)]

    def fill(pos):
        if pos == len(cells):
            yield Tableau(rows)
            return
        i, j = cells[pos]
        lo = 1
        if j > 0:
            lo = rows[i][j - 1]
        if i > 0:
            lo = max(lo, rows[i - 1][j] + 1)
        for v in range(lo, max_entry + 1):
            rows[i][j] = v
            yield from fill(pos + 1)
        rows[i][j] = 0

    yield from fill(0)


def enumerate_ssyt_by_columns(shape, max_entry: int) -> Iterator[Tableau]:
    """Same tableaux as :func:`enumerate_ssyt`, grown column by column.

    Each column is a strictly increasing tuple that dominates its left
    neighbour entrywise on shared rows.  Independent of the row-major
    enumerator; the test suite compares the two streams as sets.
    """
    shape = Partition(shape)
    if shape.size == 0:
        yield Tableau(())
        return
    if len(shape) > max_entry:
        return
    heights = shape.conjugate().parts

    def grow(j, cols):
        if j == len(heights):
            rows = [
                tuple(cols[c][i] for c in range(len(cols)) if heights[c] > i)
                for i in range(len(shape))
            ]
            yield Tableau(rows)
            return
        h = heights[j]
        for col in itertools.combinations(range(1, max_entry + 1), h):
            if j > 0 and any(col[i] < cols[j - 1][i] for i in range(h)):
                continue
            yield from grow(j + 1, cols + [col])

    yield from grow(0, [])


def enumerate_syt(shape) -> Iterator[Tableau]:
    """Standard tableaux of ``shape``: entries 1..n, each exactly once."""
    shape = Partition(shape)
    n = shape.size
    if n == 0:
        yield Tableau(())
        return
    rows = [[0] * p for p in shape]
    fill_counts = [0] * len(shape)

    def place(v):
        if v > n:
            yield Tableau(tuple(tuple(r[: fill_counts[i]]) for i, r in enumerate(rows)))
            return
        for i, row in enumerate(rows):
            j = fill_counts[i]
            if j >= shape.part(i + 1):
                continue
            if i > 0 and fill_counts[i - 1] <= j:
                continue
            row[j] = v
            fill_counts[i] += 1
            yield from place(v + 1)
            fill_counts[i] -= 1

    yield from place(1)


def ssyt_count(shape, max_entry: int, cap: int | None = None) -> int:
    """Number of semistandard fillings; raises past ``cap`` when given."""
    count = 0
    for _ in enumerate_ssyt(shape, max_entry):
        count += 1
        if cap is not None and count > cap:
            raise OracleGuardError(f"more than {cap} tableaux for {Partition(shape)}")
    return count


def schur_eval(shape, num_vars: int, point) -> int:
    """Schur polynomial value: sum of x^T over all semistandard tableaux.

    Zero when the shape has more rows than variables.
    """
    total = 0
    for t in enumerate_ssyt(shape, num_vars):
        term = 1
        for v in t.entries():
            term *= point[v - 1]
        total += term
    return total


def schur_poly_map(shape, num_vars: int, cap: int = 10**6) -> dict[tuple[int, ...], int]:
    """Full monomial expansion {exponent tuple: coefficient}.

    Coefficients count tableaux of each content.  Refuses with
    :class:`OracleGuardError` once more than ``cap`` tableaux stream by.
    """
    coeffs: dict[tuple[int, ...], int] = {}
    count = 0
    for t in enumerate_ssyt(shape, num_vars):
        count += 1
        if count > cap:
            raise OracleGuardError(f"more than {cap} tableaux for {Partition(shape)}")
        exp = t.monomial(num_vars)
        coeffs[exp] = coeffs.get(exp, 0) + 1
    return coeffs


def h_eval(degree: int, num_vars: int, point) -> int:
    """Complete homogeneous value: sum over weakly increasing index tuples."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    total = 0
    for combo in itertools.combinations_with_replacement(range(num_vars), degree):
        term = 1
        for i in combo:
            term *= point[i]
        total += term
    return total


def e_eval(degree: int, num_vars: int, point) -> int:
    """Elementary value: sum over strictly increasing index tuples.

    Zero when ``degree`` exceeds the number of variables.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    total = 0
    for combo in itertools.combinations(range(num_vars), degree):
        term = 1
        for i in combo:
            term *= point[i]
        total += term
    return total


def h_eval_through(max_degree: int, point) -> list[int]:
    """All of h_0..h_max at ``point`` in one enumeration pass.

    Walks every weakly increasing index tuple of length <= max_degree once
    (each as an extension of its prefix) and buckets the running products
    by length.  Same brute-force ground truth as :func:`h_eval`, batched so
    whole-range sweeps stay affordable.
    """
    if max_degree < 0:
        raise ValueError("degree must be nonnegative")
    sums = [0] * (max_degree + 1)
    sums[0] = 1
    k = len(point)

    def walk(start, depth, product):
        if depth == max_degree:
            return
        for i in range(start, k):
            p = product * point[i]
            sums[depth + 1] += p
            walk(i, depth + 1, p)

    walk(0, 0, 1)
    return sums
