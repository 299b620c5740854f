"""Circuit builders for elementary and complete homogeneous polynomials.

Both builders append onto a caller-supplied :class:`CircuitBuilder` and
speak gate ids throughout, so a "variable" may be a raw input or any
previously built gate (the Schur assembler feeds column-monomial gates
straight in).  Zero is unrepresentable, so index ranges that would produce
a zero polynomial are simply absent from the batch maps.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circuit import CircuitBuilder, CircuitError


@dataclass
class EBatch:
    """Gates for e_0..e_k over a fixed variable list; e_0 is Const(1)."""

    var_ids: tuple[int, ...]
    entries: tuple[int, ...]

    def gate(self, m: int) -> int:
        return self.entries[m]


@dataclass
class HBatch:
    """Gates for the window h_{n-k+1}..h_n (clipped at degree 0).

    ``entries`` maps each degree in the window to its gate id; degree 0,
    when present, maps to Const(1).
    """

    degree: int
    var_ids: tuple[int, ...]
    entries: dict[int, int]

    def gate(self, m: int) -> int:
        return self.entries[m]


def build_elementary(builder: CircuitBuilder, var_ids) -> EBatch:
    """All of e_1..e_k over ``var_ids`` by the Pascal-style recurrence
    e_m(first j) = x_j * e_{m-1}(first j-1) + e_m(first j-1).

    Multiplication by e_0 = 1 is elided, so k=1 costs no arithmetic at
    all; the whole batch stays within 2*k^2 arithmetic gates.
    """
    var_ids = tuple(var_ids)
    if not var_ids:
        raise CircuitError("need at least one variable")
    one = builder.const(1)
    prev = {0: one}
    for j, x in enumerate(var_ids, start=1):
        cur = {0: one}
        for m in range(1, j + 1):
            lifted = x if m == 1 else builder.mul(x, prev[m - 1])
            cur[m] = builder.add(lifted, prev[m]) if m in prev else lifted
        prev = cur
    return EBatch(var_ids, tuple(prev[m] for m in range(len(var_ids) + 1)))


def build_h_batch(builder: CircuitBuilder, var_ids, degree: int) -> HBatch:
    """Gates for h_m over ``var_ids``, m in {max(0, n-k+1) .. n}.

    Degrees up to 2k fall to a direct two-index dynamic program on
    h_m(first j) = x_j * h_{m-1}(first j) + h_m(first j-1).  Larger degrees
    square every variable, recurse at floor(n/2) over the squares, build an
    elementary batch over the current variables, and combine by

        h_m  =  sum of e_{m-2b} * g_b  over  m-k <= 2b <= m,

    where g_b is h_b of the squared variables.  Every b that sum needs
    lands inside the recursive window (asserted), each halving level costs
    O(k^2) gates, and the whole batch is O(k^2 log n).
    """
    var_ids = tuple(var_ids)
    k = len(var_ids)
    if k == 0:
        raise CircuitError("need at least one variable")
    if degree < 0:
        raise CircuitError("degree must be nonnegative")
    lowest = max(0, degree - k + 1)
    one = builder.const(1)

    if degree <= 2 * k:
        prev = {0: one}
        for x in var_ids:
            cur = {0: one}
            for m in range(1, degree + 1):
                lifted = x if m == 1 else builder.mul(x, cur[m - 1])
                cur[m] = builder.add(lifted, prev[m]) if m in prev else lifted
            prev = cur
        return HBatch(degree, var_ids, {m: prev[m] for m in range(lowest, degree + 1)})

    half = degree // 2
    squared = tuple(builder.mul(x, x) for x in var_ids)
    inner = build_h_batch(builder, squared, half)
    elem = build_elementary(builder, var_ids)
    entries = {}
    for m in range(lowest, degree + 1):
        terms = []
        for b in range(max(0, (m - k + 1) // 2), m // 2 + 1):
            assert max(0, half - k + 1) <= b <= half, (degree, k, m, b)
            rest = m - 2 * b
            g = inner.gate(b)
            terms.append(g if rest == 0 else builder.mul(elem.gate(rest), g))
        acc = terms[0]
        for t in terms[1:]:
            acc = builder.add(acc, t)
        entries[m] = acc
    return HBatch(degree, var_ids, entries)


def build_h_single(builder: CircuitBuilder, var_ids, degree: int) -> int:
    """Gate id computing h_degree over ``var_ids`` (top entry of the batch)."""
    return build_h_batch(builder, var_ids, degree).gate(degree)
