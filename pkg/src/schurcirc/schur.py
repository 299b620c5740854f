"""Monotone circuits for Schur polynomials.

The shape is dissected by vertical cuts into one rectangle per distinct
column height.  Summing over the semistandard fillings of the "pruned"
shape (one kept column per height), each rectangle contributes the
tableaux sandwiched between consecutive kept columns; that inner sum is
expanded over the maximal chains of a column-poset interval as descent
monomials times a complete homogeneous polynomial of the chain's column
monomials.  Everything lands in one hash-consing builder, so repeated
columns, chains, and h-ladders are paid for once.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterator

from .builders import HBatch, build_h_batch
from .circuit import CircuitBuilder
from .oracle import Partition, Tableau, enumerate_ssyt
from .poset import Column, Interval, compute_q_star, enumerate_max_chains


class ZeroPolynomialError(ValueError):
    """The requested polynomial is identically zero, which a circuit over
    {+, *} and positive constants cannot output."""


@dataclass(frozen=True)
class PruningDecomposition:
    """Vertical dissection of a shape into rectangles, one per distinct
    column height.

    ``heights`` lists the distinct column heights in decreasing order.
    ``widths[j]`` counts the columns of height ``heights[j]`` struck out
    when only the rightmost column of each height is kept, so rectangle j
    has ``widths[j] + 1`` columns.  ``pruned_shape`` is the shape the kept
    columns form.
    """

    shape: Partition
    heights: tuple[int, ...]
    widths: tuple[int, ...]
    pruned_shape: Partition

    @property
    def s(self) -> int:
        return len(self.heights)


def decompose(shape) -> PruningDecomposition:
    """Split ``shape`` by column height; heights come out tallest first.

    The empty shape decomposes into zero rectangles.  The rectangles tile
    the diagram: sum of heights[j] * (widths[j] + 1) equals the size.
    """
    shape = shape if isinstance(shape, Partition) else Partition(shape)
    heights = tuple(sorted(set(shape.conjugate()), reverse=True))
    widths = tuple(shape.part(h) - shape.part(h + 1) - 1 for h in heights)
    pruned = Partition(heights).conjugate()
    assert sum(h * (w + 1) for h, w in zip(heights, widths)) == shape.size
    return PruningDecomposition(shape, heights, widths, pruned)


@dataclass(frozen=True)
class Pruning:
    """Kept columns of one semistandard filling of the pruned shape,
    tallest first, each paired with the floor of the interval its
    rectangle ranges over: ``bottoms[0]`` is (1, ..., ell) and
    ``bottoms[j]`` is ``columns[j-1]`` with its bottom entries dropped to
    height ``len(columns[j])``.
    """

    columns: tuple[Column, ...]
    bottoms: tuple[Column, ...]


def enumerate_prunings(dec: PruningDecomposition, num_vars: int) -> Iterator[Pruning]:
    """Semistandard fillings of the pruned shape with entries <= num_vars,
    decoded into column/floor pairs, in a fixed deterministic order."""
    ell = len(dec.shape)
    if ell > num_vars:
        raise ZeroPolynomialError(
            f"shape has {ell} rows but only {num_vars} variables; "
            "the polynomial is identically zero"
        )
    for t in enumerate_ssyt(dec.pruned_shape, num_vars):
        cols = t.columns()
        bottoms = [tuple(range(1, ell + 1))]
        for j in range(1, len(cols)):
            bottoms.append(cols[j - 1][: dec.heights[j]])
        yield Pruning(cols, tuple(bottoms[: len(cols)]))


def prune_tableau(tableau: Tableau) -> tuple[Column, ...]:
    """The rightmost column of each distinct height, tallest first."""
    cols = tableau.columns()
    return tuple(
        c
        for i, c in enumerate(cols)
        if i + 1 == len(cols) or len(cols[i + 1]) < len(c)
    )


@dataclass
class GateCountReport:
    """Measured gate counts for one build, next to advisory cost estimates."""

    shape: tuple[int, ...]
    k: int
    arith: int
    total: int
    d: int
    bound_factors: dict
    per_stage: dict

    def to_json(self) -> str:
        return json.dumps(
            {
                "shape": list(self.shape),
                "k": self.k,
                "arith": self.arith,
                "total": self.total,
                "d": self.d,
                "bound_factors": self.bound_factors,
                "per_stage": self.per_stage,
            },
            indent=2,
        )


def predict_bound(
    shape,
    k: int,
    *,
    arith: int = 0,
    total: int = 0,
    per_stage: dict | None = None,
) -> GateCountReport:
    """Advisory cost estimates for assembling s_shape over k variables.

    Not a threshold; constants hidden by the asymptotics are set to 1.
    ``headline`` is (1 + log2(lambda_1)) * k^5 * 2^(k*ell) * ell^d with d
    the largest h*(k-h) over column heights h.  ``itemized`` follows the
    stage accounting instead: ell * sum_j C(k, h_j) column-monomial
    products, plus, per filling of the pruned shape (counted at the
    prod_j C(k, h_j) cap), 2s gluing gates plus per rectangle at most
    h_j^(h_j*(k-h_j)) chains each costing h_j^2 * (k-h_j)^2 *
    (1 + log2(lambda_1)) gates.
    """
    shape = shape if isinstance(shape, Partition) else Partition(shape)
    ell = len(shape)
    if ell > k:
        raise ZeroPolynomialError(
            f"shape has {ell} rows but only {k} variables; "
            "the polynomial is identically zero"
        )
    dec = decompose(shape)
    lam1 = shape.part(1)
    log2_lam1 = math.log2(lam1) if lam1 >= 1 else 0.0
    log_factor = 1.0 + log2_lam1
    d = max((h * (k - h) for h in dec.heights), default=0)
    headline = math.ceil(log_factor * k**5 * 2 ** (k * ell) * ell**d)
    fillings = math.prod(math.comb(k, h) for h in dec.heights)
    chain_cost = sum(
        h ** (h * (k - h)) * h * h * (k - h) * (k - h) * log_factor
        for h in dec.heights
    )
    itemized = math.ceil(
        ell * sum(math.comb(k, h) for h in dec.heights)
        + fillings * (2 * dec.s + chain_cost)
    )
    factors = {
        "log2_lambda1": log2_lam1,
        "log_factor": log_factor,
        "k_pow5": k**5,
        "two_pow_kl": 2 ** (k * ell),
        "ell_pow_d": ell**d,
        "headline": headline,
        "itemized": itemized,
    }
    return GateCountReport(
        tuple(shape),
        k,
        arith,
        total,
        d,
        factors,
        per_stage if per_stage is not None else {},
    )


def build_schur(builder: CircuitBuilder, shape, num_vars: int):
    """Gate computing s_shape(x_1 .. x_num_vars), plus its count report.

    Per filling of the pruned shape: the product of the filling's column
    monomials times, for every rectangle, the sum over maximal chains of
    the interval [floor, kept column] of the chain's descent-column
    monomials times h_(width - #descents) of the chain's column monomials.
    Chains with more descents than the rectangle width contribute nothing
    and are skipped; a rectangle with every chain skipped kills its whole
    filling.  Factors equal to Const(1) are elided from products.
    """
    shape = shape if isinstance(shape, Partition) else Partition(shape)
    ell = len(shape)
    if ell > num_vars:
        raise ZeroPolynomialError(
            f"shape has {ell} rows but only {num_vars} variables; "
            "the polynomial is identically zero"
        )
    dec = decompose(shape)
    one = builder.const(1)

    mono: dict[Column, int] = {}

    def monomial(col: Column) -> int:
        g = mono.get(col)
        if g is None:
            g = builder.input(col[0] - 1)
            for v in col[1:]:
                g = builder.mul(g, builder.input(v - 1))
            mono[col] = g
        return g

    batches: dict[tuple, HBatch] = {}

    def h_gate(gates: tuple[int, ...], degree: int) -> int:
        batch = batches.get((gates, degree))
        if batch is None:
            batch = build_h_batch(builder, gates, degree)
            batches[gates, degree] = batch
        return batch.gate(degree)

    chains_used = chains_skipped = 0
    prunings_used = prunings_skipped = 0
    pruning_terms = []
    for pr in enumerate_prunings(dec, num_vars):
        factors = []
        dead = False
        for j, (h, width) in enumerate(zip(dec.heights, dec.widths)):
            iv = Interval(h, num_vars, pr.bottoms[j], pr.columns[j])
            chain_terms = []
            for q in enumerate_max_chains(iv):
                q_star = compute_q_star(iv, q)
                rest = width - len(q_star)
                if rest < 0:
                    chains_skipped += 1
                    continue
                term = None
                for c in q_star.columns(q):
                    g = monomial(c)
                    term = g if term is None else builder.mul(term, g)
                hg = h_gate(tuple(monomial(c) for c in q.columns), rest)
                if term is None:
                    term = hg
                elif hg != one:
                    term = builder.mul(term, hg)
                chain_terms.append(term)
                chains_used += 1
            if not chain_terms:
                dead = True
                break
            acc = chain_terms[0]
            for t in chain_terms[1:]:
                acc = builder.add(acc, t)
            factors.append(acc)
        if dead:
            prunings_skipped += 1
            continue
        term = None
        for c in pr.columns:
            g = monomial(c)
            term = g if term is None else builder.mul(term, g)
        for f in factors:
            if f == one:
                continue
            term = f if term is None else builder.mul(term, f)
        pruning_terms.append(one if term is None else term)
        prunings_used += 1

    # The filling with every kept column at its floor always survives:
    # each of its intervals is a single point whose one chain has no
    # descents, so at least one term reaches the sum.
    assert pruning_terms, "no filling of the pruned shape survived"
    out = pruning_terms[0]
    for t in pruning_terms[1:]:
        out = builder.add(out, t)

    counts = builder.snapshot(out).gate_count()
    per_stage = {
        "monomials": len(mono),
        "prunings": prunings_used,
        "prunings_skipped": prunings_skipped,
        "chains": chains_used,
        "chains_skipped": chains_skipped,
        "h_batches": len(batches),
    }
    report = predict_bound(
        shape, num_vars, arith=counts.arith, total=counts.total, per_stage=per_stage
    )
    return out, report
