"""Hash-consed monotone arithmetic circuits.

A circuit is an append-only list of gates in topological order: add/mul
operands always point at strictly smaller gate ids.  The gate alphabet is
inputs, positive integer constants, addition, and multiplication, so every
gate computes a nonzero polynomial with nonnegative coefficients.  Gate
counting headlines `arith` (adds + muls); inputs and constants are free.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

IN = "in"
CONST = "const"
ADD = "add"
MUL = "mul"

_OPS = (IN, CONST, ADD, MUL)


class CircuitError(ValueError):
    """Structurally invalid circuit request (bad id, bad constant, ...)."""


class CircuitParseError(CircuitError):
    """Malformed circuit text; the message names the offending line."""


class GateCount(NamedTuple):
    arith: int
    total: int


@dataclass(frozen=True, slots=True)
class Gate:
    """One node: ``a`` is the variable index (in), the value (const), or the
    left operand id; ``b`` is the right operand id for add/mul."""

    op: str
    a: int
    b: Optional[int] = None


@dataclass(frozen=True, slots=True)
class Circuit:
    """Immutable gate list with a single designated output."""

    num_vars: int
    gates: tuple[Gate, ...]
    output: int

    def __len__(self) -> int:
        return len(self.gates)

    def evaluate(self, point, semiring=None):
        """Value of the output gate at ``point`` (one value per variable).

        The default is exact arbitrary-precision integer arithmetic; pass a
        semiring object (see :mod:`schurcirc.semirings`) to evaluate over
        another carrier, e.g. with overflow detection or symbolically.
        """
        if len(point) != self.num_vars:
            raise CircuitError(
                f"point has {len(point)} coordinates, circuit has {self.num_vars} variables"
            )
        values = []
        if semiring is None:
            for g in self.gates:
                if g.op == ADD:
                    values.append(values[g.a] + values[g.b])
                elif g.op == MUL:
                    values.append(values[g.a] * values[g.b])
                elif g.op == IN:
                    values.append(point[g.a])
                else:
                    values.append(g.a)
        else:
            for g in self.gates:
                if g.op == ADD:
                    values.append(semiring.add(values[g.a], values[g.b]))
                elif g.op == MUL:
                    values.append(semiring.mul(values[g.a], values[g.b]))
                elif g.op == IN:
                    values.append(point[g.a])
                else:
                    values.append(semiring.from_nat(g.a))
        return values[self.output]

    def validate(self) -> list[str]:
        """Report structural violations; a sound circuit returns [].

        Checks the gate alphabet, positivity of constants, topological
        operand order, and that every gate feeds the output.
        """
        problems = []
        n = len(self.gates)
        if not 0 <= self.output < n:
            problems.append(f"output id {self.output} out of range for {n} gates")
        for i, g in enumerate(self.gates):
            if g.op == IN:
                if not 0 <= g.a < self.num_vars:
                    problems.append(f"gate {i}: variable index {g.a} out of range")
            elif g.op == CONST:
                if g.a < 1:
                    problems.append(f"gate {i}: constant {g.a} is not positive")
            elif g.op in (ADD, MUL):
                for operand in (g.a, g.b):
                    if operand is None or not 0 <= operand < i:
                        problems.append(f"gate {i}: operand {operand} not below gate id")
            else:
                problems.append(f"gate {i}: unknown op {g.op!r}")
        if not problems:
            for i, alive in enumerate(self._reachable()):
                if not alive:
                    problems.append(f"gate {i} unreachable from output")
        return problems

    def gate_count(self) -> GateCount:
        arith = sum(1 for g in self.gates if g.op in (ADD, MUL))
        return GateCount(arith, len(self.gates))

    def _reachable(self) -> list[bool]:
        alive = [False] * len(self.gates)
        stack = [self.output]
        while stack:
            i = stack.pop()
            if alive[i]:
                continue
            alive[i] = True
            g = self.gates[i]
            if g.op in (ADD, MUL):
                stack.append(g.a)
                stack.append(g.b)
        return alive

    def prune(self) -> "Circuit":
        """Drop gates that do not feed the output; ids are renumbered densely.

        Never rewrites arithmetic, so evaluation is unchanged; pruning an
        already-pruned circuit returns it as-is.
        """
        alive = self._reachable()
        if all(alive):
            return self
        remap = {}
        gates = []
        for i, g in enumerate(self.gates):
            if not alive[i]:
                continue
            remap[i] = len(gates)
            if g.op in (ADD, MUL):
                g = Gate(g.op, remap[g.a], remap[g.b])
            gates.append(g)
        return Circuit(self.num_vars, tuple(gates), remap[self.output])

    def serialize(self) -> str:
        """Line-oriented text form; see :func:`deserialize` for the grammar."""
        lines = [f"circuit k={self.num_vars} out={self.output}"]
        for i, g in enumerate(self.gates):
            if g.op in (ADD, MUL):
                lines.append(f"{i} {g.op} {g.a} {g.b}")
            else:
                lines.append(f"{i} {g.op} {g.a}")
        lines.append("")
        return "\n".join(lines)

    def to_dot(self) -> str:
        """Graphviz source with one node per gate and one edge per operand."""
        lines = ["digraph circuit {", "  rankdir=BT;"]
        for i, g in enumerate(self.gates):
            if g.op == IN:
                label = f"x{g.a + 1}"
            elif g.op == CONST:
                label = str(g.a)
            elif g.op == ADD:
                label = "+"
            else:
                label = "×"
            extra = ", peripheries=2" if i == self.output else ""
            lines.append(f'  g{i} [label="{label}"{extra}];')
        for i, g in enumerate(self.gates):
            if g.op in (ADD, MUL):
                lines.append(f"  g{g.a} -> g{i};")
                lines.append(f"  g{g.b} -> g{i};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def deserialize(text: str) -> Circuit:
    """Parse the circuit text format.

    Grammar, one item per line: a header ``circuit k=<num_vars> out=<output>``
    followed by the gates in id order, each ``<id> in <var>`` |
    ``<id> const <value>`` | ``<id> add <a> <b>`` | ``<id> mul <a> <b>``.
    Blank lines are ignored.  Raises :class:`CircuitParseError` with the
    offending line number; structural soundness beyond the grammar is left
    to :meth:`Circuit.validate`.
    """
    header = None
    gates = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        tokens = line.split()
        if header is None:
            if (
                len(tokens) != 3
                or tokens[0] != "circuit"
                or not tokens[1].startswith("k=")
                or not tokens[2].startswith("out=")
            ):
                raise CircuitParseError(f"line {lineno}: expected 'circuit k=... out=...'")
            try:
                header = (int(tokens[1][2:]), int(tokens[2][4:]))
            except ValueError:
                raise CircuitParseError(f"line {lineno}: malformed header numbers") from None
            continue
        try:
            numbers = [int(t) for t in [tokens[0]] + tokens[2:]]
        except (ValueError, IndexError):
            raise CircuitParseError(f"line {lineno}: malformed gate line {line!r}") from None
        op = tokens[1] if len(tokens) > 1 else ""
        if numbers[0] != len(gates):
            raise CircuitParseError(
                f"line {lineno}: gate id {numbers[0]} out of order (expected {len(gates)})"
            )
        if op in (IN, CONST) and len(numbers) == 2:
            gates.append(Gate(op, numbers[1]))
        elif op in (ADD, MUL) and len(numbers) == 3:
            gates.append(Gate(op, numbers[1], numbers[2]))
        else:
            raise CircuitParseError(f"line {lineno}: malformed gate line {line!r}")
    if header is None:
        raise CircuitParseError("line 1: empty input, expected circuit header")
    num_vars, output = header
    if not gates:
        raise CircuitParseError("line 1: circuit has no gates")
    if not 0 <= output < len(gates):
        raise CircuitParseError(f"line 1: output id {output} beyond last gate")
    return Circuit(num_vars, tuple(gates), output)


class CircuitBuilder:
    """Append-only gate arena with hash-consing.

    Structurally identical requests return the same gate id, and add/mul
    operands are sorted before lookup, so commuted requests share too.  No
    algebraic rewriting happens here: mul(x, one) makes a real gate.  Dead
    gates are the business of :meth:`Circuit.prune`, which ``snapshot``
    applies by default.
    """

    def __init__(self, num_vars: int):
        if num_vars < 0:
            raise CircuitError("number of variables must be nonnegative")
        self.num_vars = num_vars
        self._gates: list[Gate] = []
        self._memo: dict[tuple, int] = {}

    def __len__(self) -> int:
        return len(self._gates)

    def gate(self, gid: int) -> Gate:
        return self._gates[gid]

    def input(self, index: int) -> int:
        if not 0 <= index < self.num_vars:
            raise CircuitError(f"variable index {index} out of range for k={self.num_vars}")
        return self._intern(IN, index, None)

    def inputs(self) -> list[int]:
        return [self.input(i) for i in range(self.num_vars)]

    def const(self, value: int) -> int:
        # No zero: a {+,*} circuit over positive constants cannot output 0.
        if value < 1:
            raise CircuitError(f"constant {value} not representable in a monotone circuit")
        return self._intern(CONST, value, None)

    def add(self, lhs: int, rhs: int) -> int:
        self._check(lhs)
        self._check(rhs)
        if rhs < lhs:
            lhs, rhs = rhs, lhs
        return self._intern(ADD, lhs, rhs)

    def mul(self, lhs: int, rhs: int) -> int:
        self._check(lhs)
        self._check(rhs)
        if rhs < lhs:
            lhs, rhs = rhs, lhs
        return self._intern(MUL, lhs, rhs)

    def snapshot(self, output: int, prune: bool = True) -> Circuit:
        """Freeze the arena into a Circuit with the given output gate.

        With ``prune=True`` (the default) gates not feeding the output are
        dropped, so the snapshot always passes validate; pass False to keep
        the raw arena.  The builder stays usable afterwards.
        """
        self._check(output)
        circuit = Circuit(self.num_vars, tuple(self._gates), output)
        return circuit.prune() if prune else circuit

    def _check(self, gid: int) -> None:
        if not isinstance(gid, int) or not 0 <= gid < len(self._gates):
            raise CircuitError(f"unknown gate id {gid!r}")

    def _intern(self, op: str, a: int, b: Optional[int]) -> int:
        key = (op, a, b)
        gid = self._memo.get(key)
        if gid is None:
            gid = len(self._gates)
            self._gates.append(Gate(op, a, b))
            self._memo[key] = gid
        return gid
