"""Alternative carriers for circuit evaluation.

:meth:`Circuit.evaluate` takes any object with ``add``, ``mul``, and
``from_nat``.  Exact big-integer arithmetic is the built-in default and
needs no object from here; these are the extras: a bounded-integer mode
that reports overflow instead of wrapping, and an exponent-map polynomial
carrier for symbolic comparisons in tests.
"""

from __future__ import annotations


class EvaluationOverflow(ArithmeticError):
    """A bounded evaluation produced a value beyond the configured limit."""


class BoundedInt:
    """Exact integer arithmetic that refuses to exceed ``limit``.

    Circuit values here are always nonnegative, so only the upper bound is
    policed.  Raises :class:`EvaluationOverflow` instead of wrapping.
    """

    def __init__(self, limit: int):
        if limit < 1:
            raise ValueError("limit must be positive")
        self.limit = limit

    def _clip(self, value: int) -> int:
        if value > self.limit:
            raise EvaluationOverflow(f"value {value} exceeds limit {self.limit}")
        return value

    def add(self, a: int, b: int) -> int:
        return self._clip(a + b)

    def mul(self, a: int, b: int) -> int:
        return self._clip(a * b)

    def from_nat(self, n: int) -> int:
        return self._clip(n)


class MonomialPoly:
    """Polynomials as {exponent tuple: coefficient} dicts.

    Feeding ``variable(i)`` for each input to :meth:`Circuit.evaluate` with
    this carrier expands the circuit into its monomial map, which tests
    compare against the tableau-enumeration oracle.
    """

    def __init__(self, num_vars: int):
        self.num_vars = num_vars
        self._zero_exp = (0,) * num_vars

    def variable(self, index: int) -> dict:
        exp = [0] * self.num_vars
        exp[index] = 1
        return {tuple(exp): 1}

    def add(self, a: dict, b: dict) -> dict:
        out = dict(a)
        for exp, coeff in b.items():
            out[exp] = out.get(exp, 0) + coeff
        return out

    def mul(self, a: dict, b: dict) -> dict:
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                out[exp] = out.get(exp, 0) + ca * cb
        return out

    def from_nat(self, n: int) -> dict:
        return {self._zero_exp: n}
