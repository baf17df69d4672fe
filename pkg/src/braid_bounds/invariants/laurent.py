"""
Sparse Laurent polynomials with exact integer coefficients.

Terms are stored as {exponent tuple: coefficient}; zero coefficients are never
kept, so equality and hashing are structural.
"""

from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

import sympy as sp

Exponent = Tuple[int, ...]


class LaurentPolynomial:
    __slots__ = ("variables", "_coeffs", "_hash")

    def __init__(
        self,
        coefficients: Optional[Mapping[Exponent, int]] = None,
        variables: Sequence[str] = ("t",),
    ):
        self.variables = tuple(variables)
        arity = len(self.variables)
        coeffs: Dict[Exponent, int] = {}
        for exponent, coefficient in (coefficients or {}).items():
            exponent = tuple(exponent)
            if len(exponent) != arity:
                raise ValueError(
                    f"Exponent {exponent} does not match variables {self.variables}"
                )
            if coefficient:
                coeffs[exponent] = int(coefficient)
        self._coeffs = coeffs
        self._hash = None

    # constructors

    @classmethod
    def univariate(cls, coefficients: Mapping[int, int], variable: str = "t") -> "LaurentPolynomial":
        return cls({(e,): c for e, c in coefficients.items()}, (variable,))

    @classmethod
    def constant(cls, value: int, variables: Sequence[str] = ("t",)) -> "LaurentPolynomial":
        return cls({(0,) * len(variables): value}, variables)

    @classmethod
    def monomial(
        cls, exponent: Exponent, coefficient: int = 1, variables: Sequence[str] = ("t",)
    ) -> "LaurentPolynomial":
        return cls({tuple(exponent): coefficient}, variables)

    # access

    def items(self) -> Iterable[Tuple[Exponent, int]]:
        return sorted(self._coeffs.items())

    def coefficient(self, exponent) -> int:
        if isinstance(exponent, int):
            exponent = (exponent,)
        return self._coeffs.get(tuple(exponent), 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def exponents(self, axis: int = 0) -> list[int]:
        return sorted({exponent[axis] for exponent in self._coeffs})

    def span(self, axis: int = 0) -> Tuple[int, int]:
        exponents = self.exponents(axis)
        if not exponents:
            raise ValueError("The zero polynomial has no span")
        return exponents[0], exponents[-1]

    def breadth(self, axis: int = 0) -> int:
        low, high = self.span(axis)
        return high - low

    # arithmetic

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            if other.variables != self.variables:
                raise ValueError(
                    f"Variable mismatch: {self.variables} vs {other.variables}"
                )
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(other, self.variables)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        coeffs = dict(self._coeffs)
        for exponent, coefficient in other._coeffs.items():
            coeffs[exponent] = coeffs.get(exponent, 0) + coefficient
        return LaurentPolynomial(coeffs, self.variables)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._coeffs.items()}, self.variables)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial(
                {e: c * other for e, c in self._coeffs.items()}, self.variables
            )
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        coeffs: Dict[Exponent, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                exponent = tuple(a + b for a, b in zip(e1, e2))
                coeffs[exponent] = coeffs.get(exponent, 0) + c1 * c2
        return LaurentPolynomial(coeffs, self.variables)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._coeffs) != 1:
                raise ValueError("Only monomials have Laurent inverses")
            ((exponent, coefficient),) = self._coeffs.items()
            if coefficient not in (1, -1):
                raise ValueError("Only unit monomials have Laurent inverses")
            return LaurentPolynomial(
                {tuple(-a * -k for a in exponent): coefficient ** -k}, self.variables
            )
        result = LaurentPolynomial.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exponent: Exponent) -> "LaurentPolynomial":
        return LaurentPolynomial(
            {tuple(a + b for a, b in zip(e, exponent)): c for e, c in self._coeffs.items()},
            self.variables,
        )

    def invert_variable(self, axis: int = 0) -> "LaurentPolynomial":
        """Substitute x -> x^-1 in one variable (mirror images)."""
        coeffs = {}
        for exponent, coefficient in self._coeffs.items():
            flipped = list(exponent)
            flipped[axis] = -flipped[axis]
            coeffs[tuple(flipped)] = coefficient
        return LaurentPolynomial(coeffs, self.variables)

    def evaluate_at_one(self) -> int:
        return sum(self._coeffs.values())

    # comparison and hashing

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other, self.variables)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.variables == other.variables and self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self._coeffs.items())))
        return self._hash

    def __bool__(self):
        return bool(self._coeffs)

    # string hashes differ between processes; never ship the cached hash
    def __getstate__(self):
        return (self.variables, self._coeffs)

    def __setstate__(self, state):
        self.variables, self._coeffs = state
        self._hash = None

    def sort_key(self) -> tuple:
        return (self.variables, tuple(self.items()))

    # rendering

    def to_sympy(self) -> sp.Expr:
        symbols = sp.symbols(self.variables)
        if not isinstance(symbols, tuple):
            symbols = (symbols,)
        expr = sp.Integer(0)
        for exponent, coefficient in self.items():
            term = sp.Integer(coefficient)
            for symbol, power in zip(symbols, exponent):
                term *= symbol ** power
            expr += term
        return expr

    def to_json(self) -> dict:
        key = ",".join(self.variables)
        return {
            key: {
                ",".join(str(a) for a in exponent): coefficient
                for exponent, coefficient in self.items()
            }
        }

    @classmethod
    def from_json(cls, payload: Mapping[str, Mapping[str, int]]) -> "LaurentPolynomial":
        if len(payload) != 1:
            raise ValueError(f"Expected a single variable key, got {list(payload)}")
        ((key, terms),) = payload.items()
        variables = tuple(key.split(","))
        coeffs = {
            tuple(int(a) for a in exponent.split(",")): int(coefficient)
            for exponent, coefficient in terms.items()
        }
        return cls(coeffs, variables)

    @classmethod
    def from_sympy(cls, expr, variables: Sequence[str] = ("t",)) -> "LaurentPolynomial":
        """Convert a sympy expression that cancels to a Laurent polynomial.

        The expression may be a rational function; after cancellation its
        denominator must be a single monomial. Anything else raises ValueError.
        """
        variables = tuple(variables)
        symbols = sp.symbols(variables)
        if not isinstance(symbols, tuple):
            symbols = (symbols,)
        numerator, denominator = sp.fraction(sp.cancel(sp.together(sp.sympify(expr))))
        if numerator == 0:
            return cls({}, variables)
        den_terms = sp.Poly(denominator, *symbols).terms()
        if len(den_terms) != 1:
            raise ValueError(f"{expr} is not a Laurent polynomial in {variables}")
        ((den_exponent, den_coefficient),) = den_terms
        coeffs: Dict[Exponent, int] = {}
        for exponent, coefficient in sp.Poly(numerator, *symbols).terms():
            value = coefficient / den_coefficient
            if not value.is_Integer:
                raise ValueError(f"{expr} has a non-integer coefficient {value}")
            coeffs[tuple(a - b for a, b in zip(exponent, den_exponent))] = int(value)
        return cls(coeffs, variables)

    def __repr__(self):
        return f"LaurentPolynomial({dict(self.items())!r}, variables={self.variables!r})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        return str(sp.expand(self.to_sympy()))


def variable(name: str, variables: Sequence[str] = None) -> LaurentPolynomial:
    variables = tuple(variables or (name,))
    exponent = tuple(1 if v == name else 0 for v in variables)
    return LaurentPolynomial.monomial(exponent, 1, variables)
