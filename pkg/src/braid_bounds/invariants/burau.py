"""
Reduced Burau representation and the Alexander polynomial of knot closures.
"""

from functools import lru_cache
from typing import List

import sympy as sp

from braid_bounds.braid_core import BraidWord, GeneratorRangeError, component_count
from braid_bounds.invariants.laurent import LaurentPolynomial

Matrix = List[List[LaurentPolynomial]]
T = ("t",)


class MultiComponentError(ValueError):
    pass


class InvariantError(ValueError):
    pass


def _const(value: int) -> LaurentPolynomial:
    return LaurentPolynomial.constant(value, T)


def _t(power: int, coefficient: int = 1) -> LaurentPolynomial:
    return LaurentPolynomial.monomial((power,), coefficient, T)


def identity_matrix(size: int) -> Matrix:
    return [[_const(1 if r == c else 0) for c in range(size)] for r in range(size)]


@lru_cache(maxsize=None)
def _generator_entries(letter: int, strands: int) -> tuple:
    """Non-identity rows of the reduced Burau matrix of one letter, as (row, col, value)."""
    i = abs(letter)
    size = strands - 1
    if letter > 0:
        pattern = [
            (i - 2, i - 2, _const(1)), (i - 2, i - 1, _t(1)),
            (i - 1, i - 1, _t(1, -1)),
            (i, i - 1, _const(1)), (i, i, _const(1)),
        ]
    else:
        pattern = [
            (i - 2, i - 2, _const(1)), (i - 2, i - 1, _const(1)),
            (i - 1, i - 1, _t(-1, -1)),
            (i, i - 1, _t(-1)), (i, i, _const(1)),
        ]
    return tuple((r, c, v) for r, c, v in pattern if 0 <= r < size and 0 <= c < size)


def _right_multiply(matrix: Matrix, letter: int, strands: int) -> Matrix:
    entries = _generator_entries(letter, strands)
    touched_rows = {r for r, _, _ in entries}
    columns = sorted({c for _, c, _ in entries})
    # only the generator's non-identity columns change
    result = [row[:] for row in matrix]
    for row_index, row in enumerate(matrix):
        for col in columns:
            total = _const(0) if col in touched_rows else row[col]
            for r, c, value in entries:
                if c == col:
                    total = total + row[r] * value
            result[row_index][col] = total
    return result


def burau_reduced(w: BraidWord) -> Matrix:
    if w.strands < 2:
        raise GeneratorRangeError(f"Reduced Burau needs n >= 2, got B{w.strands}")
    matrix = identity_matrix(w.strands - 1)
    for letter in w.letters:
        matrix = _right_multiply(matrix, letter, w.strands)
    return matrix


def determinant(matrix: Matrix) -> LaurentPolynomial:
    """sympy determinant after scaling each row by a monomial that clears negative powers."""
    if not matrix:
        return _const(1)
    variables = matrix[0][0].variables
    offset = [0] * len(variables)
    rows = []
    for row in matrix:
        exponents = [exponent for entry in row for exponent, _ in entry.items()]
        lows = [min((e[axis] for e in exponents), default=0) for axis in range(len(variables))]
        offset = [total + low for total, low in zip(offset, lows)]
        rows.append([entry.shift(tuple(-low for low in lows)).to_sympy() for entry in row])
    det = sp.expand(sp.Matrix(rows).det(method="berkowitz"))
    return LaurentPolynomial.from_sympy(det, variables).shift(tuple(offset))


def symmetrize(poly: LaurentPolynomial) -> LaurentPolynomial:
    """Shift so the exponents are centered on 0, then fix the sign so p(1) > 0."""
    low, high = poly.span()
    if (low + high) % 2:
        raise InvariantError(f"{poly} cannot be centered on integer exponents")
    centered = poly.shift((-(low + high) // 2,))
    return -centered if centered.evaluate_at_one() < 0 else centered


def alexander(w: BraidWord) -> LaurentPolynomial:
    components = component_count(w)
    if components != 1:
        raise MultiComponentError(
            f"Closure of {w} has {components} components; multivariable Alexander "
            f"polynomials are not supported"
        )
    if w.strands == 1:
        return _const(1)

    size = w.strands - 1
    burau = burau_reduced(w)
    shifted = [
        [(_const(1) if r == c else _const(0)) - burau[r][c] for c in range(size)]
        for r in range(size)
    ]
    t = sp.Symbol("t")
    cyclotomic = sum(t ** k for k in range(w.strands))
    quotient = determinant(shifted).to_sympy() / cyclotomic
    return symmetrize(LaurentPolynomial.from_sympy(quotient, T))


def alexander_genus_lb(delta: LaurentPolynomial) -> int:
    """Half the t-breadth of a symmetric Alexander polynomial bounds the genus below."""
    return delta.breadth() // 2
