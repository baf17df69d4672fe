"""
HOMFLY polynomial of braid closures.

Skein convention: v^-1 P(L+) - v P(L-) = z P(L0), P(unknot) = 1.

Letters are resolved in the Hecke algebra (g - g^-1 = z) into positive permutation
braids g_pi. Right multiplication by g_i at a descent of pi is exactly the skein
step: switching the crossing drops one inversion (the descending defect) and
smoothing deletes the letter. The closure value of each g_pi comes from a
Markov-trace recursion that strips the top strand.
"""

from functools import lru_cache
from typing import Dict, Tuple

import sympy as sp

from braid_bounds.braid_core import BraidWord, canonical_rotation, exponent_sum
from braid_bounds.invariants.burau import InvariantError, symmetrize
from braid_bounds.invariants.laurent import LaurentPolynomial

Permutation = Tuple[int, ...]
HeckeElement = Dict[Permutation, LaurentPolynomial]
VZ = ("v", "z")


def _vz(v: int, z: int, coefficient: int = 1) -> LaurentPolynomial:
    return LaurentPolynomial.monomial((v, z), coefficient, VZ)


ONE = _vz(0, 0)
Z = _vz(0, 1)
V_INV = _vz(-1, 0)
# value of an extra split unknot: (v^-1 - v) / z
DELTA = LaurentPolynomial({(-1, -1): 1, (1, -1): -1}, VZ)


def _swap(perm: Permutation, i: int) -> Permutation:
    p = list(perm)
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def _accumulate(out: HeckeElement, perm: Permutation, value: LaurentPolynomial):
    if perm in out:
        total = out[perm] + value
        if total:
            out[perm] = total
        else:
            del out[perm]
    elif value:
        out[perm] = value


def hecke_multiply(element: HeckeElement, letter: int) -> HeckeElement:
    """element * g_i^(+-1) in the permutation basis."""
    i = abs(letter)
    out: HeckeElement = {}
    for perm, coefficient in element.items():
        swapped = _swap(perm, i)
        ascent = perm[i - 1] < perm[i]
        if letter > 0:
            _accumulate(out, swapped, coefficient)
            if not ascent:
                _accumulate(out, perm, coefficient * Z)
        else:
            _accumulate(out, swapped, coefficient)
            if ascent:
                _accumulate(out, perm, -(coefficient * Z))
    return out


def reduced_word(perm: Permutation) -> Tuple[int, ...]:
    """Generators i1..ik with g_perm = g_i1 ... g_ik, found by sorting out descents."""
    p = list(perm)
    removed = []
    changed = True
    while changed:
        changed = False
        for i in range(1, len(p)):
            if p[i - 1] > p[i]:
                p[i - 1], p[i] = p[i], p[i - 1]
                removed.append(i)
                changed = True
    return tuple(reversed(removed))


@lru_cache(maxsize=None)
def permutation_trace(perm: Permutation) -> LaurentPolynomial:
    """Markov trace of g_perm, normalized so one strand closes to 1."""
    n = len(perm)
    if n <= 1:
        return ONE
    top = n - 1
    if perm[-1] == top:
        return DELTA * permutation_trace(perm[:-1])

    # g_perm = g_x g_{n-1} g_{n-2} ... g_{m+1} with x = perm with its top value moved last
    m = perm.index(top)
    x = perm[:m] + perm[m + 1:] + (top,)
    element: HeckeElement = {tuple(range(n - 1)): ONE}
    for i in range(n - 2, m, -1):
        element = hecke_multiply(element, i)
    for i in reduced_word(x[:-1]):
        element = hecke_multiply(element, i)

    total = LaurentPolynomial({}, VZ)
    for y, coefficient in element.items():
        total = total + coefficient * permutation_trace(y)
    return V_INV * total


def hecke_image(w: BraidWord) -> HeckeElement:
    element: HeckeElement = {tuple(range(w.strands)): ONE}
    for letter in w.letters:
        element = hecke_multiply(element, letter)
    return element


@lru_cache(maxsize=4096)
def _homfly_canonical(w: BraidWord) -> LaurentPolynomial:
    total = LaurentPolynomial({}, VZ)
    for perm, coefficient in hecke_image(w).items():
        total = total + coefficient * permutation_trace(perm)
    return total * _vz(exponent_sum(w), 0)


def homfly(w: BraidWord) -> LaurentPolynomial:
    return _homfly_canonical(canonical_rotation(w))


def mfw_lower_bound(p: LaurentPolynomial) -> int:
    """Morton-Franks-Williams: braid index >= ceil(v-breadth / 2) + 1."""
    if p.is_zero():
        raise InvariantError("MFW bound is undefined for the zero polynomial")
    breadth = p.breadth(axis=0)
    return -(-breadth // 2) + 1


_A, _T, _V, _Z = sp.symbols("A t v z")


def jones_from_homfly(p: LaurentPolynomial) -> LaurentPolynomial:
    """Specialize v = A^-4, z = A^-2 - A^2."""
    substitution = {_V: _A ** -4, _Z: _A ** -2 - _A ** 2}
    jones = sp.expand(p.to_sympy().subs(substitution, simultaneous=True))
    return LaurentPolynomial.from_sympy(jones, ("A",))


def alexander_from_homfly(p: LaurentPolynomial) -> LaurentPolynomial:
    """Conway specialization v = 1, then z^2 -> t - 2 + t^-1 (knots only)."""
    conway = LaurentPolynomial.from_sympy(p.to_sympy().subs(_V, 1), ("z",))
    odd_or_negative = [k for k in conway.exponents() if k < 0 or k % 2]
    if odd_or_negative:
        raise InvariantError(
            f"Conway polynomial has odd or negative z-powers {odd_or_negative}; not a knot"
        )
    alexander = sp.expand(conway.to_sympy().subs(_Z, sp.sqrt(_T) - 1 / sp.sqrt(_T)))
    return symmetrize(LaurentPolynomial.from_sympy(alexander, ("t",)))
