"""
Kauffman bracket of closed braids through the Temperley-Lieb algebra.

Each letter is resolved as sigma_i -> A + A^-1 e_i and sigma_i^-1 -> A^-1 + A e_i,
with <unknot> = 1. So the one-crossing closure of sigma_1 has bracket -A^3 and
that of sigma_1^-1 has -A^-3; the Jones normalization (-A)^(-3 writhe) <L> then
sends both to 1. The mirror convention, where sigma_1 gives -A^-3, is not used.
A basis diagram of TL_n is a planar matching of 2n points: top points 0..n-1,
bottom points n..2n-1, stored as a tuple `match` with match[p] = partner of p.
"""

from functools import lru_cache
from itertools import product
from typing import Dict, Tuple

from braid_bounds.braid_core import BraidWord, exponent_sum
from braid_bounds.diagram import ClosedBraidDiagram, closure
from braid_bounds.invariants.laurent import LaurentPolynomial

Matching = Tuple[int, ...]
A = ("A",)


def _a_power(k: int) -> LaurentPolynomial:
    return LaurentPolynomial.monomial((k,), 1, A)


@lru_cache(maxsize=None)
def loop_value(power: int = 1) -> LaurentPolynomial:
    """delta^power with delta = -A^2 - A^-2"""
    delta = LaurentPolynomial({(2,): -1, (-2,): -1}, A)
    return delta ** power


def _identity_matching(n: int) -> Matching:
    return tuple(list(range(n, 2 * n)) + list(range(n)))


@lru_cache(maxsize=None)
def _cup_cap(n: int, i: int) -> Matching:
    match = list(_identity_matching(n))
    left, right = i - 1, i
    match[left], match[right] = right, left
    match[n + left], match[n + right] = n + right, n + left
    return tuple(match)


@lru_cache(maxsize=None)
def _compose(upper: Matching, lower: Matching) -> Tuple[Matching, int]:
    """Stack `upper` over `lower`; returns the matching and the closed loops."""
    n = len(upper) // 2
    result = [0] * (2 * n)
    seen = [False] * n

    def down_from(middle: int) -> int:
        while True:
            seen[middle] = True
            r = lower[middle]
            if r >= n:
                return r
            seen[r] = True
            q = upper[r + n]
            if q < n:
                return q
            middle = q - n

    def up_from(middle: int) -> int:
        while True:
            seen[middle] = True
            q = upper[middle + n]
            if q < n:
                return q
            nxt = q - n
            seen[nxt] = True
            r = lower[nxt]
            if r >= n:
                return r
            middle = r

    for p in range(n):
        q = upper[p]
        result[p] = q if q < n else down_from(q - n)
    for p in range(n, 2 * n):
        r = lower[p]
        result[p] = r if r >= n else up_from(r)

    loops = 0
    for start in range(n):
        if seen[start]:
            continue
        loops += 1
        middle = start
        while True:
            seen[middle] = True
            r = lower[middle]
            seen[r] = True
            middle = upper[r + n] - n
            if middle == start:
                break
    return tuple(result), loops


def closure_loops(match: Matching) -> int:
    """Loops left after joining top point k to bottom point n + k."""
    n = len(match) // 2
    seen = [False] * (2 * n)
    loops = 0
    for start in range(2 * n):
        if seen[start]:
            continue
        loops += 1
        p = start
        while True:
            seen[p] = True
            q = match[p]
            seen[q] = True
            p = q + n if q < n else q - n
            if p == start:
                break
    return loops


def _multiply_letter(
    element: Dict[Matching, LaurentPolynomial], letter: int, n: int
) -> Dict[Matching, LaurentPolynomial]:
    sign = 1 if letter > 0 else -1
    cup = _cup_cap(n, abs(letter))
    identity_weight = _a_power(sign)
    smoothing_weight = _a_power(-sign)
    out: Dict[Matching, LaurentPolynomial] = {}
    for match, coefficient in element.items():
        term = coefficient * identity_weight
        out[match] = out[match] + term if match in out else term

        composed, loops = _compose(match, cup)
        term = coefficient * smoothing_weight
        if loops:
            term = term * loop_value(loops)
        out[composed] = out[composed] + term if composed in out else term
    return {m: c for m, c in out.items() if c}


def temperley_lieb_image(w: BraidWord) -> Dict[Matching, LaurentPolynomial]:
    n = w.strands
    element = {_identity_matching(n): LaurentPolynomial.constant(1, A)}
    for letter in w.letters:
        element = _multiply_letter(element, letter, n)
    return element


def kauffman_bracket(d: ClosedBraidDiagram) -> LaurentPolynomial:
    total = LaurentPolynomial({}, A)
    for match, coefficient in temperley_lieb_image(d.word).items():
        loops = closure_loops(match)
        total = total + coefficient * loop_value(loops - 1)
    return total


def state_sum_bracket(d: ClosedBraidDiagram) -> LaurentPolynomial:
    """Brute-force bracket over all 2^c smoothings."""
    n, crossings = d.strands, d.crossings
    c = len(crossings)
    if c == 0:
        return loop_value(n - 1)

    total = LaurentPolynomial({}, A)
    for state in product((True, False), repeat=c):
        parent = list(range(c * n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: int, y: int):
            parent[find(x)] = find(y)

        a_power = 0
        for level, ((i, sign), a_smoothing) in enumerate(zip(crossings, state)):
            below = (level + 1) % c
            vertical = a_smoothing == (sign > 0)
            a_power += 1 if a_smoothing else -1
            for p in range(n):
                if p not in (i - 1, i):
                    union(level * n + p, below * n + p)
            if vertical:
                union(level * n + i - 1, below * n + i - 1)
                union(level * n + i, below * n + i)
            else:
                union(level * n + i - 1, level * n + i)
                union(below * n + i - 1, below * n + i)

        loops = len({find(x) for x in range(c * n)})
        total = total + _a_power(a_power) * loop_value(loops - 1)
    return total


def jones_normalized(w: BraidWord) -> LaurentPolynomial:
    """(-A)^(-3 writhe) <closure(w)>, an invariant of the closed link."""
    writhe = exponent_sum(w)
    sign = -1 if writhe % 2 else 1
    return kauffman_bracket(closure(w)) * _a_power(-3 * writhe) * sign
