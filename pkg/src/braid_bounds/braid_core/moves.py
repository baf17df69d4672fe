"""
Closure-preserving moves (Markov, exchange) and the braid words read off
foliation tiles (band generators and ab-tile words).
"""

from typing import List

from braid_bounds.braid_core.braid_word import (
    BraidError,
    BraidWord,
    GeneratorRangeError,
    is_cyclic_rotation,
    rotate,
)


class MarkovMoveError(BraidError):
    pass


def markov_stabilize(w: BraidWord, sign: int = 1) -> BraidWord:
    if sign not in (1, -1):
        raise ValueError(f"Stabilization sign must be +1 or -1, got {sign}")
    return BraidWord(w.strands + 1, w.letters + (sign * w.strands,))


def markov_destabilize(w: BraidWord) -> BraidWord:
    """
    Remove the last strand when sigma_{n-1}^{+-1} occurs exactly once.

    w = A s B with A, B in B_{n-1} is conjugate to B A s, which destabilizes to B A.
    """
    top = w.strands - 1
    if top < 1:
        raise MarkovMoveError("A 1-strand braid cannot be destabilized")
    positions = [k for k, letter in enumerate(w.letters) if abs(letter) == top]
    if len(positions) != 1:
        raise MarkovMoveError(
            f"Destabilization needs exactly one sigma_{top}^(+-1), found {len(positions)}"
        )
    k = positions[0]
    return BraidWord(w.strands - 1, w.letters[k + 1:] + w.letters[:k])


def exchange_move(w: BraidWord) -> List[BraidWord]:
    """
    All exchange moves of w up to cyclic rotation.

    A rotation of the form alpha s^e beta s^-e, with s = sigma_{n-1} and alpha, beta
    on strands 1..n-2 (generators up to sigma_{n-3}), becomes alpha s^-e beta s^e.
    Outputs are unique up to cyclic rotation.
    """
    top = w.strands - 1
    if top < 1 or len(w.letters) < 2:
        return []

    results: List[BraidWord] = []
    for k in range(len(w.letters)):
        letters = rotate(w, k).letters
        last = letters[-1]
        if abs(last) != top:
            continue
        pivots = [p for p, letter in enumerate(letters[:-1]) if abs(letter) >= top - 1]
        if len(pivots) != 1 or letters[pivots[0]] != -last:
            continue
        p = pivots[0]
        alpha, beta = letters[:p], letters[p + 1:-1]
        candidate = BraidWord(w.strands, alpha + (last,) + beta + (-last,))
        if any(is_cyclic_rotation(candidate, seen) for seen in results):
            continue
        results.append(candidate)
    return results


def _check_tile_indices(i: int, j: int, strands: int):
    if not 1 <= i < j <= strands:
        raise GeneratorRangeError(
            f"Tile indices need 1 <= i < j <= n, got i={i}, j={j}, n={strands}"
        )


def band_generator(i: int, j: int, sign: int, strands: int) -> BraidWord:
    """sigma_{i,j} = (sigma_i ... sigma_{j-2}) sigma_{j-1}^sign (sigma_i ... sigma_{j-2})^-1"""
    _check_tile_indices(i, j, strands)
    if sign not in (1, -1):
        raise ValueError(f"Band sign must be +1 or -1, got {sign}")
    prefix = tuple(range(i, j - 1))
    suffix = tuple(-letter for letter in reversed(prefix))
    return BraidWord(strands, prefix + (sign * (j - 1),) + suffix)


def ab_tile_word(i: int, j: int, sign: int, direction: str, strands: int) -> BraidWord:
    """
    sigma_i ... sigma_{j-1} ("ascending") or sigma_{j-1} ... sigma_i ("descending"),
    every letter carrying `sign`. The negative ascending word is the inverse of the
    positive descending one and vice versa.
    """
    _check_tile_indices(i, j, strands)
    if sign not in (1, -1):
        raise ValueError(f"Tile sign must be +1 or -1, got {sign}")
    if direction == "ascending":
        indices = range(i, j)
    elif direction == "descending":
        indices = range(j - 1, i - 1, -1)
    else:
        raise ValueError(f"direction must be 'ascending' or 'descending', got {direction!r}")
    return BraidWord(strands, tuple(sign * index for index in indices))
