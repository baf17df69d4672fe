"""
Braid words in the Artin generators of B_n.

CONVENTION: generators are indexed from 1 to n-1; a letter is stored as a signed
integer, +i for sigma_i and -i for its inverse. Strand positions are 1..n, and
sigma_i exchanges the strands at positions i and i+1.
"""

from dataclasses import dataclass
from typing import Iterable, NamedTuple


class BraidError(ValueError):
    pass


class StrandMismatchError(BraidError):
    pass


class GeneratorRangeError(BraidError):
    pass


class BraidParseError(BraidError):
    pass


class BraidLetter(NamedTuple):
    index: int
    sign: int

    @classmethod
    def from_int(cls, letter: int) -> "BraidLetter":
        return cls(abs(letter), 1 if letter > 0 else -1)

    def to_int(self) -> int:
        return self.sign * self.index


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise GeneratorRangeError(f"A braid needs at least one strand, got {self.strands}")
        letters = tuple(self.letters)
        for letter in letters:
            if letter == 0 or abs(letter) > self.strands - 1:
                raise GeneratorRangeError(
                    f"Letter {letter} out of range for B{self.strands} "
                    f"(generators 1..{self.strands - 1})"
                )
        object.__setattr__(self, "letters", letters)

    @classmethod
    def identity(cls, strands: int) -> "BraidWord":
        return cls(strands, ())

    @classmethod
    def from_letters(cls, strands: int, letters: Iterable[BraidLetter]) -> "BraidWord":
        return cls(strands, tuple(letter.to_int() for letter in letters))

    @property
    def braid_letters(self) -> tuple[BraidLetter, ...]:
        return tuple(BraidLetter.from_int(letter) for letter in self.letters)

    @property
    def length(self) -> int:
        return len(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        body = " ".join(str(letter) for letter in self.letters)
        return f"B{self.strands}: {body}".rstrip()

    def sort_key(self) -> tuple:
        return (self.strands, len(self.letters), self.letters)


def parse_braid_word(text: str) -> BraidWord:
    """Parse the text format `B<n>: <i1> <i2> ...`, e.g. `B3: 1 -2 1 -2`."""
    head, sep, body = text.strip().partition(":")
    head = head.strip()
    if not sep or not head.upper().startswith("B"):
        raise BraidParseError(f"Expected 'B<n>: <letters>', got {text!r}")
    try:
        strands = int(head[1:])
        letters = tuple(int(token) for token in body.split())
    except ValueError as e:
        raise BraidParseError(f"Malformed braid word {text!r}: {e}") from e
    return BraidWord(strands, letters)


def _require_same_strands(u: BraidWord, v: BraidWord):
    if u.strands != v.strands:
        raise StrandMismatchError(
            f"Strand counts differ: B{u.strands} vs B{v.strands}"
        )


def compose(u: BraidWord, v: BraidWord) -> BraidWord:
    _require_same_strands(u, v)
    return BraidWord(u.strands, u.letters + v.letters)


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-letter for letter in reversed(w.letters)))


def power(w: BraidWord, k: int) -> BraidWord:
    base = w if k >= 0 else inverse(w)
    return BraidWord(w.strands, base.letters * abs(k))


def conjugate(w: BraidWord, c: BraidWord) -> BraidWord:
    """c w c^-1"""
    _require_same_strands(w, c)
    return BraidWord(w.strands, c.letters + w.letters + inverse(c).letters)


def delta(strands: int) -> BraidWord:
    """sigma_1 sigma_2 ... sigma_{n-1}"""
    return BraidWord(strands, tuple(range(1, strands)))


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[int] = []
    for letter in w.letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return BraidWord(w.strands, tuple(stack))


def cyclic_reduce(w: BraidWord) -> BraidWord:
    letters = free_reduce(w).letters
    start, end = 0, len(letters)
    while end - start >= 2 and letters[start] == -letters[end - 1]:
        start += 1
        end -= 1
    return BraidWord(w.strands, letters[start:end])


def rotate(w: BraidWord, k: int) -> BraidWord:
    if not w.letters:
        return w
    k %= len(w.letters)
    return BraidWord(w.strands, w.letters[k:] + w.letters[:k])


def least_rotation(letters: tuple[int, ...]) -> tuple[int, ...]:
    if not letters:
        return letters
    return min(letters[k:] + letters[:k] for k in range(len(letters)))


def canonical_rotation(w: BraidWord) -> BraidWord:
    """Least rotation (integer order on letters) of the cyclically reduced word."""
    reduced = cyclic_reduce(w)
    return BraidWord(w.strands, least_rotation(reduced.letters))


def is_cyclic_rotation(u: BraidWord, v: BraidWord) -> bool:
    if u.strands != v.strands or len(u) != len(v):
        return False
    return least_rotation(u.letters) == least_rotation(v.letters)


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if letter > 0 else -1 for letter in w.letters)


def permutation(w: BraidWord) -> tuple[int, ...]:
    """
    Underlying permutation as a 0-based tuple: entry p is the bottom position of
    the strand entering at top position p.
    """
    position = list(range(w.strands))
    occupant = list(range(w.strands))
    for letter in w.letters:
        i = abs(letter) - 1
        left, right = occupant[i], occupant[i + 1]
        occupant[i], occupant[i + 1] = right, left
        position[left], position[right] = i + 1, i
    return tuple(position)


def permutation_cycles(perm: tuple[int, ...]) -> list[tuple[int, ...]]:
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycle = []
        p = start
        while not seen[p]:
            seen[p] = True
            cycle.append(p)
            p = perm[p]
        cycles.append(tuple(cycle))
    return cycles


def component_count(w: BraidWord) -> int:
    return len(permutation_cycles(permutation(w)))
