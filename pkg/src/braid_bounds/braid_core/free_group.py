"""
Free group words and the Artin action of B_n on F_n.

The action is faithful, so comparing the images of the free generators decides
equality in the braid group.
"""

from dataclasses import dataclass

from braid_bounds.braid_core.braid_word import (
    BraidWord,
    StrandMismatchError,
)


@dataclass(frozen=True)
class FreeGroupWord:
    """Freely reduced word; letters are +k / -k for x_k and its inverse (k >= 1)."""

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        for a, b in zip(letters, letters[1:]):
            if a == -b:
                raise ValueError(f"Free word is not reduced: {letters}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def generator(cls, k: int) -> "FreeGroupWord":
        return cls((k,))

    @classmethod
    def reduced(cls, letters) -> "FreeGroupWord":
        stack: list[int] = []
        for letter in letters:
            if stack and stack[-1] == -letter:
                stack.pop()
            else:
                stack.append(letter)
        return cls(tuple(stack))

    def __mul__(self, other: "FreeGroupWord") -> "FreeGroupWord":
        return FreeGroupWord.reduced(self.letters + other.letters)

    def __invert__(self) -> "FreeGroupWord":
        return FreeGroupWord(tuple(-letter for letter in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return "".join(
            f"x{abs(letter)}" + ("" if letter > 0 else "^-1") for letter in self.letters
        )


def _generator_images(letter: int, strands: int) -> dict[int, FreeGroupWord]:
    i = abs(letter)
    x_i, x_j = FreeGroupWord.generator(i), FreeGroupWord.generator(i + 1)
    if letter > 0:
        # x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
        return {i: x_i * x_j * ~x_i, i + 1: x_i}
    # x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
    return {i: x_j, i + 1: ~x_j * x_i * x_j}


def _substitute(word: FreeGroupWord, images: dict[int, FreeGroupWord]) -> FreeGroupWord:
    letters: list[int] = []
    for letter in word.letters:
        k = abs(letter)
        if k in images:
            image = images[k] if letter > 0 else ~images[k]
            letters.extend(image.letters)
        else:
            letters.append(letter)
    return FreeGroupWord.reduced(letters)


def artin_action(w: BraidWord) -> list[FreeGroupWord]:
    """Images of x_1..x_n under the automorphism of w (letters applied left to right)."""
    images = [FreeGroupWord.generator(k) for k in range(1, w.strands + 1)]
    for letter in w.letters:
        substitution = _generator_images(letter, w.strands)
        images = [_substitute(image, substitution) for image in images]
    return images


def braid_eq(u: BraidWord, v: BraidWord) -> bool:
    if u.strands != v.strands:
        raise StrandMismatchError(
            f"Cannot compare braids on {u.strands} and {v.strands} strands"
        )
    return artin_action(u) == artin_action(v)
