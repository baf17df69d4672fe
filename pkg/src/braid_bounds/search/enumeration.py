"""
Exhaustive enumeration of closed n-braid diagrams up to a crossing budget.

Emitted words are canonical: freely and cyclically reduced, and equal to their
least rotation under integer order on letters. Every closure of a word of length
<= max_length is the closure of some emitted word.
"""

from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from braid_bounds.braid_core import BraidWord, component_count
from braid_bounds.utils.config import get_settings, setup_logger

logger = setup_logger("enumeration")

Prefix = Tuple[int, ...]


class EnumerationCapError(RuntimeError):
    pass


@dataclass(frozen=True)
class EnumerationSpec:
    strands: int
    max_length: int
    knot_only: bool = False

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"strands must be >= 1, got {self.strands}")
        if self.max_length < 0:
            raise ValueError(f"max_length must be >= 0, got {self.max_length}")

    @property
    def alphabet(self) -> Tuple[int, ...]:
        n = self.strands
        return tuple(sorted(list(range(1, n)) + [-i for i in range(1, n)]))


def raw_word_count(spec: EnumerationSpec) -> int:
    """Number of unreduced signed words of length <= max_length."""
    letters = 2 * (spec.strands - 1)
    return sum(letters ** k for k in range(spec.max_length + 1))


def check_cap(spec: EnumerationSpec, cap: Optional[int] = None):
    cap = cap if cap is not None else get_settings().enumeration_cap
    raw = raw_word_count(spec)
    if raw > cap:
        raise EnumerationCapError(
            f"B{spec.strands} words up to length {spec.max_length}: raw count {raw} "
            f"exceeds the enumeration cap {cap}"
        )


def is_canonical(letters: Prefix) -> bool:
    if len(letters) >= 2 and letters[0] == -letters[-1]:
        return False
    return all(letters[k:] + letters[:k] >= letters for k in range(1, len(letters)))


def _accept(spec: EnumerationSpec, letters: Prefix) -> bool:
    if not is_canonical(letters):
        return False
    if spec.knot_only:
        return component_count(BraidWord(spec.strands, letters)) == 1
    return True


def _extend(spec: EnumerationSpec, prefix: Prefix, min_length: int = 0) -> Iterator[Prefix]:
    """Depth-first over freely reduced words starting with `prefix`."""
    if len(prefix) >= min_length and _accept(spec, prefix):
        yield prefix
    if len(prefix) == spec.max_length:
        return
    first = prefix[0]
    for letter in spec.alphabet:
        # a letter below the first one would start a smaller rotation
        if letter < first or letter == -prefix[-1]:
            continue
        yield from _extend(spec, prefix + (letter,), min_length)


def enumerate_words(spec: EnumerationSpec, cap: Optional[int] = None) -> Iterator[BraidWord]:
    check_cap(spec, cap)
    if _accept(spec, ()):
        yield BraidWord(spec.strands, ())
    if spec.max_length == 0:
        return
    for letter in spec.alphabet:
        for letters in _extend(spec, (letter,)):
            yield BraidWord(spec.strands, letters)


def work_units(spec: EnumerationSpec, depth: int) -> List[Prefix]:
    """Freely reduced prefixes of length `depth` that can begin a canonical word."""
    depth = min(depth, spec.max_length)
    if depth <= 0 or not spec.alphabet:
        return [()]
    units: List[Prefix] = [(letter,) for letter in spec.alphabet]
    for _ in range(depth - 1):
        units = [
            unit + (letter,)
            for unit in units
            for letter in spec.alphabet
            if letter >= unit[0] and letter != -unit[-1]
        ]
    return units


def expand_unit(spec: EnumerationSpec, prefix: Prefix) -> List[Prefix]:
    """Canonical words extending `prefix`; the empty prefix stands for the whole space."""
    if not prefix:
        return [word.letters for word in enumerate_words(spec, cap=float("inf"))]
    return list(_extend(spec, prefix, min_length=len(prefix)))


def _short_words(spec: EnumerationSpec, depth: int) -> List[Prefix]:
    shorter = EnumerationSpec(spec.strands, min(depth - 1, spec.max_length), spec.knot_only)
    return [word.letters for word in enumerate_words(shorter, cap=float("inf"))]


def collect_canonical_words(
    spec: EnumerationSpec,
    workers: Optional[int] = None,
    depth: Optional[int] = None,
    cap: Optional[int] = None,
) -> List[BraidWord]:
    """
    Enumerate canonical words, optionally fanned out over processes by prefix.

    Args:
        spec: strands, length budget and knot filter
        workers: process count; 1 runs in-process
        depth: prefix length of a work unit
        cap: raw word-count guard (defaults to settings)

    Returns:
        Canonical words sorted by (strands, length, letters); the result does not
        depend on workers or depth
    """
    settings = get_settings()
    workers = workers or settings.workers
    depth = settings.split_depth if depth is None else depth
    check_cap(spec, cap)

    units = work_units(spec, depth)
    logger.info(
        f"Enumerating B{spec.strands} words up to length {spec.max_length} "
        f"({len(units)} work units, {workers} workers)"
    )

    found: List[Prefix] = []
    if units != [()]:
        found.extend(_short_words(spec, len(units[0])))

    if workers <= 1 or len(units) <= 1:
        for unit in units:
            found.extend(expand_unit(spec, unit))
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = {executor.submit(expand_unit, spec, unit): unit for unit in units}
            for future in as_completed(futures):
                unit = futures[future]
                try:
                    words = future.result()
                except Exception as e:
                    logger.error(f"Work unit {unit} failed: {e}")
                    raise
                logger.debug(f"Work unit {unit}: {len(words)} canonical words")
                found.extend(words)

    result = sorted((BraidWord(spec.strands, letters) for letters in found), key=BraidWord.sort_key)
    logger.info(f"Collected {len(result)} canonical words")
    return result
