"""
Braid-index decision by bounded search.

For every b' <= n, all closed b'-braid diagrams within the crossing budget
floor(f(b') (-chi + b')) are compared against the target fingerprint. A miss at
every level is a certified "no"; a hit is only a candidate, since equal
fingerprints do not prove isotopy.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

from braid_bounds.bounds import crossing_budget
from braid_bounds.braid_core import BraidWord, component_count
from braid_bounds.invariants import Fingerprint, alexander, fingerprint, jones_normalized
from braid_bounds.search.enumeration import (
    EnumerationSpec,
    collect_canonical_words,
    raw_word_count,
)
from braid_bounds.utils.config import setup_logger

logger = setup_logger("decision")


class Verdict(str, Enum):
    CERTIFIED_NO = "certified_no"
    CANDIDATE_FOUND = "candidate_found"
    UNKNOT_SPECIAL = "unknot_special"


@dataclass(frozen=True)
class LevelStats:
    strands: int
    budget: int
    raw_words: int
    canonical_words: int
    compared: int

    def to_json(self) -> dict:
        return {
            "strands": self.strands,
            "budget": self.budget,
            "raw_words": self.raw_words,
            "canonical_words": self.canonical_words,
            "compared": self.compared,
        }


@dataclass(frozen=True)
class DecisionResult:
    verdict: Verdict
    n: int
    chi: int
    witness: Optional[BraidWord] = None
    levels: List[LevelStats] = field(default_factory=list)

    @property
    def words_visited(self) -> int:
        return sum(level.canonical_words for level in self.levels)

    @property
    def deduped(self) -> int:
        return sum(level.raw_words - level.canonical_words for level in self.levels)

    @property
    def certified(self) -> bool:
        """Negative answers are rigorous; positive ones rest on fingerprint equality."""
        return self.verdict in (Verdict.CERTIFIED_NO, Verdict.UNKNOT_SPECIAL)

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "n": self.n,
            "chi": self.chi,
            "witness": str(self.witness) if self.witness is not None else None,
            "certified": self.certified,
            "words_visited": self.words_visited,
            "deduped": self.deduped,
            "levels": [level.to_json() for level in self.levels],
        }


def unknot_fingerprint() -> Fingerprint:
    return fingerprint(BraidWord.identity(1))


def level_budget(chi: int, strands: int) -> int:
    if -chi + strands <= 0:
        return 0
    return crossing_budget(chi, strands)


def matches(w: BraidWord, target: Fingerprint) -> bool:
    """Cheapest invariant first: components, then Jones, then Alexander."""
    if component_count(w) != target.components:
        return False
    if jones_normalized(w) != target.jones:
        return False
    if target.alexander is not None and alexander(w) != target.alexander:
        return False
    return True


def decide_braid_index_leq(
    target_fp: Fingerprint,
    chi_target: int,
    n: int,
    workers: Optional[int] = None,
    cap: Optional[int] = None,
) -> DecisionResult:
    """
    Decide whether the target link has braid index <= n.

    Args:
        target_fp: fingerprint of the target link
        chi_target: maximal Euler characteristic of the target (trusted input)
        n: braid index to test against
        workers: enumeration processes
        cap: raw word-count guard per level

    Returns:
        DecisionResult with the verdict, the witness word if any and per-level stats
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if chi_target > target_fp.components:
        raise ValueError(
            f"chi={chi_target} exceeds the component count {target_fp.components}"
        )

    if target_fp == unknot_fingerprint():
        logger.info("Target fingerprint is the unknot's: braid index 1")
        return DecisionResult(Verdict.UNKNOT_SPECIAL, n, chi_target, BraidWord.identity(1))

    levels: List[LevelStats] = []
    for strands in range(2, n + 1):
        budget = level_budget(chi_target, strands)
        spec = EnumerationSpec(strands, budget, knot_only=target_fp.components == 1)
        words = collect_canonical_words(spec, workers=workers, cap=cap)
        logger.info(f"b'={strands}: budget {budget}, {len(words)} canonical words")

        compared = 0
        for w in words:
            compared += 1
            if matches(w, target_fp):
                levels.append(
                    LevelStats(strands, budget, raw_word_count(spec), len(words), compared)
                )
                logger.info(f"Candidate found at b'={strands}: {w}")
                return DecisionResult(Verdict.CANDIDATE_FOUND, n, chi_target, w, levels)
        levels.append(LevelStats(strands, budget, raw_word_count(spec), len(words), compared))

    logger.info(f"No closure within budget matches: braid index > {n}")
    return DecisionResult(Verdict.CERTIFIED_NO, n, chi_target, None, levels)
