"""
Finiteness census: knots of genus g and braid index n, found among closed
n-braids within the crossing budget floor(f(n) (2g - 1 + n)).

An entry is certified when the Alexander degree bound meets the smallest
Bennequin genus seen (genus), and when the MFW bound reaches n (braid index,
the n-braid witness being the upper bound).
"""

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Tuple

from braid_bounds.bounds import crossing_budget
from braid_bounds.braid_core import BraidWord
from braid_bounds.diagram import bennequin_chi
from braid_bounds.invariants import (
    Fingerprint,
    alexander_genus_lb,
    fingerprint,
    homfly,
    mfw_lower_bound,
)
from braid_bounds.search.enumeration import EnumerationSpec, collect_canonical_words
from braid_bounds.utils.config import get_settings, setup_logger

logger = setup_logger("census")

Interval = Tuple[int, int]


@dataclass(frozen=True)
class CensusEntry:
    fingerprint: Fingerprint
    witness: BraidWord
    genus_bounds: Interval
    braid_index_bounds: Interval

    @property
    def certified_genus(self) -> Optional[int]:
        low, high = self.genus_bounds
        return low if low == high else None

    @property
    def certified_braid_index(self) -> Optional[int]:
        low, high = self.braid_index_bounds
        return low if low == high else None

    def to_json(self, residue: bool = False) -> dict:
        payload = {
            "fingerprint": self.fingerprint.to_json(),
            "witness": str(self.witness),
            "certified_genus": self.certified_genus,
            "certified_braid_index": self.certified_braid_index,
            "genus_bounds": list(self.genus_bounds),
            "braid_index_bounds": list(self.braid_index_bounds),
        }
        if residue:
            payload["residue"] = True
        return payload


@dataclass(frozen=True)
class CensusReport:
    g: int
    n: int
    budget: int
    entries: List[CensusEntry] = field(default_factory=list)
    residue: List[CensusEntry] = field(default_factory=list)
    words_examined: int = 0

    def summary(self) -> dict:
        return {
            "g": self.g,
            "n": self.n,
            "budget": self.budget,
            "certified": len(self.entries),
            "residue": len(self.residue),
            "words_examined": self.words_examined,
        }


def bennequin_genus(w: BraidWord) -> int:
    return (1 - bennequin_chi(w)) // 2


def _fingerprint_all(words: List[BraidWord], workers: int) -> List[Fingerprint]:
    if workers <= 1 or len(words) < 2:
        return [fingerprint(w) for w in words]
    chunksize = max(1, len(words) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fingerprint, words, chunksize=chunksize))


def _group_by_fingerprint(
    words: List[BraidWord], fingerprints: List[Fingerprint]
) -> Dict[Fingerprint, Tuple[BraidWord, int]]:
    """Shortest witness and least Bennequin genus per fingerprint."""
    groups: Dict[Fingerprint, Tuple[BraidWord, int]] = {}
    for w, fp in zip(words, fingerprints):
        genus = bennequin_genus(w)
        if fp not in groups:
            groups[fp] = (w, genus)
            continue
        witness, best = groups[fp]
        if w.sort_key() < witness.sort_key():
            witness = w
        groups[fp] = (witness, min(best, genus))
    return groups


def census(
    g: int,
    n: int,
    workers: Optional[int] = None,
    cap: Optional[int] = None,
) -> CensusReport:
    if g < 0:
        raise ValueError(f"Genus must be >= 0, got {g}")
    if n < 1:
        raise ValueError(f"Braid index must be >= 1, got {n}")
    workers = workers or get_settings().workers

    if n == 1:
        entries = []
        if g == 0:
            unknot = BraidWord.identity(1)
            entries.append(CensusEntry(fingerprint(unknot), unknot, (0, 0), (1, 1)))
        return CensusReport(g, n, 0, entries, [], len(entries))

    budget = crossing_budget(1 - 2 * g, n)
    logger.info(f"Census g={g}, n={n}: crossing budget {budget}")
    words = collect_canonical_words(
        EnumerationSpec(n, budget, knot_only=True), workers=workers, cap=cap
    )
    fingerprints = _fingerprint_all(words, workers)
    groups = _group_by_fingerprint(words, fingerprints)
    logger.info(f"{len(words)} knot words, {len(groups)} distinct fingerprints")

    entries: List[CensusEntry] = []
    residue: List[CensusEntry] = []
    for fp, (witness, genus_upper) in groups.items():
        genus_lower = alexander_genus_lb(fp.alexander)
        if not genus_lower <= g <= genus_upper:
            continue
        if len(witness) > budget:
            raise RuntimeError(f"Witness {witness} exceeds the crossing budget {budget}")
        braid_lower = mfw_lower_bound(homfly(witness))
        entry = CensusEntry(fp, witness, (genus_lower, genus_upper), (braid_lower, n))
        if entry.certified_genus == g and entry.certified_braid_index == n:
            entries.append(entry)
        else:
            residue.append(entry)
        logger.debug(f"{witness}: genus {entry.genus_bounds}, braid index {entry.braid_index_bounds}")

    entries.sort(key=lambda e: e.fingerprint.sort_key())
    residue.sort(key=lambda e: e.fingerprint.sort_key())
    logger.info(f"Census g={g}, n={n}: {len(entries)} certified, {len(residue)} residue")
    return CensusReport(g, n, budget, entries, residue, len(words))


def write_jsonl(
    entries: Iterable[CensusEntry], path: Path, residue: Iterable[CensusEntry] = ()
) -> int:
    """Certified entries first, then residue entries tagged with "residue": true."""
    count = 0
    with open(path, "w") as f:
        for entry in entries:
            f.write(json.dumps(entry.to_json(), sort_keys=True) + "\n")
            count += 1
        for entry in residue:
            f.write(json.dumps(entry.to_json(residue=True), sort_keys=True) + "\n")
            count += 1
    logger.info(f"Wrote {count} census entries to {path}")
    return count
