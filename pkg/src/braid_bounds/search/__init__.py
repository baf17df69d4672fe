from braid_bounds.search.census import (
    CensusEntry,
    CensusReport,
    bennequin_genus,
    census,
    write_jsonl,
)
from braid_bounds.search.decision import (
    DecisionResult,
    LevelStats,
    Verdict,
    decide_braid_index_leq,
    level_budget,
    matches,
    unknot_fingerprint,
)
from braid_bounds.search.enumeration import (
    EnumerationCapError,
    EnumerationSpec,
    check_cap,
    collect_canonical_words,
    enumerate_words,
    expand_unit,
    is_canonical,
    raw_word_count,
    work_units,
)

__all__ = [
    "CensusEntry",
    "CensusReport",
    "DecisionResult",
    "EnumerationCapError",
    "EnumerationSpec",
    "LevelStats",
    "Verdict",
    "bennequin_genus",
    "census",
    "check_cap",
    "collect_canonical_words",
    "decide_braid_index_leq",
    "enumerate_words",
    "expand_unit",
    "is_canonical",
    "level_budget",
    "matches",
    "raw_word_count",
    "unknot_fingerprint",
    "work_units",
]
