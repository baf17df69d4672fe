"""
Bundled knot table: rows of (name, braid word, chi, braid index, crossing number),
each re-verified against computed invariants at load.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional

import pandas as pd
from pydantic import BaseModel, Field, ValidationError, field_validator

from braid_bounds.bounds import BoundReport, BoundsDomainError, theorem_bounds
from braid_bounds.braid_core import BraidError, BraidWord, component_count, parse_braid_word
from braid_bounds.diagram import bennequin_chi
from braid_bounds.invariants import alexander, alexander_genus_lb, homfly, mfw_lower_bound
from braid_bounds.utils.config import get_settings, setup_logger

logger = setup_logger("knot_table")

COLUMNS = ["name", "word", "chi", "braid_index", "crossing_number"]


class TableValidationError(ValueError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class KnotTableRow(BaseModel):
    name: str = Field(min_length=1)
    word: str
    chi: int
    braid_index: int = Field(ge=1)
    crossing_number: int = Field(ge=0)

    @field_validator("word")
    @classmethod
    def parseable_word(cls, value: str) -> str:
        try:
            parse_braid_word(value)
        except BraidError as e:
            raise ValueError(str(e)) from e
        return value.strip()

    @property
    def braid(self) -> BraidWord:
        return parse_braid_word(self.word)


@dataclass(frozen=True)
class RowVerification:
    row: KnotTableRow
    mfw: int
    alexander_genus: int
    bennequin_chi: int
    bounds: BoundReport

    def to_json(self) -> dict:
        return {
            "name": self.row.name,
            "word": self.row.word,
            "mfw": self.mfw,
            "alexander_genus": self.alexander_genus,
            "bennequin_chi": self.bennequin_chi,
            "bounds": self.bounds.to_json(),
            "crossing_number": self.row.crossing_number,
        }


def verify_row(row: KnotTableRow, line: int) -> RowVerification:
    """Check the row against its own braid word; raises TableValidationError."""
    w = row.braid
    if w.strands != row.braid_index:
        raise TableValidationError(
            line, f"{row.name}: word has {w.strands} strands, braid_index is {row.braid_index}"
        )
    components = component_count(w)
    if components != 1:
        raise TableValidationError(line, f"{row.name}: closure has {components} components")

    mfw = mfw_lower_bound(homfly(w))
    if mfw > row.braid_index:
        raise TableValidationError(
            line, f"{row.name}: MFW bound {mfw} exceeds braid_index {row.braid_index}"
        )

    genus_lb = alexander_genus_lb(alexander(w))
    chi_surface = bennequin_chi(w)
    if not chi_surface <= row.chi <= 1 - 2 * genus_lb:
        raise TableValidationError(
            line,
            f"{row.name}: chi={row.chi} outside [{chi_surface}, {1 - 2 * genus_lb}] "
            f"(Bennequin surface, Alexander degree)",
        )

    try:
        report = theorem_bounds(row.chi, row.braid_index)
    except BoundsDomainError as e:
        raise TableValidationError(line, f"{row.name}: {e}") from e
    if not report.contains(row.crossing_number):
        raise TableValidationError(
            line,
            f"{row.name}: crossing number {row.crossing_number} outside "
            f"[{report.lower}, {report.upper}]",
        )
    return RowVerification(row, mfw, genus_lb, chi_surface, report)


def read_rows(path: Path) -> List[KnotTableRow]:
    """Parse rows without invariant checks. Line numbers count the header as line 1."""
    try:
        df = pd.read_csv(path, dtype=str, keep_default_na=False, skipinitialspace=True)
    except pd.errors.EmptyDataError:
        logger.warning(f"Knot table {path} is empty")
        return []

    missing = [c for c in COLUMNS if c not in df.columns]
    if missing:
        raise TableValidationError(1, f"missing columns {missing}")

    rows = []
    for index, record in enumerate(df[COLUMNS].to_dict("records")):
        line = index + 2
        try:
            rows.append(KnotTableRow.model_validate(record))
        except ValidationError as e:
            first = e.errors()[0]
            field = ".".join(str(part) for part in first["loc"])
            raise TableValidationError(line, f"{field}: {first['msg']}") from e
    return rows


def load_table(path: Optional[Path] = None) -> List[KnotTableRow]:
    path = Path(path) if path is not None else get_settings().table_path
    logger.info(f"Loading knot table from {path}")
    rows = read_rows(path)
    for index, row in enumerate(rows):
        verify_row(row, index + 2)
    logger.info(f"Knot table: {len(rows)} rows verified")
    return rows


def validate_table(path: Optional[Path] = None) -> List[RowVerification]:
    path = Path(path) if path is not None else get_settings().table_path
    rows = read_rows(path)
    return [verify_row(row, index + 2) for index, row in enumerate(rows)]


def find_row(name: str, path: Optional[Path] = None) -> KnotTableRow:
    for row in load_table(path):
        if row.name == name:
            return row
    raise KeyError(f"No knot named {name!r} in the table")
