"""
Count data of a braid-foliated surface: vertex types V+(alpha, beta), V-(0, beta),
tile counts and the surface's Euler characteristic.

JSON form:
    {"b": int, "chi": int, "v_plus": [[alpha, beta, count], ...],
     "v_minus": [[beta, count], ...], "r": [aa, ab, bb]}
"""

import json
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from pydantic import BaseModel, ValidationError, field_validator


class CertificateError(ValueError):
    pass


class CertificatePayload(BaseModel):
    b: int
    chi: int
    v_plus: List[Tuple[int, int, int]] = []
    v_minus: List[Tuple[int, int]] = []
    r: Tuple[int, int, int] = (0, 0, 0)

    @field_validator("v_plus")
    @classmethod
    def non_negative_plus(cls, rows):
        for alpha, beta, count in rows:
            if min(alpha, beta, count) < 0:
                raise ValueError(f"v_plus entry {[alpha, beta, count]} has a negative value")
        return rows

    @field_validator("v_minus")
    @classmethod
    def non_negative_minus(cls, rows):
        for beta, count in rows:
            if min(beta, count) < 0:
                raise ValueError(f"v_minus entry {[beta, count]} has a negative value")
        return rows

    @field_validator("r")
    @classmethod
    def non_negative_tiles(cls, tiles):
        if min(tiles) < 0:
            raise ValueError(f"Tile counts must be >= 0, got {list(tiles)}")
        return tiles


@dataclass(frozen=True)
class FoliationCertificate:
    braid_index: int
    chi: int
    v_plus: Dict[Tuple[int, int], int] = field(default_factory=dict)
    v_minus: Dict[int, int] = field(default_factory=dict)
    r_aa: int = 0
    r_ab: int = 0
    r_bb: int = 0

    def __post_init__(self):
        for (alpha, beta), count in self.v_plus.items():
            if alpha < 0 or beta < 0 or count < 0:
                raise CertificateError(f"Invalid V+({alpha},{beta}) = {count}")
        for beta, count in self.v_minus.items():
            if beta < 0 or count < 0:
                raise CertificateError(f"Invalid V-(0,{beta}) = {count}")
        if min(self.r_aa, self.r_ab, self.r_bb) < 0:
            raise CertificateError(
                f"Tile counts must be >= 0, got {(self.r_aa, self.r_ab, self.r_bb)}"
            )
        object.__setattr__(self, "v_plus", {k: v for k, v in self.v_plus.items() if v})
        object.__setattr__(self, "v_minus", {k: v for k, v in self.v_minus.items() if v})

    def v(self, alpha: int, beta: int) -> int:
        """V(alpha, beta): negative vertices only ever carry b-arcs."""
        total = self.v_plus.get((alpha, beta), 0)
        if alpha == 0:
            total += self.v_minus.get(beta, 0)
        return total

    def vertex_types(self) -> List[Tuple[int, int]]:
        types = set(self.v_plus) | {(0, beta) for beta in self.v_minus}
        return sorted(types)

    def to_payload(self) -> CertificatePayload:
        return CertificatePayload(
            b=self.braid_index,
            chi=self.chi,
            v_plus=[(a, b, n) for (a, b), n in sorted(self.v_plus.items())],
            v_minus=sorted(self.v_minus.items()),
            r=(self.r_aa, self.r_ab, self.r_bb),
        )

    def to_json(self) -> dict:
        payload = self.to_payload().model_dump()
        payload["v_plus"] = [list(row) for row in payload["v_plus"]]
        payload["v_minus"] = [list(row) for row in payload["v_minus"]]
        payload["r"] = list(payload["r"])
        return payload

    @classmethod
    def from_payload(cls, payload: CertificatePayload) -> "FoliationCertificate":
        v_plus: Dict[Tuple[int, int], int] = {}
        for alpha, beta, count in payload.v_plus:
            v_plus[(alpha, beta)] = v_plus.get((alpha, beta), 0) + count
        v_minus: Dict[int, int] = {}
        for beta, count in payload.v_minus:
            v_minus[beta] = v_minus.get(beta, 0) + count
        r_aa, r_ab, r_bb = payload.r
        return cls(payload.b, payload.chi, v_plus, v_minus, r_aa, r_ab, r_bb)

    @classmethod
    def from_json(cls, data) -> "FoliationCertificate":
        try:
            if isinstance(data, (str, bytes)):
                payload = CertificatePayload.model_validate_json(data)
            else:
                payload = CertificatePayload.model_validate(data)
        except (ValidationError, json.JSONDecodeError) as e:
            raise CertificateError(f"Malformed certificate: {e}") from e
        return cls.from_payload(payload)
