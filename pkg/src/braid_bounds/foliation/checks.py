"""
Counting identities of braid foliations evaluated on a certificate, the
reduced-form test, the tile inequality, and crossing bounds read off tiles.

Checkers never raise on a failing identity; they return reports carrying both
sides and their difference.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Tuple, Union

from braid_bounds.bounds import BoundsDomainError
from braid_bounds.braid_core import BraidWord, free_reduce
from braid_bounds.diagram import bennequin_chi, strand_valences
from braid_bounds.foliation.certificate import FoliationCertificate

Number = Union[int, Fraction]


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class IdentityCheck:
    label: str
    lhs: Number
    rhs: Number
    relation: str = "=="

    @property
    def holds(self) -> bool:
        if self.relation == "==":
            return self.lhs == self.rhs
        if self.relation == "<=":
            return self.lhs <= self.rhs
        raise ValueError(f"Unknown relation {self.relation!r}")

    @property
    def delta(self) -> Number:
        return self.lhs - self.rhs

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "relation": self.relation,
            "delta": str(self.delta),
            "holds": self.holds,
        }


@dataclass(frozen=True)
class CheckReport:
    name: str
    identities: Tuple[IdentityCheck, ...] = ()
    skipped_reason: str = ""

    @property
    def status(self) -> CheckStatus:
        if self.skipped_reason:
            return CheckStatus.SKIPPED
        if all(identity.holds for identity in self.identities):
            return CheckStatus.PASS
        return CheckStatus.FAIL

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS

    def to_json(self) -> dict:
        payload = {
            "name": self.name,
            "status": self.status.value,
            "identities": [identity.to_json() for identity in self.identities],
        }
        if self.skipped_reason:
            payload["skipped_reason"] = self.skipped_reason
        return payload


def _max_valence(c: FoliationCertificate) -> int:
    return max((alpha + beta for alpha, beta in c.vertex_types()), default=0)


def check_euler_equality(c: FoliationCertificate) -> CheckReport:
    """
    2V(1,0) + 2V(0,2) + V(0,3) + V(1,1) - 4chi
        = V(2,1) + 2V(3,0) + sum_{v>=4} sum_alpha (v + alpha - 4) V(alpha, v - alpha)

    Degenerate certificates (unused strands, the 1-strand disk) are reported as
    they evaluate.
    """
    v = c.v
    lhs = 2 * v(1, 0) + 2 * v(0, 2) + v(0, 3) + v(1, 1) - 4 * c.chi
    rhs = v(2, 1) + 2 * v(3, 0)
    for valence in range(4, _max_valence(c) + 1):
        for alpha in range(valence + 1):
            rhs += (valence + alpha - 4) * v(alpha, valence - alpha)
    return CheckReport("euler_equality", (IdentityCheck("euler", lhs, rhs),))


def check_axis_count(c: FoliationCertificate) -> CheckReport:
    rhs = sum(c.v_plus.values()) - sum(c.v_minus.values())
    return CheckReport("axis_count", (IdentityCheck("b = V+ - V-", c.braid_index, rhs),))


def check_tile_vertex(c: FoliationCertificate) -> CheckReport:
    positive = sum((alpha + beta) * n for (alpha, beta), n in c.v_plus.items())
    negative = sum(beta * n for beta, n in c.v_minus.items())
    return CheckReport(
        "tile_vertex",
        (
            IdentityCheck("positive", 2 * (c.r_aa + c.r_ab + c.r_bb), positive),
            IdentityCheck("negative", c.r_ab + 2 * c.r_bb, negative),
        ),
    )


def check_edge_count(c: FoliationCertificate) -> CheckReport:
    # negative vertices have alpha = 0, so only V+ contributes
    rhs = sum(alpha * n for (alpha, _), n in c.v_plus.items())
    return CheckReport("edge_count", (IdentityCheck("a-arcs", 2 * c.r_aa + c.r_ab, rhs),))


def check_bm_reduced(c: FoliationCertificate) -> bool:
    return all(c.v(alpha, beta) == 0 for alpha, beta in ((1, 0), (0, 2), (0, 3), (1, 1)))


def check_main_inequality(c: FoliationCertificate) -> CheckReport:
    """2R_aa + R_ab <= -2chi + 2b, meaningful only on reduced certificates."""
    identity = IdentityCheck(
        "tile budget", 2 * c.r_aa + c.r_ab, -2 * c.chi + 2 * c.braid_index, "<="
    )
    if not check_bm_reduced(c):
        return CheckReport(
            "main_inequality",
            (identity,),
            skipped_reason="certificate has V(1,0), V(0,2), V(0,3) or V(1,1) vertices",
        )
    return CheckReport("main_inequality", (identity,))


def check_all(c: FoliationCertificate) -> List[CheckReport]:
    return [
        check_euler_equality(c),
        check_axis_count(c),
        check_tile_vertex(c),
        check_edge_count(c),
        check_main_inequality(c),
    ]


def _require_strands(n: int):
    if n < 2:
        raise BoundsDomainError(f"Tile crossing bounds need n >= 2, got {n}")


def crossing_bound_from_tiles(n: int, r_aa: Number, r_ab: Number) -> Fraction:
    """
    Crossings of the braid read off a tiled surface.

    Without ab-tiles: R_aa (n=2), 5/3 R_aa (n=3), (2n-5) R_aa (n>=4).
    With ab-tiles: (2n-5) R_aa + (n-3) R_ab; for n=2 the crude R_aa + R_ab.
    """
    _require_strands(n)
    r_aa, r_ab = Fraction(r_aa), Fraction(r_ab)
    if r_ab == 0:
        if n == 2:
            return r_aa
        if n == 3:
            return Fraction(5, 3) * r_aa
        return (2 * n - 5) * r_aa
    if n == 2:
        return r_aa + r_ab
    return (2 * n - 5) * r_aa + (n - 3) * r_ab


def crude_crossing_bound(n: int, r_aa: Number, r_ab: Number) -> Fraction:
    """Every aa-tile word has at most 2n-3 letters, every ab-tile word at most n-1."""
    _require_strands(n)
    return (2 * n - 3) * Fraction(r_aa) + (n - 1) * Fraction(r_ab)


def cyclic_class_bound(n: int, r_aa: Number, r_prime: Number) -> Fraction:
    """(3n-4)/n R' + (2n-5)(R_aa - R') for R' aa-tiles in the short cyclic class."""
    _require_strands(n)
    r_aa, r_prime = Fraction(r_aa), Fraction(r_prime)
    if not 0 <= r_prime <= r_aa:
        raise BoundsDomainError(f"Need 0 <= R' <= R_aa, got R'={r_prime}, R_aa={r_aa}")
    return Fraction(3 * n - 4, n) * r_prime + (2 * n - 5) * (r_aa - r_prime)


def theorem_upper_from_certificate(c: FoliationCertificate) -> Fraction:
    """
    Largest crossing bound the tile budget 2R_aa + R_ab <= -2chi + 2b allows.

    An aa-tile spends two units of budget for at most 2n-5 crossings, an ab-tile one
    unit for at most n-3, so the maximum puts the whole budget into aa-tiles.
    """
    budget = Fraction(-2 * c.chi + 2 * c.braid_index, 2)
    return crossing_bound_from_tiles(c.braid_index, budget, 0)


def bennequin_certificate(w: BraidWord) -> FoliationCertificate:
    """
    Certificate of the Seifert-algorithm surface of the closed braid.

    All tiles are aa-tiles, one per letter of the freely reduced word; strand i is
    a positive elliptic point of type (valence, 0).
    """
    w = free_reduce(w)
    v_plus = {}
    for valence in strand_valences(w):
        v_plus[(valence, 0)] = v_plus.get((valence, 0), 0) + 1
    return FoliationCertificate(
        braid_index=w.strands,
        chi=bennequin_chi(w),
        v_plus=v_plus,
        r_aa=len(w),
    )
