from braid_bounds.bounds.formulas import (
    BoundReport,
    BoundReportPayload,
    BoundsDomainError,
    CompositeBound,
    RationalPayload,
    asymptotic_lb,
    braided_cable_lb,
    braided_cable_preserves_crossings,
    cabling_conjecture_holds,
    composite_lb,
    crossing_budget,
    f,
    genus_bounds,
    regularity,
    satellite_combined_lb,
    satellite_lb,
    theorem_bounds,
)

__all__ = [
    "BoundReport",
    "BoundReportPayload",
    "BoundsDomainError",
    "CompositeBound",
    "RationalPayload",
    "asymptotic_lb",
    "braided_cable_lb",
    "braided_cable_preserves_crossings",
    "cabling_conjecture_holds",
    "composite_lb",
    "crossing_budget",
    "f",
    "genus_bounds",
    "regularity",
    "satellite_combined_lb",
    "satellite_lb",
    "theorem_bounds",
]
