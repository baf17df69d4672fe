from braid_bounds.diagram.closure import (
    ClosedBraidDiagram,
    SeifertData,
    bennequin_chi,
    closure,
    seifert,
    strand_valences,
)

__all__ = [
    "ClosedBraidDiagram",
    "SeifertData",
    "bennequin_chi",
    "closure",
    "seifert",
    "strand_valences",
]
