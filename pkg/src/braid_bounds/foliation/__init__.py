from braid_bounds.foliation.certificate import (
    CertificateError,
    CertificatePayload,
    FoliationCertificate,
)
from braid_bounds.foliation.checks import (
    CheckReport,
    CheckStatus,
    IdentityCheck,
    bennequin_certificate,
    check_all,
    check_axis_count,
    check_bm_reduced,
    check_edge_count,
    check_euler_equality,
    check_main_inequality,
    check_tile_vertex,
    crossing_bound_from_tiles,
    crude_crossing_bound,
    cyclic_class_bound,
    theorem_upper_from_certificate,
)

__all__ = [
    "CertificateError",
    "CertificatePayload",
    "CheckReport",
    "CheckStatus",
    "FoliationCertificate",
    "IdentityCheck",
    "bennequin_certificate",
    "check_all",
    "check_axis_count",
    "check_bm_reduced",
    "check_edge_count",
    "check_euler_equality",
    "check_main_inequality",
    "check_tile_vertex",
    "crossing_bound_from_tiles",
    "crude_crossing_bound",
    "cyclic_class_bound",
    "theorem_upper_from_certificate",
]
