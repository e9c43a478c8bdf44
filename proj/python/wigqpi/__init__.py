"""Wigner quasiprobability integrals over disks and circles."""

from ._wigqpi import (
    AmbiguousConvention,
    BoundViolation,
    ConventionUnresolved,
    DimensionMismatch,
    DomainError,
    ToleranceNotReached,
    bounds,
    circle_eigenvalue,
    conventions_hash,
    conventions_report,
    disk_eigenvalue,
    fock_wigner,
    laguerre,
    meixner,
    qpi,
    qpi_oracle_disk,
    run_cli,
    scale_check,
    scaled_spectrum,
    spectrum,
    wigner_value,
)

__all__ = [
    "AmbiguousConvention",
    "BoundViolation",
    "ConventionUnresolved",
    "DimensionMismatch",
    "DomainError",
    "ToleranceNotReached",
    "bounds",
    "circle_eigenvalue",
    "conventions_hash",
    "conventions_report",
    "disk_eigenvalue",
    "fock_wigner",
    "laguerre",
    "meixner",
    "qpi",
    "qpi_oracle_disk",
    "run_cli",
    "scale_check",
    "scaled_spectrum",
    "spectrum",
    "wigner_value",
]
