"""Surface invariants in Minkowski 4-space and marginally trapped meridian surfaces."""

from ._core import (
    AdmissibilityError,
    DomainError,
    IoError,
    MeridianError,
    NotSpacelike,
    ParamError,
    SurfacePatch,
    UsageError,
    cone_family,
    inner,
    mt_family,
    parabolic,
    run_suite,
    section_curvature,
    verify_marginally_trapped,
)

__all__ = [
    "AdmissibilityError",
    "DomainError",
    "IoError",
    "MeridianError",
    "NotSpacelike",
    "ParamError",
    "SurfacePatch",
    "UsageError",
    "cone_family",
    "inner",
    "mt_family",
    "parabolic",
    "run_suite",
    "section_curvature",
    "verify_marginally_trapped",
]
