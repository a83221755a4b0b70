"""Complementary code sets (GCS, MOCS, CCC, ZCCS) from extended Boolean functions."""

__version__ = "0.1.0"

from .constructions import (
    CccParams,
    GcsParams,
    MocsParams,
    ValidationError,
    ZccsParams,
    build,
    build_ccc,
    build_gcs,
    build_mocs,
    build_zccs,
    mocs_length,
    validate,
)
from .correlation import SequenceFamily, SequenceSet, accf, measure_zcz, profile, set_ccf
from .cyclotomic import RootOfUnitySum, is_zero
from .enumeration import enumerate_parameters
from .ebf import ExtendedBooleanFunction, Monomial, QarySequence, add_linear, evaluate, expand, to_digits
from .verification import check_bounds, verify_claim, verify_gcs, verify_mocs, verify_zccs

__all__ = [
    "CccParams", "GcsParams", "MocsParams", "ZccsParams", "ValidationError",
    "build", "build_ccc", "build_gcs", "build_mocs", "build_zccs", "mocs_length", "validate",
    "SequenceFamily", "SequenceSet", "accf", "measure_zcz", "profile", "set_ccf",
    "RootOfUnitySum", "is_zero",
    "ExtendedBooleanFunction", "Monomial", "QarySequence", "add_linear", "evaluate", "expand", "to_digits",
    "enumerate_parameters",
    "check_bounds", "verify_claim", "verify_gcs", "verify_mocs", "verify_zccs",
]
