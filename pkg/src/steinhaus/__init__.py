"""Binary Steinhaus triangles: weights, symmetry orbits, extremal families,
and exhaustive verification of their closed-form descriptions."""

from .bitseq import MAX_LEN, BitSeq, row_entry
from .families import (
    FamilyName,
    FamilyRangeError,
    LevelPrediction,
    NoClosedFormError,
    UncoveredLevelError,
    all_families,
    family_seq,
    predicted_level,
    predicted_triangle_weight,
)
from .spectrum import (
    CeilingExceeded,
    LevelSet,
    WeightSlice,
    WeightSpectrum,
    enumeration_ceiling,
    find_weight,
    full_spectrum,
    level_sets_high,
    level_sets_low,
    members_at_weights,
    symmetry_reduced_spectrum,
)
from .symmetry import Orbit, canonical, invert_i, orbit, rot_l, rot_r
from .triangle import Triangle, build, render, s3, subtriangle_generator, triangle_weight
from .verify import (
    CheckRecord,
    VerificationReport,
    Witness,
    check_conjecture,
    verify_all,
    verify_ek,
    verify_family_weights,
    verify_level,
    verify_s3,
    verify_small_n,
)

__all__ = [
    "MAX_LEN",
    "BitSeq",
    "row_entry",
    "Triangle",
    "build",
    "triangle_weight",
    "subtriangle_generator",
    "s3",
    "render",
    "Orbit",
    "rot_r",
    "rot_l",
    "invert_i",
    "orbit",
    "canonical",
    "FamilyName",
    "FamilyRangeError",
    "NoClosedFormError",
    "UncoveredLevelError",
    "LevelPrediction",
    "family_seq",
    "predicted_triangle_weight",
    "predicted_level",
    "all_families",
    "WeightSpectrum",
    "LevelSet",
    "WeightSlice",
    "CeilingExceeded",
    "enumeration_ceiling",
    "full_spectrum",
    "symmetry_reduced_spectrum",
    "level_sets_low",
    "level_sets_high",
    "find_weight",
    "members_at_weights",
    "CheckRecord",
    "VerificationReport",
    "Witness",
    "verify_level",
    "verify_small_n",
    "verify_ek",
    "verify_s3",
    "verify_family_weights",
    "check_conjecture",
    "verify_all",
]
