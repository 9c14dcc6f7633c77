"""Exact decision procedures for Pin structures.

Decides existence of, counts, and enumerates Pin- and Pin+ structures on
4-dimensional Lefschetz fibrations over the disk (with derived criteria
for fibrations over the sphere and for closed 3-manifolds), by reducing
everything to quadratic-enhancement constraints and affine linear systems
over Z2 and Z4.
"""

from .charclasses import (
    EmbeddedSurfaceData,
    ObstructionSummary,
    eval_w1sq,
    eval_w2,
    pin_obstruction_summary,
)
from .errors import (
    InputError,
    InvalidDecomposition,
    InvariantViolation,
    ParseError,
    PinlefError,
)
from .finite_linalg import (
    AffineSolutionGF2,
    annihilator_gf2,
    howell_z4,
    in_row_module_z4,
    mat_gf2,
    mat_z4,
    rref_gf2,
    solve_affine_gf2,
    vec_gf2,
)
from .lefschetz import (
    DecisionReport,
    LefschetzFibration,
    ObstructionWitness,
    SphereVerdicts,
    brute_force_pin_minus,
    brute_force_pin_plus,
    decide_pin_minus,
    decide_pin_over_s2,
    decide_pin_plus,
    fibration_h1_annihilator,
    pin_minus_witness_search,
)
from .surfaces import (
    EnhancementMinus,
    EnhancementPlus,
    HomologyClass,
    HomologyPresentation,
    SurfaceModel,
    act_h1,
    base_enhancement_minus,
    base_enhancement_plus,
    enumerate_enhancements,
    eval_qminus,
    eval_qplus,
    homology_presentation,
    non_orientable_surface,
    orientable_surface,
    pin_plus_exists_surface,
    z2_class,
    z4_class,
    z4_classes_equal,
)
from .threefolds import (
    HandlebodyDecomposition3,
    brute_force_pin_minus_3mfd,
    brute_force_pin_plus_3mfd,
    construct_pin_minus_3mfd,
    decide_pin_plus_3mfd,
    solve_pin_minus_3mfd,
)

__version__ = "0.1.0"

__all__ = [
    "AffineSolutionGF2",
    "DecisionReport",
    "EmbeddedSurfaceData",
    "EnhancementMinus",
    "EnhancementPlus",
    "HandlebodyDecomposition3",
    "HomologyClass",
    "HomologyPresentation",
    "InputError",
    "InvalidDecomposition",
    "InvariantViolation",
    "LefschetzFibration",
    "ObstructionSummary",
    "ObstructionWitness",
    "ParseError",
    "PinlefError",
    "SphereVerdicts",
    "SurfaceModel",
    "act_h1",
    "annihilator_gf2",
    "base_enhancement_minus",
    "base_enhancement_plus",
    "brute_force_pin_minus",
    "brute_force_pin_minus_3mfd",
    "brute_force_pin_plus",
    "brute_force_pin_plus_3mfd",
    "construct_pin_minus_3mfd",
    "decide_pin_minus",
    "decide_pin_over_s2",
    "decide_pin_plus",
    "decide_pin_plus_3mfd",
    "enumerate_enhancements",
    "eval_qminus",
    "eval_qplus",
    "eval_w1sq",
    "eval_w2",
    "fibration_h1_annihilator",
    "homology_presentation",
    "howell_z4",
    "in_row_module_z4",
    "mat_gf2",
    "mat_z4",
    "non_orientable_surface",
    "orientable_surface",
    "pin_minus_witness_search",
    "pin_obstruction_summary",
    "pin_plus_exists_surface",
    "rref_gf2",
    "solve_affine_gf2",
    "solve_pin_minus_3mfd",
    "vec_gf2",
    "z2_class",
    "z4_class",
    "z4_classes_equal",
]
