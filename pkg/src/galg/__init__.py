"""Computer algebra for finitely presented connected graded algebras.

The package computes, exactly over Q or GF(p), the standard battery of
graded and ungraded invariants inside a degree truncation window: Hilbert
functions, characters and their tangent data, tangent-dimension radicals,
normal elements, centers, bracket decompositions, and graded isomorphism
verdicts for skew polynomial quotients.
"""

from .brackets import BracketDecomposition, bracket_decompose, bracket_expand, leading_part_index
from .center import cancel, degree_one_center_check
from .errors import GalgError
from .fields import GF, QQ, Field, PrimeField, Rationals
from .freealg import GeneratorSet, NcPoly, Word, deglex_compare, generators
from .groebner import (
    DegreeSlicedSubspace,
    ReductionSystem,
    augmentation_subspace,
    build,
    component_slice,
    full_subspace,
    ideal_closure,
    ideal_product,
)
from .invariants import (
    Character,
    GradedFingerprint,
    TangentProfile,
    central_elements,
    character_check,
    character_ideal,
    characters_enumerate,
    cotangent_dimension,
    graded_fingerprint,
    is_normal_up_to,
    normal_lines_degree_one,
    tangent_ideal,
    tangent_ideal_for_profile,
    tangent_profile,
    unique_codim1_of_tangent_d,
)
from .iso import (
    ElementaryChange,
    IsoVerdict,
    apply_elementary_change,
    brute_force_graded_iso,
    perm_equiv,
    perm_equiv_all,
    skew_quotient_iso,
    verify_witness,
)
from .linalg import Matrix, Subspace, intersect_many
from .presentations import (
    Presentation,
    SkewMatrix,
    adjoin_central,
    eliminate_degree_one,
    free_presentation,
    quotient,
    skew_ring,
    tensor,
)
from .textio import emit, format_poly, parse_poly, parse_presentation, print_presentation

__version__ = "0.1.0"

__all__ = [
    "BracketDecomposition",
    "Character",
    "DegreeSlicedSubspace",
    "ElementaryChange",
    "Field",
    "GF",
    "GalgError",
    "GeneratorSet",
    "GradedFingerprint",
    "IsoVerdict",
    "Matrix",
    "NcPoly",
    "Presentation",
    "PrimeField",
    "QQ",
    "Rationals",
    "ReductionSystem",
    "SkewMatrix",
    "Subspace",
    "TangentProfile",
    "Word",
    "adjoin_central",
    "apply_elementary_change",
    "augmentation_subspace",
    "bracket_decompose",
    "bracket_expand",
    "brute_force_graded_iso",
    "build",
    "cancel",
    "central_elements",
    "character_check",
    "character_ideal",
    "characters_enumerate",
    "component_slice",
    "cotangent_dimension",
    "deglex_compare",
    "degree_one_center_check",
    "eliminate_degree_one",
    "emit",
    "format_poly",
    "free_presentation",
    "full_subspace",
    "generators",
    "graded_fingerprint",
    "ideal_closure",
    "ideal_product",
    "intersect_many",
    "is_normal_up_to",
    "leading_part_index",
    "normal_lines_degree_one",
    "parse_poly",
    "parse_presentation",
    "perm_equiv",
    "perm_equiv_all",
    "print_presentation",
    "quotient",
    "skew_quotient_iso",
    "skew_ring",
    "tangent_ideal",
    "tangent_ideal_for_profile",
    "tangent_profile",
    "tensor",
    "unique_codim1_of_tangent_d",
    "verify_witness",
]
