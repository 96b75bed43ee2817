"""Fixed point data of circle actions: exact verification and enumeration.

The package models the combinatorial shadow of a circle action on a compact
almost complex manifold with isolated fixed points — for each fixed point the
multiset of nonzero integer rotation weights — and provides:

* exact Laurent-polynomial / rational-function arithmetic (`poly`),
* the data model with generators and constructions (`fpdata`),
* identity and bound checks, centered on certifying that every localization
  sum is a constant integer (`verify`),
* constraint-pruned exhaustive enumeration of admissible data (`enumeration`),
* a command line front end (`cli`).
"""

from .fpdata import (
    DataError,
    DimensionMismatchError,
    DuplicateExponentError,
    FixedPoint,
    FixedPointDatum,
    NVector,
    NoPositiveWeightError,
    WrongArityError,
    ZeroWeightError,
    canonicalize,
    datum_from_document,
    disjoint_union,
    gen_cpn,
    gen_s2,
    gen_s6,
    is_effective,
    n_vector,
    new_datum,
    product,
    sign_flip,
    smallest_positive_weight,
    to_document,
    weight_types,
)
from .enumeration import (
    EnumerationQuery,
    EnumerationReport,
    ResourceLimitError,
    bound_table,
    brute_force_admissible,
    candidate_space_size,
    classify_three_points,
    classify_two_points,
    enumerate_admissible,
    experiment_open_questions,
    point_alphabet,
)
from .poly import LaurentPolynomial, RationalFunction
from .verify import (
    ChiVector,
    CheckReport,
    DimensionTooLargeError,
    NotConstantError,
    NotSingleTypeError,
    chi_vector,
    check_crowded,
    check_dim6_crowding,
    check_kosniowski,
    check_middle_range,
    check_quarter_band,
    check_rigidity,
    check_single_weight_structure,
    check_smallest_weight_pairing,
    check_theorem_scope,
    check_weight_pairing,
    kosniowski_bound,
    restrict_to_divisor,
    run_all_checks,
    theorem_scope,
)

__version__ = "0.1.0"

__all__ = [
    "ChiVector",
    "CheckReport",
    "DataError",
    "DimensionMismatchError",
    "DimensionTooLargeError",
    "DuplicateExponentError",
    "EnumerationQuery",
    "EnumerationReport",
    "FixedPoint",
    "FixedPointDatum",
    "LaurentPolynomial",
    "NVector",
    "NoPositiveWeightError",
    "NotConstantError",
    "NotSingleTypeError",
    "RationalFunction",
    "ResourceLimitError",
    "WrongArityError",
    "ZeroWeightError",
    "bound_table",
    "brute_force_admissible",
    "candidate_space_size",
    "canonicalize",
    "chi_vector",
    "check_crowded",
    "check_dim6_crowding",
    "check_kosniowski",
    "check_middle_range",
    "check_quarter_band",
    "check_rigidity",
    "check_single_weight_structure",
    "check_smallest_weight_pairing",
    "check_theorem_scope",
    "check_weight_pairing",
    "classify_three_points",
    "classify_two_points",
    "datum_from_document",
    "disjoint_union",
    "enumerate_admissible",
    "experiment_open_questions",
    "gen_cpn",
    "gen_s2",
    "gen_s6",
    "is_effective",
    "kosniowski_bound",
    "n_vector",
    "new_datum",
    "point_alphabet",
    "product",
    "restrict_to_divisor",
    "run_all_checks",
    "sign_flip",
    "smallest_positive_weight",
    "theorem_scope",
    "to_document",
    "weight_types",
]
