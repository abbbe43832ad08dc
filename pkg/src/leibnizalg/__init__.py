"""Exact structure theory of finite-dimensional right Leibniz algebras.

Algebras are given by rational structure constants; all computations run in
exact arithmetic, so every reported dimension, scalar, and decomposition is
an exact statement about the input, not an approximation.
"""

from .core import (
    Algebra,
    BilinearForm,
    InvalidAlgebraError,
    LeviDatum,
    LeviError,
    Quotient,
    SchemaError,
    SimplicityCertificate,
    StructureError,
    SummandSplit,
    algebra_from_json_dict,
    algebra_to_json_dict,
    centroid,
    derived_series,
    derived_subalgebra,
    direct_sum,
    direct_sum_many,
    dump_algebra_json,
    ensure_leibniz,
    ideal_closure,
    is_semisimple,
    is_simple_certified,
    is_solvable,
    killing_form,
    leibniz_check,
    load_algebra_json,
    quotient_algebra,
    simple_summands,
    solvable_radical,
    squares_ideal,
    validate_levi,
)
from .derivations import (
    DerivationBasis,
    DerivationSplit,
    EndoBlockReport,
    GradedParts,
    LoweringBlockNonZero,
    NoInnerMatch,
    OuterReport,
    RaisingReport,
    SplitSurvey,
    check_module_endomorphism,
    derivation_algebra,
    graded_parts,
    ideal_endo_blocks,
    inner_derivation_span,
    is_derivation,
    outer_candidates,
    outer_report,
    raising_map_report,
    scalar_of,
    split_all,
    split_derivation,
)
from .exactlin import (
    EigenDecomposition,
    Matrix,
    Rational,
    Subspace,
    charpoly,
    format_rational,
    kernel_of_constraints,
    nullspace,
    parse_rational,
    rational_eigen,
    rref,
    solve,
)
from .sl2 import (
    HighestWeightVector,
    ModuleDecomposition,
    ModuleError,
    PairStructureReport,
    Sl2Triple,
    WeightSpaces,
    check_sl2_triple,
    highest_weight_vectors,
    irreducible_decomposition_sl2,
    pair_structure_report,
    weight_decomposition,
)

__all__ = [
    "Algebra",
    "BilinearForm",
    "DerivationBasis",
    "DerivationSplit",
    "EigenDecomposition",
    "EndoBlockReport",
    "GradedParts",
    "HighestWeightVector",
    "InvalidAlgebraError",
    "LeviDatum",
    "LeviError",
    "LoweringBlockNonZero",
    "Matrix",
    "ModuleDecomposition",
    "ModuleError",
    "NoInnerMatch",
    "OuterReport",
    "PairStructureReport",
    "Quotient",
    "RaisingReport",
    "Rational",
    "SchemaError",
    "SimplicityCertificate",
    "Sl2Triple",
    "SplitSurvey",
    "StructureError",
    "Subspace",
    "SummandSplit",
    "WeightSpaces",
    "algebra_from_json_dict",
    "algebra_to_json_dict",
    "centroid",
    "charpoly",
    "check_module_endomorphism",
    "check_sl2_triple",
    "derivation_algebra",
    "derived_series",
    "derived_subalgebra",
    "direct_sum",
    "direct_sum_many",
    "dump_algebra_json",
    "ensure_leibniz",
    "format_rational",
    "graded_parts",
    "highest_weight_vectors",
    "ideal_closure",
    "ideal_endo_blocks",
    "inner_derivation_span",
    "irreducible_decomposition_sl2",
    "is_derivation",
    "is_semisimple",
    "is_simple_certified",
    "is_solvable",
    "kernel_of_constraints",
    "killing_form",
    "leibniz_check",
    "load_algebra_json",
    "nullspace",
    "outer_candidates",
    "outer_report",
    "pair_structure_report",
    "parse_rational",
    "quotient_algebra",
    "raising_map_report",
    "rational_eigen",
    "rref",
    "scalar_of",
    "simple_summands",
    "solvable_radical",
    "solve",
    "split_all",
    "split_derivation",
    "squares_ideal",
    "validate_levi",
    "weight_decomposition",
]
