"""Virtual knot invariants from Gauss codes.

Computes the affine index polynomial and Vassiliev invariants of virtual
knots and links, rewrites diagrams by Reidemeister moves to verify
invariance executably, and explores the finite flat biquandle algebra
behind the arc-labeling rule.
"""

from .errors import ParseError, StaleSiteError, UncolorableError, ValidationError
from .gauss_code import (
    FlatCode,
    FlatPassage,
    Passage,
    SignedGaussCode,
    all_flat_knot_codes,
    canonicalize,
    flat_role,
    forget,
    parse_flat,
    parse_signed,
    resolutions,
    serialize,
    validate,
)
from .diagram_ops import (
    mirror,
    reverse,
    smooth_oriented,
    smooth_zero_weight,
    switch_crossings,
    virtualize,
    writhe,
)
from .coloring import (
    ChengColoring,
    ColorabilityReport,
    colorability,
    lambda_coloring,
    propagate_coloring,
    serialize_coloring,
    verify_coloring,
)
from .laurent import LaurentPolynomial
from .invariant import (
    CrossingWeight,
    FlatCertificate,
    SingularCode,
    SymbolicWeight,
    WeightTable,
    affine_index_polynomial,
    crossing_weights,
    flat_nontriviality_certificate,
    graph_polynomial,
    link_pair_polynomial,
    make_singular,
    skein_difference,
    symbolic_link_weights,
    vassiliev_invariant,
    vassiliev_of_polynomial,
)
from .moves import (
    InvarianceReport,
    MoveSite,
    WalkResult,
    apply_move,
    find_move_sites,
    flat_random_walk,
    invariance_report,
    random_walk,
)
from .biquandle import (
    AffineParams,
    AxiomReport,
    FiniteFlatBiquandle,
    basic_preflat,
    check_axioms,
    check_coloring,
    closed_form_affine,
    doodle_invariant_sum,
    doodle_pre_invariant,
    enumerate_colorings,
    enumerate_colorings_fast,
    make_affine,
    search_affine,
    table_from_text,
    table_to_text,
    transport_coloring,
    unary_affine_params,
    weight_condition,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
